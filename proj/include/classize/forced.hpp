#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "classize/errors.hpp"
#include "classize/formula.hpp"
#include "classize/periodic_set.hpp"

namespace classize {

/// Verdict for a ground sentence across every model built from a
/// non-principal ultrafilter: the index set {j : truncation at j
/// satisfies the sentence} decides it.  A cofinite index set forces
/// truth, a finite one forces falsity; anything else depends on the
/// ultrafilter and the canonical index pattern is reported.
struct ForcedVerdict {
  enum class Kind { ForcedTrue, ForcedFalse, Contingent };
  Kind kind;
  PeriodicSet pattern;  // the index set in canonical form

  std::string str() const {
    switch (kind) {
      case Kind::ForcedTrue: return "forced true";
      case Kind::ForcedFalse: return "forced false";
      default: return "contingent " + pattern.render();
    }
  }
};

namespace detail {

enum class SignRel { Negative, Zero, Positive };

inline bool holds(SignRel rel, std::int64_t g) {
  switch (rel) {
    case SignRel::Negative: return g < 0;
    case SignRel::Zero: return g == 0;
    default: return g > 0;
  }
}

/// {j : sum of coeff * |set ∩ [0..j]| + offset REL 0}, exactly.
/// Counting functions of periodic sets drift linearly per period, so
/// the condition is either eventually periodic (zero drift) or
/// eventually constant (nonzero drift); both cases reduce to a finite
/// scan plus a closed tail.
inline PeriodicSet sign_index_set(
    const std::vector<std::pair<PeriodicSet, std::int64_t>>& parts,
    std::int64_t offset, SignRel rel) {
  std::int64_t period = 1;
  Nat stable_from = 0;
  std::int64_t drift = 0;
  for (const auto& [s, coeff] : parts) {
    period = std::lcm(period, s.modulus());
    for (Nat a : s.added()) stable_from = std::max(stable_from, a + 1);
    for (Nat b : s.removed()) stable_from = std::max(stable_from, b + 1);
  }
  for (const auto& [s, coeff] : parts)
    drift += coeff * s.class_count() * (period / s.modulus());

  auto scan = [&](Nat upto) {  // truth values for j in [0, upto)
    std::vector<bool> truth(upto);
    std::int64_t g = offset;
    for (Nat j = 0; j < upto; ++j) {
      for (const auto& [s, coeff] : parts)
        if (s.member(j)) g += coeff;
      truth[j] = holds(rel, g);
    }
    return truth;
  };

  if (drift == 0) {
    // exactly periodic past stable_from
    std::vector<bool> truth = scan(stable_from + period);
    std::vector<Nat> residues, added, removed;
    std::vector<bool> window(period);
    for (Nat j = stable_from; j < stable_from + period; ++j)
      window[j % period] = truth[j];
    for (Nat r = 0; r < period; ++r)
      if (window[r]) residues.push_back(r);
    for (Nat j = 0; j < stable_from; ++j) {
      bool in_c = window[j % period];
      if (truth[j] && !in_c) added.push_back(j);
      if (!truth[j] && in_c) removed.push_back(j);
    }
    return PeriodicSet::normalized(period, std::move(residues),
                                   std::move(added), std::move(removed));
  }

  // nonzero drift: |g| eventually outruns the window spread and the
  // condition settles to a constant
  std::int64_t max_abs = 0;
  {
    std::int64_t g = offset;
    for (Nat j = 0; j < stable_from + period; ++j) {
      for (const auto& [s, coeff] : parts)
        if (s.member(j)) g += coeff;
      if (j >= stable_from)
        max_abs = std::max<std::int64_t>(max_abs, g < 0 ? -g : g);
    }
  }
  std::int64_t periods = max_abs / (drift < 0 ? -drift : drift) + 2;
  Nat bound = stable_from + period * periods;
  bool tail = rel == SignRel::Zero ? false
              : rel == SignRel::Positive ? drift > 0
                                         : drift < 0;
  std::vector<bool> truth = scan(bound);
  std::vector<Nat> exceptional;
  for (Nat j = 0; j < bound; ++j)
    if (truth[j] != tail) exceptional.push_back(j);
  if (tail)
    return PeriodicSet::normalized(1, {0}, {}, std::move(exceptional));
  return PeriodicSet::finite(std::move(exceptional));
}

inline PeriodicSet count_cmp(const PeriodicSet& a, const PeriodicSet& b,
                             SignRel rel) {
  return sign_index_set({{a, 1}, {b, -1}}, 0, rel);
}

inline PeriodicSet index_set(const FormulaPtr& f) {
  using K = Formula::Kind;
  switch (f->kind) {
    case K::Not: return index_set(f->f0).complement();
    case K::And: return set_intersect(index_set(f->f0), index_set(f->f1));
    case K::Or: return set_union(index_set(f->f0), index_set(f->f1));
    case K::Implies:
      return set_union(index_set(f->f0).complement(), index_set(f->f1));
    case K::Iff: {
      PeriodicSet s0 = index_set(f->f0), s1 = index_set(f->f1);
      return set_union(set_intersect(s0, s1),
                       set_intersect(s0.complement(), s1.complement()));
    }
    case K::Forall:
    case K::Exists:
      throw eval_error("quantifier outside the forced fragment");
    default: break;
  }
  PeriodicSet a = ground_term_set(f->t0);
  switch (f->kind) {
    case K::Unit:
    case K::Atom:
      return sign_index_set({{a, 1}}, -1, SignRel::Zero);
    case K::Less:
      return count_cmp(a, ground_term_set(f->t1), SignRel::Negative);
    case K::SameSize:
      return count_cmp(a, ground_term_set(f->t1), SignRel::Zero);
    case K::Equal: {
      PeriodicSet b = ground_term_set(f->t1);
      PeriodicSet sym =
          set_union(set_difference(a, b), set_difference(b, a));
      return sign_index_set({{sym, 1}}, 0, SignRel::Zero);
    }
    case K::Subset: {
      PeriodicSet b = ground_term_set(f->t1);
      PeriodicSet missing = set_difference(a, b);   // must stay out of range
      PeriodicSet witness = set_difference(b, a);   // must have appeared
      return set_intersect(
          sign_index_set({{missing, 1}}, 0, SignRel::Zero),
          sign_index_set({{witness, 1}}, 0, SignRel::Positive));
    }
    default: {  // Sum
      PeriodicSet b = ground_term_set(f->t1);
      PeriodicSet c = ground_term_set(f->t2);
      return sign_index_set({{a, 1}, {b, 1}, {c, -1}}, 0, SignRel::Zero);
    }
  }
}

}  // namespace detail

/// The index set {j : members up to j satisfy the sentence}, exact.
inline PeriodicSet forced_index_set(const FormulaPtr& f) {
  if (has_quantifier(f))
    throw eval_error("quantifier outside the forced fragment");
  return detail::index_set(f);
}

inline ForcedVerdict forced_in_ultrafilter_models(const FormulaPtr& f) {
  PeriodicSet s = forced_index_set(f);
  if (s.is_finite()) return {ForcedVerdict::Kind::ForcedFalse, s};
  if (s.complement().is_finite()) return {ForcedVerdict::Kind::ForcedTrue, s};
  return {ForcedVerdict::Kind::Contingent, s};
}

}  // namespace classize
