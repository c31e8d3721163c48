#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "classize/errors.hpp"
#include "classize/formula.hpp"
#include "classize/schemas.hpp"

namespace classize {

using Mask = std::uint64_t;

/// The standard finite interpretation with basis {0, ..., n-1}: the
/// domain is the full power set, addressed as n-wide bit masks; the
/// order is by cardinality, SUM is cardinality addition, UNIT and ATOM
/// are the singletons.  Literal set constants are truncated to members
/// below n.
struct EvalOptions {
  bool use_fast_paths = true;
  std::int64_t budget = 100'000'000;  // atomic evaluations
};

class FiniteModel {
 public:
  explicit FiniteModel(int basis_size) : n_(basis_size) {
    if (basis_size < 1) throw domain_error("basis size must be positive");
    if (basis_size > 24)
      throw domain_error("basis size too large for mask evaluation");
  }

  int basis_size() const { return n_; }
  Mask universe() const { return (1ull << n_) - 1; }

  Mask truncate(const PeriodicSet& s) const {
    Mask m = 0;
    for (int k = 0; k < n_; ++k)
      if (s.member(k)) m |= (1ull << k);
    return m;
  }

  using Env = std::map<std::string, Mask>;

  /// Truth of a formula under an environment for its free variables.
  bool evaluate(const FormulaPtr& f, const Env& env = Env(),
                EvalOptions opts = EvalOptions()) const {
    std::int64_t budget = opts.budget;
    if (opts.use_fast_paths) {
      if (auto fast = fast_verdict(f)) return *fast;
    }
    Env e = env;
    return eval(f, e, budget);
  }

  /// n ≡ m (mod k) answers the divisibility sentences directly.
  static bool mod_truth_fast(int basis, int k, int m) {
    if (k < 1 || m < 0 || m >= k) throw domain_error("mod needs 0 <= m < k");
    return basis % k == m;
  }

 private:
  Mask eval_term(const TermPtr& t, const Env& env) const {
    switch (t->kind) {
      case Term::Kind::Var: {
        auto it = env.find(t->var);
        if (it == env.end())
          throw eval_error("unbound variable '" + t->var + "'");
        return it->second;
      }
      case Term::Kind::Zero: return 0;
      case Term::Kind::Universe: return universe();
      case Term::Kind::Named: return truncate(t->named);
      case Term::Kind::Union:
        return eval_term(t->lhs, env) | eval_term(t->rhs, env);
      case Term::Kind::Intersect:
        return eval_term(t->lhs, env) & eval_term(t->rhs, env);
      default:
        return eval_term(t->lhs, env) & ~eval_term(t->rhs, env);
    }
  }

  bool eval_atom(const FormulaPtr& f, const Env& env,
                 std::int64_t& budget) const {
    if (--budget < 0) throw budget_exceeded("evaluation budget exhausted");
    using K = Formula::Kind;
    Mask a = eval_term(f->t0, env);
    switch (f->kind) {
      case K::Unit:
      case K::Atom: return std::popcount(a) == 1;
      case K::Subset: {
        Mask b = eval_term(f->t1, env);
        return (a & b) == a && a != b;
      }
      case K::Less: {
        Mask b = eval_term(f->t1, env);
        return std::popcount(a) < std::popcount(b);
      }
      case K::SameSize: {
        Mask b = eval_term(f->t1, env);
        return std::popcount(a) == std::popcount(b);
      }
      case K::Equal: return a == eval_term(f->t1, env);
      default: {  // Sum: over a finite power set, |a| + |b| = |c|
        Mask b = eval_term(f->t1, env);
        Mask c = eval_term(f->t2, env);
        return std::popcount(a) + std::popcount(b) == std::popcount(c);
      }
    }
  }

  /// Conjuncts of a conjunction tree, flattened.
  static void flatten_and(const FormulaPtr& f, std::vector<FormulaPtr>& out) {
    if (f->kind == Formula::Kind::And) {
      flatten_and(f->f0, out);
      flatten_and(f->f1, out);
    } else {
      out.push_back(f);
    }
  }

  /// Existential block over a conjunction: bind one variable at a
  /// time and test every conjunct as soon as its variables are all
  /// bound.  This prunes the search hard for the divisibility
  /// sentences, whose naive cost is (2^n)^quantifiers.
  bool eval_exists_block(const FormulaPtr& f, Env& env,
                         std::int64_t& budget) const {
    std::vector<std::string> vars;
    FormulaPtr body = f;
    while (body->kind == Formula::Kind::Exists) {
      vars.push_back(body->var);
      body = body->f0;
    }
    std::vector<FormulaPtr> conjuncts;
    flatten_and(body, conjuncts);

    // level at which each conjunct becomes fully bound
    std::vector<std::vector<FormulaPtr>> ready(vars.size() + 1);
    for (const auto& c : conjuncts) {
      size_t level = 0;
      for (const auto& v : free_vars(c)) {
        bool found = false;
        // scan inside out so a shadowed name binds to the innermost
        for (size_t i = vars.size(); i-- > 0;)
          if (vars[i] == v) {
            level = std::max(level, i + 1);
            found = true;
            break;
          }
        if (!found && !env.count(v))
          throw eval_error("unbound variable '" + v + "'");
      }
      ready[level].push_back(c);
    }

    for (const auto& c : ready[0])
      if (!eval(c, env, budget)) return false;

    Mask top = universe();
    struct Restore {
      Env& env;
      std::vector<std::pair<std::string, std::optional<Mask>>> saved;
      ~Restore() {
        for (auto& [v, m] : saved) {
          if (m)
            env[v] = *m;
          else
            env.erase(v);
        }
      }
    } restore{env, {}};
    for (const auto& v : vars) {
      auto it = env.find(v);
      restore.saved.emplace_back(
          v, it == env.end() ? std::nullopt : std::optional<Mask>(it->second));
    }

    // depth-first over assignments
    std::vector<Mask> assignment(vars.size(), 0);
    size_t depth = 0;
    while (true) {
      if (assignment[depth] > top) {
        if (depth == 0) return false;
        assignment[depth] = 0;
        env.erase(vars[depth]);
        --depth;
        ++assignment[depth];
        continue;
      }
      env[vars[depth]] = assignment[depth];
      bool ok = true;
      for (const auto& c : ready[depth + 1])
        if (!eval(c, env, budget)) {
          ok = false;
          break;
        }
      if (!ok) {
        ++assignment[depth];
        continue;
      }
      if (depth + 1 == vars.size()) return true;
      ++depth;
      assignment[depth] = 0;
    }
  }

  bool eval(const FormulaPtr& f, Env& env, std::int64_t& budget) const {
    using K = Formula::Kind;
    switch (f->kind) {
      case K::Not: return !eval(f->f0, env, budget);
      case K::And: return eval(f->f0, env, budget) && eval(f->f1, env, budget);
      case K::Or: return eval(f->f0, env, budget) || eval(f->f1, env, budget);
      case K::Implies:
        return !eval(f->f0, env, budget) || eval(f->f1, env, budget);
      case K::Iff:
        return eval(f->f0, env, budget) == eval(f->f1, env, budget);
      case K::Exists: return eval_exists_block(f, env, budget);
      case K::Forall: {
        Mask top = universe();
        auto it = env.find(f->var);
        std::optional<Mask> saved =
            it == env.end() ? std::nullopt : std::optional<Mask>(it->second);
        bool result = true;
        for (Mask m = 0; m <= top; ++m) {
          env[f->var] = m;
          if (!eval(f->f0, env, budget)) {
            result = false;
            break;
          }
        }
        if (saved)
          env[f->var] = *saved;
        else
          env.erase(f->var);
        return result;
      }
      default: return eval_atom(f, env, budget);
    }
  }

  /// Arithmetic shortcuts for sentences recognized (up to bound
  /// variable names) as the generated counting/divisibility schemas.
  std::optional<bool> fast_verdict(const FormulaPtr& f) const {
    int quants = quantifier_count(f);
    if (quants == 0 || quants > 60) return std::nullopt;
    if (f->kind == Formula::Kind::Exists) {
      // MOD_k^m has k + m quantifiers with m < k
      for (int k = (quants + 2) / 2; k <= quants; ++k) {
        int m = quants - k;
        if (alpha_equal(f, mod_sentence(k, m)))
          return mod_truth_fast(n_, k, m);
      }
      if (alpha_equal(f, atleast(quants))) return n_ >= quants;
    }
    if (f->kind == Formula::Kind::Or) {
      // DIV_k has k^2 + k(k-1)/2 quantifiers in all
      for (int k = 2; k * k + k * (k - 1) / 2 <= quants; ++k)
        if (k * k + k * (k - 1) / 2 == quants &&
            alpha_equal(f, div_sentence(k)))
          return true;
    }
    if (f->kind == Formula::Kind::And && quants % 2 == 1 && quants >= 3) {
      int k = (quants - 1) / 2;  // EXACTLY_k
      if (alpha_equal(f, exactly(k))) return n_ == k;
    }
    return std::nullopt;
  }

  int n_;
};

/// Truth of a variable-free formula in the model with basis size n,
/// for arbitrary n: terms reduce to exact periodic sets and atoms to
/// closed-form counts below n.
inline bool eval_ground(const FormulaPtr& f, std::int64_t n) {
  if (n < 1) throw domain_error("basis size must be positive");
  using K = Formula::Kind;
  switch (f->kind) {
    case K::Not: return !eval_ground(f->f0, n);
    case K::And: return eval_ground(f->f0, n) && eval_ground(f->f1, n);
    case K::Or: return eval_ground(f->f0, n) || eval_ground(f->f1, n);
    case K::Implies: return !eval_ground(f->f0, n) || eval_ground(f->f1, n);
    case K::Iff: return eval_ground(f->f0, n) == eval_ground(f->f1, n);
    case K::Forall:
    case K::Exists:
      throw eval_error("quantifier in ground evaluation");
    default: break;
  }
  Nat top = n - 1;  // members of the basis {0..n-1}
  PeriodicSet a = ground_term_set(f->t0);
  switch (f->kind) {
    case K::Unit:
    case K::Atom: return a.count_upto(top) == 1;
    case K::Subset: {
      PeriodicSet b = ground_term_set(f->t1);
      return set_difference(a, b).count_upto(top) == 0 &&
             set_difference(b, a).count_upto(top) > 0;
    }
    case K::Less: {
      PeriodicSet b = ground_term_set(f->t1);
      return a.count_upto(top) < b.count_upto(top);
    }
    case K::SameSize: {
      PeriodicSet b = ground_term_set(f->t1);
      return a.count_upto(top) == b.count_upto(top);
    }
    case K::Equal: {
      PeriodicSet b = ground_term_set(f->t1);
      return set_difference(a, b).count_upto(top) == 0 &&
             set_difference(b, a).count_upto(top) == 0;
    }
    default: {  // Sum
      PeriodicSet b = ground_term_set(f->t1);
      PeriodicSet c = ground_term_set(f->t2);
      return a.count_upto(top) + b.count_upto(top) == c.count_upto(top);
    }
  }
}

// ---------------------------------------------------------------------------
// Bounded membership check for the theory of all finite models.

struct CsVerdict {
  enum class Kind { HoldsUpTo, Counterexample, BudgetExceeded };
  Kind kind;
  int n;  // reached or failing basis size

  std::string str() const {
    switch (kind) {
      case Kind::HoldsUpTo: return "holds-up-to " + std::to_string(n);
      case Kind::Counterexample: return "counterexample " + std::to_string(n);
      default: return "budget-exceeded " + std::to_string(n);
    }
  }
};

/// Evaluates a closed formula in the models of basis size 1..max_n in
/// order; the first failure is a counterexample.  Budget exhaustion is
/// a verdict of its own, not an error.
inline CsVerdict cs_check(const FormulaPtr& f, int max_n,
                          std::int64_t budget = 100'000'000) {
  if (max_n < 1) throw domain_error("max basis size must be positive");
  if (!is_closed(f)) throw domain_error("formula must be closed");
  for (int n = 1; n <= max_n; ++n) {
    FiniteModel model(n);
    try {
      if (!model.evaluate(f, {}, {true, budget}))
        return {CsVerdict::Kind::Counterexample, n};
    } catch (const budget_exceeded&) {
      return {CsVerdict::Kind::BudgetExceeded, n};
    }
  }
  return {CsVerdict::Kind::HoldsUpTo, max_n};
}

}  // namespace classize
