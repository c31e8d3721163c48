#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "classize/errors.hpp"

namespace classize {

using Nat = std::int64_t;

namespace detail {

inline std::vector<Nat> sorted_unique(std::vector<Nat> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline bool sorted_contains(const std::vector<Nat>& v, Nat k) {
  return std::binary_search(v.begin(), v.end(), k);
}

}  // namespace detail

/// An eventually periodic subset of the naturals in canonical form.
///
/// The set is (C ∪ added) − removed, where C is the union of the
/// congruence classes `{k : k mod modulus ∈ residues}`.  Invariants of
/// the canonical form:
///
///   - `modulus` is the least period of C (found among the divisors of
///     any stored period),
///   - `added` is disjoint from C, `removed` is contained in C,
///   - `added` and `removed` are sorted, duplicate-free and disjoint,
///   - a pure finite set keeps `residues` empty, `modulus` 1 and an
///     empty `removed`; the empty set is (1, {}, {}, {}).
///
/// Values are immutable once built; every operation returns a fresh
/// canonical value, so they can be shared freely across threads.
class PeriodicSet {
 public:
  /// The empty set.
  PeriodicSet() : modulus_(1) {}

  /// Canonicalizes arbitrary raw data with the membership semantics
  /// "(C ∪ added) − removed"; removal wins over addition.
  static PeriodicSet normalized(Nat modulus, std::vector<Nat> residues,
                                std::vector<Nat> added,
                                std::vector<Nat> removed) {
    if (modulus < 1) throw domain_error("modulus must be positive");
    for (Nat r : residues)
      if (r < 0 || r >= modulus) throw domain_error("residue out of range");
    for (Nat a : added)
      if (a < 0) throw domain_error("negative element");
    for (Nat b : removed)
      if (b < 0) throw domain_error("negative element");

    PeriodicSet raw;
    raw.modulus_ = modulus;
    raw.residues_ = detail::sorted_unique(std::move(residues));
    raw.added_ = detail::sorted_unique(std::move(added));
    raw.removed_ = detail::sorted_unique(std::move(removed));
    return raw.canonical();
  }

  /// The congruence class {k : k ≡ r (mod n)}.
  static PeriodicSet congruence_class(Nat n, Nat r) {
    if (n < 1) throw domain_error("modulus must be positive");
    if (r < 0 || r >= n) throw domain_error("residue out of range");
    return normalized(n, {r}, {}, {});
  }

  /// The whole of the naturals.
  static PeriodicSet naturals() { return congruence_class(1, 0); }

  /// A finite set given by its elements.
  static PeriodicSet finite(std::vector<Nat> elements) {
    return normalized(1, {}, std::move(elements), {});
  }

  Nat modulus() const { return modulus_; }
  const std::vector<Nat>& residues() const { return residues_; }
  const std::vector<Nat>& added() const { return added_; }
  const std::vector<Nat>& removed() const { return removed_; }

  bool is_finite() const { return residues_.empty(); }
  bool is_empty() const { return residues_.empty() && added_.empty(); }

  /// Number of residue classes composing C.
  Nat class_count() const { return (Nat)residues_.size(); }

  bool member(Nat k) const {
    if (k < 0) return false;
    if (detail::sorted_contains(removed_, k)) return false;
    if (detail::sorted_contains(added_, k)) return true;
    return !residues_.empty() &&
           detail::sorted_contains(residues_, k % modulus_);
  }

  /// |{k ∈ x : k ≤ m}|, in closed form: per-residue floor counts plus
  /// exception corrections.
  Nat count_upto(Nat m) const {
    if (m < 0) return 0;
    Nat count = 0;
    for (Nat r : residues_)
      if (r <= m) count += (m - r) / modulus_ + 1;
    for (Nat a : added_) {
      if (a > m) break;
      ++count;
    }
    for (Nat b : removed_) {
      if (b > m) break;
      --count;
    }
    return count;
  }

  /// First element, or -1 when empty.
  Nat least() const {
    if (is_empty()) return -1;
    Nat k = 0;
    while (!member(k)) ++k;  // bounded by modulus + first exceptions
    return k;
  }

  /// The n-th member (0-based) of an infinite set; enumeration order.
  Nat nth(Nat n) const {
    if (is_finite()) {
      std::vector<Nat> elems = added_;
      if (n >= (Nat)elems.size()) throw domain_error("nth beyond finite set");
      return elems[n];
    }
    Nat seen = 0;
    for (Nat k = 0;; ++k) {
      if (member(k)) {
        if (seen == n) return k;
        ++seen;
      }
    }
  }

  /// True iff the symmetric difference with y is finite; for canonical
  /// forms this is exactly agreement of the periodic components.
  bool near(const PeriodicSet& y) const {
    return modulus_ == y.modulus_ && residues_ == y.residues_;
  }

  friend bool operator==(const PeriodicSet& a, const PeriodicSet& b) {
    return a.modulus_ == b.modulus_ && a.residues_ == b.residues_ &&
           a.added_ == b.added_ && a.removed_ == b.removed_;
  }

  friend PeriodicSet set_union(const PeriodicSet& x, const PeriodicSet& y) {
    return combine(x, y, [](bool a, bool b) { return a || b; });
  }
  friend PeriodicSet set_intersect(const PeriodicSet& x,
                                   const PeriodicSet& y) {
    return combine(x, y, [](bool a, bool b) { return a && b; });
  }
  friend PeriodicSet set_difference(const PeriodicSet& x,
                                    const PeriodicSet& y) {
    return combine(x, y, [](bool a, bool b) { return a && !b; });
  }

  PeriodicSet complement() const {
    std::vector<Nat> co_residues;
    for (Nat r = 0; r < modulus_; ++r)
      if (!detail::sorted_contains(residues_, r)) co_residues.push_back(r);
    PeriodicSet result;
    result.modulus_ = modulus_;
    result.residues_ = std::move(co_residues);
    // exceptions flip roles, then land where the new C dictates
    result.added_ = removed_;
    result.removed_ = added_;
    return result.repair_exceptions(*this, [](bool in_x) { return !in_x; })
        .canonical();
  }

  /// Canonical textual form; see the set-expression grammar.  The
  /// difference operator binds tighter than union, so the positive
  /// part is grouped whenever removals follow it.
  std::string render() const {
    if (is_empty()) return "empty";
    std::string out;
    if (!residues_.empty()) {
      if (modulus_ == 1) {
        out = "N";
      } else {
        bool first = true;
        for (Nat r : residues_) {
          if (!first) out += "+";
          out += "M(" + std::to_string(modulus_) + "," + std::to_string(r) +
                 ")";
          first = false;
        }
      }
      if (!added_.empty()) out += "+" + render_elements(added_);
      if (!removed_.empty()) {
        bool compound = added_.size() + residues_.size() > 1 && modulus_ > 1;
        if (!added_.empty() && modulus_ == 1) compound = true;
        if (compound) out = "(" + out + ")";
        out += " \\ " + render_elements(removed_);
      }
    } else {
      out = render_elements(added_);
    }
    return out;
  }

 private:
  template <typename BoolOp>
  static PeriodicSet combine(const PeriodicSet& x, const PeriodicSet& y,
                             BoolOp op) {
    Nat lcm = std::lcm(x.modulus_, y.modulus_);
    std::vector<Nat> residues;
    for (Nat r = 0; r < lcm; ++r) {
      bool in_cx = !x.residues_.empty() &&
                   detail::sorted_contains(x.residues_, r % x.modulus_);
      bool in_cy = !y.residues_.empty() &&
                   detail::sorted_contains(y.residues_, r % y.modulus_);
      if (op(in_cx, in_cy)) residues.push_back(r);
    }
    // Away from the operands' exception points the result agrees with
    // the combined periodic parts, so only those points need fixing.
    std::vector<Nat> points;
    for (const auto* s : {&x.added_, &x.removed_, &y.added_, &y.removed_})
      points.insert(points.end(), s->begin(), s->end());
    points = detail::sorted_unique(std::move(points));

    std::vector<Nat> added, removed;
    for (Nat p : points) {
      bool actual = op(x.member(p), y.member(p));
      bool in_c = !residues.empty() &&
                  detail::sorted_contains(residues, p % lcm);
      if (actual && !in_c) added.push_back(p);
      if (!actual && in_c) removed.push_back(p);
    }
    return normalized(lcm, std::move(residues), std::move(added),
                      std::move(removed));
  }

  template <typename Fix>
  PeriodicSet repair_exceptions(const PeriodicSet& source, Fix actual_of) {
    std::vector<Nat> points;
    points.insert(points.end(), source.added_.begin(), source.added_.end());
    points.insert(points.end(), source.removed_.begin(),
                  source.removed_.end());
    points = detail::sorted_unique(std::move(points));
    std::vector<Nat> added, removed;
    for (Nat p : points) {
      bool actual = actual_of(source.member(p));
      bool in_c = !residues_.empty() &&
                  detail::sorted_contains(residues_, p % modulus_);
      if (actual && !in_c) added.push_back(p);
      if (!actual && in_c) removed.push_back(p);
    }
    added_ = std::move(added);
    removed_ = std::move(removed);
    return *this;
  }

  /// Reduces to the least period and re-settles exceptions against the
  /// minimal periodic part.
  PeriodicSet canonical() const {
    PeriodicSet out;
    if (residues_.empty()) {
      // pure finite set: removals can only cancel additions
      out.modulus_ = 1;
      for (Nat a : added_)
        if (!detail::sorted_contains(removed_, a)) out.added_.push_back(a);
      return out;
    }
    if ((Nat)residues_.size() == modulus_) {
      out.modulus_ = 1;
      out.residues_ = {0};
    } else {
      Nat best = modulus_;
      std::vector<Nat> best_res = residues_;
      for (Nat d = 1; d < modulus_; ++d) {
        if (modulus_ % d != 0) continue;
        // C is a union of d-classes iff residues is the full preimage
        // of its image mod d.
        std::vector<Nat> image;
        for (Nat r : residues_) image.push_back(r % d);
        image = detail::sorted_unique(std::move(image));
        if ((Nat)image.size() * (modulus_ / d) == (Nat)residues_.size()) {
          best = d;
          best_res = std::move(image);
          break;
        }
      }
      out.modulus_ = best;
      out.residues_ = std::move(best_res);
    }
    // Re-anchor exceptions against the canonical C.
    for (Nat a : added_) {
      if (detail::sorted_contains(removed_, a)) continue;
      if (!detail::sorted_contains(out.residues_, a % out.modulus_))
        out.added_.push_back(a);
    }
    for (Nat b : removed_) {
      if (detail::sorted_contains(out.residues_, b % out.modulus_))
        out.removed_.push_back(b);
    }
    out.added_ = detail::sorted_unique(std::move(out.added_));
    out.removed_ = detail::sorted_unique(std::move(out.removed_));
    return out;
  }

  static std::string render_elements(const std::vector<Nat>& v) {
    std::string out = "{";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(v[i]);
    }
    return out + "}";
  }

  Nat modulus_;
  std::vector<Nat> residues_;
  std::vector<Nat> added_;
  std::vector<Nat> removed_;
};

/// {i + 1 : i ∈ x}.
inline PeriodicSet successor_set(const PeriodicSet& x) {
  if (x.is_finite()) {
    std::vector<Nat> shifted;
    for (Nat a : x.added()) shifted.push_back(a + 1);
    return PeriodicSet::finite(std::move(shifted));
  }
  Nat n = x.modulus();
  std::vector<Nat> residues;
  for (Nat r : x.residues()) residues.push_back((r + 1) % n);
  std::vector<Nat> points = {0};
  for (Nat a : x.added()) points.push_back(a + 1);
  for (Nat b : x.removed()) points.push_back(b + 1);
  std::sort(residues.begin(), residues.end());
  std::vector<Nat> added, removed;
  for (Nat p : detail::sorted_unique(std::move(points))) {
    bool actual = p >= 1 && x.member(p - 1);
    bool in_c = detail::sorted_contains(residues, p % n);
    if (actual && !in_c) added.push_back(p);
    if (!actual && in_c) removed.push_back(p);
  }
  return PeriodicSet::normalized(n, std::move(residues), std::move(added),
                                 std::move(removed));
}

}  // namespace classize
