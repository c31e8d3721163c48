#pragma once

#include <string>

#include "classize/errors.hpp"
#include "classize/periodic_set.hpp"
#include "classize/rational.hpp"
#include "classize/remainder.hpp"

namespace classize {

/// A size is a pair (rho, delta) of exact rationals, ordered
/// lexicographically with rho dominant.  rho carries the density of a
/// set and delta its finite deviation from plain sets of that density.
struct Size {
  Rational rho;
  Rational delta;

  friend bool operator==(const Size& a, const Size& b) {
    return a.rho == b.rho && a.delta == b.delta;
  }
  friend bool operator<(const Size& a, const Size& b) {
    if (a.rho != b.rho) return a.rho < b.rho;
    return a.delta < b.delta;
  }
  friend Size operator+(const Size& a, const Size& b) {
    return {a.rho + b.rho, a.delta + b.delta};
  }
  friend Size operator-(const Size& a, const Size& b) {
    return {a.rho - b.rho, a.delta - b.delta};
  }

  std::string str() const { return "(" + rho.str() + ", " + delta.str() + ")"; }
};

inline bool size_less(const Size& a, const Size& b) { return a < b; }
inline Size size_add(const Size& a, const Size& b) { return a + b; }

enum class Comparison { Smaller, SameSize, Larger };

inline const char* to_string(Comparison c) {
  switch (c) {
    case Comparison::Smaller: return "Smaller";
    case Comparison::SameSize: return "SameSize";
    default: return "Larger";
  }
}

/// Size assignment parameterized by a congruous remainder function f.
///
/// At modulus n, the congruence classes with residue below f(n) are
/// "charmed": one atom larger than the rest.  Each class of residue i
/// contributes (1/n, (n-f(n))/n) if i < f(n) and (1/n, -f(n)/n)
/// otherwise; finite deviations add (0, |added| - |removed|).
class SizedUniverse {
 public:
  explicit SizedUniverse(RemainderFn f) : f_(std::move(f)) {
    if (!is_congruous(f_))
      throw domain_error("remainder function is incongruous");
  }

  const RemainderFn& remainder_fn() const { return f_; }

  /// The modulus a set with periodic part of period `base` is sized
  /// at: `base` itself when f is defined there, else the least
  /// multiple of `base` in dom f.
  std::int64_t resolve_modulus(std::int64_t base) const {
    if (f_.defined_at(base)) return base;
    auto m = f_.least_defined_multiple(base);
    if (!m)
      throw domain_error("size undefined under f (no usable modulus for " +
                         std::to_string(base) + ")");
    return *m;
  }

  Size theta(const PeriodicSet& x) const {
    Size total{Rational(0), Rational((Nat)x.added().size() -
                                     (Nat)x.removed().size())};
    if (x.is_finite()) return total;
    std::int64_t n = resolve_modulus(x.modulus());
    std::int64_t fn = f_.at(n);
    std::int64_t lift = n / x.modulus();
    for (Nat r : x.residues()) {
      // the class mod alpha splits into `lift` classes mod n with
      // residues r, r+alpha, ..., of which those below f(n) are charmed
      std::int64_t charmed = 0;
      for (std::int64_t i = 0; i < lift; ++i)
        if (r + i * x.modulus() < fn) ++charmed;
      total.rho = total.rho + Rational(lift, n);
      total.delta = total.delta + Rational(charmed) -
                    Rational(lift * fn, n);
    }
    return total;
  }

  Comparison compare(const PeriodicSet& x, const PeriodicSet& y) const {
    Size a = theta(x), b = theta(y);
    if (a < b) return Comparison::Smaller;
    if (b < a) return Comparison::Larger;
    return Comparison::SameSize;
  }

  bool sum_holds(const PeriodicSet& x, const PeriodicSet& y,
                 const PeriodicSet& z) const {
    return theta(z) == theta(x) + theta(y);
  }

  bool is_unit(const PeriodicSet& x) const {
    return theta(x) == Size{Rational(0), Rational(1)};
  }

 private:
  RemainderFn f_;
};

}  // namespace classize
