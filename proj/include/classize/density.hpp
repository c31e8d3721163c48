#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "classize/errors.hpp"
#include "classize/periodic_set.hpp"
#include "classize/rational.hpp"

namespace classize {

/// Asymptotic density: the share of residue classes in the periodic
/// part.  Finite exceptions never move it.
inline Rational density(const PeriodicSet& x) {
  if (x.is_finite()) return Rational(0);
  return Rational(x.class_count(), x.modulus());
}

/// Density of x inside y, for x contained in y with y infinite.
inline Rational relative_density(const PeriodicSet& x, const PeriodicSet& y) {
  if (y.is_finite()) throw domain_error("relative density needs infinite y");
  if (!set_difference(x, y).is_empty())
    throw domain_error("relative density needs x within y");
  return density(x) / density(y);
}

/// Counting functions of two periodic sets eventually drift apart at
/// the density gap, or, at equal densities, their difference repeats
/// with period lcm of the moduli once past the exceptions.  That makes
/// the outpacing condition (strictly larger counts from some point on)
/// a finite check.
inline bool outpaces(const PeriodicSet& x, const PeriodicSet& y) {
  Rational dx = density(x), dy = density(y);
  if (dx != dy) return dy < dx;
  Nat period = std::lcm(x.modulus(), y.modulus());
  Nat start = 0;
  for (const auto* exc : {&x.added(), &x.removed(), &y.added(), &y.removed()})
    for (Nat e : *exc) start = std::max(start, e + 1);
  for (Nat m = start; m < start + period; ++m)
    if (x.count_upto(m) <= y.count_upto(m)) return false;
  return true;
}

/// Strict interleaving x_1 < y_1 < x_2 < y_2 < ... of two infinite
/// sets.  Past the exceptions the merged pattern repeats with period
/// lcm, so checking two stabilized periods and matching the turn
/// parity at their boundary decides it.
inline bool alternating_pair(const PeriodicSet& x, const PeriodicSet& y) {
  if (x.is_finite() || y.is_finite())
    throw domain_error("alternating pair needs infinite sets");
  Nat period = std::lcm(x.modulus(), y.modulus());
  Nat start = 0;
  for (const auto* exc : {&x.added(), &x.removed(), &y.added(), &y.removed()})
    for (Nat e : *exc) start = std::max(start, e + 1);
  Nat bound = start + 2 * period;

  bool expect_x = true;
  Nat parity_mid = -1, parity_end = -1, consumed = 0;
  for (Nat k = 0; k < bound; ++k) {
    bool in_x = x.member(k), in_y = y.member(k);
    if (in_x && in_y) return false;  // shared element breaks strictness
    if (in_x) {
      if (!expect_x) return false;
      expect_x = false;
      ++consumed;
    } else if (in_y) {
      if (expect_x) return false;
      expect_x = true;
      ++consumed;
    }
    if (k + 1 == start + period) parity_mid = consumed % 2;
    if (k + 1 == bound) parity_end = consumed % 2;
  }
  // the alternation starts with x and must keep cycling identically
  // from one period window to the next
  return parity_mid == parity_end;
}

// ---------------------------------------------------------------------------
// Oracle-backed sets: arbitrary total membership predicates, for sets
// beyond the periodic fragment (squares, divergent block sets, greedy
// density constructions).

struct OracleSet {
  std::function<bool(Nat)> membership;
  std::string description;
};

/// Digits-alternating blocks: everything in [10^2n, 10^2n+1).
inline OracleSet oracle_blocks() {
  return {[](Nat k) {
            if (k < 1) return true;  // 0 lies in the first block [1, 10)
            int digits = 0;
            for (Nat v = k; v > 0; v /= 10) ++digits;
            return digits % 2 == 1;
          },
          "blocks1010"};
}

inline OracleSet oracle_squares() {
  return {[](Nat k) {
            Nat r = (Nat)std::llround(std::sqrt((double)k));
            for (Nat c = std::max<Nat>(0, r - 2); c <= r + 2; ++c)
              if (c * c == k) return true;
            return false;
          },
          "squares"};
}

inline OracleSet oracle_periodic(const PeriodicSet& s, std::string name) {
  return {[s](Nat k) { return s.member(k); }, std::move(name)};
}

/// Greedy set chasing a target density r = p/q: element i+1 joins
/// whenever the running fraction up to i has fallen below r.
inline OracleSet oracle_greedy(Nat p, Nat q) {
  if (q < 1 || p < 0 || p > q) throw domain_error("greedy needs 0 <= p/q <= 1");
  struct State {
    std::vector<bool> members;
    Nat count = 0;
  };
  auto state = std::make_shared<State>();
  return {[state, p, q](Nat k) {
            auto& v = state->members;
            if (v.empty()) v.push_back(false);  // the fraction starts empty
            for (Nat i = (Nat)v.size(); i <= k; ++i) {
              Nat upto = i - 1;  // fraction of members <= i-1 over i-1
              bool below = upto == 0 ? p > 0 : state->count * q < p * upto;
              v.push_back(below);
              if (below) ++state->count;
            }
            return v[k];
          },
          "greedy:" + std::to_string(p) + "/" + std::to_string(q)};
}

enum class EmpiricalOutpacing { YesUpTo, No, Mixed };

struct EmpiricalVerdict {
  EmpiricalOutpacing kind;
  Nat witness;  // horizon for YesUpTo, last non-negative point for No

  std::string str() const {
    switch (kind) {
      case EmpiricalOutpacing::YesUpTo:
        return "yes-up-to " + std::to_string(witness);
      case EmpiricalOutpacing::No: return "no " + std::to_string(witness);
      default: return "mixed";
    }
  }
};

/// Scans the count difference up to the horizon and classifies the
/// final fifth of the window: strictly positive throughout means x
/// keeps ahead, strictly negative means y does, anything else (ties
/// included) is mixed.
inline EmpiricalVerdict outpaces_empirical(const OracleSet& x,
                                           const OracleSet& y, Nat horizon) {
  if (horizon < 1) throw domain_error("horizon must be positive");
  std::vector<std::int64_t> diff(horizon + 1);
  std::int64_t d = 0;
  for (Nat m = 0; m <= horizon; ++m) {
    if (x.membership(m)) ++d;
    if (y.membership(m)) --d;
    diff[m] = d;
  }
  Nat tail_start = horizon - horizon / 5;
  bool all_pos = true, all_neg = true;
  for (Nat m = tail_start; m <= horizon; ++m) {
    if (diff[m] <= 0) all_pos = false;
    if (diff[m] >= 0) all_neg = false;
  }
  if (all_pos) return {EmpiricalOutpacing::YesUpTo, horizon};
  if (all_neg) {
    Nat last = 0;
    for (Nat m = 0; m <= horizon; ++m)
      if (diff[m] >= 0) last = m;
    return {EmpiricalOutpacing::No, last};
  }
  return {EmpiricalOutpacing::Mixed, 0};
}

struct DensityVerdict {
  enum class Kind { Converges, Diverges, Unknown };
  Kind kind;
  double estimate;  // Converges: the limit estimate
  Nat bound;        // Unknown: the horizon that was insufficient

  std::string str() const {
    switch (kind) {
      case Kind::Converges: {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.4f", estimate);
        return std::string("converges ") + buf;
      }
      case Kind::Diverges: return "diverges";
      default: return "unknown (horizon " + std::to_string(bound) + ")";
    }
  }
};

/// Samples the running fraction on a half-decade ladder up to the
/// horizon.  The last three rungs agreeing within 1e-2 reads as
/// convergence; a spread above 0.3 over the last five rungs as
/// divergence; anything else stays unknown.
inline DensityVerdict density_estimate(const OracleSet& x, Nat horizon) {
  if (horizon < 100) throw domain_error("horizon must be at least 100");
  std::vector<Nat> ladder;  // half decades, hitting every power of ten
  for (Nat pow = 100; pow <= horizon; pow *= 10) {
    ladder.push_back(pow);
    Nat half = (Nat)std::llround((double)pow * 3.16227766016838);
    if (half <= horizon) ladder.push_back(half);
  }
  std::sort(ladder.begin(), ladder.end());
  if (ladder.back() != horizon) ladder.push_back(horizon);

  std::vector<double> fract;
  Nat count = 0;
  size_t next = 0;
  for (Nat i = 0; i <= ladder.back(); ++i) {
    if (x.membership(i)) ++count;
    if (i == ladder[next]) {
      fract.push_back((double)count / (double)i);
      ++next;
      if (next == ladder.size()) break;
    }
  }

  size_t tail = std::min<size_t>(5, fract.size());
  double lo = fract[fract.size() - tail], hi = lo;
  for (size_t i = fract.size() - tail; i < fract.size(); ++i) {
    lo = std::min(lo, fract[i]);
    hi = std::max(hi, fract[i]);
  }
  if (fract.size() >= 3) {
    double a = fract[fract.size() - 3], b = fract[fract.size() - 2],
           c = fract[fract.size() - 1];
    double mn = std::min({a, b, c}), mx = std::max({a, b, c});
    if (mx - mn <= 1e-2) return {DensityVerdict::Kind::Converges, c, 0};
  }
  if (hi - lo > 0.3) return {DensityVerdict::Kind::Diverges, 0, 0};
  return {DensityVerdict::Kind::Unknown, 0, horizon};
}

}  // namespace classize
