#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "classize/errors.hpp"

namespace classize {

/// A partial map n ↦ f(n) with 0 ≤ f(n) < n, or the designated
/// zero-total function (f(n) = 0 everywhere).
class RemainderFn {
 public:
  /// f(n) = 0 for every n ≥ 1.
  static RemainderFn zero_total() {
    RemainderFn f;
    f.zero_total_ = true;
    return f;
  }

  static RemainderFn from_entries(std::map<std::int64_t, std::int64_t> m) {
    RemainderFn f;
    for (auto [n, v] : m) {
      if (n < 1) throw domain_error("remainder function needs positive modulus");
      if (v < 0 || v >= n) throw domain_error("remainder out of range");
    }
    f.entries_ = std::move(m);
    return f;
  }

  /// "zero" or a comma list "n:m"; duplicate moduli are rejected.
  static RemainderFn parse(const std::string& spec);

  bool is_zero_total() const { return zero_total_; }
  const std::map<std::int64_t, std::int64_t>& entries() const {
    return entries_;
  }

  bool defined_at(std::int64_t n) const {
    return zero_total_ || entries_.count(n) > 0;
  }

  std::int64_t at(std::int64_t n) const {
    if (zero_total_) return 0;
    auto it = entries_.find(n);
    if (it == entries_.end())
      throw domain_error("remainder function undefined at " +
                         std::to_string(n));
    return it->second;
  }

  /// Least multiple of `base` in the domain (base itself counts);
  /// nothing found within entries → nullopt.
  std::optional<std::int64_t> least_defined_multiple(std::int64_t base) const {
    if (zero_total_) return base;
    std::optional<std::int64_t> best;
    for (auto& [n, v] : entries_) {
      (void)v;
      if (n % base == 0 && (!best || n < *best)) best = n;
    }
    return best;
  }

  std::string render() const {
    if (zero_total_) return "zero";
    std::string out;
    for (auto& [n, v] : entries_) {
      if (!out.empty()) out += ",";
      out += std::to_string(n) + ":" + std::to_string(v);
    }
    return out;
  }

 private:
  std::map<std::int64_t, std::int64_t> entries_;
  bool zero_total_ = false;
};

/// gcd(i, j) divides f(i) − f(j) for all i, j in the domain.
inline bool is_congruous(const RemainderFn& f) {
  if (f.is_zero_total()) return true;
  const auto& m = f.entries();
  for (auto i = m.begin(); i != m.end(); ++i)
    for (auto j = std::next(i); j != m.end(); ++j) {
      std::int64_t g = std::gcd(i->first, j->first);
      if ((i->second - j->second) % g != 0) return false;
    }
  return true;
}

/// All simultaneous solutions of a finite congruence system, as a
/// single class (residue, modulus) with modulus = lcm of the domain.
struct CrtSolution {
  std::int64_t residue;
  std::int64_t modulus;
};

/// Pairwise CRT merging with gcd compatibility checks.  Returns the
/// full solution class or nullopt when the system is unsolvable.
inline std::optional<CrtSolution> solve(const RemainderFn& f) {
  __int128 r = 0, m = 1;
  if (!f.is_zero_total()) {
    for (auto& [n, v] : f.entries()) {
      __int128 n2 = n, r2 = v;
      std::int64_t g = std::gcd((std::int64_t)m, n);
      __int128 diff = r2 - r;
      if (diff % g != 0) return std::nullopt;
      __int128 lcm = m / g * n2;
      // r' = r + m * t with t ≡ (r2-r)/g * inv(m/g) (mod n/g)
      __int128 mg = m / g, ng = n2 / g;
      __int128 t = ((diff / g) % ng + ng) % ng;
      // extended Euclid for inv(mg mod ng)
      __int128 a = mg % ng, b = ng, x0 = 1, x1 = 0;
      while (b != 0) {
        __int128 q = a / b;
        __int128 tmp = a - q * b;
        a = b;
        b = tmp;
        tmp = x0 - q * x1;
        x0 = x1;
        x1 = tmp;
      }
      __int128 inv = ((x0 % ng) + ng) % ng;
      t = (t * inv) % ng;
      r = (r + m * t) % lcm;
      m = lcm;
    }
  }
  return CrtSolution{(std::int64_t)r, (std::int64_t)m};
}

/// Least common multiple of a nonempty finite set.
inline std::int64_t mu(const std::set<std::int64_t>& J) {
  if (J.empty()) throw domain_error("mu of an empty set");
  std::int64_t l = 1;
  for (std::int64_t n : J) {
    if (n < 1) throw domain_error("mu needs positive integers");
    l = std::lcm(l, n);
  }
  return l;
}

/// Restriction of the domain to J.  Restricting the zero-total
/// function yields the finite map with value 0 on J.
inline RemainderFn restrict(const RemainderFn& f,
                            const std::set<std::int64_t>& J) {
  std::map<std::int64_t, std::int64_t> out;
  for (std::int64_t n : J)
    if (f.defined_at(n)) out[n] = f.at(n);
  return RemainderFn::from_entries(std::move(out));
}

inline RemainderFn RemainderFn::parse(const std::string& spec) {
  if (spec == "zero") return zero_total();
  std::map<std::int64_t, std::int64_t> m;
  size_t pos = 0;
  while (pos < spec.size()) {
    size_t comma = spec.find(',', pos);
    std::string item = spec.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    size_t colon = item.find(':');
    if (colon == std::string::npos)
      throw parse_error("expected n:m in remainder spec", 1, (int)pos + 1);
    std::int64_t n, v;
    try {
      n = std::stoll(item.substr(0, colon));
      v = std::stoll(item.substr(colon + 1));
    } catch (const std::exception&) {
      throw parse_error("malformed remainder entry '" + item + "'", 1,
                        (int)pos + 1);
    }
    if (n < 1) throw domain_error("remainder modulus must be positive");
    if (v < 0 || v >= n) throw domain_error("remainder out of range");
    if (m.count(n))
      throw parse_error("duplicate modulus " + std::to_string(n), 1,
                        (int)pos + 1);
    m[n] = v;
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return from_entries(std::move(m));
}

}  // namespace classize
