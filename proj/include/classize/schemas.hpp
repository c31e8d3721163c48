#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "classize/errors.hpp"
#include "classize/formula.hpp"

namespace classize {

// Generators for the named sentence families of the class-size
// language: counting sentences, rough-divisibility sentences, their
// term-level variants, and the base axiom list.

namespace detail {

inline std::vector<TermPtr> fresh_vars(const std::string& prefix, int from,
                                       int count) {
  std::vector<TermPtr> vars;
  for (int i = 0; i < count; ++i)
    vars.push_back(Term::variable(prefix + std::to_string(from + i)));
  return vars;
}

inline TermPtr union_all(const std::vector<TermPtr>& ts) {
  TermPtr out = ts.at(0);
  for (size_t i = 1; i < ts.size(); ++i) out = t_union(out, ts[i]);
  return out;
}

inline FormulaPtr close_existentially(const std::vector<TermPtr>& vars,
                                      FormulaPtr body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it)
    body = f_exists((*it)->var, std::move(body));
  return body;
}

}  // namespace detail

/// "There are at least n atoms."
inline FormulaPtr atleast(int n) {
  if (n < 1) throw domain_error("atleast needs n >= 1");
  auto xs = detail::fresh_vars("x", 1, n);
  std::vector<FormulaPtr> conj;
  for (auto& x : xs) conj.push_back(f_atom(x));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      conj.push_back(f_not(f_equal(xs[i], xs[j])));
  return detail::close_existentially(xs, f_and_all(conj));
}

/// "There are exactly n atoms."
inline FormulaPtr exactly(int n) {
  if (n < 1) throw domain_error("exactly needs n >= 1");
  return f_and(atleast(n), f_not(atleast(n + 1)));
}

/// The universe splits into n same-size sets plus m leftover atoms.
inline FormulaPtr mod_sentence(int n, int m) {
  if (n < 1 || m < 0 || m >= n) throw domain_error("mod needs 0 <= m < n");
  auto xs = detail::fresh_vars("x", 1, n);
  auto ys = detail::fresh_vars("y", 1, m);
  std::vector<FormulaPtr> conj;
  for (int i = 0; i + 1 < n; ++i) conj.push_back(f_samesize(xs[i], xs[i + 1]));
  for (auto& y : ys) conj.push_back(f_atom(y));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      conj.push_back(f_equal(t_intersect(xs[i], xs[j]), Term::zero()));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      conj.push_back(f_equal(t_intersect(ys[i], ys[j]), Term::zero()));
  TermPtr xu = detail::union_all(xs);
  if (m > 0) {
    TermPtr yu = detail::union_all(ys);
    conj.push_back(f_equal(t_intersect(xu, yu), Term::zero()));
    conj.push_back(f_equal(t_union(xu, yu), Term::universe()));
  } else {
    conj.push_back(f_equal(xu, Term::universe()));
  }
  FormulaPtr body = f_and_all(conj);
  auto all_vars = xs;
  all_vars.insert(all_vars.end(), ys.begin(), ys.end());
  return detail::close_existentially(all_vars, body);
}

/// The universe is roughly divisible by n.
inline FormulaPtr div_sentence(int n) {
  if (n < 1) throw domain_error("div needs n >= 1");
  std::vector<FormulaPtr> parts;
  for (int m = 0; m < n; ++m) parts.push_back(mod_sentence(n, m));
  return f_or_all(parts);
}

/// Open formula: y is the same size as a sum of n copies of x.
/// Bound chain variables avoid the free variable names.
inline FormulaPtr times_formula(int n, const std::string& x,
                                const std::string& y) {
  if (n < 0) throw domain_error("times needs n >= 0");
  std::string prefix = "t";
  while (x.rfind(prefix, 0) == 0 || y.rfind(prefix, 0) == 0) prefix += "t";
  auto chain = detail::fresh_vars(prefix, 0, n + 1);
  std::vector<FormulaPtr> conj;
  conj.push_back(f_equal(chain[0], Term::zero()));
  conj.push_back(f_equal(chain[n], Term::variable(y)));
  for (int i = 1; i <= n; ++i)
    conj.push_back(f_sum(chain[i - 1], Term::variable(x), chain[i]));
  return detail::close_existentially(chain, f_and_all(conj));
}

/// Open formula: z splits into n same-size parts plus m atoms, said
/// purely with size predicates.
inline FormulaPtr mod_formula(int n, int m, const std::string& z) {
  if (n < 1 || m < 0 || m >= n) throw domain_error("mod needs 0 <= m < n");
  std::string p = "w";
  while (z.rfind(p, 0) == 0) p += "w";
  std::string xv = p + "x", yv = p + "y", vv = p + "v", wv = p + "w";
  FormulaPtr body = f_and_all({
      times_formula(n, xv, vv),
      f_unit(Term::variable(yv)),
      times_formula(m, yv, wv),
      f_sum(Term::variable(vv), Term::variable(wv), Term::variable(z)),
  });
  for (const std::string& v : {wv, vv, yv, xv}) body = f_exists(v, body);
  return body;
}

inline FormulaPtr div_formula(int n, const std::string& z) {
  if (n < 1) throw domain_error("div needs n >= 1");
  std::vector<FormulaPtr> parts;
  for (int m = 0; m < n; ++m) parts.push_back(mod_formula(n, m, z));
  return f_or_all(parts);
}

/// Every set is roughly divisible by n.
inline FormulaPtr adiv_sentence(int n) {
  return f_forall("x", div_formula(n, "x"));
}

/// Indiscernibility of x and y under the order, with > spelled via <.
inline FormulaPtr indisc(const TermPtr& x, const TermPtr& y) {
  std::string zv = "z";
  std::set<std::string> used;
  detail::term_vars(x, used);
  detail::term_vars(y, used);
  while (used.count(zv)) zv += "z";
  TermPtr z = Term::variable(zv);
  return f_forall(zv, f_and(f_iff(f_less(z, x), f_less(z, y)),
                            f_iff(f_less(x, z), f_less(y, z))));
}

/// The base axioms: boolean-algebra laws followed by size laws, all
/// universally closed.  Returned with stable names.
inline std::vector<std::pair<std::string, FormulaPtr>> basic_axioms() {
  TermPtr x = Term::variable("x");
  TermPtr y = Term::variable("y");
  TermPtr z = Term::variable("z");
  TermPtr xp = Term::variable("xp");
  TermPtr yp = Term::variable("yp");
  TermPtr zero = Term::zero();
  TermPtr id = Term::universe();

  auto all_xy = [&](FormulaPtr f) {
    return f_forall("x", f_forall("y", std::move(f)));
  };
  auto all_xyz = [&](FormulaPtr f) {
    return f_forall("x", f_forall("y", f_forall("z", std::move(f))));
  };

  std::vector<std::pair<std::string, FormulaPtr>> axioms;

  // boolean algebra
  axioms.emplace_back("union-comm",
                      all_xy(f_equal(t_union(x, y), t_union(y, x))));
  axioms.emplace_back("intersect-comm",
                      all_xy(f_equal(t_intersect(x, y), t_intersect(y, x))));
  axioms.emplace_back(
      "union-assoc",
      all_xyz(f_equal(t_union(x, t_union(y, z)), t_union(t_union(x, y), z))));
  axioms.emplace_back("intersect-assoc",
                      all_xyz(f_equal(t_intersect(x, t_intersect(y, z)),
                                      t_intersect(t_intersect(x, y), z))));
  axioms.emplace_back(
      "distrib-intersect",
      all_xyz(f_equal(t_intersect(x, t_union(y, z)),
                      t_union(t_intersect(x, y), t_intersect(x, z)))));
  axioms.emplace_back(
      "distrib-union",
      all_xyz(f_equal(t_union(x, t_intersect(y, z)),
                      t_intersect(t_union(x, y), t_union(x, z)))));
  axioms.emplace_back(
      "complement-intersect",
      f_forall("x", f_equal(t_intersect(x, t_difference(id, x)), zero)));
  axioms.emplace_back(
      "complement-union",
      f_forall("x", f_equal(t_union(x, t_difference(id, x)), id)));
  axioms.emplace_back(
      "subset-def",
      all_xy(f_iff(f_subset(x, y), f_and(f_equal(t_union(x, y), y),
                                         f_not(f_equal(x, y))))));
  axioms.emplace_back(
      "atom-def",
      f_forall("x",
               f_iff(f_atom(x),
                     f_and(f_not(f_equal(x, zero)),
                           f_forall("y", f_implies(f_subset(y, x),
                                                   f_equal(y, zero)))))));
  axioms.emplace_back(
      "atom-exists",
      f_forall("x", f_implies(f_not(f_equal(x, zero)),
                              f_exists("y", f_and(f_atom(y),
                                                  f_or(f_subset(y, x),
                                                       f_equal(y, x)))))));

  // size laws
  axioms.emplace_back("subset-smaller",
                      all_xy(f_implies(f_subset(x, y), f_less(x, y))));
  axioms.emplace_back("greater-def",
                      all_xy(f_iff(f_less(y, x), f_less(y, x))));
  axioms.emplace_back("samesize-def",
                      all_xy(f_iff(f_samesize(x, y), indisc(x, y))));
  axioms.emplace_back("less-irreflexive",
                      f_forall("x", f_not(f_less(x, x))));
  axioms.emplace_back(
      "trichotomy",
      all_xy(f_or(f_or(f_less(x, y), f_samesize(x, y)), f_less(y, x))));
  axioms.emplace_back("unit-def",
                      f_forall("x", f_iff(f_unit(x), f_atom(x))));
  axioms.emplace_back(
      "sum-def",
      all_xyz(f_iff(
          f_sum(x, y, z),
          f_exists("xp",
                   f_exists("yp",
                            f_and_all({f_samesize(x, xp), f_samesize(y, yp),
                                       f_equal(t_intersect(xp, yp), zero),
                                       f_equal(t_union(xp, yp), z)}))))));
  axioms.emplace_back(
      "disjoint-union-size",
      f_forall(
          "x",
          f_forall(
              "y",
              f_forall(
                  "xp",
                  f_forall(
                      "yp",
                      f_implies(
                          f_and_all({f_samesize(x, xp), f_samesize(y, yp),
                                     f_equal(t_intersect(x, y), zero),
                                     f_equal(t_intersect(xp, yp), zero)}),
                          f_samesize(t_union(x, y), t_union(xp, yp))))))));

  return axioms;
}

}  // namespace classize
