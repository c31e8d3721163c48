#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "classize/errors.hpp"
#include "classize/periodic_set.hpp"

namespace classize {

// ---------------------------------------------------------------------------
// Terms: boolean combinations of variables, the constants 0 and I, and
// literal (named) periodic sets.

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { Var, Zero, Universe, Named, Union, Intersect, Difference };

  Kind kind;
  std::string var;        // Var
  PeriodicSet named;      // Named
  TermPtr lhs, rhs;       // binary nodes

  static TermPtr variable(std::string name) {
    auto t = std::make_shared<Term>();
    t->kind = Kind::Var;
    t->var = std::move(name);
    return t;
  }
  static TermPtr zero() {
    auto t = std::make_shared<Term>();
    t->kind = Kind::Zero;
    return t;
  }
  static TermPtr universe() {
    auto t = std::make_shared<Term>();
    t->kind = Kind::Universe;
    return t;
  }
  static TermPtr named_set(PeriodicSet s) {
    auto t = std::make_shared<Term>();
    t->kind = Kind::Named;
    t->named = std::move(s);
    return t;
  }
  static TermPtr binary(Kind k, TermPtr a, TermPtr b) {
    auto t = std::make_shared<Term>();
    t->kind = k;
    t->lhs = std::move(a);
    t->rhs = std::move(b);
    return t;
  }
};

inline TermPtr t_union(TermPtr a, TermPtr b) {
  return Term::binary(Term::Kind::Union, std::move(a), std::move(b));
}
inline TermPtr t_intersect(TermPtr a, TermPtr b) {
  return Term::binary(Term::Kind::Intersect, std::move(a), std::move(b));
}
inline TermPtr t_difference(TermPtr a, TermPtr b) {
  return Term::binary(Term::Kind::Difference, std::move(a), std::move(b));
}

// ---------------------------------------------------------------------------
// Formulas of the class-size language: atoms over terms, connectives,
// quantifiers.  "t > u" never appears as a node; it is rewritten to
// "u < t" on construction by the parser.

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind {
    // atoms
    Subset,    // proper subset
    Less,
    SameSize,
    Sum,
    Unit,
    Atom,
    Equal,
    // connectives
    Not,
    And,
    Or,
    Implies,
    Iff,
    // quantifiers
    Forall,
    Exists,
  };

  Kind kind;
  TermPtr t0, t1, t2;     // atom arguments
  FormulaPtr f0, f1;      // connective children
  std::string var;        // quantified variable

  static FormulaPtr atom2(Kind k, TermPtr a, TermPtr b) {
    auto f = std::make_shared<Formula>();
    f->kind = k;
    f->t0 = std::move(a);
    f->t1 = std::move(b);
    return f;
  }
  static FormulaPtr atom1(Kind k, TermPtr a) {
    auto f = std::make_shared<Formula>();
    f->kind = k;
    f->t0 = std::move(a);
    return f;
  }
  static FormulaPtr sum(TermPtr a, TermPtr b, TermPtr c) {
    auto f = std::make_shared<Formula>();
    f->kind = Kind::Sum;
    f->t0 = std::move(a);
    f->t1 = std::move(b);
    f->t2 = std::move(c);
    return f;
  }
  static FormulaPtr connective(Kind k, FormulaPtr a, FormulaPtr b = nullptr) {
    auto f = std::make_shared<Formula>();
    f->kind = k;
    f->f0 = std::move(a);
    f->f1 = std::move(b);
    return f;
  }
  static FormulaPtr quantifier(Kind k, std::string v, FormulaPtr body) {
    auto f = std::make_shared<Formula>();
    f->kind = k;
    f->var = std::move(v);
    f->f0 = std::move(body);
    return f;
  }

  bool is_atom() const {
    return kind == Kind::Subset || kind == Kind::Less ||
           kind == Kind::SameSize || kind == Kind::Sum ||
           kind == Kind::Unit || kind == Kind::Atom || kind == Kind::Equal;
  }
  bool is_quantifier() const {
    return kind == Kind::Forall || kind == Kind::Exists;
  }
};

inline FormulaPtr f_subset(TermPtr a, TermPtr b) {
  return Formula::atom2(Formula::Kind::Subset, std::move(a), std::move(b));
}
inline FormulaPtr f_less(TermPtr a, TermPtr b) {
  return Formula::atom2(Formula::Kind::Less, std::move(a), std::move(b));
}
inline FormulaPtr f_samesize(TermPtr a, TermPtr b) {
  return Formula::atom2(Formula::Kind::SameSize, std::move(a), std::move(b));
}
inline FormulaPtr f_equal(TermPtr a, TermPtr b) {
  return Formula::atom2(Formula::Kind::Equal, std::move(a), std::move(b));
}
inline FormulaPtr f_sum(TermPtr a, TermPtr b, TermPtr c) {
  return Formula::sum(std::move(a), std::move(b), std::move(c));
}
inline FormulaPtr f_unit(TermPtr a) {
  return Formula::atom1(Formula::Kind::Unit, std::move(a));
}
inline FormulaPtr f_atom(TermPtr a) {
  return Formula::atom1(Formula::Kind::Atom, std::move(a));
}
inline FormulaPtr f_not(FormulaPtr a) {
  return Formula::connective(Formula::Kind::Not, std::move(a));
}
inline FormulaPtr f_and(FormulaPtr a, FormulaPtr b) {
  return Formula::connective(Formula::Kind::And, std::move(a), std::move(b));
}
inline FormulaPtr f_or(FormulaPtr a, FormulaPtr b) {
  return Formula::connective(Formula::Kind::Or, std::move(a), std::move(b));
}
inline FormulaPtr f_implies(FormulaPtr a, FormulaPtr b) {
  return Formula::connective(Formula::Kind::Implies, std::move(a),
                             std::move(b));
}
inline FormulaPtr f_iff(FormulaPtr a, FormulaPtr b) {
  return Formula::connective(Formula::Kind::Iff, std::move(a), std::move(b));
}
inline FormulaPtr f_forall(std::string v, FormulaPtr body) {
  return Formula::quantifier(Formula::Kind::Forall, std::move(v),
                             std::move(body));
}
inline FormulaPtr f_exists(std::string v, FormulaPtr body) {
  return Formula::quantifier(Formula::Kind::Exists, std::move(v),
                             std::move(body));
}

/// Conjunction of a list; empty list is not allowed here, callers
/// handle the degenerate cases themselves.
inline FormulaPtr f_and_all(const std::vector<FormulaPtr>& fs) {
  if (fs.empty()) throw domain_error("empty conjunction");
  FormulaPtr out = fs[0];
  for (size_t i = 1; i < fs.size(); ++i) out = f_and(out, fs[i]);
  return out;
}
inline FormulaPtr f_or_all(const std::vector<FormulaPtr>& fs) {
  if (fs.empty()) throw domain_error("empty disjunction");
  FormulaPtr out = fs[0];
  for (size_t i = 1; i < fs.size(); ++i) out = f_or(out, fs[i]);
  return out;
}

// ---------------------------------------------------------------------------
// Structural predicates.

inline bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Kind::Var: return a->var == b->var;
    case Term::Kind::Zero:
    case Term::Kind::Universe: return true;
    case Term::Kind::Named: return a->named == b->named;
    default:
      return term_equal(a->lhs, b->lhs) && term_equal(a->rhs, b->rhs);
  }
}

inline bool formula_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a->kind != b->kind) return false;
  if (a->is_atom()) {
    if (!term_equal(a->t0, b->t0)) return false;
    if ((a->t1 != nullptr) != (b->t1 != nullptr)) return false;
    if (a->t1 && !term_equal(a->t1, b->t1)) return false;
    if ((a->t2 != nullptr) != (b->t2 != nullptr)) return false;
    if (a->t2 && !term_equal(a->t2, b->t2)) return false;
    return true;
  }
  if (a->is_quantifier())
    return a->var == b->var && formula_equal(a->f0, b->f0);
  if (!formula_equal(a->f0, b->f0)) return false;
  if ((a->f1 != nullptr) != (b->f1 != nullptr)) return false;
  return !a->f1 || formula_equal(a->f1, b->f1);
}

namespace detail {

inline void term_vars(const TermPtr& t, std::set<std::string>& out) {
  switch (t->kind) {
    case Term::Kind::Var: out.insert(t->var); break;
    case Term::Kind::Union:
    case Term::Kind::Intersect:
    case Term::Kind::Difference:
      term_vars(t->lhs, out);
      term_vars(t->rhs, out);
      break;
    default: break;
  }
}

inline void free_vars_rec(const FormulaPtr& f, std::set<std::string> bound,
                          std::set<std::string>& out) {
  if (f->is_atom()) {
    std::set<std::string> vars;
    for (const TermPtr& t : {f->t0, f->t1, f->t2})
      if (t) term_vars(t, vars);
    for (const auto& v : vars)
      if (!bound.count(v)) out.insert(v);
    return;
  }
  if (f->is_quantifier()) {
    bound.insert(f->var);
    free_vars_rec(f->f0, std::move(bound), out);
    return;
  }
  free_vars_rec(f->f0, bound, out);
  if (f->f1) free_vars_rec(f->f1, std::move(bound), out);
}

}  // namespace detail

inline std::set<std::string> free_vars(const FormulaPtr& f) {
  std::set<std::string> out;
  detail::free_vars_rec(f, {}, out);
  return out;
}

inline bool is_closed(const FormulaPtr& f) { return free_vars(f).empty(); }

inline bool has_quantifier(const FormulaPtr& f) {
  if (f->is_quantifier()) return true;
  if (f->is_atom()) return false;
  if (has_quantifier(f->f0)) return true;
  return f->f1 && has_quantifier(f->f1);
}

inline int quantifier_count(const FormulaPtr& f) {
  if (f->is_atom()) return 0;
  if (f->is_quantifier()) return 1 + quantifier_count(f->f0);
  int n = quantifier_count(f->f0);
  if (f->f1) n += quantifier_count(f->f1);
  return n;
}

namespace detail {

inline bool alpha_term(const TermPtr& a, const TermPtr& b,
                       const std::map<std::string, std::string>& ab) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Kind::Var: {
      auto it = ab.find(a->var);
      if (it != ab.end()) return it->second == b->var;
      return a->var == b->var;  // free occurrences must match literally
    }
    case Term::Kind::Zero:
    case Term::Kind::Universe: return true;
    case Term::Kind::Named: return a->named == b->named;
    default:
      return alpha_term(a->lhs, b->lhs, ab) && alpha_term(a->rhs, b->rhs, ab);
  }
}

inline bool alpha_rec(const FormulaPtr& a, const FormulaPtr& b,
                      std::map<std::string, std::string> ab) {
  if (a->kind != b->kind) return false;
  if (a->is_atom()) {
    for (auto [ta, tb] : {std::pair{a->t0, b->t0}, {a->t1, b->t1},
                          {a->t2, b->t2}}) {
      if ((ta != nullptr) != (tb != nullptr)) return false;
      if (ta && !alpha_term(ta, tb, ab)) return false;
    }
    return true;
  }
  if (a->is_quantifier()) {
    ab[a->var] = b->var;
    return alpha_rec(a->f0, b->f0, std::move(ab));
  }
  if (!alpha_rec(a->f0, b->f0, ab)) return false;
  if ((a->f1 != nullptr) != (b->f1 != nullptr)) return false;
  return !a->f1 || alpha_rec(a->f1, b->f1, std::move(ab));
}

}  // namespace detail

/// Equality up to renaming of bound variables.
inline bool alpha_equal(const FormulaPtr& a, const FormulaPtr& b) {
  return detail::alpha_rec(a, b, {});
}

/// Exact value of a variable-free term over the naturals.
inline PeriodicSet ground_term_set(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Named: return t->named;
    case Term::Kind::Zero: return PeriodicSet();
    case Term::Kind::Universe: return PeriodicSet::naturals();
    case Term::Kind::Union:
      return set_union(ground_term_set(t->lhs), ground_term_set(t->rhs));
    case Term::Kind::Intersect:
      return set_intersect(ground_term_set(t->lhs), ground_term_set(t->rhs));
    case Term::Kind::Difference:
      return set_difference(ground_term_set(t->lhs), ground_term_set(t->rhs));
    default:
      throw eval_error("variable where a ground term is required");
  }
}

// ---------------------------------------------------------------------------
// Rendering back to the concrete syntax.  parse(render(f)) rebuilds f
// node for node.

namespace detail {

// term precedence: ~ (3) > & (2) > \ (1) > + (0)
inline std::string render_term(const TermPtr& t, int parent) {
  switch (t->kind) {
    case Term::Kind::Var: return t->var;
    case Term::Kind::Zero: return "0";
    case Term::Kind::Universe: return "I";
    case Term::Kind::Named: {
      std::string s = t->named.render();
      // compound canonical forms reparse as term operators; keep them
      // grouped
      if (s.find('+') != std::string::npos ||
          s.find('\\') != std::string::npos)
        return "(" + s + ")";
      return s;
    }
    case Term::Kind::Union: {
      std::string s = render_term(t->lhs, 0) + " + " + render_term(t->rhs, 1);
      return parent > 0 ? "(" + s + ")" : s;
    }
    case Term::Kind::Difference: {
      std::string s = render_term(t->lhs, 1) + " \\ " + render_term(t->rhs, 2);
      return parent > 1 ? "(" + s + ")" : s;
    }
    default: {  // Intersect
      std::string s = render_term(t->lhs, 2) + " & " + render_term(t->rhs, 3);
      return parent > 2 ? "(" + s + ")" : s;
    }
  }
}

// formula precedence: ! (4) > & (3) > | (2) > -> (1) > <-> (0).
// Infix relational atoms are grouped under '&' and '!' because their
// right-hand term would otherwise swallow a following '&'.
inline std::string render_rel(const std::string& s, int parent) {
  return parent >= 3 ? "(" + s + ")" : s;
}

inline std::string render_formula(const FormulaPtr& f, int parent) {
  using K = Formula::Kind;
  switch (f->kind) {
    case K::Subset:
      return render_rel(
          render_term(f->t0, 1) + " sub " + render_term(f->t1, 1), parent);
    case K::Less:
      return render_rel(
          render_term(f->t0, 1) + " < " + render_term(f->t1, 1), parent);
    case K::SameSize:
      return render_rel(
          render_term(f->t0, 1) + " ~ " + render_term(f->t1, 1), parent);
    case K::Equal:
      return render_rel(
          render_term(f->t0, 1) + " = " + render_term(f->t1, 1), parent);
    case K::Sum:
      return "sum(" + render_term(f->t0, 0) + ", " + render_term(f->t1, 0) +
             ", " + render_term(f->t2, 0) + ")";
    case K::Unit: return "unit(" + render_term(f->t0, 0) + ")";
    case K::Atom: return "atom(" + render_term(f->t0, 0) + ")";
    case K::Not: return "!" + render_formula(f->f0, 4);
    case K::And: {
      std::string s =
          render_formula(f->f0, 3) + " & " + render_formula(f->f1, 4);
      return parent > 3 ? "(" + s + ")" : s;
    }
    case K::Or: {
      std::string s =
          render_formula(f->f0, 2) + " | " + render_formula(f->f1, 3);
      return parent > 2 ? "(" + s + ")" : s;
    }
    case K::Implies: {
      // right associative
      std::string s =
          render_formula(f->f0, 2) + " -> " + render_formula(f->f1, 1);
      return parent > 1 ? "(" + s + ")" : s;
    }
    case K::Iff: {
      std::string s =
          render_formula(f->f0, 1) + " <-> " + render_formula(f->f1, 0);
      return parent > 0 ? "(" + s + ")" : s;
    }
    case K::Forall:
    case K::Exists: {
      std::string head = f->kind == K::Forall ? "all " : "some ";
      std::string s = head + f->var + " (" + render_formula(f->f0, 0) + ")";
      return parent > 0 ? "(" + s + ")" : s;
    }
  }
  return {};
}

}  // namespace detail

inline std::string render(const TermPtr& t) { return detail::render_term(t, 0); }
inline std::string render(const FormulaPtr& f) {
  return detail::render_formula(f, 0);
}

}  // namespace classize
