// Clauses of the form  constraints || premises -> conclusions  over one free
// sort S and the base sort R (the reals).
#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bsrbd/rational.hpp"

namespace bsrbd {

using VarId = std::uint32_t;     // clause-local, base or free sort depending on context
using SkolemId = std::uint32_t;  // index into ClauseSet::skolems
using ConstId = std::uint32_t;   // index into ClauseSet::free_constants
using PredId = std::uint32_t;    // index into ClauseSet::predicates

enum class Rel : std::uint8_t { LT, LE, EQ, NE, GE, GT };

std::string_view to_string(Rel r);
std::optional<Rel> parse_rel(std::string_view s);
// a rel b  <=>  b flip(rel) a
Rel flip(Rel r);
// not (a rel b)  <=>  a negate(rel) b
Rel negate(Rel r);
bool is_strict(Rel r);

template <class T>
bool holds(const T& a, Rel r, const T& b) {
  const auto c = a <=> b;
  switch (r) {
    case Rel::LT: return c < 0;
    case Rel::LE: return c <= 0;
    case Rel::EQ: return c == 0;
    case Rel::NE: return c != 0;
    case Rel::GE: return c >= 0;
    case Rel::GT: return c > 0;
  }
  return false;
}

// offset + sum coeffs[d] * d over Skolem constants; zero coefficients are never stored.
struct GroundTerm {
  Rational offset;
  std::map<SkolemId, Rational> coeffs;

  static GroundTerm constant(Rational r);
  static GroundTerm skolem(SkolemId d);

  bool is_rational() const { return coeffs.empty(); }
  // A lone Skolem constant with coefficient one and no offset.
  std::optional<SkolemId> as_skolem() const;
  bool is_constant() const { return is_rational() || as_skolem().has_value(); }

  GroundTerm& operator+=(const GroundTerm& o);
  GroundTerm& operator-=(const GroundTerm& o);
  GroundTerm& operator*=(const Rational& k);
  friend GroundTerm operator+(GroundTerm a, const GroundTerm& b) { return a += b; }
  friend GroundTerm operator-(GroundTerm a, const GroundTerm& b) { return a -= b; }
  friend GroundTerm operator*(GroundTerm a, const Rational& k) { return a *= k; }

  friend bool operator==(const GroundTerm&, const GroundTerm&) = default;
  friend auto operator<=>(const GroundTerm&, const GroundTerm&) = default;
};

// x rel t, t a ground term (a rational or Skolem constant in normal form).
struct VarConst {
  VarId x;
  Rel rel;
  GroundTerm bound;
  friend bool operator==(const VarConst&, const VarConst&) = default;
  friend auto operator<=>(const VarConst&, const VarConst&) = default;
};

struct VarVar {
  VarId x;
  Rel rel;
  VarId y;
  friend bool operator==(const VarVar&, const VarVar&) = default;
  friend auto operator<=>(const VarVar&, const VarVar&) = default;
};

// x - y rel c
struct DiffConst {
  VarId x;
  VarId y;
  Rel rel;
  Rational c;
  friend bool operator==(const DiffConst&, const DiffConst&) = default;
  friend auto operator<=>(const DiffConst&, const DiffConst&) = default;
};

struct GroundCmp {
  GroundTerm lhs;
  Rel rel;
  GroundTerm rhs;
  friend bool operator==(const GroundCmp&, const GroundCmp&) = default;
  friend auto operator<=>(const GroundCmp&, const GroundCmp&) = default;
};

// d rel t; only ever d != t inside a definition clause  d != t || -> []
struct SkolemDef {
  SkolemId d;
  Rel rel;
  GroundTerm t;
  friend bool operator==(const SkolemDef&, const SkolemDef&) = default;
  friend auto operator<=>(const SkolemDef&, const SkolemDef&) = default;
};

// sum coeffs[x] * x + constant rel 0. Only the unrestricted FOL(LA) encodings
// of timed automata use this shape; it is outside both decidable fragments.
struct LinearCmp {
  std::map<VarId, Rational> coeffs;
  Rational constant;
  Rel rel;
  friend bool operator==(const LinearCmp&, const LinearCmp&) = default;
  friend auto operator<=>(const LinearCmp&, const LinearCmp&) = default;
};

using Constraint = std::variant<VarConst, VarVar, DiffConst, GroundCmp, SkolemDef, LinearCmp>;

struct FreeTerm {
  enum class Kind : std::uint8_t { Var, Const };
  Kind kind;
  std::uint32_t id;

  static FreeTerm var(VarId v) { return {Kind::Var, v}; }
  static FreeTerm constant(ConstId c) { return {Kind::Const, c}; }
  bool is_var() const { return kind == Kind::Var; }

  friend bool operator==(const FreeTerm&, const FreeTerm&) = default;
  friend auto operator<=>(const FreeTerm&, const FreeTerm&) = default;
};

struct Equation {
  FreeTerm lhs;
  FreeTerm rhs;
  friend bool operator==(const Equation&, const Equation&) = default;
  friend auto operator<=>(const Equation&, const Equation&) = default;
};

// P(free_args..., base_args...); base arguments are always variables.
struct PredAtom {
  PredId pred;
  std::vector<FreeTerm> free_args;
  std::vector<VarId> base_args;
  friend bool operator==(const PredAtom&, const PredAtom&) = default;
  friend auto operator<=>(const PredAtom&, const PredAtom&) = default;
};

using FreeAtom = std::variant<Equation, PredAtom>;

struct Clause {
  std::vector<Constraint> constraints;
  std::vector<FreeAtom> premises;
  std::vector<FreeAtom> conclusions;
  // Names of the clause-local variables, indexed by VarId, per sort.
  std::vector<std::string> base_vars;
  std::vector<std::string> free_vars;

  std::size_t num_base_vars() const { return base_vars.size(); }
  std::size_t num_free_vars() const { return free_vars.size(); }
  bool is_ground() const { return base_vars.empty() && free_vars.empty(); }

  friend bool operator==(const Clause&, const Clause&) = default;
};

enum class Mode : std::uint8_t { SLR, BD, LA };

std::string_view to_string(Mode m);

struct PredicateSig {
  std::string name;
  std::uint32_t free_arity = 0;
  std::uint32_t base_arity = 0;
  friend bool operator==(const PredicateSig&, const PredicateSig&) = default;
};

struct ClauseSet {
  Mode mode = Mode::BD;
  std::vector<PredicateSig> predicates;
  std::vector<std::string> free_constants;
  std::vector<std::string> skolems;
  std::vector<Clause> clauses;

  std::optional<PredId> find_predicate(std::string_view name) const;
  std::optional<ConstId> find_free_constant(std::string_view name) const;
  std::optional<SkolemId> find_skolem(std::string_view name) const;

  // Every rational constant occurring in a constraint (term offsets and
  // coefficients included).
  std::set<Rational> rationals() const;

  friend bool operator==(const ClauseSet&, const ClauseSet&) = default;
};

// Base variables mentioned by a constraint, in order of appearance.
std::vector<VarId> constraint_vars(const Constraint& c);
// Skolem constants mentioned by a constraint.
std::set<SkolemId> constraint_skolems(const Constraint& c);

// Does the clause's constraint part bound x from below and from above by
// rationals (x >= c, x > c or x = c, and symmetrically)?
bool has_rational_bounds(const Clause& cl, VarId x);

// Checks the guard rule on every difference constraint; throws GuardError.
void check_bd_guards(const ClauseSet& set);

// Sorts the three multisets and renumbers variables by first occurrence until
// both are stable, so that equal clauses up to variable naming compare equal.
Clause canonicalize(const Clause& cl);
ClauseSet canonicalize(const ClauseSet& set);

}  // namespace bsrbd
