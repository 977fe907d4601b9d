// Normal form: uniform predicate sorts, integer constants (BD), no
// constraint-only variables, constant-vs-constant ground comparisons with
// definitions split off (SLR), clauses renamed apart, a free constant present.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "bsrbd/syntax.hpp"

namespace bsrbd {

struct NormalizedClauseSet {
  ClauseSet set;              // signature and N'
  std::vector<Clause> defs;   // d != t || -> [] (SLR only)
  BigInt scale = 1;           // constants were multiplied by this (BD only)
  std::map<std::string, std::string> provenance;  // fresh symbol -> origin

  // N' followed by the definitions, as one printable set.
  ClauseSet combined() const;
};

// Fresh names use these prefixes followed by a counter.
inline constexpr const char* kFreshSkolem = "_sk";
inline constexpr const char* kFreshVar = "_v";
inline constexpr const char* kFreshConst = "_fc";

// Every predicate gets sort S^m' R^m (the maximal arities). A short argument
// list is extended by repeating its first argument; a missing free part
// repeats the first free constant and a missing base part one fresh variable
// per clause.
ClauseSet pad_predicates(const ClauseSet& n);

// Multiplies every constant by the lcm of the denominators; BD only.
ClauseSet scale_to_integers(const ClauseSet& n, BigInt* factor = nullptr);

// Base terms never occur inside atoms with the shipped grammar, so this only
// checks that.
ClauseSet purify(const ClauseSet& n);

// Fourier-Motzkin on each base variable that occurs in constraints but in no
// atom. A disequation on such a variable splits the clause into a < and a >
// copy first. Clauses whose constraints become contradictory are dropped.
ClauseSet eliminate_constraint_only_vars(const ClauseSet& n);

// Replaces every compound ground term by a fresh Skolem constant c and adds
// c != t || -> [] to the definitions; equal terms share one constant.
NormalizedClauseSet split_ground_slr(const ClauseSet& n);

// Gives every variable a name not used by any other clause.
ClauseSet rename_apart(const ClauseSet& n);

ClauseSet ensure_free_constant(const ClauseSet& n);

// The whole pipeline. Throws FragmentError for mode LA or Skolem constants in
// BD, GuardError if the guards fail afterwards.
NormalizedClauseSet normalize(const ClauseSet& n);

// Violations of the normal form, empty when there are none.
std::vector<std::string> normal_form_violations(const NormalizedClauseSet& n);

}  // namespace bsrbd
