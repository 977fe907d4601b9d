// Satisfiability of normalized BSR(SLR) and BSR(BD) clause sets.
//
// SLR: for every total preorder of the base constants, solve the ground
// system it induces together with the definitions; for the resulting gamma,
// every free domain and constant assignment, ground the clauses over the
// classes relative to gamma's values and hand the instance to prop_solve.
// BD: no preorders; classes of the unbounded relation with
// kappa = max(1, max |c|).
#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "bsrbd/linarith.hpp"
#include "bsrbd/model.hpp"
#include "bsrbd/normalize.hpp"
#include "bsrbd/propsat.hpp"

namespace bsrbd {

// A base constant: a Skolem constant or a rational literal.
using BaseConstant = std::variant<SkolemId, Rational>;

// Blocks ascend; constants in one block are equal. Distinct rationals are
// never in one block and always appear in numeric order.
using Preorder = std::vector<std::vector<BaseConstant>>;

// Every rational-consistent total preorder, each once, in a fixed order.
std::vector<Preorder> enumerate_preorders(const std::vector<SkolemId>& skolems, const std::vector<Rational>& rationals);

// Constraints realizing a preorder: equal inside a block, strictly
// increasing from block to block.
GroundSystem preorder_system(const Preorder& p);

// Rationals occurring in N' (term offsets of constant terms).
std::vector<Rational> base_rationals(const ClauseSet& n);

std::int64_t bd_kappa(const ClauseSet& n);

struct DecideOptions {
  bool symmetry = true;
  std::optional<std::uint64_t> max_candidates;
  VerifyScope verify = VerifyScope::Feasible;
};

struct DecideStats {
  std::uint64_t preorders = 0;
  std::uint64_t gammas = 0;
  std::uint64_t candidates = 0;
  std::uint64_t classes = 0;  // feasible clause classes enumerated
  std::uint64_t prop_vars = 0;
  std::uint64_t prop_clauses = 0;
  std::uint64_t decisions = 0;
  std::uint64_t conflicts = 0;
  std::chrono::milliseconds wall{0};
};

struct DecideResult {
  bool sat = false;
  DecideStats stats;
  std::optional<InterpretationDescriptor> model;  // present iff sat
};

// Grounds n for one candidate. atoms receives the PropAtom of every
// variable (variable v is atoms[v - 1]).
PropInstance ground_to_prop(const NormalizedClauseSet& n, const RegionScheme& scheme,
                            std::span<const Rational> gamma, std::span<const std::uint32_t> domain,
                            std::span<const std::uint32_t> fconst_value, ClassTable& classes,
                            std::vector<PropAtom>& atoms);

// Throws ResourceLimit when more than max_candidates candidates are needed.
DecideResult decide(const NormalizedClauseSet& n, const DecideOptions& opt = {});

// Reference procedure for tests: works on the clause set as given (no
// normalization), enumerates domains and, for SLR, gamma values on a fixed
// grid, and searches predicate tables bit by bit over every class with plain
// backtracking. BD needs integer constants. nullopt when node_limit table
// bits were tried without an answer.
std::optional<bool> decide_naive(const ClauseSet& n, std::uint64_t node_limit = 50'000'000);

}  // namespace bsrbd
