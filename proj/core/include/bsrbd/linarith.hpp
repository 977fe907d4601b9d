// Conjunctions of ground linear constraints over Skolem constants:
// Fourier-Motzkin projection and witness extraction.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "bsrbd/syntax.hpp"

namespace bsrbd {

struct GroundSystem {
  std::vector<GroundCmp> constraints;

  std::set<SkolemId> variables() const;
};

using Valuation = std::map<SkolemId, Rational>;

// Eliminates v. Constraints without v are passed through untouched; equations
// on v are split into two inequalities first. Throws Error on a disequation
// mentioning v.
GroundSystem fm_project(const GroundSystem& sys, SkolemId v);

// A satisfying valuation of every variable of sys, or nullopt. Deterministic:
// variables are eliminated in ascending id order and assigned back to front,
// taking the midpoint of a two-sided interval, bound +/- 1 for a one-sided
// one and 0 when unconstrained. Disequations are split into < then >.
std::optional<Valuation> solve_ground(const GroundSystem& sys);

bool satisfies(const GroundSystem& sys, const Valuation& val);

}  // namespace bsrbd
