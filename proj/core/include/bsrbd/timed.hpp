// Timed automata, their reachability encodings as clause sets, and a
// region-graph reachability oracle.
#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "bsrbd/regions.hpp"
#include "bsrbd/syntax.hpp"

namespace bsrbd {

using ClockId = std::uint32_t;
using LocId = std::uint32_t;

// x rel c, or x - y rel c when y is set. Constants are integers.
struct ClockAtom {
  ClockId x;
  std::optional<ClockId> y;
  Rel rel;
  std::int64_t c;
  friend bool operator==(const ClockAtom&, const ClockAtom&) = default;
};

// Conjunction; empty means true.
struct ClockConstraint {
  std::vector<ClockAtom> atoms;
  bool holds(std::span<const Rational> v) const;
  friend bool operator==(const ClockConstraint&, const ClockConstraint&) = default;
};

struct Transition {
  LocId from;
  LocId to;
  ClockConstraint guard;
  std::vector<ClockId> resets;
  friend bool operator==(const Transition&, const Transition&) = default;
};

struct TimedAutomaton {
  std::vector<std::string> clocks;
  std::vector<std::string> locations;
  LocId initial = 0;
  std::vector<ClockConstraint> invariants;  // by location
  std::vector<Transition> transitions;

  std::optional<LocId> find_location(std::string_view name) const;
  std::optional<ClockId> find_clock(std::string_view name) const;
  // Largest absolute constant in invariants and guards.
  std::int64_t max_constant() const;
};

struct ReachQuery {
  LocId location;
  ClockConstraint goal;
};

// Name of the reachability predicate in every encoding.
inline constexpr const char* kReach = "Reach";

// Initial clause, one delay clause per location, one clause per transition.
// Locations become free constants of the same names; mode LA.
ClauseSet encode_fol_la(const TimedAutomaton& a);

// Replaces every delay clause by difference-bound clauses over the clock
// pairs and k in [-lambda, lambda]. The antecedent's biconditionals are
// threaded through a chain of auxiliary predicates so the clause count stays
// 4 * |ordered pairs| * (2 lambda + 1) + 2 per delay clause; with one clock
// there are no pairs and a single clause remains.
ClauseSet lower_delay_clauses(const ClauseSet& n, std::int64_t lambda);

// Number of clauses lower_delay_clauses emits for one delay clause.
std::size_t lowered_delay_clause_count(std::size_t clocks, std::int64_t lambda);

// Adds 0 <= x and x < kappa for every base variable of every clause; the
// result is in mode BD.
ClauseSet bound_clocks(const ClauseSet& n, std::int64_t kappa);

// |clocks| * k with k the largest constant of the automaton and the query,
// and at least 1.
std::int64_t default_lambda(const TimedAutomaton& a, const ReachQuery& q);

// bound_clocks(lower_delay_clauses(encode_fol_la(a), lambda), lambda + 1)
// plus the goal clause. Unsatisfiable iff the goal is reachable inside the
// box [0, lambda + 1)^|clocks|.
ClauseSet encode_reachability(const TimedAutomaton& a, const ReachQuery& q, std::optional<std::int64_t> lambda = {});

// Delay successors of a region over [0, lambda + 1)^n by classic stepping,
// including the region itself; regions leaving the box are cut off.
std::vector<BdBoundedClass> delay_successors(const BdBoundedClass& s, std::int64_t lambda);

struct ReachStats {
  std::size_t states = 0;
};

// Explores (location, region) pairs inside the box [0, lambda + 1)^n.
bool region_reach(const TimedAutomaton& a, const ReachQuery& q, std::optional<std::int64_t> lambda = {},
                  ReachStats* stats = nullptr);

// Classes (of the bounded relation with parameter lambda over [0, lambda+1)^n)
// met by the delay closure S1 and the difference-bound set S2 of the region
// s, sampled on a grid; equal sets mean the two characterizations agree.
struct DelaySets {
  std::set<BdBoundedClass> s1;
  std::set<BdBoundedClass> s2;
};
DelaySets delay_sets(const BdBoundedClass& s, std::int64_t lambda);
bool delay_sets_equal_check(const BdBoundedClass& s, std::int64_t lambda);

// All regions of [0, lambda + 1)^n.
std::vector<BdBoundedClass> box_regions(std::uint32_t n, std::int64_t lambda);

}  // namespace bsrbd
