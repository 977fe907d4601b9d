// Text formats: clause sets and timed automata.
//
//   mode slr|bd|la
//   pred P : S^1 R^2
//   freeconst a b
//   skolem d e
//   clause [x < d; x - y <= 1] [P(a, x, y)] -> [u ~ a; Q(u, y, x)]
//   clause [def d != 2*e + 1] [] -> []
//
// A predicate's free-sort arguments come first. Identifiers that are not
// declared constants are clause-local variables; their sort is inferred
// from their first use.
#pragma once

#include <string>
#include <string_view>

#include "bsrbd/syntax.hpp"
#include "bsrbd/timed.hpp"

namespace bsrbd {

// Throws ParseError, SortError, FragmentError or GuardError.
ClauseSet parse_clause_set(std::string_view text);

std::string print_clause_set(const ClauseSet& set);
std::string print_clause(const ClauseSet& set, const Clause& cl);
std::string print_constraint(const ClauseSet& set, const Clause& cl, const Constraint& c);
std::string print_ground_term(const ClauseSet& set, const GroundTerm& t);

//   clocks x y
//   loc l0 init inv x <= 2
//   loc l1
//   trans l0 -> l1 guard x >= 1 && x - y < 2 reset {x}
TimedAutomaton parse_ta(std::string_view text);
std::string print_ta(const TimedAutomaton& a);
std::string print_clock_constraint(const TimedAutomaton& a, const ClockConstraint& cc);

// "loc:cc", e.g. "l1:x >= 1 && y < 1"; a bare location means cc = true.
ReachQuery parse_goal(const TimedAutomaton& a, std::string_view goal);

std::string read_file(const std::string& path);

}  // namespace bsrbd
