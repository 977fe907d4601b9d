// Direct evaluation of constraints and clauses under explicit assignments.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bsrbd/syntax.hpp"

namespace bsrbd {

// Values for the clause-local variables: base variables by VarId, free
// variables by VarId as domain elements.
struct Assignment {
  std::vector<Rational> base;
  std::vector<std::uint32_t> free;
};

// What eval_clause needs from an interpretation. Free-sort domain elements
// are small integers.
class Structure {
 public:
  virtual ~Structure() = default;
  virtual std::uint32_t free_constant(ConstId c) const = 0;
  virtual std::span<const Rational> skolem_values() const = 0;
  virtual bool holds(PredId p, std::span<const std::uint32_t> free_args,
                     std::span<const Rational> base_args) const = 0;
};

// Throws UnboundSymbol when a Skolem constant has no value.
Rational eval_term(const GroundTerm& t, std::span<const Rational> skolems);

// Throws UnboundSymbol when a variable or Skolem constant is missing.
bool eval_constraint(const Constraint& c, std::span<const Rational> base, std::span<const Rational> skolems);

bool eval_lambda(const Clause& cl, std::span<const Rational> base, std::span<const Rational> skolems);

bool eval_atom(const FreeAtom& a, const Structure& s, const Assignment& asg);

// (/\ Lambda /\ /\ Gamma) -> \/ Delta.
bool eval_clause(const Clause& cl, const Structure& s, const Assignment& asg);

}  // namespace bsrbd
