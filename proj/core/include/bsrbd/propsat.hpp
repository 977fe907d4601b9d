// A small conflict-driven clause-learning SAT solver for the ground
// instances produced by the decision procedures.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace bsrbd {

// Literals in DIMACS convention: +v or -v for variable v >= 1.
using Lit = std::int32_t;

struct PropInstance {
  std::uint32_t num_vars = 0;
  std::vector<Lit> lits;                // all clauses back to back
  std::vector<std::uint32_t> starts{0};  // clause i is lits[starts[i], starts[i+1])

  std::size_t num_clauses() const { return starts.size() - 1; }
  std::span<const Lit> clause(std::size_t i) const {
    return {lits.data() + starts[i], lits.data() + starts[i + 1]};
  }
  void add_clause(std::span<const Lit> c);
};

struct SatStats {
  std::uint64_t decisions = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t propagations = 0;
};

// A total assignment indexed by variable (entry 0 unused), or nullopt when
// unsatisfiable. Deterministic; undecided variables default to false.
std::optional<std::vector<bool>> prop_solve(const PropInstance& inst, SatStats* stats = nullptr);

bool satisfies(const PropInstance& inst, const std::vector<bool>& model);

}  // namespace bsrbd
