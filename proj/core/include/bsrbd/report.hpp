// Solver results as text: a human layout and a line-oriented "key: value"
// layout for scripts and tests.
#pragma once

#include <optional>
#include <string>

#include "bsrbd/decide.hpp"

namespace bsrbd {

enum class Status : std::uint8_t { Sat, Unsat, Error };

std::string_view to_string(Status s);

struct ResultReport {
  Status status = Status::Error;
  std::optional<InterpretationDescriptor> model;  // iff Sat
  DecideStats stats;
  ClauseSet signature;     // names for the model dump; clauses unused
  std::string error_kind;  // Error only, e.g. "resource-limit"
  std::string error;
};

ResultReport make_report(const NormalizedClauseSet& n, const DecideResult& r);
ResultReport error_report(std::string kind, std::string message);

enum class OutputFormat : std::uint8_t { Human, Structured };

// Statistics are always present; the model only for Sat.
std::string emit_result(const ResultReport& r, OutputFormat f);

}  // namespace bsrbd
