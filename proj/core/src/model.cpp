#include "bsrbd/model.hpp"

#include <algorithm>

namespace bsrbd {

std::uint32_t ClassTable::intern(const RegionClass& c) {
  auto [it, fresh] = ids_.emplace(c, static_cast<std::uint32_t>(classes_.size()));
  if (fresh) classes_.push_back(c);
  return it->second;
}

std::optional<std::uint32_t> ClassTable::find(const RegionClass& c) const {
  auto it = ids_.find(c);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

bool InterpretationDescriptor::value(PredId p, std::span<const std::uint32_t> args,
                                     std::span<const Rational> base) const {
  auto id = classes.find(scheme.class_of(base));
  if (!id) return false;
  auto it = table.find(PropAtom{p, std::vector<std::uint32_t>(args.begin(), args.end()), *id});
  return it != table.end() && it->second;
}

ClassFilter lambda_filter(const Clause& cl, const RegionScheme& scheme, std::span<const Rational> gamma) {
  // constraints grouped by the coordinate that completes them; ground ones
  // are checked together with the first coordinate
  std::vector<std::vector<const Constraint*>> due(std::max<std::size_t>(cl.base_vars.size(), 1));
  for (const auto& c : cl.constraints) {
    std::size_t last = 0;
    for (VarId v : constraint_vars(c)) last = std::max<std::size_t>(last, v);
    due[last].push_back(&c);
  }
  return [due = std::move(due), &scheme, gamma](const RegionClass& partial) {
    const auto& checks = due[arity(partial) - 1];
    if (checks.empty()) return true;
    const auto rep = scheme.representative(partial);
    for (const Constraint* c : checks)
      if (!eval_constraint(*c, rep, gamma)) return false;
    return true;
  };
}

namespace {

bool verify_clause(const Clause& cl, const InterpretationDescriptor& m, VerifyScope scope) {
  const DescriptorStructure st(m);
  const std::size_t nb = cl.base_vars.size(), nf = cl.free_vars.size();
  bool ok = true;
  auto check = [&](std::span<const Rational> base) {
    for_each_tuple(m.domain, nf, [&](std::span<const std::uint32_t> free) {
      if (!ok) return;
      Assignment a{std::vector<Rational>(base.begin(), base.end()), std::vector<std::uint32_t>(free.begin(), free.end())};
      if (!eval_clause(cl, st, a)) ok = false;
    });
  };
  if (nb == 0) {
    check({});
    return ok;
  }
  auto visit = [&](const RegionClass& c) {
    check(m.scheme.representative(c));
    return ok;
  };
  if (scope == VerifyScope::Feasible) enumerate_classes(m.scheme, static_cast<std::uint32_t>(nb), lambda_filter(cl, m.scheme, m.gamma), visit);
  else enumerate_classes(m.scheme, static_cast<std::uint32_t>(nb), visit);
  return ok;
}

}  // namespace

bool verify_model(const NormalizedClauseSet& n, const InterpretationDescriptor& m, VerifyScope scope) {
  if (m.domain.empty()) return false;
  for (std::uint32_t v : m.fconst_value)
    if (std::find(m.domain.begin(), m.domain.end(), v) == m.domain.end()) return false;
  for (const auto& cl : n.defs)
    if (!verify_clause(cl, m, scope)) return false;
  for (const auto& cl : n.set.clauses)
    if (!verify_clause(cl, m, scope)) return false;
  return true;
}

}  // namespace bsrbd
