// Finite descriptions of uniform interpretations and their verification.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "bsrbd/eval.hpp"
#include "bsrbd/normalize.hpp"
#include "bsrbd/regions.hpp"

namespace bsrbd {

// One bit of the predicate table: P applied to domain elements and to any
// base tuple in class cls.
struct PropAtom {
  PredId pred;
  std::vector<std::uint32_t> args;
  std::uint32_t cls;
  friend auto operator<=>(const PropAtom&, const PropAtom&) = default;
  friend bool operator==(const PropAtom&, const PropAtom&) = default;
};

// Interns region classes; ids are dense and follow first interning.
class ClassTable {
 public:
  std::uint32_t intern(const RegionClass& c);
  std::optional<std::uint32_t> find(const RegionClass& c) const;
  const RegionClass& at(std::uint32_t id) const { return classes_[id]; }
  std::size_t size() const { return classes_.size(); }

 private:
  std::vector<RegionClass> classes_;
  std::map<RegionClass, std::uint32_t> ids_;
};

// Domain elements are named by free constants: element e is the ConstId of
// the constant chosen to stand for it.
struct InterpretationDescriptor {
  Mode mode = Mode::BD;
  RegionScheme scheme;
  std::vector<std::uint32_t> domain;
  std::vector<std::uint32_t> fconst_value;  // by ConstId, each in domain
  std::vector<Rational> gamma;              // by SkolemId (SLR)
  ClassTable classes;
  std::map<PropAtom, bool> table;           // absent entries are false

  bool value(PredId p, std::span<const std::uint32_t> args, std::span<const Rational> base) const;
};

// Structure view of an interpretation for eval_clause.
class DescriptorStructure : public Structure {
 public:
  explicit DescriptorStructure(const InterpretationDescriptor& d) : d_(d) {}
  std::uint32_t free_constant(ConstId c) const override { return d_.fconst_value.at(c); }
  std::span<const Rational> skolem_values() const override { return d_.gamma; }
  bool holds(PredId p, std::span<const std::uint32_t> free_args, std::span<const Rational> base_args) const override {
    return d_.value(p, free_args, base_args);
  }

 private:
  const InterpretationDescriptor& d_;
};

// Keeps a partial class (coordinates 0..i placed) unless some constraint
// whose variables are all placed fails on its representative.
ClassFilter lambda_filter(const Clause& cl, const RegionScheme& scheme, std::span<const Rational> gamma);

enum class VerifyScope : std::uint8_t {
  Feasible,    // only classes on which the constraint part can hold
  Exhaustive,  // every class of every clause
};

// Evaluates every clause (definitions included) on every free assignment and
// every class representative of its base variables.
bool verify_model(const NormalizedClauseSet& n, const InterpretationDescriptor& m,
                  VerifyScope scope = VerifyScope::Feasible);

// Calls f(assignment) for every tuple in domain^k, lexicographically.
template <class F>
void for_each_tuple(std::span<const std::uint32_t> domain, std::size_t k, F&& f) {
  std::vector<std::uint32_t> t(k);
  std::vector<std::size_t> idx(k, 0);
  if (domain.empty() && k > 0) return;
  while (true) {
    for (std::size_t i = 0; i < k; ++i) t[i] = domain[idx[i]];
    f(std::span<const std::uint32_t>(t));
    std::size_t i = k;
    while (i > 0 && ++idx[i - 1] == domain.size()) idx[--i] = 0;
    if (i == 0) return;
  }
}

}  // namespace bsrbd
