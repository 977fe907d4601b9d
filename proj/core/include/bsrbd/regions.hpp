// Finite encodings of the three region equivalences over real k-tuples:
// ~J (interval membership and value order relative to a set of points),
// the bounded relation over (-kappa-1, kappa+1)^k and its unbounded
// counterpart over R^k.
#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "bsrbd/rational.hpp"

namespace bsrbd {

// Sequence of disjoint nonempty coordinate sets; each set sorted ascending.
using OrderedPartition = std::vector<std::vector<std::uint32_t>>;

// Intervals cut out of R by ascending points r_1 < ... < r_p, indexed
// 0..2p: even 2i is the open interval (r_i, r_{i+1}) (with r_0 = -inf and
// r_{p+1} = +inf), odd 2i+1 is the point interval [r_{i+1}, r_{i+1}].
struct PartitionJ {
  std::vector<Rational> points;

  explicit PartitionJ(std::vector<Rational> pts = {});
  std::uint32_t interval_count() const { return static_cast<std::uint32_t>(2 * points.size() + 1); }
  std::uint32_t interval_of(const Rational& r) const;
  static bool is_point(std::uint32_t interval) { return interval % 2 == 1; }
  std::string interval_name(std::uint32_t interval) const;
};

struct SlrBlock {
  std::uint32_t interval;
  std::vector<std::uint32_t> coords;
  friend bool operator==(const SlrBlock&, const SlrBlock&) = default;
  friend auto operator<=>(const SlrBlock&, const SlrBlock&) = default;
};

// Blocks ascend by value; coordinates inside one block are equal.
struct SlrClass {
  std::uint32_t arity = 0;
  std::vector<SlrBlock> blocks;
  friend bool operator==(const SlrClass&, const SlrClass&) = default;
  friend auto operator<=>(const SlrClass&, const SlrClass&) = default;
};

struct BdBoundedClass {
  std::int64_t kappa = 1;
  std::vector<std::int64_t> floors;
  // Coordinates by ascending fractional part; when zero_first holds the
  // first block is exactly the set of coordinates with fractional part 0.
  OrderedPartition fr;
  bool zero_first = false;

  std::uint32_t arity() const { return static_cast<std::uint32_t>(floors.size()); }
  bool fr_zero(std::uint32_t i) const;
  friend bool operator==(const BdBoundedClass&, const BdBoundedClass&) = default;
  friend auto operator<=>(const BdBoundedClass&, const BdBoundedClass&) = default;
};

enum class Bucket : std::uint8_t { Below, In, Above };

struct BdUnboundedClass {
  std::int64_t kappa = 1;
  std::vector<Bucket> buckets;
  std::vector<std::int64_t> floors;  // 0 unless the coordinate is In
  OrderedPartition below;            // Below coordinates by ascending value
  OrderedPartition above;            // Above coordinates by ascending value
  OrderedPartition in_fr;            // In coordinates by ascending fractional part
  bool zero_first = false;

  std::uint32_t arity() const { return static_cast<std::uint32_t>(buckets.size()); }
  friend bool operator==(const BdUnboundedClass&, const BdUnboundedClass&) = default;
  friend auto operator<=>(const BdUnboundedClass&, const BdUnboundedClass&) = default;
};

using RegionClass = std::variant<SlrClass, BdBoundedClass, BdUnboundedClass>;

SlrClass class_of_slr(std::span<const Rational> t, const PartitionJ& j);
BdBoundedClass class_of_bd_bounded(std::span<const Rational> t, std::int64_t kappa);  // throws OutOfRange
BdUnboundedClass class_of_bd_unbounded(std::span<const Rational> t, std::int64_t kappa);

std::vector<Rational> representative(const SlrClass& c, const PartitionJ& j);
std::vector<Rational> representative(const BdBoundedClass& c);
std::vector<Rational> representative(const BdUnboundedClass& c);

// Class of (t[idx[0]], ..., t[idx[m-1]]) for any t in c.
SlrClass select_class(const SlrClass& c, std::span<const std::uint32_t> idx);
BdBoundedClass select_class(const BdBoundedClass& c, std::span<const std::uint32_t> idx);
BdUnboundedClass select_class(const BdUnboundedClass& c, std::span<const std::uint32_t> idx);

// (rho, sigma) view of a bounded class: rho(i) is the rank of i's
// fractional part (0 for fractional part zero, nonzero ranks from 1), sigma
// its floor. Applying it to 0 = r_0 < r_1 < ... < r_k < 1 gives a member.
struct RhoSigma {
  std::vector<std::uint32_t> rho;
  std::vector<std::int64_t> sigma;
};
RhoSigma rho_sigma(const BdBoundedClass& c);
std::vector<Rational> apply_rho_sigma(const RhoSigma& rs, std::span<const Rational> ladder);

std::string describe(const SlrClass& c, const PartitionJ& j);
std::string describe(const BdBoundedClass& c);
std::string describe(const BdUnboundedClass& c);

// One of the three equivalences together with its parameters.
struct RegionScheme {
  enum class Kind : std::uint8_t { Slr, Bounded, Unbounded };
  Kind kind = Kind::Unbounded;
  PartitionJ points;
  std::int64_t kappa = 1;

  static RegionScheme slr(PartitionJ j);
  static RegionScheme bounded(std::int64_t kappa);
  static RegionScheme unbounded(std::int64_t kappa);

  RegionClass class_of(std::span<const Rational> t) const;
  std::vector<Rational> representative(const RegionClass& c) const;
  std::string describe(const RegionClass& c) const;
};

RegionClass select_class(const RegionClass& c, std::span<const std::uint32_t> idx);
std::uint32_t arity(const RegionClass& c);

// Builds classes of arity k coordinate by coordinate. After coordinate i is
// placed, keep(partial) sees the class restricted to coordinates 0..i; a
// false answer cuts the subtree. visit receives every complete class exactly
// once, in a fixed order; returning false stops the enumeration.
using ClassFilter = std::function<bool(const RegionClass&)>;
void enumerate_classes(const RegionScheme& s, std::uint32_t k, const ClassFilter& keep,
                       const std::function<bool(const RegionClass&)>& visit);
void enumerate_classes(const RegionScheme& s, std::uint32_t k, const std::function<bool(const RegionClass&)>& visit);
std::uint64_t count_classes(const RegionScheme& s, std::uint32_t k);

}  // namespace bsrbd
