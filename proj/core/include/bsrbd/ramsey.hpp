// Finite, constructive Ramsey arguments: monochromatic subsets for colorings
// of ascending tuples, of products of ascending tuples, and of tuples mapped
// through fixed index patterns; plus the uniform-model rebuilds that use them.
//
// The constructions are not given input-size bounds. They run on whatever
// they get and throw InsufficientInput naming the stage that came up short.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bsrbd/eval.hpp"
#include "bsrbd/model.hpp"
#include "bsrbd/normalize.hpp"
#include "bsrbd/rational.hpp"

namespace bsrbd {

using Color = std::uint64_t;

struct ColoringOracle {
  std::function<Color(std::span<const Rational>)> color;
  Color palette = 1;  // every color is below this
};

// Human-readable record of the shrinking steps, one line each.
using RamseyTrace = std::vector<std::string>;

// Q of size n inside the strictly ascending r on whose ascending m-tuples chi
// is constant. n < m returns the first n elements.
std::vector<Rational> mono_ascending(std::span<const Rational> r, std::uint32_t m, std::size_t n,
                                     const ColoringOracle& chi, RamseyTrace* trace = nullptr);

// Q_1..Q_p with chi(t_1, ..., t_p) constant over ascending m-tuples t_i from
// Q_i; chi sees the p*m values concatenated.
std::vector<std::vector<Rational>> mono_product(const std::vector<std::vector<Rational>>& rs, std::uint32_t m,
                                                std::size_t n, const ColoringOracle& chi,
                                                RamseyTrace* trace = nullptr);

// (k, l): the l-th entry of the ascending tuple drawn from block k, or the
// fixed real q_{k-p} when k >= p (then l = 0).
using RhoMap = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

// Every map [m] -> [p+K] x [m] with fixed-real targets using l = 0, in
// lexicographic order.
std::vector<RhoMap> rho_maps(std::uint32_t m, std::size_t p, std::size_t k);

// The m-tuple selected by rho from ascending tuples t (p*m values
// concatenated) and the fixed reals q.
std::vector<Rational> apply_rho(const RhoMap& rho, std::uint32_t m, std::span<const Rational> t,
                                std::span<const Rational> q);

// Q_1..Q_p such that for each rho the color of apply_rho over ascending
// m-tuples from the Q_i is constant.
std::vector<std::vector<Rational>> mono_mapped(const std::vector<std::vector<Rational>>& rs,
                                               std::span<const Rational> q, std::uint32_t m, std::size_t n,
                                               const ColoringOracle& chi, RamseyTrace* trace = nullptr);

// Base-variable bound used by the rebuilds: the most base variables in one
// clause, at least the base arity.
std::size_t rebuild_lambda(const NormalizedClauseSet& n);

struct UniformRebuild {
  std::vector<Rational> points;               // SLR: J; BD: empty
  std::vector<std::vector<Rational>> blocks;  // SLR: Q_i per open interval; BD: one block, Q
  std::vector<Rational> q_hat;                // BD: q + k for k in [-kappa-1, kappa]
  InterpretationDescriptor model;
};

// a must be a model of n with free elements named by free constants. Samples
// `samples` reals per open interval of J (gamma and the rationals of n),
// shrinks them with mono_mapped under the coloring induced by a, and reads
// the uniform model off representatives built from the result.
UniformRebuild rebuild_uniform_slr(const NormalizedClauseSet& n, const Structure& a, std::size_t samples,
                                   RamseyTrace* trace = nullptr);

// BD counterpart: fractional parts sampled from (0, 1), shrunk with
// mono_ascending under the coloring that lists a's colors on every
// (rho, sigma) image, 0 added, and representatives taken from q + k.
UniformRebuild rebuild_uniform_bd(const NormalizedClauseSet& n, const Structure& a, std::size_t samples,
                                  RamseyTrace* trace = nullptr);

// Worked example for the CLI; a seed adds a run on a pseudo-random
// two-coloring of pairs.
RamseyTrace ramsey_demo(std::optional<std::uint64_t> seed = {});

}  // namespace bsrbd
