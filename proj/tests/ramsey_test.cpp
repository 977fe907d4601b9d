#include <gtest/gtest.h>

#include <map>

#include "bsrbd/decide.hpp"
#include "bsrbd/error.hpp"
#include "bsrbd/frontend.hpp"
#include "bsrbd/ramsey.hpp"
#include "support/hand_models.hpp"
#include "support/ramsey_check.hpp"

namespace bsrbd {
namespace {

std::vector<Rational> range(int lo, int hi) {
  std::vector<Rational> v;
  for (int i = lo; i <= hi; ++i) v.push_back(Rational(i));
  return v;
}

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::int64_t as_int(const Rational& r) { return to_int64(r.floor()); }

// Pseudo-random color of a tuple of integers.
ColoringOracle random_coloring(std::uint64_t seed, Color palette) {
  return {[seed, palette](std::span<const Rational> t) {
            std::uint64_t h = seed;
            for (const auto& x : t) h = mix(h ^ static_cast<std::uint64_t>(as_int(x)));
            return h % palette;
          },
          palette};
}

// Pseudo-random color depending only on each value's residue mod 2, so
// derived colorings stay small.
ColoringOracle residue_coloring(std::uint64_t seed, Color palette) {
  return {[seed, palette](std::span<const Rational> t) {
            std::uint64_t h = seed;
            for (const auto& x : t) h = mix(h ^ static_cast<std::uint64_t>(as_int(x) & 1));
            return h % palette;
          },
          palette};
}

ColoringOracle constant() {
  return {[](std::span<const Rational>) -> Color { return 0; }, 1};
}

TEST(MonoAscending, ConstantFirstN) {
  EXPECT_EQ(mono_ascending(range(1, 5), 1, 3, constant()), range(1, 3));
  EXPECT_EQ(mono_ascending(range(1, 5), 2, 3, constant()), range(1, 3));
}

TEST(MonoAscending, ParityOfGap) {
  ColoringOracle parity{[](std::span<const Rational> t) { return static_cast<Color>(as_int(t[1] - t[0]) & 1); }, 2};
  const auto q = mono_ascending(range(1, 20), 2, 3, parity);
  ASSERT_EQ(q.size(), 3u);
  EXPECT_TRUE(ramsey_check::mono_ascending(q, 2, parity.color));
  for (std::size_t i = 1; i < q.size(); ++i) EXPECT_LT(q[i - 1], q[i]);
}

TEST(MonoAscending, FewerThanArity) {
  EXPECT_EQ(mono_ascending(range(1, 4), 3, 2, random_coloring(1, 3)), range(1, 2));
}

TEST(MonoAscending, Errors) {
  EXPECT_THROW(mono_ascending(range(1, 2), 1, 3, constant()), InsufficientInput);
  // two colors alternating: no three of one color among four
  ColoringOracle alt{[](std::span<const Rational> t) { return static_cast<Color>(as_int(t[0]) & 1); }, 2};
  EXPECT_THROW(mono_ascending(range(1, 4), 1, 3, alt), InsufficientInput);
  std::vector<Rational> unsorted{Rational(2), Rational(1)};
  EXPECT_THROW(mono_ascending(unsorted, 1, 1, constant()), Error);
  ColoringOracle bad{[](std::span<const Rational>) -> Color { return 5; }, 2};
  EXPECT_THROW(mono_ascending(range(1, 4), 1, 1, bad), Error);
}

TEST(MonoAscending, ExhaustiveSmall) {
  // the construction keeps at least log_|C| |R| sequence elements, then
  // needs n of one color among them
  for (std::uint32_t m = 1; m <= 2; ++m)
    for (std::size_t n = 1; n <= 3; ++n)
      for (Color c = 1; c <= 3; ++c)
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
          std::size_t need = c * (n - 1) + 1;
          int size = static_cast<int>(need);
          if (m == 2) {
            size = 1;
            for (std::size_t i = 0; i < need; ++i) size *= static_cast<int>(c);
            size = std::max(size, static_cast<int>(n)) + 1;
          }
          const auto chi = random_coloring(seed * 31 + c, c);
          const auto q = mono_ascending(range(1, size), m, n, chi);
          ASSERT_EQ(q.size(), n);
          EXPECT_TRUE(ramsey_check::mono_ascending(q, m, chi.color)) << "m=" << m << " n=" << n << " c=" << c;
        }
}

TEST(MonoAscending, Deterministic) {
  const auto chi = random_coloring(77, 3);
  EXPECT_EQ(mono_ascending(range(1, 200), 2, 3, chi), mono_ascending(range(1, 200), 2, 3, chi));
  RamseyTrace a, b;
  mono_ascending(range(1, 200), 2, 3, chi, &a);
  mono_ascending(range(1, 200), 2, 3, chi, &b);
  EXPECT_EQ(a, b);
  EXPECT_FALSE(a.empty());
}

TEST(MonoProduct, SingleBlockDelegates) {
  const auto chi = random_coloring(5, 2);
  const auto q = mono_product({range(1, 40)}, 2, 3, chi);
  ASSERT_EQ(q.size(), 1u);
  EXPECT_EQ(q[0], mono_ascending(range(1, 40), 2, 3, chi));
}

TEST(MonoProduct, FirstBlockOnly) {
  ColoringOracle chi{[](std::span<const Rational> t) { return static_cast<Color>(as_int(t[0]) % 3); }, 3};
  const auto q = mono_product({range(1, 9), range(10, 15)}, 1, 2, chi);
  ASSERT_EQ(q.size(), 2u);
  // the second block is one class
  EXPECT_EQ(q[1], range(10, 11));
  EXPECT_TRUE(ramsey_check::mono_product(q, 1, chi.color));
}

TEST(MonoProduct, ConstantFirstN) {
  const auto q = mono_product({range(1, 5), range(6, 10), range(11, 15)}, 2, 3, constant());
  EXPECT_EQ(q, (std::vector<std::vector<Rational>>{range(1, 3), range(6, 8), range(11, 13)}));
}

TEST(MonoProduct, ExhaustiveSmall) {
  for (std::uint32_t m = 1; m <= 2; ++m)
    for (std::size_t n = 1; n <= 3; ++n)
      for (Color c = 1; c <= 3; ++c)
        for (std::size_t p = 1; p <= 2; ++p)
          for (std::uint64_t seed = 0; seed < 3; ++seed) {
            std::vector<std::vector<Rational>> rs;
            for (std::size_t b = 0; b < p; ++b) rs.push_back(range(static_cast<int>(20 * b + 1), static_cast<int>(20 * b + 12)));
            const auto chi = residue_coloring(seed * 7 + c, c);
            const auto q = mono_product(rs, m, n, chi);
            ASSERT_EQ(q.size(), p);
            for (const auto& b : q) ASSERT_EQ(b.size(), n);
            EXPECT_TRUE(ramsey_check::mono_product(q, m, chi.color)) << "m=" << m << " n=" << n << " p=" << p;
          }
}

TEST(MonoProduct, Deterministic) {
  const auto chi = residue_coloring(3, 3);
  const std::vector<std::vector<Rational>> rs{range(1, 12), range(21, 32)};
  EXPECT_EQ(mono_product(rs, 2, 3, chi), mono_product(rs, 2, 3, chi));
}

TEST(RhoMaps, Counts) {
  for (std::uint32_t m = 1; m <= 3; ++m)
    for (std::size_t p = 1; p <= 3; ++p)
      for (std::size_t k = 0; k <= 2; ++k) {
        const auto maps = rho_maps(m, p, k);
        std::size_t expect = 1;
        for (std::uint32_t i = 0; i < m; ++i) expect *= p * m + k;
        EXPECT_EQ(maps.size(), expect);
        for (const auto& r : maps)
          for (const auto& [blk, l] : r)
            if (blk >= p) EXPECT_EQ(l, 0u);
      }
}

TEST(MonoMapped, ReducesToAscending) {
  const auto chi = random_coloring(11, 3);
  const auto q = mono_mapped({range(1, 30)}, {}, 1, 3, chi);
  EXPECT_EQ(q[0], mono_ascending(range(1, 30), 1, 3, chi));
}

TEST(MonoMapped, FixedPositionsOnly) {
  // colors depend only on the fixed real
  ColoringOracle chi{[](std::span<const Rational> t) { return static_cast<Color>(t[0] == Rational(0) ? 1 : 0); }, 2};
  const std::vector<Rational> fixed{Rational(0)};
  const auto q = mono_mapped({range(1, 6)}, fixed, 1, 2, chi);
  EXPECT_EQ(q[0], range(1, 2));
  EXPECT_TRUE(ramsey_check::mono_mapped(q, fixed, 1, chi.color));
}

TEST(MonoMapped, ExhaustiveSmall) {
  for (std::uint32_t m = 1; m <= 2; ++m)
    for (std::size_t n = 1; n <= 3; ++n)
      for (Color c = 1; c <= 3; ++c)
        for (std::size_t k = 0; k <= 1; ++k)
          for (std::uint64_t seed = 0; seed < 2; ++seed) {
            std::vector<Rational> fixed;
            if (k) fixed.push_back(Rational(100));
            const auto chi = residue_coloring(seed * 13 + c, c);
            const auto q = mono_mapped({range(1, 12), range(21, 32)}, fixed, m, n, chi);
            for (const auto& b : q) ASSERT_EQ(b.size(), n);
            EXPECT_TRUE(ramsey_check::mono_mapped(q, fixed, m, chi.color)) << "m=" << m << " n=" << n << " k=" << k;
          }
}

TEST(MonoMapped, InsufficientNamesStage) {
  const auto chi = random_coloring(9, 3);
  try {
    mono_mapped({range(1, 6), range(11, 16)}, {}, 2, 3, chi);
    FAIL() << "expected InsufficientInput";
  } catch (const InsufficientInput& e) {
    EXPECT_NE(std::string(e.what()).find("block"), std::string::npos);
  }
}

TEST(RamseyCheck, CatchesCounterexample) {
  ColoringOracle parity{[](std::span<const Rational> t) { return static_cast<Color>(as_int(t[0]) & 1); }, 2};
  EXPECT_FALSE(ramsey_check::mono_ascending(range(1, 3), 1, parity.color));
  EXPECT_FALSE(ramsey_check::mono_product({range(2, 2), range(3, 4)}, 1, [](std::span<const Rational> t) {
    return static_cast<Color>(as_int(t[1]) & 1);
  }));
  EXPECT_FALSE(ramsey_check::mono_mapped({range(2, 3)}, {Rational(1)}, 1, parity.color));
}

TEST(UniformRebuild, Slr) {
  for (const auto& c : hand::slr_cases()) {
    ASSERT_TRUE(hand::model_on_grid(c.n, c.a, c.grid)) << c.name;
    const auto r = rebuild_uniform_slr(c.n, c.a, c.samples);
    const std::size_t lam = rebuild_lambda(c.n);
    for (const auto& blk : r.blocks) EXPECT_EQ(blk.size(), lam) << c.name;
    const auto o = hand::check_slr(c, r);
    EXPECT_TRUE(o.hypothesis) << c.name;
    EXPECT_TRUE(o.verifies) << c.name;
    EXPECT_EQ(rebuild_uniform_slr(c.n, c.a, c.samples).blocks, r.blocks) << c.name;
  }
  EXPECT_EQ(rebuild_uniform_slr(hand::slr_cases()[0].n, hand::slr_cases()[0].a, 4).points,
            (std::vector<Rational>{Rational(1), Rational(2)}));
}

TEST(UniformRebuild, BdHatConstruction) {
  const auto c = hand::bd_case();
  ASSERT_EQ(bd_kappa(c.n.set), 1);
  ASSERT_EQ(rebuild_lambda(c.n), 2u);
  ASSERT_TRUE(hand::model_on_grid(c.n, c.a, c.grid));
  const auto r = rebuild_uniform_bd(c.n, c.a, c.samples);
  ASSERT_EQ(r.blocks.size(), 1u);
  const auto& q = r.blocks[0];
  EXPECT_EQ(q.size(), 3u);
  EXPECT_EQ(q[0], Rational(0));
  EXPECT_EQ(r.q_hat.size(), 4 * q.size());
  const auto o = hand::check_bd(c, r);
  EXPECT_TRUE(o.hypothesis);
  EXPECT_TRUE(o.verifies);
}

TEST(UniformRebuild, SourceModelIsNotUniform) {
  // the rebuild has something to do: the hand models differ on equivalent tuples
  const auto c = hand::slr_cases()[0];
  const PartitionJ j({Rational(1), Rational(2)});
  const std::vector<Rational> x{Rational(BigInt(9), BigInt(8))}, y{Rational(BigInt(10), BigInt(8))};
  ASSERT_EQ(class_of_slr(x, j), class_of_slr(y, j));
  EXPECT_NE(hand::facts(c.a, x), hand::facts(c.a, y));
}

TEST(RamseyDemo, Trace) {
  const auto t = ramsey_demo();
  ASSERT_GE(t.size(), 6u);
  EXPECT_EQ(t, ramsey_demo());
}

}  // namespace
}  // namespace bsrbd
