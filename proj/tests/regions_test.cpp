#include <gtest/gtest.h>

#include <random>
#include <set>

#include "bsrbd/error.hpp"
#include "bsrbd/regions.hpp"
#include "support/grid.hpp"
#include "support/oracles.hpp"

namespace bsrbd {
namespace {

Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

TEST(Slr, ClassOfExamples) {
  PartitionJ j({q(0)});
  auto c = class_of_slr(std::vector<Rational>{q(0), q(0)}, j);
  ASSERT_EQ(c.blocks.size(), 1u);
  EXPECT_EQ(c.blocks[0].interval, 1u);

  auto d = class_of_slr(std::vector<Rational>{q(-1), q(1)}, j);
  ASSERT_EQ(d.blocks.size(), 2u);
  EXPECT_EQ(d.blocks[0].interval, 0u);
  EXPECT_EQ(d.blocks[1].interval, 2u);

  PartitionJ j2({q(0), q(1)});
  auto e = class_of_slr(std::vector<Rational>{q(1, 2), q(1, 2), q(2)}, j2);
  ASSERT_EQ(e.blocks.size(), 2u);
  EXPECT_EQ(e.blocks[0].coords, (std::vector<std::uint32_t>{0, 1}));
  EXPECT_EQ(e.blocks[0].interval, 2u);
  EXPECT_EQ(e.blocks[1].coords, (std::vector<std::uint32_t>{2}));
  EXPECT_EQ(e.blocks[1].interval, 4u);
}

TEST(Slr, RepresentativeMidpoint) {
  PartitionJ j({q(0), q(1)});
  SlrClass c{1, {SlrBlock{2, {0}}}};
  EXPECT_EQ(representative(c, j), std::vector<Rational>{q(1, 2)});
}

TEST(Bd, ClassOfExamples) {
  auto c = class_of_bd_bounded(std::vector<Rational>{q(0), q(0)}, 1);
  EXPECT_EQ(c.floors, (std::vector<std::int64_t>{0, 0}));
  EXPECT_TRUE(c.zero_first);
  EXPECT_EQ(c.fr.size(), 1u);

  EXPECT_EQ(class_of_bd_bounded(std::vector<Rational>{q(1, 2), q(1, 2)}, 1),
            class_of_bd_bounded(std::vector<Rational>{q(1, 4), q(1, 4)}, 1));

  auto u = class_of_bd_unbounded(std::vector<Rational>{q(5), q(-3)}, 1);
  EXPECT_EQ(u.buckets, (std::vector<Bucket>{Bucket::Above, Bucket::Below}));

  EXPECT_THROW(class_of_bd_bounded(std::vector<Rational>{q(2)}, 1), OutOfRange);
  EXPECT_THROW(class_of_bd_bounded(std::vector<Rational>{q(-2)}, 1), OutOfRange);
}

TEST(Bd, BoundaryValuesAreIn) {
  auto u = class_of_bd_unbounded(std::vector<Rational>{q(1), q(-1)}, 1);
  EXPECT_EQ(u.buckets, (std::vector<Bucket>{Bucket::In, Bucket::In}));
}

TEST(Bd, RepresentativeExamples) {
  BdBoundedClass z;
  z.kappa = 1;
  z.floors = {0, 0};
  z.fr = {{0, 1}};
  z.zero_first = true;
  EXPECT_EQ(representative(z), (std::vector<Rational>{q(0), q(0)}));

  BdUnboundedClass u;
  u.kappa = 1;
  u.buckets = {Bucket::Above, Bucket::In};
  u.floors = {0, 0};
  u.above = {{0}};
  u.in_fr = {{1}};
  auto r = representative(u);
  EXPECT_EQ(r, (std::vector<Rational>{q(9, 4), q(1, 2)}));
  EXPECT_LT(fr(r[0]), fr(r[1]));
  EXPECT_EQ(class_of_bd_unbounded(r, 1), u);
}

// Fractional parts on representatives ascend Below, Above, In. In
// coordinates that are integers are exempt: their fractional part is 0.
TEST(Bd, RepresentativeFractionalOrdering) {
  for (std::uint32_t k = 1; k <= 3; ++k) {
    enumerate_classes(RegionScheme::unbounded(1), k, [&](const RegionClass& rc) {
      const auto& c = std::get<BdUnboundedClass>(rc);
      auto r = representative(c);
      for (std::uint32_t a = 0; a < k; ++a)
        for (std::uint32_t b = 0; b < k; ++b) {
          auto rank = [&](std::uint32_t i) { return static_cast<int>(c.buckets[i]); };
          // Below = 0, In = 1, Above = 2 in the enum; the required order is Below, Above, In.
          auto order = [&](std::uint32_t i) { return rank(i) == 0 ? 0 : (rank(i) == 2 ? 1 : 2); };
          if (order(a) < order(b) && !fr(r[b]).is_zero()) {
            EXPECT_LT(fr(r[a]), fr(r[b])) << describe(c);
          }
        }
      return true;
    });
  }
}

TEST(Enumerate, SmallCounts) {
  EXPECT_EQ(count_classes(RegionScheme::slr(PartitionJ({q(0)})), 1), 3u);
  // 1-D slice over (-2, 2): floor -2 has no integer point inside.
  EXPECT_EQ(count_classes(RegionScheme::bounded(1), 1), 7u);
}

// Distinct classes met by a dense grid must equal the enumerated count, and
// every grid class must be among the enumerated ones.
template <class ClassOf>
void grid_check(const RegionScheme& s, std::uint32_t k, const std::vector<Rational>& ax, ClassOf class_of) {
  std::set<RegionClass> seen;
  grid::tuples(ax, k, [&](const std::vector<Rational>& t) { seen.insert(class_of(t)); });
  std::set<RegionClass> enumerated;
  enumerate_classes(s, k, [&](const RegionClass& c) {
    EXPECT_TRUE(enumerated.insert(c).second) << "duplicate " << s.describe(c);
    return true;
  });
  EXPECT_EQ(seen, enumerated);
}

TEST(Enumerate, GridCountsSlr) {
  for (auto pts : {std::vector<Rational>{}, {q(0)}, {q(0), q(1)}}) {
    RegionScheme s = RegionScheme::slr(PartitionJ(pts));
    for (std::uint32_t k = 1; k <= 2; ++k)
      grid_check(s, k, grid::axis(-31, 47, 16), [&](const auto& t) { return s.class_of(t); });
  }
}

TEST(Enumerate, GridCountsBd) {
  for (std::int64_t kappa = 1; kappa <= 2; ++kappa) {
    const long lim = 16 * (kappa + 1) - 1;
    for (std::uint32_t k = 1; k <= 2; ++k) {
      RegionScheme b = RegionScheme::bounded(kappa);
      grid_check(b, k, grid::axis(-lim, lim, 16), [&](const auto& t) { return b.class_of(t); });
      RegionScheme u = RegionScheme::unbounded(kappa);
      grid_check(u, k, grid::axis(-lim, lim, 16), [&](const auto& t) { return u.class_of(t); });
    }
  }
}

TEST(RoundTrip, AllSchemes) {
  std::vector<RegionScheme> schemes{RegionScheme::slr(PartitionJ()), RegionScheme::slr(PartitionJ({q(0)})),
                                    RegionScheme::slr(PartitionJ({q(0), q(1)})), RegionScheme::bounded(1),
                                    RegionScheme::bounded(2), RegionScheme::unbounded(1),
                                    RegionScheme::unbounded(2)};
  for (const auto& s : schemes)
    for (std::uint32_t k = 1; k <= 3; ++k)
      enumerate_classes(s, k, [&](const RegionClass& c) {
        EXPECT_EQ(s.class_of(s.representative(c)), c) << s.describe(c);
        return true;
      });
}

// Random tuples from a small grid so that ties happen often.
std::vector<Rational> random_tuple(std::mt19937& rng, std::uint32_t k, long lo, long hi, long den) {
  std::uniform_int_distribution<long> d(lo, hi);
  std::vector<Rational> t;
  for (std::uint32_t i = 0; i < k; ++i) t.push_back(q(d(rng), den));
  return t;
}

TEST(Equivalence, MatchesDefinitions) {
  std::mt19937 rng(3);
  std::vector<Rational> pts{q(0), q(1)};
  for (int it = 0; it < 4000; ++it) {
    const std::uint32_t k = 1 + rng() % 3;
    auto r = random_tuple(rng, k, -11, 11, 4), s = random_tuple(rng, k, -11, 11, 4);
    if (it % 3 == 0) s = r;  // make equal pairs common enough
    EXPECT_EQ(class_of_slr(r, PartitionJ(pts)) == class_of_slr(s, PartitionJ(pts)), oracle::slr_equiv(r, s, pts));
    EXPECT_EQ(class_of_bd_unbounded(r, 1) == class_of_bd_unbounded(s, 1), oracle::unbounded_equiv(r, s, 1));
    auto rb = random_tuple(rng, k, -7, 7, 4), sb = random_tuple(rng, k, -7, 7, 4);
    EXPECT_EQ(class_of_bd_bounded(rb, 1) == class_of_bd_bounded(sb, 1), oracle::bounded_equiv(rb, sb));
  }
}

// Pairs drawn from the same class of a coarse region family, perturbed, to
// hit the equivalent case often.
TEST(Equivalence, RefinementAndCoincidence) {
  std::mt19937 rng(5);
  for (int it = 0; it < 4000; ++it) {
    const std::uint32_t k = 1 + rng() % 3;
    auto r = random_tuple(rng, k, -7, 7, 4), s = random_tuple(rng, k, -7, 7, 4);
    if (it % 2 == 0)
      for (std::uint32_t i = 0; i < k; ++i) s[i] = Rational(r[i].floor(), 1) + (fr(r[i]).is_zero() ? q(0) : q(1, 2));
    const bool b = class_of_bd_bounded(r, 1) == class_of_bd_bounded(s, 1);
    const bool u = class_of_bd_unbounded(r, 1) == class_of_bd_unbounded(s, 1);
    if (b) EXPECT_TRUE(u);
    bool inner = true;
    for (std::uint32_t i = 0; i < k; ++i) inner = inner && r[i] > q(-1) && r[i] < q(1) && s[i] > q(-1) && s[i] < q(1);
    if (inner) EXPECT_EQ(b, u);
  }
}

TEST(Select, Examples) {
  BdBoundedClass c = class_of_bd_bounded(std::vector<Rational>{q(1, 4), q(1, 2)}, 1);
  std::vector<std::uint32_t> id{0, 1}, swap{1, 0}, diag{0, 0, 0};
  EXPECT_EQ(select_class(c, id), c);
  auto s = select_class(c, swap);
  auto r = representative(s);
  EXPECT_GT(fr(r[0]), fr(r[1]));
  auto d = select_class(c, diag);
  EXPECT_EQ(d.fr.size(), 1u);
  EXPECT_EQ(d.floors, (std::vector<std::int64_t>{0, 0, 0}));
}

TEST(Select, Coherence) {
  std::mt19937 rng(9);
  std::vector<RegionScheme> schemes{RegionScheme::slr(PartitionJ({q(0), q(1)})), RegionScheme::bounded(1),
                                    RegionScheme::unbounded(1)};
  for (int it = 0; it < 3000; ++it) {
    const auto& s = schemes[it % 3];
    const std::uint32_t k = 1 + rng() % 3, m = 1 + rng() % 4;
    auto t = random_tuple(rng, k, -7, 7, 4);
    std::vector<std::uint32_t> idx;
    std::vector<Rational> sel;
    for (std::uint32_t j = 0; j < m; ++j) {
      idx.push_back(rng() % k);
      sel.push_back(t[idx.back()]);
    }
    EXPECT_EQ(s.class_of(sel), select_class(s.class_of(t), idx));
  }
}

TEST(RhoSigma, DecodesIntoClass) {
  std::mt19937 rng(13);
  for (std::int64_t kappa = 1; kappa <= 2; ++kappa)
    for (std::uint32_t k = 1; k <= 3; ++k)
      enumerate_classes(RegionScheme::bounded(kappa), k, [&](const RegionClass& rc) {
        const auto& c = std::get<BdBoundedClass>(rc);
        auto rs = rho_sigma(c);
        for (int rep = 0; rep < 3; ++rep) {
          std::set<long> picks;
          while (picks.size() < k) picks.insert(1 + static_cast<long>(rng() % 999));
          std::vector<Rational> lad{q(0)};
          for (long p : picks) lad.push_back(q(p, 1000));
          EXPECT_EQ(class_of_bd_bounded(apply_rho_sigma(rs, lad), kappa), c);
        }
        return true;
      });
}

TEST(Enumerate, PruningCutsSubtrees) {
  // Keep only classes whose first coordinate lies below zero.
  RegionScheme s = RegionScheme::unbounded(1);
  std::uint64_t n = 0, direct = 0;
  enumerate_classes(
      s, 2, [&](const RegionClass& c) { return s.representative(c)[0] < q(0); },
      [&](const RegionClass&) {
        ++n;
        return true;
      });
  enumerate_classes(s, 2, [&](const RegionClass& c) {
    if (s.representative(c)[0] < q(0)) ++direct;
    return true;
  });
  EXPECT_EQ(n, direct);
  EXPECT_GT(n, 0u);
}

}  // namespace
}  // namespace bsrbd
