#include <gtest/gtest.h>

#include <random>

#include "bsrbd/decide.hpp"
#include "bsrbd/error.hpp"
#include "bsrbd/frontend.hpp"
#include "bsrbd/normalize.hpp"
#include "support/generators.hpp"
#include "support/grid.hpp"

namespace bsrbd {
namespace {

// Clause set with variable names erased and clauses canonicalized, for
// comparisons up to renaming.
ClauseSet shape(const ClauseSet& s) {
  ClauseSet out = canonicalize(s);
  for (auto& cl : out.clauses) {
    for (std::size_t i = 0; i < cl.base_vars.size(); ++i) cl.base_vars[i] = "x" + std::to_string(i);
    for (std::size_t i = 0; i < cl.free_vars.size(); ++i) cl.free_vars[i] = "u" + std::to_string(i);
  }
  std::sort(out.clauses.begin(), out.clauses.end(), [&](const Clause& a, const Clause& b) {
    return print_clause(out, a) < print_clause(out, b);
  });
  return out;
}

std::vector<std::string> lines(const ClauseSet& s) {
  std::vector<std::string> out;
  for (const auto& cl : s.clauses) out.push_back(print_clause(s, cl));
  return out;
}

TEST(Pad, UniformSorts) {
  const auto s = pad_predicates(parse_clause_set(
      "mode bd\npred P : S^1 R^1\npred Q : S^2 R^2\nfreeconst a\n"
      "clause [x >= 0] [P(a,x)] -> [Q(a,a,x,x)]\n"));
  for (const auto& p : s.predicates) {
    EXPECT_EQ(p.free_arity, 2u);
    EXPECT_EQ(p.base_arity, 2u);
  }
  const auto& p = std::get<PredAtom>(s.clauses[0].premises[0]);
  EXPECT_EQ(p.free_args, (std::vector<FreeTerm>{FreeTerm::constant(0), FreeTerm::constant(0)}));
  EXPECT_EQ(p.base_args, (std::vector<VarId>{0, 0}));
}

TEST(Pad, IdentityWhenUniform) {
  const auto s = parse_clause_set("mode bd\npred P : S^1 R^1\npred Q : S^1 R^1\nfreeconst a\nclause [] [P(a,x)] -> [Q(a,x)]\n");
  EXPECT_EQ(pad_predicates(s), s);
}

TEST(Pad, ZeroBaseArity) {
  // P has no base argument; after padding it gets one fresh variable per clause
  const auto s = parse_clause_set(
      "mode bd\npred P : S^1\npred Q : S^1 R^1\nfreeconst a, b\n"
      "clause [x >= 1] [Q(a,x)] -> [P(b)]\n"
      "clause [] [P(b)] -> [Q(a,y)]\n");
  const auto p = pad_predicates(s);
  EXPECT_EQ(p.predicates[0].base_arity, 1u);
  EXPECT_EQ(p.clauses[1].base_vars.size(), 2u);
  EXPECT_EQ(p.clauses[1].base_vars[1].rfind(kFreshVar, 0), 0u);
  // equisatisfiable, checked by the table search on both versions
  EXPECT_EQ(decide_naive(s), decide_naive(p));
  EXPECT_EQ(decide(normalize(s)).sat, *decide_naive(s));
  // forcing P(b) and refuting Q(a, 0) leaves no model
  auto unsat = s;
  unsat.clauses.push_back(parse_clause_set("mode bd\npred P : S^1\nfreeconst a, b\nclause [] [] -> [P(b)]\n").clauses[0]);
  unsat.clauses.push_back(parse_clause_set("mode bd\npred P : S^1\npred Q : S^1 R^1\nfreeconst a, b\nclause [x = 0] [Q(a,x)] -> []\n").clauses[0]);
  EXPECT_EQ(decide_naive(unsat), std::optional<bool>(false));
  EXPECT_EQ(decide_naive(pad_predicates(unsat)), std::optional<bool>(false));
  EXPECT_FALSE(decide(normalize(unsat)).sat);
}

TEST(Eliminate, Transitivity) {
  const auto s = eliminate_constraint_only_vars(
      parse_clause_set("mode slr\npred P : R^2\nclause [x < z; z < y] [P(x,y)] -> []\n"));
  ASSERT_EQ(s.clauses.size(), 1u);
  EXPECT_EQ(lines(s), std::vector<std::string>{"clause [x < y] [P(x, y)] -> []"});
}

TEST(Eliminate, DifferenceChain) {
  const auto s = eliminate_constraint_only_vars(parse_clause_set(
      "mode bd\npred P : R^2\n"
      "clause [x - z <= 1; z - y <= 1; x >= 0; x <= 3; y >= 0; y <= 3; z >= 0; z <= 3] [P(x,y)] -> []\n"));
  ASSERT_EQ(s.clauses.size(), 1u);
  const auto& cl = s.clauses[0];
  EXPECT_EQ(cl.base_vars.size(), 2u);
  const Constraint want = DiffConst{0, 1, Rel::LE, Rational(2)};
  EXPECT_NE(std::find(cl.constraints.begin(), cl.constraints.end(), want), cl.constraints.end());
  // the projection is exact: on a grid, (x, y) satisfies the result iff some z works
  const auto orig = parse_clause_set(
      "mode bd\npred P : R^2\n"
      "clause [x - z <= 1; z - y <= 1; x >= 0; x <= 3; y >= 0; y <= 3; z >= 0; z <= 3] [P(x,y)] -> []\n");
  const auto ax = grid::axis(-4, 16, 4);
  for (const auto& x : ax)
    for (const auto& y : ax) {
      bool some = false;
      for (const auto& z : ax)
        if (eval_lambda(orig.clauses[0], std::vector<Rational>{x, z, y}, {})) some = true;  // variables by first use
      EXPECT_EQ(eval_lambda(cl, std::vector<Rational>{x, y}, {}), some) << x << " " << y;
    }
}

TEST(Eliminate, Identity) {
  const auto s = parse_clause_set("mode bd\npred P : R^1\nclause [x < 1] [P(x)] -> []\n");
  EXPECT_EQ(eliminate_constraint_only_vars(s), s);
}

TEST(Eliminate, Disequation) {
  // z != 1 with 0 <= z <= 2 is satisfiable; the two copies keep that
  const auto s = eliminate_constraint_only_vars(
      parse_clause_set("mode slr\npred P : R^1\nclause [z != 1; z >= 0; z <= 2; x < z] [P(x)] -> []\n"));
  ASSERT_EQ(s.clauses.size(), 2u);
  for (const auto& cl : s.clauses) EXPECT_EQ(cl.base_vars.size(), 1u);
}

TEST(Split, CompoundTerm) {
  const auto n = split_ground_slr(
      parse_clause_set("mode slr\nskolem d, e\nclause [2*d + 1 <= e] [] -> []\n"));
  ASSERT_EQ(n.defs.size(), 1u);
  ASSERT_EQ(n.set.skolems.size(), 3u);
  EXPECT_EQ(n.set.skolems[2].rfind(kFreshSkolem, 0), 0u);
  EXPECT_EQ(print_clause(n.set, n.defs[0]), "clause [def " + n.set.skolems[2] + " != 2*d + 1] [] -> []");
  EXPECT_EQ(print_clause(n.set, n.set.clauses[0]), "clause [" + n.set.skolems[2] + " <= e] [] -> []");
}

TEST(Split, ConstantsOnly) {
  const auto n = split_ground_slr(parse_clause_set("mode slr\nskolem d\nclause [d <= 1] [] -> []\n"));
  EXPECT_TRUE(n.defs.empty());
}

TEST(Split, SharedTerm) {
  const auto raw = parse_clause_set(
      "mode slr\nskolem d\n"
      "clause [d + 1 <= 2] [] -> []\n"
      "clause [d + 1 >= 3] [] -> []\n");
  const auto n = split_ground_slr(raw);
  EXPECT_EQ(n.defs.size(), 1u);
  EXPECT_EQ(n.set.skolems.size(), 2u);
  EXPECT_EQ(decide(normalize(raw)).sat, *decide_naive(raw));
  auto u = raw;
  u.clauses.push_back(parse_clause_set("mode slr\nskolem d\nclause [d > 1/2] [] -> []\n").clauses[0]);
  u.clauses.push_back(parse_clause_set("mode slr\nskolem d\nclause [d < 3/2] [] -> []\n").clauses[0]);
  EXPECT_EQ(decide_naive(u), std::optional<bool>(false));
  EXPECT_FALSE(decide(normalize(u)).sat);
}

TEST(Scale, Examples) {
  BigInt f;
  const auto s = scale_to_integers(
      parse_clause_set("mode bd\npred P : R^1\nclause [x >= 1/2; x < 3/4] [P(x)] -> []\n"), &f);
  EXPECT_EQ(f, 4);
  EXPECT_EQ(lines(s), std::vector<std::string>{"clause [x >= 2; x < 3] [P(x)] -> []"});
  const auto t = parse_clause_set("mode bd\npred P : R^1\nclause [x >= 1] [P(x)] -> []\n");
  EXPECT_EQ(scale_to_integers(t, &f), t);
  EXPECT_EQ(f, 1);
}

TEST(Scale, ThirdsAgree) {
  const std::string body =
      "pred P : R^2\n"
      "clause [x - y <= 1/3; x >= 0; x <= 1; y >= 0; y <= 1] [] -> [P(x,y)]\n"
      "clause [x - y > 1/4; x >= 0; x <= 1; y >= 0; y <= 1] [P(x,y)] -> []\n";
  const auto s = parse_clause_set("mode bd\n" + body);
  BigInt f;
  const auto scaled = scale_to_integers(s, &f);
  EXPECT_EQ(f, 12);
  EXPECT_EQ(print_clause(scaled, scaled.clauses[0]), "clause [x - y <= 4; x >= 0; x <= 12; y >= 0; y <= 12] [] -> [P(x, y)]");
  // both clause sets are unsatisfiable: (1/3, 1/12) is in both regions
  EXPECT_EQ(decide_naive(scaled), std::optional<bool>(false));
  EXPECT_FALSE(decide(normalize(s)).sat);
  const auto loose = parse_clause_set("mode bd\npred P : R^2\n"
                                      "clause [x - y <= 1/3; x >= 0; x <= 1; y >= 0; y <= 1] [] -> [P(x,y)]\n"
                                      "clause [x - y > 1/2; x >= 0; x <= 1; y >= 0; y <= 1] [P(x,y)] -> []\n");
  EXPECT_EQ(decide_naive(scale_to_integers(loose)), std::optional<bool>(true));
  EXPECT_TRUE(decide(normalize(loose)).sat);
}

TEST(Normalize, Examples) {
  const auto already = parse_clause_set("mode bd\npred P : S^1 R^1\nfreeconst a\nclause [x < 1] [P(a,x)] -> []\n");
  const auto n = normalize(already);
  EXPECT_TRUE(normal_form_violations(n).empty());
  EXPECT_EQ(shape(n.set), shape(already));

  const auto shared = normalize(parse_clause_set(
      "mode bd\npred P : S^1 R^1\nfreeconst a\nclause [x < 1] [P(u,x)] -> []\nclause [x > 0] [] -> [P(u,x)]\n"));
  EXPECT_NE(shared.set.clauses[0].base_vars[0], shared.set.clauses[1].base_vars[0]);
  EXPECT_NE(shared.set.clauses[0].free_vars[0], shared.set.clauses[1].free_vars[0]);

  const auto none = normalize(parse_clause_set("mode bd\npred P : R^1\nclause [x < 1] [P(x)] -> []\n"));
  ASSERT_EQ(none.set.free_constants.size(), 1u);
  EXPECT_EQ(none.set.free_constants[0].rfind(kFreshConst, 0), 0u);
}

TEST(Normalize, Errors) {
  ClauseSet la;
  la.mode = Mode::LA;
  EXPECT_THROW(normalize(la), FragmentError);
  ClauseSet bd;
  bd.mode = Mode::BD;
  bd.skolems.push_back("d");
  EXPECT_THROW(normalize(bd), FragmentError);
}

gen::SetShape tiny(Mode m) {
  gen::SetShape sh;
  sh.mode = m;
  sh.predicates = 2;
  sh.max_base_arity = 2;
  sh.max_free_arity = 1;
  sh.free_constants = m == Mode::BD ? 2 : 1;
  sh.skolems = m == Mode::SLR ? 1 : 0;
  sh.clauses = 3;
  sh.rationals = {Rational(0), Rational(1)};
  return sh;
}

TEST(Normalize, ValidatorAndIdempotence) {
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto s = gen::random_clause_set(rng, tiny(i % 2 ? Mode::BD : Mode::SLR));
    const auto n = normalize(s);
    ASSERT_TRUE(normal_form_violations(n).empty()) << print_clause_set(s);
    const auto again = normalize(n.combined());
    EXPECT_EQ(shape(again.combined()), shape(n.combined())) << print_clause_set(s);
  }
}

TEST(Normalize, Equisatisfiable) {
  std::mt19937 rng(17);
  int agree = 0;
  for (int i = 0; i < 120; ++i) {
    auto sh = tiny(i % 2 ? Mode::BD : Mode::SLR);
    sh.max_base_arity = 1 + i % 2;
    const auto s = gen::random_clause_set(rng, sh);
    const auto naive = decide_naive(s);
    ASSERT_TRUE(naive);
    ASSERT_EQ(decide(normalize(s)).sat, *naive) << print_clause_set(s);
    ++agree;
  }
  EXPECT_EQ(agree, 120);
}

}  // namespace
}  // namespace bsrbd
