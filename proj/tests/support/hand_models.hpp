// Hand-built, deliberately non-uniform models for the uniform-model rebuilds,
// with the brute-force checks applied to the rebuilt result.
#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "bsrbd/decide.hpp"
#include "bsrbd/frontend.hpp"
#include "bsrbd/ramsey.hpp"

namespace hand {

using namespace bsrbd;

// One predicate; free elements are 0, 1, ...
class HandModel : public Structure {
 public:
  using Holds = std::function<bool(std::uint32_t, std::span<const Rational>)>;
  HandModel(std::vector<std::uint32_t> consts, std::vector<Rational> gamma, Holds h)
      : consts_(std::move(consts)), gamma_(std::move(gamma)), holds_(std::move(h)) {}
  std::uint32_t free_constant(ConstId c) const override { return consts_.at(c); }
  std::span<const Rational> skolem_values() const override { return gamma_; }
  bool holds(PredId, std::span<const std::uint32_t> free_args, std::span<const Rational> base) const override {
    return holds_(free_args[0], base);
  }
  std::size_t constants() const { return consts_.size(); }

 private:
  std::vector<std::uint32_t> consts_;
  std::vector<Rational> gamma_;
  Holds holds_;
};

inline int floor_of(const Rational& r, int scale) { return static_cast<int>(to_int64((r * Rational(scale)).floor())); }

inline std::vector<Rational> eighths(int lo, int hi) {
  std::vector<Rational> v;
  for (int k = lo * 8; k <= hi * 8; ++k) v.push_back(Rational(BigInt(k), BigInt(8)));
  return v;
}

inline std::vector<std::vector<Rational>> all_tuples(const std::vector<Rational>& s, std::size_t m) {
  std::vector<std::vector<Rational>> out{{}};
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::vector<Rational>> next;
    for (const auto& t : out)
      for (const auto& x : s) {
        auto u = t;
        u.push_back(x);
        next.push_back(std::move(u));
      }
    out = std::move(next);
  }
  return out;
}

// a's facts on t, one per free constant.
inline std::vector<bool> facts(const HandModel& a, std::span<const Rational> t) {
  std::vector<bool> v;
  for (ConstId c = 0; c < a.constants(); ++c) {
    const std::uint32_t e = a.free_constant(c);
    v.push_back(a.holds(0, std::span<const std::uint32_t>(&e, 1), t));
  }
  return v;
}

// a satisfies n at every grid point (free variables over elements 0, 1).
inline bool model_on_grid(const NormalizedClauseSet& n, const Structure& a, const std::vector<Rational>& grid) {
  for (const auto* list : {&n.set.clauses, &n.defs})
    for (const auto& cl : *list) {
      Assignment asg;
      asg.base.resize(cl.num_base_vars());
      asg.free.assign(cl.num_free_vars(), 0);
      std::vector<std::size_t> idx(cl.num_base_vars(), 0);
      while (true) {
        for (std::size_t i = 0; i < idx.size(); ++i) asg.base[i] = grid[idx[i]];
        for (std::uint32_t f = 0; f < (1u << cl.num_free_vars()); ++f) {
          for (std::size_t i = 0; i < cl.num_free_vars(); ++i) asg.free[i] = (f >> i) & 1;
          if (!eval_clause(cl, a, asg)) return false;
        }
        std::size_t i = idx.size();
        while (i > 0 && ++idx[i - 1] == grid.size()) idx[--i] = 0;
        if (i == 0) break;
      }
    }
  return true;
}

struct Case {
  std::string name;
  NormalizedClauseSet n;
  HandModel a;
  std::vector<Rational> grid;  // a is checked to be a model here
  std::size_t samples;
};

inline std::vector<Case> slr_cases() {
  std::vector<Case> out;
  // irregular between 1 and 2, different for the two elements
  out.push_back({"slr m=1",
                 normalize(parse_clause_set("mode slr\npred P : S^1 R^1\nfreeconst a, b\nskolem d\n"
                                            "clause [def d != 1] [] -> []\n"
                                            "clause [x < d] [] -> [P(a,x)]\n"
                                            "clause [x > 2] [P(u,x)] -> []\n")),
                 HandModel({0, 1}, {Rational(1)},
                           [](std::uint32_t e, std::span<const Rational> t) {
                             if (t[0] < Rational(1) && e == 0) return true;
                             if (t[0] > Rational(2)) return false;
                             return ((floor_of(t[0], 8) + static_cast<int>(e)) & 1) == 1;
                           }),
                 eighths(-1, 3), 12});
  const Rational half(BigInt(1), BigInt(2));
  out.push_back({"slr m=2",
                 normalize(parse_clause_set("mode slr\npred P : S^1 R^2\nfreeconst a, b\nskolem d\n"
                                            "clause [def d != 1/2] [] -> []\n"
                                            "clause [x < d; y < d] [] -> [P(a,x,y)]\n"
                                            "clause [x > y; x > d] [P(u,x,y)] -> []\n")),
                 HandModel({0, 1}, {half},
                           [half](std::uint32_t e, std::span<const Rational> t) {
                             if (t[0] < half && t[1] < half && e == 0) return true;
                             if (t[0] > t[1] && t[0] > half) return false;
                             return ((floor_of(t[0], 4) + floor_of(t[1], 2) + static_cast<int>(e)) & 1) == 1;
                           }),
                 eighths(-1, 2), 10});
  return out;
}

// kappa = 1, lambda = 2
inline Case bd_case() {
  return {"bd m=2",
          normalize(parse_clause_set("mode bd\npred P : S^1 R^2\nfreeconst a\n"
                                     "clause [x >= -1; x <= 1; y >= -1; y <= 1; x < y] [] -> [P(a,x,y)]\n"
                                     "clause [x > 1] [P(a,x,y)] -> []\n")),
          HandModel({0}, {},
                    [](std::uint32_t, std::span<const Rational> t) {
                      if (t[0] < t[1] && t[1] <= Rational(1)) return true;
                      if (t[0] > Rational(1)) return false;
                      const Rational fr = t[0] - Rational(static_cast<long>(to_int64(t[0].floor())));
                      return fr < Rational(BigInt(1), BigInt(3));
                    }),
          eighths(-3, 3), 24};
}

struct Outcome {
  bool hypothesis = true;  // equivalent tuples over Q carry equal facts
  bool verifies = false;   // the rebuilt model satisfies n
  std::size_t q_size = 0;
};

inline Outcome check_slr(const Case& c, const UniformRebuild& r) {
  Outcome o;
  std::vector<Rational> q = r.points;
  for (const auto& b : r.blocks) q.insert(q.end(), b.begin(), b.end());
  o.q_size = q.size();
  const PartitionJ j(r.points);
  const std::uint32_t m = c.n.set.predicates[0].base_arity;
  std::map<SlrClass, std::vector<bool>> seen;
  for (const auto& t : all_tuples(q, m)) {
    auto [it, fresh] = seen.try_emplace(class_of_slr(t, j), facts(c.a, t));
    if (it->second != facts(c.a, t)) o.hypothesis = false;
  }
  o.verifies = verify_model(c.n, r.model, VerifyScope::Exhaustive);
  return o;
}

// Tuples with a coordinate at -kappa-1 lie outside the bounded relation's
// domain and are skipped.
inline Outcome check_bd(const Case& c, const UniformRebuild& r) {
  Outcome o;
  const std::int64_t kappa = bd_kappa(c.n.set);
  std::vector<Rational> inside;
  for (const auto& x : r.q_hat)
    if (x > Rational(static_cast<long>(-kappa - 1))) inside.push_back(x);
  o.q_size = r.q_hat.size();
  const std::uint32_t m = c.n.set.predicates[0].base_arity;
  std::map<BdBoundedClass, std::vector<bool>> seen;
  for (const auto& t : all_tuples(inside, m)) {
    auto [it, fresh] = seen.try_emplace(class_of_bd_bounded(t, kappa), facts(c.a, t));
    if (it->second != facts(c.a, t)) o.hypothesis = false;
  }
  o.verifies = verify_model(c.n, r.model, VerifyScope::Exhaustive);
  return o;
}

}  // namespace hand
