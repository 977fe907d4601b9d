#include "bsrbd/timed.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "bsrbd/error.hpp"

namespace bsrbd {

bool ClockConstraint::holds(std::span<const Rational> v) const {
  for (const auto& at : atoms) {
    Rational lhs = v[at.x];
    if (at.y) lhs -= v[*at.y];
    if (!bsrbd::holds(lhs, at.rel, Rational(static_cast<long>(at.c)))) return false;
  }
  return true;
}

std::optional<LocId> TimedAutomaton::find_location(std::string_view name) const {
  for (LocId i = 0; i < locations.size(); ++i)
    if (locations[i] == name) return i;
  return std::nullopt;
}

std::optional<ClockId> TimedAutomaton::find_clock(std::string_view name) const {
  for (ClockId i = 0; i < clocks.size(); ++i)
    if (clocks[i] == name) return i;
  return std::nullopt;
}

namespace {

std::int64_t max_abs(const ClockConstraint& cc) {
  std::int64_t k = 0;
  for (const auto& at : cc.atoms) k = std::max(k, at.c < 0 ? -at.c : at.c);
  return k;
}

// Clock constraint over the clause variables vars[clock].
void add_cc(std::vector<Constraint>& out, const ClockConstraint& cc, std::span<const VarId> vars) {
  for (const auto& at : cc.atoms) {
    if (at.y) out.push_back(DiffConst{vars[at.x], vars[*at.y], at.rel, Rational(static_cast<long>(at.c))});
    else out.push_back(VarConst{vars[at.x], at.rel, GroundTerm::constant(Rational(static_cast<long>(at.c)))});
  }
}

PredAtom reach_atom(ConstId loc, std::span<const VarId> vars) {
  return PredAtom{0, {FreeTerm::constant(loc)}, std::vector<VarId>(vars.begin(), vars.end())};
}

std::vector<VarId> iota(VarId from, std::size_t n) {
  std::vector<VarId> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = from + static_cast<VarId>(i);
  return v;
}

}  // namespace

std::int64_t TimedAutomaton::max_constant() const {
  std::int64_t k = 0;
  for (const auto& inv : invariants) k = std::max(k, max_abs(inv));
  for (const auto& t : transitions) k = std::max(k, max_abs(t.guard));
  return k;
}

ClauseSet encode_fol_la(const TimedAutomaton& a) {
  const std::size_t n = a.clocks.size();
  ClauseSet s;
  s.mode = Mode::LA;
  s.predicates.push_back({kReach, 1, static_cast<std::uint32_t>(n)});
  s.free_constants = a.locations;
  const auto x = iota(0, n), xp = iota(static_cast<VarId>(n), n);

  Clause init;
  init.base_vars = a.clocks;
  for (VarId i : x) init.constraints.push_back(VarConst{i, Rel::EQ, GroundTerm::constant(0)});
  add_cc(init.constraints, a.invariants[a.initial], x);
  init.conclusions.push_back(reach_atom(a.initial, x));
  s.clauses.push_back(std::move(init));

  for (LocId l = 0; l < a.locations.size(); ++l) {
    Clause d;
    d.base_vars = a.clocks;
    for (const auto& c : a.clocks) d.base_vars.push_back(c + "'");
    const VarId z = static_cast<VarId>(2 * n);
    d.base_vars.push_back("_delay");
    for (std::size_t i = 0; i < n; ++i)
      d.constraints.push_back(LinearCmp{{{xp[i], Rational(1)}, {x[i], Rational(-1)}, {z, Rational(-1)}}, Rational(0), Rel::EQ});
    d.constraints.push_back(VarConst{z, Rel::GE, GroundTerm::constant(0)});
    add_cc(d.constraints, a.invariants[l], xp);
    d.premises.push_back(reach_atom(l, x));
    d.conclusions.push_back(reach_atom(l, xp));
    s.clauses.push_back(std::move(d));
  }

  for (const auto& t : a.transitions) {
    Clause c;
    c.base_vars = a.clocks;
    add_cc(c.constraints, t.guard, x);
    // reset clocks get fresh variables pinned to 0, the rest carry over
    std::vector<VarId> target = x;
    for (ClockId r : t.resets) {
      if (target[r] != x[r]) continue;
      target[r] = static_cast<VarId>(c.base_vars.size());
      c.base_vars.push_back(a.clocks[r] + "'");
      c.constraints.push_back(VarConst{target[r], Rel::EQ, GroundTerm::constant(0)});
    }
    add_cc(c.constraints, a.invariants[t.to], target);
    c.premises.push_back(reach_atom(t.from, x));
    c.conclusions.push_back(reach_atom(t.to, target));
    s.clauses.push_back(std::move(c));
  }
  return s;
}

std::size_t lowered_delay_clause_count(std::size_t clocks, std::int64_t lambda) {
  if (clocks <= 1) return 1;
  return 4 * clocks * (clocks - 1) * static_cast<std::size_t>(2 * lambda + 1) + 2;
}

namespace {

bool is_delay_clause(const Clause& c) {
  return std::any_of(c.constraints.begin(), c.constraints.end(),
                     [](const Constraint& k) { return std::holds_alternative<LinearCmp>(k); });
}

// x' - x >= 0 for every clock; VarVar is avoided so the clause stays in the
// difference-constraint shape.
void add_monotone(std::vector<Constraint>& out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(DiffConst{static_cast<VarId>(n + i), static_cast<VarId>(i), Rel::GE, Rational(0)});
}

}  // namespace

ClauseSet lower_delay_clauses(const ClauseSet& in, std::int64_t lambda) {
  if (lambda < 0) throw Error("lambda must be nonnegative");
  ClauseSet out = in;
  out.clauses.clear();
  std::size_t chain = 0;
  for (const Clause& c : in.clauses) {
    if (!is_delay_clause(c)) {
      out.clauses.push_back(c);
      continue;
    }
    if (c.premises.size() != 1 || c.conclusions.size() != 1) throw FragmentError("malformed delay clause");
    const auto& pre = std::get<PredAtom>(c.premises[0]);
    const auto& con = std::get<PredAtom>(c.conclusions[0]);
    const std::size_t n = pre.base_args.size();
    // Renumber to x = 0..n-1, x' = n..2n-1; the delay variable disappears.
    std::map<VarId, VarId> ren;
    Clause base;
    for (std::size_t i = 0; i < n; ++i) {
      ren[pre.base_args[i]] = static_cast<VarId>(i);
      base.base_vars.push_back(c.base_vars[pre.base_args[i]]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      ren[con.base_args[i]] = static_cast<VarId>(n + i);
      base.base_vars.push_back(c.base_vars[con.base_args[i]]);
    }
    std::vector<Constraint> inv;
    for (const auto& k : c.constraints) {
      if (std::holds_alternative<LinearCmp>(k)) continue;
      const auto vs = constraint_vars(k);
      if (!std::all_of(vs.begin(), vs.end(), [&](VarId v) { return ren.contains(v); })) continue;
      Constraint r = k;
      std::visit(
          [&](auto& a) {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, VarConst>) a.x = ren.at(a.x);
            else if constexpr (std::is_same_v<T, VarVar> || std::is_same_v<T, DiffConst>) {
              a.x = ren.at(a.x);
              a.y = ren.at(a.y);
            }
          },
          r);
      inv.push_back(r);
    }
    PredAtom from = pre, to = con;
    from.base_args = iota(0, n);
    to.base_args = iota(static_cast<VarId>(n), n);

    if (n <= 1) {
      Clause d = base;
      d.constraints = inv;
      add_monotone(d.constraints, n);
      d.premises.push_back(from);
      d.conclusions.push_back(to);
      out.clauses.push_back(std::move(d));
      continue;
    }

    auto link = [&](std::size_t i) {
      const std::string name = "_D" + std::to_string(chain) + "_" + std::to_string(i);
      if (!out.find_predicate(name)) out.predicates.push_back({name, 0, static_cast<std::uint32_t>(2 * n)});
      return PredAtom{*out.find_predicate(name), {}, iota(0, 2 * n)};
    };
    std::size_t step = 0;
    {
      Clause d = base;
      d.constraints = inv;
      add_monotone(d.constraints, n);
      d.premises.push_back(from);
      d.conclusions.push_back(link(0));
      out.clauses.push_back(std::move(d));
    }
    for (VarId i = 0; i < n; ++i) {
      for (VarId j = 0; j < n; ++j) {
        if (i == j) continue;
        for (std::int64_t k = -lambda; k <= lambda; ++k) {
          for (Rel r : {Rel::LE, Rel::GE}) {
            const Rational kk(static_cast<long>(k));
            const VarId ip = static_cast<VarId>(n + i), jp = static_cast<VarId>(n + j);
            for (Rel side : {r, negate(r)}) {
              Clause d = base;
              d.constraints = {DiffConst{i, j, side, kk}, DiffConst{ip, jp, side, kk}};
              d.premises.push_back(link(step));
              d.conclusions.push_back(link(step + 1));
              out.clauses.push_back(std::move(d));
            }
            ++step;
          }
        }
      }
    }
    Clause d = base;
    d.premises.push_back(link(step));
    d.conclusions.push_back(to);
    out.clauses.push_back(std::move(d));
    ++chain;
  }
  return out;
}

ClauseSet bound_clocks(const ClauseSet& in, std::int64_t kappa) {
  ClauseSet out = in;
  out.mode = Mode::BD;
  const GroundTerm lo = GroundTerm::constant(0), hi = GroundTerm::constant(Rational(static_cast<long>(kappa)));
  for (Clause& c : out.clauses) {
    for (const auto& k : c.constraints)
      if (std::holds_alternative<LinearCmp>(k)) throw FragmentError("bound_clocks: clause still has a delay constraint");
    for (VarId x = 0; x < c.base_vars.size(); ++x) {
      c.constraints.push_back(VarConst{x, Rel::GE, lo});
      c.constraints.push_back(VarConst{x, Rel::LT, hi});
    }
  }
  check_bd_guards(out);
  return out;
}

std::int64_t default_lambda(const TimedAutomaton& a, const ReachQuery& q) {
  const std::int64_t k = std::max(a.max_constant(), max_abs(q.goal));
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(a.clocks.size()) * k);
}

ClauseSet encode_reachability(const TimedAutomaton& a, const ReachQuery& q, std::optional<std::int64_t> lambda) {
  const std::int64_t lam = lambda ? *lambda : default_lambda(a, q);
  ClauseSet s = encode_fol_la(a);
  Clause goal;
  goal.base_vars = a.clocks;
  const auto x = iota(0, a.clocks.size());
  add_cc(goal.constraints, q.goal, x);
  goal.premises.push_back(reach_atom(q.location, x));
  s.clauses.push_back(std::move(goal));
  return bound_clocks(lower_delay_clauses(s, lam), lam + 1);
}

std::vector<BdBoundedClass> delay_successors(const BdBoundedClass& s, std::int64_t lambda) {
  std::vector<BdBoundedClass> out{s};
  BdBoundedClass cur = s;
  while (true) {
    if (cur.zero_first) {
      cur.zero_first = false;
    } else {
      auto last = cur.fr.back();
      cur.fr.pop_back();
      bool leaves = false;
      for (auto i : last)
        if (++cur.floors[i] > lambda) leaves = true;
      if (leaves) break;
      cur.fr.insert(cur.fr.begin(), last);
      cur.zero_first = true;
    }
    out.push_back(cur);
  }
  return out;
}

namespace {

bool cc_holds(const ClockConstraint& cc, const BdBoundedClass& r) {
  const auto rep = representative(r);
  return cc.holds(rep);
}

BdBoundedClass origin(std::size_t n, std::int64_t lambda) {
  BdBoundedClass c;
  c.kappa = lambda;
  c.floors.assign(n, 0);
  std::vector<std::uint32_t> all(n);
  for (std::uint32_t i = 0; i < n; ++i) all[i] = i;
  c.fr = {all};
  c.zero_first = true;
  return c;
}

}  // namespace

bool region_reach(const TimedAutomaton& a, const ReachQuery& q, std::optional<std::int64_t> lambda, ReachStats* stats) {
  const std::int64_t lam = lambda ? *lambda : default_lambda(a, q);
  const std::size_t n = a.clocks.size();
  using State = std::pair<LocId, BdBoundedClass>;
  std::set<State> seen;
  std::deque<State> todo;
  auto push = [&](LocId l, const BdBoundedClass& r) {
    if (!cc_holds(a.invariants[l], r)) return;
    if (seen.emplace(l, r).second) todo.emplace_back(l, r);
  };
  push(a.initial, origin(n, lam));
  bool found = false;
  while (!todo.empty() && !found) {
    auto [l, r] = todo.front();
    todo.pop_front();
    for (const auto& d : delay_successors(r, lam)) {
      if (!cc_holds(a.invariants[l], d)) break;
      if (l == q.location && cc_holds(q.goal, d)) {
        found = true;
        break;
      }
      seen.emplace(l, d);
      auto rep = representative(d);
      for (const auto& t : a.transitions) {
        if (t.from != l || !t.guard.holds(rep)) continue;
        auto next = rep;
        for (ClockId c : t.resets) next[c] = Rational(0);
        push(t.to, class_of_bd_bounded(next, lam));
      }
    }
  }
  if (stats) stats->states = seen.size();
  return found;
}

namespace {

// Class of a point given by integer numerators over a common denominator.
BdBoundedClass class_of_scaled(std::span<const std::int64_t> v, std::int64_t den, std::int64_t kappa) {
  BdBoundedClass c;
  c.kappa = kappa;
  const std::size_t n = v.size();
  c.floors.resize(n);
  std::map<std::int64_t, std::vector<std::uint32_t>> by_fr;
  for (std::size_t i = 0; i < n; ++i) {
    c.floors[i] = v[i] / den;
    by_fr[v[i] % den].push_back(static_cast<std::uint32_t>(i));
  }
  c.zero_first = by_fr.contains(0);
  for (auto& [f, idx] : by_fr) c.fr.push_back(idx);
  return c;
}

template <class F>
void grid_points(std::size_t n, std::int64_t hi, std::int64_t step, std::vector<std::int64_t>& cur, F&& f) {
  if (cur.size() == n) {
    f(cur);
    return;
  }
  for (std::int64_t v = 0; v < hi; v += step) {
    cur.push_back(v);
    grid_points(n, hi, step, cur, f);
    cur.pop_back();
  }
}

}  // namespace

DelaySets delay_sets(const BdBoundedClass& s, std::int64_t lambda) {
  const std::size_t n = s.arity();
  // Points of s on the grid 1/g, candidate successors on the grid 1/(2g).
  const std::int64_t g = 4 * (static_cast<std::int64_t>(n) + 1);
  const std::int64_t den = 2 * g, hi = (lambda + 1) * den;
  DelaySets out;
  std::vector<std::vector<std::int64_t>> members;
  std::vector<std::int64_t> cur;
  grid_points(n, hi, 2, cur, [&](const std::vector<std::int64_t>& q) {
    if (class_of_scaled(q, den, lambda) == s) members.push_back(q);
  });
  for (const auto& q : members) {
    const std::int64_t top = *std::max_element(q.begin(), q.end());
    for (std::int64_t t = 0; top + t < hi; ++t) {
      std::vector<std::int64_t> p = q;
      for (auto& v : p) v += t;
      out.s1.insert(class_of_scaled(p, den, lambda));
    }
    cur.clear();
    grid_points(n, hi, 1, cur, [&](const std::vector<std::int64_t>& p) {
      for (std::size_t i = 0; i < n; ++i)
        if (p[i] < q[i]) return;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i == j) continue;
          const std::int64_t dq = q[i] - q[j], dp = p[i] - p[j];
          for (std::int64_t k = -lambda; k <= lambda; ++k) {
            if ((dq <= k * den) != (dp <= k * den)) return;
            if ((dq >= k * den) != (dp >= k * den)) return;
          }
        }
      }
      out.s2.insert(class_of_scaled(p, den, lambda));
    });
  }
  return out;
}

bool delay_sets_equal_check(const BdBoundedClass& s, std::int64_t lambda) {
  const auto d = delay_sets(s, lambda);
  return d.s1 == d.s2;
}

std::vector<BdBoundedClass> box_regions(std::uint32_t n, std::int64_t lambda) {
  std::vector<BdBoundedClass> out;
  enumerate_classes(
      RegionScheme::bounded(lambda), n,
      [](const RegionClass& c) {
        const auto& b = std::get<BdBoundedClass>(c);
        return std::all_of(b.floors.begin(), b.floors.end(), [](std::int64_t f) { return f >= 0; });
      },
      [&](const RegionClass& c) {
        out.push_back(std::get<BdBoundedClass>(c));
        return true;
      });
  return out;
}

}  // namespace bsrbd
