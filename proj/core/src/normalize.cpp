#include "bsrbd/normalize.hpp"

#include <algorithm>
#include <set>

#include "bsrbd/error.hpp"

namespace bsrbd {

ClauseSet NormalizedClauseSet::combined() const {
  ClauseSet s = set;
  s.clauses.insert(s.clauses.end(), defs.begin(), defs.end());
  return s;
}

namespace {

std::string fresh(const std::string& prefix, const std::set<std::string>& taken, std::size_t& counter) {
  while (true) {
    std::string name = prefix + std::to_string(counter++);
    if (!taken.contains(name)) return name;
  }
}

std::set<std::string> all_names(const ClauseSet& n) {
  std::set<std::string> s(n.free_constants.begin(), n.free_constants.end());
  s.insert(n.skolems.begin(), n.skolems.end());
  for (const auto& p : n.predicates) s.insert(p.name);
  for (const auto& cl : n.clauses) {
    s.insert(cl.base_vars.begin(), cl.base_vars.end());
    s.insert(cl.free_vars.begin(), cl.free_vars.end());
  }
  return s;
}

template <class F>
void for_each_pred_atom(Clause& cl, F&& f) {
  for (auto* side : {&cl.premises, &cl.conclusions})
    for (auto& a : *side)
      if (auto* p = std::get_if<PredAtom>(&a)) f(*p);
}

}  // namespace

ClauseSet ensure_free_constant(const ClauseSet& n) {
  if (!n.free_constants.empty()) return n;
  ClauseSet out = n;
  std::size_t counter = 0;
  out.free_constants.push_back(fresh(kFreshConst, all_names(n), counter));
  return out;
}

ClauseSet pad_predicates(const ClauseSet& n) {
  std::uint32_t mf = 0, mb = 0;
  for (const auto& p : n.predicates) {
    mf = std::max(mf, p.free_arity);
    mb = std::max(mb, p.base_arity);
  }
  bool needs_const = false;
  for (const auto& p : n.predicates)
    if (p.free_arity == 0 && mf > 0) needs_const = true;
  ClauseSet out = needs_const ? ensure_free_constant(n) : n;
  auto taken = all_names(out);
  std::size_t counter = 0;
  std::vector<PredicateSig> old = out.predicates;
  for (auto& p : out.predicates) {
    p.free_arity = mf;
    p.base_arity = mb;
  }
  for (auto& cl : out.clauses) {
    std::optional<VarId> extra;
    for_each_pred_atom(cl, [&](PredAtom& a) {
      const auto& sig = old[a.pred];
      if (sig.free_arity < mf) {
        const FreeTerm pad = a.free_args.empty() ? FreeTerm::constant(0) : a.free_args.front();
        a.free_args.resize(mf, pad);
      }
      if (sig.base_arity < mb) {
        VarId pad;
        if (!a.base_args.empty()) {
          pad = a.base_args.front();
        } else {
          if (!extra) {
            extra = static_cast<VarId>(cl.base_vars.size());
            std::string name = fresh(kFreshVar, taken, counter);
            taken.insert(name);
            cl.base_vars.push_back(name);
          }
          pad = *extra;
        }
        a.base_args.resize(mb, pad);
      }
    });
  }
  return out;
}

ClauseSet scale_to_integers(const ClauseSet& n, BigInt* factor) {
  if (n.mode != Mode::BD) throw FragmentError("scale_to_integers applies to BD clause sets");
  BigInt l = 1;
  for (const auto& r : n.rationals()) l = lcm(l, r.denominator());
  if (factor) *factor = l;
  if (l == 1) return n;
  const Rational k(l, BigInt(1));
  ClauseSet out = n;
  for (auto& cl : out.clauses) {
    for (auto& c : cl.constraints) {
      std::visit(
          [&](auto& a) {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, VarConst>) a.bound *= k;
            else if constexpr (std::is_same_v<T, DiffConst>) a.c *= k;
            else if constexpr (std::is_same_v<T, GroundCmp>) {
              a.lhs *= k;
              a.rhs *= k;
            } else if constexpr (std::is_same_v<T, LinearCmp>) {
              a.constant *= k;
            }
          },
          c);
    }
  }
  return out;
}

ClauseSet purify(const ClauseSet& n) {
  for (const auto& cl : n.clauses)
    for (const auto* side : {&cl.premises, &cl.conclusions})
      for (const auto& a : *side)
        if (const auto* p = std::get_if<PredAtom>(&a))
          for (VarId x : p->base_args)
            if (x >= cl.base_vars.size()) throw Error("atom argument is not a clause variable");
  return n;
}

namespace {

// var + g, or just g when var is empty.
struct Side {
  std::optional<VarId> var;
  GroundTerm g;
};

struct Bound {
  Side side;
  bool strict;
};

enum class Fold { True, False, Keep };

// The constraint  l rel r  in fragment shape.
std::pair<Fold, std::optional<Constraint>> make_cmp(const Side& l, Rel rel, const Side& r, Mode mode) {
  auto fold = [](bool b) { return std::pair<Fold, std::optional<Constraint>>{b ? Fold::True : Fold::False, std::nullopt}; };
  if (!l.var && !r.var) {
    if (l.g.is_rational() && r.g.is_rational()) return fold(holds(l.g.offset, rel, r.g.offset));
    return {Fold::Keep, GroundCmp{l.g, rel, r.g}};
  }
  if (l.var && r.var) {
    const GroundTerm c = r.g - l.g;
    if (!c.is_rational()) throw FragmentError("elimination produced a difference against a Skolem constant");
    if (*l.var == *r.var) return fold(holds(Rational(0), rel, c.offset));
    if (mode == Mode::BD) return {Fold::Keep, DiffConst{*l.var, *r.var, rel, c.offset}};
    if (!c.offset.is_zero()) throw FragmentError("elimination produced a difference constraint outside SLR");
    return {Fold::Keep, VarVar{*l.var, rel, *r.var}};
  }
  if (l.var) {
    GroundTerm b = r.g - l.g;
    if (mode == Mode::SLR && !b.is_constant()) throw FragmentError("elimination produced a compound bound");
    return {Fold::Keep, VarConst{*l.var, rel, b}};
  }
  GroundTerm b = l.g - r.g;
  if (mode == Mode::SLR && !b.is_constant()) throw FragmentError("elimination produced a compound bound");
  return {Fold::Keep, VarConst{*r.var, flip(rel), b}};
}

// z rel side, if c mentions z.
std::optional<std::pair<Rel, Side>> about(const Constraint& c, VarId z) {
  if (const auto* a = std::get_if<VarConst>(&c)) {
    if (a->x == z) return std::pair{a->rel, Side{std::nullopt, a->bound}};
  } else if (const auto* a = std::get_if<VarVar>(&c)) {
    if (a->x == z && a->y == z) return std::pair{a->rel, Side{z, {}}};
    if (a->x == z) return std::pair{a->rel, Side{a->y, {}}};
    if (a->y == z) return std::pair{flip(a->rel), Side{a->x, {}}};
  } else if (const auto* a = std::get_if<DiffConst>(&c)) {
    if (a->x == z && a->y == z) return std::pair{a->rel, Side{z, GroundTerm::constant(a->c)}};
    if (a->x == z) return std::pair{a->rel, Side{a->y, GroundTerm::constant(a->c)}};
    // y - z rel c  <=>  z flip(rel) y - c
    if (a->y == z) return std::pair{flip(a->rel), Side{a->x, GroundTerm::constant(-a->c)}};
  } else if (std::holds_alternative<LinearCmp>(c) || std::holds_alternative<SkolemDef>(c)) {
    for (VarId v : constraint_vars(c))
      if (v == z) throw FragmentError("cannot eliminate a variable from a general linear constraint");
  }
  return std::nullopt;
}

std::set<VarId> atom_vars(const Clause& cl) {
  std::set<VarId> s;
  for (const auto* side : {&cl.premises, &cl.conclusions})
    for (const auto& a : *side)
      if (const auto* p = std::get_if<PredAtom>(&a)) s.insert(p->base_args.begin(), p->base_args.end());
  return s;
}

// Drops base variables that no longer occur and renumbers the rest.
Clause compact(const Clause& cl) {
  std::set<VarId> used = atom_vars(cl);
  for (const auto& c : cl.constraints)
    for (VarId v : constraint_vars(c)) used.insert(v);
  std::vector<VarId> ren(cl.base_vars.size(), 0);
  Clause out = cl;
  out.base_vars.clear();
  for (VarId v = 0; v < cl.base_vars.size(); ++v) {
    if (!used.contains(v)) continue;
    ren[v] = static_cast<VarId>(out.base_vars.size());
    out.base_vars.push_back(cl.base_vars[v]);
  }
  for (auto& c : out.constraints) {
    std::visit(
        [&](auto& a) {
          using T = std::decay_t<decltype(a)>;
          if constexpr (std::is_same_v<T, VarConst>) a.x = ren[a.x];
          else if constexpr (std::is_same_v<T, VarVar> || std::is_same_v<T, DiffConst>) {
            a.x = ren[a.x];
            a.y = ren[a.y];
          } else if constexpr (std::is_same_v<T, LinearCmp>) {
            std::map<VarId, Rational> m;
            for (const auto& [v, k] : a.coeffs) m[ren[v]] = k;
            a.coeffs = std::move(m);
          }
        },
        c);
  }
  for_each_pred_atom(out, [&](PredAtom& p) {
    for (auto& x : p.base_args) x = ren[x];
  });
  return out;
}

}  // namespace

ClauseSet eliminate_constraint_only_vars(const ClauseSet& n) {
  ClauseSet out = n;
  out.clauses.clear();
  std::vector<Clause> work(n.clauses.rbegin(), n.clauses.rend());
  while (!work.empty()) {
    Clause cl = std::move(work.back());
    work.pop_back();
    const auto in_atoms = atom_vars(cl);
    std::optional<VarId> z;
    for (const auto& c : cl.constraints)
      for (VarId v : constraint_vars(c))
        if (!in_atoms.contains(v) && (!z || v < *z)) z = v;
    if (!z) {
      // rational-only comparisons fold away; a false one kills the clause
      bool dead = false;
      std::erase_if(cl.constraints, [&](const Constraint& c) {
        const auto* g = std::get_if<GroundCmp>(&c);
        if (!g || !g->lhs.is_rational() || !g->rhs.is_rational()) return false;
        if (!holds(g->lhs.offset, g->rel, g->rhs.offset)) dead = true;
        return true;
      });
      if (!dead) out.clauses.push_back(compact(cl));
      continue;
    }
    // split a disequation on z into two copies, processed in order
    bool split = false;
    for (std::size_t i = 0; i < cl.constraints.size() && !split; ++i) {
      auto ab = about(cl.constraints[i], *z);
      if (!ab || ab->first != Rel::NE) continue;
      Clause lo = cl, hi = cl;
      auto set_rel = [&](Constraint& c, Rel r) {
        std::visit(
            [&](auto& a) {
              if constexpr (requires { a.rel; }) a.rel = r;
            },
            c);
      };
      set_rel(lo.constraints[i], Rel::LT);
      set_rel(hi.constraints[i], Rel::GT);
      work.push_back(std::move(hi));
      work.push_back(std::move(lo));
      split = true;
    }
    if (split) continue;

    std::vector<Bound> lower, upper;
    std::vector<Constraint> rest;
    bool dead = false;
    for (const auto& c : cl.constraints) {
      auto ab = about(c, *z);
      if (!ab) {
        rest.push_back(c);
        continue;
      }
      auto [rel, side] = *ab;
      if (side.var == z) {
        // z rel z + c
        if (!holds(Rational(0), rel, side.g.offset)) dead = true;
        continue;
      }
      if (rel == Rel::EQ || rel == Rel::GE || rel == Rel::GT) lower.push_back({side, rel == Rel::GT});
      if (rel == Rel::EQ || rel == Rel::LE || rel == Rel::LT) upper.push_back({side, rel == Rel::LT});
    }
    if (dead) continue;
    for (const auto& l : lower) {
      for (const auto& u : upper) {
        auto [f, c] = make_cmp(l.side, l.strict || u.strict ? Rel::LT : Rel::LE, u.side, n.mode);
        if (f == Fold::False) dead = true;
        if (f == Fold::Keep) rest.push_back(*c);
      }
    }
    if (dead) continue;
    std::sort(rest.begin(), rest.end());
    rest.erase(std::unique(rest.begin(), rest.end()), rest.end());
    cl.constraints = std::move(rest);
    work.push_back(std::move(cl));
  }
  return out;
}

NormalizedClauseSet split_ground_slr(const ClauseSet& n) {
  NormalizedClauseSet out;
  out.set = n;
  out.set.clauses.clear();
  if (n.mode != Mode::SLR) throw FragmentError("split_ground_slr applies to SLR clause sets");
  auto taken = all_names(n);
  std::size_t counter = 0;
  std::map<GroundTerm, SkolemId> shared;
  auto constant = [&](const GroundTerm& t) -> GroundTerm {
    if (t.is_constant()) return t;
    auto it = shared.find(t);
    if (it == shared.end()) {
      const std::string name = fresh(kFreshSkolem, taken, counter);
      taken.insert(name);
      const auto id = static_cast<SkolemId>(out.set.skolems.size());
      out.set.skolems.push_back(name);
      it = shared.emplace(t, id).first;
      Clause def;
      def.constraints.push_back(SkolemDef{id, Rel::NE, t});
      out.defs.push_back(std::move(def));
    }
    return GroundTerm::skolem(it->second);
  };
  for (const Clause& cl : n.clauses) {
    const bool is_def = cl.constraints.size() == 1 && cl.premises.empty() && cl.conclusions.empty() &&
                        std::holds_alternative<SkolemDef>(cl.constraints[0]) &&
                        std::get<SkolemDef>(cl.constraints[0]).rel == Rel::NE;
    if (is_def) {
      out.defs.push_back(cl);
      continue;
    }
    Clause c = cl;
    bool dead = false;
    std::vector<Constraint> kept;
    for (auto k : c.constraints) {
      if (const auto* d = std::get_if<SkolemDef>(&k)) k = GroundCmp{GroundTerm::skolem(d->d), d->rel, d->t};
      if (auto* g = std::get_if<GroundCmp>(&k)) {
        if (g->lhs.is_rational() && g->rhs.is_rational()) {
          if (!holds(g->lhs.offset, g->rel, g->rhs.offset)) dead = true;
          continue;
        }
        g->lhs = constant(g->lhs);
        g->rhs = constant(g->rhs);
      } else if (auto* v = std::get_if<VarConst>(&k)) {
        v->bound = constant(v->bound);
      }
      kept.push_back(k);
    }
    if (dead) continue;  // constraints contradictory: the clause holds vacuously
    c.constraints = std::move(kept);
    out.set.clauses.push_back(std::move(c));
  }
  for (const auto& [t, id] : shared) {
    std::string origin;
    for (const auto& [d, k] : t.coeffs) origin += (origin.empty() ? "" : " + ") + k.to_string() + "*" + n.skolems[d];
    if (!t.offset.is_zero() || origin.empty()) origin += (origin.empty() ? "" : " + ") + t.offset.to_string();
    out.provenance[out.set.skolems[id]] = origin;
  }
  return out;
}

ClauseSet rename_apart(const ClauseSet& n) {
  ClauseSet out = n;
  std::set<std::string> taken(n.free_constants.begin(), n.free_constants.end());
  taken.insert(n.skolems.begin(), n.skolems.end());
  for (const auto& p : n.predicates) taken.insert(p.name);
  for (auto& cl : out.clauses) {
    std::set<std::string> local;
    for (auto* names : {&cl.base_vars, &cl.free_vars}) {
      for (auto& name : *names) {
        if (!taken.contains(name) && !local.contains(name)) {
          local.insert(name);
          continue;
        }
        for (std::size_t k = 1;; ++k) {
          std::string cand = name + "_" + std::to_string(k);
          if (!taken.contains(cand) && !local.contains(cand)) {
            name = cand;
            local.insert(cand);
            break;
          }
        }
      }
    }
    taken.insert(local.begin(), local.end());
  }
  return out;
}

NormalizedClauseSet normalize(const ClauseSet& n) {
  if (n.mode == Mode::LA) throw FragmentError("clause set is in mode la, which is outside both fragments");
  if (n.mode == Mode::BD && !n.skolems.empty()) throw FragmentError("Skolem constants are not allowed in mode bd");
  for (const auto& cl : n.clauses)
    for (const auto& c : cl.constraints)
      if (std::holds_alternative<LinearCmp>(c)) throw FragmentError("general linear constraint outside the fragment");
  check_bd_guards(n);

  ClauseSet s = pad_predicates(n);
  BigInt factor = 1;
  if (s.mode == Mode::BD) s = scale_to_integers(s, &factor);
  s = purify(s);
  s = eliminate_constraint_only_vars(s);

  NormalizedClauseSet out;
  if (s.mode == Mode::SLR) {
    out = split_ground_slr(s);
  } else {
    out.set = s;
  }
  out.scale = factor;
  const std::size_t before = out.set.free_constants.size();
  out.set = ensure_free_constant(rename_apart(out.set));
  if (out.set.free_constants.size() != before) out.provenance[out.set.free_constants.back()] = "free constant added";
  for (const auto& cl : out.set.clauses)
    for (const auto& v : cl.base_vars)
      if (v.rfind(kFreshVar, 0) == 0 && !out.provenance.contains(v)) out.provenance[v] = "padding variable";
  check_bd_guards(out.set);
  if (auto v = normal_form_violations(out); !v.empty()) throw Error("normalize produced an invalid set: " + v.front());
  return out;
}

std::vector<std::string> normal_form_violations(const NormalizedClauseSet& n) {
  std::vector<std::string> out;
  const ClauseSet& s = n.set;
  if (s.free_constants.empty()) out.push_back("no free constant");
  for (const auto& p : s.predicates)
    if (p.free_arity != s.predicates.front().free_arity || p.base_arity != s.predicates.front().base_arity)
      out.push_back("predicate " + p.name + " has a non-uniform sort");
  std::map<std::string, std::size_t> owner;
  for (std::size_t i = 0; i < s.clauses.size(); ++i) {
    const Clause& cl = s.clauses[i];
    const std::string where = "clause " + std::to_string(i + 1) + ": ";
    const auto in_atoms = atom_vars(cl);
    for (const auto& c : cl.constraints) {
      for (VarId v : constraint_vars(c))
        if (!in_atoms.contains(v)) out.push_back(where + "variable " + cl.base_vars[v] + " occurs only in constraints");
      const bool ok = std::visit(
          [&](const auto& a) {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, VarConst>)
              return s.mode == Mode::BD ? a.bound.is_rational() && a.bound.offset.is_integer() : a.bound.is_constant();
            else if constexpr (std::is_same_v<T, VarVar>) return s.mode == Mode::SLR;
            else if constexpr (std::is_same_v<T, DiffConst>) return s.mode == Mode::BD && a.c.is_integer();
            else if constexpr (std::is_same_v<T, GroundCmp>)
              return s.mode == Mode::SLR && a.lhs.is_constant() && a.rhs.is_constant();
            else return false;
          },
          c);
      if (!ok) out.push_back(where + "constraint outside the normal form");
    }
    for (const auto* names : {&cl.base_vars, &cl.free_vars}) {
      for (const auto& name : *names) {
        auto [it, fresh_name] = owner.emplace(name, i);
        if (!fresh_name && it->second != i) out.push_back(where + "variable " + name + " shared with another clause");
      }
    }
  }
  for (const auto& d : n.defs) {
    const bool ok = d.constraints.size() == 1 && d.premises.empty() && d.conclusions.empty() &&
                    std::holds_alternative<SkolemDef>(d.constraints[0]);
    if (!ok) out.push_back("malformed definition clause");
  }
  return out;
}

}  // namespace bsrbd
