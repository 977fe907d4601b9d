#include "bsrbd/decide.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "bsrbd/error.hpp"

namespace bsrbd {

std::vector<Preorder> enumerate_preorders(const std::vector<SkolemId>& skolems, const std::vector<Rational>& rationals) {
  std::vector<BaseConstant> elems(skolems.begin(), skolems.end());
  std::vector<Rational> rs = rationals;
  std::sort(rs.begin(), rs.end());
  rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
  elems.insert(elems.end(), rs.begin(), rs.end());
  const std::size_t n = elems.size();
  if (n > 20) throw ResourceLimit("too many base constants for preorder enumeration");

  std::vector<Preorder> out;
  Preorder cur;
  // Blocks are chosen front to back as nonempty subsets of the remaining
  // elements, in increasing bitmask order.
  auto rec = [&](auto&& self, std::uint32_t remaining, const Rational* last_rational) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (std::uint32_t sub = 1; sub < (1U << n); ++sub) {
      if ((sub & remaining) != sub) continue;
      std::vector<BaseConstant> block;
      const Rational* rat = nullptr;
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        if (!(sub & (1U << i))) continue;
        block.push_back(elems[i]);
        if (const auto* r = std::get_if<Rational>(&elems[i])) {
          if (rat) ok = false;
          rat = r;
        }
      }
      if (!ok) continue;
      if (rat && last_rational && !(*last_rational < *rat)) continue;
      // every rational left must come after this block's rational
      if (rat) {
        bool smaller_left = false;
        for (std::size_t i = 0; i < n; ++i) {
          if (!(remaining & ~sub & (1U << i))) continue;
          if (const auto* r = std::get_if<Rational>(&elems[i]); r && *r < *rat) smaller_left = true;
        }
        if (smaller_left) continue;
      }
      cur.push_back(std::move(block));
      self(self, remaining & ~sub, rat ? rat : last_rational);
      cur.pop_back();
    }
  };
  rec(rec, n == 0 ? 0 : (1U << n) - 1, nullptr);
  return out;
}

namespace {

GroundTerm as_term(const BaseConstant& c) {
  if (const auto* d = std::get_if<SkolemId>(&c)) return GroundTerm::skolem(*d);
  return GroundTerm::constant(std::get<Rational>(c));
}

}  // namespace

GroundSystem preorder_system(const Preorder& p) {
  GroundSystem sys;
  for (std::size_t b = 0; b < p.size(); ++b) {
    for (std::size_t i = 1; i < p[b].size(); ++i) sys.constraints.push_back({as_term(p[b][0]), Rel::EQ, as_term(p[b][i])});
    if (b + 1 < p.size()) sys.constraints.push_back({as_term(p[b][0]), Rel::LT, as_term(p[b + 1][0])});
  }
  return sys;
}

std::vector<Rational> base_rationals(const ClauseSet& n) {
  std::set<Rational> s;
  auto term = [&](const GroundTerm& t) {
    if (t.is_rational()) s.insert(t.offset);
  };
  for (const auto& cl : n.clauses) {
    for (const auto& c : cl.constraints) {
      if (const auto* a = std::get_if<VarConst>(&c)) term(a->bound);
      else if (const auto* a = std::get_if<GroundCmp>(&c)) {
        term(a->lhs);
        term(a->rhs);
      } else if (const auto* a = std::get_if<DiffConst>(&c)) {
        s.insert(a->c);
      }
    }
  }
  return {s.begin(), s.end()};
}

std::int64_t bd_kappa(const ClauseSet& n) {
  BigInt k = 0;
  for (const auto& r : n.rationals()) {
    const Rational a = r.abs();
    BigInt c = a.floor();
    if (!a.is_integer()) c += 1;
    if (c > k) k = c;
  }
  if (k < 1) k = 1;
  return to_int64(k);
}

namespace {

// Classes of one arity meeting a list of variable bounds, shared by every
// clause with the same bounds. Representatives are kept as integer
// numerators over a common denominator so the remaining constraints can be
// checked without rational arithmetic.
struct ClassList {
  std::uint32_t arity = 0;
  std::vector<RegionClass> classes;
  std::vector<std::int64_t> num;  // arity entries per class
  std::vector<std::int64_t> den;
  std::vector<bool> exact;        // numerators fit; otherwise fall back
  std::map<std::vector<VarId>, std::vector<std::uint32_t>> projected;
};

constexpr std::uint32_t kUnset = 0xFFFFFFFFU;

class ClassCache {
 public:
  ClassCache(const RegionScheme& scheme, ClassTable& table) : scheme_(scheme), table_(table) {}

  ClassList& list(std::uint32_t arity, const std::vector<VarConst>& bounds) {
    auto [it, fresh] = lists_.try_emplace({arity, bounds});
    if (!fresh) return it->second;
    ClassList& l = it->second;
    l.arity = arity;
    Clause probe;
    probe.base_vars.resize(arity);
    for (const auto& b : bounds) probe.constraints.emplace_back(b);
    enumerate_classes(scheme_, arity, lambda_filter(probe, scheme_, {}), [&](const RegionClass& c) {
      const auto rep = scheme_.representative(c);
      BigInt d = 1;
      for (const auto& r : rep) d = lcm(d, r.denominator());
      bool ok = d.fits_slong_p();
      for (const auto& r : rep) {
        const BigInt v = r.numerator() * (d / r.denominator());
        ok = ok && v.fits_slong_p();
        l.num.push_back(ok ? v.get_si() : 0);
      }
      l.den.push_back(ok ? d.get_si() : 1);
      l.exact.push_back(ok);
      l.classes.push_back(c);
      return true;
    });
    return l;
  }

  // Id in the class table of the class of (t[pattern[0]], ...) for t in entry e.
  std::uint32_t project(ClassList& l, std::size_t e, const std::vector<VarId>& pattern) {
    auto& ids = l.projected[pattern];
    if (ids.empty()) ids.assign(l.classes.size(), kUnset);
    if (ids[e] == kUnset) ids[e] = table_.intern(select_class(l.classes[e], pattern));
    return ids[e];
  }

 private:
  const RegionScheme& scheme_;
  ClassTable& table_;
  std::map<std::pair<std::uint32_t, std::vector<VarConst>>, ClassList> lists_;
};

bool scaled_holds(__int128 lhs, Rel rel, __int128 rhs) { return holds(lhs, rel, rhs); }

// Checks a VarVar or DiffConst with small constants on an exact entry of l.
bool check(const ClassList& l, std::size_t e, const Constraint& c) {
  const std::int64_t* x = &l.num[e * l.arity];
  const __int128 d = l.den[e];
  if (const auto* v = std::get_if<VarVar>(&c)) return scaled_holds(x[v->x], v->rel, x[v->y]);
  if (const auto* v = std::get_if<DiffConst>(&c)) {
    const __int128 lhs = (static_cast<__int128>(x[v->x]) - x[v->y]) * v->c.denominator().get_si();
    return scaled_holds(lhs, v->rel, static_cast<__int128>(v->c.numerator().get_si()) * d);
  }
  return true;
}

// Per clause: the feasible classes of its base variables, each stored as the
// class ids of the clause's predicate atoms (premises first).
struct Template {
  const Clause* clause;
  std::vector<const PredAtom*> atoms;
  std::size_t premise_atoms = 0;
  std::vector<std::uint32_t> rows;  // atoms.size() ids per feasible class
  std::size_t row_count = 0;
};

Template make_template(const Clause& cl, const RegionScheme& scheme, std::span<const Rational> gamma,
                       ClassTable& classes, ClassCache& cache) {
  Template t;
  t.clause = &cl;
  for (const auto& a : cl.premises)
    if (const auto* p = std::get_if<PredAtom>(&a)) t.atoms.push_back(p);
  t.premise_atoms = t.atoms.size();
  for (const auto& a : cl.conclusions)
    if (const auto* p = std::get_if<PredAtom>(&a)) t.atoms.push_back(p);
  const auto nb = static_cast<std::uint32_t>(cl.base_vars.size());
  // ground constraints first, then bounds, then the rest
  std::vector<VarConst> bounds;
  std::vector<const Constraint*> rest;
  for (const auto& c : cl.constraints) {
    if (constraint_vars(c).empty()) {
      if (!eval_constraint(c, {}, gamma)) return t;
    } else if (const auto* v = std::get_if<VarConst>(&c)) {
      bounds.push_back({v->x, v->rel, GroundTerm::constant(eval_term(v->bound, gamma))});
    } else {
      rest.push_back(&c);
    }
  }
  if (nb == 0) {
    const std::uint32_t id = classes.intern(scheme.class_of({}));
    for (std::size_t i = 0; i < t.atoms.size(); ++i) t.rows.push_back(id);
    t.row_count = 1;
    return t;
  }
  std::sort(bounds.begin(), bounds.end());
  bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());
  ClassList& l = cache.list(nb, bounds);
  const bool fast = std::all_of(rest.begin(), rest.end(), [](const Constraint* c) {
    if (const auto* v = std::get_if<DiffConst>(c))
      return v->c.numerator().fits_slong_p() && v->c.denominator().fits_slong_p();
    return std::holds_alternative<VarVar>(*c);
  });
  for (std::size_t e = 0; e < l.classes.size(); ++e) {
    bool ok = true;
    if (fast && l.exact[e]) {
      for (const Constraint* c : rest)
        if (!check(l, e, *c)) {
          ok = false;
          break;
        }
    } else if (!rest.empty()) {
      const auto rep = scheme.representative(l.classes[e]);
      for (const Constraint* c : rest)
        if (!eval_constraint(*c, rep, gamma)) {
          ok = false;
          break;
        }
    }
    if (!ok) continue;
    for (const PredAtom* a : t.atoms) t.rows.push_back(cache.project(l, e, a->base_args));
    ++t.row_count;
  }
  return t;
}

// Turns templates into propositional clauses for one candidate. Variables
// are numbered by first occurrence.
class Grounder {
 public:
  Grounder(std::span<const std::uint32_t> domain, std::span<const std::uint32_t> fconst_value)
      : domain_(domain), fconst_value_(fconst_value) {
    for (std::uint32_t e : domain) max_elem_ = std::max(max_elem_, e + 1);
  }

  void add(const Template& t) {
    const Clause& cl = *t.clause;
    std::vector<std::uint64_t> arg_codes(t.atoms.size());
    for_each_tuple(domain_, cl.free_vars.size(), [&](std::span<const std::uint32_t> free) {
      auto value = [&](const FreeTerm& x) { return x.is_var() ? free[x.id] : fconst_value_[x.id]; };
      for (const auto& a : cl.premises)
        if (const auto* e = std::get_if<Equation>(&a); e && value(e->lhs) != value(e->rhs)) return;
      for (const auto& a : cl.conclusions)
        if (const auto* e = std::get_if<Equation>(&a); e && value(e->lhs) == value(e->rhs)) return;
      for (std::size_t i = 0; i < t.atoms.size(); ++i) {
        std::uint64_t code = t.atoms[i]->pred;
        for (const auto& x : t.atoms[i]->free_args) code = code * max_elem_ + value(x);
        arg_codes[i] = code;
      }
      const std::size_t w = t.atoms.size();
      for (std::size_t r = 0; r < t.row_count; ++r) {
        for (std::size_t i = 0; i < w; ++i) {
          const Lit v = var(t.atoms[i], arg_codes[i], t.rows[r * w + i], free);
          inst_.lits.push_back(i < t.premise_atoms ? -v : v);
        }
        inst_.starts.push_back(static_cast<std::uint32_t>(inst_.lits.size()));
      }
    });
  }

  PropInstance take() {
    inst_.num_vars = static_cast<std::uint32_t>(preds_.size());
    return std::move(inst_);
  }

  // PropAtom of variable v (1-based).
  PropAtom atom(std::size_t v) const {
    PropAtom p{preds_[v - 1], {}, cls_[v - 1]};
    p.args.assign(args_.begin() + static_cast<std::ptrdiff_t>(arg_start_[v - 1]),
                  args_.begin() + static_cast<std::ptrdiff_t>(arg_start_[v]));
    return p;
  }
  std::size_t num_vars() const { return preds_.size(); }

 private:
  Lit var(const PredAtom* a, std::uint64_t code, std::uint32_t cls, std::span<const std::uint32_t> free) {
    auto [it, fresh] = ids_.try_emplace(Key{code, cls}, static_cast<Lit>(preds_.size() + 1));
    if (!fresh) return it->second;
    preds_.push_back(a->pred);
    cls_.push_back(cls);
    for (const auto& x : a->free_args) args_.push_back(x.is_var() ? free[x.id] : fconst_value_[x.id]);
    arg_start_.push_back(static_cast<std::uint32_t>(args_.size()));
    return it->second;
  }

  struct Key {
    std::uint64_t code;
    std::uint32_t cls;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return std::hash<std::uint64_t>{}(k.code * 0x9E3779B97F4A7C15ULL ^ k.cls);
    }
  };

  std::span<const std::uint32_t> domain_;
  std::span<const std::uint32_t> fconst_value_;
  std::uint32_t max_elem_ = 1;
  std::unordered_map<Key, Lit, KeyHash> ids_;
  std::vector<PredId> preds_;
  std::vector<std::uint32_t> cls_;
  std::vector<std::uint32_t> args_;
  std::vector<std::uint32_t> arg_start_{0};
  PropInstance inst_;
};

std::vector<Template> make_templates(const NormalizedClauseSet& n, const RegionScheme& scheme,
                                     std::span<const Rational> gamma, ClassTable& classes) {
  ClassCache cache(scheme, classes);
  std::vector<Template> out;
  for (const auto& cl : n.defs) out.push_back(make_template(cl, scheme, gamma, classes, cache));
  for (const auto& cl : n.set.clauses) out.push_back(make_template(cl, scheme, gamma, classes, cache));
  return out;
}

// (domain, constant assignment) pairs in the documented order.
struct Candidate {
  std::vector<std::uint32_t> domain;
  std::vector<std::uint32_t> value;
};

template <class F>
bool for_each_candidate(std::size_t nconst, bool symmetry, F&& f) {
  if (symmetry) {
    // restricted growth strings, grouped by number of blocks
    for (std::size_t blocks = 1; blocks <= nconst; ++blocks) {
      std::vector<std::uint32_t> rgs(nconst, 0);
      auto rec = [&](auto&& self, std::size_t i, std::uint32_t used) -> bool {
        if (i == nconst) {
          if (used != blocks) return true;
          Candidate c;
          std::vector<std::uint32_t> rep(blocks, 0);
          for (std::size_t j = nconst; j-- > 0;) rep[rgs[j]] = static_cast<std::uint32_t>(j);
          c.domain = rep;
          for (std::size_t j = 0; j < nconst; ++j) c.value.push_back(rep[rgs[j]]);
          return f(c);
        }
        for (std::uint32_t b = 0; b <= used && b < blocks; ++b) {
          rgs[i] = b;
          if (!self(self, i + 1, std::max(used, b + 1))) return false;
        }
        return true;
      };
      if (!rec(rec, 0, 0)) return false;
    }
    return true;
  }
  for (std::size_t size = 1; size <= nconst; ++size) {
    // subsets of this size in lexicographic order
    std::vector<std::uint32_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = static_cast<std::uint32_t>(i);
    while (true) {
      bool go = true;
      for_each_tuple(pick, nconst, [&](std::span<const std::uint32_t> vals) {
        if (!go) return;
        Candidate c{pick, std::vector<std::uint32_t>(vals.begin(), vals.end())};
        go = f(c);
      });
      if (!go) return false;
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == nconst - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return true;
}

}  // namespace

PropInstance ground_to_prop(const NormalizedClauseSet& n, const RegionScheme& scheme, std::span<const Rational> gamma,
                            std::span<const std::uint32_t> domain, std::span<const std::uint32_t> fconst_value,
                            ClassTable& classes, std::vector<PropAtom>& atoms) {
  const auto ts = make_templates(n, scheme, gamma, classes);
  Grounder g(domain, fconst_value);
  for (const auto& t : ts) g.add(t);
  for (std::size_t v = 1; v <= g.num_vars(); ++v) atoms.push_back(g.atom(v));
  return g.take();
}

DecideResult decide(const NormalizedClauseSet& n, const DecideOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  DecideResult res;
  auto& st = res.stats;
  const std::size_t nconst = n.set.free_constants.size();
  if (nconst == 0) throw FragmentError("normalized set has no free constant");

  // Returns true when a model was found.
  auto try_gamma = [&](const RegionScheme& scheme, const std::vector<Rational>& gamma) {
    ClassTable classes;
    const auto ts = make_templates(n, scheme, gamma, classes);
    for (const auto& t : ts) st.classes += t.row_count;
    bool found = false;
    for_each_candidate(nconst, opt.symmetry, [&](const Candidate& c) {
      ++st.candidates;
      if (opt.max_candidates && st.candidates > *opt.max_candidates)
        throw ResourceLimit("more than " + std::to_string(*opt.max_candidates) + " candidates needed");
      Grounder g(c.domain, c.value);
      for (const auto& t : ts) g.add(t);
      const PropInstance inst = g.take();
      st.prop_vars += inst.num_vars;
      st.prop_clauses += inst.num_clauses();
      SatStats ss;
      auto sol = prop_solve(inst, &ss);
      st.decisions += ss.decisions;
      st.conflicts += ss.conflicts;
      if (!sol) return true;
      InterpretationDescriptor m;
      m.mode = n.set.mode;
      m.scheme = scheme;
      m.domain = c.domain;
      m.fconst_value = c.value;
      m.gamma = gamma;
      m.classes = classes;
      for (std::size_t v = 1; v <= g.num_vars(); ++v) m.table.emplace(g.atom(v), (*sol)[v]);
      if (!verify_model(n, m, opt.verify)) throw Error("internal error: model failed verification");
      res.model = std::move(m);
      found = true;
      return false;
    });
    return found;
  };

  if (n.set.mode == Mode::BD) {
    const RegionScheme scheme = RegionScheme::unbounded(bd_kappa(n.set));
    res.sat = try_gamma(scheme, {});
  } else {
    std::vector<SkolemId> sks(n.set.skolems.size());
    for (SkolemId d = 0; d < sks.size(); ++d) sks[d] = d;
    const auto rats = base_rationals(n.set);
    std::set<std::vector<std::size_t>> seen;
    for (const auto& p : enumerate_preorders(sks, rats)) {
      ++st.preorders;
      GroundSystem sys = preorder_system(p);
      for (const auto& d : n.defs) {
        const auto& def = std::get<SkolemDef>(d.constraints[0]);
        sys.constraints.push_back({GroundTerm::skolem(def.d), negate(def.rel), def.t});
      }
      auto val = solve_ground(sys);
      if (!val) continue;
      std::vector<Rational> gamma(sks.size(), Rational(0));
      for (const auto& [d, r] : *val) gamma.at(d) = r;
      // the order type of gamma and the rationals; equal types give equal instances
      std::vector<Rational> pts = gamma;
      pts.insert(pts.end(), rats.begin(), rats.end());
      std::vector<Rational> sorted = pts;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      std::vector<std::size_t> type;
      for (const auto& r : pts) type.push_back(static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), r) - sorted.begin()));
      if (!seen.insert(type).second) continue;
      ++st.gammas;
      if (try_gamma(RegionScheme::slr(PartitionJ(sorted)), gamma)) {
        res.sat = true;
        break;
      }
    }
  }
  st.wall = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
  return res;
}

namespace {

// Table search for decide_naive.
class NaiveSearch {
 public:
  struct Instance {
    std::vector<std::pair<std::uint32_t, bool>> lits;  // atom, polarity
  };

  std::uint32_t atom(const PropAtom& a) {
    auto [it, fresh] = ids_.emplace(a, static_cast<std::uint32_t>(ids_.size()));
    return it->second;
  }

  // False when the instance can never be satisfied.
  bool add(Instance in) {
    if (in.lits.empty()) return false;
    std::uint32_t last = 0;
    for (const auto& l : in.lits) last = std::max(last, l.first);
    by_last_[last].push_back(std::move(in));
    return true;
  }

  std::optional<bool> run(std::uint64_t& budget) {
    const auto n = static_cast<std::uint32_t>(ids_.size());
    values_.assign(n, false);
    return dfs(0, n, budget);
  }

 private:
  std::optional<bool> dfs(std::uint32_t i, std::uint32_t n, std::uint64_t& budget) {
    if (i == n) return true;
    for (bool v : {false, true}) {
      if (budget == 0) return std::nullopt;
      --budget;
      values_[i] = v;
      bool ok = true;
      if (auto it = by_last_.find(i); it != by_last_.end()) {
        for (const auto& in : it->second) {
          bool sat = false;
          for (const auto& [a, pol] : in.lits)
            if (values_[a] == pol) sat = true;
          if (!sat) {
            ok = false;
            break;
          }
        }
      }
      if (!ok) continue;
      auto r = dfs(i + 1, n, budget);
      if (!r || *r) return r;
    }
    return false;
  }

  std::map<PropAtom, std::uint32_t> ids_;
  std::map<std::uint32_t, std::vector<Instance>> by_last_;
  std::vector<bool> values_;
};

// Structure used only for the free part and Skolem values; predicate atoms
// are handled by the search.
class FreeOnly : public Structure {
 public:
  FreeOnly(std::span<const std::uint32_t> value, std::span<const Rational> gamma) : value_(value), gamma_(gamma) {}
  std::uint32_t free_constant(ConstId c) const override { return value_[c]; }
  std::span<const Rational> skolem_values() const override { return gamma_; }
  bool holds(PredId, std::span<const std::uint32_t>, std::span<const Rational>) const override { return false; }

 private:
  std::span<const std::uint32_t> value_;
  std::span<const Rational> gamma_;
};

std::optional<bool> naive_for(const ClauseSet& n, const RegionScheme& scheme, std::span<const Rational> gamma,
                              std::span<const std::uint32_t> domain, std::span<const std::uint32_t> value,
                              std::uint64_t& budget) {
  NaiveSearch search;
  std::map<RegionClass, std::uint32_t> classes;
  auto intern = [&](const RegionClass& c) {
    return classes.emplace(c, static_cast<std::uint32_t>(classes.size())).first->second;
  };
  const FreeOnly fo(value, gamma);
  bool dead = false;
  for (const auto& cl : n.clauses) {
    const auto nb = static_cast<std::uint32_t>(cl.base_vars.size());
    enumerate_classes(scheme, nb, [&](const RegionClass& c) {
      const auto rep = scheme.representative(c);
      if (!eval_lambda(cl, rep, gamma)) return true;
      for_each_tuple(domain, cl.free_vars.size(), [&](std::span<const std::uint32_t> free) {
        if (dead) return;
        const Assignment asg{rep, std::vector<std::uint32_t>(free.begin(), free.end())};
        NaiveSearch::Instance in;
        for (int side = 0; side < 2; ++side) {
          const bool premise = side == 0;
          for (const auto& a : premise ? cl.premises : cl.conclusions) {
            if (const auto* p = std::get_if<PredAtom>(&a)) {
              std::vector<Rational> sub;
              for (VarId x : p->base_args) sub.push_back(rep[x]);
              PropAtom key{p->pred, {}, 0};
              for (const auto& t : p->free_args) key.args.push_back(t.is_var() ? free[t.id] : value[t.id]);
              key.cls = intern(scheme.class_of(sub));
              in.lits.push_back({search.atom(key), !premise});
            } else {
              const bool holds = eval_atom(a, fo, asg);
              if (holds != premise) return;  // false premise or true conclusion
            }
          }
        }
        if (!search.add(std::move(in))) dead = true;
      });
      return !dead;
    });
    if (dead) return false;
  }
  return search.run(budget);
}

}  // namespace

std::optional<bool> decide_naive(const ClauseSet& n, std::uint64_t node_limit) {
  if (n.mode == Mode::LA) throw FragmentError("mode la is outside both fragments");
  std::uint64_t budget = node_limit;
  const std::size_t nconst = std::max<std::size_t>(n.free_constants.size(), 1);

  auto over_domains = [&](const RegionScheme& scheme, std::span<const Rational> gamma) -> std::optional<bool> {
    std::optional<bool> result = false;
    // set partitions of the constants, by restricted growth strings
    std::vector<std::uint32_t> rgs(nconst, 0);
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t used) -> void {
      if (result != false) return;
      if (i == nconst) {
        std::vector<std::uint32_t> domain(used);
        for (std::uint32_t b = 0; b < used; ++b) domain[b] = b;
        auto r = naive_for(n, scheme, gamma, domain, rgs, budget);
        if (!r) result = std::nullopt;
        else if (*r) result = true;
        return;
      }
      for (std::uint32_t b = 0; b <= used; ++b) {
        rgs[i] = b;
        self(self, i + 1, std::max(used, b + 1));
      }
    };
    rec(rec, 0, 0);
    return result;
  };

  if (n.mode == Mode::BD) {
    for (const auto& r : n.rationals())
      if (!r.is_integer()) throw FragmentError("the naive procedure needs integer constants in mode bd");
    return over_domains(RegionScheme::unbounded(bd_kappa(n)), {});
  }

  // SLR: gamma ranges over a grid, one representative per behaviour
  std::vector<Rational> grid;
  for (long k = -12; k <= 16; ++k) grid.push_back(Rational(BigInt(k), BigInt(4)));
  std::set<Rational> rats_set;
  std::vector<const Constraint*> ground;
  for (const auto& cl : n.clauses) {
    for (const auto& c : cl.constraints) {
      if (constraint_vars(c).empty()) ground.push_back(&c);
      auto term = [&](const GroundTerm& t) {
        if (t.is_rational()) rats_set.insert(t.offset);
      };
      if (const auto* a = std::get_if<VarConst>(&c)) term(a->bound);
      if (const auto* a = std::get_if<GroundCmp>(&c)) {
        term(a->lhs);
        term(a->rhs);
      }
    }
  }
  const std::vector<Rational> rats(rats_set.begin(), rats_set.end());
  const std::size_t ns = n.skolems.size();
  std::set<std::pair<std::vector<std::size_t>, std::vector<bool>>> seen;
  std::vector<Rational> gamma(ns);
  std::optional<bool> result = false;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (result != false) return;
    if (i == ns) {
      std::vector<Rational> pts = gamma;
      pts.insert(pts.end(), rats.begin(), rats.end());
      std::vector<Rational> sorted = pts;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      std::vector<std::size_t> type;
      for (const auto& r : pts) type.push_back(static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), r) - sorted.begin()));
      std::vector<bool> truth;
      for (const Constraint* c : ground) truth.push_back(eval_constraint(*c, {}, gamma));
      if (!seen.emplace(type, truth).second) return;
      auto r = over_domains(RegionScheme::slr(PartitionJ(sorted)), gamma);
      if (!r) result = std::nullopt;
      else if (*r) result = true;
      return;
    }
    for (const auto& g : grid) {
      gamma[i] = g;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return result;
}

}  // namespace bsrbd
