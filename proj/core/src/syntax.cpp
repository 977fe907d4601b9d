#include "bsrbd/syntax.hpp"

#include <algorithm>
#include <numeric>

#include "bsrbd/error.hpp"

namespace bsrbd {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& msg)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg), line_(line), column_(column) {}

std::string_view to_string(Rel r) {
  switch (r) {
    case Rel::LT: return "<";
    case Rel::LE: return "<=";
    case Rel::EQ: return "=";
    case Rel::NE: return "!=";
    case Rel::GE: return ">=";
    case Rel::GT: return ">";
  }
  return "?";
}

std::optional<Rel> parse_rel(std::string_view s) {
  if (s == "<") return Rel::LT;
  if (s == "<=") return Rel::LE;
  if (s == "=") return Rel::EQ;
  if (s == "!=") return Rel::NE;
  if (s == ">=") return Rel::GE;
  if (s == ">") return Rel::GT;
  return std::nullopt;
}

Rel flip(Rel r) {
  switch (r) {
    case Rel::LT: return Rel::GT;
    case Rel::LE: return Rel::GE;
    case Rel::GE: return Rel::LE;
    case Rel::GT: return Rel::LT;
    default: return r;
  }
}

Rel negate(Rel r) {
  switch (r) {
    case Rel::LT: return Rel::GE;
    case Rel::LE: return Rel::GT;
    case Rel::EQ: return Rel::NE;
    case Rel::NE: return Rel::EQ;
    case Rel::GE: return Rel::LT;
    case Rel::GT: return Rel::LE;
  }
  return r;
}

bool is_strict(Rel r) { return r == Rel::LT || r == Rel::GT; }

std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::SLR: return "slr";
    case Mode::BD: return "bd";
    case Mode::LA: return "la";
  }
  return "?";
}

GroundTerm GroundTerm::constant(Rational r) {
  GroundTerm t;
  t.offset = std::move(r);
  return t;
}

GroundTerm GroundTerm::skolem(SkolemId d) {
  GroundTerm t;
  t.coeffs.emplace(d, Rational(1));
  return t;
}

std::optional<SkolemId> GroundTerm::as_skolem() const {
  if (coeffs.size() == 1 && offset.is_zero() && coeffs.begin()->second == Rational(1))
    return coeffs.begin()->first;
  return std::nullopt;
}

GroundTerm& GroundTerm::operator+=(const GroundTerm& o) {
  offset += o.offset;
  for (const auto& [d, k] : o.coeffs) {
    auto& slot = coeffs[d];
    slot += k;
    if (slot.is_zero()) coeffs.erase(d);
  }
  return *this;
}

GroundTerm& GroundTerm::operator-=(const GroundTerm& o) {
  offset -= o.offset;
  for (const auto& [d, k] : o.coeffs) {
    auto& slot = coeffs[d];
    slot -= k;
    if (slot.is_zero()) coeffs.erase(d);
  }
  return *this;
}

GroundTerm& GroundTerm::operator*=(const Rational& k) {
  if (k.is_zero()) {
    coeffs.clear();
    offset = Rational(0);
    return *this;
  }
  offset *= k;
  for (auto& [d, c] : coeffs) c *= k;
  return *this;
}

namespace {

template <class Names>
std::optional<std::uint32_t> find_name(const Names& names, std::string_view name) {
  for (std::uint32_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  return std::nullopt;
}

void collect_rationals(const GroundTerm& t, std::set<Rational>& out) {
  out.insert(t.offset);
  for (const auto& [d, k] : t.coeffs) out.insert(k);
}

}  // namespace

std::optional<PredId> ClauseSet::find_predicate(std::string_view name) const {
  for (PredId i = 0; i < predicates.size(); ++i)
    if (predicates[i].name == name) return i;
  return std::nullopt;
}

std::optional<ConstId> ClauseSet::find_free_constant(std::string_view name) const {
  return find_name(free_constants, name);
}

std::optional<SkolemId> ClauseSet::find_skolem(std::string_view name) const { return find_name(skolems, name); }

std::set<Rational> ClauseSet::rationals() const {
  std::set<Rational> out;
  for (const auto& cl : clauses) {
    for (const auto& c : cl.constraints) {
      std::visit(
          [&](const auto& a) {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, VarConst>) {
              if (a.bound.is_rational()) out.insert(a.bound.offset);
              else collect_rationals(a.bound, out);
            } else if constexpr (std::is_same_v<T, DiffConst>) {
              out.insert(a.c);
            } else if constexpr (std::is_same_v<T, GroundCmp>) {
              if (a.lhs.is_rational()) out.insert(a.lhs.offset);
              else if (!a.lhs.as_skolem()) collect_rationals(a.lhs, out);
              if (a.rhs.is_rational()) out.insert(a.rhs.offset);
              else if (!a.rhs.as_skolem()) collect_rationals(a.rhs, out);
            } else if constexpr (std::is_same_v<T, SkolemDef>) {
              collect_rationals(a.t, out);
            } else if constexpr (std::is_same_v<T, LinearCmp>) {
              out.insert(a.constant);
            }
          },
          c);
    }
  }
  return out;
}

std::vector<VarId> constraint_vars(const Constraint& c) {
  return std::visit(
      [](const auto& a) -> std::vector<VarId> {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, VarConst>) return {a.x};
        else if constexpr (std::is_same_v<T, VarVar>) return {a.x, a.y};
        else if constexpr (std::is_same_v<T, DiffConst>) return {a.x, a.y};
        else if constexpr (std::is_same_v<T, LinearCmp>) {
          std::vector<VarId> v;
          for (const auto& [x, k] : a.coeffs) v.push_back(x);
          return v;
        } else return {};
      },
      c);
}

std::set<SkolemId> constraint_skolems(const Constraint& c) {
  std::set<SkolemId> out;
  auto add = [&](const GroundTerm& t) {
    for (const auto& [d, k] : t.coeffs) out.insert(d);
  };
  std::visit(
      [&](const auto& a) {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, VarConst>) add(a.bound);
        else if constexpr (std::is_same_v<T, GroundCmp>) {
          add(a.lhs);
          add(a.rhs);
        } else if constexpr (std::is_same_v<T, SkolemDef>) {
          out.insert(a.d);
          add(a.t);
        }
      },
      c);
  return out;
}

bool has_rational_bounds(const Clause& cl, VarId x) {
  bool lower = false;
  bool upper = false;
  for (const auto& c : cl.constraints) {
    const auto* vc = std::get_if<VarConst>(&c);
    if (vc == nullptr || vc->x != x || !vc->bound.is_rational()) continue;
    if (vc->rel == Rel::GE || vc->rel == Rel::GT || vc->rel == Rel::EQ) lower = true;
    if (vc->rel == Rel::LE || vc->rel == Rel::LT || vc->rel == Rel::EQ) upper = true;
  }
  return lower && upper;
}

void check_bd_guards(const ClauseSet& set) {
  if (set.mode != Mode::BD) return;
  for (std::size_t i = 0; i < set.clauses.size(); ++i) {
    const Clause& cl = set.clauses[i];
    for (const auto& c : cl.constraints) {
      const auto* d = std::get_if<DiffConst>(&c);
      if (d == nullptr) continue;
      for (VarId v : {d->x, d->y}) {
        if (!has_rational_bounds(cl, v)) {
          throw GuardError("clause " + std::to_string(i + 1) + ": difference constraint " + cl.base_vars[d->x] +
                           " - " + cl.base_vars[d->y] + " " + std::string(to_string(d->rel)) + " " +
                           d->c.to_string() + " lacks rational lower and upper bounds on " + cl.base_vars[v]);
        }
      }
    }
  }
}

namespace {

struct Renumbering {
  std::vector<VarId> base;  // old -> new
  std::vector<VarId> free;
};

Renumbering first_occurrence(const Clause& cl) {
  constexpr VarId unset = ~VarId{0};
  Renumbering r{std::vector<VarId>(cl.base_vars.size(), unset), std::vector<VarId>(cl.free_vars.size(), unset)};
  VarId nb = 0;
  VarId nf = 0;
  auto see_base = [&](VarId v) {
    if (r.base[v] == unset) r.base[v] = nb++;
  };
  auto see_free = [&](const FreeTerm& t) {
    if (t.is_var() && r.free[t.id] == unset) r.free[t.id] = nf++;
  };
  for (const auto& c : cl.constraints)
    for (VarId v : constraint_vars(c)) see_base(v);
  auto see_atoms = [&](const std::vector<FreeAtom>& atoms) {
    for (const auto& a : atoms) {
      if (const auto* e = std::get_if<Equation>(&a)) {
        see_free(e->lhs);
        see_free(e->rhs);
      } else {
        const auto& p = std::get<PredAtom>(a);
        for (const auto& t : p.free_args) see_free(t);
        for (VarId v : p.base_args) see_base(v);
      }
    }
  };
  see_atoms(cl.premises);
  see_atoms(cl.conclusions);
  for (auto& v : r.base)
    if (v == unset) v = nb++;
  for (auto& v : r.free)
    if (v == unset) v = nf++;
  return r;
}

Clause apply(const Clause& cl, const Renumbering& r) {
  Clause out;
  out.base_vars.resize(cl.base_vars.size());
  out.free_vars.resize(cl.free_vars.size());
  for (std::size_t i = 0; i < r.base.size(); ++i) out.base_vars[r.base[i]] = cl.base_vars[i];
  for (std::size_t i = 0; i < r.free.size(); ++i) out.free_vars[r.free[i]] = cl.free_vars[i];
  auto ft = [&](FreeTerm t) {
    if (t.is_var()) t.id = r.free[t.id];
    return t;
  };
  for (const auto& c : cl.constraints) {
    out.constraints.push_back(std::visit(
        [&](auto a) -> Constraint {
          using T = std::decay_t<decltype(a)>;
          if constexpr (std::is_same_v<T, VarConst>) a.x = r.base[a.x];
          else if constexpr (std::is_same_v<T, VarVar> || std::is_same_v<T, DiffConst>) {
            a.x = r.base[a.x];
            a.y = r.base[a.y];
          } else if constexpr (std::is_same_v<T, LinearCmp>) {
            std::map<VarId, Rational> m;
            for (const auto& [x, k] : a.coeffs) m.emplace(r.base[x], k);
            a.coeffs = std::move(m);
          }
          return a;
        },
        c));
  }
  auto atoms = [&](const std::vector<FreeAtom>& in, std::vector<FreeAtom>& dst) {
    for (const auto& a : in) {
      if (const auto* e = std::get_if<Equation>(&a)) {
        dst.emplace_back(Equation{ft(e->lhs), ft(e->rhs)});
      } else {
        PredAtom p = std::get<PredAtom>(a);
        for (auto& t : p.free_args) t = ft(t);
        for (auto& v : p.base_args) v = r.base[v];
        dst.emplace_back(std::move(p));
      }
    }
  };
  atoms(cl.premises, out.premises);
  atoms(cl.conclusions, out.conclusions);
  return out;
}

}  // namespace

Clause canonicalize(const Clause& cl) {
  Clause cur = cl;
  for (int round = 0; round < 16; ++round) {
    Clause next = apply(cur, first_occurrence(cur));
    std::sort(next.constraints.begin(), next.constraints.end());
    std::sort(next.premises.begin(), next.premises.end());
    std::sort(next.conclusions.begin(), next.conclusions.end());
    if (next == cur) break;
    cur = std::move(next);
  }
  return cur;
}

ClauseSet canonicalize(const ClauseSet& set) {
  ClauseSet out = set;
  for (auto& cl : out.clauses) cl = canonicalize(cl);
  return out;
}

}  // namespace bsrbd
