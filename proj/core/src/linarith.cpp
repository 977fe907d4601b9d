#include "bsrbd/linarith.hpp"

#include <algorithm>

#include "bsrbd/error.hpp"
#include "bsrbd/eval.hpp"

namespace bsrbd {

namespace {

// e < 0 (strict) or e <= 0.
struct Row {
  GroundTerm e;
  bool strict;
  friend bool operator==(const Row&, const Row&) = default;
  friend auto operator<=>(const Row&, const Row&) = default;
};

Row make_row(GroundTerm e, bool strict) {
  if (!e.coeffs.empty()) e *= Rational(1) / e.coeffs.begin()->second.abs();
  return {std::move(e), strict};
}

// lhs rel rhs as rows; rel must not be NE.
void to_rows(const GroundCmp& c, std::vector<Row>& out) {
  GroundTerm d = c.lhs - c.rhs;
  switch (c.rel) {
    case Rel::LT: out.push_back(make_row(d, true)); break;
    case Rel::LE: out.push_back(make_row(d, false)); break;
    case Rel::GT: out.push_back(make_row(d * Rational(-1), true)); break;
    case Rel::GE: out.push_back(make_row(d * Rational(-1), false)); break;
    case Rel::EQ:
      out.push_back(make_row(d, false));
      out.push_back(make_row(d * Rational(-1), false));
      break;
    case Rel::NE: throw Error("disequation reached Fourier-Motzkin projection");
  }
}

bool row_holds(const Row& r) {
  return r.strict ? r.e.offset.sign() < 0 : r.e.offset.sign() <= 0;
}

// Bound on v read off a row a*v + rest <|<= 0: v <= -rest/a for a > 0 and
// v >= -rest/a for a < 0.
struct Bound {
  GroundTerm value;
  bool strict;
};

GroundTerm rest_over(const Row& r, SkolemId v, Rational& a) {
  a = r.e.coeffs.at(v);
  GroundTerm rest = r.e;
  rest.coeffs.erase(v);
  return rest * (Rational(-1) / a);
}

struct Split {
  std::vector<Bound> lower, upper;
  std::vector<Row> rest;
};

Split split_on(const std::vector<Row>& rows, SkolemId v) {
  Split s;
  for (const auto& r : rows) {
    if (!r.e.coeffs.contains(v)) {
      s.rest.push_back(r);
      continue;
    }
    Rational a;
    GroundTerm b = rest_over(r, v, a);
    (a.sign() > 0 ? s.upper : s.lower).push_back({std::move(b), r.strict});
  }
  return s;
}

struct Eliminated {
  SkolemId v;
  std::vector<Bound> lower, upper;
};

// Eliminates every variable in ascending order; returns false if a ground row fails.
bool eliminate_all(std::vector<Row> rows, std::vector<Eliminated>& trail) {
  std::set<SkolemId> vars;
  for (const auto& r : rows)
    for (const auto& [d, k] : r.e.coeffs) vars.insert(d);
  for (SkolemId v : vars) {
    Split s = split_on(rows, v);
    std::set<Row> next(s.rest.begin(), s.rest.end());
    for (const auto& lo : s.lower)
      for (const auto& hi : s.upper) next.insert(make_row(lo.value - hi.value, lo.strict || hi.strict));
    rows.clear();
    for (const auto& r : next) {
      if (r.e.is_rational()) {
        if (!row_holds(r)) return false;
      } else {
        rows.push_back(r);
      }
    }
    trail.push_back({v, std::move(s.lower), std::move(s.upper)});
  }
  for (const auto& r : rows)
    if (!row_holds(r)) return false;
  return true;
}

Valuation back_substitute(const std::vector<Eliminated>& trail) {
  Valuation val;
  auto value = [&](const GroundTerm& t) {
    Rational v = t.offset;
    for (const auto& [d, k] : t.coeffs) v += k * val.at(d);
    return v;
  };
  for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
    std::optional<Rational> lo, hi;
    for (const auto& b : it->lower) {
      Rational x = value(b.value);
      if (!lo || x > *lo) lo = x;
    }
    for (const auto& b : it->upper) {
      Rational x = value(b.value);
      if (!hi || x < *hi) hi = x;
    }
    Rational x(0);
    if (lo && hi) x = (*lo + *hi) / Rational(2);
    else if (lo) x = *lo + Rational(1);
    else if (hi) x = *hi - Rational(1);
    val[it->v] = x;
  }
  return val;
}

std::optional<Valuation> solve_without_ne(const std::vector<GroundCmp>& cmps) {
  std::vector<Row> rows;
  for (const auto& c : cmps) to_rows(c, rows);
  std::vector<Eliminated> trail;
  if (!eliminate_all(std::move(rows), trail)) return std::nullopt;
  return back_substitute(trail);
}

std::optional<Valuation> branch(std::vector<GroundCmp>& fixed, const std::vector<GroundCmp>& ne, std::size_t i) {
  if (i == ne.size()) return solve_without_ne(fixed);
  for (Rel r : {Rel::LT, Rel::GT}) {
    fixed.push_back({ne[i].lhs, r, ne[i].rhs});
    auto res = branch(fixed, ne, i + 1);
    fixed.pop_back();
    if (res) return res;
  }
  return std::nullopt;
}

}  // namespace

std::set<SkolemId> GroundSystem::variables() const {
  std::set<SkolemId> out;
  for (const auto& c : constraints) {
    for (const auto& [d, k] : c.lhs.coeffs) out.insert(d);
    for (const auto& [d, k] : c.rhs.coeffs) out.insert(d);
  }
  return out;
}

GroundSystem fm_project(const GroundSystem& sys, SkolemId v) {
  GroundSystem out;
  std::vector<Row> rows;
  for (const auto& c : sys.constraints) {
    if (!c.lhs.coeffs.contains(v) && !c.rhs.coeffs.contains(v)) {
      out.constraints.push_back(c);
      continue;
    }
    if (c.rel == Rel::NE) throw Error("fm_project: disequation on the eliminated variable");
    to_rows(c, rows);
  }
  Split s = split_on(rows, v);
  // v can cancel between the two sides
  for (const auto& r : s.rest) out.constraints.push_back({r.e, r.strict ? Rel::LT : Rel::LE, GroundTerm{}});
  for (const auto& lo : s.lower)
    for (const auto& hi : s.upper)
      out.constraints.push_back({lo.value, (lo.strict || hi.strict) ? Rel::LT : Rel::LE, hi.value});
  return out;
}

std::optional<Valuation> solve_ground(const GroundSystem& sys) {
  std::vector<GroundCmp> fixed, ne;
  for (const auto& c : sys.constraints) {
    GroundTerm d = c.lhs - c.rhs;
    if (d.is_rational()) {
      if (!holds(d.offset, c.rel, Rational(0))) return std::nullopt;
      continue;
    }
    (c.rel == Rel::NE ? ne : fixed).push_back(c);
  }
  auto val = branch(fixed, ne, 0);
  if (!val) return std::nullopt;
  for (SkolemId d : sys.variables()) val->try_emplace(d, Rational(0));
  return val;
}

bool satisfies(const GroundSystem& sys, const Valuation& val) {
  SkolemId top = 0;
  for (const auto& [d, v] : val) top = std::max(top, d + 1);
  std::vector<Rational> dense(top);
  for (const auto& [d, v] : val) dense[d] = v;
  for (const auto& c : sys.constraints)
    if (!eval_constraint(c, {}, dense)) return false;
  return true;
}

}  // namespace bsrbd
