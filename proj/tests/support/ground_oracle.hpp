// Brute-force satisfiability of small ground systems over the grid
// {i/48 : -480 <= i <= 480}, in scaled integer arithmetic. 48 covers the
// sixteenths that coefficient-2 equations over eighths force.
#pragma once

#include <algorithm>
#include <climits>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "bsrbd/linarith.hpp"

namespace bsrbd::oracle {

constexpr long kGridDen = 48;
constexpr long kGridMax = 480;

// sum a[j] * i_j + b  rel  0, all integers (the system scaled by 48).
struct ScaledRow {
  std::vector<long> a;
  long b;
  Rel rel;
};

inline long to_long(const Rational& r) { return r.numerator().get_si(); }

// Requires every constant denominator to divide 48.
inline std::vector<ScaledRow> scale(const GroundSystem& sys, std::size_t nvars) {
  std::vector<ScaledRow> rows;
  for (const auto& c : sys.constraints) {
    GroundTerm d = c.lhs - c.rhs;
    ScaledRow r{std::vector<long>(nvars, 0), 0, c.rel};
    // Coefficients are integers; the offset is multiplied by 48.
    for (const auto& [v, k] : d.coeffs) r.a[v] = to_long(k);
    r.b = to_long(d.offset * Rational(kGridDen));
    rows.push_back(r);
  }
  return rows;
}

inline bool rel_holds(long v, Rel rel) {
  switch (rel) {
    case Rel::LT: return v < 0;
    case Rel::LE: return v <= 0;
    case Rel::EQ: return v == 0;
    case Rel::NE: return v != 0;
    case Rel::GE: return v >= 0;
    case Rel::GT: return v > 0;
  }
  return false;
}

// Integer values of the last variable satisfying every row, given the others;
// scans the single remaining coordinate.
inline bool last_var_feasible(const std::vector<ScaledRow>& rows, std::vector<long>& val, std::size_t last) {
  for (long i = -kGridMax; i <= kGridMax; ++i) {
    val[last] = i;
    bool ok = true;
    for (const auto& r : rows) {
      long s = r.b;
      for (std::size_t j = 0; j < r.a.size(); ++j) s += r.a[j] * val[j];
      if (!rel_holds(s, r.rel)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

// Does any grid point satisfy sys? Variables are 0..nvars-1.
inline bool grid_satisfiable(const GroundSystem& sys, std::size_t nvars) {
  auto rows = scale(sys, nvars);
  std::vector<long> val(nvars, 0);
  if (nvars == 0) {
    for (const auto& r : rows)
      if (!rel_holds(r.b, r.rel)) return false;
    return true;
  }
  // Rows that only mention variables < j can be checked before choosing j.
  auto max_var = [](const ScaledRow& r) {
    long m = -1;
    for (std::size_t j = 0; j < r.a.size(); ++j)
      if (r.a[j] != 0) m = static_cast<long>(j);
    return m;
  };
  std::function<bool(std::size_t)> rec = [&](std::size_t j) -> bool {
    if (j + 1 == nvars) return last_var_feasible(rows, val, j);
    for (long i = -kGridMax; i <= kGridMax; ++i) {
      val[j] = i;
      bool ok = true;
      for (const auto& r : rows) {
        if (max_var(r) != static_cast<long>(j)) continue;
        long s = r.b;
        for (std::size_t t = 0; t <= j; ++t) s += r.a[t] * val[t];
        if (!rel_holds(s, r.rel)) {
          ok = false;
          break;
        }
      }
      if (ok && rec(j + 1)) return true;
    }
    return false;
  };
  for (const auto& r : rows)
    if (max_var(r) < 0 && !rel_holds(r.b, r.rel)) return false;
  return rec(0);
}

// Random system over Skolems 0..nvars-1: integer coefficients in [-2, 2],
// offsets with denominators in {1, 2, 4} and magnitude at most 2.
inline GroundSystem random_system(std::mt19937& rng, std::size_t nvars, std::size_t ncons) {
  GroundSystem sys;
  auto term = [&]() {
    GroundTerm t = GroundTerm::constant(Rational(BigInt(static_cast<long>(rng() % 17) - 8),
                                                 BigInt(std::vector<long>{1, 2, 4}[rng() % 3])));
    if (t.offset.abs() > Rational(2)) t.offset = t.offset / Rational(4);
    for (std::size_t v = 0; v < nvars; ++v)
      if (rng() % 2) t += GroundTerm::skolem(static_cast<SkolemId>(v)) * Rational(static_cast<long>(rng() % 5) - 2);
    return t;
  };
  for (std::size_t i = 0; i < ncons; ++i) sys.constraints.push_back({term(), static_cast<Rel>(rng() % 6), term()});
  return sys;
}

}  // namespace bsrbd::oracle
