// Independent reference implementations used as test oracles. Nothing here
// calls into the library code it checks.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bsrbd/rational.hpp"

namespace bsrbd::oracle {

// Position of r relative to every point: -1 below, 0 on, +1 above.
inline std::vector<int> point_signs(const Rational& r, std::span<const Rational> points) {
  std::vector<int> out;
  for (const auto& p : points) out.push_back(r < p ? -1 : (r == p ? 0 : 1));
  return out;
}

// r ~J s straight from the definition: same interval for every coordinate,
// same value order for every pair.
inline bool slr_equiv(std::span<const Rational> r, std::span<const Rational> s, std::span<const Rational> points) {
  for (std::size_t i = 0; i < r.size(); ++i)
    if (point_signs(r[i], points) != point_signs(s[i], points)) return false;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j)
      if ((r[i] < r[j]) != (s[i] < s[j])) return false;
  return true;
}

inline Rational frac(const Rational& r) {
  Rational f(r.numerator() - r.denominator() * r.floor(), r.denominator());
  return f;
}

inline bool bounded_equiv(std::span<const Rational> r, std::span<const Rational> s) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i].floor() != s[i].floor()) return false;
    if (frac(r[i]).is_zero() != frac(s[i]).is_zero()) return false;
  }
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j)
      if ((frac(r[i]) <= frac(r[j])) != (frac(s[i]) <= frac(s[j]))) return false;
  return true;
}

inline bool unbounded_equiv(std::span<const Rational> r, std::span<const Rational> s, std::int64_t kappa) {
  const Rational k(kappa), mk(-kappa);
  auto above = [&](const Rational& x) { return x > k; };
  auto below = [&](const Rational& x) { return x < mk; };
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (above(r[i]) && above(s[i])) continue;
    if (below(r[i]) && below(s[i])) continue;
    if (above(r[i]) || above(s[i]) || below(r[i]) || below(s[i])) return false;
    if (r[i].floor() != s[i].floor()) return false;
    if (frac(r[i]).is_zero() != frac(s[i]).is_zero()) return false;
  }
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) {
      if ((above(r[i]) && above(r[j])) || (below(r[i]) && below(r[j])))
        if ((r[i] <= r[j]) != (s[i] <= s[j])) return false;
      if (!above(r[i]) && !below(r[i]) && !above(r[j]) && !below(r[j]))
        if ((frac(r[i]) <= frac(r[j])) != (frac(s[i]) <= frac(s[j]))) return false;
    }
  return true;
}

// Number of ordered set partitions of n elements, by the recurrence over the
// size of the first block.
inline std::uint64_t ordered_bell(unsigned n) {
  std::vector<std::uint64_t> a(n + 1, 0);
  a[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    std::uint64_t binom = 1;
    for (unsigned j = 1; j <= m; ++j) {
      binom = binom * (m - j + 1) / j;
      a[m] += binom * a[m - j];
    }
  }
  return a[n];
}

}  // namespace bsrbd::oracle
