// Brute-force monochromaticity checks, written without the library's
// enumeration helpers.
#pragma once

#include <functional>
#include <set>
#include <span>
#include <vector>

#include "bsrbd/ramsey.hpp"

namespace ramsey_check {

using bsrbd::Color;
using bsrbd::Rational;
using Coloring = std::function<Color(std::span<const Rational>)>;

inline void ascending_rec(const std::vector<Rational>& v, std::size_t k, std::size_t from, std::vector<Rational>& cur,
                          std::vector<std::vector<Rational>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < v.size(); ++i) {
    cur.push_back(v[i]);
    ascending_rec(v, k, i + 1, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<Rational>> ascending_tuples(const std::vector<Rational>& v, std::size_t k) {
  std::vector<std::vector<Rational>> out;
  std::vector<Rational> cur;
  ascending_rec(v, k, 0, cur, out);
  return out;
}

// Concatenations t_1 ++ ... ++ t_p of ascending m-tuples t_i from qs[i].
inline std::vector<std::vector<Rational>> product_tuples(const std::vector<std::vector<Rational>>& qs, std::size_t m) {
  std::vector<std::vector<Rational>> acc{{}};
  for (const auto& q : qs) {
    std::vector<std::vector<Rational>> next;
    for (const auto& a : acc)
      for (const auto& t : ascending_tuples(q, m)) {
        auto v = a;
        v.insert(v.end(), t.begin(), t.end());
        next.push_back(std::move(v));
      }
    acc = std::move(next);
  }
  return acc;
}

inline bool one_color(const std::vector<std::vector<Rational>>& tuples, const Coloring& chi) {
  std::set<Color> seen;
  for (const auto& t : tuples) {
    seen.insert(chi(t));
    if (seen.size() > 1) return false;
  }
  return true;
}

inline bool mono_ascending(const std::vector<Rational>& q, std::size_t m, const Coloring& chi) {
  return one_color(ascending_tuples(q, m), chi);
}

inline bool mono_product(const std::vector<std::vector<Rational>>& qs, std::size_t m, const Coloring& chi) {
  return one_color(product_tuples(qs, m), chi);
}

// Every index pattern: coordinate i reads entry l of block k's tuple, or the
// fixed real q[k - p].
inline bool mono_mapped(const std::vector<std::vector<Rational>>& qs, const std::vector<Rational>& fixed, std::size_t m,
                        const Coloring& chi) {
  const std::size_t p = qs.size();
  const std::size_t slots = p * m + fixed.size();
  const auto tuples = product_tuples(qs, m);
  std::size_t total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= slots;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::size_t> pick(m);
    std::size_t c = code;
    for (std::size_t i = 0; i < m; ++i) {
      pick[i] = c % slots;
      c /= slots;
    }
    std::set<Color> seen;
    for (const auto& t : tuples) {
      std::vector<Rational> u;
      for (auto s : pick) u.push_back(s < p * m ? t[s] : fixed[s - p * m]);
      seen.insert(chi(u));
      if (seen.size() > 1) return false;
    }
  }
  return true;
}

}  // namespace ramsey_check
