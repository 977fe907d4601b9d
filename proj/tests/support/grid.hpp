// Dense rational sample grids.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "bsrbd/rational.hpp"

namespace bsrbd::grid {

// i/den for lo_num <= i <= hi_num.
inline std::vector<Rational> axis(long lo_num, long hi_num, long den) {
  std::vector<Rational> out;
  for (long i = lo_num; i <= hi_num; ++i) out.emplace_back(BigInt(i), BigInt(den));
  return out;
}

// Calls f on every k-tuple over the axis.
inline void tuples(const std::vector<Rational>& ax, std::uint32_t k,
                   const std::function<void(const std::vector<Rational>&)>& f) {
  std::vector<std::size_t> idx(k, 0);
  std::vector<Rational> t(k, ax.empty() ? Rational(0) : ax[0]);
  if (ax.empty()) return;
  while (true) {
    f(t);
    std::uint32_t i = 0;
    while (i < k) {
      if (++idx[i] < ax.size()) {
        t[i] = ax[idx[i]];
        break;
      }
      idx[i] = 0;
      t[i] = ax[0];
      ++i;
    }
    if (i == k) return;
  }
}

}  // namespace bsrbd::grid
