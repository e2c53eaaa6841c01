#pragma once

#include <functional>
#include <random>
#include <vector>

#include "hsw/character_lattice.hpp"

namespace hsw::testkit {

inline HighestWeight random_dominant(std::mt19937_64& rng, int d, Int k_max) {
  std::uniform_int_distribution<Int> dist(0, k_max);
  std::vector<Int> k1, k2;
  for (int s = 0; s < d; ++s) {
    Int a = dist(rng), b = dist(rng);
    if (a < b) std::swap(a, b);
    k1.push_back(a);
    k2.push_back(b);
  }
  // shift c by a random even amount so weights do not all sit at the default
  std::uniform_int_distribution<Int> shift(-3, 3);
  return make_weight(k1, k2, default_c(k1, k2) + 2 * shift(rng));
}

/// Calls f on every dominant weight with entries <= k_max and default c.
inline void for_each_dominant(int d, Int k_max, const std::function<void(const HighestWeight&)>& f) {
  std::vector<std::pair<Int, Int>> pairs;
  for (Int a = 0; a <= k_max; ++a)
    for (Int b = 0; b <= a; ++b) pairs.emplace_back(a, b);
  std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
  while (true) {
    std::vector<Int> k1, k2;
    for (auto j : idx) {
      k1.push_back(pairs[j].first);
      k2.push_back(pairs[j].second);
    }
    f(make_weight(k1, k2));
    int s = d - 1;
    for (; s >= 0; --s) {
      auto& j = idx[static_cast<std::size_t>(s)];
      if (++j < pairs.size()) break;
      j = 0;
    }
    if (s < 0) return;
  }
}

}  // namespace hsw::testkit
