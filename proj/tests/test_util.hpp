#pragma once

#include <algorithm>
#include <random>
#include <string_view>
#include <vector>

#include <gtest/gtest.h>

#include "lmsym/lmsym.hpp"

namespace lmsym::testing {

/// Element by display label; fails the test when absent.
inline Element el(const Group& G, std::string_view label) {
  auto g = find_label(G, label);
  if (!g) ADD_FAILURE() << "no element labelled '" << label << "' in " << G.name();
  return g.value_or(kIdentity);
}

inline RingElement term(const Group& G, std::string_view label, long long c = 1) {
  return RingElement(G, el(G, label), c);
}

/// Random element of ZG with small coefficients on a small support.
inline RingElement random_element(const Group& G, std::mt19937_64& rng, std::size_t support = 4) {
  RingElement r(G);
  for (std::size_t i = 0; i < support; ++i)
    r.add_term(static_cast<Element>(rng() % G.order()), static_cast<long long>(rng() % 7) - 3);
  return r;
}

/// Random permutation of [0, n).
inline std::vector<Element> random_relabeling(std::size_t n, std::mt19937_64& rng) {
  std::vector<Element> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<Element>(i);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace lmsym::testing
