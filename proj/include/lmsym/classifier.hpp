#pragma once

/**
 * @file classifier.hpp
 * @brief Structural conditions deciding Lie metabelian RG+ and commutative G-check.
 *
 * RG+ is Lie metabelian iff one of
 *   (1) <g : g^2 != 1> is abelian,
 *   (2) G has an elementary abelian 2-subgroup of index 2,
 *   (3) G has an abelian subgroup B of index 2 and x of order 4 with b^x = b^-1 on B,
 *   (4) Z(G) = {g : g^2 = 1} and [G : Z(G)] = 4.
 * G-check is commutative iff (1) or (2) holds.
 */

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "lmsym/group.hpp"

namespace lmsym {

/// Index-2 subgroups of G, one per nonzero functional on G/<commutators, squares>,
/// in ascending order of the functional's bitmask.
inline std::vector<Subgroup> index_two_subgroups(const Group& G) {
  const std::size_t n = G.order();
  std::vector<Element> gens;
  for (Element g = 0; g < n; ++g) {
    gens.push_back(G.mul(g, g));
    for (Element h = g + 1; h < n; ++h) gens.push_back(comm(G, g, h));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  const Subgroup frattini = generated_subgroup(G, gens);

  // Coordinates of every element in the elementary abelian quotient.
  std::vector<std::uint32_t> coord(n, 0);
  std::vector<bool> reached(n, false);
  std::vector<Element> span(frattini.begin(), frattini.end());
  for (Element g : span) reached[g] = true;
  unsigned dim = 0;
  for (Element b = 0; b < n; ++b) {
    if (reached[b]) continue;
    const std::uint32_t bit = 1u << dim++;
    const std::size_t old = span.size();
    for (std::size_t i = 0; i < old; ++i) {
      const Element bh = G.mul(b, span[i]);
      reached[bh] = true;
      coord[bh] = coord[span[i]] | bit;
      span.push_back(bh);
    }
  }

  std::vector<Subgroup> out;
  for (std::uint32_t f = 1; f < (1u << dim); ++f) {
    std::vector<Element> kernel;
    for (Element g = 0; g < n; ++g)
      if (std::popcount(f & coord[g]) % 2 == 0) kernel.push_back(g);
    out.emplace_back(n, std::move(kernel));
  }
  return out;
}

/// K = <g : g^2 != 1>
inline Subgroup non_involution_subgroup(const Group& G) {
  return generated_by(G, [&](Element g) { return G.mul(g, g) != kIdentity; });
}

struct Condition1 {
  bool holds = false;
  Subgroup k;
};

inline Condition1 condition1(const Group& G) {
  Condition1 c{false, non_involution_subgroup(G)};
  c.holds = is_abelian(G, c.k);
  return c;
}

struct Condition2 {
  bool holds = false;
  std::optional<Subgroup> subgroup;
};

inline Condition2 condition2(const Group& G) {
  for (auto& H : index_two_subgroups(G))
    if (is_elementary_abelian_2(G, H)) return {true, std::move(H)};
  return {};
}

inline bool inverts(const Group& G, const Subgroup& B, Element x) {
  for (Element b : B)
    if (conj(G, b, x) != G.inv(b)) return false;
  return true;
}

struct Condition3 {
  bool holds = false;
  std::optional<Subgroup> b;
  std::optional<Element> x;
};

/// x ranges over all of G; x outside B is not required.
inline Condition3 condition3(const Group& G) {
  for (auto& B : index_two_subgroups(G)) {
    if (!is_abelian(G, B)) continue;
    for (Element x = 0; x < G.order(); ++x)
      if (element_order(G, x) == 4 && inverts(G, B, x)) return {true, std::move(B), x};
  }
  return {};
}

struct Condition4 {
  bool holds = false;
  Subgroup center;
};

inline Condition4 condition4(const Group& G) {
  Condition4 c{false, center(G)};
  c.holds = c.center.elements() == involution_set(G) && G.order() == 4 * c.center.size();
  return c;
}

inline bool is_hamiltonian_2group(const Group& G) {
  if (!is_two_group(G) || is_abelian(G)) return false;
  for (Element g = 0; g < G.order(); ++g) {
    const Subgroup cyc = generated_subgroup(G, {g});
    for (Element h = 0; h < G.order(); ++h)
      if (!cyc.contains(conj(G, g, h))) return false;
  }
  return true;
}

struct ConditionReport {
  bool c1 = false, c2 = false, c3 = false, c4 = false;
  bool t2_1 = false, t2_2 = false;
  bool hamiltonian_2group = false;

  Subgroup k_subgroup;                       // <g : g^2 != 1>, witness for c1 / t2_1
  std::optional<Subgroup> elementary_index2;  // witness for c2 / t2_2
  std::optional<Subgroup> c3_b;
  std::optional<Element> c3_x;
  Subgroup c4_center;

  bool theorem1() const { return c1 || c2 || c3 || c4; }
  bool theorem2() const { return t2_1 || t2_2; }
};

inline ConditionReport theorem1_verdict(const Group& G) {
  ConditionReport r;
  auto one = condition1(G);
  auto two = condition2(G);
  auto three = condition3(G);
  auto four = condition4(G);
  r.c1 = r.t2_1 = one.holds;
  r.k_subgroup = std::move(one.k);
  r.c2 = r.t2_2 = two.holds;
  r.elementary_index2 = std::move(two.subgroup);
  r.c3 = three.holds;
  r.c3_b = std::move(three.b);
  r.c3_x = three.x;
  r.c4 = four.holds;
  r.c4_center = std::move(four.center);
  r.hamiltonian_2group = is_hamiltonian_2group(G);
  return r;
}

struct Theorem2Verdict {
  bool holds = false;
  bool k_abelian = false;
  bool elementary_index2 = false;
};

inline Theorem2Verdict theorem2_verdict(const Group& G) {
  const bool a = condition1(G).holds;
  const bool b = condition2(G).holds;
  return {a || b, a, b};
}

/// Re-checks every witness stored in a report against its defining property.
inline bool witnesses_verify(const Group& G, const ConditionReport& r) {
  const Subgroup k = non_involution_subgroup(G);
  if (!(r.k_subgroup == k) || r.c1 != is_abelian(G, k)) return false;
  if (r.c2) {
    const auto& H = r.elementary_index2;
    if (!H || !is_elementary_abelian_2(G, *H) || subgroup_index(G, *H) != 2 ||
        !(generated_subgroup(G, H->elements()) == *H))
      return false;
  }
  if (r.c3) {
    if (!r.c3_b || !r.c3_x) return false;
    const auto& B = *r.c3_b;
    if (!is_abelian(G, B) || subgroup_index(G, B) != 2 || element_order(G, *r.c3_x) != 4 ||
        !inverts(G, B, *r.c3_x) || !(generated_subgroup(G, B.elements()) == B))
      return false;
  }
  if (r.c4) {
    if (!(r.c4_center == center(G)) || r.c4_center.elements() != involution_set(G) ||
        subgroup_index(G, r.c4_center) != 4)
      return false;
  }
  return true;
}

}  // namespace lmsym
