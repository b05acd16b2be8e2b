#pragma once

/**
 * @file catalog.hpp
 * @brief Named test groups built from explicit recipes.
 */

#include <algorithm>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lmsym/error.hpp"
#include "lmsym/group.hpp"

namespace lmsym {

struct CatalogEntry {
  std::string name;
  Group group;
  std::string construction;
};

namespace detail {

inline std::string power_label(std::string_view letter, long long e) {
  if (e == 0) return "";
  if (e == 1) return std::string(letter);
  return std::string(letter) + "^" + std::to_string(e);
}

}  // namespace detail

/// Group of words r^a s^b (0 <= a < m, 0 <= b < n) with r^m = 1, s^n = r^c and
/// s r s^-1 = r^k. Requires k^n = 1 and k c = c modulo m. Element r^a s^b has
/// index a + m b.
inline Group metacyclic(unsigned m, unsigned n, unsigned k, unsigned c, std::string name,
                        std::string_view r = "r", std::string_view s = "s") {
  const std::size_t order = std::size_t{m} * n;
  std::vector<unsigned> kpow(n, 1);
  for (unsigned b = 1; b < n; ++b) kpow[b] = (kpow[b - 1] * k) % m;
  Table t(order, std::vector<Element>(order));
  for (unsigned a1 = 0; a1 < m; ++a1)
    for (unsigned b1 = 0; b1 < n; ++b1)
      for (unsigned a2 = 0; a2 < m; ++a2)
        for (unsigned b2 = 0; b2 < n; ++b2) {
          unsigned a = (a1 + kpow[b1] * a2) % m;
          unsigned b = b1 + b2;
          if (b >= n) {
            b -= n;
            a = (a + c) % m;
          }
          t[a1 + m * b1][a2 + m * b2] = a + m * b;
        }
  std::vector<std::string> labels(order);
  for (unsigned a = 0; a < m; ++a)
    for (unsigned b = 0; b < n; ++b) {
      std::string l = detail::power_label(r, a) + detail::power_label(s, b);
      labels[a + m * b] = l.empty() ? "1" : l;
    }
  return group_from_table(t, std::move(labels), std::move(name));
}

inline Group cyclic(unsigned n, std::string_view letter = "c") {
  return metacyclic(n, 1, 1 % std::max(n, 1u), 0, "C" + std::to_string(n), letter, "s");
}

inline Group dihedral(unsigned order) {
  const unsigned m = order / 2;
  return metacyclic(m, 2, m - 1, 0, "D" + std::to_string(order));
}

/// Dicyclic group of order 4m (generalized quaternion when 4m is a power of 2).
inline Group dicyclic(unsigned order, std::string name) {
  const unsigned m = order / 2;
  return metacyclic(m, 2, m - 1, m / 2, std::move(name));
}

inline Group quaternion8() {
  Group q = dicyclic(8, "Q8");
  // r = i, s = j, r^2 = -1, rs = k.
  const std::vector<std::string> labels{"1", "i", "-1", "-i", "j", "k", "-j", "-k"};
  return group_from_table(q.table(), labels, "Q8");
}

inline Group elementary_abelian_2(unsigned rank) {
  Group g = cyclic(2, "a");
  for (unsigned i = 1; i < rank; ++i) g = direct_product(g, cyclic(2, std::string(1, char('a' + i))));
  return g.renamed("C2^" + std::to_string(rank));
}

inline Group symmetric_group(unsigned degree, std::string name) {
  Permutation swap01(degree), cycle(degree);
  for (unsigned i = 0; i < degree; ++i) {
    swap01[i] = i;
    cycle[i] = (i + 1) % degree;
  }
  std::swap(swap01[0], swap01[1]);
  return group_from_permutations(degree, {swap01, cycle}, kDefaultOrderLimit, std::move(name));
}

inline Group alternating4() {
  return group_from_permutations(4, {{1, 2, 0, 3}, {0, 2, 3, 1}}, kDefaultOrderLimit, "A4");
}

/// D8 x C4 modulo <(r^2, c^2)>: the central product of D8 and C4 over their central C2.
inline Group central_product_d8_c4() {
  const Group d8 = dihedral(8);
  const Group c4 = cyclic(4);
  const Group p = direct_product(d8, c4);
  const Element r2 = *find_label(d8, "r^2");
  const Element c2 = *find_label(c4, "c^2");
  const Element z = *find_label(p, "(" + d8.label(r2) + "," + c4.label(c2) + ")");
  return quotient(p, generated_subgroup(p, {z}), "D8oC4");
}

/// Every catalog group of order <= max_order, sorted by order (stable).
inline std::vector<CatalogEntry> catalog(std::size_t max_order = 32) {
  std::vector<CatalogEntry> all;
  auto add = [&](std::size_t order, auto make, std::string recipe) {
    if (order > max_order) return;
    Group g = make();
    all.push_back({g.name(), std::move(g), std::move(recipe)});
  };
  for (unsigned n = 1; n <= 16; ++n)
    add(n, [n] { return cyclic(n); }, "<c | c^" + std::to_string(n) + ">");
  for (unsigned k = 2; k <= 4; ++k)
    add(std::size_t{1} << k, [k] { return elementary_abelian_2(k); },
        "direct product of " + std::to_string(k) + " copies of C2");
  add(6, [] { return symmetric_group(3, "S3"); }, "permutations generated by (0 1), (0 1 2)");
  add(8, [] { return dihedral(8); }, "<r, s | r^4, s^2, srs = r^-1>");
  add(8, quaternion8, "<r, s | r^4, s^2 = r^2, s r s^-1 = r^-1>, r = i, s = j");
  add(10, [] { return dihedral(10); }, "<r, s | r^5, s^2, srs = r^-1>");
  add(12, [] { return dihedral(12); }, "<r, s | r^6, s^2, srs = r^-1>");
  add(12, [] { return dicyclic(12, "Dic12"); }, "<r, s | r^6, s^2 = r^3, s r s^-1 = r^-1>");
  add(12, alternating4, "permutations generated by (0 1 2), (1 2 3)");
  add(16, [] { return dihedral(16); }, "<r, s | r^8, s^2, srs = r^-1>");
  add(16, [] { return dicyclic(16, "Q16"); }, "<r, s | r^8, s^2 = r^4, s r s^-1 = r^-1>");
  add(16, [] { return metacyclic(8, 2, 3, 0, "SD16"); }, "<r, s | r^8, s^2, r^s = r^3>");
  add(16, [] { return metacyclic(8, 2, 5, 0, "M16"); }, "<r, s | r^8, s^2, r^s = r^5>");
  add(16, [] { return direct_product(cyclic(4, "a"), cyclic(4, "b"), "C4xC4"); }, "C4 x C4");
  add(16, [] { return metacyclic(4, 4, 3, 0, "C4:C4", "a", "b"); }, "<a, b | a^4, b^4, a^b = a^-1>");
  add(16, [] { return direct_product(quaternion8(), cyclic(2), "Q8xC2"); }, "Q8 x C2");
  add(16, [] { return direct_product(dihedral(8), cyclic(2), "D8xC2"); }, "D8 x C2");
  add(16, central_product_d8_c4, "D8 x C4 / <(r^2, c^2)>");
  add(24, [] { return symmetric_group(4, "S4"); }, "permutations generated by (0 1), (0 1 2 3)");
  add(32, [] { return direct_product(direct_product(quaternion8(), cyclic(2, "a")), cyclic(2, "b"), "Q8xC2xC2"); },
      "Q8 x C2 x C2");
  add(32, [] { return direct_product(dicyclic(16, "Q16"), cyclic(2), "Q16xC2"); }, "Q16 x C2");
  add(32, [] { return direct_product(quaternion8(), cyclic(4), "Q8xC4"); }, "Q8 x C4");
  add(32, [] { return direct_product(direct_product(dihedral(8), cyclic(2, "a")), cyclic(2, "b"), "D8xC2xC2"); },
      "D8 x C2 x C2");
  std::stable_sort(all.begin(), all.end(),
                   [](const CatalogEntry& a, const CatalogEntry& b) { return a.group.order() < b.group.order(); });
  return all;
}

/// Accepts the ASCII catalog names as well as the x, semidirect and
/// central-product symbols written as Unicode.
inline std::string normalize_group_name(std::string_view name) {
  std::string out(name);
  auto replace_all = [&](std::string_view from, std::string_view to) {
    for (std::size_t pos = 0; (pos = out.find(from, pos)) != std::string::npos; pos += to.size())
      out.replace(pos, from.size(), to);
  };
  replace_all("×", "x");
  replace_all("⋊", ":");
  replace_all("∘", "o");
  return out;
}

inline std::optional<CatalogEntry> find_catalog_entry(std::string_view name) {
  const std::string wanted = normalize_group_name(name);
  for (auto& e : catalog(std::numeric_limits<std::size_t>::max()))
    if (e.name == wanted) return e;
  return std::nullopt;
}

inline Group catalog_group(std::string_view name) {
  auto e = find_catalog_entry(name);
  if (!e) throw Error(ErrorKind::kUnknownGroup, "no catalog group named '" + std::string(name) + "'");
  return e->group;
}

}  // namespace lmsym
