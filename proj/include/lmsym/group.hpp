#pragma once

/**
 * @file group.hpp
 * @brief Finite groups as validated Cayley tables, plus subgroup machinery.
 *
 * Every Group is immutable after construction and cheap to copy (the table
 * is shared). Element 0 is always the identity.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lmsym/error.hpp"

namespace lmsym {

using Element = std::uint32_t;
inline constexpr Element kIdentity = 0;

using Table = std::vector<std::vector<Element>>;
using Permutation = std::vector<std::uint32_t>;

inline constexpr std::size_t kDefaultOrderLimit = 4096;
inline constexpr std::size_t kExhaustiveAssociativityLimit = 256;

class Group {
 public:
  std::size_t order() const noexcept { return d_->order; }

  Element mul(Element g, Element h) const noexcept { return d_->table[g * d_->order + h]; }
  Element inv(Element g) const noexcept { return d_->inverse[g]; }

  std::span<const Element> row(Element g) const noexcept {
    return {d_->table.data() + g * d_->order, d_->order};
  }

  const std::string& label(Element g) const { return d_->labels.at(g); }
  const std::vector<std::string>& labels() const noexcept { return d_->labels; }
  const std::string& name() const noexcept { return d_->name; }

  bool contains(Element g) const noexcept { return g < d_->order; }

  /// Two handles refer to the same group object (not merely isomorphic).
  bool same_as(const Group& other) const noexcept { return d_ == other.d_; }

  Table table() const {
    Table t(order(), std::vector<Element>(order()));
    for (Element g = 0; g < order(); ++g)
      for (Element h = 0; h < order(); ++h) t[g][h] = mul(g, h);
    return t;
  }

  /// Copy carrying a different display name. The copy is a distinct group
  /// object for the purpose of ring arithmetic.
  Group renamed(std::string name) const {
    auto data = std::make_shared<Data>(*d_);
    data->name = std::move(name);
    return Group(std::move(data));
  }

 private:
  struct Data {
    std::size_t order = 0;
    std::vector<Element> table;
    std::vector<Element> inverse;
    std::vector<std::string> labels;
    std::string name;
  };

  explicit Group(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  std::shared_ptr<const Data> d_;

  friend Group group_from_table(const Table&, std::vector<std::string>, std::string);
};

namespace detail {

inline std::string triple_str(std::size_t a, std::size_t b, std::size_t c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

// Closure of `seeds` under the (not yet validated) table product.
inline std::vector<bool> magma_closure(const Table& t, const std::vector<Element>& seeds) {
  const std::size_t n = t.size();
  std::vector<bool> in(n, false);
  std::vector<Element> members;
  for (Element s : seeds)
    if (!in[s]) { in[s] = true; members.push_back(s); }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (Element p : {t[members[i]][members[j]], t[members[j]][members[i]]}) {
        if (!in[p]) { in[p] = true; members.push_back(p); }
      }
    }
  }
  return in;
}

inline void check_associative(const Table& t) {
  const std::size_t n = t.size();
  auto fail = [](std::size_t a, std::size_t b, std::size_t c) {
    throw Error(ErrorKind::kNotAssociative, "(a*b)*c != a*(b*c) at triple " + triple_str(a, b, c));
  };
  if (n <= kExhaustiveAssociativityLimit) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Element ab = t[a][b];
        for (std::size_t c = 0; c < n; ++c)
          if (t[ab][c] != t[a][t[b][c]]) fail(a, b, c);
      }
    return;
  }
  // Light's test: checking the middle slot over a generating set suffices.
  std::vector<Element> gens;
  std::vector<bool> reached(n, false);
  for (Element g = 0; g < n; ++g) {
    if (reached[g]) continue;
    gens.push_back(g);
    reached = magma_closure(t, gens);
  }
  for (Element s : gens)
    for (std::size_t a = 0; a < n; ++a) {
      const Element as = t[a][s];
      for (std::size_t c = 0; c < n; ++c)
        if (t[as][c] != t[a][t[s][c]]) fail(a, s, c);
    }
}

}  // namespace detail

/// Validates a Cayley table and returns the group it defines. The element
/// acting as identity is moved to index 0 (swapping it with the old element 0).
inline Group group_from_table(const Table& table, std::vector<std::string> labels = {},
                              std::string name = {}) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorKind::kMalformedTable, "empty table");
  for (std::size_t r = 0; r < n; ++r) {
    if (table[r].size() != n)
      throw Error(ErrorKind::kMalformedTable, "row " + std::to_string(r) + " has length " +
                                                  std::to_string(table[r].size()) + ", expected " +
                                                  std::to_string(n));
    for (Element v : table[r])
      if (v >= n)
        throw Error(ErrorKind::kMalformedTable,
                    "row " + std::to_string(r) + " has out-of-range entry " + std::to_string(v));
  }
  if (!labels.empty() && labels.size() != n)
    throw Error(ErrorKind::kMalformedTable, "expected " + std::to_string(n) + " labels, got " +
                                                std::to_string(labels.size()));

  std::vector<bool> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), false);
    for (Element v : table[r]) {
      if (seen[v])
        throw Error(ErrorKind::kNotLatinSquare,
                    "row " + std::to_string(r) + " repeats entry " + std::to_string(v));
      seen[v] = true;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t r = 0; r < n; ++r) {
      const Element v = table[r][c];
      if (seen[v])
        throw Error(ErrorKind::kNotLatinSquare,
                    "column " + std::to_string(c) + " repeats entry " + std::to_string(v));
      seen[v] = true;
    }
  }

  std::optional<Element> identity;
  for (Element e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Element g = 0; g < n && ok; ++g) ok = table[e][g] == g && table[g][e] == g;
    if (ok) identity = e;
  }
  if (!identity) throw Error(ErrorKind::kNoIdentity, "no two-sided identity element");

  detail::check_associative(table);

  // Relabel so that the identity sits at index 0.
  std::vector<Element> sigma(n);
  std::iota(sigma.begin(), sigma.end(), Element{0});
  std::swap(sigma[0], sigma[*identity]);

  auto data = std::make_shared<Group::Data>();
  data->order = n;
  data->table.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      data->table[sigma[a] * n + sigma[b]] = sigma[table[a][b]];
  data->inverse.resize(n);
  for (Element g = 0; g < n; ++g)
    for (Element h = 0; h < n; ++h)
      if (data->table[g * n + h] == kIdentity) { data->inverse[g] = h; break; }

  if (labels.empty()) {
    labels.resize(n);
    for (std::size_t g = 0; g < n; ++g) labels[g] = std::to_string(g);
  } else {
    std::swap(labels[0], labels[*identity]);
  }
  data->labels = std::move(labels);
  data->name = std::move(name);
  return Group(std::move(data));
}

/// Cycle notation over the moved points, "()" for the identity.
inline std::string cycle_string(const Permutation& p) {
  std::string out;
  std::vector<bool> done(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == i) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j);
      first = false;
      j = p[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

/// Abstract group of the permutation group generated by `generators`.
/// Products compose left to right: (g*h)(i) = h(g(i)).
inline Group group_from_permutations(std::size_t degree, const std::vector<Permutation>& generators,
                                     std::size_t order_limit = kDefaultOrderLimit,
                                     std::string name = {}) {
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const auto& p = generators[k];
    std::vector<bool> hit(degree, false);
    bool ok = p.size() == degree;
    for (std::size_t i = 0; ok && i < p.size(); ++i) {
      ok = p[i] < degree && !hit[p[i]];
      if (ok) hit[p[i]] = true;
    }
    if (!ok)
      throw Error(ErrorKind::kNotAPermutation,
                  "generator " + std::to_string(k) + " is not a permutation of [0, " +
                      std::to_string(degree) + ")");
  }

  auto compose = [](const Permutation& g, const Permutation& h) {
    Permutation r(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) r[i] = h[g[i]];
    return r;
  };

  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::vector<Permutation> elems{id};
  std::map<Permutation, Element> index{{id, 0}};
  // Breadth-first closure; each non-identity element records (parent, generator).
  std::vector<std::pair<Element, std::size_t>> via{{0, 0}};
  std::vector<std::vector<Element>> right;  // right[e][k] = e * generators[k]
  for (std::size_t e = 0; e < elems.size(); ++e) {
    right.emplace_back(generators.size());
    for (std::size_t k = 0; k < generators.size(); ++k) {
      Permutation p = compose(elems[e], generators[k]);
      auto [it, inserted] = index.emplace(p, static_cast<Element>(elems.size()));
      if (inserted) {
        if (elems.size() >= order_limit)
          throw Error(ErrorKind::kOrderLimitExceeded,
                      "generated group exceeds " + std::to_string(order_limit) + " elements");
        elems.push_back(std::move(p));
        via.emplace_back(static_cast<Element>(e), k);
      }
      right[e][k] = it->second;
    }
  }

  const std::size_t n = elems.size();
  Table table(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a) table[a][0] = static_cast<Element>(a);
  for (std::size_t b = 1; b < n; ++b) {
    const auto [parent, gen] = via[b];
    for (std::size_t a = 0; a < n; ++a) table[a][b] = right[table[a][parent]][gen];
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& p : elems) labels.push_back(cycle_string(p));
  return group_from_table(table, std::move(labels), std::move(name));
}

inline Element mul(const Group& G, Element g, Element h) { return G.mul(g, h); }
inline Element inv(const Group& G, Element g) { return G.inv(g); }

/// h^{-1} g h
inline Element conj(const Group& G, Element g, Element h) { return G.mul(G.mul(G.inv(h), g), h); }

/// g^{-1} h^{-1} g h
inline Element comm(const Group& G, Element g, Element h) {
  return G.mul(G.mul(G.inv(g), G.inv(h)), G.mul(g, h));
}

inline Element power(const Group& G, Element g, long long k) {
  if (k < 0) { g = G.inv(g); k = -k; }
  Element r = kIdentity;
  for (; k > 0; k >>= 1) {
    if (k & 1) r = G.mul(r, g);
    g = G.mul(g, g);
  }
  return r;
}

inline std::size_t element_order(const Group& G, Element g) {
  std::size_t k = 1;
  for (Element p = g; p != kIdentity; p = G.mul(p, g)) ++k;
  return k;
}

class Subgroup {
 public:
  Subgroup() = default;

  /// `elements` must already be closed; use generated_subgroup() otherwise.
  Subgroup(std::size_t parent_order, std::vector<Element> elements)
      : elements_(std::move(elements)), member_(parent_order, false) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    for (Element g : elements_) member_.at(g) = true;
  }

  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t parent_order() const noexcept { return member_.size(); }
  bool contains(Element g) const noexcept { return g < member_.size() && member_[g]; }
  const std::vector<Element>& elements() const noexcept { return elements_; }

  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  bool operator==(const Subgroup& other) const {
    return parent_order() == other.parent_order() && elements_ == other.elements_;
  }

 private:
  std::vector<Element> elements_;
  std::vector<bool> member_;
};

inline Subgroup whole_group(const Group& G) {
  std::vector<Element> all(G.order());
  std::iota(all.begin(), all.end(), Element{0});
  return Subgroup(G.order(), std::move(all));
}

inline Subgroup generated_subgroup(const Group& G, std::span<const Element> gens) {
  std::vector<Element> members{kIdentity};
  std::vector<bool> in(G.order(), false);
  in[kIdentity] = true;
  for (Element s : gens)
    if (!G.contains(s)) throw std::out_of_range("generator index " + std::to_string(s));
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Element s : gens) {
      const Element p = G.mul(members[i], s);
      if (!in[p]) { in[p] = true; members.push_back(p); }
    }
  }
  return Subgroup(G.order(), std::move(members));
}

inline Subgroup generated_subgroup(const Group& G, std::initializer_list<Element> gens) {
  return generated_subgroup(G, std::span<const Element>(gens.begin(), gens.size()));
}

/// Subgroup generated by H together with extra elements.
inline Subgroup join(const Group& G, const Subgroup& H, std::span<const Element> extra) {
  std::vector<Element> gens(H.begin(), H.end());
  gens.insert(gens.end(), extra.begin(), extra.end());
  return generated_subgroup(G, gens);
}

template <typename Pred>
Subgroup generated_by(const Group& G, Pred pred) {
  std::vector<Element> gens;
  for (Element g = 0; g < G.order(); ++g)
    if (pred(g)) gens.push_back(g);
  return generated_subgroup(G, gens);
}

inline bool commutes(const Group& G, Element g, Element h) { return G.mul(g, h) == G.mul(h, g); }

inline Subgroup center(const Group& G) {
  std::vector<Element> z;
  for (Element g = 0; g < G.order(); ++g) {
    bool central = true;
    for (Element h = 0; h < G.order() && central; ++h) central = commutes(G, g, h);
    if (central) z.push_back(g);
  }
  return Subgroup(G.order(), std::move(z));
}

inline std::size_t exponent(const Group& G) {
  std::size_t e = 1;
  for (Element g = 0; g < G.order(); ++g) e = std::lcm(e, element_order(G, g));
  return e;
}

inline bool is_abelian(const Group& G, const Subgroup& H) {
  const auto& el = H.elements();
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = i + 1; j < el.size(); ++j)
      if (!commutes(G, el[i], el[j])) return false;
  return true;
}

inline bool is_abelian(const Group& G) { return is_abelian(G, whole_group(G)); }

/// Abelian with every non-identity element of order 2.
inline bool is_elementary_abelian_2(const Group& G, const Subgroup& H) {
  for (Element h : H)
    if (G.mul(h, h) != kIdentity) return false;
  return is_abelian(G, H);
}

inline std::size_t subgroup_index(const Group& G, const Subgroup& H) { return G.order() / H.size(); }

/// {g : g^2 = 1}, identity included.
inline std::vector<Element> involution_set(const Group& G) {
  std::vector<Element> out;
  for (Element g = 0; g < G.order(); ++g)
    if (G.mul(g, g) == kIdentity) out.push_back(g);
  return out;
}

inline bool is_normal(const Group& G, const Subgroup& H) {
  for (Element h : H)
    for (Element g = 0; g < G.order(); ++g)
      if (!H.contains(conj(G, h, g))) return false;
  return true;
}

inline bool is_two_group(const Group& G) {
  const std::size_t n = G.order();
  return (n & (n - 1)) == 0;
}

inline Group direct_product(const Group& G, const Group& H, std::string name = {}) {
  const std::size_t m = H.order();
  const std::size_t n = G.order() * m;
  Table t(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      t[a][b] = static_cast<Element>(G.mul(a / m, b / m) * m + H.mul(a % m, b % m));
  std::vector<std::string> labels(n);
  for (Element a = 0; a < n; ++a) labels[a] = "(" + G.label(a / m) + "," + H.label(a % m) + ")";
  if (name.empty()) name = G.name() + "x" + H.name();
  return group_from_table(t, std::move(labels), std::move(name));
}

/// G/N for a normal subgroup N. Each coset is labelled by its least element.
inline Group quotient(const Group& G, const Subgroup& N, std::string name = {}) {
  if (!is_normal(G, N)) throw std::invalid_argument("quotient by a non-normal subgroup");
  std::vector<Element> coset_of(G.order(), 0);
  std::vector<Element> reps;
  std::vector<bool> assigned(G.order(), false);
  for (Element g = 0; g < G.order(); ++g) {
    if (assigned[g]) continue;
    const auto id = static_cast<Element>(reps.size());
    reps.push_back(g);
    for (Element k : N) {
      const Element gk = G.mul(g, k);
      assigned[gk] = true;
      coset_of[gk] = id;
    }
  }
  Table t(reps.size(), std::vector<Element>(reps.size()));
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = 0; b < reps.size(); ++b) t[a][b] = coset_of[G.mul(reps[a], reps[b])];
  std::vector<std::string> labels;
  for (Element r : reps) labels.push_back(G.label(r));
  return group_from_table(t, std::move(labels), std::move(name));
}

/// Same group with element g renamed sigma[g]. sigma must be a permutation.
inline Group relabel(const Group& G, const std::vector<Element>& sigma) {
  const std::size_t n = G.order();
  Table t(n, std::vector<Element>(n));
  std::vector<std::string> labels(n);
  for (Element a = 0; a < n; ++a) {
    labels[sigma[a]] = G.label(a);
    for (Element b = 0; b < n; ++b) t[sigma[a]][sigma[b]] = sigma[G.mul(a, b)];
  }
  return group_from_table(t, std::move(labels), G.name());
}

inline std::optional<Element> find_label(const Group& G, std::string_view label) {
  for (Element g = 0; g < G.order(); ++g)
    if (G.label(g) == label) return g;
  return std::nullopt;
}

}  // namespace lmsym
