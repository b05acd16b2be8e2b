#pragma once

/**
 * @file lie_checks.hpp
 * @brief Brute-force group-ring oracles over the module generators of RG+.
 *
 * RG+ is spanned by X+ = {g + g^-1 : g^2 != 1} u {g : g^2 = 1}, and every
 * identity checked here is multilinear, so it is enough to test it on X+.
 */

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lmsym/error.hpp"
#include "lmsym/group.hpp"
#include "lmsym/ring.hpp"

namespace lmsym {

inline constexpr std::size_t kDefaultBruteBudget = 300;

struct GeneratorSet {
  std::vector<RingElement> plus_gens;
  /// plus_reps[i] is the element g that produced plus_gens[i] (the smaller index of {g, g^-1}).
  std::vector<Element> plus_reps;
  /// Nonzero elements of G-check, one per pair {g, g^-1} (sign-deduplicated).
  std::vector<RingElement> check_gens;
  std::vector<Element> check_reps;
};

inline GeneratorSet x_plus_generators(const Group& G) {
  GeneratorSet s;
  for (Element g = 0; g < G.order(); ++g) {
    const Element gi = G.inv(g);
    if (gi == g) {
      s.plus_gens.push_back(basis(G, g));
      s.plus_reps.push_back(g);
    } else if (g < gi) {
      s.plus_gens.push_back(trace_of(G, g));
      s.plus_reps.push_back(g);
      s.check_gens.push_back(skew_of(G, g));
      s.check_reps.push_back(g);
    }
  }
  return s;
}

using IndexPair = std::pair<std::size_t, std::size_t>;

namespace detail {

inline std::optional<IndexPair> first_noncommuting_pair(const std::vector<RingElement>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (!commute(xs[i], xs[j])) return IndexPair{i, j};
  return std::nullopt;
}

}  // namespace detail

/// First pair (i, j), i < j, of X+ generators with nonzero bracket.
inline std::optional<IndexPair> plus_commutativity_witness(const Group& G) {
  return detail::first_noncommuting_pair(x_plus_generators(G).plus_gens);
}

inline bool is_plus_commutative(const Group& G) { return !plus_commutativity_witness(G); }

inline std::optional<IndexPair> check_commutativity_witness(const Group& G) {
  return detail::first_noncommuting_pair(x_plus_generators(G).check_gens);
}

inline bool is_check_commutative(const Group& G) { return !check_commutativity_witness(G); }

using Quadruple = std::array<std::size_t, 4>;

struct BruteReport {
  bool lie_metabelian = true;
  /// X+ indices (a, b, c, d) with [[x_a, x_b], [x_c, x_d]] != 0.
  std::optional<Quadruple> witness;
  /// Nonzero brackets [x_i, x_j] with i < j.
  std::size_t bracket_count = 0;
  /// Nonzero brackets left after identifying u with -u and exact duplicates.
  std::size_t deduped_bracket_count = 0;
};

inline RingElement double_bracket(const std::vector<RingElement>& gens, const Quadruple& q) {
  return lie_bracket(lie_bracket(gens.at(q[0]), gens.at(q[1])),
                     lie_bracket(gens.at(q[2]), gens.at(q[3])));
}

struct BruteOptions {
  std::size_t budget = kDefaultBruteBudget;
  /// Off only for the test oracle that checks deduplication soundness.
  bool deduplicate = true;
};

inline BruteReport is_plus_lie_metabelian(const Group& G, const BruteOptions& opts = {}) {
  if (G.order() > opts.budget)
    throw Error(ErrorKind::kBudgetExceeded, "group order " + std::to_string(G.order()) +
                                                " exceeds brute-force budget " +
                                                std::to_string(opts.budget));
  const auto gens = x_plus_generators(G).plus_gens;

  BruteReport report;
  std::vector<RingElement> brackets;
  std::vector<IndexPair> origin;
  std::map<RingElement::Terms, std::size_t> seen;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      RingElement b = lie_bracket(gens[i], gens[j]);
      if (b.is_zero()) continue;
      ++report.bracket_count;
      if (opts.deduplicate) {
        b = sign_normalized(b);
        if (!seen.emplace(b.terms(), brackets.size()).second) continue;
      }
      brackets.push_back(std::move(b));
      origin.emplace_back(i, j);
    }
  }
  report.deduped_bracket_count = brackets.size();
  if (!opts.deduplicate) {
    std::map<RingElement::Terms, bool> classes;
    for (const auto& b : brackets) classes.emplace(sign_normalized(b).terms(), true);
    report.deduped_bracket_count = classes.size();
  }

  if (auto pq = detail::first_noncommuting_pair(brackets)) {
    report.lie_metabelian = false;
    const auto [p, q] = *pq;
    report.witness = Quadruple{origin[p].first, origin[p].second, origin[q].first, origin[q].second};
  }
  return report;
}

struct Eq1Result {
  bool holds = true;
  std::size_t brackets_checked = 0;
  std::optional<IndexPair> counterexample;
};

/// Every bracket of X+ generators is antisymmetric and vanishes on {g : g^2 = 1};
/// over Z that is exactly membership in the span of G-check.
inline Eq1Result audit_eq1_detail(const Group& G) {
  const auto gens = x_plus_generators(G).plus_gens;
  const auto invols = involution_set(G);
  Eq1Result r;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const RingElement b = lie_bracket(gens[i], gens[j]);
      ++r.brackets_checked;
      bool ok = is_antisymmetric(b);
      for (Element g : invols)
        if (ok && b.coeff(g) != 0) ok = false;
      if (!ok && r.holds) {
        r.holds = false;
        r.counterexample = IndexPair{i, j};
      }
    }
  }
  return r;
}

inline bool audit_eq1(const Group& G) { return audit_eq1_detail(G).holds; }

}  // namespace lmsym
