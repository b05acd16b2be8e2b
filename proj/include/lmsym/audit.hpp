#pragma once

/**
 * @file audit.hpp
 * @brief Concrete-group checks of displayed group-ring identities and of the
 * structural facts that hold whenever RG+ is Lie metabelian but G-check is not
 * commutative.
 *
 * Groups of order <= AuditOptions::exhaustive_limit are checked on every
 * qualifying tuple. Larger groups get a seeded sample of sample_budget tuples.
 */

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lmsym/classifier.hpp"
#include "lmsym/error.hpp"
#include "lmsym/group.hpp"
#include "lmsym/lie_checks.hpp"
#include "lmsym/ring.hpp"

namespace lmsym {

enum class AuditStatus { kPassed, kFailed, kVacuous, kSkipped };

constexpr std::string_view to_string(AuditStatus s) {
  switch (s) {
    case AuditStatus::kPassed: return "passed";
    case AuditStatus::kFailed: return "failed";
    case AuditStatus::kVacuous: return "vacuous";
    case AuditStatus::kSkipped: return "skipped";
  }
  return "unknown";
}

struct Counterexample {
  std::vector<Element> tuple;
  /// lhs - rhs of the failing identity; empty for membership-style checks.
  std::optional<RingElement> residual;
  std::string detail;
};

struct AuditReport {
  AuditReport() = default;
  AuditReport(std::string identity, std::string group, std::size_t tuples = 0)
      : identity_name(std::move(identity)), group_name(std::move(group)), tuples_checked(tuples) {}

  std::string identity_name;
  std::string group_name;
  std::size_t tuples_checked = 0;
  AuditStatus status = AuditStatus::kPassed;
  std::optional<Counterexample> counterexample;
  std::string note;

  bool passed() const { return status == AuditStatus::kPassed || status == AuditStatus::kVacuous; }
};

struct AuditOptions {
  std::size_t sample_budget = 1000;
  std::uint64_t seed = 0;
  std::size_t exhaustive_limit = 24;
};

/// Identity check on one tuple: returns lhs - rhs (zero when it holds).
template <std::size_t K>
using TupleCheck = std::function<RingElement(const std::array<Element, K>&)>;

/// Runs `check` over the product of `pools`, exhaustively or by seeded sampling.
template <std::size_t K>
AuditReport run_identity_audit(const Group& G, std::string name,
                               const std::array<std::vector<Element>, K>& pools,
                               const TupleCheck<K>& check, const AuditOptions& opts) {
  AuditReport rep{std::move(name), G.name()};
  for (const auto& p : pools)
    if (p.empty()) {
      rep.status = AuditStatus::kVacuous;
      rep.note = "no qualifying tuples";
      return rep;
    }

  auto visit = [&](const std::array<Element, K>& t) {
    ++rep.tuples_checked;
    RingElement r = check(t);
    if (!r.is_zero() && rep.status != AuditStatus::kFailed) {
      rep.status = AuditStatus::kFailed;
      rep.counterexample = Counterexample{{t.begin(), t.end()}, std::move(r), {}};
    }
  };

  if (G.order() <= opts.exhaustive_limit) {
    std::array<std::size_t, K> idx{};
    while (true) {
      std::array<Element, K> t;
      for (std::size_t i = 0; i < K; ++i) t[i] = pools[i][idx[i]];
      visit(t);
      std::size_t i = K;
      while (i > 0 && ++idx[i - 1] == pools[i - 1].size()) idx[--i] = 0;
      if (i == 0) break;
    }
  } else {
    // Plain modulo reduction keeps the sample identical across standard libraries.
    std::mt19937_64 rng(opts.seed);
    for (std::size_t s = 0; s < opts.sample_budget; ++s) {
      std::array<Element, K> t;
      for (std::size_t i = 0; i < K; ++i) t[i] = pools[i][rng() % pools[i].size()];
      visit(t);
    }
    rep.note = "sampled " + std::to_string(opts.sample_budget) + " tuples, seed " + std::to_string(opts.seed);
  }
  return rep;
}

namespace detail {

inline std::vector<Element> all_elements(const Group& G) { return whole_group(G).elements(); }

inline std::vector<Element> order_two_elements(const Group& G) {
  std::vector<Element> out;
  for (Element g : involution_set(G))
    if (g != kIdentity) out.push_back(g);
  return out;
}

inline std::vector<Element> complement(const Group& G, const Subgroup& H) {
  std::vector<Element> out;
  for (Element g = 0; g < G.order(); ++g)
    if (!H.contains(g)) out.push_back(g);
  return out;
}

inline RingElement e(const Group& G, Element g) { return basis(G, g); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Universal expansions (valid in every group).

/// [g + g^-1, h + h^-1] = gh - (gh)^-1 + gh^-1 - (gh^-1)^-1 + g^-1 h - (g^-1 h)^-1 + (hg)^-1 - hg
inline RingElement trace_bracket_expansion_residual(const Group& G, Element g, Element h) {
  using detail::e;
  const Element gi = G.inv(g), hi = G.inv(h);
  const Element gh = G.mul(g, h), ghi = G.mul(g, hi), gih = G.mul(gi, h), hg = G.mul(h, g);
  const RingElement lhs = lie_bracket(trace_of(G, g), trace_of(G, h));
  const RingElement rhs = e(G, gh) - e(G, G.inv(gh)) + e(G, ghi) - e(G, G.inv(ghi)) + e(G, gih) -
                          e(G, G.inv(gih)) + e(G, G.inv(hg)) - e(G, hg);
  return lhs - rhs;
}

/// [g + g^-1, x] = gx - (gx)^-1 + g^-1 x - (g^-1 x)^-1 for x^2 = 1
inline RingElement trace_involution_expansion_residual(const Group& G, Element g, Element x) {
  using detail::e;
  const Element gx = G.mul(g, x), gix = G.mul(G.inv(g), x);
  const RingElement lhs = lie_bracket(trace_of(G, g), e(G, x));
  const RingElement rhs = e(G, gx) - e(G, G.inv(gx)) + e(G, gix) - e(G, G.inv(gix));
  return lhs - rhs;
}

/// [x, y] = xy - (xy)^-1 for x^2 = y^2 = 1
inline RingElement involution_bracket_expansion_residual(const Group& G, Element x, Element y) {
  using detail::e;
  const Element xy = G.mul(x, y);
  return lie_bracket(e(G, x), e(G, y)) - (e(G, xy) - e(G, G.inv(xy)));
}

inline AuditReport audit_bracket_expansions(const Group& G, const AuditOptions& opts = {}) {
  const auto all = detail::all_elements(G);
  const auto invols = involution_set(G);
  auto a = run_identity_audit<2>(
      G, "trace_trace", {all, all},
      [&](const auto& t) { return trace_bracket_expansion_residual(G, t[0], t[1]); }, opts);
  auto b = run_identity_audit<2>(
      G, "trace_involution", {all, invols},
      [&](const auto& t) { return trace_involution_expansion_residual(G, t[0], t[1]); }, opts);
  auto c = run_identity_audit<2>(
      G, "involution_involution", {invols, invols},
      [&](const auto& t) { return involution_bracket_expansion_residual(G, t[0], t[1]); }, opts);

  AuditReport rep{"bracket_expansions", G.name()};
  rep.tuples_checked = a.tuples_checked + b.tuples_checked + c.tuples_checked;
  for (auto* part : {&a, &b, &c}) {
    if (part->status == AuditStatus::kFailed && rep.status != AuditStatus::kFailed) {
      rep.status = AuditStatus::kFailed;
      rep.counterexample = part->counterexample;
      rep.counterexample->detail = part->identity_name;
    }
  }
  rep.note = a.note;
  return rep;
}

/// [[x1, x2], [x2, x3]] minus its eight-term expansion, for involutions x1, x2, x3.
inline RingElement involution_double_bracket_residual(const Group& G, Element x1, Element x2, Element x3) {
  using detail::e;
  auto w = [&](std::initializer_list<Element> word) {
    Element p = kIdentity;
    for (Element g : word) p = G.mul(p, g);
    return e(G, p);
  };
  const RingElement lhs = lie_bracket(lie_bracket(e(G, x1), e(G, x2)), lie_bracket(e(G, x2), e(G, x3)));
  const RingElement rhs = w({x1, x3}) + w({x2, x1, x3, x2}) + w({x2, x3, x2, x1}) + w({x3, x2, x1, x2}) -
                          (w({x3, x1}) + w({x1, x2, x3, x2}) + w({x2, x1, x2, x3}) + w({x2, x3, x1, x2}));
  return lhs - rhs;
}

inline AuditReport audit_involutions_expansion(const Group& G, const AuditOptions& opts = {}) {
  const auto inv2 = detail::order_two_elements(G);
  return run_identity_audit<3>(
      G, "involutions_expansion", {inv2, inv2, inv2},
      [&](const auto& t) { return involution_double_bracket_residual(G, t[0], t[1], t[2]); }, opts);
}

/// Bracket-of-generators membership in the span of G-check, as an AuditReport.
inline AuditReport audit_eq1_report(const Group& G) {
  const auto r = audit_eq1_detail(G);
  AuditReport rep{"eq1", G.name(), r.brackets_checked};
  if (!r.holds) {
    const auto gs = x_plus_generators(G);
    const auto [i, j] = *r.counterexample;
    rep.status = AuditStatus::kFailed;
    rep.counterexample = Counterexample{{gs.plus_reps[i], gs.plus_reps[j]},
                                        lie_bracket(gs.plus_gens[i], gs.plus_gens[j]),
                                        "bracket not in the span of G-check"};
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Condition (3): abelian B of index 2 inverted by an element of order 4.

inline void require_condition3_witness(const Group& G, const Subgroup& B, Element x) {
  const bool ok = B.parent_order() == G.order() && generated_subgroup(G, B.elements()) == B &&
                  is_abelian(G, B) && subgroup_index(G, B) == 2 && element_order(G, x) == 4 &&
                  inverts(G, B, x);
  if (!ok) throw Error(ErrorKind::kHypothesisViolated, "(B, x) is not a condition (3) witness");
}

/// For g, h outside B with h = bg: [g + g^-1, h + h^-1] against both
/// (g + g^-1) b (g + g^-1) - b (g + g^-1)^2 and 2 (b^-1 - b)(1 + g^2).
inline RingElement condition3_formula_residual(const Group& G, Element g, Element h) {
  using detail::e;
  const Element b = G.mul(h, G.inv(g));
  const RingElement tg = trace_of(G, g);
  const RingElement lhs = lie_bracket(tg, trace_of(G, h));
  const RingElement middle = tg * e(G, b) * tg - e(G, b) * tg * tg;
  const RingElement closed = 2 * ((e(G, G.inv(b)) - e(G, b)) * (RingElement::one(G) + e(G, G.mul(g, g))));
  RingElement r = lhs - middle;
  return r.is_zero() ? lhs - closed : r;
}

inline AuditReport audit_condition3_formula(const Group& G, const Subgroup& B, Element x,
                                            const AuditOptions& opts = {}) {
  require_condition3_witness(G, B, x);
  const auto outside = detail::complement(G, B);
  return run_identity_audit<2>(
      G, "cond3", {outside, outside},
      [&](const auto& t) { return condition3_formula_residual(G, t[0], t[1]); }, opts);
}

inline AuditReport audit_condition3_formula(const Group& G, const AuditOptions& opts = {}) {
  const auto c3 = condition3(G);
  if (!c3.holds) throw Error(ErrorKind::kHypothesisViolated, "condition (3) does not hold");
  return audit_condition3_formula(G, *c3.b, *c3.x, opts);
}

// ---------------------------------------------------------------------------
// Condition (4): Z(G) = {g : g^2 = 1} of index 4.

namespace detail {

struct Center4 {
  Subgroup z;
  /// The three nontrivial cosets of Z(G).
  std::array<std::vector<Element>, 3> cosets;
};

inline Center4 require_condition4(const Group& G) {
  auto c4 = condition4(G);
  if (!c4.holds) throw Error(ErrorKind::kHypothesisViolated, "condition (4) does not hold");
  Center4 out{std::move(c4.center), {}};
  std::vector<bool> used(G.order(), false);
  for (Element z : out.z) used[z] = true;
  std::size_t k = 0;
  for (Element g = 0; g < G.order(); ++g) {
    if (used[g]) continue;
    for (Element z : out.z) {
      used[G.mul(g, z)] = true;
      out.cosets[k].push_back(G.mul(g, z));
    }
    std::sort(out.cosets[k].begin(), out.cosets[k].end());
    ++k;
  }
  return out;
}

}  // namespace detail

/// Residual of (1 - t)(x + x^-1)(y + y^-1)(z + z^-1) = 0 and of
/// (x + x^-1)(y + y^-1)(z + z^-1) = (x^2 y^2 + t)(1 + x^2)(1 + y^2) u with
/// t = (x, y), u = z (xy)^-1.
inline RingElement eq2_residual(const Group& G, Element x, Element y, Element z) {
  using detail::e;
  const RingElement one = RingElement::one(G);
  const Element t = comm(G, x, y);
  const Element u = G.mul(z, G.inv(G.mul(x, y)));
  const Element x2 = G.mul(x, x), y2 = G.mul(y, y);
  const RingElement triple = trace_of(G, x) * trace_of(G, y) * trace_of(G, z);
  const RingElement vanishing = (one - e(G, t)) * triple;
  if (!vanishing.is_zero()) return vanishing;
  return triple - (e(G, G.mul(x2, y2)) + e(G, t)) * (one + e(G, x2)) * (one + e(G, y2)) * e(G, u);
}

/// [x + x^-1, y + y^-1] - (1 - t)(x + x^-1)(y + y^-1) with t = (x, y).
inline RingElement eq3_residual(const Group& G, Element x, Element y) {
  const RingElement tx = trace_of(G, x), ty = trace_of(G, y);
  return lie_bracket(tx, ty) - (RingElement::one(G) - basis(G, comm(G, x, y))) * tx * ty;
}

inline AuditReport audit_eq2(const Group& G, const AuditOptions& opts = {}) {
  const auto c = detail::require_condition4(G);

  // G/Z(G) must be the Klein four-group, and G' = {1, t}.
  AuditReport pre{"eq2", G.name()};
  std::vector<Element> derived;
  for (Element g = 0; g < G.order(); ++g) {
    if (!c.z.contains(G.mul(g, g))) {
      pre.status = AuditStatus::kFailed;
      pre.counterexample = Counterexample{{g}, std::nullopt, "G/Z(G) is not elementary abelian"};
      return pre;
    }
    for (Element h = 0; h < G.order(); ++h) derived.push_back(comm(G, g, h));
  }
  std::sort(derived.begin(), derived.end());
  derived.erase(std::unique(derived.begin(), derived.end()), derived.end());
  if (derived.size() != 2) {
    pre.status = AuditStatus::kFailed;
    pre.counterexample = Counterexample{derived, std::nullopt, "derived subgroup does not have order 2"};
    return pre;
  }

  // Every ordering of the three cosets; z ranges over its coset, i.e. over all u in Z(G).
  AuditReport rep = pre;
  constexpr std::array<std::array<int, 3>, 6> orders{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  AuditOptions per = opts;
  per.sample_budget = std::max<std::size_t>(1, opts.sample_budget / orders.size());
  for (const auto& o : orders) {
    per.seed = opts.seed + static_cast<std::uint64_t>(&o - orders.data());
    auto part = run_identity_audit<3>(
        G, "eq2", {c.cosets[o[0]], c.cosets[o[1]], c.cosets[o[2]]},
        [&](const auto& t) { return eq2_residual(G, t[0], t[1], t[2]); }, per);
    rep.tuples_checked += part.tuples_checked;
    if (part.status == AuditStatus::kFailed && rep.status != AuditStatus::kFailed) {
      rep.status = AuditStatus::kFailed;
      rep.counterexample = part.counterexample;
    }
    rep.note = part.note;
  }
  return rep;
}

/// Every pair (x, y), including those whose bracket vanishes.
inline AuditReport audit_eq3(const Group& G, const AuditOptions& opts = {}) {
  detail::require_condition4(G);
  const auto all = detail::all_elements(G);
  return run_identity_audit<2>(
      G, "eq3", {all, all}, [&](const auto& t) { return eq3_residual(G, t[0], t[1]); }, opts);
}

inline std::vector<AuditReport> audit_condition4_identities(const Group& G, const AuditOptions& opts = {}) {
  return {audit_eq2(G, opts), audit_eq3(G, opts)};
}

// ---------------------------------------------------------------------------
// Structural conclusions under: RG+ Lie metabelian, G-check not commutative.

namespace detail {

/// Accumulates one structural conclusion. Equations record lhs - rhs in ZG.
class Conclusion {
 public:
  Conclusion(const Group& G, std::string name) : G_(G), rep_{std::move(name), G.name()} {}

  void check(bool ok, std::vector<Element> tuple, std::string detail) {
    ++rep_.tuples_checked;
    if (!ok && rep_.status != AuditStatus::kFailed) {
      rep_.status = AuditStatus::kFailed;
      rep_.counterexample = Counterexample{std::move(tuple), std::nullopt, std::move(detail)};
    }
  }

  void equal(Element lhs, Element rhs, std::vector<Element> tuple, std::string detail) {
    ++rep_.tuples_checked;
    if (lhs != rhs && rep_.status != AuditStatus::kFailed) {
      rep_.status = AuditStatus::kFailed;
      rep_.counterexample = Counterexample{std::move(tuple), basis(G_, lhs) - basis(G_, rhs), std::move(detail)};
    }
  }

  void ring_zero(const RingElement& r, std::vector<Element> tuple, std::string detail) {
    ++rep_.tuples_checked;
    if (!r.is_zero() && rep_.status != AuditStatus::kFailed) {
      rep_.status = AuditStatus::kFailed;
      rep_.counterexample = Counterexample{std::move(tuple), r, std::move(detail)};
    }
  }

  AuditReport skip(std::string why) {
    rep_.status = AuditStatus::kSkipped;
    rep_.note = std::move(why);
    return std::move(rep_);
  }

  AuditReport done() {
    if (rep_.tuples_checked == 0 && rep_.status == AuditStatus::kPassed) {
      rep_.status = AuditStatus::kVacuous;
      rep_.note = "no qualifying tuples";
    }
    return std::move(rep_);
  }

 private:
  const Group& G_;
  AuditReport rep_;
};

}  // namespace detail

/// C = <xy : x^2 != 1 != y^2, (x, y) = 1>
inline Subgroup commuting_product_subgroup(const Group& G) {
  std::vector<Element> gens;
  for (Element x = 0; x < G.order(); ++x)
    for (Element y = 0; y < G.order(); ++y)
      if (G.mul(x, x) != kIdentity && G.mul(y, y) != kIdentity && commutes(G, x, y))
        gens.push_back(G.mul(x, y));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return generated_subgroup(G, gens);
}

inline std::vector<AuditReport> lemma_conformance(const Group& G) {
  if (!is_plus_lie_metabelian(G, {.budget = std::max(G.order(), kDefaultBruteBudget)}).lie_metabelian)
    throw Error(ErrorKind::kHypothesisViolated, "RG+ is not Lie metabelian");
  if (is_check_commutative(G)) throw Error(ErrorKind::kHypothesisViolated, "G-check is commutative");

  using detail::Conclusion;
  const std::size_t n = G.order();
  const auto invols = involution_set(G);
  const Subgroup A = generated_subgroup(G, invols);
  const Subgroup B = generated_by(G, [&](Element g) { return element_order(G, g) != 4; });
  const Subgroup Z = center(G);
  const std::size_t exp = exponent(G);
  auto sq = [&](Element g) { return G.mul(g, g); };
  std::vector<AuditReport> out;

  {
    Conclusion c(G, "a_products_of_involutions");
    for (Element a : A) {
      bool found = false;
      for (Element x : invols) {
        const Element y = G.mul(G.inv(x), a);
        if (sq(y) == kIdentity) { found = true; break; }
      }
      c.check(found, {a}, "not a product of two elements with square 1");
    }
    out.push_back(c.done());
  }
  {
    Conclusion c(G, "a_skew_commute");
    for (Element a : A)
      for (Element b : A)
        c.ring_zero(lie_bracket(skew_of(G, a), skew_of(G, b)), {a, b}, "[a - a^-1, b - b^-1] != 0");
    out.push_back(c.done());
  }
  {
    Conclusion c(G, "a_centralized_or_square_in_a");
    for (Element x = 0; x < n; ++x) {
      bool centralizes = true;
      for (Element a : A) centralizes = centralizes && commutes(G, x, a);
      c.check(centralizes || A.contains(sq(x)), {x}, "(x, A) != 1 and x^2 not in A");
    }
    out.push_back(c.done());
  }
  {
    Conclusion c(G, "a_abelian");
    for (Element a : A)
      for (Element b : A) c.equal(G.mul(a, b), G.mul(b, a), {a, b}, "ab != ba in A");
    out.push_back(c.done());
  }
  {
    Conclusion c(G, "noncentral_a_relations");
    for (Element a : A)
      for (Element x = 0; x < n; ++x) {
        if (commutes(G, a, x)) continue;
        for (Element y = 0; y < n; ++y) {
          if (commutes(G, a, y)) continue;
          c.check(element_order(G, x) == 4 && element_order(G, y) == 4, {a, x, y}, "o(x) or o(y) != 4");
          c.equal(comm(G, sq(x), y), kIdentity, {a, x, y}, "(x^2, y) != 1");
          c.equal(comm(G, x, sq(y)), kIdentity, {a, x, y}, "(x, y^2) != 1");
          const Element prod =
              G.mul(G.mul(a, conj(G, a, x)), G.mul(conj(G, a, y), conj(G, a, G.mul(x, y))));
          c.equal(prod, kIdentity, {a, x, y}, "a a^x a^y a^xy != 1");
          c.check(A.contains(comm(G, x, y)), {a, x, y}, "(x, y) not in A");
        }
      }
    out.push_back(c.done());
  }
  {
    Conclusion c(G, "a_central");
    for (Element a : A)
      for (Element x = 0; x < n; ++x) c.equal(G.mul(a, x), G.mul(x, a), {a, x}, "a not central");
    out.push_back(c.done());
  }
  {
    Conclusion c(G, "b_abelian");
    for (Element a : B)
      for (Element b : B) c.equal(G.mul(a, b), G.mul(b, a), {a, b}, "ab != ba in B");
    out.push_back(c.done());
  }
  {
    Conclusion c(G, "b_inverted_index2");
    if (exp == 4) {
      out.push_back(c.skip("Exp(G) = 4"));
    } else {
      c.check(subgroup_index(G, B) == 2, {}, "[G : B] != 2");
      for (Element x = 0; x < n; ++x) {
        if (B.contains(x)) continue;
        for (Element b : B) c.equal(conj(G, b, x), G.inv(b), {b, x}, "b^x != b^-1");
      }
      out.push_back(c.done());
    }
  }
  {
    Conclusion c(G, "center_equals_a");
    if (exp != 4) {
      out.push_back(c.skip("Exp(G) != 4"));
    } else {
      c.check(Z == A, Z.elements(), "Z(G) != A");
      out.push_back(c.done());
    }
  }
  const Subgroup C = commuting_product_subgroup(G);
  const std::array<std::string, 4> tail{"c_contains_center", "c_abelian", "c_inverted", "c_index"};
  if (exp != 4) {
    for (const auto& name : tail) out.push_back(Conclusion(G, name).skip("Exp(G) != 4"));
  } else {
    {
      Conclusion c(G, tail[0]);
      for (Element z : Z) c.check(C.contains(z), {z}, "central element outside C");
      out.push_back(c.done());
    }
    {
      Conclusion c(G, tail[1]);
      for (Element a : C)
        for (Element b : C) c.equal(G.mul(a, b), G.mul(b, a), {a, b}, "ab != ba in C");
      out.push_back(c.done());
    }
    {
      Conclusion c(G, tail[2]);
      for (Element t = 0; t < n; ++t) {
        if (C.contains(t)) continue;
        for (Element x : C) c.equal(conj(G, x, t), G.inv(x), {x, t}, "c^t != c^-1");
      }
      out.push_back(c.done());
    }
    {
      Conclusion c(G, tail[3]);
      const std::size_t idx = subgroup_index(G, C);
      c.check(idx == 2 || (C == Z && idx == 4), C.elements(), "[G : C] is neither 2 nor 4 with C = Z(G)");
      out.push_back(c.done());
    }
  }
  return out;
}

}  // namespace lmsym
