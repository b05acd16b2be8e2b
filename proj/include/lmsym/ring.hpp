#pragma once

/**
 * @file ring.hpp
 * @brief Integral group ring ZG with the classical involution g* = g^{-1}.
 *
 * Coefficients are arbitrary-precision integers. An identity between
 * combinations of X+ generators holds over every commutative ring of
 * characteristic zero exactly when it holds over Z, so Z is all we need.
 */

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lmsym/error.hpp"
#include "lmsym/group.hpp"

namespace lmsym {

using Integer = boost::multiprecision::cpp_int;

class RingElement {
 public:
  using Terms = std::map<Element, Integer>;

  explicit RingElement(Group group) : group_(std::move(group)) {}

  RingElement(Group group, Element g, Integer coeff = 1) : group_(std::move(group)) {
    add_term(g, std::move(coeff));
  }

  RingElement(Group group, std::initializer_list<std::pair<Element, long long>> terms)
      : group_(std::move(group)) {
    for (const auto& [g, c] : terms) add_term(g, c);
  }

  static RingElement zero(const Group& G) { return RingElement(G); }
  static RingElement one(const Group& G) { return RingElement(G, kIdentity); }

  const Group& group() const noexcept { return group_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t support_size() const noexcept { return terms_.size(); }

  Integer coeff(Element g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add_term(Element g, const Integer& c) {
    if (!group_.contains(g)) throw std::out_of_range("element index " + std::to_string(g));
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool operator==(const RingElement& other) const {
    return group_.same_as(other.group_) && terms_ == other.terms_;
  }

 private:
  Group group_;
  Terms terms_;
};

namespace detail {

inline void require_same_group(const RingElement& a, const RingElement& b) {
  if (!a.group().same_as(b.group()))
    throw Error(ErrorKind::kMixedGroups, "operands belong to different groups");
}

}  // namespace detail

inline RingElement ring_add(const RingElement& a, const RingElement& b) {
  detail::require_same_group(a, b);
  RingElement r = a;
  for (const auto& [g, c] : b.terms()) r.add_term(g, c);
  return r;
}

inline RingElement ring_neg(const RingElement& a) {
  RingElement r(a.group());
  for (const auto& [g, c] : a.terms()) r.add_term(g, -c);
  return r;
}

inline RingElement ring_scale(const Integer& k, const RingElement& a) {
  RingElement r(a.group());
  if (k == 0) return r;
  for (const auto& [g, c] : a.terms()) r.add_term(g, k * c);
  return r;
}

inline RingElement ring_sub(const RingElement& a, const RingElement& b) {
  detail::require_same_group(a, b);
  RingElement r = a;
  for (const auto& [g, c] : b.terms()) r.add_term(g, -c);
  return r;
}

/// Convolution through the Cayley table.
inline RingElement ring_mul(const RingElement& a, const RingElement& b) {
  detail::require_same_group(a, b);
  const Group& G = a.group();
  RingElement r(G);
  for (const auto& [g, x] : a.terms())
    for (const auto& [h, y] : b.terms()) r.add_term(G.mul(g, h), x * y);
  return r;
}

/// Classical involution: coefficient of g in star(a) is that of g^{-1} in a.
inline RingElement star(const RingElement& a) {
  RingElement r(a.group());
  for (const auto& [g, c] : a.terms()) r.add_term(a.group().inv(g), c);
  return r;
}

inline RingElement lie_bracket(const RingElement& a, const RingElement& b) {
  return ring_sub(ring_mul(a, b), ring_mul(b, a));
}

inline bool commute(const RingElement& a, const RingElement& b) {
  return lie_bracket(a, b).is_zero();
}

inline bool is_symmetric(const RingElement& a) { return star(a) == a; }
inline bool is_antisymmetric(const RingElement& a) { return star(a) == ring_neg(a); }

/// a or -a, whichever has a positive coefficient on its least support element.
inline RingElement sign_normalized(const RingElement& a) {
  if (a.is_zero() || a.terms().begin()->second > 0) return a;
  return ring_neg(a);
}

inline RingElement operator+(const RingElement& a, const RingElement& b) { return ring_add(a, b); }
inline RingElement operator-(const RingElement& a, const RingElement& b) { return ring_sub(a, b); }
inline RingElement operator-(const RingElement& a) { return ring_neg(a); }
inline RingElement operator*(const RingElement& a, const RingElement& b) { return ring_mul(a, b); }
inline RingElement operator*(const Integer& k, const RingElement& a) { return ring_scale(k, a); }
inline RingElement operator*(long long k, const RingElement& a) { return ring_scale(Integer(k), a); }

/// Basis element g, i.e. g with coefficient 1.
inline RingElement basis(const Group& G, Element g) { return RingElement(G, g); }

/// g + g^{-1}
inline RingElement trace_of(const Group& G, Element g) {
  return RingElement(G, {{g, 1}, {G.inv(g), 1}});
}

/// g - g^{-1}
inline RingElement skew_of(const Group& G, Element g) {
  return RingElement(G, {{g, 1}, {G.inv(g), -1}});
}

/// Human-readable form, e.g. "2*k + 2*k^3 - r". Zero prints as "0".
inline std::string to_string(const RingElement& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [g, c] : a.terms()) {
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag != 1) out += mag.str() + "*";
    out += a.group().label(g);
    first = false;
  }
  return out;
}

}  // namespace lmsym
