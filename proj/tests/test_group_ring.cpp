#include "test_util.hpp"

using namespace lmsym;
using lmsym::testing::el;
using lmsym::testing::random_element;
using lmsym::testing::term;

namespace {

// Dense double-loop product used as the oracle for ring_mul.
std::vector<long long> dense_product(const Group& G, const std::vector<long long>& a, const std::vector<long long>& b) {
  std::vector<long long> out(G.order(), 0);
  for (Element g = 0; g < G.order(); ++g)
    for (Element h = 0; h < G.order(); ++h) out[G.mul(g, h)] += a[g] * b[h];
  return out;
}

std::vector<long long> dense(const RingElement& a) {
  std::vector<long long> out(a.group().order(), 0);
  for (const auto& [g, c] : a.terms()) out[g] = static_cast<long long>(c);
  return out;
}

}  // namespace

TEST(RingAdditive, Examples) {
  const Group d8 = catalog_group("D8");
  const RingElement a = term(d8, "r", 3) + term(d8, "s", -1);
  EXPECT_EQ(a + RingElement::zero(d8), a);
  EXPECT_TRUE((term(d8, "s", 2) + term(d8, "s", -2)).is_zero());
  EXPECT_TRUE((term(d8, "s", 2) + term(d8, "s", -2)).terms().empty());
  EXPECT_EQ(ring_scale(2, term(d8, "r") + term(d8, "s")), term(d8, "r", 2) + term(d8, "s", 2));
  EXPECT_EQ(ring_neg(ring_neg(a)), a);
  EXPECT_TRUE(ring_scale(0, a).is_zero());
}

TEST(RingAdditive, MixedGroupsRejected) {
  const Group a = catalog_group("D8");
  const Group b = catalog_group("D8");  // separately constructed
  try {
    ring_add(basis(a, 1), basis(b, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kMixedGroups);
  }
  EXPECT_THROW(ring_mul(basis(a, 1), basis(b, 1)), Error);
  EXPECT_THROW(lie_bracket(basis(a, 1), basis(b, 1)), Error);
}

TEST(RingMul, Examples) {
  const Group q8 = catalog_group("Q8");
  for (Element g = 0; g < 8; ++g) EXPECT_EQ(basis(q8, g) * basis(q8, q8.inv(g)), RingElement::one(q8));
  EXPECT_EQ(trace_of(q8, el(q8, "i")) * trace_of(q8, el(q8, "j")), term(q8, "k", 2) + term(q8, "-k", 2));

  const Group d8 = catalog_group("D8");
  EXPECT_EQ((term(d8, "r") + term(d8, "r^3")) * term(d8, "s"), term(d8, "rs") + term(d8, "r^3s"));
}

TEST(RingMul, AgreesWithDenseOracle) {
  std::mt19937_64 rng(11);
  for (const char* name : {"D8", "Q8", "S4", "C4:C4", "D8oC4"}) {
    const Group G = catalog_group(name);
    for (Element g = 0; g < G.order(); ++g)
      for (Element h = 0; h < G.order(); ++h)
        EXPECT_EQ(dense(basis(G, g) * basis(G, h)), dense_product(G, dense(basis(G, g)), dense(basis(G, h))));
    for (int t = 0; t < 50; ++t) {
      const auto a = random_element(G, rng, 6), b = random_element(G, rng, 6);
      EXPECT_EQ(dense(a * b), dense_product(G, dense(a), dense(b)));
    }
  }
}

TEST(RingMul, LargeCoefficientsStayExact) {
  const Group c2 = catalog_group("C2");
  RingElement x = term(c2, "1") + term(c2, "c");  // (1 + c)^k = 2^(k-1) (1 + c)
  RingElement p = x;
  for (int k = 2; k <= 100; ++k) p = p * x;
  const Integer expected = Integer(1) << 99;
  EXPECT_EQ(p.coeff(0), expected);
  EXPECT_EQ(p.coeff(1), expected);
}

TEST(Star, Examples) {
  const Group d8 = catalog_group("D8");
  EXPECT_EQ(star(RingElement::one(d8)), RingElement::one(d8));
  const Element g = el(d8, "r"), h = el(d8, "s");
  EXPECT_EQ(star(RingElement(d8, {{g, 2}, {h, 3}})), RingElement(d8, {{d8.inv(g), 2}, {d8.inv(h), 3}}));
}

TEST(Star, InvolutionAndAntiAutomorphism) {
  std::mt19937_64 rng(3);
  for (const char* name : {"D8", "Q16", "S4", "SD16"}) {
    const Group G = catalog_group(name);
    for (int t = 0; t < 100; ++t) {
      const auto a = random_element(G, rng), b = random_element(G, rng);
      EXPECT_EQ(star(star(a)), a);
      EXPECT_EQ(star(a * b), star(b) * star(a));
    }
  }
}

TEST(LieBracket, Examples) {
  const Group q8 = catalog_group("Q8");
  const auto a = trace_of(q8, el(q8, "i"));
  EXPECT_TRUE(lie_bracket(a, a).is_zero());
  EXPECT_TRUE(lie_bracket(a, trace_of(q8, el(q8, "j"))).is_zero());

  const Group d8 = catalog_group("D8");
  EXPECT_EQ(lie_bracket(term(d8, "s"), term(d8, "rs")), term(d8, "r^3") - term(d8, "r"));
}

TEST(LieBracket, BilinearAntisymmetricAndSymmetricToAntisymmetric) {
  std::mt19937_64 rng(5);
  for (const char* name : {"D8", "Q8xC2", "S4", "A4"}) {
    const Group G = catalog_group(name);
    for (int t = 0; t < 50; ++t) {
      const auto a = random_element(G, rng), b = random_element(G, rng), c = random_element(G, rng);
      EXPECT_EQ(lie_bracket(a, b), -lie_bracket(b, a));
      EXPECT_EQ(lie_bracket(a + b, c), lie_bracket(a, c) + lie_bracket(b, c));
      const auto sa = a + star(a), sb = b + star(b);
      ASSERT_TRUE(is_symmetric(sa));
      EXPECT_TRUE(is_antisymmetric(lie_bracket(sa, sb)));
    }
  }
}

TEST(Symmetry, Examples) {
  const Group c8 = catalog_group("C8");
  const Element g = el(c8, "c");
  EXPECT_TRUE(is_symmetric(trace_of(c8, g)));
  EXPECT_TRUE(is_antisymmetric(skew_of(c8, g)));
  EXPECT_TRUE(is_symmetric(RingElement::one(c8)));
  EXPECT_FALSE(is_antisymmetric(RingElement::one(c8)));
  EXPECT_TRUE(is_symmetric(RingElement::zero(c8)));
  EXPECT_TRUE(is_antisymmetric(RingElement::zero(c8)));
}

TEST(SignNormalization, LeastSupportCoefficientPositive) {
  const Group d8 = catalog_group("D8");
  const auto u = term(d8, "r", -2) + term(d8, "s", 5);
  EXPECT_EQ(sign_normalized(u), -u);
  EXPECT_EQ(sign_normalized(-u), -u);
  EXPECT_TRUE(sign_normalized(RingElement::zero(d8)).is_zero());
}

TEST(RingToString, Readable) {
  const Group d8 = catalog_group("D8");
  EXPECT_EQ(to_string(term(d8, "r^3") - term(d8, "r")), "-r + r^3");
  EXPECT_EQ(to_string(RingElement::zero(d8)), "0");
  EXPECT_EQ(to_string(term(d8, "s", 2)), "2*s");
}
