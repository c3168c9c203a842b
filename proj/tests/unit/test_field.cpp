#include <gtest/gtest.h>

#include <random>

#include "tpsurf/field.hpp"
#include "tpsurf/univariate.hpp"

using namespace tpsurf;

TEST(Field, CanonicalRepresentatives) {
  EXPECT_EQ(Fp(-1).value(), field::modulus() - 1);
  EXPECT_EQ(Fp(-1).signed_value(), -1);
  EXPECT_EQ(Fp(std::int64_t{field::modulus()} * 3 + 5).value(), 5u);
}

TEST(Field, InverseAndPow) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const Fp x = Fp::random(rng, true);
    EXPECT_EQ(x * x.inv(), Fp(1));
    EXPECT_EQ(x.pow(field::modulus() - 1), Fp(1));
  }
  EXPECT_THROW(Fp(0).inv(), std::domain_error);
}

TEST(Field, SmallModulusMatchesNaiveArithmetic) {
  field::ScopedModulus guard(101);
  for (int a = 0; a < 101; ++a)
    for (int b = 0; b < 101; ++b) {
      EXPECT_EQ((Fp(a) * Fp(b)).value(), static_cast<std::uint32_t>(a * b % 101));
      EXPECT_EQ((Fp(a) - Fp(b)).value(), static_cast<std::uint32_t>(((a - b) % 101 + 101) % 101));
    }
  EXPECT_THROW(field::set_modulus(100), std::invalid_argument);
}

TEST(Field, RestoresModulus) {
  {
    field::ScopedModulus guard(65521);
    EXPECT_EQ(field::modulus(), 65521u);
  }
  EXPECT_EQ(field::modulus(), 2147483647u);
}

TEST(UPoly, DivmodReconstructs) {
  std::mt19937_64 rng(2);
  for (int it = 0; it < 200; ++it) {
    std::vector<Fp> a(1 + rng() % 9), b(1 + rng() % 5);
    for (auto& x : a) x = Fp::random(rng);
    for (auto& x : b) x = Fp::random(rng, true);
    const UPoly A(a), B(b);
    auto [q, r] = UPoly::divmod(A, B);
    EXPECT_EQ(q * B + r, A);
    EXPECT_LT(r.degree(), B.degree());
  }
}

TEST(UPoly, RootsOfSplitPolynomial) {
  std::mt19937_64 rng(3);
  UPoly f(std::vector<Fp>{Fp(1)});
  std::vector<std::uint32_t> expect;
  for (int r : {3, 17, 17, 123456, 2000000000}) {
    f = f * UPoly(std::vector<Fp>{-Fp(r), Fp(1)});
    if (expect.empty() || expect.back() != static_cast<std::uint32_t>(r)) expect.push_back(r);
  }
  // x^2 - 3 has no root mod 2^31-1 iff 3 is a non-residue; multiply by a
  // quadratic that certainly does not split: x^2 - q with q a non-residue.
  Fp q(2);
  while (q.pow((field::modulus() - 1) / 2) == Fp(1)) q += Fp(1);
  f = f * UPoly(std::vector<Fp>{-q, Fp(0), Fp(1)});
  const auto roots = f.roots(rng);
  ASSERT_EQ(roots.size(), expect.size());
  for (std::size_t i = 0; i < roots.size(); ++i) EXPECT_EQ(roots[i].value(), expect[i]);
}
