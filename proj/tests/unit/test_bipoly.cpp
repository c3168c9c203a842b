#include <gtest/gtest.h>

#include <random>

#include "tpsurf/bipoly.hpp"
#include "tpsurf/errors.hpp"

using namespace tpsurf;

namespace {

struct Pt {
  Fp s, t, u, v;
};

Pt random_point(std::mt19937_64& rng) {
  return {Fp::random(rng), Fp::random(rng), Fp::random(rng), Fp::random(rng)};
}

// Reference evaluation straight from the term table with Fp::pow.
Fp eval_ref(const BiPoly& p, const Pt& x) {
  Fp r(0);
  for (const auto& [k, c] : p.terms()) {
    const Monomial m = Monomial::from_key(k);
    r += c * x.s.pow(m.s) * x.t.pow(m.t) * x.u.pow(m.u) * x.v.pow(m.v);
  }
  return r;
}

}  // namespace

TEST(BiPoly, ParseDisplayedGenerator) {
  const BiPoly p = parse_poly("-s^2*u^4*v - s^2*v^5");
  EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ(p.bidegree(), (BiDegree{2, 5}));
  EXPECT_TRUE(p.is_bihomogeneous());
  EXPECT_EQ(p.coeff({2, 0, 4, 1}), Fp(-1));
}

TEST(BiPoly, ParseZeroAndLikeTerms) {
  EXPECT_TRUE(parse_poly("0").is_zero());
  EXPECT_TRUE(parse_poly("0").terms().empty());
  const BiPoly p = parse_poly("s*u + s*u");
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p.coeff({1, 0, 1, 0}), Fp(2));
}

TEST(BiPoly, ParseGrammar) {
  EXPECT_EQ(parse_poly("(s+t)^2"), parse_poly("s^2 + 2*s*t + t^2"));
  EXPECT_EQ(parse_poly("-(u - v)*3"), parse_poly("3*v - 3*u"));
  EXPECT_EQ(parse_poly("s*-u"), parse_poly("-s*u"));
  EXPECT_EQ(parse_poly("4294967298*u"), parse_poly("4*u"));  // 2p + 4
  EXPECT_EQ(parse_poly("  +u  "), parse_poly("u"));
}

TEST(BiPoly, ParseErrorsReportPosition) {
  try {
    parse_poly("s*u + x");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
    EXPECT_NE(std::string(e.what()).find("unknown variable 'x'"), std::string::npos);
  }
  try {
    parse_poly("(s + u");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
  EXPECT_THROW(parse_poly("s*"), ParseError);
  EXPECT_THROW(parse_poly("s u"), ParseError);
  EXPECT_THROW(parse_poly("u^"), ParseError);
  EXPECT_THROW(parse_poly(""), ParseError);
}

TEST(BiPoly, RingOps) {
  EXPECT_EQ(parse_poly("u") * parse_poly("v"), parse_poly("u*v"));
  const BiPoly f0 = parse_poly("-v") * parse_poly("t^2*u^4 + s^2*v^4");
  EXPECT_EQ(f0, parse_poly("-t^2*u^4*v - s^2*v^5"));
  const BiPoly p = parse_poly("3*s*u - 7*t*v");
  EXPECT_TRUE((p + (-p)).is_zero());
  EXPECT_TRUE((p - p).is_zero());
}

TEST(BiPoly, BidegreeAdditiveAndEvalHomomorphism) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 1000; ++it) {
    const BiDegree d1{static_cast<int>(rng() % 4), static_cast<int>(rng() % 5)};
    const BiDegree d2{static_cast<int>(rng() % 4), static_cast<int>(rng() % 5)};
    const BiPoly f = BiPoly::random(d1, rng), g = BiPoly::random(d2, rng);
    const BiPoly h = f * g;
    ASSERT_TRUE(h.is_bihomogeneous(d1 + d2));
    if (it % 20 == 0) {
      const Pt x = random_point(rng);
      EXPECT_EQ(eval_ref(h, x), eval_ref(f, x) * eval_ref(g, x));
      EXPECT_EQ(h.eval(x.s, x.t, x.u, x.v), eval_ref(h, x));
    }
  }
}

TEST(BiPoly, MonomialBasis) {
  EXPECT_EQ(monomial_basis(3, 4).size(), 20u);
  const auto one = monomial_basis(0, 0);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], (Monomial{0, 0, 0, 0}));
  EXPECT_TRUE(monomial_basis(-1, 2).empty());
  const auto b = monomial_basis(1, 1);
  ASSERT_EQ(b.size(), 4u);
  EXPECT_EQ(b[0], (Monomial{1, 0, 1, 0}));
  EXPECT_EQ(b[1], (Monomial{1, 0, 0, 1}));
  EXPECT_EQ(b[2], (Monomial{0, 1, 1, 0}));
  EXPECT_EQ(b[3], (Monomial{0, 1, 0, 1}));
  const auto big = monomial_basis(3, 5);
  for (std::size_t i = 0; i < big.size(); ++i) EXPECT_EQ(basis_index(big[i], 3, 5), static_cast<int>(i));
}

TEST(BiPoly, CoeffVector) {
  const auto u3 = coeff_vector(parse_poly("u^3"), 0, 3);
  EXPECT_EQ(u3, (std::vector<Fp>{Fp(1), Fp(0), Fp(0), Fp(0)}));
  const auto f0 = coeff_vector(parse_poly("-s^2*u^4*v - s^2*v^5"), 2, 5);
  int nz = 0;
  for (const Fp x : f0)
    if (!x.is_zero()) {
      ++nz;
      EXPECT_EQ(x.value(), field::modulus() - 1);
    }
  EXPECT_EQ(nz, 2);
  EXPECT_EQ(coeff_vector(BiPoly{}, 1, 1), std::vector<Fp>(4));
  EXPECT_THROW(coeff_vector(parse_poly("s*u"), 1, 2), InputError);
}

TEST(BiPoly, CoeffVectorRoundTrip) {
  std::mt19937_64 rng(12);
  for (int it = 0; it < 200; ++it) {
    const int c = static_cast<int>(rng() % 5), d = static_cast<int>(rng() % 6);
    const BiPoly p = BiPoly::random({c, d}, rng);
    EXPECT_EQ(from_coeff_vector(coeff_vector(p, c, d), c, d), p);
  }
}

TEST(BiPoly, PrintParseRoundTrip) {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 200; ++it) {
    const BiPoly p = BiPoly::random({static_cast<int>(rng() % 4), static_cast<int>(rng() % 4)}, rng);
    EXPECT_EQ(parse_poly(p.to_string()), p);
  }
  EXPECT_EQ(parse_poly("-s^2*u^4*v - s^2*v^5").to_string(), "-s^2*u^4*v - s^2*v^5");
  EXPECT_EQ(parse_poly("2*t*v + 1*s*u").to_string(), "s*u + 2*t*v");
}

TEST(BiPoly, MirrorIsInvolution) {
  std::mt19937_64 rng(14);
  const BiPoly p = BiPoly::random({2, 3}, rng);
  EXPECT_EQ(p.mirror().bidegree(), (BiDegree{3, 2}));
  EXPECT_EQ(p.mirror().mirror(), p);
}

TEST(BiPoly, SlicesRoundTrip) {
  std::mt19937_64 rng(15);
  const BiPoly p = BiPoly::random({3, 4}, rng);
  const auto sl = p.st_slices(3, 4);
  ASSERT_EQ(sl.size(), 4u);
  EXPECT_EQ(BiPoly::from_st_slices(sl, 3), p);
  const Fp s0 = Fp::random(rng), t0 = Fp::random(rng), u0 = Fp::random(rng), v0 = Fp::random(rng);
  EXPECT_EQ(p.at_st(s0, t0, 4).eval(u0, v0), p.eval(s0, t0, u0, v0));
  EXPECT_EQ(p.at_uv(u0, v0, 3).eval(s0, t0), p.eval(s0, t0, u0, v0));
}

TEST(UniHomPoly, ArithmeticAndDivision) {
  std::mt19937_64 rng(16);
  for (int it = 0; it < 300; ++it) {
    const UniHomPoly a = UniHomPoly::random(static_cast<int>(rng() % 5), rng);
    UniHomPoly b = UniHomPoly::random(static_cast<int>(rng() % 4), rng);
    if (b.is_zero()) continue;
    const UniHomPoly prod = a * b;
    const auto q = UniHomPoly::divide_exact(prod, b);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, a);
    const Fp u0 = Fp::random(rng), v0 = Fp::random(rng);
    EXPECT_EQ(prod.eval(u0, v0), a.eval(u0, v0) * b.eval(u0, v0));
  }
  // u^2 + v^2 is not divisible by u
  const UniHomPoly f(2, {Fp(1), Fp(0), Fp(1)});
  EXPECT_FALSE(UniHomPoly::divide_exact(f, UniHomPoly::u()).has_value());
  // v^3 / v^2 with leading zero coefficients
  const auto q = UniHomPoly::divide_exact(UniHomPoly::monomial(3, 3), UniHomPoly::monomial(2, 2));
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, UniHomPoly::v());
}

TEST(UniHomPoly, Gcd) {
  const UniHomPoly u = UniHomPoly::u(), v = UniHomPoly::v();
  EXPECT_TRUE(UniHomPoly::gcd(u, v).is_unit());
  EXPECT_EQ(UniHomPoly::gcd(u * u * v, u * v * v), u * v);
  EXPECT_EQ(UniHomPoly::gcd({u * u, UniHomPoly::zero(5), u * (u + v)}), u);
  std::mt19937_64 rng(17);
  const UniHomPoly c = UniHomPoly::random(2, rng);
  const UniHomPoly g = UniHomPoly::gcd(c * UniHomPoly::random(3, rng), c * UniHomPoly::random(2, rng));
  EXPECT_EQ(g.degree(), 2);
  EXPECT_TRUE(UniHomPoly::divide_exact(c, g).has_value());
}

TEST(UniHomPoly, ZeroFormsKeepDegree) {
  const UniHomPoly z = UniHomPoly::zero(3);
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.degree(), 3);
  EXPECT_EQ((z * UniHomPoly::u()).degree(), 4);
  EXPECT_EQ((z + UniHomPoly::monomial(2, 1)).degree(), 2);
  EXPECT_THROW(UniHomPoly::u() + UniHomPoly::monomial(2, 1), std::logic_error);
}
