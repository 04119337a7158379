#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <numbers>

#include "asai/padic.hpp"
#include "generators.hpp"

namespace asai {
namespace {

using testing::Gen;
using testing::frac;

long mod(long a, long m) { return ((a % m) + m) % m; }

long powmod(long b, long e, long m) {
  long r = 1;
  b = mod(b, m);
  for (; e > 0; e >>= 1) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
  }
  return r;
}

int euler_criterion(long a, long p) { return powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1; }

// (a, b)_p by searching for a Hensel-liftable point on z^2 = a x^2 + b y^2 modulo p^3.
// a = p^{e_a} u_a, b = p^{e_b} u_b with u integers prime to p and e ∈ {0, 1}.
int hilbert_by_search(long ua, int ea, long ub, int eb, long p) {
  if (ea == 1 && eb == 1) {
    // (pu, pv) = (pu, -uv).
    ub = -ua * ub;
    eb = 0;
  }
  const long m = p * p * p;
  const long a = mod(ua * (ea ? p : 1), m);
  const long b = mod(ub * (eb ? p : 1), m);
  std::map<long, std::pair<bool, bool>> roots;  // residue -> (unit root, any root)
  for (long z = 0; z < m; ++z) {
    auto& r = roots[z * z % m];
    r.second = true;
    if (z % p) r.first = true;
  }
  for (long x = 0; x < m; ++x) {
    for (long y = 0; y < m; ++y) {
      const long t = (a * (x * x % m) + b * (y * y % m)) % m;
      auto it = roots.find(t);
      if (it == roots.end()) continue;
      if (it->second.first) return 1;
      const bool grad = (ea == 0 && x % p) || (eb == 0 && y % p);
      if (grad && it->second.second) return 1;
    }
  }
  return -1;
}

TEST(Legendre, MatchesEulerCriterion) {
  for (long p : {3L, 5L, 7L, 11L, 13L, 31L}) {
    for (long a = 1; a < 3 * p; ++a) {
      if (a % p == 0) continue;
      EXPECT_EQ(legendre_symbol(Rational(a), p), euler_criterion(a, p)) << a << " mod " << p;
      EXPECT_EQ(legendre_symbol(frac(1, a), p), euler_criterion(a, p));
    }
  }
}

TEST(Hilbert, MatchesSearchOracle) {
  for (long p : {3L, 5L}) {
    for (long ua = 1; ua < p; ++ua) {
      for (long ub = 1; ub < p; ++ub) {
        for (int ea = 0; ea < 2; ++ea) {
          for (int eb = 0; eb < 2; ++eb) {
            Rational a(ua * (ea ? p : 1));
            Rational b(ub * (eb ? p : 1));
            EXPECT_EQ(hilbert_symbol(a, b, p), hilbert_by_search(ua, ea, ub, eb, p))
                << "(" << a.get_str() << "," << b.get_str() << ")_" << p;
          }
        }
      }
    }
  }
}

TEST(Hilbert, StandardIdentities) {
  Gen g;
  for (long p : {3L, 5L, 7L, 11L, 13L}) {
    for (int k = 0; k < 60; ++k) {
      Rational a = g.nonzero_rational(30, 10);
      Rational b = g.nonzero_rational(30, 10);
      Rational c = g.nonzero_rational(30, 10);
      EXPECT_EQ(hilbert_symbol(a, b, p), hilbert_symbol(b, a, p));
      EXPECT_EQ(hilbert_symbol(a * b, c, p), hilbert_symbol(a, c, p) * hilbert_symbol(b, c, p));
      EXPECT_EQ(hilbert_symbol(a, -a, p), 1);
      if (a != 1) EXPECT_EQ(hilbert_symbol(a, 1 - a, p), 1);
      EXPECT_EQ(hilbert_symbol(a, b * b, p), 1);
    }
  }
  EXPECT_THROW(hilbert_symbol(Rational(3), Rational(5), 2), std::invalid_argument);
}

TEST(Hilbert, MinusThreeAgainstMinusOne) {
  for (long p : {5L, 7L, 11L, 13L, 17L, 19L}) EXPECT_EQ(hilbert_symbol(Rational(-3), Rational(-1), p), 1) << p;
}

TEST(Psi, IsAnAdditiveCharacterOfConductorZp) {
  Gen g;
  for (long p : {3L, 5L, 7L}) {
    for (int k = 0; k < 80; ++k) {
      Rational x = g.p_adic_point(p, 3);
      Rational y = g.p_adic_point(p, 3);
      EXPECT_EQ(psi_eval(Rational(x + y), p), psi_eval(x, p) * psi_eval(y, p));
      EXPECT_EQ(psi_eval(Rational(x + g.integer(-50, 50)), p), psi_eval(x, p));
    }
    EXPECT_EQ(psi_eval(Rational(1, 7), p == 7 ? 3 : p), CyclotomicNumber(1));
  }
}

TEST(Psi, EmbeddingIsExpOfFractionalPart) {
  for (long p : {3L, 5L}) {
    for (long j = 1; j <= 2; ++j) {
      const long pj = j == 1 ? p : p * p;
      for (long k = -pj; k <= pj; ++k) {
        const double phase = static_cast<double>(mod(k, pj)) / static_cast<double>(pj);
        const auto want = std::polar(1.0, 2 * std::numbers::pi * phase);
        EXPECT_NEAR(std::abs(to_complex(psi_eval(frac(k, pj), p)) - want), 0.0, 1e-12);
      }
    }
  }
}

TEST(LocalFieldElement, ParseAndValuation) {
  auto x = LocalFieldElement::parse("-2:1/27", 5);
  EXPECT_EQ(x.valuation, -2);
  EXPECT_EQ(x.unit, Rational(1, 27));
  auto y = LocalFieldElement::parse("50/3", 5);
  EXPECT_EQ(y.valuation, 2);
  EXPECT_EQ(y.unit, Rational(2, 3));
  EXPECT_EQ(y.to_rational(5), Rational(50, 3));
  EXPECT_THROW(LocalFieldElement::parse("1:5", 5), std::invalid_argument);
  EXPECT_THROW(LocalFieldElement::parse("x:1", 5), std::invalid_argument);
  // ϖ_F = ϖ_E^3 in a totally ramified cubic extension.
  EXPECT_EQ(LocalFieldElement::uniformizer_power(2).valuation_in(FieldTag{3, 1}), 6);
}

TEST(UnramChar, EvaluatesByValuation) {
  UnramChar chi{kBaseField, var(Var::a1)};
  EXPECT_EQ(unram_char_eval(chi, LocalFieldElement::from_rational(Rational(1, 25), 5)), var(Var::a1).pow(-2));
  EXPECT_EQ(unram_char_eval(chi, LocalFieldElement::from_rational(Rational(7), 5)), RationalFunction(Rational(1)));
  UnramChar chi_e{FieldTag{3, 1}, var(Var::b1)};
  EXPECT_EQ(unram_char_eval(chi_e, LocalFieldElement::uniformizer_power(1)), var(Var::b1).pow(3));
  EXPECT_THROW(unram_char_eval(chi, LocalFieldElement{0, Rational(0), kBaseField}), std::domain_error);
}

TEST(DiscriminantClass, SquareClasses) {
  for (long p : {5L, 7L, 11L, 13L}) {
    const long n = smallest_nonresidue(p);
    EXPECT_EQ(euler_criterion(n, p), -1);
    for (long k = 2; k < n; ++k) EXPECT_EQ(euler_criterion(k, p), 1);
    EXPECT_TRUE(DiscriminantClass::of(Rational(4 * p * p), p).is_trivial());
    auto c = DiscriminantClass::of(Rational(n * p), p);
    EXPECT_EQ(c.valuation_parity, 1);
    EXPECT_EQ(c.unit_class, -1);
    EXPECT_EQ(DiscriminantClass::of(c.representative(p), p), c);
  }
}

TEST(QuadChar, IsHilbertSymbolWithDiscriminant) {
  Gen g;
  for (long p : {5L, 7L}) {
    auto d = DiscriminantClass::of(Rational(-3), p);
    for (int k = 0; k < 30; ++k) {
      Rational x = g.nonzero_rational(40, 9);
      EXPECT_EQ(quad_char_eval(d, LocalFieldElement::from_rational(x, p), p), hilbert_symbol(Rational(-3), x, p));
    }
  }
}

}  // namespace
}  // namespace asai
