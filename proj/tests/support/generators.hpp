#pragma once

#include <random>
#include <vector>

#include "asai/symbolic.hpp"
#include "asai/weil.hpp"

namespace asai::testing {

inline constexpr std::uint64_t kSeed = 0x5eed'a5a1ULL;

// n / d in canonical form; gmpxx arithmetic assumes canonical operands.
inline Rational frac(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed = kSeed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(long max_num = 9, long max_den = 6) {
    return frac(integer(-max_num, max_num), integer(1, max_den));
  }
  Rational nonzero_rational(long max_num = 9, long max_den = 6) {
    for (;;) {
      Rational r = rational(max_num, max_den);
      if (r != 0) return r;
    }
  }

  // Elements of p^{-k} Z with small height, k ≤ max_k.
  Rational p_adic_point(long p, long max_k) {
    Rational r(integer(-40, 40), 1);
    for (long k = integer(0, max_k); k > 0; --k) r /= p;
    r.canonicalize();
    return r;
  }

  Monomial monomial(std::initializer_list<Var> vars, int lo = -2, int hi = 3) {
    Monomial::Exponents e{};
    for (auto v : vars) e[static_cast<std::size_t>(v)] = static_cast<int>(integer(lo, hi));
    return Monomial(e);
  }

  RationalPoly poly(std::initializer_list<Var> vars, int max_terms = 4) {
    std::vector<RationalPoly::Term> t;
    for (long k = integer(1, max_terms); k > 0; --k) t.push_back({monomial(vars), rational()});
    return RationalPoly::from_terms(std::move(t));
  }

  RationalPoly nonzero_poly(std::initializer_list<Var> vars, int max_terms = 4) {
    for (;;) {
      RationalPoly p = poly(vars, max_terms);
      if (!p.is_zero()) return p;
    }
  }

  RationalFunction function(std::initializer_list<Var> vars) {
    return RationalFunction(poly(vars), nonzero_poly(vars, 3));
  }
  RationalFunction nonzero_function(std::initializer_list<Var> vars) {
    return RationalFunction(nonzero_poly(vars), nonzero_poly(vars, 3));
  }

  // Random finite combination of box characteristic functions with additive twists.
  SchwartzFunction2D schwartz(long p, int max_terms = 3) {
    std::vector<BoxTerm> terms;
    for (long k = integer(1, max_terms); k > 0; --k) {
      BoxTerm b;
      b.coef = CyclotomicNumber(nonzero_rational(5, 3));
      b.depth1 = integer(-1, 2);
      b.depth2 = integer(-1, 2);
      b.center1 = p_adic_point(p, 1);
      b.center2 = p_adic_point(p, 1);
      if (coin()) b.twist1 = p_adic_point(p, 1);
      if (coin()) b.twist2 = p_adic_point(p, 1);
      terms.push_back(b);
    }
    return SchwartzFunction2D(p, std::move(terms));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace asai::testing
