#pragma once

#include <complex>
#include <map>
#include <vector>

#include "asai/cyclotomic.hpp"
#include "asai/symbolic.hpp"
#include "asai/weil.hpp"

namespace asai {

// u^n (α^{n+1} - β^{n+1}) / (α - β) for n ≥ 0, expanded; 0 for n < 0.
RationalFunction shintani(int n, const RationalFunction& alpha, const RationalFunction& beta);
RationalFunction shintani(int n);  // α = a1, β = b1

struct WhittakerLambda {
  Rational l1{0};
  Rational l2{0};
};

// Principal-series family built from φ; χ1, χ2 carry the Satake symbols a1, b1 and q = p.
// Exact when the λ-powers are u-monomials; throws std::domain_error otherwise.
CycloPoly whittaker_eval(const SchwartzFunction2D& phi, const WhittakerLambda& lambda, const GroupWord& g);

// Same family at numeric Satake values and complex λ.
std::complex<double> whittaker_eval_numeric(const SchwartzFunction2D& phi, std::complex<double> alpha,
                                            std::complex<double> beta, std::complex<double> lambda1,
                                            std::complex<double> lambda2, const GroupWord& g);

// |det|^λ twist of a table of values at a(ν), keyed by ord(ν).
struct DiscreteSeriesTwist {
  std::map<long, CycloPoly> base;
  CycloPoly eval(const Rational& lambda, long ord_nu) const;
};

struct FactorWeights {
  int degree = 1;
  Rational wt1{0};
  Rational wt2{0};
};

struct LambdaParams {
  std::vector<Rational> l;
  Rational L{0};
  Rational lambda_norm{0};
  bool tempered = true;
};

LambdaParams l_and_lambda_params(const std::vector<FactorWeights>& factors,
                                 const std::vector<WhittakerLambda>& lambda);

struct BoundSample {
  long nu_valuation = 0;
  Rational nu_unit{1};
  GroupWord k;  // element of GL2(o)
};

struct BoundCheckInput {
  SchwartzFunction2D phi = SchwartzFunction2D::unramified(5);
  Rational s1{0};  // wt(χ1)
  Rational s2{0};  // wt(χ2)
  double theta1 = 0.0;
  double theta2 = 0.0;
  std::vector<WhittakerLambda> lambdas;
  std::vector<double> epsilons;
  std::vector<BoundSample> samples;
};

struct BoundViolation {
  std::size_t lambda_index = 0;
  std::size_t epsilon_index = 0;
  std::size_t sample_index = 0;
  double value = 0.0;
  double bound = 0.0;
};

struct BoundReport {
  long n = 0;         // W vanishes unless ord(ν) ≥ -n
  Rational C{0};      // sup-norm bound of ω(k)φ
  std::size_t checked = 0;
  std::vector<BoundViolation> violations;
};

// C_{λ,ε} = C·q^{n|δ| + 2nε} / (1 - q^{-max(|δ|, ε)}) with δ the shifted weight difference.
double bound_constant(double C, long q, long n_phi, double delta, double epsilon);

BoundReport asymptotic_bound_check(const BoundCheckInput& input);

// Spherical vector of a tame cubic factor over cosets ϖ_E^j, j = 0, 1, 2.
struct ProductBoundReport {
  std::size_t checked = 0;
  std::size_t violations = 0;
  double worst_ratio = 0.0;
};
ProductBoundReport spherical_tame_bound_check(long q, const Rational& wt1, const Rational& wt2, double theta1,
                                              double theta2, const std::vector<double>& epsilons, long max_ord);

}  // namespace asai
