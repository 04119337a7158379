#include "asai/whittaker.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace asai {

RationalFunction shintani(int n, const RationalFunction& alpha, const RationalFunction& beta) {
  if (n < 0) return RationalFunction();
  RationalFunction sum;
  RationalFunction a_pow = alpha.pow(n);
  RationalFunction ratio = beta / alpha;
  for (int j = 0; j <= n; ++j) {
    sum += a_pow;
    a_pow *= ratio;
  }
  return sum * u().pow(n);
}

RationalFunction shintani(int n) { return shintani(n, var(Var::a1), var(Var::b1)); }

namespace {

long integral_exponent(const Rational& r, const char* what) {
  if (r.get_den() != 1) throw std::domain_error(std::string("non-integral u-exponent for ") + what);
  return r.get_num().get_si();
}

// ∫_{o^×} ψ(γ1 p^m ε + γ2 p^{-m} ε^{-1}) 1[p^m ε ∈ box1] 1[p^{-m} ε^{-1} ∈ box2] d^×ε, vol(o^×) = 1.
CyclotomicNumber unit_integral(const BoxTerm& t, long m, long p) {
  long R = 1;
  R = std::max(R, t.depth1 - m);
  R = std::max(R, t.depth2 + m);
  long psi_k = 0;
  if (!is_zero(t.twist1)) {
    R = std::max(R, -(valuation(t.twist1, p) + m));
    psi_k = std::max(psi_k, -(valuation(t.twist1, p) + m));
  }
  if (!is_zero(t.twist2)) {
    R = std::max(R, -(valuation(t.twist2, p) - m));
    psi_k = std::max(psi_k, -(valuation(t.twist2, p) - m));
  }
  const long modulus = ipow(p, static_cast<int>(R));
  const long level = ipow(p, static_cast<int>(psi_k));
  const Rational pm = power(Rational(p), m);
  const Rational pm_inv = power(Rational(p), -m);
  std::vector<Rational> counts(static_cast<std::size_t>(level), Rational(0));
  bool any = false;
  for (long e = 1; e < modulus; ++e) {
    if (e % p == 0) continue;
    long e_inv = inverse_mod(e, modulus);
    Rational x = pm * Rational(e);
    Rational y = pm_inv * Rational(e_inv);
    if (!in_box(x, t.center1, t.depth1, p) || !in_box(y, t.center2, t.depth2, p)) continue;
    Rational arg = t.twist1 * x + t.twist2 * y;
    long r = level == 1 ? 0 : residue_mod(Rational(arg * Rational(level)), level);
    counts[static_cast<std::size_t>(r)] += 1;
    any = true;
  }
  if (!any) return CyclotomicNumber(0);
  Rational classes = Rational(ipow(p, static_cast<int>(R - 1)) * (p - 1));
  for (auto& c : counts) c /= classes;
  return t.coef * CyclotomicNumber(level, std::move(counts));
}

// Valuations v(t) for which the term can be nonzero on (t, t^{-1}).
std::pair<long, long> valuation_window(const BoxTerm& t, long p) {
  long lo = (is_zero(t.center1) || valuation(t.center1, p) >= t.depth1) ? t.depth1 : valuation(t.center1, p);
  bool exact1 = !(is_zero(t.center1) || valuation(t.center1, p) >= t.depth1);
  long hi = (is_zero(t.center2) || valuation(t.center2, p) >= t.depth2) ? -t.depth2 : -valuation(t.center2, p);
  bool exact2 = !(is_zero(t.center2) || valuation(t.center2, p) >= t.depth2);
  if (exact1 && exact2 && lo != hi) return {1, 0};
  if (exact1) hi = std::min(hi, lo);
  if (exact2) lo = std::max(lo, hi);
  return {lo, hi};
}

}  // namespace

CycloPoly whittaker_eval(const SchwartzFunction2D& phi, const WhittakerLambda& lambda, const GroupWord& g) {
  const long p = phi.prime();
  SchwartzFunction2D moved = weil_act(g, phi);
  Rational det = determinant(g);
  long vdet = valuation(det, p);
  std::map<long, CyclotomicNumber> by_valuation;
  for (const auto& t : moved.terms()) {
    auto [lo, hi] = valuation_window(t, p);
    for (long m = lo; m <= hi; ++m) {
      auto val = unit_integral(t, m, p);
      if (is_zero(val)) continue;
      by_valuation[m] += val;
    }
  }
  std::vector<CycloPoly::Term> terms;
  const Rational diff = lambda.l1 - lambda.l2;
  for (const auto& [m, c] : by_valuation) {
    if (is_zero(c)) continue;
    Monomial mono = Monomial::of(Var::a1, static_cast<int>(m)) * Monomial::of(Var::b1, static_cast<int>(-m)) *
                    Monomial::of(Var::u, static_cast<int>(integral_exponent(Rational(2 * m * diff), "|t|^λ")));
    terms.push_back({mono, c});
  }
  CycloPoly integral = CycloPoly::from_terms(std::move(terms));
  // χ1(det g)|det g|^{λ1 + 1/2}.
  long u_exp = integral_exponent(Rational(vdet * (2 * lambda.l1 + 1)), "|det|^{λ+1/2}");
  Monomial pre = Monomial::of(Var::a1, static_cast<int>(vdet)) * Monomial::of(Var::u, static_cast<int>(u_exp));
  return integral.shifted(pre);
}

std::complex<double> whittaker_eval_numeric(const SchwartzFunction2D& phi, std::complex<double> alpha,
                                            std::complex<double> beta, std::complex<double> lambda1,
                                            std::complex<double> lambda2, const GroupWord& g) {
  CycloPoly w0 = whittaker_eval(phi, WhittakerLambda{}, g);
  const double q = static_cast<double>(phi.prime());
  NumericPoint pt = numeric_point(q, {0.0, 0.0});
  pt[static_cast<std::size_t>(Var::a1)] = alpha * std::exp(-lambda1 * std::log(q));
  pt[static_cast<std::size_t>(Var::b1)] = beta * std::exp(-lambda2 * std::log(q));
  return w0.evaluate(pt);
}

CycloPoly DiscreteSeriesTwist::eval(const Rational& lambda, long ord_nu) const {
  auto it = base.find(ord_nu);
  if (it == base.end()) return {};
  long e = integral_exponent(Rational(2 * lambda * ord_nu), "|det|^λ");
  return it->second.shifted(Monomial::of(Var::u, static_cast<int>(e)));
}

LambdaParams l_and_lambda_params(const std::vector<FactorWeights>& factors,
                                 const std::vector<WhittakerLambda>& lambda) {
  LambdaParams out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    WhittakerLambda lam = i < lambda.size() ? lambda[i] : WhittakerLambda{};
    Rational w1 = factors[i].wt1 + lam.l1;
    Rational w2 = factors[i].wt2 + lam.l2;
    Rational l = std::min(w1, w2);
    out.l.push_back(l);
    out.L += factors[i].degree * l;
    out.lambda_norm += factors[i].degree * std::max(abs(w1), abs(w2));
  }
  out.tempered = sgn(out.lambda_norm) == 0;
  return out;
}

double bound_constant(double C, long q, long n_phi, double delta, double epsilon) {
  const double lq = std::log(static_cast<double>(q));
  const double gap = std::max(std::abs(delta), epsilon);
  return C * std::exp(lq * static_cast<double>(n_phi) * (std::abs(delta) + 2.0 * epsilon)) /
         (1.0 - std::exp(-lq * gap));
}

BoundReport asymptotic_bound_check(const BoundCheckInput& input) {
  const long p = input.phi.prime();
  const double q = static_cast<double>(p);
  const double lq = std::log(q);
  BoundReport report;
  long n_phi = 0;
  Rational C(0);
  std::vector<SchwartzFunction2D> moved;
  moved.reserve(input.samples.size());
  for (const auto& s : input.samples) {
    moved.push_back(weil_act(s.k, input.phi));
    n_phi = std::max(n_phi, moved.back().support_exponent());
    C = std::max(C, moved.back().abs_bound());
  }
  report.n = 2 * n_phi;
  report.C = C;
  const double s1 = input.s1.get_d();
  const double s2 = input.s2.get_d();
  const std::complex<double> alpha = std::polar(std::exp(-lq * s1), input.theta1);
  const std::complex<double> beta = std::polar(std::exp(-lq * s2), input.theta2);
  for (std::size_t si = 0; si < input.samples.size(); ++si) {
    const auto& s = input.samples[si];
    Rational nu = s.nu_unit * power(Rational(p), s.nu_valuation);
    GroupWord g;
    g.push_back(WeilGenerator::a(nu));
    g.insert(g.end(), s.k.begin(), s.k.end());
    CycloPoly w0 = whittaker_eval(input.phi, WhittakerLambda{}, g);
    for (std::size_t li = 0; li < input.lambdas.size(); ++li) {
      const double l1 = input.lambdas[li].l1.get_d();
      const double l2 = input.lambdas[li].l2.get_d();
      NumericPoint pt = numeric_point(q, {0.0, 0.0});
      pt[static_cast<std::size_t>(Var::a1)] = alpha * std::exp(-lq * l1);
      pt[static_cast<std::size_t>(Var::b1)] = beta * std::exp(-lq * l2);
      const double value = std::abs(w0.evaluate(pt));
      const double sigma1 = s1 + l1;
      const double sigma2 = s2 + l2;
      const double l = std::min(sigma1, sigma2);
      for (std::size_t ei = 0; ei < input.epsilons.size(); ++ei) {
        const double eps = input.epsilons[ei];
        ++report.checked;
        double bound = 0.0;
        if (s.nu_valuation >= -report.n) {
          bound = bound_constant(C.get_d(), p, n_phi, sigma1 - sigma2, eps) *
                  std::exp(-lq * static_cast<double>(s.nu_valuation) * (l + 0.5 - eps));
        }
        constexpr double kRelativeSlack = 1e-9;
        if (value > bound * (1.0 + kRelativeSlack) + 1e-300) {
          report.violations.push_back({li, ei, si, value, bound});
        }
      }
    }
  }
  return report;
}

ProductBoundReport spherical_tame_bound_check(long q, const Rational& wt1, const Rational& wt2, double theta1,
                                              double theta2, const std::vector<double>& epsilons, long max_ord) {
  const double lq = std::log(static_cast<double>(q));
  const double w1 = wt1.get_d();
  const double w2 = wt2.get_d();
  const std::complex<double> alpha = std::polar(std::exp(-lq * w1), theta1);
  const std::complex<double> beta = std::polar(std::exp(-lq * w2), theta2);
  const double l = std::min(w1, w2);
  const double delta = std::abs(w1 - w2);
  ProductBoundReport report;
  for (double eps : epsilons) {
    double C = 0.0;
    for (int j = 0; j < 3; ++j) {
      C = std::max(C, std::exp(lq * j * (delta - 1.0)) * (2.0 * j + 1.0 + 3.0 / (std::exp(1.0) * eps * lq)));
    }
    // Support is ord(ν) ≥ -1 (reached only at j = 2); the factor q^ε covers that shell.
    C *= std::exp(lq * eps);
    for (long v = -3; v <= max_ord; ++v) {
      for (int j = 0; j < 3; ++j) {
        // a(ν) m(ϖ_E^j) = z(ϖ_E^{-j}) a(ν ϖ_E^{2j}), ord_E(ν ϖ_E^{2j}) = 3v + 2j.
        const long N = 3 * v + 2 * j;
        std::complex<double> w(0.0, 0.0);
        if (N >= 0) {
          std::complex<double> sum(0.0, 0.0);
          for (long i = 0; i <= N; ++i) sum += std::pow(alpha, static_cast<double>(N - i)) * std::pow(beta, static_cast<double>(i));
          w = std::pow(alpha * beta, -static_cast<double>(j)) * std::exp(-0.5 * lq * static_cast<double>(N)) * sum;
        }
        const double bound = v >= -1 ? C * std::exp(-lq * static_cast<double>(v) * (3.0 * l + 1.5 - eps)) : 0.0;
        ++report.checked;
        const double value = std::abs(w);
        if (value > bound * (1.0 + 1e-9) + 1e-300) ++report.violations;
        if (bound > 0.0) report.worst_ratio = std::max(report.worst_ratio, value / bound);
      }
    }
  }
  return report;
}

}  // namespace asai
