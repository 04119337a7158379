// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "asai/induced_rep.hpp"
#include "asai/oracle.hpp"
#include "asai/weil.hpp"
#include "asai/whittaker.hpp"
#include "asai/zeta.hpp"
#include "generators.hpp"

namespace {

using namespace asai;
using testing::Gen;
using testing::frac;
using Clock = std::chrono::steady_clock;

// Pinned tolerances.
constexpr double kCriterion1Seconds = 1.0;
constexpr double kCriterion5Seconds = 10.0;
constexpr double kOracleRelTol = 1e-8;
constexpr double kPoleTol = 1e-7;
constexpr int kDatasetsPerShape = 20;
constexpr int kSchwartzSamples = 100;
constexpr std::size_t kBoundSamplesMin = 500;
constexpr int kPoleShiftsPerShape = 50;

constexpr std::array<ShapeKind, 4> kShapes{ShapeKind::Split, ShapeKind::QuadUnramTimesLine,
                                           ShapeKind::CubicUnramField, ShapeKind::CubicTameRamified};
const RationalFunction kOne(Rational(1));

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

Outcome criterion1() {
  const auto t0 = Clock::now();
  const TameZetaContext ctx;
  const RationalFunction a = ctx.alpha, b = ctx.beta, w = ctx.omega();
  const RationalFunction total = zeta_tame(ctx).total;
  const RationalFunction want = (kOne - w * T().pow(2) * u().pow(2)) * (kOne - w.pow(2) * T().pow(4)) /
                                ((kOne - a.pow(3) * T()) * (kOne - b.pow(3) * T()) * (kOne - a * a * b * T()) *
                                 (kOne - a * b * b * T()));
  const bool eq = total == want;
  const double dt = seconds_since(t0);
  return {eq && dt < kCriterion1Seconds, std::string(eq ? "equal" : "NOT equal") + ", " + fmt(dt) + " s"};
}

Outcome criterion2() {
  bool ok = true;
  std::ostringstream d;
  for (long p : {5L, 7L, 11L, 13L}) {
    const AsaiRepData rep = symbolic_rep(ShapeKind::CubicTameRamified, p);
    const LocalFieldElement delta = reference_discriminant(rep);
    const bool eq = gamma_psr(rep) == correction_factor(rep, delta) * asai_cube_gamma(rep).gamma;
    // ω_{K/F}(-1) = (-1, -3)_p.
    const int hilbert = hilbert_symbol(Rational(-1), Rational(-3), p);
    const int sign = quad_char_eval(discriminant_algebra_class(rep), LocalFieldElement::from_rational(Rational(-1), p), p);
    ok = ok && eq && hilbert == sign;
    d << "p=" << p << (eq ? " ok" : " FAIL") << " sign " << sign << "; ";
  }
  return {ok, d.str()};
}

Outcome criterion3() {
  bool ok = true;
  std::ostringstream d;
  Gen g(3);
  for (auto k : {ShapeKind::Split, ShapeKind::CubicUnramField}) {
    for (long p : {5L, 7L, 11L}) {
      const AsaiRepData rep = symbolic_rep(k, p);
      const LocalFactorTriple t = asai_cube_gamma(rep);
      ok = ok && asai_cube_eps(rep) == kOne && gamma_psr(rep) == t.eps.inverse() * t.gamma && t.eps == kOne;
      for (int j = 0; j < 5; ++j) {
        // Integral bases of an unramified algebra differ by det(A)^2 with A ∈ GL3(o).
        Rational unit(g.integer(1, p - 1));
        LocalFieldElement disc{0, unit * unit, kBaseField};
        ok = ok && correction_factor(rep, disc) == kOne && gamma_psr(rep, disc) == t.gamma;
      }
    }
    d << shape_name(k) << (ok ? " ok; " : " FAIL; ");
  }
  return {ok, d.str()};
}

Outcome criterion4() {
  const TameZetaContext ctx;
  const RationalFunction a = ctx.alpha, b = ctx.beta, w = ctx.omega(), t = T();
  const ZetaDecomposition z = zeta_tame(ctx);
  const RationalFunction L2s = (kOne - w * t.pow(2)).inverse();
  const RationalFunction L2s1 = (kOne - w * t.pow(2) * u().pow(2)).inverse();
  const RationalFunction pre = L2s * L2s1.inverse() * (a - b).inverse();
  const RationalFunction ra = (kOne - a.pow(12) * b.pow(6) * t.pow(6)) / (kOne - a.pow(4) * b.pow(2) * t.pow(2));
  const RationalFunction rb = (kOne - a.pow(6) * b.pow(12) * t.pow(6)) / (kOne - a.pow(2) * b.pow(4) * t.pow(2));
  const RationalFunction da = kOne - a.pow(6) * t.pow(2), db = kOne - b.pow(6) * t.pow(2);
  const RationalFunction ea = kOne - a.pow(12) * b.pow(6) * t.pow(6), eb = kOne - a.pow(6) * b.pow(12) * t.pow(6);

  const RationalFunction pa0 = a / da - a.pow(4) * b.pow(3) * t.pow(2) / ea;
  const RationalFunction pb0 = b / db - a.pow(3) * b.pow(4) * t.pow(2) / eb;
  const RationalFunction pa1 = a.pow(4) / da - a.pow(10) * b.pow(6) * t.pow(4) / ea;
  const RationalFunction pb1 = b.pow(4) / db - a.pow(6) * b.pow(10) * t.pow(4) / eb;

  const bool z0 = z.Z0 == pre * (ra * pa0 - rb * pb0);
  // q^{-s-2} = T u^4.
  const bool z1 = z.Z1 == t * u().pow(4) * pre * (ra * pa1 - rb * pb1);

  const RationalFunction qa = a.pow(4) * t / da - a.pow(10) * b.pow(6) * t.pow(5) / ea;
  const RationalFunction qb = b.pow(4) * t / db - a.pow(6) * b.pow(10) * t.pow(5) / eb;
  const bool pf1 = pa0 + qa == L2s.inverse() * a / ((kOne - a.pow(3) * t) * (kOne - a.pow(6) * b.pow(3) * t.pow(3)));
  const bool pf2 = pb0 + qb == L2s.inverse() * b / ((kOne - b.pow(3) * t) * (kOne - a.pow(3) * b.pow(6) * t.pow(3)));

  const RationalFunction c1 = kOne - a * a * b * t, c2 = kOne - a * b * b * t;
  const RationalFunction bracket = a * (kOne - a * a * b * t + a.pow(4) * b * b * t * t) / ((kOne - a.pow(3) * t) * c1) -
                                   b * (kOne - a * b * b * t + a * a * b.pow(4) * t * t) / ((kOne - b.pow(3) * t) * c2);
  const bool sum1 = z.total == L2s1.inverse() * (a - b).inverse() * bracket;
  const bool sum2 = z.total == L2s1.inverse() * (kOne - w.pow(2) * t.pow(4)) /
                                   ((kOne - a.pow(3) * t) * (kOne - b.pow(3) * t) * c1 * c2);
  std::ostringstream d;
  d << "Z0 " << z0 << ", Z1 " << z1 << ", pf1 " << pf1 << ", pf2 " << pf2 << ", sum " << sum1 << sum2;
  return {z0 && z1 && pf1 && pf2 && sum1 && sum2, d.str()};
}

Outcome criterion5() {
  const auto t0 = Clock::now();
  OracleParams p;  // q = 5, unit-circle α, β, s = 2, N = D = 60
  const OracleReport r = numeric_oracle(p);
  const double dt = seconds_since(t0);
  bool decreasing = true;
  for (const auto& step : r.tail) decreasing = decreasing && step.ok;
  const bool ok = r.rel_error <= kOracleRelTol && r.tail_geometric && decreasing && dt < kCriterion5Seconds &&
                  std::abs(std::abs(p.alpha) - 1) < 1e-15 && std::abs(std::abs(p.beta) - 1) < 1e-15;
  return {ok, "rel_error " + fmt(r.rel_error) + ", tail " + (r.tail_geometric ? "geometric" : "NOT geometric") + ", " +
                  fmt(dt) + " s"};
}

Outcome criterion6() {
  Gen g(6);
  bool ok = true;
  std::ostringstream d;
  const std::map<ShapeKind, std::size_t> dims{{ShapeKind::Split, 8},
                                              {ShapeKind::QuadUnramTimesLine, 8},
                                              {ShapeKind::CubicUnramField, 8},
                                              {ShapeKind::CubicTameRamified, 4}};
  for (auto k : kShapes) {
    const InducedRepResult sym = induced_rep_oracle(symbolic_rep(k));
    bool shape_ok = sym.invariant_dim == dims.at(k) && sym.L == asai_cube_L(symbolic_rep(k));
    for (int n = 0; n < kDatasetsPerShape; ++n) {
      AsaiRepData rep = symbolic_rep(k, n % 2 ? 7 : 5);
      for (auto& s : rep.satake) s = {constant(g.nonzero_rational()), constant(g.nonzero_rational())};
      const InducedRepResult r = induced_rep_oracle(rep);
      shape_ok = shape_ok && r.L == asai_cube_L(rep) && r.invariant_dim == dims.at(k);
    }
    ok = ok && shape_ok;
    d << shape_name(k) << " dim " << sym.invariant_dim << (shape_ok ? " ok; " : " FAIL; ");
  }
  return {ok, d.str()};
}

Outcome criterion7() {
  Gen g(7);
  const SchwartzFunction2D phi0 = SchwartzFunction2D::unramified(5);
  bool prop = true;
  std::optional<CyclotomicNumber> c;
  for (int n = 0; n <= 10; ++n) {
    const CycloPoly w = whittaker_eval(phi0, {}, GroupWord{WeilGenerator::a(power(Rational(5), n))});
    const RationalFunction sh = shintani(n);
    std::vector<CycloPoly::Term> terms;
    for (const auto& t : sh.as_polynomial().terms()) terms.push_back({t.mono, CyclotomicNumber(t.coef)});
    const CycloPoly shc = CycloPoly::from_terms(std::move(terms));
    if (!c) c = w.coefficient(shc.leading_term().mono) * inverse(shc.leading_term().coef);
    prop = prop && !is_zero(*c) && w == shc.scaled(*c);
  }
  int fourier = 0, refine = 0;
  const std::vector<GroupWord> words{{}, {WeilGenerator::w()}, {WeilGenerator::a(Rational(5)), WeilGenerator::n(Rational(2, 5))}};
  for (int k = 0; k < kSchwartzSamples; ++k) {
    const SchwartzFunction2D phi = g.schwartz(5, 2);
    const SchwartzFunction2D ww = weil_act(GroupWord{WeilGenerator::w(), WeilGenerator::w()}, phi);
    bool f_ok = true;
    for (int j = 0; j < 6; ++j) {
      const Rational x = g.p_adic_point(5, 3), y = g.p_adic_point(5, 3);
      f_ok = f_ok && ww(x, y) == phi(-x, -y);
    }
    fourier += f_ok;
    const GroupWord& word = words[static_cast<std::size_t>(k) % words.size()];
    const WhittakerLambda lam{frac(g.integer(-2, 2), 2), frac(g.integer(-2, 2), 2)};
    refine += whittaker_eval(phi, lam, word) == whittaker_eval(phi.refined(), lam, word);
  }
  std::ostringstream d;
  d << "proportional " << prop << " (constant " << to_string(*c) << "), fourier " << fourier << "/" << kSchwartzSamples
    << ", refinement " << refine << "/" << kSchwartzSamples;
  return {prop && fourier == kSchwartzSamples && refine == kSchwartzSamples, d.str()};
}

Outcome criterion8() {
  Gen g(8);
  std::size_t checked = 0, violations = 0;
  for (int trial = 0; trial < 2; ++trial) {
    BoundCheckInput in;
    if (trial == 1) in.phi = g.schwartz(5, 2);
    in.s1 = Rational(1, 10);
    in.s2 = Rational(-1, 12);
    in.theta1 = 0.7;
    in.theta2 = -2.1;
    // Compact neighborhood of the tempered point.
    for (int i = -2; i <= 2; ++i) in.lambdas.push_back({frac(i, 20), frac(-i, 40)});
    in.epsilons = {0.05, 0.1, 0.2, 0.4};
    const std::vector<GroupWord> ks{{}, {WeilGenerator::w()}, {WeilGenerator::n(Rational(1))},
                                    {WeilGenerator::w(), WeilGenerator::n(Rational(2))}};
    for (long v = -2; v <= 7; ++v) {
      for (std::size_t j = 0; j < 3; ++j) in.samples.push_back({v, Rational(g.integer(1, 4)), ks[(static_cast<std::size_t>(v + 2) + j) % ks.size()]});
    }
    const BoundReport r = asymptotic_bound_check(in);
    checked += r.checked;
    violations += r.violations.size();
  }
  return {checked >= kBoundSamplesMin && violations == 0,
          std::to_string(checked) + " samples, " + std::to_string(violations) + " violations"};
}

Outcome criterion9() {
  Gen g(9);
  bool cocycle = true, psi = true, basis = true;
  for (auto k : kShapes) {
    const AsaiRepData rep = symbolic_rep(k, 7);
    const RationalFunction w = omega_at_uniformizer(rep);
    const RationalFunction base = gamma_psr(rep);
    const RationalFunction wd = asai_cube_gamma(rep).gamma;
    for (int n = 0; n < 10; ++n) {
      const LocalFieldElement x{g.integer(-3, 3), Rational(g.integer(1, 6)), kBaseField};
      const LocalFieldElement y{g.integer(-3, 3), Rational(g.integer(1, 6)), kBaseField};
      for (const auto& make : std::vector<std::function<GammaTransform(const LocalFieldElement&)>>{
               [](const LocalFieldElement& e) { return GammaTransform{BasisChange{e}}; },
               [](const LocalFieldElement& e) { return GammaTransform{PsiTwist{e}}; }}) {
        cocycle = cocycle && transform_gamma_psr(transform_gamma_psr(base, make(x), w), make(y), w) ==
                                 transform_gamma_psr(base, make(x * y), w);
      }
      // d = 3: ω(a)^4 |a|^{8(s - 1/2)}.
      const RationalFunction mult = omega_eval(w, x).pow(4) * abs_power_shifted(x, 8);
      psi = psi && asai_cube_gamma(rep, x).gamma == wd * mult && gamma_psr(rep, std::nullopt, x) == base * mult;

      // Δ ↦ det(A)^2 Δ on both sides.
      const LocalFieldElement det{g.integer(-2, 2), Rational(g.integer(1, 6)), kBaseField};
      const LocalFieldElement moved = reference_discriminant(rep) * det * det;
      basis = basis && gamma_psr(rep, moved) == correction_factor(rep, moved) * wd &&
              gamma_psr(rep, moved) == transform_gamma_psr(base, BasisChange{det}, w);
    }
  }
  std::ostringstream d;
  d << "cocycle " << cocycle << ", psi-twist " << psi << ", basis invariance " << basis;
  return {cocycle && psi && basis, d.str()};
}

// Roots of Σ c_k x^k by Durand–Kerner.
std::vector<std::complex<double>> poly_roots(std::vector<std::complex<double>> c) {
  while (!c.empty() && std::abs(c.back()) == 0) c.pop_back();
  const std::size_t deg = c.size() - 1;
  for (auto& x : c) x /= c.back();
  std::vector<std::complex<double>> z(deg);
  for (std::size_t i = 0; i < deg; ++i) z[i] = std::pow(std::complex<double>(0.4, 0.9), static_cast<double>(i));
  auto eval = [&](std::complex<double> x) {
    std::complex<double> r = 0;
    for (std::size_t k = c.size(); k-- > 0;) r = r * x + c[k];
    return r;
  };
  for (int it = 0; it < 2000; ++it) {
    double moved = 0;
    for (std::size_t i = 0; i < deg; ++i) {
      std::complex<double> den = 1;
      for (std::size_t j = 0; j < deg; ++j) {
        if (j != i) den *= z[i] - z[j];
      }
      const std::complex<double> step = eval(z[i]) / den;
      z[i] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-15) break;
  }
  return z;
}

Outcome criterion10() {
  Gen g(10);
  constexpr double q = 5;
  bool ok = true;
  int agree = 0, total = 0;
  std::ostringstream d;
  for (auto k : kShapes) {
    const AsaiRepData rep = symbolic_rep(k);
    const RationalPoly den = asai_cube_L(rep).den();
    const int tmin = den.min_exponent(Var::T);
    bool shape_ok = true;
    for (int n = 0; n < kPoleShiftsPerShape; ++n) {
      std::vector<FactorWeights> weights;
      std::vector<WhittakerLambda> lam;
      NumericPoint pt = numeric_point(q, 0.0);
      Rational L_Pi(0);
      static constexpr std::array<Var, 6> syms{Var::a1, Var::b1, Var::a2, Var::b2, Var::a3, Var::b3};
      for (std::size_t i = 0; i < rep.shape.factors.size(); ++i) {
        const FieldTag f = rep.shape.factors[i];
        FactorWeights w{f.e * f.f, frac(g.integer(-3, 3), 8), frac(g.integer(-3, 3), 8)};
        WhittakerLambda l{frac(g.integer(-5, 5), 20), frac(g.integer(-5, 5), 20)};
        const Rational w1 = w.wt1 + l.l1, w2 = w.wt2 + l.l2;
        L_Pi += w.degree * std::min(w1, w2);
        // |α| = q_E^{-wt}, with a generic phase.
        pt[static_cast<std::size_t>(syms[2 * i])] = std::polar(std::pow(q, -f.f * w1.get_d()), g.real(0.1, 3.0));
        pt[static_cast<std::size_t>(syms[2 * i + 1])] = std::polar(std::pow(q, -f.f * w2.get_d()), g.real(0.1, 3.0));
        weights.push_back(w);
        lam.push_back(l);
      }
      std::vector<std::complex<double>> coeffs(static_cast<std::size_t>(den.max_exponent(Var::T) - tmin + 1));
      for (const auto& t : den.terms()) {
        Monomial rest = t.mono / Monomial::of(Var::T, t.mono[Var::T]);
        coeffs[static_cast<std::size_t>(t.mono[Var::T] - tmin)] +=
            RationalPoly(rest, t.coef).evaluate(pt);
      }
      double rightmost = -INFINITY;
      for (const auto& z : poly_roots(coeffs)) rightmost = std::max(rightmost, -std::log(std::abs(z)) / std::log(q));
      const bool independent = rightmost <= -L_Pi.get_d() + kPoleTol;
      const PoleReport r = pole_region_check(rep, weights, lam);
      const bool same = r.ok && r.L_Pi == L_Pi && std::abs(r.rightmost.get_d() - rightmost) < 1e-6;
      shape_ok = shape_ok && independent && same;
      agree += same;
      ++total;
    }
    ok = ok && shape_ok;
    d << shape_name(k) << (shape_ok ? " ok; " : " FAIL; ");
  }
  d << agree << "/" << total << " agree with library report";
  return {ok, d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"zeta closed form", criterion1},     {"tame gamma identity", criterion2},
      {"unramified gamma", criterion3},     {"intermediate displays", criterion4},
      {"numeric oracle", criterion5},       {"induced representation L", criterion6},
      {"whittaker cross-check", criterion7}, {"asymptotic bound", criterion8},
      {"transformation laws", criterion9},  {"pole region", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("criterion %2zu %-26s %s  %s\n", i + 1, criteria[i].first, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
