#include "asai/local_factors.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace asai {

namespace {

constexpr std::array<std::pair<ShapeKind, std::string_view>, 4> kShapeNames{{
    {ShapeKind::Split, "split"},
    {ShapeKind::QuadUnramTimesLine, "quad_unram"},
    {ShapeKind::CubicUnramField, "cubic_unram"},
    {ShapeKind::CubicTameRamified, "cubic_tame"},
}};

const RationalFunction& one() {
  static const RationalFunction k(Rational(1));
  return k;
}

}  // namespace

std::string_view shape_name(ShapeKind kind) {
  for (const auto& [k, n] : kShapeNames) {
    if (k == kind) return n;
  }
  return "unknown";
}

std::optional<ShapeKind> parse_shape(std::string_view name) {
  for (const auto& [k, n] : kShapeNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

EtaleCubicShape EtaleCubicShape::of(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::Split:
      return {kind, {kBaseField, kBaseField, kBaseField}};
    case ShapeKind::QuadUnramTimesLine:
      return {kind, {FieldTag{1, 2}, kBaseField}};
    case ShapeKind::CubicUnramField:
      return {kind, {FieldTag{1, 3}}};
    case ShapeKind::CubicTameRamified:
      return {kind, {FieldTag{3, 1}}};
  }
  throw std::invalid_argument("unknown shape");
}

AsaiRepData symbolic_rep(ShapeKind kind, long p) {
  static constexpr std::array<std::pair<Var, Var>, 3> kSymbols{
      {{Var::a1, Var::b1}, {Var::a2, Var::b2}, {Var::a3, Var::b3}}};
  AsaiRepData rep;
  rep.shape = EtaleCubicShape::of(kind);
  rep.p = p;
  for (std::size_t i = 0; i < rep.shape.factors.size(); ++i) {
    rep.satake.push_back({var(kSymbols[i].first), var(kSymbols[i].second)});
  }
  return rep;
}

void validate(const AsaiRepData& rep) {
  if (rep.p == 2 || !is_prime(rep.p)) throw std::invalid_argument("residue characteristic must be an odd prime");
  if (rep.shape.kind == ShapeKind::CubicTameRamified && rep.p == 3) {
    throw std::invalid_argument("tame cubic shape needs p != 3");
  }
  int degree = 0;
  for (const auto& f : rep.shape.factors) degree += f.e * f.f;
  if (degree != 3) throw std::invalid_argument("factor degrees must sum to 3");
  if (rep.satake.size() != rep.shape.factors.size()) {
    throw std::invalid_argument("expected one Satake pair per factor");
  }
  for (const auto& s : rep.satake) {
    if (s.alpha.is_zero() || s.beta.is_zero()) throw std::invalid_argument("Satake values must be nonzero");
  }
}

DiscriminantClass discriminant_algebra_class(const AsaiRepData& rep) {
  switch (rep.shape.kind) {
    case ShapeKind::Split:
    case ShapeKind::CubicUnramField:
      return {};
    case ShapeKind::QuadUnramTimesLine:
      return {0, -1};
    case ShapeKind::CubicTameRamified:
      return DiscriminantClass::of(Rational(-3), rep.p);
  }
  throw std::invalid_argument("unknown shape");
}

LocalFieldElement reference_discriminant(const AsaiRepData& rep) {
  switch (rep.shape.kind) {
    case ShapeKind::Split:
    case ShapeKind::CubicUnramField:
      return {};
    case ShapeKind::QuadUnramTimesLine:
      return {0, Rational(smallest_nonresidue(rep.p)), kBaseField};
    case ShapeKind::CubicTameRamified:
      return {-2, Rational(1, 27), kBaseField};
  }
  throw std::invalid_argument("unknown shape");
}

RationalFunction omega_at_uniformizer(const AsaiRepData& rep) {
  RationalFunction w = one();
  for (std::size_t i = 0; i < rep.satake.size(); ++i) {
    w *= (rep.satake[i].alpha * rep.satake[i].beta).pow(rep.shape.factors[i].e);
  }
  return w;
}

RationalFunction omega_eval(const RationalFunction& omega_value, const LocalFieldElement& x) {
  return unram_char_eval(UnramChar{kBaseField, omega_value}, x);
}

RationalFunction abs_power_shifted(const LocalFieldElement& x, int k) {
  long v = x.valuation_in(kBaseField);
  return (T() / u()).pow(static_cast<int>(v * k));
}

LocalFactorTriple tate_factors(const UnramChar& chi, const LocalFieldElement& psi_twist) {
  if (!(chi.field == kBaseField)) throw std::invalid_argument("Tate factors are for characters of F");
  const RationalFunction& v = chi.value;
  LocalFactorTriple out;
  out.L = one() / (one() - v * T());
  out.eps = unram_char_eval(chi, psi_twist) * abs_power_shifted(psi_twist, 1);
  RationalFunction dual = one() / (one() - v.inverse() * reflect_s(T()));
  out.gamma = out.eps * dual / out.L;
  return out;
}

std::vector<EulerFactor> asai_cube_euler_factors(const AsaiRepData& rep) {
  validate(rep);
  std::vector<EulerFactor> out;
  const auto& s = rep.satake;
  switch (rep.shape.kind) {
    case ShapeKind::Split:
      for (int bits = 0; bits < 8; ++bits) {
        RationalFunction c = one();
        for (int i = 0; i < 3; ++i) c *= (bits >> i & 1) ? s[i].beta : s[i].alpha;
        out.push_back({c, 1});
      }
      break;
    case ShapeKind::QuadUnramTimesLine: {
      // Asai of the quadratic factor: a, b and a·b on T^2, tensored with (a2, b2).
      const auto& a = s[0].alpha;
      const auto& b = s[0].beta;
      for (const auto* c : {&s[1].alpha, &s[1].beta}) {
        out.push_back({a * *c, 1});
        out.push_back({b * *c, 1});
      }
      out.push_back({a * b * s[1].alpha.pow(2), 2});
      out.push_back({a * b * s[1].beta.pow(2), 2});
      break;
    }
    case ShapeKind::CubicUnramField: {
      const auto& a = s[0].alpha;
      const auto& b = s[0].beta;
      out.push_back({a, 1});
      out.push_back({b, 1});
      out.push_back({a.pow(2) * b, 3});
      out.push_back({a * b.pow(2), 3});
      break;
    }
    case ShapeKind::CubicTameRamified: {
      const auto& a = s[0].alpha;
      const auto& b = s[0].beta;
      out.push_back({a.pow(3), 1});
      out.push_back({b.pow(3), 1});
      out.push_back({a.pow(2) * b, 1});
      out.push_back({a * b.pow(2), 1});
      break;
    }
  }
  return out;
}

RationalFunction asai_cube_L(const AsaiRepData& rep) {
  RationalFunction den = one();
  for (const auto& f : asai_cube_euler_factors(rep)) den *= one() - f.coef * T().pow(f.t_power);
  return den.inverse();
}

RationalFunction asai_cube_eps(const AsaiRepData& rep, const LocalFieldElement& psi_twist) {
  validate(rep);
  RationalFunction eps = one();
  if (rep.shape.kind == ShapeKind::CubicTameRamified) {
    // ψ_E has conductor (3ϖ_E^2)^{-1}: ε(s, χ, ψ_E) = χ(3ϖ_E²)|3ϖ_E²|_E^{s-1/2} on the two induced pieces,
    // and the two Langlands constants contribute λ² = ω_{K/F}(-1).
    const FieldTag tag = rep.shape.factors[0];
    const LocalFieldElement different{2, Rational(3), tag};
    const auto& a = rep.satake[0].alpha;
    const auto& b = rep.satake[0].beta;
    const RationalFunction abs_part = (T() / u()).pow(static_cast<int>(2 * tag.f));
    for (const auto& chi_value : {a.pow(2) * b, a * b.pow(2)}) {
      eps *= unram_char_eval(UnramChar{tag, chi_value}, different) * abs_part;
    }
    const int lambda_sq = quad_char_eval(discriminant_algebra_class(rep), LocalFieldElement::from_rational(-1, rep.p), rep.p);
    eps *= RationalFunction(Rational(lambda_sq));
  }
  // Twisting ψ by a: det(As)(a)|a|^{8(s-1/2)} with det(As) = ω^4.
  eps *= omega_eval(omega_at_uniformizer(rep), psi_twist).pow(4) * abs_power_shifted(psi_twist, 8);
  return eps;
}

AsaiRepData contragredient(const AsaiRepData& rep) {
  AsaiRepData out = rep;
  for (auto& s : out.satake) {
    s.alpha = s.alpha.inverse();
    s.beta = s.beta.inverse();
  }
  return out;
}

LocalFactorTriple asai_cube_gamma(const AsaiRepData& rep, const LocalFieldElement& psi_twist) {
  LocalFactorTriple out;
  out.L = asai_cube_L(rep);
  out.eps = asai_cube_eps(rep, psi_twist);
  RationalFunction dual = reflect_s(asai_cube_L(contragredient(rep)));
  out.gamma = out.eps * dual / out.L;
  return out;
}

RationalFunction correction_factor(const AsaiRepData& rep, const LocalFieldElement& delta) {
  validate(rep);
  if (is_zero(delta.unit)) throw std::domain_error("discriminant must be nonzero");
  RationalFunction w = omega_eval(omega_at_uniformizer(rep), delta);
  int sign = quad_char_eval(discriminant_algebra_class(rep), LocalFieldElement::from_rational(-1, rep.p), rep.p);
  return w * abs_power_shifted(delta, 2) * RationalFunction(Rational(sign));
}

RationalFunction transform_multiplier(const GammaTransform& change, const RationalFunction& omega_value) {
  if (const auto* b = std::get_if<BasisChange>(&change)) {
    if (is_zero(b->det.unit)) throw std::domain_error("basis change with zero determinant");
    return omega_eval(omega_value, b->det).pow(2) * abs_power_shifted(b->det, 4);
  }
  const auto& t = std::get<PsiTwist>(change);
  if (is_zero(t.a.unit)) throw std::domain_error("additive character twist by zero");
  return omega_eval(omega_value, t.a).pow(4) * abs_power_shifted(t.a, 8);
}

RationalFunction transform_gamma_psr(const RationalFunction& gamma_psr, const GammaTransform& change,
                                     const RationalFunction& omega_value) {
  return transform_multiplier(change, omega_value) * gamma_psr;
}

PoleReport pole_region_check(const AsaiRepData& rep, const std::vector<FactorWeights>& weights,
                             const std::vector<WhittakerLambda>& lambda) {
  validate(rep);
  if (weights.size() != rep.satake.size()) throw std::invalid_argument("one weight pair per factor expected");
  static constexpr std::array<std::pair<Var, Var>, 3> kSymbols{
      {{Var::a1, Var::b1}, {Var::a2, Var::b2}, {Var::a3, Var::b3}}};
  // log_q |a_i| = -f_i · (wt + Re λ).
  std::array<Rational, kVarCount> log_abs{};
  std::vector<FactorWeights> shifted_weights;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    WhittakerLambda lam = i < lambda.size() ? lambda[i] : WhittakerLambda{};
    const int f = rep.shape.factors[i].f;
    const int d = rep.shape.factors[i].e * f;
    Rational w1 = weights[i].wt1 + lam.l1;
    Rational w2 = weights[i].wt2 + lam.l2;
    log_abs[static_cast<std::size_t>(kSymbols[i].first)] = -f * w1;
    log_abs[static_cast<std::size_t>(kSymbols[i].second)] = -f * w2;
    shifted_weights.push_back({d, w1, w2});
  }
  PoleReport out;
  out.L_Pi = l_and_lambda_params(shifted_weights, {}).L;
  bool first = true;
  for (const auto& f : asai_cube_euler_factors(rep)) {
    if (!f.coef.is_monomial()) throw std::invalid_argument("pole check needs symbolic Satake data");
    const auto& term = f.coef.num().terms()[0];
    Rational lg(0);
    for (auto v : kAllVars) lg += term.mono[v] * log_abs[static_cast<std::size_t>(v)];
    Rational re = lg / f.t_power;
    out.pole_re.push_back(re);
    if (first || re > out.rightmost) out.rightmost = re;
    first = false;
  }
  out.ok = out.rightmost <= -out.L_Pi;
  return out;
}

}  // namespace asai
