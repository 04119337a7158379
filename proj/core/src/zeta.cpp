#include "asai/zeta.hpp"

#include <map>
#include <stdexcept>

#include "asai/whittaker.hpp"

namespace asai {

namespace {

const RationalFunction& one() {
  static const RationalFunction k(Rational(1));
  return k;
}

void check_index(long n, int i, int branch) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (i < 0 || i > 2) throw std::invalid_argument("i must be 0, 1 or 2");
  if (branch != 0 && branch != 1) throw std::invalid_argument("branch must be 0 or 1");
}

int as_int(long v) {
  if (v > (1L << 20)) throw std::overflow_error("index too large");
  return static_cast<int>(v);
}

// Canonical key for grouping ratios.
std::string ratio_key(const RationalFunction& r) { return to_string(r); }

}  // namespace

RationalFunction TameZetaContext::x_exponent() const { return omega() * T().pow(2) * u().pow(2); }

RationalFunction pr_integral(long m, long n, const RationalFunction& X) {
  if (m + n < 0) return RationalFunction();
  const RationalFunction y = X * u().pow(-2);
  return y.pow(-as_int(m)) * (one() - y.pow(as_int(m + n + 1))) * (one() - X) / (one() - y);
}

SectionValue section_value(long n, int i, const TameZetaContext& ctx, int branch) {
  check_index(n, i, branch);
  const RationalFunction X = ctx.x_exponent();
  RationalFunction pre = X.pow(as_int(3 * n + i));
  // f(ι(a(ϖ)) g) = q^{-s-1/2} f(g).
  if (branch == 1) pre *= T() * u();
  return {pre, X};
}

RationalFunction whittaker_value_tame(long n, int i, const TameZetaContext& ctx, int branch) {
  const long k = 3 * n + i;
  const long ord = 2 * k + 3 * branch;
  if (k < 0 || ord < 0) return RationalFunction();
  return (ctx.alpha * ctx.beta).pow(-as_int(k)) * shintani(as_int(ord), ctx.alpha, ctx.beta);
}

RationalFunction zeta_term(long n, int i, const TameZetaContext& ctx, int branch) {
  const SectionValue sv = section_value(n, i, ctx, branch);
  const long k = 3 * n + i;
  return sv.prefactor * whittaker_value_tame(n, i, ctx, branch) * u().pow(-4 * as_int(k)) *
         pr_integral(2 * n, branch, sv.x_exponent);
}

GeometricSeries series_product(const GeometricSeries& a, const GeometricSeries& b) {
  GeometricSeries out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) out.push_back({x.coef * y.coef, x.ratio * y.ratio});
  }
  return out;
}

RationalFunction series_at(const GeometricSeries& s, long n) {
  RationalFunction sum;
  for (const auto& t : s) sum += t.coef * t.ratio.pow(as_int(n));
  return sum;
}

RationalFunction series_sum(const GeometricSeries& s) {
  std::map<std::string, GeometricTerm> groups;
  for (const auto& t : s) {
    auto [it, fresh] = groups.try_emplace(ratio_key(t.ratio), t);
    if (!fresh) it->second.coef += t.coef;
  }
  RationalFunction sum;
  for (const auto& [key, t] : groups) {
    if (!t.coef.is_zero()) sum += geometric_sum(t.coef, t.ratio);
  }
  return sum;
}

GeometricSeries zeta_series(const TameZetaContext& ctx, int branch) {
  check_index(0, 0, branch);
  const RationalFunction& a = ctx.alpha;
  const RationalFunction& b = ctx.beta;
  if (a == b) throw std::domain_error("series form needs α ≠ β");
  const RationalFunction X = ctx.x_exponent();
  const RationalFunction y = X * u().pow(-2);
  const RationalFunction ab = a * b;
  const RationalFunction diff_inv = (a - b).inverse();
  const RationalFunction pr_ratio = (one() - X) / (one() - y);
  GeometricSeries total;
  for (int i = 0; i < 3; ++i) {
    const int c = 3 * branch;
    // X^k (αβ)^{-k} q^{2k}, k = 3n + i.
    RationalFunction base = X.pow(i) * ab.pow(-i) * u().pow(-4 * i);
    if (branch == 1) base *= T() * u();
    GeometricSeries s{{base, X.pow(3) * ab.pow(-3) * u().pow(-12)}};
    // shintani(2k + c) = u^{2k+c} (α^{2k+c+1} - β^{2k+c+1}) / (α - β).
    const RationalFunction up = u().pow(2 * i + c) * diff_inv;
    s = series_product(s, {{up * a.pow(2 * i + c + 1), u().pow(6) * a.pow(6)},
                           {-up * b.pow(2 * i + c + 1), u().pow(6) * b.pow(6)}});
    // pr(2n, branch): y^{-2n} (1 - y^{2n+branch+1}) (1 - X)/(1 - y).
    s = series_product(s, {{pr_ratio, y.pow(-2)}, {-pr_ratio * y.pow(branch + 1), one()}});
    total.insert(total.end(), s.begin(), s.end());
  }
  return total;
}

ZetaDecomposition zeta_tame(const TameZetaContext& ctx) {
  ZetaDecomposition out;
  out.Z0 = series_sum(zeta_series(ctx, 0));
  out.Z1 = series_sum(zeta_series(ctx, 1));
  out.total = out.Z0 + u().pow(-4) * out.Z1;
  return out;
}

RationalFunction abelian_L(const RationalFunction& value, int t_power, int u_power) {
  return (one() - value * T().pow(t_power) * u().pow(u_power)).inverse();
}

RationalFunction zeta_tame_closed_form(const TameZetaContext& ctx) {
  const RationalFunction w = ctx.omega();
  const RationalFunction& a = ctx.alpha;
  const RationalFunction& b = ctx.beta;
  RationalFunction den = (one() - a.pow(3) * T()) * (one() - b.pow(3) * T()) * (one() - a.pow(2) * b * T()) *
                         (one() - a * b.pow(2) * T());
  // L(2s+1, ω)^{-1} L(4s, ω^2)^{-1}.
  RationalFunction num = (one() - w * T().pow(2) * u().pow(2)) * (one() - w.pow(2) * T().pow(4));
  return num / den;
}

RationalFunction gk_normalization(const RationalFunction& w) {
  // L(3-2s, ω^{-1}) L(4-4s, ω^{-2}) / (L(2s+1, ω) L(4s, ω^2)).
  return abelian_L(w.inverse(), -2, 6) * abelian_L(w.pow(-2), -4, 8) /
         (abelian_L(w, 2, 2) * abelian_L(w.pow(2), 4, 0));
}

RationalFunction dual_zeta_tame(const TameZetaContext& ctx) {
  return gk_normalization(ctx.omega()) * reflect_s(zeta_tame(ctx.contragredient()).total);
}

RationalFunction gamma_psr(const AsaiRepData& rep, const std::optional<LocalFieldElement>& basis_disc,
                           const LocalFieldElement& psi_twist) {
  validate(rep);
  RationalFunction g;
  if (rep.shape.kind == ShapeKind::CubicTameRamified) {
    const TameZetaContext ctx{rep.satake[0].alpha, rep.satake[0].beta};
    g = dual_zeta_tame(ctx) / zeta_tame(ctx).total;
  } else {
    // Spherical identities for the integral basis: ratio of the two unramified zeta integrals.
    g = reflect_s(asai_cube_L(contragredient(rep))) / asai_cube_L(rep);
  }
  const RationalFunction w = omega_at_uniformizer(rep);
  if (basis_disc) {
    const LocalFieldElement ref = reference_discriminant(rep);
    if (is_zero(basis_disc->unit)) throw std::invalid_argument("basis discriminant must be nonzero");
    const long v = basis_disc->valuation_in(kBaseField) - ref.valuation_in(kBaseField);
    const Rational unit_ratio = unit_part(basis_disc->unit / ref.unit, rep.p);
    if (v % 2 != 0 || legendre_symbol(unit_ratio, rep.p) != 1) {
      throw std::invalid_argument("basis discriminant differs from the reference by a non-square");
    }
    // ω(det A)^2 |det A|^{4s-2} only sees ord(det A) = v / 2.
    g = transform_gamma_psr(g, BasisChange{LocalFieldElement::uniformizer_power(v / 2)}, w);
  }
  if (psi_twist.valuation != 0) g = transform_gamma_psr(g, PsiTwist{psi_twist}, w);
  return g;
}

}  // namespace asai
