#pragma once

#include <optional>
#include <vector>

#include "asai/local_factors.hpp"

namespace asai {

struct TameZetaContext {
  RationalFunction alpha = var(Var::a1);
  RationalFunction beta = var(Var::b1);

  // ω(ϖ) = (αβ)^3.
  RationalFunction omega() const { return (alpha * beta).pow(3); }
  // q^{-s'} for s' = 3s_0 + 2s + 1, with q^{-s_0} = αβ.
  RationalFunction x_exponent() const;
  TameZetaContext contragredient() const { return {alpha.inverse(), beta.inverse()}; }
};

// ∫_F max{|x|, q^{-m}}^{-s'} ψ(ϖ^n x) dx with X = q^{-s'}.
RationalFunction pr_integral(long m, long n, const RationalFunction& X);

struct SectionValue {
  RationalFunction prefactor;
  RationalFunction x_exponent;  // X with f = prefactor · max{|x|, q^{-2n}}^{-s'}
};

// branch 0: η n(x/3) m(ϖ^n ϖ_E^i); branch 1: the same after a(ϖ). Throws for n < 0 or i ∉ {0,1,2}.
SectionValue section_value(long n, int i, const TameZetaContext& ctx, int branch = 0);
// W°(m(ϖ^n ϖ_E^i)), or W°(a(ϖ) m(ϖ^n ϖ_E^i)) for branch 1; zero for negative valuation.
RationalFunction whittaker_value_tame(long n, int i, const TameZetaContext& ctx, int branch = 0);

// One (n, i) summand of Z^{(branch)}, including |t|_E^{-2}.
RationalFunction zeta_term(long n, int i, const TameZetaContext& ctx, int branch);

// n ↦ coef · ratio^n.
struct GeometricTerm {
  RationalFunction coef;
  RationalFunction ratio;
};
using GeometricSeries = std::vector<GeometricTerm>;

GeometricSeries series_product(const GeometricSeries& a, const GeometricSeries& b);
RationalFunction series_at(const GeometricSeries& s, long n);
// Σ_{n≥0}, merging equal ratios first.
RationalFunction series_sum(const GeometricSeries& s);

// Σ_i zeta_term(n, i, ctx, branch) as a geometric series in n; requires α ≠ β.
GeometricSeries zeta_series(const TameZetaContext& ctx, int branch);

struct ZetaDecomposition {
  RationalFunction Z0;
  RationalFunction Z1;
  RationalFunction total;  // Z0 + q^2 Z1
};

ZetaDecomposition zeta_tame(const TameZetaContext& ctx);
// L(2s+1,ω)^{-1} L(4s,ω^2)^{-1} L(s, As Π).
RationalFunction zeta_tame_closed_form(const TameZetaContext& ctx);

RationalFunction abelian_L(const RationalFunction& value, int t_power, int u_power = 0);
RationalFunction gk_normalization(const RationalFunction& omega_value);
RationalFunction dual_zeta_tame(const TameZetaContext& ctx);

// γ_PSR for the reference basis and ψ of conductor o_F, then moved to the basis with discriminant `basis_disc`
// and to ψ^a. Throws std::invalid_argument if basis_disc is not in the reference square class.
RationalFunction gamma_psr(const AsaiRepData& rep, const std::optional<LocalFieldElement>& basis_disc = std::nullopt,
                           const LocalFieldElement& psi_twist = {});

}  // namespace asai
