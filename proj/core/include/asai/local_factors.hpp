#pragma once

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "asai/padic.hpp"
#include "asai/symbolic.hpp"
#include "asai/whittaker.hpp"

namespace asai {

enum class ShapeKind { Split, QuadUnramTimesLine, CubicUnramField, CubicTameRamified };

std::string_view shape_name(ShapeKind kind);
std::optional<ShapeKind> parse_shape(std::string_view name);

struct EtaleCubicShape {
  ShapeKind kind = ShapeKind::Split;
  std::vector<FieldTag> factors;  // Σ e·f = 3

  static EtaleCubicShape of(ShapeKind kind);
};

struct SatakePair {
  RationalFunction alpha;
  RationalFunction beta;
};

struct AsaiRepData {
  EtaleCubicShape shape;
  std::vector<SatakePair> satake;  // one pair per factor of E
  long p = 5;
};

// Satake symbols a1,b1 / a2,b2 / a3,b3 assigned to the factors in order.
AsaiRepData symbolic_rep(ShapeKind kind, long p = 5);
// Throws std::invalid_argument on malformed data (factor count, p, zero values).
void validate(const AsaiRepData& rep);

// Square class of the discriminant algebra K.
DiscriminantClass discriminant_algebra_class(const AsaiRepData& rep);
// Discriminant of the reference basis: integral basis, or the tame basis built from ϖ_E.
LocalFieldElement reference_discriminant(const AsaiRepData& rep);

// ω = ω_Π restricted to F, at ϖ_F.
RationalFunction omega_at_uniformizer(const AsaiRepData& rep);
RationalFunction omega_eval(const RationalFunction& omega_value, const LocalFieldElement& x);
// |x|^{k(s - 1/2)} = (T/u)^{k·ord(x)}.
RationalFunction abs_power_shifted(const LocalFieldElement& x, int k);

struct LocalFactorTriple {
  RationalFunction L;
  RationalFunction eps;
  RationalFunction gamma;
};

LocalFactorTriple tate_factors(const UnramChar& chi, const LocalFieldElement& psi_twist);

// L = Π (1 - coef·T^t_power)^{-1}.
struct EulerFactor {
  RationalFunction coef;
  int t_power = 1;
};

std::vector<EulerFactor> asai_cube_euler_factors(const AsaiRepData& rep);
RationalFunction asai_cube_L(const AsaiRepData& rep);
RationalFunction asai_cube_eps(const AsaiRepData& rep, const LocalFieldElement& psi_twist = {});
AsaiRepData contragredient(const AsaiRepData& rep);
LocalFactorTriple asai_cube_gamma(const AsaiRepData& rep, const LocalFieldElement& psi_twist = {});

// ω(Δ)|Δ|^{2s-1}ω_{K/F}(-1).
RationalFunction correction_factor(const AsaiRepData& rep, const LocalFieldElement& delta);

struct BasisChange {
  LocalFieldElement det;
};
struct PsiTwist {
  LocalFieldElement a;
};
using GammaTransform = std::variant<BasisChange, PsiTwist>;

RationalFunction transform_multiplier(const GammaTransform& change, const RationalFunction& omega_value);
RationalFunction transform_gamma_psr(const RationalFunction& gamma_psr, const GammaTransform& change,
                                     const RationalFunction& omega_value);

struct PoleReport {
  bool ok = true;
  Rational L_Pi{0};
  Rational rightmost{0};
  std::vector<Rational> pole_re;  // Re(s) of each Euler factor's poles
};

// weights[i] = wt(χ1), wt(χ2) of factor i; lambda[i] shifts them.
PoleReport pole_region_check(const AsaiRepData& rep, const std::vector<FactorWeights>& weights,
                             const std::vector<WhittakerLambda>& lambda);

}  // namespace asai
