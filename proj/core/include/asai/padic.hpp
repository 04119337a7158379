#pragma once

#include <string>
#include <string_view>

#include "asai/cyclotomic.hpp"
#include "asai/rational.hpp"
#include "asai/symbolic.hpp"

namespace asai {

// Ramification index and residue degree of a finite extension of F.
struct FieldTag {
  int e = 1;
  int f = 1;
  friend bool operator==(const FieldTag&, const FieldTag&) = default;
};

inline constexpr FieldTag kBaseField{1, 1};

// ϖ^valuation · unit, with ϖ the uniformizer of `field`.
struct LocalFieldElement {
  long valuation = 0;
  Rational unit{1};
  FieldTag field = kBaseField;

  static LocalFieldElement from_rational(const Rational& x, long p);
  static LocalFieldElement uniformizer_power(long v, FieldTag field = kBaseField) { return {v, Rational(1), field}; }
  // Parses "v:unit", e.g. "-2:1/27", or a bare rational interpreted over Q_p.
  static LocalFieldElement parse(std::string_view text, long p);

  // Valuation measured in the normalized valuation of `target` (F embeds in every factor).
  long valuation_in(FieldTag target) const;
  // Only for base-field elements: ϖ = p.
  Rational to_rational(long p) const;

  friend LocalFieldElement operator*(const LocalFieldElement& a, const LocalFieldElement& b);
  friend bool operator==(const LocalFieldElement&, const LocalFieldElement&) = default;
};

std::string to_string(const LocalFieldElement& x);

// Standard character of conductor Z_p: ψ(x) = exp(2πi {x}_p).
CyclotomicNumber psi_eval(const Rational& x, long p);
CyclotomicNumber psi_eval(const LocalFieldElement& x, long p);

// Unramified character of a field, recorded by its value at the uniformizer.
struct UnramChar {
  FieldTag field = kBaseField;
  RationalFunction value{Rational(1)};
};

// value^{ord(x)}; units contribute 1. Throws std::domain_error for x = 0.
RationalFunction unram_char_eval(const UnramChar& chi, const LocalFieldElement& x);

int legendre_symbol(const Rational& unit, long p);
// Quadratic Hilbert symbol over Q_p for odd p; throws for p = 2.
int hilbert_symbol(const LocalFieldElement& a, const LocalFieldElement& b, long p);
int hilbert_symbol(const Rational& a, const Rational& b, long p);

// Square class in Q_p^× / (Q_p^×)^2 for odd p.
struct DiscriminantClass {
  int valuation_parity = 0;  // 0 or 1
  int unit_class = 1;        // +1 square unit, -1 non-square unit

  static DiscriminantClass of(const LocalFieldElement& d, long p);
  static DiscriminantClass of(const Rational& d, long p);
  bool is_trivial() const { return valuation_parity == 0 && unit_class == 1; }
  Rational representative(long p) const;
  friend bool operator==(const DiscriminantClass&, const DiscriminantClass&) = default;
};

long smallest_nonresidue(long p);

// ω_{K/F}(x) = (d, x)_p.
int quad_char_eval(const DiscriminantClass& d, const LocalFieldElement& x, long p);

}  // namespace asai
