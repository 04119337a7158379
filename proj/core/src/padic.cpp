#include "asai/padic.hpp"

#include <stdexcept>

namespace asai {

LocalFieldElement LocalFieldElement::from_rational(const Rational& x, long p) {
  if (is_zero(x)) throw std::domain_error("zero is not a local field unit multiple");
  return {asai::valuation(x, p), unit_part(x, p), kBaseField};
}

LocalFieldElement LocalFieldElement::parse(std::string_view text, long p) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) return from_rational(parse_rational(text), p);
  std::string v(text.substr(0, colon));
  Rational unit = parse_rational(text.substr(colon + 1));
  Rational vr = parse_rational(v);
  if (vr.get_den() != 1) throw std::invalid_argument("valuation must be an integer: '" + v + "'");
  if (!is_p_unit(unit, p)) throw std::invalid_argument("unit part is not a p-adic unit: " + to_string(unit));
  return {vr.get_num().get_si(), unit, kBaseField};
}

long LocalFieldElement::valuation_in(FieldTag target) const {
  if (field == target) return valuation;
  if (field == kBaseField) return valuation * target.e;
  throw std::invalid_argument("element does not lie in the base field of the target");
}

Rational LocalFieldElement::to_rational(long p) const {
  if (!(field == kBaseField)) throw std::invalid_argument("only base-field elements are rational");
  return unit * power(Rational(p), valuation);
}

LocalFieldElement operator*(const LocalFieldElement& a, const LocalFieldElement& b) {
  if (!(a.field == b.field)) throw std::invalid_argument("product of elements from different fields");
  return {a.valuation + b.valuation, Rational(a.unit * b.unit), a.field};
}

std::string to_string(const LocalFieldElement& x) {
  return std::to_string(x.valuation) + ':' + to_string(x.unit);
}

CyclotomicNumber psi_eval(const Rational& x, long p) {
  if (is_zero(x)) return CyclotomicNumber(1);
  long v = valuation(x, p);
  if (v >= 0) return CyclotomicNumber(1);
  long level = ipow(p, static_cast<int>(-v));
  // x = N / (p^k D') with gcd(D', p) = 1; {x}_p = (N · D'^{-1} mod p^k) / p^k.
  Rational scaled = x * Rational(level);
  return CyclotomicNumber::root_of_unity(level, residue_mod(scaled, level));
}

CyclotomicNumber psi_eval(const LocalFieldElement& x, long p) { return psi_eval(x.to_rational(p), p); }

RationalFunction unram_char_eval(const UnramChar& chi, const LocalFieldElement& x) {
  if (is_zero(x.unit)) throw std::domain_error("character evaluated at zero");
  long v = x.valuation_in(chi.field);
  return chi.value.pow(static_cast<int>(v));
}

int legendre_symbol(const Rational& unit, long p) {
  Integer pz(p);
  int a = mpz_legendre(unit.get_num_mpz_t(), pz.get_mpz_t());
  int b = mpz_legendre(unit.get_den_mpz_t(), pz.get_mpz_t());
  if (a == 0 || b == 0) throw std::domain_error("Legendre symbol of a non-unit");
  return a * b;
}

int hilbert_symbol(const LocalFieldElement& a, const LocalFieldElement& b, long p) {
  if (p == 2) throw std::invalid_argument("Hilbert symbol at p = 2 is not supported");
  if (!is_prime(p)) throw std::invalid_argument("Hilbert symbol needs a prime");
  if (!(a.field == kBaseField) || !(b.field == kBaseField)) {
    throw std::invalid_argument("Hilbert symbol is defined here for base-field elements only");
  }
  if (is_zero(a.unit) || is_zero(b.unit)) throw std::domain_error("Hilbert symbol of zero");
  long alpha = a.valuation;
  long beta = b.valuation;
  int sign = 1;
  if ((alpha * beta) % 2 != 0 && ((p - 1) / 2) % 2 != 0) sign = -1;
  if (beta % 2 != 0) sign *= legendre_symbol(a.unit, p);
  if (alpha % 2 != 0) sign *= legendre_symbol(b.unit, p);
  return sign;
}

int hilbert_symbol(const Rational& a, const Rational& b, long p) {
  return hilbert_symbol(LocalFieldElement::from_rational(a, p), LocalFieldElement::from_rational(b, p), p);
}

DiscriminantClass DiscriminantClass::of(const LocalFieldElement& d, long p) {
  if (p == 2) throw std::invalid_argument("square classes at p = 2 are not supported");
  if (is_zero(d.unit)) throw std::domain_error("discriminant is zero");
  return {static_cast<int>(((d.valuation % 2) + 2) % 2), legendre_symbol(d.unit, p)};
}

DiscriminantClass DiscriminantClass::of(const Rational& d, long p) {
  return of(LocalFieldElement::from_rational(d, p), p);
}

Rational DiscriminantClass::representative(long p) const {
  Rational unit = unit_class == 1 ? Rational(1) : Rational(smallest_nonresidue(p));
  return valuation_parity == 0 ? unit : unit * Rational(p);
}

long smallest_nonresidue(long p) {
  for (long n = 2; n < p; ++n) {
    if (legendre_symbol(Rational(n), p) == -1) return n;
  }
  throw std::invalid_argument("no quadratic non-residue modulo " + std::to_string(p));
}

int quad_char_eval(const DiscriminantClass& d, const LocalFieldElement& x, long p) {
  if (d.is_trivial()) return 1;
  return hilbert_symbol(LocalFieldElement::from_rational(d.representative(p), p), x, p);
}

}  // namespace asai
