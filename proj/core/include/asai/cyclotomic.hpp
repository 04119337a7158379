#pragma once

#include <complex>
#include <string>
#include <vector>

#include "asai/rational.hpp"
#include "asai/symbolic.hpp"

namespace asai {

// Element of Q(ζ_N), N = p^k, in the power basis 1, ζ, ..., ζ^{φ(N)-1}.
// Values are kept at the smallest level that contains them.
class CyclotomicNumber {
 public:
  CyclotomicNumber() : coeffs_{Rational(0)} {}
  CyclotomicNumber(const Rational& r) : coeffs_{r} {}  // NOLINT(google-explicit-constructor)
  CyclotomicNumber(long v) : coeffs_{Rational(v)} {}   // NOLINT(google-explicit-constructor)
  // Coefficients may have any length; they are reduced modulo x^N - 1 and Φ_N.
  CyclotomicNumber(long level, std::vector<Rational> coeffs);

  // ζ_{p^k}^e.
  static CyclotomicNumber root_of_unity(long level, long e);

  long level() const { return level_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_rational() const { return level_ == 1; }
  // Re-expressed at a multiple level (same prime); the value is unchanged.
  std::vector<Rational> coeffs_at_level(long level) const;

  CyclotomicNumber operator-() const;
  CyclotomicNumber& operator+=(const CyclotomicNumber& o);
  CyclotomicNumber& operator-=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const CyclotomicNumber& o);
  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }

  friend bool operator==(const CyclotomicNumber&, const CyclotomicNumber&) = default;

  // Sum of |coefficients|, an upper bound for every complex embedding.
  Rational abs_bound() const;

 private:
  void reduce_in_place(std::vector<Rational> raw);
  void lower_level();
  long level_ = 1;
  std::vector<Rational> coeffs_;
};

bool is_zero(const CyclotomicNumber& c);
std::complex<double> to_complex(const CyclotomicNumber& c);
CyclotomicNumber inverse(const CyclotomicNumber& c);
std::string to_string(const CyclotomicNumber& c);

using CycloPoly = LaurentPoly<CyclotomicNumber>;
using CycloFunction = LaurentRational<CyclotomicNumber>;

extern template class LaurentPoly<CyclotomicNumber>;
extern template class LaurentRational<CyclotomicNumber>;

}  // namespace asai
