#pragma once

#include <array>
#include <compare>
#include <complex>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "asai/rational.hpp"

namespace asai {

// u = q^{-1/2}, T = q^{-s}, and the Satake symbols of up to three factors.
enum class Var : std::uint8_t { u, T, a1, b1, a2, b2, a3, b3 };
inline constexpr std::size_t kVarCount = 8;
inline constexpr std::array<Var, kVarCount> kAllVars{Var::u,  Var::T,  Var::a1, Var::b1,
                                                     Var::a2, Var::b2, Var::a3, Var::b3};

std::string_view var_name(Var v);
std::optional<Var> parse_var(std::string_view name);

class Monomial {
 public:
  using Exponents = std::array<std::int32_t, kVarCount>;

  constexpr Monomial() = default;
  explicit Monomial(const Exponents& e) : exps_(e) {}
  static Monomial of(Var v, int e = 1);

  int operator[](Var v) const { return exps_[static_cast<std::size_t>(v)]; }
  const Exponents& exponents() const { return exps_; }
  int total_degree() const;
  bool is_one() const;

  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;
  Monomial& operator*=(const Monomial& o);
  Monomial pow(int e) const;
  Monomial inverse() const { return pow(-1); }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Total degree first, then lexicographic in variable order.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  Exponents exps_{};
};

std::string to_string(const Monomial& m);

using NumericPoint = std::array<std::complex<double>, kVarCount>;

template <class C>
concept Coefficient = std::regular<C> && requires(const C& a, const C& b) {
  { C(a + b) };
  { C(a - b) };
  { C(a * b) };
  { C(-a) };
  { is_zero(a) } -> std::same_as<bool>;
  { to_complex(a) } -> std::convertible_to<std::complex<double>>;
  { inverse(a) } -> std::convertible_to<C>;
};

template <Coefficient C>
class LaurentPoly {
 public:
  struct Term {
    Monomial mono;
    C coef;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly() = default;
  LaurentPoly(const C& c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Monomial& m, const C& c);
  static LaurentPoly variable(Var v);
  // Sorts, merges equal monomials, drops zeros.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  C coefficient(const Monomial& m) const;
  C constant_term() const { return coefficient(Monomial{}); }
  // Largest term in the canonical order.
  const Term& leading_term() const;
  int min_exponent(Var v) const;
  int max_exponent(Var v) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return a.times(b); }

  LaurentPoly scaled(const C& c) const;
  LaurentPoly shifted(const Monomial& m) const;
  LaurentPoly pow(unsigned e) const;
  std::complex<double> evaluate(const NumericPoint& point) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  LaurentPoly times(const LaurentPoly& o) const;
  std::vector<Term> terms_;  // strictly increasing monomials, nonzero coefficients
};

template <Coefficient C>
class LaurentRational {
 public:
  using Poly = LaurentPoly<C>;

  LaurentRational() : den_(C(1)) {}
  LaurentRational(const Poly& num);  // NOLINT(google-explicit-constructor)
  LaurentRational(const C& c);       // NOLINT(google-explicit-constructor)
  // Throws std::domain_error when den is the zero polynomial.
  LaurentRational(Poly num, Poly den);
  static LaurentRational variable(Var v) { return LaurentRational(Poly::variable(v)); }
  static LaurentRational monomial(const Monomial& m, const C& c = C(1)) {
    return LaurentRational(Poly(m, c));
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_monomial() const { return is_polynomial() && num_.is_monomial(); }
  // Valid only when is_polynomial().
  const Poly& as_polynomial() const;

  LaurentRational operator-() const;
  LaurentRational& operator+=(const LaurentRational& o);
  LaurentRational& operator-=(const LaurentRational& o);
  LaurentRational& operator*=(const LaurentRational& o);
  LaurentRational& operator/=(const LaurentRational& o);
  friend LaurentRational operator+(LaurentRational a, const LaurentRational& b) { return a += b; }
  friend LaurentRational operator-(LaurentRational a, const LaurentRational& b) { return a -= b; }
  friend LaurentRational operator*(LaurentRational a, const LaurentRational& b) { return a *= b; }
  friend LaurentRational operator/(LaurentRational a, const LaurentRational& b) { return a /= b; }

  // Throws std::domain_error for the zero function.
  LaurentRational inverse() const;
  LaurentRational pow(int e) const;
  // Throws std::domain_error when the denominator vanishes numerically.
  std::complex<double> evaluate(const NumericPoint& point) const;

  // Exact equality by cross-multiplication.
  friend bool operator==(const LaurentRational& a, const LaurentRational& b) { return a.equals(b); }

 private:
  void normalize();
  bool equals(const LaurentRational& o) const;
  Poly num_;
  Poly den_;
};

class CyclotomicNumber;

using RationalPoly = LaurentPoly<Rational>;
using RationalFunction = LaurentRational<Rational>;

// Partial assignment of variables to rational functions.
template <Coefficient C>
class Substitution {
 public:
  Substitution& bind(Var v, LaurentRational<C> value);
  const std::optional<LaurentRational<C>>& binding(Var v) const {
    return slots_[static_cast<std::size_t>(v)];
  }

 private:
  std::array<std::optional<LaurentRational<C>>, kVarCount> slots_{};
};

// Throws std::domain_error if a variable with a negative exponent is bound to 0.
template <Coefficient C>
LaurentRational<C> substitute(const LaurentRational<C>& f, const Substitution<C>& s);
template <Coefficient C>
LaurentRational<C> substitute(const LaurentPoly<C>& f, const Substitution<C>& s);

// first / (1 - ratio); throws std::domain_error if ratio == 1.
template <Coefficient C>
LaurentRational<C> geometric_sum(const LaurentRational<C>& first, const LaurentRational<C>& ratio);

template <Coefficient C>
std::complex<double> evaluate_numeric(const LaurentRational<C>& f, const NumericPoint& point) {
  return f.evaluate(point);
}

// Canonical text: terms ascending in (total degree, lex) order.
template <Coefficient C>
std::string to_string(const LaurentPoly<C>& p);
template <Coefficient C>
std::string to_string(const LaurentRational<C>& f);

// Convenience constructors over Q.
RationalFunction var(Var v);
RationalFunction mono(const Monomial& m, const Rational& c = Rational(1));
RationalFunction constant(const Rational& c);
// Shorthand for the variable T = q^{-s} and u = q^{-1/2}.
inline RationalFunction T() { return var(Var::T); }
inline RationalFunction u() { return var(Var::u); }

// s -> 1 - s, realized as T -> u^2 / T.
RationalFunction reflect_s(const RationalFunction& f);
// Replaces u^{2k} by q^{-k}; throws if some u exponent is odd.
RationalFunction specialize_q(const RationalFunction& f, long q);
RationalPoly specialize_q(const RationalPoly& p, long q);

NumericPoint numeric_point(double q, std::complex<double> s);

extern template class LaurentPoly<Rational>;
extern template class LaurentRational<Rational>;

}  // namespace asai
