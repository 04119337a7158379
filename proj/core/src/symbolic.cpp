#include "asai/symbolic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <type_traits>

#include "asai/cyclotomic.hpp"

namespace asai {

namespace {

constexpr std::array<std::string_view, kVarCount> kVarNames{"u", "T", "a1", "b1", "a2", "b2", "a3", "b3"};

}  // namespace

std::string_view var_name(Var v) { return kVarNames[static_cast<std::size_t>(v)]; }

std::optional<Var> parse_var(std::string_view name) {
  for (std::size_t i = 0; i < kVarCount; ++i) {
    if (kVarNames[i] == name) return kAllVars[i];
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::of(Var v, int e) {
  Monomial m;
  m.exps_[static_cast<std::size_t>(v)] = e;
  return m;
}

int Monomial::total_degree() const {
  int d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m = *this;
  m *= o;
  return m;
}

Monomial& Monomial::operator*=(const Monomial& o) {
  for (std::size_t i = 0; i < kVarCount; ++i) exps_[i] += o.exps_[i];
  return *this;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial m = *this;
  for (std::size_t i = 0; i < kVarCount; ++i) m.exps_[i] -= o.exps_[i];
  return m;
}

Monomial Monomial::pow(int e) const {
  Monomial m;
  for (std::size_t i = 0; i < kVarCount; ++i) m.exps_[i] = exps_[i] * e;
  return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
  return a.exps_ <=> b.exps_;
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (auto v : kAllVars) {
    int e = m[v];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += var_name(v);
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

namespace {

std::complex<double> evaluate_monomial(const Monomial& m, const NumericPoint& point) {
  std::complex<double> out(1.0, 0.0);
  for (std::size_t i = 0; i < kVarCount; ++i) {
    int e = m.exponents()[i];
    if (e == 0) continue;
    std::complex<double> z = point[i];
    if (e < 0) {
      z = 1.0 / z;
      e = -e;
    }
    std::complex<double> acc(1.0, 0.0);
    while (e > 0) {
      if (e & 1) acc *= z;
      z *= z;
      e >>= 1;
    }
    out *= acc;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// LaurentPoly

template <Coefficient C>
LaurentPoly<C>::LaurentPoly(const C& c) {
  if (!asai::is_zero(c)) terms_.push_back({Monomial{}, c});
}

template <Coefficient C>
LaurentPoly<C>::LaurentPoly(const Monomial& m, const C& c) {
  if (!asai::is_zero(c)) terms_.push_back({m, c});
}

template <Coefficient C>
LaurentPoly<C> LaurentPoly<C>::variable(Var v) {
  return LaurentPoly(Monomial::of(v), C(1));
}

template <Coefficient C>
LaurentPoly<C> LaurentPoly<C>::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
  LaurentPoly out;
  out.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
      out.terms_.back().coef = C(out.terms_.back().coef + t.coef);
    } else {
      if (!out.terms_.empty() && asai::is_zero(out.terms_.back().coef)) out.terms_.pop_back();
      out.terms_.push_back(std::move(t));
    }
  }
  if (!out.terms_.empty() && asai::is_zero(out.terms_.back().coef)) out.terms_.pop_back();
  return out;
}

template <Coefficient C>
bool LaurentPoly<C>::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

template <Coefficient C>
C LaurentPoly<C>::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.mono < key; });
  if (it != terms_.end() && it->mono == m) return it->coef;
  return C(0);
}

template <Coefficient C>
const typename LaurentPoly<C>::Term& LaurentPoly<C>::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  return terms_.back();
}

template <Coefficient C>
int LaurentPoly<C>::min_exponent(Var v) const {
  if (terms_.empty()) return 0;
  int out = std::numeric_limits<int>::max();
  for (const auto& t : terms_) out = std::min(out, t.mono[v]);
  return out;
}

template <Coefficient C>
int LaurentPoly<C>::max_exponent(Var v) const {
  if (terms_.empty()) return 0;
  int out = std::numeric_limits<int>::min();
  for (const auto& t : terms_) out = std::max(out, t.mono[v]);
  return out;
}

template <Coefficient C>
LaurentPoly<C> LaurentPoly<C>::operator-() const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.coef = C(-t.coef);
  return out;
}

template <Coefficient C>
LaurentPoly<C>& LaurentPoly<C>::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() && j != o.terms_.end()) {
    if (i->mono < j->mono) {
      merged.push_back(std::move(*i++));
    } else if (j->mono < i->mono) {
      merged.push_back(*j++);
    } else {
      C c = C(i->coef + j->coef);
      if (!asai::is_zero(c)) merged.push_back({i->mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i != terms_.end(); ++i) merged.push_back(std::move(*i));
  for (; j != o.terms_.end(); ++j) merged.push_back(*j);
  terms_ = std::move(merged);
  return *this;
}

template <Coefficient C>
LaurentPoly<C>& LaurentPoly<C>::operator-=(const LaurentPoly& o) {
  return *this += -o;
}

template <Coefficient C>
LaurentPoly<C>& LaurentPoly<C>::operator*=(const LaurentPoly& o) {
  return *this = times(o);
}

template <Coefficient C>
LaurentPoly<C> LaurentPoly<C>::times(const LaurentPoly& o) const {
  if (terms_.empty() || o.terms_.empty()) return {};
  if (o.terms_.size() == 1) return shifted(o.terms_[0].mono).scaled(o.terms_[0].coef);
  if (terms_.size() == 1) return o.shifted(terms_[0].mono).scaled(terms_[0].coef);
  std::vector<Term> prods;
  prods.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) prods.push_back({a.mono * b.mono, C(a.coef * b.coef)});
  }
  return from_terms(std::move(prods));
}

template <Coefficient C>
LaurentPoly<C> LaurentPoly<C>::scaled(const C& c) const {
  if (asai::is_zero(c)) return {};
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.coef = C(t.coef * c);
  // Coefficient rings with zero divisors are not supported, so no term vanishes.
  return out;
}

template <Coefficient C>
LaurentPoly<C> LaurentPoly<C>::shifted(const Monomial& m) const {
  LaurentPoly out = *this;
  if (m.is_one()) return out;
  // The term order is translation invariant, so no re-sort is needed.
  for (auto& t : out.terms_) t.mono *= m;
  return out;
}

template <Coefficient C>
LaurentPoly<C> LaurentPoly<C>::pow(unsigned e) const {
  LaurentPoly acc(C(1));
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1U) acc *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return acc;
}

template <Coefficient C>
std::complex<double> LaurentPoly<C>::evaluate(const NumericPoint& point) const {
  std::complex<double> out(0.0, 0.0);
  for (const auto& t : terms_) out += to_complex(t.coef) * evaluate_monomial(t.mono, point);
  return out;
}

// ---------------------------------------------------------------------------
// LaurentRational

template <Coefficient C>
LaurentRational<C>::LaurentRational(const Poly& num) : num_(num), den_(C(1)) {}

template <Coefficient C>
LaurentRational<C>::LaurentRational(const C& c) : num_(c), den_(C(1)) {}

template <Coefficient C>
LaurentRational<C>::LaurentRational(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

template <Coefficient C>
void LaurentRational<C>::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(C(1));
    return;
  }
  if (den_.is_monomial()) {
    const auto& t = den_.terms()[0];
    num_ = num_.shifted(t.mono.inverse()).scaled(asai::inverse(t.coef));
    den_ = Poly(C(1));
    return;
  }
  // Move the monomial content of the denominator into the numerator.
  Monomial::Exponents content{};
  bool has_content = false;
  for (std::size_t i = 0; i < kVarCount; ++i) {
    content[i] = den_.min_exponent(kAllVars[i]);
    has_content = has_content || content[i] != 0;
  }
  if (has_content) {
    Monomial m(content);
    den_ = den_.shifted(m.inverse());
    num_ = num_.shifted(m.inverse());
  }
  const C& lead = den_.leading_term().coef;
  if (!(lead == C(1))) {
    C inv = asai::inverse(lead);
    den_ = den_.scaled(inv);
    num_ = num_.scaled(inv);
  }
  if (num_ == den_) {
    num_ = Poly(C(1));
    den_ = Poly(C(1));
  }
}

template <Coefficient C>
const typename LaurentRational<C>::Poly& LaurentRational<C>::as_polynomial() const {
  if (!is_polynomial()) throw std::domain_error("rational function is not a Laurent polynomial");
  return num_;
}

template <Coefficient C>
LaurentRational<C> LaurentRational<C>::operator-() const {
  LaurentRational out = *this;
  out.num_ = -out.num_;
  return out;
}

template <Coefficient C>
LaurentRational<C>& LaurentRational<C>::operator+=(const LaurentRational& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (num_.is_zero()) den_ = Poly(C(1));
    return *this;
  }
  if (o.is_polynomial()) {
    num_ += o.num_ * den_;
  } else if (is_polynomial()) {
    num_ = num_ * o.den_ + o.num_;
    den_ = o.den_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

template <Coefficient C>
LaurentRational<C>& LaurentRational<C>::operator-=(const LaurentRational& o) {
  return *this += -o;
}

template <Coefficient C>
LaurentRational<C>& LaurentRational<C>::operator*=(const LaurentRational& o) {
  if (is_zero() || o.is_zero()) return *this = LaurentRational();
  Poly n1 = num_, d1 = den_;
  Poly n2 = o.num_, d2 = o.den_;
  // Cheap cancellations of identical factors across the product.
  if (n1 == d2) {
    n1 = Poly(C(1));
    d2 = Poly(C(1));
  }
  if (n2 == d1) {
    n2 = Poly(C(1));
    d1 = Poly(C(1));
  }
  num_ = n1 * n2;
  den_ = d1 * d2;
  normalize();
  return *this;
}

template <Coefficient C>
LaurentRational<C>& LaurentRational<C>::operator/=(const LaurentRational& o) {
  return *this *= o.inverse();
}

template <Coefficient C>
LaurentRational<C> LaurentRational<C>::inverse() const {
  if (is_zero()) throw std::domain_error("division by the zero function");
  return LaurentRational(den_, num_);
}

template <Coefficient C>
LaurentRational<C> LaurentRational<C>::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  LaurentRational out;
  out.num_ = num_.pow(static_cast<unsigned>(e));
  out.den_ = den_.pow(static_cast<unsigned>(e));
  out.normalize();
  return out;
}

template <Coefficient C>
std::complex<double> LaurentRational<C>::evaluate(const NumericPoint& point) const {
  std::complex<double> d(0.0, 0.0);
  double scale = 0.0;
  for (const auto& t : den_.terms()) {
    auto v = to_complex(t.coef) * evaluate_monomial(t.mono, point);
    d += v;
    scale += std::abs(v);
  }
  if (!(std::abs(d) > 8.0 * std::numeric_limits<double>::epsilon() * scale)) {
    throw std::domain_error("denominator vanishes at the evaluation point");
  }
  return num_.evaluate(point) / d;
}

template <Coefficient C>
bool LaurentRational<C>::equals(const LaurentRational& o) const {
  if (den_ == o.den_) return num_ == o.num_;
  if (num_.is_zero() || o.num_.is_zero()) return num_.is_zero() && o.num_.is_zero();
  return num_ * o.den_ == o.num_ * den_;
}

// ---------------------------------------------------------------------------
// Substitution, geometric sums, text form

template <Coefficient C>
Substitution<C>& Substitution<C>::bind(Var v, LaurentRational<C> value) {
  slots_[static_cast<std::size_t>(v)] = std::move(value);
  return *this;
}

namespace {

template <Coefficient C>
bool all_monomial_bindings(const Substitution<C>& s) {
  for (auto v : kAllVars) {
    const auto& b = s.binding(v);
    if (b && !b->is_monomial()) return false;
  }
  return true;
}

// Fast path: every binding is c·m, so each term maps to a single term.
template <Coefficient C>
LaurentPoly<C> substitute_monomially(const LaurentPoly<C>& p, const Substitution<C>& s) {
  std::vector<typename LaurentPoly<C>::Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m;
    C coef = t.coef;
    for (auto v : kAllVars) {
      int e = t.mono[v];
      if (e == 0) continue;
      const auto& b = s.binding(v);
      if (!b) {
        m *= Monomial::of(v, e);
        continue;
      }
      const auto& bt = b->num().terms()[0];
      m *= bt.mono.pow(e);
      C c = e > 0 ? bt.coef : asai::inverse(bt.coef);
      for (int k = 0; k < std::abs(e); ++k) coef = C(coef * c);
    }
    out.push_back({m, std::move(coef)});
  }
  return LaurentPoly<C>::from_terms(std::move(out));
}

template <Coefficient C>
LaurentRational<C> substitute_general(const LaurentPoly<C>& p, const Substitution<C>& s) {
  LaurentRational<C> out;
  for (const auto& t : p.terms()) {
    LaurentRational<C> term(LaurentPoly<C>(t.coef));
    Monomial rest;
    for (auto v : kAllVars) {
      int e = t.mono[v];
      if (e == 0) continue;
      const auto& b = s.binding(v);
      if (!b) {
        rest *= Monomial::of(v, e);
        continue;
      }
      if (e < 0 && b->is_zero()) {
        throw std::domain_error("variable with negative exponent bound to zero");
      }
      term *= b->pow(e);
    }
    term *= LaurentRational<C>::monomial(rest);
    out += term;
  }
  return out;
}

}  // namespace

template <Coefficient C>
LaurentRational<C> substitute(const LaurentPoly<C>& f, const Substitution<C>& s) {
  for (auto v : kAllVars) {
    const auto& b = s.binding(v);
    if (b && b->is_zero() && f.min_exponent(v) < 0) {
      throw std::domain_error("variable with negative exponent bound to zero");
    }
  }
  bool zero_binding = false;
  for (auto v : kAllVars) zero_binding = zero_binding || (s.binding(v) && s.binding(v)->is_zero());
  if (!zero_binding && all_monomial_bindings(s)) return LaurentRational<C>(substitute_monomially(f, s));
  return substitute_general(f, s);
}

template <Coefficient C>
LaurentRational<C> substitute(const LaurentRational<C>& f, const Substitution<C>& s) {
  auto n = substitute(f.num(), s);
  auto d = substitute(f.den(), s);
  if (d.is_zero()) throw std::domain_error("substitution makes the denominator vanish");
  return n / d;
}

template <Coefficient C>
LaurentRational<C> geometric_sum(const LaurentRational<C>& first, const LaurentRational<C>& ratio) {
  LaurentRational<C> one(C(1));
  if (ratio == one) throw std::domain_error("geometric series with ratio identically 1 diverges");
  return first / (one - ratio);
}

namespace {

template <Coefficient C>
void append_term(std::string& out, const typename LaurentPoly<C>::Term& t, bool first) {
  std::string mono = t.mono.is_one() ? std::string() : to_string(t.mono);
  if constexpr (std::is_same_v<C, Rational>) {
    bool negative = sgn(t.coef) < 0;
    Rational mag = abs(t.coef);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + '*';
      out += mono;
    }
  } else {
    if (!first) out += " + ";
    out += '(' + to_string(t.coef) + ')';
    if (!mono.empty()) out += '*' + mono;
  }
}

}  // namespace

template <Coefficient C>
std::string to_string(const LaurentPoly<C>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    append_term<C>(out, t, first);
    first = false;
  }
  return out;
}

template <Coefficient C>
std::string to_string(const LaurentRational<C>& f) {
  if (f.is_polynomial()) return to_string(f.num());
  return '(' + to_string(f.num()) + ")/(" + to_string(f.den()) + ')';
}

// ---------------------------------------------------------------------------
// Q-specific helpers

RationalFunction var(Var v) { return RationalFunction::variable(v); }
RationalFunction mono(const Monomial& m, const Rational& c) { return RationalFunction::monomial(m, c); }
RationalFunction constant(const Rational& c) { return RationalFunction(c); }

RationalFunction reflect_s(const RationalFunction& f) {
  Substitution<Rational> s;
  s.bind(Var::T, mono(Monomial::of(Var::u, 2) * Monomial::of(Var::T, -1)));
  return substitute(f, s);
}

RationalPoly specialize_q(const RationalPoly& p, long q) {
  std::vector<RationalPoly::Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    int e = t.mono[Var::u];
    if (e % 2 != 0) throw std::domain_error("odd power of u cannot be specialized to a rational q");
    auto ex = t.mono.exponents();
    ex[static_cast<std::size_t>(Var::u)] = 0;
    out.push_back({Monomial(ex), Rational(t.coef * power(Rational(q), -e / 2))});
  }
  return RationalPoly::from_terms(std::move(out));
}

RationalFunction specialize_q(const RationalFunction& f, long q) {
  return RationalFunction(specialize_q(f.num(), q), specialize_q(f.den(), q));
}

NumericPoint numeric_point(double q, std::complex<double> s) {
  NumericPoint p;
  p.fill({1.0, 0.0});
  p[static_cast<std::size_t>(Var::u)] = {1.0 / std::sqrt(q), 0.0};
  p[static_cast<std::size_t>(Var::T)] = std::exp(-s * std::log(q));
  return p;
}

// ---------------------------------------------------------------------------
// Explicit instantiations

#define ASAI_INSTANTIATE_SYMBOLIC(C)                                                         \
  template class LaurentPoly<C>;                                                             \
  template class LaurentRational<C>;                                                         \
  template class Substitution<C>;                                                            \
  template LaurentRational<C> substitute(const LaurentRational<C>&, const Substitution<C>&); \
  template LaurentRational<C> substitute(const LaurentPoly<C>&, const Substitution<C>&);     \
  template LaurentRational<C> geometric_sum(const LaurentRational<C>&, const LaurentRational<C>&); \
  template std::string to_string(const LaurentPoly<C>&);                                     \
  template std::string to_string(const LaurentRational<C>&);

ASAI_INSTANTIATE_SYMBOLIC(Rational)
ASAI_INSTANTIATE_SYMBOLIC(CyclotomicNumber)

#undef ASAI_INSTANTIATE_SYMBOLIC

}  // namespace asai
