#include "asai/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace asai {

namespace {

long totient_of_prime_power(long level) {
  if (level == 1) return 1;
  auto [p, k] = prime_power_decompose(level);
  return ipow(p, k - 1) * (p - 1);
}

long common_level(long a, long b) {
  if (a == 1) return b;
  if (b == 1) return a;
  auto [pa, ka] = prime_power_decompose(a);
  auto [pb, kb] = prime_power_decompose(b);
  if (pa != pb) throw std::invalid_argument("cyclotomic levels of different primes are not supported");
  return ka >= kb ? a : b;
}

}  // namespace

CyclotomicNumber::CyclotomicNumber(long level, std::vector<Rational> coeffs) : level_(level) {
  if (level < 1) throw std::invalid_argument("cyclotomic level must be positive");
  if (level > 1) prime_power_decompose(level);
  reduce_in_place(std::move(coeffs));
}

CyclotomicNumber CyclotomicNumber::root_of_unity(long level, long e) {
  long r = ((e % level) + level) % level;
  std::vector<Rational> c(static_cast<std::size_t>(r + 1), Rational(0));
  c[static_cast<std::size_t>(r)] = 1;
  return CyclotomicNumber(level, std::move(c));
}

void CyclotomicNumber::reduce_in_place(std::vector<Rational> raw) {
  if (level_ == 1) {
    Rational sum(0);
    for (auto& c : raw) sum += c;
    coeffs_ = {sum};
    return;
  }
  auto [p, k] = prime_power_decompose(level_);
  const long n = level_;
  const long phi = totient_of_prime_power(n);
  const long step = ipow(p, k - 1);
  std::vector<Rational> wrapped(static_cast<std::size_t>(n), Rational(0));
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (sgn(raw[i]) != 0) wrapped[i % static_cast<std::size_t>(n)] += raw[i];
  }
  // ζ^φ = -Σ_{j<p-1} ζ^{j·p^{k-1}}, applied from the top down.
  for (long e = n - 1; e >= phi; --e) {
    Rational c = wrapped[static_cast<std::size_t>(e)];
    if (sgn(c) == 0) continue;
    wrapped[static_cast<std::size_t>(e)] = 0;
    for (long j = 0; j <= p - 2; ++j) wrapped[static_cast<std::size_t>(e - phi + j * step)] -= c;
  }
  wrapped.resize(static_cast<std::size_t>(phi));
  coeffs_ = std::move(wrapped);
  lower_level();
}

void CyclotomicNumber::lower_level() {
  while (level_ > 1) {
    auto [p, k] = prime_power_decompose(level_);
    if (k == 1) {
      bool rational = true;
      for (std::size_t i = 1; i < coeffs_.size(); ++i) rational = rational && sgn(coeffs_[i]) == 0;
      if (!rational) return;
      coeffs_.resize(1);
      level_ = 1;
      return;
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (sgn(coeffs_[i]) != 0 && i % static_cast<std::size_t>(p) != 0) return;
    }
    std::vector<Rational> lowered(coeffs_.size() / static_cast<std::size_t>(p));
    for (std::size_t i = 0; i < lowered.size(); ++i) lowered[i] = coeffs_[i * static_cast<std::size_t>(p)];
    coeffs_ = std::move(lowered);
    level_ /= p;
  }
}

std::vector<Rational> CyclotomicNumber::coeffs_at_level(long level) const {
  if (level == level_) return coeffs_;
  long target = common_level(level_, level);
  if (target != level) throw std::invalid_argument("cannot lower the level of a cyclotomic number");
  std::vector<Rational> out(static_cast<std::size_t>(totient_of_prime_power(level)), Rational(0));
  long stride = level / level_;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * static_cast<std::size_t>(stride)] = coeffs_[i];
  return out;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
  long l = common_level(level_, o.level_);
  auto a = coeffs_at_level(l);
  auto b = o.coeffs_at_level(l);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  level_ = l;
  coeffs_ = std::move(a);
  lower_level();
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) { return *this += -o; }

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
  long l = common_level(level_, o.level_);
  auto a = coeffs_at_level(l);
  auto b = o.coeffs_at_level(l);
  if (l == 1) {
    coeffs_ = {a[0] * b[0]};
    level_ = 1;
    return *this;
  }
  std::vector<Rational> raw(a.size() + b.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) == 0) continue;
      raw[i + j] += a[i] * b[j];
    }
  }
  level_ = l;
  reduce_in_place(std::move(raw));
  return *this;
}

Rational CyclotomicNumber::abs_bound() const {
  Rational out(0);
  for (const auto& c : coeffs_) out += abs(c);
  return out;
}

bool is_zero(const CyclotomicNumber& c) { return c.level() == 1 && sgn(c.coeffs()[0]) == 0; }

std::complex<double> to_complex(const CyclotomicNumber& c) {
  std::complex<double> out(0.0, 0.0);
  const double base = 2.0 * std::numbers::pi / static_cast<double>(c.level());
  for (std::size_t j = 0; j < c.coeffs().size(); ++j) {
    if (sgn(c.coeffs()[j]) == 0) continue;
    out += c.coeffs()[j].get_d() * std::polar(1.0, base * static_cast<double>(j));
  }
  return out;
}

CyclotomicNumber inverse(const CyclotomicNumber& c) {
  if (is_zero(c)) throw std::domain_error("inverse of zero cyclotomic number");
  if (c.is_rational()) return CyclotomicNumber(inverse(c.coeffs()[0]));
  const long n = c.level();
  const std::size_t phi = c.coeffs().size();
  // Column j of the multiplication matrix is c·ζ^j; solve M x = e_0.
  std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(phi + 1, Rational(0)));
  for (std::size_t j = 0; j < phi; ++j) {
    auto col = (c * CyclotomicNumber::root_of_unity(n, static_cast<long>(j))).coeffs_at_level(n);
    for (std::size_t i = 0; i < phi; ++i) m[i][j] = col[i];
  }
  m[0][phi] = 1;
  for (std::size_t col = 0; col < phi; ++col) {
    std::size_t pivot = col;
    while (pivot < phi && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == phi) throw std::domain_error("singular cyclotomic multiplication matrix");
    std::swap(m[pivot], m[col]);
    Rational inv = 1 / m[col][col];
    for (std::size_t k = col; k <= phi; ++k) m[col][k] *= inv;
    for (std::size_t r = 0; r < phi; ++r) {
      if (r == col || sgn(m[r][col]) == 0) continue;
      Rational f = m[r][col];
      for (std::size_t k = col; k <= phi; ++k) m[r][k] -= f * m[col][k];
    }
  }
  std::vector<Rational> x(phi);
  for (std::size_t i = 0; i < phi; ++i) x[i] = m[i][phi];
  return CyclotomicNumber(n, std::move(x));
}

std::string to_string(const CyclotomicNumber& c) {
  if (c.is_rational()) return to_string(c.coeffs()[0]);
  std::string out;
  const std::string z = "z" + std::to_string(c.level());
  for (std::size_t j = 0; j < c.coeffs().size(); ++j) {
    const Rational& r = c.coeffs()[j];
    if (sgn(r) == 0) continue;
    bool negative = sgn(r) < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    Rational mag = abs(r);
    if (j == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + '*';
    out += z;
    if (j != 1) out += '^' + std::to_string(j);
  }
  return out;
}

}  // namespace asai
