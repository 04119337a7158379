#include "asai/rational.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace asai {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid = [](const std::string& part) {
    if (part.empty()) return false;
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    }
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num) || !valid(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("malformed rational: '" + s + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  Rational r;
  r.get_num() = Integer(num);
  r.get_den() = Integer(den);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational inverse(const Rational& r) {
  if (is_zero(r)) throw std::domain_error("inverse of zero rational");
  return Rational(1) / r;
}

Rational power(const Rational& r, long e) {
  if (e < 0) return power(inverse(r), -e);
  Rational out(1);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(e));
  out.get_num() = num;
  out.get_den() = den;
  return out;
}

long valuation(const Rational& r, long p) {
  if (is_zero(r)) throw std::domain_error("valuation of zero");
  Integer pz(p);
  long v = 0;
  Integer n = abs(r.get_num());
  while (mpz_divisible_p(n.get_mpz_t(), pz.get_mpz_t())) {
    n /= pz;
    ++v;
  }
  Integer d = r.get_den();
  while (mpz_divisible_p(d.get_mpz_t(), pz.get_mpz_t())) {
    d /= pz;
    --v;
  }
  return v;
}

Rational unit_part(const Rational& r, long p) {
  long v = valuation(r, p);
  return r / power(Rational(p), v);
}

bool is_p_unit(const Rational& r, long p) { return !is_zero(r) && valuation(r, p) == 0; }

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::pair<long, int> prime_power_decompose(long n) {
  if (n < 2) throw std::invalid_argument("not a prime power: " + std::to_string(n));
  long p = 2;
  while (n % p != 0) ++p;
  int k = 0;
  long m = n;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  if (m != 1) throw std::invalid_argument("not a prime power: " + std::to_string(n));
  return {p, k};
}

long ipow(long base, int e) {
  long out = 1;
  for (int i = 0; i < e; ++i) {
    if (out > std::numeric_limits<long>::max() / base) throw std::overflow_error("ipow overflow");
    out *= base;
  }
  return out;
}

long residue_mod(const Rational& r, long m) {
  Integer mz(m);
  Integer den_inv;
  if (mpz_invert(den_inv.get_mpz_t(), r.get_den_mpz_t(), mz.get_mpz_t()) == 0) {
    if (m == 1) return 0;
    throw std::domain_error("denominator not invertible modulo " + std::to_string(m));
  }
  Integer out = (r.get_num() * den_inv) % mz;
  if (out < 0) out += mz;
  return out.get_si();
}

long inverse_mod(long a, long m) {
  Integer out;
  Integer az(a), mz(m);
  if (mpz_invert(out.get_mpz_t(), az.get_mpz_t(), mz.get_mpz_t()) == 0) {
    throw std::domain_error("not invertible modulo " + std::to_string(m));
  }
  return out.get_si();
}

}  // namespace asai
