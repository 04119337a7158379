#pragma once

#include <complex>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace asai {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "n" or "n/d" with optional sign; the result is canonical.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
Rational inverse(const Rational& r);
inline std::complex<double> to_complex(const Rational& r) { return {r.get_d(), 0.0}; }

Rational power(const Rational& r, long e);

// p-adic valuation of a nonzero rational.
long valuation(const Rational& r, long p);
// r / p^valuation(r).
Rational unit_part(const Rational& r, long p);
bool is_p_unit(const Rational& r, long p);

bool is_prime(long n);
// Returns (p, k) with n = p^k, k >= 1; throws if n is not a prime power.
std::pair<long, int> prime_power_decompose(long n);
long ipow(long base, int e);

// Residue of a p-integral rational modulo m (a positive integer), in [0, m).
long residue_mod(const Rational& r, long m);
long inverse_mod(long a, long m);

}  // namespace asai
