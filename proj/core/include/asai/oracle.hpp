#pragma once

#include <complex>
#include <vector>

namespace asai {

struct OracleParams {
  double q = 5;
  std::complex<double> alpha = std::polar(1.0, 3.14159265358979323846 / 7);
  std::complex<double> beta = std::polar(1.0, -3.14159265358979323846 / 3);
  std::complex<double> s = 2.0;
  long N = 60;
  long D = 60;  // outer shell depth of the x-integral
};

struct TailStep {
  long N = 0;
  double error = 0;
  double scale = 0;  // max(error, error at N + 1 / decay ratio)
  double doubled_error = 0;
  double bound = 0;
  bool ok = false;
};

struct OracleReport {
  OracleParams params;
  std::complex<double> truncated;
  std::complex<double> closed_form;
  double rel_error = 0;
  double decay_ratio = 0;  // max(|α|,|β|)^6 q^{-2 Re s}
  std::vector<TailStep> tail;
  bool tail_geometric = false;
};

inline constexpr double kOracleMargin = 0.05;
inline constexpr double kTailSlack = 10.0;
inline constexpr double kRoundingFloor = 1e-14;

// Truncated sum of the tame unramified zeta integral, shell by shell.
std::complex<double> truncated_zeta(const OracleParams& p);
// Throws std::domain_error when Re s ≤ -L(Π) + margin or N, D < 1.
OracleReport numeric_oracle(const OracleParams& p);

// ∫ max{|x|, q^{-m}}^{-s'} ψ(ϖ^n x) dx with q^{-s'} = exp(log_x), summed over shells |x| ≤ q^D.
std::complex<double> pr_integral_numeric(double q, long m, long n, std::complex<double> log_x, long D);

}  // namespace asai
