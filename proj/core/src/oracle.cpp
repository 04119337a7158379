#include "asai/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "asai/symbolic.hpp"
#include "asai/zeta.hpp"

namespace asai {

namespace {

using cd = std::complex<double>;

// Values carried as complex logarithms; sums factor out the largest modulus.
cd log_sum(const std::vector<cd>& logs) {
  double top = -INFINITY;
  for (const auto& l : logs) top = std::max(top, l.real());
  cd acc = 0;
  for (const auto& l : logs) acc += std::exp(l - top);
  return std::log(acc) + top;
}

double shell_mass(double q, long j) {
  if (j <= 0) return (1 - 1 / q) * std::pow(q, static_cast<double>(j));
  if (j == 1) return -1;
  return 0;
}

// log of q^{-N/2} Σ α^{N-j} β^j.
cd log_shintani(double q, long N, cd alpha, cd beta) {
  cd sum = 0;
  const cd ratio = beta / alpha;
  cd term = 1;
  for (long j = 0; j <= N; ++j) {
    sum += term;
    term *= ratio;
  }
  return std::log(sum) + static_cast<double>(N) * (std::log(alpha) - 0.5 * std::log(q));
}

cd log_pr(double q, long m, long n, cd log_x, long D) {
  // Ball |x| ≤ q^{-m}: value q^{m s'} on a set of mass q^{-m}.
  const double lq = std::log(q);
  std::vector<cd> parts{-static_cast<double>(m) * log_x - static_cast<double>(m) * lq};
  for (long j = -m + 1; j <= std::min(D, n + 1); ++j) {
    double mass = shell_mass(q, j - n) * std::pow(q, static_cast<double>(n));
    if (mass == 0) continue;
    parts.push_back(static_cast<double>(j) * log_x + std::log(cd(mass)));
  }
  return log_sum(parts);
}

}  // namespace

cd pr_integral_numeric(double q, long m, long n, cd log_x, long D) {
  if (m + n < 0) return 0;
  return std::exp(log_pr(q, m, n, log_x, D));
}

cd truncated_zeta(const OracleParams& p) {
  const double lq = std::log(p.q);
  const cd la = std::log(p.alpha);
  const cd lb = std::log(p.beta);
  const cd lab = la + lb;
  // log q^{-s'} = 3 log(αβ) - (2s + 1) log q.
  const cd log_x = 3.0 * lab - (2.0 * p.s + 1.0) * lq;
  std::vector<cd> z[2];
  for (int branch = 0; branch < 2; ++branch) {
    for (long n = 0; n <= p.N; ++n) {
      for (int i = 0; i < 3; ++i) {
        const long k = 3 * n + i;
        cd l = static_cast<double>(k) * log_x - static_cast<double>(k) * lab + 2.0 * static_cast<double>(k) * lq;
        l += log_shintani(p.q, 2 * k + 3 * branch, p.alpha, p.beta);
        l += log_pr(p.q, 2 * n, branch, log_x, p.D);
        if (branch == 1) l += -(p.s + 0.5) * lq;
        z[branch].push_back(l);
      }
    }
  }
  // Z0 + q^2 Z1.
  return std::exp(log_sum(z[0])) + std::exp(log_sum(z[1]) + 2.0 * lq);
}

OracleReport numeric_oracle(const OracleParams& p) {
  if (p.N < 1 || p.D < 1) throw std::domain_error("truncation parameters must be at least 1");
  if (p.q < 2) throw std::domain_error("q must be a prime power");
  const double lq = std::log(p.q);
  // L(Π) = 3 min(wt), |α| = q^{-wt}.
  const double wt_a = -std::log(std::abs(p.alpha)) / lq;
  const double wt_b = -std::log(std::abs(p.beta)) / lq;
  const double L_pi = 3 * std::min(wt_a, wt_b);
  if (p.s.real() <= -L_pi + kOracleMargin) throw std::domain_error("s lies outside the convergence region");

  OracleReport r;
  r.params = p;
  r.truncated = truncated_zeta(p);
  const TameZetaContext ctx;
  NumericPoint pt = numeric_point(p.q, p.s);
  pt[static_cast<std::size_t>(Var::a1)] = p.alpha;
  pt[static_cast<std::size_t>(Var::b1)] = p.beta;
  r.closed_form = zeta_tame_closed_form(ctx).evaluate(pt);
  auto rel = [&](cd v) { return std::abs(v - r.closed_form) / std::abs(r.closed_form); };
  r.rel_error = rel(r.truncated);
  r.decay_ratio = std::pow(std::max(std::abs(p.alpha), std::abs(p.beta)), 6) * std::pow(p.q, -2 * p.s.real());

  r.tail_geometric = true;
  for (long n0 : {1L, 2L, 4L}) {
    OracleParams a = p;
    a.N = n0;
    OracleParams next = p;
    next.N = n0 + 1;
    OracleParams b = p;
    b.N = 2 * n0;
    TailStep step;
    step.N = n0;
    step.error = rel(truncated_zeta(a));
    // Dominant ratios of equal modulus can cancel at a single N, never at two consecutive ones.
    step.scale = std::max(step.error, rel(truncated_zeta(next)) / r.decay_ratio);
    step.doubled_error = rel(truncated_zeta(b));
    step.bound = kTailSlack * std::pow(r.decay_ratio, static_cast<double>(n0)) * step.scale + kRoundingFloor;
    step.ok = step.doubled_error <= step.bound;
    r.tail_geometric = r.tail_geometric && step.ok;
    r.tail.push_back(step);
  }
  return r;
}

}  // namespace asai
