#include "asai/weil.hpp"

#include <algorithm>
#include <stdexcept>

namespace asai {

bool in_box(const Rational& x, const Rational& center, long depth, long p) {
  Rational d = x - center;
  return is_zero(d) || valuation(d, p) >= depth;
}

SchwartzFunction2D::SchwartzFunction2D(long p, std::vector<BoxTerm> terms) : p_(p), terms_(std::move(terms)) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("Schwartz functions need an odd prime");
}

SchwartzFunction2D SchwartzFunction2D::unramified(long p) { return SchwartzFunction2D(p, {BoxTerm{}}); }

CyclotomicNumber SchwartzFunction2D::operator()(const Rational& x, const Rational& y) const {
  CyclotomicNumber out(0);
  for (const auto& t : terms_) {
    if (!in_box(x, t.center1, t.depth1, p_) || !in_box(y, t.center2, t.depth2, p_)) continue;
    out += t.coef * psi_eval(Rational(t.twist1 * x + t.twist2 * y), p_);
  }
  return out;
}

SchwartzFunction2D SchwartzFunction2D::refined() const {
  std::vector<BoxTerm> out;
  out.reserve(terms_.size() * static_cast<std::size_t>(p_ * p_));
  for (const auto& t : terms_) {
    Rational step1 = power(Rational(p_), t.depth1);
    Rational step2 = power(Rational(p_), t.depth2);
    for (long i = 0; i < p_; ++i) {
      for (long j = 0; j < p_; ++j) {
        BoxTerm s = t;
        s.center1 = t.center1 + Rational(i) * step1;
        s.center2 = t.center2 + Rational(j) * step2;
        s.depth1 = t.depth1 + 1;
        s.depth2 = t.depth2 + 1;
        out.push_back(std::move(s));
      }
    }
  }
  return SchwartzFunction2D(p_, std::move(out));
}

long SchwartzFunction2D::support_exponent() const {
  long n = 0;
  for (const auto& t : terms_) {
    long lo1 = is_zero(t.center1) ? t.depth1 : std::min(t.depth1, valuation(t.center1, p_));
    long lo2 = is_zero(t.center2) ? t.depth2 : std::min(t.depth2, valuation(t.center2, p_));
    n = std::max({n, -lo1, -lo2});
  }
  return n;
}

Rational SchwartzFunction2D::abs_bound() const {
  Rational out(0);
  for (const auto& t : terms_) out += t.coef.abs_bound();
  return out;
}

SchwartzFunction2D& SchwartzFunction2D::operator+=(const SchwartzFunction2D& o) {
  if (o.p_ != p_) throw std::invalid_argument("adding Schwartz functions over different primes");
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  return *this;
}

namespace {

std::vector<BoxTerm> act_m(const std::vector<BoxTerm>& terms, const Rational& t, long p) {
  long v = valuation(t, p);
  Rational abs_t = power(Rational(p), -v);
  std::vector<BoxTerm> out;
  out.reserve(terms.size());
  for (auto s : terms) {
    s.coef *= CyclotomicNumber(abs_t);
    s.center1 /= t;
    s.center2 /= t;
    s.depth1 -= v;
    s.depth2 -= v;
    s.twist1 *= t;
    s.twist2 *= t;
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<BoxTerm> act_a(const std::vector<BoxTerm>& terms, const Rational& nu, long p) {
  long v = valuation(nu, p);
  std::vector<BoxTerm> out;
  out.reserve(terms.size());
  for (auto s : terms) {
    s.center1 /= nu;
    s.depth1 -= v;
    s.twist1 *= nu;
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<BoxTerm> act_w(const std::vector<BoxTerm>& terms, long p) {
  std::vector<BoxTerm> out;
  out.reserve(terms.size());
  for (const auto& s : terms) {
    BoxTerm r;
    r.coef = s.coef * CyclotomicNumber(power(Rational(p), -(s.depth1 + s.depth2))) *
             psi_eval(Rational(s.twist1 * s.center1 + s.twist2 * s.center2), p);
    r.twist1 = s.center2;
    r.twist2 = s.center1;
    r.center1 = -s.twist2;
    r.center2 = -s.twist1;
    r.depth1 = -s.depth2;
    r.depth2 = -s.depth1;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<BoxTerm> act_n(const SchwartzFunction2D& phi, const Rational& b) {
  if (is_zero(b)) return phi.terms();
  const long p = phi.prime();
  const long vb = valuation(b, p);
  std::vector<BoxTerm> out;
  for (const auto& t : phi.terms()) {
    SchwartzFunction2D piece(p, {t});
    // ψ(b ξ η) is trivial on the box once vb + depth1 + depth2 ≥ 0.
    while (vb + piece.terms()[0].depth1 + piece.terms()[0].depth2 < 0) piece = piece.refined();
    for (auto s : piece.terms()) {
      s.coef *= psi_eval(Rational(-b * s.center1 * s.center2), p);
      s.twist1 += b * s.center2;
      s.twist2 += b * s.center1;
      out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace

SchwartzFunction2D weil_act(const WeilGenerator& g, const SchwartzFunction2D& phi) {
  const long p = phi.prime();
  if (g.kind != WeilGenerator::Kind::n && g.kind != WeilGenerator::Kind::w && is_zero(g.param)) {
    throw std::domain_error("torus element must be invertible");
  }
  switch (g.kind) {
    case WeilGenerator::Kind::m:
      return SchwartzFunction2D(p, act_m(phi.terms(), g.param, p));
    case WeilGenerator::Kind::a:
      return SchwartzFunction2D(p, act_a(phi.terms(), g.param, p));
    case WeilGenerator::Kind::n:
      return SchwartzFunction2D(p, act_n(phi, g.param));
    case WeilGenerator::Kind::w:
      return SchwartzFunction2D(p, act_w(phi.terms(), p));
  }
  throw std::logic_error("unknown Weil generator");
}

SchwartzFunction2D weil_act(const GroupWord& g, const SchwartzFunction2D& phi) {
  SchwartzFunction2D out = phi;
  for (auto it = g.rbegin(); it != g.rend(); ++it) out = weil_act(*it, out);
  return out;
}

Rational determinant(const GroupWord& g) {
  Rational d(1);
  for (const auto& x : g) {
    if (x.kind == WeilGenerator::Kind::a) d *= x.param;
  }
  return d;
}

}  // namespace asai
