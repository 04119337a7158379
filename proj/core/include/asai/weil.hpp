#pragma once

#include <vector>

#include "asai/cyclotomic.hpp"
#include "asai/padic.hpp"

namespace asai {

// (x, y) ↦ coef · ψ(twist1·x + twist2·y) · 1[x ∈ center1 + p^depth1 Z_p] · 1[y ∈ center2 + p^depth2 Z_p].
struct BoxTerm {
  CyclotomicNumber coef{1};
  Rational twist1{0};
  Rational twist2{0};
  Rational center1{0};
  Rational center2{0};
  long depth1 = 0;
  long depth2 = 0;
};

bool in_box(const Rational& x, const Rational& center, long depth, long p);

class SchwartzFunction2D {
 public:
  explicit SchwartzFunction2D(long p, std::vector<BoxTerm> terms = {});
  // 1_{o×o}.
  static SchwartzFunction2D unramified(long p);

  long prime() const { return p_; }
  const std::vector<BoxTerm>& terms() const { return terms_; }
  CyclotomicNumber operator()(const Rational& x, const Rational& y) const;

  // Splits every box into p^2 sub-boxes one level deeper.
  SchwartzFunction2D refined() const;
  // Smallest n ≥ 0 with support inside p^{-n}o × p^{-n}o.
  long support_exponent() const;
  // Sum of coefficient bounds; dominates |φ| pointwise.
  Rational abs_bound() const;

  SchwartzFunction2D& operator+=(const SchwartzFunction2D& o);

 private:
  long p_;
  std::vector<BoxTerm> terms_;
};

struct WeilGenerator {
  enum class Kind { m, n, a, w };
  Kind kind = Kind::w;
  Rational param{1};

  static WeilGenerator m(const Rational& t) { return {Kind::m, t}; }
  static WeilGenerator n(const Rational& b) { return {Kind::n, b}; }
  static WeilGenerator a(const Rational& nu) { return {Kind::a, nu}; }
  static WeilGenerator w() { return {Kind::w, Rational(1)}; }
};

// g = word[0] · word[1] · ... ; the rightmost factor acts first.
using GroupWord = std::vector<WeilGenerator>;

SchwartzFunction2D weil_act(const WeilGenerator& g, const SchwartzFunction2D& phi);
SchwartzFunction2D weil_act(const GroupWord& g, const SchwartzFunction2D& phi);
Rational determinant(const GroupWord& g);

}  // namespace asai
