#include "asai/induced_rep.hpp"

#include <array>
#include <stdexcept>

namespace asai {

namespace {

constexpr std::size_t kDim = 8;

struct SlotMap {
  std::array<int, 3> target{0, 1, 2};
  std::array<std::array<RationalFunction, 2>, 3> diag{};
};

// e_{j0}⊗e_{j1}⊗e_{j2} ↦ ⊗_i (A_i e_{j_i}) placed at slot target[i].
Matrix slot_operator(const SlotMap& s) {
  Matrix m(kDim, std::vector<RationalFunction>(kDim, RationalFunction(Rational(0))));
  for (std::size_t col = 0; col < kDim; ++col) {
    std::size_t row = 0;
    RationalFunction c(Rational(1));
    for (int i = 0; i < 3; ++i) {
      int j = static_cast<int>(col >> i & 1U);
      c *= s.diag[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      row |= static_cast<std::size_t>(j) << s.target[static_cast<std::size_t>(i)];
    }
    m[row][col] = c;
  }
  return m;
}

SlotMap trivial_slots() {
  SlotMap s;
  for (auto& d : s.diag) d = {RationalFunction(Rational(1)), RationalFunction(Rational(1))};
  return s;
}

// Basis of the kernel of (t - 1); t must have constant entries.
Matrix invariant_basis(const Matrix& t) {
  const std::size_t n = t.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!t[i][j].is_polynomial() || !t[i][j].num().is_constant()) {
        throw std::logic_error("inertia must act by a constant matrix");
      }
      a[i][j] = t[i][j].num().constant_term() / t[i][j].den().constant_term() - (i == j ? 1 : 0);
    }
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix basis(n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(n, Rational(0));
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a[k][f];
    for (std::size_t i = 0; i < n; ++i) basis[i].emplace_back(v[i]);
  }
  return basis;
}

std::vector<std::size_t> free_rows(const Matrix& basis) {
  // Each basis column has a 1 at its free index, zeros at the other free indices.
  std::vector<std::size_t> rows;
  const std::size_t k = basis.empty() ? 0 : basis[0].size();
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      bool unit = basis[i][c] == RationalFunction(Rational(1));
      bool others_zero = true;
      for (std::size_t c2 = 0; c2 < k && unit; ++c2) {
        if (c2 != c && !basis[i][c2].is_zero()) others_zero = false;
      }
      if (unit && others_zero) {
        rows.push_back(i);
        break;
      }
    }
  }
  if (rows.size() != k) throw std::logic_error("kernel basis is not in reduced form");
  return rows;
}

}  // namespace

Matrix identity_matrix(std::size_t n) {
  Matrix m(n, std::vector<RationalFunction>(n, RationalFunction(Rational(0))));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = RationalFunction(Rational(1));
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = b.empty() ? 0 : b[0].size();
  Matrix c(n, std::vector<RationalFunction>(m, RationalFunction(Rational(0))));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (!b[l][j].is_zero()) c[i][j] += a[i][l] * b[l][j];
      }
    }
  }
  return c;
}

bool matrices_equal(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      if (!(a[i][j] == b[i][j])) return false;
    }
  }
  return true;
}

std::vector<RationalFunction> det_one_minus_t(const Matrix& a) {
  const std::size_t n = a.size();
  // c[k] is the coefficient of λ^k in det(λ - A).
  std::vector<RationalFunction> c(n + 1, RationalFunction(Rational(0)));
  c[n] = RationalFunction(Rational(1));
  Matrix mk(n, std::vector<RationalFunction>(n, RationalFunction(Rational(0))));
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix next = a * mk;
    for (std::size_t i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
    mk = std::move(next);
    Matrix am = a * mk;
    RationalFunction tr(Rational(0));
    for (std::size_t i = 0; i < n; ++i) tr += am[i][i];
    c[n - k] = -tr * RationalFunction(Rational(1, static_cast<long>(k)));
  }
  std::vector<RationalFunction> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out[k] = c[n - k];
  return out;
}

InducedRepResult induced_rep_oracle(const AsaiRepData& rep) {
  validate(rep);
  const RationalFunction one(Rational(1));
  SlotMap frob = trivial_slots();
  SlotMap tame = trivial_slots();
  bool ramified = false;
  const auto& s = rep.satake;
  switch (rep.shape.kind) {
    case ShapeKind::Split:
      for (std::size_t i = 0; i < 3; ++i) frob.diag[i] = {s[i].alpha, s[i].beta};
      break;
    case ShapeKind::QuadUnramTimesLine:
      frob.target = {1, 0, 2};
      frob.diag[1] = {s[0].alpha, s[0].beta};
      frob.diag[2] = {s[1].alpha, s[1].beta};
      break;
    case ShapeKind::CubicUnramField:
      frob.target = {1, 2, 0};
      frob.diag[2] = {s[0].alpha, s[0].beta};
      break;
    case ShapeKind::CubicTameRamified: {
      ramified = true;
      tame.target = {1, 2, 0};
      const int qmod = static_cast<int>(rep.p % 3);
      for (int i = 0; i < 3; ++i) {
        frob.target[static_cast<std::size_t>(i)] = (qmod * i) % 3;
        frob.diag[static_cast<std::size_t>(i)] = {s[0].alpha, s[0].beta};
      }
      break;
    }
  }
  InducedRepResult out;
  out.frobenius = slot_operator(frob);
  out.inertia = ramified ? slot_operator(tame) : identity_matrix(kDim);
  if (ramified) {
    // φ τ = τ^q φ, and τ^q only depends on q mod 3.
    Matrix tq = identity_matrix(kDim);
    for (long k = 0; k < rep.p % 3; ++k) tq = out.inertia * tq;
    if (!matrices_equal(out.frobenius * out.inertia, tq * out.frobenius)) {
      throw std::logic_error("tame relation fails");
    }
  }
  Matrix basis = invariant_basis(out.inertia);
  out.invariant_dim = basis.empty() ? 0 : basis[0].size();
  Matrix fb = out.frobenius * basis;
  auto rows = free_rows(basis);
  Matrix m;
  for (auto r : rows) m.push_back(fb[r]);
  if (!matrices_equal(fb, basis * m)) throw std::logic_error("invariant subspace is not Frobenius stable");
  out.frobenius_on_invariants = m;
  out.det_coeffs = det_one_minus_t(m);
  RationalFunction det(Rational(0));
  for (std::size_t k = 0; k < out.det_coeffs.size(); ++k) det += out.det_coeffs[k] * T().pow(static_cast<int>(k));
  out.L = det.inverse();
  return out;
}

}  // namespace asai
