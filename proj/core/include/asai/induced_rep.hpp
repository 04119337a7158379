#pragma once

#include <vector>

#include "asai/local_factors.hpp"

namespace asai {

using Matrix = std::vector<std::vector<RationalFunction>>;

Matrix identity_matrix(std::size_t n);
Matrix operator*(const Matrix& a, const Matrix& b);
bool matrices_equal(const Matrix& a, const Matrix& b);

// Σ c_k T^k = det(1 - M·T), by Faddeev–LeVerrier.
std::vector<RationalFunction> det_one_minus_t(const Matrix& m);

struct InducedRepResult {
  Matrix frobenius;       // on C^2 ⊗ C^2 ⊗ C^2, basis index j0 + 2 j1 + 4 j2
  Matrix inertia;         // tame generator; identity when E/F is unramified
  Matrix frobenius_on_invariants;
  std::size_t invariant_dim = 0;
  std::vector<RationalFunction> det_coeffs;  // det(1 - Frob·T | invariants)
  RationalFunction L;
};

// Throws std::logic_error if the tame relation or the invariance of the subspace fails.
InducedRepResult induced_rep_oracle(const AsaiRepData& rep);

}  // namespace asai
