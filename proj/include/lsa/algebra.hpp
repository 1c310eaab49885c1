#pragma once

#include <vector>

#include "lsa/linalg.hpp"

namespace lsa {

/// Finite-dimensional algebra fixed by structure constants:
/// e_i * e_j = sum_k c(i,j,k) e_k. No identity is assumed of the product;
/// identities are checked, never presumed. Exact routines cap dim at 16
/// (tensors are O(n^3)).
class Algebra {
 public:
  explicit Algebra(int dim);

  int dim() const { return dim_; }
  const Scalar& c(int i, int j, int k) const { return c_[idx(i, j, k)]; }
  void set_c(int i, int j, int k, Scalar v) { c_[idx(i, j, k)] = std::move(v); }

  /// e_i * e_j as a coordinate vector.
  Vector basis_product(int i, int j) const;

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.dim_ == b.dim_ && a.c_ == b.c_;
  }

 private:
  size_t idx(int i, int j, int k) const {
    return (static_cast<size_t>(i) * dim_ + j) * dim_ + k;
  }
  int dim_;
  std::vector<Scalar> c_;
};

Vector multiply(const Algebra& a, const Vector& x, const Vector& y);
Vector associator(const Algebra& a, const Vector& x, const Vector& y,
                  const Vector& z);
/// associator(e_i, e_j, e_k) without building the basis vectors.
Vector basis_associator(const Algebra& a, int i, int j, int k);
bool is_left_symmetric(const Algebra& a);
Matrix left_mult(const Algebra& a, const Vector& x);
Matrix right_mult(const Algebra& a, const Vector& x);

/// Lie algebra by bracket tensor; antisymmetry and the Jacobi identity are
/// validated exactly at construction (fail-fast: everything downstream
/// assumes them).
class LieAlgebra {
 public:
  explicit LieAlgebra(int dim, std::vector<Scalar> bracket_tensor);

  int dim() const { return dim_; }
  const Scalar& b(int i, int j, int k) const { return b_[idx(i, j, k)]; }
  Vector basis_bracket(int i, int j) const;
  Vector bracket(const Vector& x, const Vector& y) const;
  /// ad(z) as a matrix: w -> [z, w].
  Matrix ad(const Vector& z) const;
  bool is_abelian() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.b_ == b.b_;
  }

 private:
  size_t idx(int i, int j, int k) const {
    return (static_cast<size_t>(i) * dim_ + j) * dim_ + k;
  }
  int dim_;
  std::vector<Scalar> b_;
};

/// Bracket [x,y] = xy - yx. Throws if the Jacobi identity fails (signals
/// that the input was not left-symmetric).
LieAlgebra sub_adjacent_lie(const Algebra& a);

}  // namespace lsa
