#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "lsa/scalar.hpp"

namespace lsa {

class Vector {
 public:
  explicit Vector(int dim) : coords_(check_dim(dim)) {}
  Vector(std::initializer_list<Scalar> cs) : coords_(cs) {}
  explicit Vector(std::vector<Scalar> cs) : coords_(std::move(cs)) {}

  static Vector basis(int dim, int i) {  // i is 0-based here
    Vector v(dim);
    v[i] = Scalar(1);
    return v;
  }

  int dim() const { return static_cast<int>(coords_.size()); }
  Scalar& operator[](int i) { return coords_[i]; }
  const Scalar& operator[](int i) const { return coords_[i]; }

  bool is_zero() const;
  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(const Scalar& s);
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Scalar& s, Vector v) { return v *= s; }
  friend bool operator==(const Vector& a, const Vector& b) {
    return a.coords_ == b.coords_;
  }

 private:
  static size_t check_dim(int dim);
  std::vector<Scalar> coords_;
};

std::ostream& operator<<(std::ostream& os, const Vector& v);

class Matrix {
 public:
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        entries_(static_cast<size_t>(rows) * cols) {}

  static Matrix identity(int n);
  static Matrix unit(int n, int r, int c);  // E_{rc}, 0-based

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const {
    return entries_[static_cast<size_t>(r) * cols_ + c];
  }

  Vector col(int c) const;
  void set_col(int c, const Vector& v);
  Matrix transpose() const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Scalar& s, Matrix m) { return m *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& x);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  int rows_, cols_;
  std::vector<Scalar> entries_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

int rank(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);
/// One solution of A x = b, or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);
std::vector<Vector> kernel_basis(const Matrix& a);
/// Indices (0-based) of a maximal independent subset of the given vectors.
std::vector<int> independent_subset(const std::vector<Vector>& vs);

/// Linear function A -> C given by its values on the basis.
class LinearFunctional {
 public:
  explicit LinearFunctional(int dim) : coeffs_(check(dim)) {}
  explicit LinearFunctional(std::vector<Scalar> cs) : coeffs_(std::move(cs)) {}

  int dim() const { return static_cast<int>(coeffs_.size()); }
  Scalar& operator[](int i) { return coeffs_[i]; }
  const Scalar& operator[](int i) const { return coeffs_[i]; }
  Scalar value(const Vector& x) const;
  bool is_zero() const;
  friend bool operator==(const LinearFunctional& a, const LinearFunctional& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  static size_t check(int dim);
  std::vector<Scalar> coeffs_;
};

/// Symmetric bilinear form stored as its Gram matrix (exactly symmetric).
class SymBilinearForm {
 public:
  explicit SymBilinearForm(Matrix gram);
  static SymBilinearForm zero(int dim) {
    return SymBilinearForm(Matrix(dim, dim));
  }

  int dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  const Scalar& at(int i, int j) const { return gram_.at(i, j); }
  Scalar value(const Vector& x, const Vector& y) const;
  /// h(x, .) as a functional.
  LinearFunctional pair_with(const Vector& x) const;
  bool is_zero() const { return gram_.is_zero(); }

 private:
  Matrix gram_;
};

int form_rank(const SymBilinearForm& h);

/// Exact congruence reduction: T^t G T = diag(d_1..d_r, 0..0) with nonzero
/// exact d_i. Pivoting: largest |diagonal|^2 first; all-zero diagonal gets
/// the e_i <- e_i + e_j fix on the largest off-diagonal entry.
struct SymReduction {
  Matrix basis;               // exact invertible T
  std::vector<Scalar> diag;   // the r nonzero diagonal values
  int rank = 0;
};
SymReduction symmetric_reduce(const Matrix& gram);

// ---- approximate (complex double) layer: witnesses only ----

class CMatrix {
 public:
  using C = std::complex<double>;
  CMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        entries_(static_cast<size_t>(rows) * cols) {}
  static CMatrix identity(int n);
  static CMatrix from_exact(const Matrix& m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  C& at(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }
  const C& at(int r, int c) const {
    return entries_[static_cast<size_t>(r) * cols_ + c];
  }
  void scale_col(int c, C f);
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
  std::vector<C> apply(const std::vector<C>& x) const;
  std::optional<CMatrix> inverse() const;
  double max_abs() const;

 private:
  int rows_, cols_;
  std::vector<C> entries_;
};

struct CongruenceDiag {
  int rank = 0;
  CMatrix basis;  // T with T^t G T ~ diag(1..1,0..0)
};
/// Exact rank; basis scaled by complex square roots, residual <= 1e-9.
CongruenceDiag congruence_diagonalize(const SymBilinearForm& h);

/// max_ij |(T^t G T - diag(1..1,0..0))_ij| for the given rank.
double congruence_residual(const SymBilinearForm& h, const CMatrix& t, int rank);

}  // namespace lsa
