#include "lsa/algebra.hpp"

#include <stdexcept>

namespace lsa {

namespace {
constexpr int kMaxDim = 16;
}

Algebra::Algebra(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("Algebra: dim must be >= 1");
  if (dim > kMaxDim) throw std::invalid_argument("Algebra: dim capped at 16");
  c_.resize(static_cast<size_t>(dim) * dim * dim);
}

Vector Algebra::basis_product(int i, int j) const {
  Vector v(dim_);
  for (int k = 0; k < dim_; ++k) v[k] = c(i, j, k);
  return v;
}

Vector multiply(const Algebra& a, const Vector& x, const Vector& y) {
  int n = a.dim();
  if (x.dim() != n || y.dim() != n)
    throw std::invalid_argument("multiply: dim mismatch");
  Vector z(n);
  for (int i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      Scalar f = x[i] * y[j];
      for (int k = 0; k < n; ++k) {
        const Scalar& c = a.c(i, j, k);
        if (!c.is_zero()) z[k] += f * c;
      }
    }
  }
  return z;
}

Vector associator(const Algebra& a, const Vector& x, const Vector& y,
                  const Vector& z) {
  return multiply(a, multiply(a, x, y), z) -
         multiply(a, x, multiply(a, y, z));
}

namespace {

// (v * e_k)_m = sum_i v_i c(i,k,m)
Vector vec_times_basis(const Algebra& a, const Vector& v, int k) {
  int n = a.dim();
  Vector r(n);
  for (int i = 0; i < n; ++i) {
    if (v[i].is_zero()) continue;
    for (int m = 0; m < n; ++m) {
      const Scalar& c = a.c(i, k, m);
      if (!c.is_zero()) r[m] += v[i] * c;
    }
  }
  return r;
}

// (e_i * v)_m = sum_j v_j c(i,j,m)
Vector basis_times_vec(const Algebra& a, int i, const Vector& v) {
  int n = a.dim();
  Vector r(n);
  for (int j = 0; j < n; ++j) {
    if (v[j].is_zero()) continue;
    for (int m = 0; m < n; ++m) {
      const Scalar& c = a.c(i, j, m);
      if (!c.is_zero()) r[m] += v[j] * c;
    }
  }
  return r;
}

}  // namespace

Vector basis_associator(const Algebra& a, int i, int j, int k) {
  return vec_times_basis(a, a.basis_product(i, j), k) -
         basis_times_vec(a, i, a.basis_product(j, k));
}

bool is_left_symmetric(const Algebra& a) {
  // Trilinearity makes basis triples sufficient; i < j by symmetry of the
  // condition in the first two slots.
  int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!(basis_associator(a, i, j, k) == basis_associator(a, j, i, k)))
          return false;
  return true;
}

Matrix left_mult(const Algebra& a, const Vector& x) {
  int n = a.dim();
  if (x.dim() != n) throw std::invalid_argument("left_mult: dim mismatch");
  Matrix m(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      Scalar s;
      for (int i = 0; i < n; ++i) s += x[i] * a.c(i, j, k);
      m.at(k, j) = s;
    }
  return m;
}

Matrix right_mult(const Algebra& a, const Vector& x) {
  int n = a.dim();
  if (x.dim() != n) throw std::invalid_argument("right_mult: dim mismatch");
  Matrix m(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      Scalar s;
      for (int i = 0; i < n; ++i) s += x[i] * a.c(j, i, k);
      m.at(k, j) = s;
    }
  return m;
}

LieAlgebra::LieAlgebra(int dim, std::vector<Scalar> bracket_tensor)
    : dim_(dim), b_(std::move(bracket_tensor)) {
  if (dim < 1) throw std::invalid_argument("LieAlgebra: dim must be >= 1");
  if (dim > kMaxDim) throw std::invalid_argument("LieAlgebra: dim capped at 16");
  if (b_.size() != static_cast<size_t>(dim) * dim * dim)
    throw std::invalid_argument("LieAlgebra: bad tensor size");
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        if (b(i, j, k) != -b(j, i, k))
          throw std::invalid_argument("LieAlgebra: bracket not antisymmetric");
  // Jacobi on i<j<k triples (antisymmetry kills repeated arguments).
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = j + 1; k < dim_; ++k) {
        Vector s = bracket(basis_bracket(i, j), Vector::basis(dim_, k)) +
                   bracket(basis_bracket(j, k), Vector::basis(dim_, i)) +
                   bracket(basis_bracket(k, i), Vector::basis(dim_, j));
        if (!s.is_zero())
          throw std::invalid_argument("LieAlgebra: Jacobi identity fails");
      }
}

Vector LieAlgebra::basis_bracket(int i, int j) const {
  Vector v(dim_);
  for (int k = 0; k < dim_; ++k) v[k] = b(i, j, k);
  return v;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.dim() != dim_ || y.dim() != dim_)
    throw std::invalid_argument("bracket: dim mismatch");
  Vector z(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar f = x[i] * y[j];
      for (int k = 0; k < dim_; ++k) {
        const Scalar& c = b(i, j, k);
        if (!c.is_zero()) z[k] += f * c;
      }
    }
  }
  return z;
}

Matrix LieAlgebra::ad(const Vector& z) const {
  Matrix m(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    Vector col = bracket(z, Vector::basis(dim_, j));
    m.set_col(j, col);
  }
  return m;
}

bool LieAlgebra::is_abelian() const {
  return std::all_of(b_.begin(), b_.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

LieAlgebra sub_adjacent_lie(const Algebra& a) {
  int n = a.dim();
  std::vector<Scalar> b(static_cast<size_t>(n) * n * n);
  size_t p = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) b[p++] = a.c(i, j, k) - a.c(j, i, k);
  return LieAlgebra(n, std::move(b));  // validates Jacobi
}

}  // namespace lsa
