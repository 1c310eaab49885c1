#include "lsa/linalg.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace lsa {

size_t Vector::check_dim(int dim) {
  if (dim < 1) throw std::invalid_argument("Vector: dim must be >= 1");
  return static_cast<size_t>(dim);
}

bool Vector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

Vector& Vector::operator+=(const Vector& o) {
  if (o.dim() != dim()) throw std::invalid_argument("Vector: dim mismatch");
  for (int i = 0; i < dim(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  if (o.dim() != dim()) throw std::invalid_argument("Vector: dim mismatch");
  for (int i = 0; i < dim(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Vector& Vector::operator*=(const Scalar& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Vector& v) {
  os << "(";
  for (int i = 0; i < v.dim(); ++i) os << (i ? ", " : "") << v[i];
  return os << ")";
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::unit(int n, int r, int c) {
  Matrix m(n, n);
  m.at(r, c) = Scalar(1);
  return m;
}

Vector Matrix::col(int c) const {
  Vector v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

void Matrix::set_col(int c, const Vector& v) {
  for (int r = 0; r < rows_; ++r) at(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_)
    throw std::invalid_argument("Matrix: shape mismatch");
  for (size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_)
    throw std::invalid_argument("Matrix: shape mismatch");
  for (size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch");
  Matrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

Vector operator*(const Matrix& a, const Vector& x) {
  if (a.cols_ != x.dim()) throw std::invalid_argument("Matrix: shape mismatch");
  Vector r(a.rows_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) r[i] += a.at(i, j) * x[j];
  return r;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  for (int r = 0; r < m.rows(); ++r) {
    os << "[";
    for (int c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m.at(r, c);
    os << "]\n";
  }
  return os;
}

namespace {

// Row echelon form in place; returns pivot column per pivot row.
std::vector<int> echelon(Matrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int r = row; r < m.rows(); ++r)
      if (!m.at(r, col).is_zero()) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m.at(p, c), m.at(row, c));
    Scalar inv = m.at(row, col).inv();
    for (int c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      Scalar f = m.at(r, col);
      for (int c = col; c < m.cols(); ++c)
        m.at(r, c) -= f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(Matrix m) { return static_cast<int>(echelon(m).size()); }

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
  int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = Scalar(1);
  }
  auto pivots = echelon(aug);
  if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
    return std::nullopt;
  Matrix inv(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
  return inv;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (a.rows() != b.dim()) throw std::invalid_argument("solve: shape mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r];
  }
  auto pivots = echelon(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vector x(a.cols());
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(static_cast<int>(i), a.cols());
  return x;
}

std::vector<Vector> kernel_basis(const Matrix& a) {
  Matrix m = a;
  auto pivots = echelon(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (int c = 0; c < a.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vector v(a.cols());
    v[c] = Scalar(1);
    for (size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -m.at(static_cast<int>(i), c);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<int> independent_subset(const std::vector<Vector>& vs) {
  if (vs.empty()) return {};
  int dim = vs[0].dim();
  Matrix m(dim, static_cast<int>(vs.size()));
  for (size_t c = 0; c < vs.size(); ++c) m.set_col(static_cast<int>(c), vs[c]);
  auto pivots = echelon(m);
  return pivots;
}

size_t LinearFunctional::check(int dim) {
  if (dim < 1) throw std::invalid_argument("LinearFunctional: dim must be >= 1");
  return static_cast<size_t>(dim);
}

Scalar LinearFunctional::value(const Vector& x) const {
  if (x.dim() != dim())
    throw std::invalid_argument("LinearFunctional: dim mismatch");
  Scalar s;
  for (int i = 0; i < dim(); ++i) s += coeffs_[i] * x[i];
  return s;
}

bool LinearFunctional::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

SymBilinearForm::SymBilinearForm(Matrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols())
    throw std::invalid_argument("SymBilinearForm: not square");
  for (int i = 0; i < gram_.rows(); ++i)
    for (int j = i + 1; j < gram_.cols(); ++j)
      if (gram_.at(i, j) != gram_.at(j, i))
        throw std::invalid_argument("SymBilinearForm: asymmetric gram");
}

Scalar SymBilinearForm::value(const Vector& x, const Vector& y) const {
  if (x.dim() != dim() || y.dim() != dim())
    throw std::invalid_argument("SymBilinearForm: dim mismatch");
  Scalar s;
  for (int i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    Scalar row;
    for (int j = 0; j < dim(); ++j) row += gram_.at(i, j) * y[j];
    s += x[i] * row;
  }
  return s;
}

LinearFunctional SymBilinearForm::pair_with(const Vector& x) const {
  LinearFunctional f(dim());
  for (int j = 0; j < dim(); ++j) {
    Scalar s;
    for (int i = 0; i < dim(); ++i) s += x[i] * gram_.at(i, j);
    f[j] = s;
  }
  return f;
}

int form_rank(const SymBilinearForm& h) { return rank(h.gram()); }

SymReduction symmetric_reduce(const Matrix& gram) {
  int n = gram.rows();
  Matrix g = gram;
  Matrix t = Matrix::identity(n);

  auto col_axpy = [&](Matrix& m, int dst, int src, const Scalar& f) {
    for (int r = 0; r < m.rows(); ++r) m.at(r, dst) += f * m.at(r, src);
  };
  auto row_axpy = [&](Matrix& m, int dst, int src, const Scalar& f) {
    for (int c = 0; c < m.cols(); ++c) m.at(dst, c) += f * m.at(src, c);
  };
  auto swap_cols = [&](Matrix& m, int a, int b) {
    for (int r = 0; r < m.rows(); ++r) std::swap(m.at(r, a), m.at(r, b));
  };
  auto swap_rows = [&](Matrix& m, int a, int b) {
    for (int c = 0; c < m.cols(); ++c) std::swap(m.at(a, c), m.at(b, c));
  };

  SymReduction out{Matrix::identity(n), {}, 0};
  int p = 0;
  while (p < n) {
    // largest |diagonal|^2 among remaining
    int best = -1;
    mpq_class best_mag(0);
    for (int q = p; q < n; ++q) {
      mpq_class mag = g.at(q, q).norm2();
      if (mag > best_mag) {
        best_mag = mag;
        best = q;
      }
    }
    if (best < 0) {
      // all-zero diagonal: hyperbolic fix on the largest off-diagonal entry
      int bi = -1, bj = -1;
      mpq_class bmag(0);
      for (int i = p; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          mpq_class mag = g.at(i, j).norm2();
          if (mag > bmag) {
            bmag = mag;
            bi = i;
            bj = j;
          }
        }
      if (bi < 0) break;  // remaining block is zero
      col_axpy(g, bi, bj, Scalar(1));
      row_axpy(g, bi, bj, Scalar(1));
      col_axpy(t, bi, bj, Scalar(1));
      best = bi;
    }
    if (best != p) {
      swap_cols(g, best, p);
      swap_rows(g, best, p);
      swap_cols(t, best, p);
    }
    Scalar d = g.at(p, p);
    for (int j = p + 1; j < n; ++j) {
      if (g.at(p, j).is_zero()) continue;
      Scalar f = -(g.at(p, j) / d);
      col_axpy(g, j, p, f);
      row_axpy(g, j, p, f);
      col_axpy(t, j, p, f);
    }
    out.diag.push_back(d);
    ++p;
  }
  out.basis = t;
  out.rank = static_cast<int>(out.diag.size());
  return out;
}

CMatrix CMatrix::identity(int n) {
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::from_exact(const Matrix& m) {
  CMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).to_complex();
  return r;
}

void CMatrix::scale_col(int c, C f) {
  for (int r = 0; r < rows_; ++r) at(r, c) *= f;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("CMatrix: shape mismatch");
  CMatrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      auto aik = a.at(i, k);
      if (aik == CMatrix::C{}) continue;
      for (int j = 0; j < b.cols(); ++j) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

std::vector<CMatrix::C> CMatrix::apply(const std::vector<C>& x) const {
  std::vector<C> r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * x[j];
  return r;
}

std::optional<CMatrix> CMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("CMatrix: not square");
  int n = rows_;
  CMatrix a = *this;
  CMatrix inv = CMatrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int p = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a.at(r, col)) > std::abs(a.at(p, col))) p = r;
    if (std::abs(a.at(p, col)) < 1e-12 * std::max(1.0, max_abs()))
      return std::nullopt;
    if (p != col)
      for (int c = 0; c < n; ++c) {
        std::swap(a.at(p, c), a.at(col, c));
        std::swap(inv.at(p, c), inv.at(col, c));
      }
    C d = a.at(col, col);
    for (int c = 0; c < n; ++c) {
      a.at(col, c) /= d;
      inv.at(col, c) /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      C f = a.at(r, col);
      if (f == C{}) continue;
      for (int c = 0; c < n; ++c) {
        a.at(r, c) -= f * a.at(col, c);
        inv.at(r, c) -= f * inv.at(col, c);
      }
    }
  }
  return inv;
}

double CMatrix::max_abs() const {
  double m = 0;
  for (const auto& e : entries_) m = std::max(m, std::abs(e));
  return m;
}

CongruenceDiag congruence_diagonalize(const SymBilinearForm& h) {
  SymReduction red = symmetric_reduce(h.gram());
  CMatrix t = CMatrix::from_exact(red.basis);
  for (int i = 0; i < red.rank; ++i)
    t.scale_col(i, 1.0 / std::sqrt(red.diag[i].to_complex()));
  return {red.rank, t};
}

double congruence_residual(const SymBilinearForm& h, const CMatrix& t,
                           int rnk) {
  int n = h.dim();
  CMatrix g = CMatrix::from_exact(h.gram());
  // T^t G T (transpose, not conjugate: the form is bilinear)
  CMatrix gt = g * t;
  double res = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      CMatrix::C v{};
      for (int r = 0; r < n; ++r) v += t.at(r, i) * gt.at(r, j);
      CMatrix::C want = (i == j && i < rnk) ? 1.0 : 0.0;
      res = std::max(res, std::abs(v - want));
    }
  return res;
}

}  // namespace lsa
