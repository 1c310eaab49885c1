#include "lsa/analysis.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace lsa {

IdentityFlags identity_flags(const Algebra& a) {
  int n = a.dim();
  IdentityFlags out;
  out.commutative = true;
  for (int i = 0; i < n && out.commutative; ++i)
    for (int j = i + 1; j < n && out.commutative; ++j)
      for (int k = 0; k < n; ++k)
        if (a.c(i, j, k) != a.c(j, i, k)) {
          out.commutative = false;
          break;
        }
  out.associative = true;
  for (int i = 0; i < n && out.associative; ++i)
    for (int j = 0; j < n && out.associative; ++j)
      for (int k = 0; k < n && out.associative; ++k)
        out.associative = basis_associator(a, i, j, k).is_zero();
  return out;
}

bool is_novikov(const Algebra& a) {
  if (!is_left_symmetric(a)) return false;
  int n = a.dim();
  std::vector<Matrix> r;
  r.reserve(n);
  for (int i = 0; i < n; ++i) r.push_back(right_mult(a, Vector::basis(n, i)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!(r[i] * r[j] == r[j] * r[i])) return false;
  return true;
}

bool is_bisymmetric(const Algebra& a) {
  if (!is_left_symmetric(a)) return false;
  int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (!(basis_associator(a, i, j, k) == basis_associator(a, i, k, j)))
          return false;
  return true;
}

namespace {

// Gaussian integers over __int128 for fast exact grid evaluation.
struct GInt {
  __int128 re = 0, im = 0;
  GInt operator+(const GInt& o) const { return {re + o.re, im + o.im}; }
  GInt operator*(const GInt& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GInt& operator+=(const GInt& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  bool is_zero() const { return re == 0 && im == 0; }
};

// Denominator-cleared integer tensor of the right multiplications:
// rt[i] = D * R_{e_i} as Gaussian integers. Returns false when entries do
// not fit the __int128 safety budget for grids up to {0..n}^n.
bool scaled_right_tensor(const Algebra& a, std::vector<std::vector<GInt>>& rt) {
  int n = a.dim();
  mpz_class den(1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Scalar& s = a.c(i, j, k);
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), s.re().get_den().get_mpz_t());
        mpz_lcm(den.get_mpz_t(), l.get_mpz_t(), s.im().get_den().get_mpz_t());
      }
  double max_entry = 0;
  rt.assign(n, std::vector<GInt>(static_cast<size_t>(n) * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        // R_{e_i}(e_j) = e_j * e_i
        mpq_class re = a.c(j, i, k).re() * den;
        mpq_class im = a.c(j, i, k).im() * den;
        if (re.get_den() != 1 || im.get_den() != 1) return false;
        mpz_class rn = re.get_num(), in = im.get_num();
        if (!rn.fits_slong_p() || !in.fits_slong_p()) return false;
        GInt g{rn.get_si(), in.get_si()};
        rt[i][static_cast<size_t>(k) * n + j] = g;
        max_entry = std::max({max_entry, std::abs(re.get_d()), std::abs(im.get_d())});
      }
  // component bound after the power chain: n * B1^m * (2n)^(m-1), B1 = n*m*E
  double b1 = n * n * std::max(1.0, max_entry);
  double logbound = std::log2(static_cast<double>(n)) +
                    n * std::log2(b1) + (n - 1) * std::log2(2.0 * n);
  return logbound < 120.0;
}

// tr((sum_i x_i M_i)^m) over Gaussian __int128
GInt grid_trace_power(const std::vector<std::vector<GInt>>& rt,
                      const std::vector<int>& x, int m, int n) {
  std::vector<GInt> rx(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    GInt xi{x[i], 0};
    for (size_t p = 0; p < rx.size(); ++p) rx[p] += xi * rt[i][p];
  }
  std::vector<GInt> pw = rx, tmp(static_cast<size_t>(n) * n);
  for (int e = 1; e < m; ++e) {
    for (auto& t : tmp) t = GInt{};
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        GInt pik = pw[static_cast<size_t>(i) * n + k];
        if (pik.is_zero()) continue;
        for (int j = 0; j < n; ++j)
          tmp[static_cast<size_t>(i) * n + j] += pik * rx[static_cast<size_t>(k) * n + j];
      }
    pw.swap(tmp);
  }
  GInt tr;
  for (int i = 0; i < n; ++i) tr += pw[static_cast<size_t>(i) * n + i];
  return tr;
}

// exact-scalar fallback for the same trace
Scalar exact_trace_power(const Algebra& a, const Vector& x, int m) {
  Matrix rx = right_mult(a, x);
  Matrix pw = rx;
  for (int e = 1; e < m; ++e) pw = pw * rx;
  Scalar tr;
  for (int i = 0; i < a.dim(); ++i) tr += pw.at(i, i);
  return tr;
}

}  // namespace

TransitivityReport is_transitive(const Algebra& a) {
  if (!is_left_symmetric(a))
    throw std::invalid_argument("is_transitive: input not left-symmetric");
  int n = a.dim();
  TransitivityReport rep;
  if (n <= 6) {
    rep.mode = TransitivityMode::ExactGrid;
    std::vector<std::vector<GInt>> rt;
    bool fast = scaled_right_tensor(a, rt);
    for (int m = 1; m <= n; ++m) {
      // degree <= m in each variable: the grid {0..m}^n decides vanishing
      std::vector<int> x(n, 0);
      while (true) {
        bool nonzero_point =
            std::any_of(x.begin(), x.end(), [](int v) { return v != 0; });
        if (nonzero_point) {
          if (fast) {
            if (!grid_trace_power(rt, x, m, n).is_zero()) return rep;
          } else {
            Vector xv(n);
            for (int i = 0; i < n; ++i) xv[i] = Scalar(static_cast<long>(x[i]));
            if (!exact_trace_power(a, xv, m).is_zero()) return rep;
          }
        }
        int p = 0;
        while (p < n && x[p] == m) x[p++] = 0;
        if (p == n) break;
        ++x[p];
      }
    }
    rep.transitive = true;
    return rep;
  }
  rep.mode = TransitivityMode::Randomized;
  std::mt19937_64 rng(0x5eed5eedULL);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  for (int m = 1; m <= n; ++m)
    for (int trial = 0; trial < 40; ++trial) {
      Vector x(n);
      for (int i = 0; i < n; ++i) x[i] = Scalar(dist(rng));
      if (!exact_trace_power(a, x, m).is_zero()) return rep;
    }
  rep.transitive = true;
  return rep;
}

bool is_interior_derivation(const Algebra& a) {
  if (!is_left_symmetric(a))
    throw std::invalid_argument("is_interior_derivation: input not left-symmetric");
  int n = a.dim();
  LieAlgebra lie = sub_adjacent_lie(a);
  // rows indexed by (k,j): sum_l z_l B(l,j,k) = L(k,j)
  Matrix sys(n * n, n);
  for (int l = 0; l < n; ++l)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) sys.at(k * n + j, l) = lie.b(l, j, k);
  for (int i = 0; i < n; ++i) {
    Matrix li = left_mult(a, Vector::basis(n, i));
    Vector rhs(n * n);
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) rhs[k * n + j] = li.at(k, j);
    if (!solve(sys, rhs)) return false;
  }
  return true;
}

namespace {

// echelon span of flattened matrices, forward reduction only
class MatSpan {
 public:
  explicit MatSpan(int len) : len_(len) {}

  int dim() const { return static_cast<int>(rows_.size()); }

  bool insert(const Matrix& m) {
    std::vector<Scalar> v(static_cast<size_t>(len_));
    int n = m.rows();
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) v[static_cast<size_t>(r) * n + c] = m.at(r, c);
    reduce(v);
    int lead = leading(v);
    if (lead < 0) return false;
    Scalar inv = v[lead].inv();
    for (auto& s : v) s *= inv;
    rows_.push_back({lead, std::move(v)});
    std::sort(rows_.begin(), rows_.end(),
              [](const Row& a, const Row& b) { return a.lead < b.lead; });
    return true;
  }

 private:
  struct Row {
    int lead;
    std::vector<Scalar> v;
  };
  void reduce(std::vector<Scalar>& v) const {
    for (const Row& r : rows_) {
      if (v[r.lead].is_zero()) continue;
      Scalar f = v[r.lead];
      for (int i = r.lead; i < len_; ++i) v[i] -= f * r.v[i];
    }
  }
  static int leading(const std::vector<Scalar>& v) {
    for (size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) return static_cast<int>(i);
    return -1;
  }
  int len_;
  std::vector<Row> rows_;
};

}  // namespace

int multiplication_envelope_dim(const Algebra& a) {
  int n = a.dim();
  MatSpan span(n * n);
  std::vector<Matrix> members;
  auto add = [&](const Matrix& m) {
    if (span.insert(m)) members.push_back(m);
  };
  add(Matrix::identity(n));
  for (int i = 0; i < n; ++i) {
    add(left_mult(a, Vector::basis(n, i)));
    add(right_mult(a, Vector::basis(n, i)));
  }
  size_t done = 0;
  while (done < members.size() && span.dim() < n * n) {
    size_t hi = members.size();
    for (size_t x = done; x < hi && span.dim() < n * n; ++x)
      for (size_t y = 0; y < hi && span.dim() < n * n; ++y) {
        add(members[x] * members[y]);
        if (y >= done) break;  // pairs (x,y) with max(x,y) = x already covered
      }
    done = hi;
  }
  return span.dim();
}

bool is_simple(const Algebra& a) {
  int n = a.dim();
  if (n == 1) return !a.basis_product(0, 0).is_zero();
  return multiplication_envelope_dim(a) == n * n;
}

HInvariance h_invariance(const ExtendedSpec& spec) {
  if (classify_extended(spec).tag == ExtCase::NotLeftSymmetric)
    throw std::invalid_argument("h_invariance: spec is not left-symmetric");
  Algebra a = algebra_from_extended(spec);
  int n = a.dim();
  HInvariance out{true, true, true};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vector pij = a.basis_product(i, j);
      Vector pji = a.basis_product(j, i);
      for (int k = 0; k < n; ++k) {
        Vector ek = Vector::basis(n, k), ej = Vector::basis(n, j),
               ei = Vector::basis(n, i);
        Scalar lhs = spec.h.value(pij, ek);
        if (out.product_symmetric &&
            !(lhs == spec.h.value(pji, ek) &&
              lhs == spec.h.value(a.basis_product(i, k), ej)))
          out.product_symmetric = false;
        if (out.right_self_adjoint &&
            lhs != spec.h.value(ei, a.basis_product(k, j)))
          out.right_self_adjoint = false;
        if (out.left_skew_adjoint &&
            !(lhs + spec.h.value(ej, a.basis_product(i, k))).is_zero())
          out.left_skew_adjoint = false;
      }
    }
  return out;
}

PropertyReport property_report(const Algebra& a) {
  PropertyReport rep;
  IdentityFlags fl = identity_flags(a);
  rep.commutative = fl.commutative;
  rep.associative = fl.associative;
  rep.left_symmetric = is_left_symmetric(a);
  rep.novikov = is_novikov(a);
  rep.bisymmetric = is_bisymmetric(a);
  if (rep.left_symmetric) {
    TransitivityReport tr = is_transitive(a);
    rep.transitive = tr.transitive;
    rep.transitive_mode = tr.mode;
    rep.interior_derivation = is_interior_derivation(a);
  }
  rep.simple = is_simple(a);
  return rep;
}

bool is_r_matrix(const LieAlgebra& l, const Matrix& r) {
  int n = l.dim();
  if (r.rows() != n || r.cols() != n)
    throw std::invalid_argument("is_r_matrix: dim mismatch");
  for (int i = 0; i < n; ++i) {
    Vector ri = r * Vector::basis(n, i);
    for (int j = i + 1; j < n; ++j) {
      Vector rj = r * Vector::basis(n, j);
      Vector lhs = l.bracket(ri, rj);
      Vector rhs = r * (l.bracket(ri, Vector::basis(n, j)) +
                        l.bracket(Vector::basis(n, i), rj));
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

Algebra lsa_from_r_matrix(const LieAlgebra& l, const Matrix& r) {
  if (!is_r_matrix(l, r))
    throw std::invalid_argument("lsa_from_r_matrix: not an r-matrix");
  int n = l.dim();
  Algebra a(n);
  for (int i = 0; i < n; ++i) {
    Vector ri = r * Vector::basis(n, i);
    for (int j = 0; j < n; ++j) {
      Vector prod = l.bracket(ri, Vector::basis(n, j));
      for (int k = 0; k < n; ++k) a.set_c(i, j, k, prod[k]);
    }
  }
  return a;
}

}  // namespace lsa
