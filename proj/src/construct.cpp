#include "lsa/construct.hpp"

#include <stdexcept>

namespace lsa {

PairSpec::PairSpec(LinearFunctional f_, LinearFunctional g_)
    : f(std::move(f_)), g(std::move(g_)) {
  if (f.dim() != g.dim()) throw std::invalid_argument("PairSpec: dim mismatch");
  if (f.dim() < 2) throw std::invalid_argument("PairSpec: dim must be >= 2");
}

ExtendedSpec::ExtendedSpec(LinearFunctional f_, LinearFunctional g_,
                           SymBilinearForm h_, Vector c_)
    : f(std::move(f_)), g(std::move(g_)), h(std::move(h_)), c(std::move(c_)) {
  if (f.dim() != g.dim() || f.dim() != h.dim() || f.dim() != c.dim())
    throw std::invalid_argument("ExtendedSpec: dim mismatch");
  if (f.dim() < 2) throw std::invalid_argument("ExtendedSpec: dim must be >= 2");
  if (c.is_zero()) throw std::invalid_argument("ExtendedSpec: c must be nonzero");
  if (h.is_zero()) throw std::invalid_argument("ExtendedSpec: h must be nonzero");
}

PairResult algebra_from_pair(const PairSpec& spec) {
  int n = spec.dim();
  Algebra a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      a.set_c(i, j, i, a.c(i, j, i) + spec.f[j]);
      a.set_c(i, j, j, a.c(i, j, j) + spec.g[i]);
    }
  bool ls = spec.f.is_zero() || spec.g.is_zero();
  if (ls) {
    // associativity is part of the verdict; confirm on basis triples
    for (int i = 0; i < n && ls; ++i)
      for (int j = 0; j < n && ls; ++j)
        for (int k = 0; k < n && ls; ++k)
          ls = associator(a, Vector::basis(n, i), Vector::basis(n, j),
                          Vector::basis(n, k))
                   .is_zero();
    if (!ls) throw std::logic_error("pair algebra: associativity check failed");
  }
  return {std::move(a), ls ? PairVerdict::LeftSymmetricAssociative
                           : PairVerdict::NotLeftSymmetric};
}

Matrix normalized_basis_for_functional(const LinearFunctional& g) {
  if (g.is_zero())
    throw std::invalid_argument("normalized_basis_for_functional: g = 0");
  int n = g.dim();
  int m = 0;
  while (g[m].is_zero()) ++m;
  Matrix t(n, n);
  Vector first(n);
  first[m] = g[m].inv();
  t.set_col(0, first);
  int col = 1;
  for (int i = 0; i < n; ++i) {
    if (i == m) continue;
    Vector w = Vector::basis(n, i);
    if (!g[i].is_zero()) w -= (g[i] / g[m]) * Vector::basis(n, m);
    t.set_col(col++, w);
  }
  return t;
}

std::vector<Matrix> matrix_representation(int n, Side side) {
  if (n < 2) throw std::invalid_argument("matrix_representation: n < 2");
  std::vector<Matrix> ms;
  ms.reserve(n);
  for (int i = 0; i < n; ++i)
    ms.push_back(side == Side::Left ? Matrix::unit(n, 0, i)
                                    : Matrix::unit(n, i, 0));
  // representation property against the one-sided algebra of that side
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix want(n, n);
      if (side == Side::Left && i == 0) want = ms[j];
      if (side == Side::Right && j == 0) want = ms[i];
      if (!(ms[i] * ms[j] == want))
        throw std::logic_error("matrix_representation: product mismatch");
    }
  return ms;
}

std::optional<LieAlgebra> lie_bracket_from_pair(const LinearFunctional& f,
                                                const LinearFunctional& g) {
  if (f.dim() != g.dim())
    throw std::invalid_argument("lie_bracket_from_pair: dim mismatch");
  int n = f.dim();
  for (int i = 0; i < n; ++i)
    if (f[i] != -g[i]) return std::nullopt;
  std::vector<Scalar> b(static_cast<size_t>(n) * n * n);
  auto at = [&](int i, int j, int k) -> Scalar& {
    return b[(static_cast<size_t>(i) * n + j) * n + k];
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      at(i, j, j) += f[i];
      at(i, j, i) += g[j];
    }
  return LieAlgebra(n, std::move(b));
}

Algebra algebra_from_extended(const ExtendedSpec& spec) {
  int n = spec.dim();
  Algebra a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      a.set_c(i, j, j, a.c(i, j, j) + spec.f[i]);
      a.set_c(i, j, i, a.c(i, j, i) + spec.g[j]);
      const Scalar& hij = spec.h.at(i, j);
      if (hij.is_zero()) continue;
      for (int k = 0; k < n; ++k)
        if (!spec.c[k].is_zero()) a.set_c(i, j, k, a.c(i, j, k) + hij * spec.c[k]);
    }
  return a;
}

namespace {

// the three identity checks, on basis tuples (multilinearity suffices)

bool holds_fg_symmetric(const ExtendedSpec& s) {  // f(y)g(x) = g(y)f(x)
  int n = s.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (s.f[j] * s.g[i] != s.g[j] * s.f[i]) return false;
  return true;
}

bool holds_fg_h_compat(const ExtendedSpec& s) {  // f(y)g(z) + g(c)h(y,z) = 0
  int n = s.dim();
  Scalar gc = s.g.value(s.c);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(s.f[i] * s.g[j] + gc * s.h.at(i, j)).is_zero()) return false;
  return true;
}

bool holds_h_alignment(const ExtendedSpec& s) {
  // [(g-f)(y) + h(y,c)] h(x,z) = [(g-f)(x) + h(x,c)] h(y,z)
  int n = s.dim();
  LinearFunctional hc = s.h.pair_with(s.c);
  std::vector<Scalar> phi(n);
  for (int i = 0; i < n; ++i) phi[i] = s.g[i] - s.f[i] + hc[i];
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (phi[y] * s.h.at(x, z) != phi[x] * s.h.at(y, z)) return false;
  return true;
}

// index of a basis vector with largest |h(e_m,e_m)|^2; -1 if the diagonal
// is entirely zero (impossible for rank-1 h)
int diagonal_pivot(const SymBilinearForm& h) {
  int best = -1;
  mpq_class mag(0);
  for (int i = 0; i < h.dim(); ++i) {
    mpq_class m = h.at(i, i).norm2();
    if (m > mag) {
      mag = m;
      best = i;
    }
  }
  return best;
}

}  // namespace

CaseVerdict classify_extended(const ExtendedSpec& spec) {
  CaseVerdict out;
  bool f0 = spec.f.is_zero(), g0 = spec.g.is_zero();
  if (!holds_fg_symmetric(spec) || !holds_fg_h_compat(spec) ||
      !holds_h_alignment(spec))
    return out;  // NotLeftSymmetric

  LinearFunctional hc = spec.h.pair_with(spec.c);
  if (f0 && g0) {
    if (hc.is_zero()) {
      out.tag = ExtCase::Case1;
      out.h_rank = form_rank(spec.h);
    } else {
      out.tag = ExtCase::Case2;
    }
    return out;
  }
  if (g0) {  // f != 0
    if (spec.f == hc) {
      out.tag = ExtCase::Case3;
      out.h_rank = form_rank(spec.h);
      return out;
    }
    // rank-1 h; alpha and a1 at the diagonal pivot, normalized when the
    // pivot value has an exact square root
    int m = diagonal_pivot(spec.h);
    if (m < 0) return out;  // defensive: conditions cannot hold
    Scalar d = spec.h.at(m, m);
    Scalar a1 = hc[m];
    Scalar alpha = a1 - spec.f[m];
    if (auto sd = sqrt_exact(d)) {
      a1 = a1 / *sd;
      alpha = alpha / *sd;
    }
    out.tag = ExtCase::Case4;
    out.alpha = alpha;
    out.a1 = a1;
    return out;
  }
  if (f0) {  // g != 0
    bool g_is_minus_hc = true;
    for (int i = 0; i < spec.dim(); ++i)
      if (spec.g[i] != -hc[i]) {
        g_is_minus_hc = false;
        break;
      }
    if (g_is_minus_hc) {
      out.tag = ExtCase::Case5;
      out.h_rank = form_rank(spec.h);
    } else {
      out.tag = ExtCase::Case6;
    }
    return out;
  }
  // f != 0, g != 0: g = alpha f with alpha from any f-nonzero index
  int m = 0;
  while (spec.f[m].is_zero()) ++m;
  out.tag = ExtCase::Case7;
  out.alpha = spec.g[m] / spec.f[m];
  return out;
}

Algebra algebra_from_inner_product(const Vector& a) {
  int n = a.dim();
  if (n < 2) throw std::invalid_argument("algebra_from_inner_product: dim < 2");
  if (a.is_zero()) throw std::invalid_argument("algebra_from_inner_product: a = 0");
  Algebra alg(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      alg.set_c(i, j, j, alg.c(i, j, j) + a[i]);  // (u,a)v term
      alg.set_c(i, i, j, alg.c(i, i, j) + a[j]);  // (u,v)a term
    }
  return alg;
}

ExtendedSpec inner_product_spec(const Vector& a) {
  int n = a.dim();
  if (n < 2 || a.is_zero())
    throw std::invalid_argument("inner_product_spec: need dim >= 2, a != 0");
  LinearFunctional f(n);
  for (int i = 0; i < n; ++i) f[i] = a[i];
  return ExtendedSpec(std::move(f), LinearFunctional(n),
                      SymBilinearForm(Matrix::identity(n)), a);
}

}  // namespace lsa
