#pragma once

// Deterministic random generators shared by the unit tests and the
// acceptance suite: exact scalars/vectors/matrices and extended-spec
// templates for each of the seven construction cases, with optional random
// change of basis.

#include <random>

#include "lsa/catalog.hpp"

namespace lsa::testgen {

using Rng = std::mt19937_64;

inline Scalar small_scalar(Rng& rng, bool allow_imag = true) {
  std::uniform_int_distribution<long> num(-3, 3);
  std::uniform_int_distribution<long> den(1, 3);
  std::uniform_int_distribution<int> imag(0, 3);
  Scalar s(num(rng), den(rng));
  if (allow_imag && imag(rng) == 0)
    s += Scalar(mpq_class(0), mpq_class(num(rng), den(rng)));
  return s;
}

inline Scalar nonzero_scalar(Rng& rng, bool allow_imag = true) {
  while (true) {
    Scalar s = small_scalar(rng, allow_imag);
    if (!s.is_zero()) return s;
  }
}

inline Vector random_vector(Rng& rng, int n, bool allow_imag = true) {
  Vector v(n);
  for (int i = 0; i < n; ++i) v[i] = small_scalar(rng, allow_imag);
  return v;
}

inline Vector nonzero_vector(Rng& rng, int n, bool allow_imag = true) {
  while (true) {
    Vector v = random_vector(rng, n, allow_imag);
    if (!v.is_zero()) return v;
  }
}

inline Matrix random_matrix(Rng& rng, int rows, int cols,
                            bool allow_imag = true) {
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = small_scalar(rng, allow_imag);
  return m;
}

inline Matrix random_invertible(Rng& rng, int n, bool allow_imag = true) {
  while (true) {
    Matrix m = random_matrix(rng, n, n, allow_imag);
    if (rank(m) == n) return m;
  }
}

inline Matrix random_symmetric(Rng& rng, int n, bool allow_imag = true) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Scalar s = small_scalar(rng, allow_imag);
      m.at(i, j) = s;
      m.at(j, i) = s;
    }
  return m;
}

inline Algebra random_algebra(Rng& rng, int n, bool allow_imag = true) {
  Algebra a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) a.set_c(i, j, k, small_scalar(rng, allow_imag));
  return a;
}

// ---- extended-spec case templates ----

// Virtual (normalized-basis) data pushed through an invertible change of
// basis B: c = B c^, f = B^-T f^, gram = B^-T G^ B^-1.
inline ExtendedSpec transform_spec(const LinearFunctional& fv,
                                   const LinearFunctional& gv, const Matrix& gramv,
                                   const Vector& cv, const Matrix& b) {
  int n = b.rows();
  Matrix binv = *inverse(b);
  Matrix bit = binv.transpose();
  Matrix gram = bit * gramv * binv;
  Vector c = b * cv;
  Vector fcol(n), gcol(n);
  for (int i = 0; i < n; ++i) {
    fcol[i] = fv[i];
    gcol[i] = gv[i];
  }
  Vector f = bit * fcol, g = bit * gcol;
  std::vector<Scalar> fs(n), gs(n);
  for (int i = 0; i < n; ++i) {
    fs[i] = f[i];
    gs[i] = g[i];
  }
  return ExtendedSpec(LinearFunctional(fs), LinearFunctional(gs),
                      SymBilinearForm(gram), c);
}

struct CaseSample {
  ExtendedSpec spec;
  CatalogId predicted;  // normal form predicted from the template data
};

inline CaseSample sample_case(Rng& rng, int tag, int n, bool transform = true,
                              bool allow_imag = true) {
  LinearFunctional f(n), g(n);
  Matrix gram(n, n);
  Vector c(n);
  CatalogId predicted = CatalogId::make(Family::Trivial);
  switch (tag) {
    case 1: {
      // f = g = 0, h(.,c) = 0: c = e1, gram = 0 (+) S with S != 0
      Matrix s(n - 1, n - 1);
      int r = 0;
      while (r == 0) {
        s = random_symmetric(rng, n - 1, allow_imag);
        r = rank(s);
      }
      for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) gram.at(i, j) = s.at(i - 1, j - 1);
      c[0] = Scalar(1);
      predicted = CatalogId::with_k(Family::A1, r);
      break;
    }
    case 2: {
      gram.at(0, 0) = Scalar(1);
      c = random_vector(rng, n, allow_imag);
      c[0] = nonzero_scalar(rng, allow_imag);
      predicted = CatalogId::make(Family::A2);
      break;
    }
    case 3: {
      SymBilinearForm h = SymBilinearForm::zero(n);
      while (true) {
        gram = random_symmetric(rng, n, allow_imag);
        if (gram.is_zero()) continue;
        h = SymBilinearForm(gram);
        c = nonzero_vector(rng, n, allow_imag);
        if (!h.pair_with(c).is_zero()) break;
      }
      LinearFunctional hc = h.pair_with(c);
      for (int i = 0; i < n; ++i) f[i] = hc[i];
      int rk = rank(gram);
      Scalar hcc = h.value(c, c);
      if (!hcc.is_zero())
        predicted = rk == n ? CatalogId::make(Family::A3_1)
                            : CatalogId::with_k(Family::A3_2, rk - 1);
      else
        predicted = CatalogId::with_k(Family::A3_3, rk - 2);
      break;
    }
    case 4: {
      gram.at(0, 0) = Scalar(1);
      Scalar alpha = nonzero_scalar(rng, allow_imag);
      Scalar a1;
      do {
        a1 = small_scalar(rng, allow_imag);
      } while (a1 == alpha);
      c = random_vector(rng, n, allow_imag);
      c[0] = a1;
      if (c.is_zero()) c[1] = Scalar(1);
      f[0] = a1 - alpha;
      if (a1.is_zero())
        predicted = CatalogId::make(Family::A4_1);
      else
        predicted =
            CatalogId::a4((Scalar(2) * a1 - alpha) / (a1 - alpha));
      break;
    }
    case 5: {
      gram.at(0, 1) = Scalar(1);
      gram.at(1, 0) = Scalar(1);
      for (int i = 1; i < n; ++i)
        for (int j = i; j < n; ++j) {
          Scalar s = small_scalar(rng, allow_imag);
          gram.at(i, j) = s;
          gram.at(j, i) = s;
        }
      for (int j = 2; j < n; ++j) {
        Scalar s = small_scalar(rng, allow_imag);
        gram.at(0, j) = s;
        gram.at(j, 0) = s;
      }
      c[0] = Scalar(1);
      for (int i = 0; i < n; ++i) g[i] = -gram.at(i, 0);
      predicted = CatalogId::with_k(Family::A5, rank(gram) - 2);
      break;
    }
    case 6: {
      gram.at(0, 0) = Scalar(1);
      c = random_vector(rng, n, allow_imag);
      c[0] = Scalar(0);
      if (c.is_zero()) c[1] = Scalar(1);
      g[0] = nonzero_scalar(rng, allow_imag);
      predicted = CatalogId::make(Family::A6);
      break;
    }
    case 7: {
      Scalar alpha = nonzero_scalar(rng, allow_imag);
      Scalar fc;
      while (true) {
        for (int i = 0; i < n; ++i) f[i] = small_scalar(rng, allow_imag);
        c = nonzero_vector(rng, n, allow_imag);
        fc = f.value(c);
        if (!fc.is_zero()) break;
      }
      for (int i = 0; i < n; ++i) g[i] = alpha * f[i];
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gram.at(i, j) = -(f[i] * f[j]) / fc;
      predicted = CatalogId::a7(alpha);
      break;
    }
    default: throw std::invalid_argument("sample_case: tag must be 1..7");
  }
  if (!transform)
    return {ExtendedSpec(f, g, SymBilinearForm(gram), c), predicted};
  Matrix b = random_invertible(rng, n, allow_imag);
  return {transform_spec(f, g, gram, c, b), predicted};
}

// ---- mutated specs violating the left-symmetry identities ----

// violates f(y)g(x) = g(y)f(x) (and with it the compatibility identity;
// a symmetric h makes a lone violation of the former impossible)
inline ExtendedSpec mutate_fg_symmetric(Rng& rng, int n) {
  while (true) {
    CaseSample s = sample_case(rng, 7, n, true);
    LinearFunctional g = s.spec.g;
    int i = std::uniform_int_distribution<int>(0, n - 1)(rng);
    g[i] += Scalar(1);
    ExtendedSpec mut(s.spec.f, g, s.spec.h, s.spec.c);
    bool violated = false;
    for (int x = 0; x < n && !violated; ++x)
      for (int y = x + 1; y < n && !violated; ++y)
        violated = mut.f[y] * mut.g[x] != mut.g[y] * mut.f[x];
    if (violated) return mut;
  }
}

// violates exactly f(y)g(z) + g(c)h(y,z) = 0 (the rank-1 shape keeps the
// alignment identity intact for any scale of h)
inline ExtendedSpec mutate_fg_h_compat(Rng& rng, int n) {
  CaseSample s = sample_case(rng, 7, n, true);
  Matrix gram = s.spec.h.gram();
  gram *= Scalar(2);  // wrong scale: -2 f(x)f(y)/f(c)
  return ExtendedSpec(s.spec.f, s.spec.g, SymBilinearForm(gram), s.spec.c);
}

// violates exactly the h-alignment identity: f = 0, g != 0 with g(c) = 0,
// and phi = g + h(.,c) not aligned with h
inline ExtendedSpec mutate_h_alignment(Rng& rng, int n) {
  while (true) {
    Matrix gram = random_symmetric(rng, n);
    if (rank(gram) < 2) continue;
    SymBilinearForm h(gram);
    Vector c = nonzero_vector(rng, n);
    LinearFunctional f(n), g(n);
    Vector gv = random_vector(rng, n);
    // project to g(c) = 0
    Scalar gc;
    int p = -1;
    for (int i = 0; i < n; ++i)
      if (!c[i].is_zero()) p = i;
    Scalar acc;
    for (int i = 0; i < n; ++i) acc += gv[i] * c[i];
    gv[p] -= acc / c[p];
    for (int i = 0; i < n; ++i) g[i] = gv[i];
    if (g.is_zero()) continue;
    ExtendedSpec mut(f, g, h, c);
    // keep only instances where the alignment identity really fails
    LinearFunctional hc = h.pair_with(c);
    std::vector<Scalar> phi(n);
    for (int i = 0; i < n; ++i) phi[i] = g[i] + hc[i];
    bool violated = false;
    for (int x = 0; x < n && !violated; ++x)
      for (int y = x + 1; y < n && !violated; ++y)
        for (int z = 0; z < n && !violated; ++z)
          violated = phi[y] * h.at(x, z) != phi[x] * h.at(y, z);
    if (violated) return mut;
  }
}

}  // namespace lsa::testgen
