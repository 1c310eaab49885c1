#include "lsa/poly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace lsa {

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar Poly::eval(const Scalar& x) const {
  Scalar r;
  for (int i = degree(); i >= 0; --i) r = r * x + c_[i];
  return r;
}

std::complex<double> Poly::eval(std::complex<double> x) const {
  std::complex<double> r{};
  for (int i = degree(); i >= 0; --i) r = r * x + c_[i].to_complex();
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < a.c_.size()) c[i] += a.c_[i];
    if (i < b.c_.size()) c[i] += b.c_[i];
  }
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < a.c_.size()) c[i] += a.c_[i];
    if (i < b.c_.size()) c[i] -= b.c_[i];
  }
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(c));
}

Poly Poly::scaled(const Scalar& s) const {
  std::vector<Scalar> c = c_;
  for (auto& x : c) x *= s;
  return Poly(std::move(c));
}

Poly Poly::deflate(const Scalar& r) const {
  if (is_zero()) return Poly();
  std::vector<Scalar> q(c_.size() - 1);
  Scalar carry = c_.back();
  for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
    q[i] = carry;
    carry = c_[i] + carry * r;
  }
  if (!carry.is_zero()) throw std::invalid_argument("deflate: not a root");
  return Poly(std::move(q));
}

Poly char_poly(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: not square");
  int n = m.rows();
  std::vector<Scalar> coeffs(n + 1);
  coeffs[n] = Scalar(1);
  Matrix mk = m;
  for (int k = 1; k <= n; ++k) {
    Scalar tr;
    for (int i = 0; i < n; ++i) tr += mk.at(i, i);
    Scalar ck = -(tr / Scalar(k));
    coeffs[n - k] = ck;
    if (k < n) {
      Matrix step = mk;
      for (int i = 0; i < n; ++i) step.at(i, i) += ck;
      mk = m * step;
    }
  }
  return Poly(std::move(coeffs));
}

std::vector<std::complex<double>> complex_roots(const Poly& p) {
  int d = p.degree();
  if (d <= 0) return {};
  std::vector<std::complex<double>> a(d + 1);
  for (int i = 0; i <= d; ++i) a[i] = p[i].to_complex();
  return complex_roots(std::move(a));
}

std::vector<std::complex<double>> complex_roots(
    std::vector<std::complex<double>> a) {
  using C = std::complex<double>;
  while (a.size() > 1 && std::abs(a.back()) == 0.0) a.pop_back();
  int d = static_cast<int>(a.size()) - 1;
  if (d <= 0) return {};
  C lead = a[d];
  for (auto& x : a) x /= lead;
  auto eval = [&](C x) {
    C r{};
    for (int i = d; i >= 0; --i) r = r * x + a[i];
    return r;
  };
  std::vector<C> z(d);
  C seed(0.4, 0.9);
  C w = seed;
  for (int k = 0; k < d; ++k) {
    z[k] = w;
    w *= seed;
  }
  for (int iter = 0; iter < 600; ++iter) {
    double delta = 0;
    for (int k = 0; k < d; ++k) {
      C den = 1.0;
      for (int j = 0; j < d; ++j)
        if (j != k) den *= (z[k] - z[j]);
      if (std::abs(den) < 1e-300) {
        z[k] += C(1e-8, 1e-8);
        continue;
      }
      C step = eval(z[k]) / den;
      z[k] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-14) break;
  }
  std::sort(z.begin(), z.end(), [](C x, C y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  return z;
}

namespace {

std::string round12(std::complex<double> z) {
  char buf[80];
  double re = z.real(), im = z.imag();
  if (std::abs(re) < 5e-13) re = 0;
  if (std::abs(im) < 5e-13) im = 0;
  if (im == 0)
    std::snprintf(buf, sizeof buf, "%.12g", re);
  else
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", re, im);
  return buf;
}

}  // namespace

std::string RootLabel::str() const {
  return exact ? value.str() : ("~" + round12(approx));
}

bool operator==(const RootLabel& a, const RootLabel& b) {
  if (a.exact != b.exact) return false;
  if (a.exact) return a.value == b.value;
  return round12(a.approx) == round12(b.approx);
}

bool operator<(const RootLabel& a, const RootLabel& b) {
  if (a.exact != b.exact) return a.exact;  // exact labels first
  if (a.exact) return a.value < b.value;
  return round12(a.approx) < round12(b.approx);
}

std::vector<RootLabel> labeled_roots(const Poly& p) {
  std::vector<RootLabel> out;
  for (auto z : complex_roots(p)) {
    RootLabel lab;
    lab.approx = z;
    auto cand = scalar_from_complex(z, 100000, 1e-7);
    if (cand && p.eval(*cand).is_zero()) {
      lab.exact = true;
      lab.value = *cand;
    }
    out.push_back(std::move(lab));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --------- idempotent search ---------

namespace {

using C = std::complex<double>;

struct QuadRoots {
  bool any = false;  // equation degenerates to 0 = 0
  std::vector<Scalar> exact;
  std::vector<C> approx;
};

// roots of a s^2 + b s + c = 0 over the Gaussian rationals, with approximate
// fallback when the discriminant has no exact square root
QuadRoots solve_quadratic(const Scalar& a, const Scalar& b, const Scalar& c) {
  QuadRoots out;
  if (a.is_zero()) {
    if (b.is_zero()) {
      out.any = c.is_zero();
      return out;
    }
    out.exact.push_back(-(c / b));
    return out;
  }
  Scalar disc = b * b - Scalar(4) * a * c;
  if (auto sd = sqrt_exact(disc)) {
    Scalar twoa = Scalar(2) * a;
    out.exact.push_back((-b + *sd) / twoa);
    out.exact.push_back((-b - *sd) / twoa);
    return out;
  }
  C sd = std::sqrt(disc.to_complex());
  C twoa = (Scalar(2) * a).to_complex();
  out.approx.push_back(((-b).to_complex() + sd) / twoa);
  out.approx.push_back(((-b).to_complex() - sd) / twoa);
  return out;
}

struct PairSystem {
  int n, i, j;
  Vector p, q, r;  // e_i*e_i, e_i*e_j + e_j*e_i, e_j*e_j
  Scalar ek(int k, const Scalar& s, const Scalar& t) const {
    Scalar v = p[k] * s * s + q[k] * s * t + r[k] * t * t;
    if (k == i) v -= s;
    if (k == j) v -= t;
    return v;
  }
  bool check_exact(const Scalar& s, const Scalar& t) const {
    for (int k = 0; k < n; ++k)
      if (!ek(k, s, t).is_zero()) return false;
    return true;
  }
  bool check_approx(C s, C t) const {
    for (int k = 0; k < n; ++k) {
      C v = p[k].to_complex() * s * s + q[k].to_complex() * s * t +
            r[k].to_complex() * t * t;
      if (k == i) v -= s;
      if (k == j) v -= t;
      if (std::abs(v) > 1e-9) return false;
    }
    return true;
  }
};

void push_exact_hit(std::vector<IdempotentHit>& hits, Vector v) {
  if (v.is_zero()) return;
  for (const auto& h : hits)
    if (h.exact && h.value == v) return;
  IdempotentHit hit;
  hit.exact = true;
  std::vector<C> ap(v.dim());
  for (int k = 0; k < v.dim(); ++k) ap[k] = v[k].to_complex();
  hit.value = std::move(v);
  hit.approx = std::move(ap);
  hits.push_back(std::move(hit));
}

void push_approx_hit(std::vector<IdempotentHit>& hits, std::vector<C> v) {
  double mag = 0;
  for (auto x : v) mag = std::max(mag, std::abs(x));
  if (mag < 1e-9) return;
  for (const auto& h : hits) {
    double d = 0;
    for (size_t k = 0; k < v.size(); ++k)
      d = std::max(d, std::abs(h.approx[k] - v[k]));
    if (d < 1e-8) return;
  }
  IdempotentHit hit;
  hit.exact = false;
  hit.value = Vector(static_cast<int>(v.size()));
  hit.approx = std::move(v);
  hits.push_back(std::move(hit));
}

void collect_pair_solution(const PairSystem& sys, const Scalar& s,
                           const Scalar& t, std::vector<IdempotentHit>& hits) {
  if (!sys.check_exact(s, t)) return;
  Vector v(sys.n);
  v[sys.i] = s;
  v[sys.j] = t;
  push_exact_hit(hits, std::move(v));
}

void collect_pair_approx(const PairSystem& sys, C s, C t,
                         std::vector<IdempotentHit>& hits) {
  if (!sys.check_approx(s, t)) return;
  // try exact reconstruction first
  auto es = scalar_from_complex(s, 100000, 1e-7);
  auto et = scalar_from_complex(t, 100000, 1e-7);
  if (es && et && sys.check_exact(*es, *et)) {
    Vector v(sys.n);
    v[sys.i] = *es;
    v[sys.j] = *et;
    push_exact_hit(hits, std::move(v));
    return;
  }
  std::vector<C> v(sys.n);
  v[sys.i] = s;
  v[sys.j] = t;
  push_approx_hit(hits, std::move(v));
}

// all solutions of the pivot pair {E_i = 0, E_j = 0} at a fixed exact t
void solve_at_t(const PairSystem& sys, const Scalar& t,
                std::vector<IdempotentHit>& hits) {
  Scalar fa = sys.p[sys.i];
  Scalar fb = sys.q[sys.i] * t - Scalar(1);
  Scalar fc = sys.r[sys.i] * t * t;
  QuadRoots rs = solve_quadratic(fa, fb, fc);
  if (rs.any) {
    // F vanished identically; fall back to G, then to sampling
    Scalar ga = sys.p[sys.j];
    Scalar gb = sys.q[sys.j] * t;
    Scalar gc = sys.r[sys.j] * t * t - t;
    rs = solve_quadratic(ga, gb, gc);
    if (rs.any) {
      for (long sv : {1L, 2L, 3L}) collect_pair_solution(sys, Scalar(sv), t, hits);
      return;
    }
  }
  for (const auto& s : rs.exact) collect_pair_solution(sys, s, t, hits);
  for (auto s : rs.approx) collect_pair_approx(sys, s, t.to_complex(), hits);
}

void solve_pair_span(const PairSystem& sys, std::vector<IdempotentHit>& hits) {
  // F = E_i, G = E_j as quadratics in s with Poly coefficients in t:
  Poly f2 = Poly::constant(sys.p[sys.i]);
  Poly f1({Scalar(-1), sys.q[sys.i]});
  Poly f0({Scalar(0), Scalar(0), sys.r[sys.i]});
  Poly g2 = Poly::constant(sys.p[sys.j]);
  Poly g1({Scalar(0), sys.q[sys.j]});
  Poly g0({Scalar(0), Scalar(-1), sys.r[sys.j]});

  Poly a = f2 * g0 - g2 * f0;
  Poly b = f2 * g1 - g2 * f1;
  Poly c = f1 * g0 - g1 * f0;
  Poly res = a * a - b * c;

  if (res.is_zero()) {
    // positive-dimensional family: sample the parameter
    for (long tv : {1L, 2L, 3L, -1L}) solve_at_t(sys, Scalar(tv), hits);
    return;
  }
  for (const auto& lab : labeled_roots(res)) {
    if (lab.exact) {
      if (lab.value.is_zero()) continue;  // axis solutions live in 1-spans
      solve_at_t(sys, lab.value, hits);
    } else {
      C t = lab.approx;
      C fa = sys.p[sys.i].to_complex();
      C fb = sys.q[sys.i].to_complex() * t - 1.0;
      C fc = sys.r[sys.i].to_complex() * t * t;
      if (std::abs(fa) > 1e-12) {
        C sd = std::sqrt(fb * fb - 4.0 * fa * fc);
        collect_pair_approx(sys, (-fb + sd) / (2.0 * fa), t, hits);
        collect_pair_approx(sys, (-fb - sd) / (2.0 * fa), t, hits);
      } else if (std::abs(fb) > 1e-12) {
        collect_pair_approx(sys, -fc / fb, t, hits);
      }
    }
  }
}

}  // namespace

std::vector<IdempotentHit> find_idempotents(const Algebra& alg) {
  int n = alg.dim();
  std::vector<IdempotentHit> hits;
  // 1-dimensional spans: t^2 (e_i e_i) = t e_i
  for (int i = 0; i < n; ++i) {
    Vector sq = alg.basis_product(i, i);
    if (sq.is_zero() || sq[i].is_zero()) continue;
    bool proportional = true;
    for (int k = 0; k < n; ++k)
      if (k != i && !sq[k].is_zero()) proportional = false;
    if (!proportional) continue;
    Vector v(n);
    v[i] = sq[i].inv();
    push_exact_hit(hits, std::move(v));
  }
  // 2-dimensional spans
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      PairSystem sys{n, i, j, alg.basis_product(i, i),
                     alg.basis_product(i, j) + alg.basis_product(j, i),
                     alg.basis_product(j, j)};
      solve_pair_span(sys, hits);
    }
  return hits;
}

}  // namespace lsa
