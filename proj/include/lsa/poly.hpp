#pragma once

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "lsa/algebra.hpp"

namespace lsa {

/// Dense univariate polynomial over exact scalars, coefficient of x^i at [i].
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(Scalar s) { return Poly({std::move(s)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  bool is_zero() const { return c_.empty(); }
  const Scalar& operator[](int i) const { return c_[i]; }
  const std::vector<Scalar>& coeffs() const { return c_; }

  Scalar eval(const Scalar& x) const;
  std::complex<double> eval(std::complex<double> x) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Scalar& s) const;
  /// Quotient by (x - r); remainder must be zero (r an exact root).
  Poly deflate(const Scalar& r) const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

/// Exact characteristic polynomial det(xI - M) (Faddeev-LeVerrier).
Poly char_poly(const Matrix& m);

/// All complex roots (with multiplicity) by Durand-Kerner; deterministic.
std::vector<std::complex<double>> complex_roots(const Poly& p);
/// Same, for floating coefficients (coefficient of x^i at [i]).
std::vector<std::complex<double>> complex_roots(
    std::vector<std::complex<double>> coeffs);

/// A root label: exact scalar when recognized and verified, otherwise the
/// approximate value rounded to 12 digits.
struct RootLabel {
  bool exact = false;
  Scalar value;                   // set when exact
  std::complex<double> approx{};  // always set
  std::string str() const;
};
bool operator==(const RootLabel& a, const RootLabel& b);
bool operator<(const RootLabel& a, const RootLabel& b);

/// Roots of p with exact reconstruction attempted per root; sorted
/// canonically.
std::vector<RootLabel> labeled_roots(const Poly& p);

/// An idempotent found by the span heuristic.
struct IdempotentHit {
  bool exact = false;
  Vector value{1};                           // set when exact
  std::vector<std::complex<double>> approx;  // always set
};

/// Solves x*x = x on every 1- and 2-dimensional span of basis vectors by
/// exact quadratic elimination (resultant of the two pivot equations, exact
/// roots where the discriminants are exact squares, approximate roots
/// otherwise). Positive-dimensional solution families are sampled at a few
/// parameter values. Nonzero solutions only, deduplicated.
std::vector<IdempotentHit> find_idempotents(const Algebra& a);

}  // namespace lsa
