#pragma once

#include <gmpxx.h>

#include <complex>
#include <iosfwd>
#include <optional>
#include <string>

namespace lsa {

/// Exact complex scalar: rational real and imaginary parts, always in
/// canonical reduced form. Equality is exact.
class Scalar {
 public:
  Scalar() : re_(0), im_(0) {}
  Scalar(int v) : re_(v), im_(0) {}
  Scalar(long v) : re_(v), im_(0) {}
  Scalar(long num, long den);
  Scalar(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }
  Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// |z|^2, an exact nonnegative rational.
  mpq_class norm2() const { return re_ * re_ + im_ * im_; }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);  // throws std::domain_error on /0

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  /// Lexicographic (re, im) order; used only for canonical sorting.
  friend bool operator<(const Scalar& a, const Scalar& b) {
    int c = cmp(a.re_, b.re_);
    if (c != 0) return c < 0;
    return cmp(a.im_, b.im_) < 0;
  }

  Scalar inv() const;

  std::complex<double> to_complex() const {
    return {re_.get_d(), im_.get_d()};
  }

  /// "p/q", "p/q+r/si", "-2i", "0", ...
  std::string str() const;

  /// Parses the CLI scalar syntax: "p/q" and "p/q+r/s i" (spaces ignored,
  /// bare "i"/"-i" allowed). Throws std::invalid_argument on bad input.
  static Scalar parse(const std::string& text);

 private:
  mpq_class re_, im_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Exact square root of a nonnegative rational, when it exists.
std::optional<mpq_class> sqrt_exact(const mpq_class& q);
/// Exact Gaussian-rational square root of z, when it exists.
std::optional<Scalar> sqrt_exact(const Scalar& z);

/// Nearest rational with denominator <= max_den reproducing x to tol;
/// nullopt when no such rational exists.
std::optional<mpq_class> rational_from_double(double x, long max_den = 1000000,
                                              double tol = 1e-9);
std::optional<Scalar> scalar_from_complex(std::complex<double> z,
                                          long max_den = 1000000,
                                          double tol = 1e-9);

}  // namespace lsa
