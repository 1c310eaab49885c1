#include "lsa/scalar.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace lsa {

Scalar::Scalar(long num, long den) : re_(num, den), im_(0) {
  if (den == 0) throw std::domain_error("Scalar: zero denominator");
  re_.canonicalize();
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Scalar Scalar::inv() const {
  mpq_class n = norm2();
  if (n == 0) throw std::domain_error("Scalar: division by zero");
  return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inv(); }

std::string Scalar::str() const {
  if (im_ == 0) return re_.get_str();
  std::string im_part = im_.get_str() + "i";
  if (re_ == 0) return im_part;
  if (im_ > 0) return re_.get_str() + "+" + im_part;
  return re_.get_str() + im_part;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.str();
}

namespace {

mpq_class parse_rational(const std::string& tok) {
  if (tok.empty()) throw std::invalid_argument("empty rational");
  for (char c : tok) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' ||
          c == '+'))
      throw std::invalid_argument("bad rational: " + tok);
  }
  mpq_class q;
  if (q.set_str(tok, 10) != 0)
    throw std::invalid_argument("bad rational: " + tok);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + tok);
  q.canonicalize();
  return q;
}

// Token ends with 'i'; "" / "+" / "-" prefixes mean +-1.
mpq_class parse_imag_token(std::string tok) {
  tok.pop_back();  // strip 'i'
  if (tok.empty() || tok == "+") return mpq_class(1);
  if (tok == "-") return mpq_class(-1);
  return parse_rational(tok);
}

}  // namespace

Scalar Scalar::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty scalar");

  // Split at the last top-level +/- (no exponents in rational syntax).
  size_t split = std::string::npos;
  for (size_t p = 1; p < s.size(); ++p) {
    if ((s[p] == '+' || s[p] == '-') && s[p - 1] != '/' && s[p - 1] != '+' &&
        s[p - 1] != '-')
      split = p;
  }
  if (split == std::string::npos) {
    if (s.back() == 'i') return Scalar(mpq_class(0), parse_imag_token(s));
    return Scalar(parse_rational(s));
  }
  std::string left = s.substr(0, split);
  std::string right = s.substr(split);
  if (right.back() == 'i' && left.back() != 'i')
    return Scalar(parse_rational(left), parse_imag_token(right));
  if (left.back() == 'i' && right.back() != 'i')
    return Scalar(parse_rational(right), parse_imag_token(left));
  throw std::invalid_argument("bad scalar: " + text);
}

std::optional<mpq_class> sqrt_exact(const mpq_class& q) {
  if (q < 0) return std::nullopt;
  if (q == 0) return mpq_class(0);
  const mpz_class num = q.get_num(), den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  mpq_class r(rn, rd);
  r.canonicalize();
  return r;
}

std::optional<Scalar> sqrt_exact(const Scalar& z) {
  if (z.is_zero()) return Scalar(0);
  if (z.is_real()) {
    if (z.re() > 0) {
      auto r = sqrt_exact(z.re());
      if (!r) return std::nullopt;
      return Scalar(*r);
    }
    auto r = sqrt_exact(mpq_class(-z.re()));
    if (!r) return std::nullopt;
    return Scalar(mpq_class(0), *r);
  }
  // w = x + yi with x^2 = (a + |z|)/2, y = b/(2x).
  auto r = sqrt_exact(z.norm2());
  if (!r) return std::nullopt;
  mpq_class x2 = (z.re() + *r) / 2;
  auto x = sqrt_exact(x2);
  if (!x || *x == 0) return std::nullopt;
  mpq_class y = z.im() / (2 * (*x));
  Scalar w(*x, y);
  if (w * w != z) return std::nullopt;
  return w;
}

std::optional<mpq_class> rational_from_double(double x, long max_den,
                                              double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  // Continued-fraction convergents with bounded denominator.
  double v = x;
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;  // h_{-2}/k_{-2}, h_{-1}/k_{-1}
  for (int iter = 0; iter < 64; ++iter) {
    double fl = std::floor(v);
    if (std::abs(fl) > 9e17) return std::nullopt;
    long a = static_cast<long>(fl);
    long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den || q2 < 0) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double rem = v - fl;
    if (rem < 1e-15) break;
    v = 1.0 / rem;
  }
  if (q1 <= 0) return std::nullopt;
  mpq_class q(p1, q1);
  q.canonicalize();
  if (std::abs(q.get_d() - x) <= tol * std::max(1.0, std::abs(x))) return q;
  return std::nullopt;
}

std::optional<Scalar> scalar_from_complex(std::complex<double> z, long max_den,
                                          double tol) {
  auto re = rational_from_double(z.real(), max_den, tol);
  auto im = rational_from_double(z.imag(), max_den, tol);
  if (!re || !im) return std::nullopt;
  return Scalar(*re, *im);
}

}  // namespace lsa
