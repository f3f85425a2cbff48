#ifndef ANNLAT_SCALAR_HPP
#define ANNLAT_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>

namespace annlat {

using Rational = boost::multiprecision::cpp_rational;

/// A complex number with exact rational real and imaginary parts.
/// cpp_rational keeps fractions reduced with positive denominator, so the
/// representation is canonical and operator== is exact structural equality.
struct Scalar {
  Rational re;
  Rational im;

  Scalar() = default;
  Scalar(Rational r) : re(std::move(r)) {}
  Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  Scalar(long r) : re(r) {}
  Scalar(long r, long i) : re(r), im(i) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  Scalar conj() const { return Scalar(re, -im); }

  /// |z|^2, exact.
  Rational norm2() const { return re * re + im * im; }

  Scalar operator-() const { return Scalar(-re, -im); }

  Scalar& operator+=(const Scalar& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Row-major tie-breaking order for deterministic pivoting; not the complex
  /// field order (there is none), just a total order on representations.
  friend bool operator<(const Scalar& a, const Scalar& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }

  std::complex<double> to_complex() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }
};

/// Parses a reduced-fraction string "p/q" or integer "p". Throws ParseError on
/// malformed input or zero denominator.
Rational parse_rational(const std::string& text);

/// Formats as "p/q" (or "p" when the denominator is 1).
std::string format_rational(const Rational& value);

std::string format_scalar(const Scalar& value);

/// Best rational approximation of x with denominator <= max_den (continued
/// fractions). Returns false when no candidate lands within tol of x.
bool rationalize(double x, Rational& out, long max_den = 1000000,
                 double tol = 1e-7);

} // namespace annlat

#endif
