#include "annlat/scalar.hpp"

#include "annlat/error.hpp"

#include <cmath>
#include <cstdlib>

namespace annlat {

Scalar& Scalar::operator/=(const Scalar& o) {
  Rational n2 = o.norm2();
  if (n2 == 0) throw Error(ErrorCode::ParseError, "division by zero scalar");
  // z / w = z * conj(w) / |w|^2
  *this *= o.conj();
  re /= n2;
  im /= n2;
  return *this;
}

Rational parse_rational(const std::string& text) {
  auto bad = [&]() -> Error {
    return Error(ErrorCode::ParseError, "invalid rational '" + text + "'");
  };
  if (text.empty()) throw bad();
  std::string num = text, den = "1";
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  auto check_int = [&](const std::string& s) {
    if (s.empty()) throw bad();
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw bad();
    for (std::size_t k = start; k < s.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) throw bad();
  };
  check_int(num);
  check_int(den);
  boost::multiprecision::cpp_int n(num), d(den);
  if (d == 0) throw bad();
  return Rational(n, d);
}

std::string format_rational(const Rational& value) {
  std::string s = numerator(value).str();
  if (denominator(value) != 1) s += "/" + denominator(value).str();
  return s;
}

std::string format_scalar(const Scalar& value) {
  if (value.im == 0) return format_rational(value.re);
  return format_rational(value.re) + (value.im > 0 ? "+" : "-") +
         format_rational(abs(value.im)) + "i";
}

bool rationalize(double x, Rational& out, long max_den, double tol) {
  if (!std::isfinite(x)) return false;
  // Continued-fraction convergents p/q of x until q exceeds max_den.
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double v = x;
  for (int iter = 0; iter < 64; ++iter) {
    double fa = std::floor(v);
    if (fa > 9e17 || fa < -9e17) break;
    long long a = static_cast<long long>(fa);
    long long p2 = a * p1 + p0;
    long long q2 = a * q1 + q0;
    if (q2 > max_den || q2 < 0) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double err = std::abs(x - static_cast<double>(p1) / static_cast<double>(q1));
    if (err <= tol) {
      out = Rational(p1, q1);
      return true;
    }
    double frac = v - fa;
    if (frac < 1e-15) break;
    v = 1.0 / frac;
  }
  if (q1 > 0) {
    double err = std::abs(x - static_cast<double>(p1) / static_cast<double>(q1));
    if (err <= tol) {
      out = Rational(p1, q1);
      return true;
    }
  }
  return false;
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "dimension-mismatch";
    case ErrorCode::NoUnit: return "no-unit";
    case ErrorCode::NotPositive: return "not-positive";
    case ErrorCode::NotInAlgebra: return "not-in-algebra";
    case ErrorCode::NotInSubalgebra: return "not-in-subalgebra";
    case ErrorCode::NotAProjection: return "not-a-projection";
    case ErrorCode::SeedNotCommuting: return "seed-not-commuting";
    case ErrorCode::AlgebraMismatch: return "algebra-mismatch";
    case ErrorCode::MalformedPoset: return "malformed-poset";
    case ErrorCode::NotOrthomodular: return "not-orthomodular";
    case ErrorCode::ParseError: return "parse-error";
    case ErrorCode::UnknownSuite: return "unknown-suite";
  }
  return "unknown";
}

} // namespace annlat
