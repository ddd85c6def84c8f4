#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cuntz {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// n^e as an exact rational, e may be negative.
inline Rational rational_pow(const BigInt& base, long e) {
  if (base == 0) throw std::invalid_argument("rational_pow: zero base");
  BigInt p = boost::multiprecision::pow(base, static_cast<unsigned>(e < 0 ? -e : e));
  return e < 0 ? Rational(1, p) : Rational(p);
}

inline std::string rational_to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "p" or "p/q" with an optional leading sign on p.
inline Rational parse_rational(std::string_view s) {
  auto bad = [&] { throw std::invalid_argument("parse_rational: '" + std::string(s) + "'"); };
  auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(BigInt(std::string(s)));
    BigInt num{std::string(s.substr(0, slash))};
    BigInt den{std::string(s.substr(slash + 1))};
    if (den <= 0) bad();
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    bad();
  }
  return Rational();  // unreachable
}

// Complex numbers with exact rational coordinates.  This is the scalar
// field of every algebra element in the library; no floating point is
// involved anywhere.
struct ComplexQ {
  Rational re;
  Rational im;

  ComplexQ() = default;
  ComplexQ(Rational r) : re(std::move(r)) {}  // NOLINT: implicit from rationals
  ComplexQ(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  ComplexQ(long r, long i) : re(r), im(i) {}

  bool is_zero() const { return re == 0 && im == 0; }

  friend bool operator==(const ComplexQ&, const ComplexQ&) = default;

  ComplexQ operator-() const { return {-re, -im}; }
  ComplexQ& operator+=(const ComplexQ& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ComplexQ& operator-=(const ComplexQ& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend ComplexQ operator+(ComplexQ a, const ComplexQ& b) { return a += b; }
  friend ComplexQ operator-(ComplexQ a, const ComplexQ& b) { return a -= b; }
  friend ComplexQ operator*(const ComplexQ& a, const ComplexQ& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexQ operator/(const ComplexQ& a, const ComplexQ& b) {
    Rational d = b.re * b.re + b.im * b.im;
    if (d == 0) throw std::domain_error("ComplexQ: division by zero");
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }

  ComplexQ conj() const { return {re, -im}; }
  Rational norm_sq() const { return re * re + im * im; }
};

inline std::string complexq_to_string(const ComplexQ& c) {
  if (c.im == 0) return rational_to_string(c.re);
  std::string s = rational_to_string(c.re);
  s += (c.im < 0) ? "-" : "+";
  s += rational_to_string(c.im < 0 ? Rational(-c.im) : c.im);
  s += "i";
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const ComplexQ& c) {
  return os << complexq_to_string(c);
}

}  // namespace cuntz
