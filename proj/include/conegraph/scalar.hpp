#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <variant>

#include "conegraph/errors.hpp"

namespace conegraph {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact element a + b*sqrt(3) of the quadratic field Q(sqrt3), or a
/// double with an absolute tolerance. All predicate values of the m=3
/// constructions live in Q(sqrt3), so exact mode never needs roots.
class Scalar {
 public:
  struct Exact {
    Rational a;  // rational part
    Rational b;  // coefficient of sqrt(3)
  };
  struct Approx {
    double value = 0.0;
    double eps = 0.0;  // |value| <= eps means "cannot tell the sign"
  };

  Scalar() : rep_(Exact{Rational(0), Rational(0)}) {}

  static Scalar exact(Rational a, Rational b = Rational(0)) {
    return Scalar(Exact{std::move(a), std::move(b)});
  }
  static Scalar from_int(long long v) { return exact(Rational(v)); }
  static Scalar approx(double value, double eps) {
    return Scalar(Approx{value, eps});
  }

  bool is_exact() const { return std::holds_alternative<Exact>(rep_); }
  const Exact& exact_rep() const;
  const Approx& approx_rep() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;

  /// Exact sign for exact mode. Float mode throws AmbiguousSign when the
  /// value lies inside its tolerance band instead of guessing zero.
  int sign() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  bool operator<(const Scalar& o) const { return (*this - o).sign() < 0; }
  bool operator>(const Scalar& o) const { return (*this - o).sign() > 0; }
  bool operator<=(const Scalar& o) const { return (*this - o).sign() <= 0; }
  bool operator>=(const Scalar& o) const { return (*this - o).sign() >= 0; }

  double to_double() const;
  std::string str() const;

  /// sign(a + b*sqrt3) by rational arithmetic only.
  static int sign_quadratic(const Rational& a, const Rational& b);

 private:
  explicit Scalar(Exact e) : rep_(std::move(e)) {}
  explicit Scalar(Approx f) : rep_(f) {}

  std::variant<Exact, Approx> rep_;
};

/// Parses "123", "-4.25", or "n/d" into an exact rational.
Rational rational_from_string(const std::string& text);

/// Canonical text form: integer when the denominator is 1, "n/d" otherwise.
std::string rational_to_string(const Rational& value);

}  // namespace conegraph
