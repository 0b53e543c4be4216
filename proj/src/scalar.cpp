#include "conegraph/scalar.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace conegraph {

namespace {

constexpr double kSqrt3 = 1.7320508075688772935;

int rational_sign(const Rational& r) { return r.sign(); }

}  // namespace

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Degenerate: return "degenerate";
    case ErrorCode::AmbiguousSign: return "ambiguous-sign";
    case ErrorCode::IdenticalPoints: return "identical-points";
    case ErrorCode::WrongCone: return "wrong-cone";
    case ErrorCode::Overlap: return "overlap";
    case ErrorCode::DegenerateGeometry: return "degenerate-geometry";
    case ErrorCode::NotAnEdge: return "not-an-edge";
    case ErrorCode::CycleDetected: return "cycle-detected";
    case ErrorCode::PreconditionUnmet: return "precondition-unmet";
    case ErrorCode::Disconnected: return "disconnected";
    case ErrorCode::UnknownProperty: return "unknown-property";
    case ErrorCode::ExhaustedRetries: return "exhausted-retries";
    case ErrorCode::ParseError: return "parse-error";
    case ErrorCode::DuplicatePoint: return "duplicate-point";
    case ErrorCode::MixedMode: return "mixed-mode";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

const Scalar::Exact& Scalar::exact_rep() const {
  if (!is_exact()) fail(ErrorCode::MixedMode, "float scalar has no exact representation");
  return std::get<Exact>(rep_);
}

const Scalar::Approx& Scalar::approx_rep() const {
  if (is_exact()) fail(ErrorCode::MixedMode, "exact scalar has no float representation");
  return std::get<Approx>(rep_);
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (is_exact() && o.is_exact()) {
    const auto& l = std::get<Exact>(rep_);
    const auto& r = std::get<Exact>(o.rep_);
    return Scalar(Exact{l.a + r.a, l.b + r.b});
  }
  if (!is_exact() && !o.is_exact()) {
    const auto& l = std::get<Approx>(rep_);
    const auto& r = std::get<Approx>(o.rep_);
    return Scalar(Approx{l.value + r.value, l.eps + r.eps});
  }
  fail(ErrorCode::MixedMode, "cannot mix exact and float scalars");
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  if (is_exact()) {
    const auto& e = std::get<Exact>(rep_);
    return Scalar(Exact{-e.a, -e.b});
  }
  const auto& f = std::get<Approx>(rep_);
  return Scalar(Approx{-f.value, f.eps});
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_exact() && o.is_exact()) {
    const auto& l = std::get<Exact>(rep_);
    const auto& r = std::get<Exact>(o.rep_);
    // (a1 + b1 s)(a2 + b2 s) = a1 a2 + 3 b1 b2 + (a1 b2 + b1 a2) s,  s^2 = 3
    return Scalar(Exact{l.a * r.a + 3 * l.b * r.b, l.a * r.b + l.b * r.a});
  }
  if (!is_exact() && !o.is_exact()) {
    const auto& l = std::get<Approx>(rep_);
    const auto& r = std::get<Approx>(o.rep_);
    double v = l.value * r.value;
    double eps = l.eps * std::abs(r.value) + r.eps * std::abs(l.value) + l.eps * r.eps;
    return Scalar(Approx{v, eps});
  }
  fail(ErrorCode::MixedMode, "cannot mix exact and float scalars");
}

int Scalar::sign_quadratic(const Rational& a, const Rational& b) {
  int sa = rational_sign(a);
  int sb = rational_sign(b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite rational signs: compare a^2 against 3 b^2. Equality would mean
  // sqrt(3) is rational, so it only occurs at a = b = 0 (handled above).
  Rational lhs = a * a;
  Rational rhs = 3 * b * b;
  int cmp = lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
  if (cmp == 0) return 0;
  return cmp > 0 ? sa : sb;
}

int Scalar::sign() const {
  if (is_exact()) {
    const auto& e = std::get<Exact>(rep_);
    return sign_quadratic(e.a, e.b);
  }
  const auto& f = std::get<Approx>(rep_);
  if (std::abs(f.value) <= f.eps) {
    fail(ErrorCode::AmbiguousSign,
         "float value " + std::to_string(f.value) + " within tolerance " +
             std::to_string(f.eps));
  }
  return f.value > 0 ? 1 : -1;
}

bool Scalar::operator==(const Scalar& o) const {
  if (is_exact() && o.is_exact()) {
    const auto& l = std::get<Exact>(rep_);
    const auto& r = std::get<Exact>(o.rep_);
    return l.a == r.a && l.b == r.b;
  }
  if (!is_exact() && !o.is_exact()) {
    return std::get<Approx>(rep_).value == std::get<Approx>(o.rep_).value;
  }
  fail(ErrorCode::MixedMode, "cannot compare exact and float scalars");
}

double Scalar::to_double() const {
  if (is_exact()) {
    const auto& e = std::get<Exact>(rep_);
    return static_cast<double>(e.a) + static_cast<double>(e.b) * kSqrt3;
  }
  return std::get<Approx>(rep_).value;
}

std::string Scalar::str() const {
  if (!is_exact()) {
    std::ostringstream os;
    os << std::get<Approx>(rep_).value;
    return os.str();
  }
  const auto& e = std::get<Exact>(rep_);
  if (e.b == 0) return rational_to_string(e.a);
  std::ostringstream os;
  if (e.a != 0) os << rational_to_string(e.a) << (e.b > 0 ? "+" : "");
  os << rational_to_string(e.b) << "*sqrt3";
  return os.str();
}

Rational rational_from_string(const std::string& text) {
  if (text.empty()) fail(ErrorCode::ParseError, "empty number");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    try {
      BigInt num(text.substr(0, slash));
      BigInt den(text.substr(slash + 1));
      if (den == 0) fail(ErrorCode::ParseError, "zero denominator in '" + text + "'");
      return Rational(num, den);
    } catch (const std::runtime_error&) {
      fail(ErrorCode::ParseError, "bad fraction '" + text + "'");
    }
  }
  // Decimal form: sign, integer part, optional fractional part.
  std::string digits;
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  std::string int_part, frac_part;
  for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i)
    int_part += text[i];
  if (i < text.size() && text[i] == '.') {
    ++i;
    for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i)
      frac_part += text[i];
  }
  if (i != text.size() || (int_part.empty() && frac_part.empty()))
    fail(ErrorCode::ParseError, "bad number '" + text + "'");
  BigInt num(int_part.empty() ? std::string("0") : int_part);
  BigInt den(1);
  for (char c : frac_part) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  Rational r(num, den);
  return negative ? -r : r;
}

std::string rational_to_string(const Rational& value) {
  std::ostringstream os;
  if (boost::multiprecision::denominator(value) == 1) {
    os << boost::multiprecision::numerator(value);
  } else {
    os << boost::multiprecision::numerator(value) << "/"
       << boost::multiprecision::denominator(value);
  }
  return os.str();
}

}  // namespace conegraph
