#pragma once

// Number kernels shared by the predicate implementations. Every predicate
// is written once as a template and instantiated over:
//   QI  -- __int128 elements of Z[sqrt3], for small integer coordinates
//   QR  -- exact rationals (boost cpp_rational) for everything else exact
//   QF  -- double with a propagated absolute error bound; signs inside the
//          error band raise AmbiguousSign instead of guessing.
// The three lanes evaluate the same formulas, so exact lanes agree bit for
// bit and the float lane can only differ by erroring out.

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "conegraph/errors.hpp"
#include "conegraph/point.hpp"
#include "conegraph/scalar.hpp"

namespace conegraph::detail {

using i128 = __int128;

// ------------------------------------------------------------------ QI

struct QI {
  i128 a = 0;  // rational part
  i128 b = 0;  // sqrt(3) coefficient

  QI() = default;
  QI(i128 a_, i128 b_ = 0) : a(a_), b(b_) {}

  QI operator+(const QI& o) const { return {a + o.a, b + o.b}; }
  QI operator-(const QI& o) const { return {a - o.a, b - o.b}; }
  QI operator-() const { return {-a, -b}; }
  QI operator*(const QI& o) const {
    return {a * o.a + 3 * b * o.b, a * o.b + b * o.a};
  }
  bool is_zero() const { return a == 0 && b == 0; }
};

inline int sign_i128(i128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// ------------------------------------------------------------------ QR

struct QR {
  Rational a;
  Rational b;

  QR() : a(0), b(0) {}
  QR(Rational a_, Rational b_ = Rational(0)) : a(std::move(a_)), b(std::move(b_)) {}

  QR operator+(const QR& o) const { return {a + o.a, b + o.b}; }
  QR operator-(const QR& o) const { return {a - o.a, b - o.b}; }
  QR operator-() const { return {-a, -b}; }
  QR operator*(const QR& o) const {
    return {a * o.a + 3 * b * o.b, a * o.b + b * o.a};
  }
  bool is_zero() const { return a == 0 && b == 0; }
};

inline int q_sign(const QR& q) { return Scalar::sign_quadratic(q.a, q.b); }

inline BigInt bigint_from_i128(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v)
                            : static_cast<unsigned __int128>(v);
  BigInt r = BigInt(static_cast<std::uint64_t>(u >> 64));
  r <<= 64;
  r += BigInt(static_cast<std::uint64_t>(u));
  return neg ? BigInt(-r) : r;
}

inline int q_sign(const QI& q) {
  int sa = sign_i128(q.a);
  int sb = sign_i128(q.b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  constexpr i128 limit = i128(1) << 62;
  if (q.a > limit || q.a < -limit || q.b > limit || q.b < -limit) {
    // Out of the squaring-safe range; decide in rationals instead.
    return q_sign(QR(Rational(bigint_from_i128(q.a)),
                     Rational(bigint_from_i128(q.b))));
  }
  i128 lhs = q.a * q.a;
  i128 rhs = 3 * q.b * q.b;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

// ------------------------------------------------------------------ QF

struct QF {
  double v = 0.0;
  double err = 0.0;

  QF() = default;
  QF(double v_, double err_) : v(v_), err(err_) {}

  QF operator+(const QF& o) const {
    return {v + o.v, err + o.err + std::abs(v + o.v) * 1e-16};
  }
  QF operator-(const QF& o) const {
    return {v - o.v, err + o.err + std::abs(v - o.v) * 1e-16};
  }
  QF operator-() const { return {-v, err}; }
  QF operator*(const QF& o) const {
    double p = v * o.v;
    return {p, err * std::abs(o.v) + o.err * std::abs(v) + err * o.err +
                   std::abs(p) * 1e-16};
  }
  bool is_zero() const { return v == 0.0; }
};

inline int q_sign(const QF& q) {
  if (std::abs(q.v) <= q.err) {
    fail(ErrorCode::AmbiguousSign, "float margin " + std::to_string(q.v) +
                                       " within tolerance " +
                                       std::to_string(q.err));
  }
  return q.v > 0 ? 1 : -1;
}

/// Sign with the tolerance band collapsed: used by lenient float paths.
inline int q_sign_forced(const QF& q) { return q.v > 0 ? 1 : (q.v < 0 ? -1 : 0); }
inline bool q_ambiguous(const QF& q) { return std::abs(q.v) <= q.err; }

// ------------------------------------------------------------------ vectors

template <class Q>
struct V2 {
  Q x, y;
  V2 operator-(const V2& o) const { return {x - o.x, y - o.y}; }
  V2 operator+(const V2& o) const { return {x + o.x, y + o.y}; }
  V2 operator-() const { return {-x, -y}; }
};

template <class Q>
Q cross(const V2<Q>& u, const V2<Q>& w) {
  return u.x * w.y - u.y * w.x;
}

template <class Q>
Q dot(const V2<Q>& u, const V2<Q>& w) {
  return u.x * w.x + u.y * w.y;
}

// ------------------------------------------------------------------ tables

/// Cones are labeled clockwise starting at north: azimuth is measured
/// clockwise from the +y axis, cone i spans (start_i, start_i + 360/m) with
/// start_i = i*360/m, shifted back by half a cone when m is odd so that
/// cone 0 is bisected by +y. Boundaries then sit at consecutive multiples
/// of 360/m from the -y axis.
bool exact_capable_m(int m);

struct RatDir {
  Rational ax, bx, ay, by;  // (ax + bx*sqrt3, ay + by*sqrt3)
};

struct RatConeTable {
  int m = 0;
  std::vector<RatDir> left;        // scaled left boundary ray per cone
  std::vector<RatDir> right;       // scaled right boundary ray per cone
  std::vector<RatDir> bis_scaled;  // positively scaled bisector (ordering only)
  bool unit_ok = false;            // true when bisectors are exact in Q(sqrt3)
  std::vector<RatDir> bis_unit;    // valid only when unit_ok
};

const RatConeTable& rat_cone_table(int m);  // requires exact_capable_m(m)

template <class Q>
struct ConeTable {
  int m = 0;
  std::vector<V2<Q>> left, right, bis_scaled;
};

const ConeTable<QI>& cone_table_qi(int m);
const ConeTable<QR>& cone_table_qr(int m);
ConeTable<QF> cone_table_qf(int m);  // any m >= 2

// ------------------------------------------------------------------ loaders

inline V2<QI> load_qi(const Point& p) { return {QI(p.xi), QI(p.yi)}; }

inline QR qr_of(const Scalar& s) {
  const auto& e = s.exact_rep();
  return QR(e.a, e.b);
}

inline V2<QR> load_qr(const Point& p) { return {qr_of(p.x), qr_of(p.y)}; }

/// exact_eps is the absolute tolerance attached when an exact coordinate is
/// demoted to float (non-exact m); float coordinates keep their own eps.
inline V2<QF> load_qf(const Point& p, double exact_eps) {
  auto lift = [&](const Scalar& s) {
    if (s.is_exact()) return QF(s.to_double(), exact_eps);
    const auto& f = s.approx_rep();
    return QF(f.value, f.eps);
  };
  return {lift(p.x), lift(p.y)};
}

enum class KernelKind { Int, Rat, Flt };

/// m = 0 means no cone table is involved in the predicate.
KernelKind pick_kernel(const PointSet& ps, int m);
KernelKind pick_kernel(std::initializer_list<const Point*> pts, int m);

/// Tolerance used when exact coordinates must be evaluated in floats.
double float_fallback_eps(std::initializer_list<const Point*> pts);

}  // namespace conegraph::detail
