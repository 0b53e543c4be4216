#include "kernels.hpp"

#include <algorithm>
#include <mutex>

namespace conegraph::detail {

namespace {

constexpr double kPi = 3.14159265358979323846;

// 2*sin(30k degrees) as (a, b) meaning a + b*sqrt(3).
struct HalfQ {
  int a;
  int b;
};
constexpr HalfQ kSin2[12] = {
    {0, 0},  {1, 0},  {0, 1},  {2, 0},  {0, 1},  {1, 0},
    {0, 0},  {-1, 0}, {0, -1}, {-2, 0}, {0, -1}, {-1, 0},
};

RatDir dir2_exact(int az_deg) {
  int k = ((az_deg % 360) + 360) % 360;
  if (k % 30 != 0) fail(ErrorCode::Internal, "azimuth not a multiple of 30");
  int i = k / 30;
  HalfQ sx = kSin2[i];
  HalfQ sy = kSin2[(i + 3) % 12];  // cos = sin shifted by 90 degrees
  return RatDir{Rational(sx.a), Rational(sx.b), Rational(sy.a), Rational(sy.b)};
}

// Positively scaled direction for azimuths at odd multiples of 15 degrees:
// (tan(az) * s, s) with s = sign(cos az). tan of 15/45/75 degrees lies in
// Q(sqrt3), which is what makes m in {4, 12} ordering-exact.
RatDir dir_scaled_15(int az_deg) {
  int k = ((az_deg % 360) + 360) % 360;
  if (k % 15 != 0 || k % 30 == 0)
    fail(ErrorCode::Internal, "azimuth not an odd multiple of 15");
  int t = k % 180;  // 15, 45, 75, 105, 135, 165
  Rational ta, tb;
  switch (t) {
    case 15: ta = 2; tb = -1; break;    //  2 - sqrt3
    case 45: ta = 1; tb = 0; break;
    case 75: ta = 2; tb = 1; break;     //  2 + sqrt3
    case 105: ta = -2; tb = -1; break;
    case 135: ta = -1; tb = 0; break;
    case 165: ta = -2; tb = 1; break;   // -(2 - sqrt3)
    default: fail(ErrorCode::Internal, "unreachable tan case");
  }
  int s = (k < 90 || k > 270) ? 1 : -1;  // sign of cos(az); az=90/270 excluded
  return RatDir{ta * s, tb * s, Rational(s), Rational(0)};
}

RatConeTable build_rat_table(int m) {
  RatConeTable tbl;
  tbl.m = m;
  const int w = 360 / m;  // exact m all divide 360
  const int shift = (m % 2 == 1) ? w / 2 : 0;
  tbl.unit_ok = true;
  for (int i = 0; i < m; ++i) {
    int start = i * w - shift;
    tbl.left.push_back(dir2_exact(start));
    tbl.right.push_back(dir2_exact(start + w));
    int bis = start + w / 2;
    int bn = ((bis % 360) + 360) % 360;
    if (bn % 30 == 0) {
      RatDir d = dir2_exact(bis);
      tbl.bis_scaled.push_back(d);
      // unit bisector = scaled / 2
      tbl.bis_unit.push_back(RatDir{d.ax / 2, d.bx / 2, d.ay / 2, d.by / 2});
    } else {
      tbl.unit_ok = false;
      tbl.bis_scaled.push_back(dir_scaled_15(bis));
    }
  }
  if (!tbl.unit_ok) tbl.bis_unit.clear();
  return tbl;
}

template <class Q>
V2<Q> convert_dir(const RatDir& d);

template <>
V2<QI> convert_dir<QI>(const RatDir& d) {
  auto to_int = [](const Rational& r) {
    if (boost::multiprecision::denominator(r) != 1)
      fail(ErrorCode::Internal, "scaled direction is not integral");
    return static_cast<i128>(
        static_cast<long long>(boost::multiprecision::numerator(r)));
  };
  return {QI(to_int(d.ax), to_int(d.bx)), QI(to_int(d.ay), to_int(d.by))};
}

template <>
V2<QR> convert_dir<QR>(const RatDir& d) {
  return {QR(d.ax, d.bx), QR(d.ay, d.by)};
}

template <class Q>
ConeTable<Q> convert_table(const RatConeTable& src) {
  ConeTable<Q> out;
  out.m = src.m;
  for (int i = 0; i < src.m; ++i) {
    out.left.push_back(convert_dir<Q>(src.left[i]));
    out.right.push_back(convert_dir<Q>(src.right[i]));
    out.bis_scaled.push_back(convert_dir<Q>(src.bis_scaled[i]));
  }
  return out;
}

std::mutex table_mutex;

}  // namespace

bool exact_capable_m(int m) {
  return m == 2 || m == 3 || m == 4 || m == 6 || m == 12;
}

const RatConeTable& rat_cone_table(int m) {
  if (!exact_capable_m(m)) fail(ErrorCode::Internal, "m has no exact table");
  std::lock_guard<std::mutex> lock(table_mutex);
  static std::map<int, RatConeTable> cache;
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, build_rat_table(m)).first;
  return it->second;
}

const ConeTable<QI>& cone_table_qi(int m) {
  const RatConeTable& rat = rat_cone_table(m);
  std::lock_guard<std::mutex> lock(table_mutex);
  static std::map<int, ConeTable<QI>> cache;
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, convert_table<QI>(rat)).first;
  return it->second;
}

const ConeTable<QR>& cone_table_qr(int m) {
  const RatConeTable& rat = rat_cone_table(m);
  std::lock_guard<std::mutex> lock(table_mutex);
  static std::map<int, ConeTable<QR>> cache;
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, convert_table<QR>(rat)).first;
  return it->second;
}

ConeTable<QF> cone_table_qf(int m) {
  ConeTable<QF> tbl;
  tbl.m = m;
  const double w = 2.0 * kPi / m;
  const double shift = (m % 2 == 1) ? w / 2 : 0.0;
  auto dir = [](double az) {
    // azimuth clockwise from +y: x = sin, y = cos
    return V2<QF>{QF(std::sin(az), std::abs(std::sin(az)) * 4e-16 + 1e-18),
                  QF(std::cos(az), std::abs(std::cos(az)) * 4e-16 + 1e-18)};
  };
  for (int i = 0; i < m; ++i) {
    double start = i * w - shift;
    tbl.left.push_back(dir(start));
    tbl.right.push_back(dir(start + w));
    tbl.bis_scaled.push_back(dir(start + w / 2));
  }
  return tbl;
}

KernelKind pick_kernel(const PointSet& ps, int m) {
  if (ps.mode() == CoordMode::Float || !exact_capable_m(m))
    return KernelKind::Flt;
  for (const auto& p : ps.points())
    if (!p.small_int) return KernelKind::Rat;
  return KernelKind::Int;
}

KernelKind pick_kernel(std::initializer_list<const Point*> pts, int m) {
  if (m != 0 && !exact_capable_m(m)) return KernelKind::Flt;
  bool all_small = true;
  for (const Point* p : pts) {
    if (!p->x.is_exact() || !p->y.is_exact()) return KernelKind::Flt;
    all_small = all_small && p->small_int;
  }
  return all_small ? KernelKind::Int : KernelKind::Rat;
}

double float_fallback_eps(std::initializer_list<const Point*> pts) {
  double scale = 1.0;
  for (const Point* p : pts) {
    scale = std::max(scale, std::abs(p->x.to_double()));
    scale = std::max(scale, std::abs(p->y.to_double()));
  }
  return 1e-9 * scale;
}

}  // namespace conegraph::detail
