#include <algorithm>
#include <numeric>
#include <string>

#include "conegraph/graph.hpp"
#include "predicates.hpp"

namespace conegraph {

using detail::ConeTable;
using detail::KernelKind;
using detail::QF;
using detail::QI;
using detail::QR;
using detail::V2;

namespace {

template <class Q>
bool raw_less(const Q& a, const Q& b) {
  if constexpr (std::is_same_v<Q, QF>) {
    return a.v < b.v;
  } else {
    return q_sign(a - b) < 0;
  }
}

/// 0 when the two values tie (or, in float mode, cannot be separated).
template <class Q>
int separation(const Q& a, const Q& b) {
  Q d = a - b;
  if constexpr (std::is_same_v<Q, QF>) {
    return detail::q_ambiguous(d) ? 0 : detail::q_sign_forced(d);
  } else {
    return q_sign(d);
  }
}

/// Prefix-minimum Fenwick tree over ids ordered by a key array.
template <class Q>
class PrefixMin {
 public:
  PrefixMin(int n, const std::vector<Q>* keys) : tree_(n + 1, -1), keys_(keys) {}

  void insert(int pos, int id) {
    for (int i = pos + 1; i < static_cast<int>(tree_.size()); i += i & -i) {
      if (tree_[i] < 0 || raw_less((*keys_)[id], (*keys_)[tree_[i]]))
        tree_[i] = id;
    }
  }

  int query(int prefix_len) const {  // min id over positions [0, prefix_len)
    int best = -1;
    for (int i = prefix_len; i > 0; i -= i & -i) {
      if (tree_[i] >= 0 &&
          (best < 0 || raw_less((*keys_)[tree_[i]], (*keys_)[best])))
        best = tree_[i];
    }
    return best;
  }

 private:
  std::vector<int> tree_;
  const std::vector<Q>* keys_;
};

template <class Q>
void check_distinct(const std::vector<Q>& val, std::vector<int> order,
                    const char* what, int cone) {
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return raw_less(val[a], val[b]); });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (separation(val[order[i]], val[order[i - 1]]) == 0)
      fail(ErrorCode::Degenerate,
           "points " + std::to_string(order[i - 1]) + " and " +
               std::to_string(order[i]) + " share the " + what +
               " coordinate of cone class " + std::to_string(cone));
  }
}

template <class Q>
std::vector<DirectedEdge> sweep_k(const PointSet& ps, int m,
                                  const ConeTable<Q>& tbl, double eps) {
  const int n = ps.size();
  std::vector<DirectedEdge> edges;
  std::vector<V2<Q>> coords;
  coords.reserve(n);
  for (int i = 0; i < n; ++i) coords.push_back(detail::load_v2<Q>(ps[i], eps));

  std::vector<Q> u(n), w(n), k(n);
  std::vector<int> order(n), w_rank(n);
  for (int cone = 0; cone < m; ++cone) {
    for (int i = 0; i < n; ++i) {
      u[i] = cross(tbl.left[cone], coords[i]);
      w[i] = cross(tbl.right[cone], coords[i]);
      k[i] = dot(tbl.bis_scaled[cone], coords[i]);
    }
    std::iota(order.begin(), order.end(), 0);
    check_distinct(u, order, "left-boundary", cone);
    check_distinct(w, order, "right-boundary", cone);
    check_distinct(k, order, "bisector-projection", cone);

    // Ranks by the right-boundary coordinate; the query "w(q) > w(p)"
    // becomes a prefix over positions of descending w.
    std::vector<int> by_w = order;
    std::sort(by_w.begin(), by_w.end(),
              [&](int a, int b) { return raw_less(w[a], w[b]); });
    for (int r = 0; r < n; ++r) w_rank[by_w[r]] = n - 1 - r;

    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return raw_less(u[a], u[b]); });
    PrefixMin<Q> structure(n, &k);
    for (int p : order) {
      // Inserted points have u(q) < u(p); among those with w(q) > w(p)
      // (reversed rank < w_rank[p]) take the smallest bisector projection.
      int q = structure.query(w_rank[p]);
      if (q >= 0) edges.push_back(DirectedEdge{p, q, cone});
      structure.insert(w_rank[p], p);
    }
  }
  return edges;
}

}  // namespace

ConeGraph build_sweep(const PointSet& points, int m, Policy policy) {
  if (m < 2) fail(ErrorCode::PreconditionUnmet, "m must be at least 2");
  // The sweep relies on globally distinct class coordinates, which lenient
  // inputs may lack; the reference scan handles those.
  if (policy == Policy::Lenient) return build(points, m, Flavor::Theta, policy);
  PointSet ps = points;
  if (ps.mode() == CoordMode::Exact && !exact_capable(m)) ps = ps.as_float();
  double eps = 1e-9 * std::max(1.0, ps.bbox_diagonal());
  std::vector<DirectedEdge> edges;
  switch (detail::pick_kernel(ps, m)) {
    case KernelKind::Int:
      edges = sweep_k<QI>(ps, m, detail::cone_table_qi(m), eps);
      break;
    case KernelKind::Rat:
      edges = sweep_k<QR>(ps, m, detail::cone_table_qr(m), eps);
      break;
    case KernelKind::Flt: {
      auto tbl = detail::cone_table_qf(m);
      edges = sweep_k<QF>(ps, m, tbl, eps);
      break;
    }
  }
  return ConeGraph::assemble(std::move(ps), m, Flavor::Theta, policy, false,
                             std::move(edges));
}

}  // namespace conegraph
