#include "polynet/geometry.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "polynet/errors.hpp"
#include "polynet/exact_lp.hpp"

namespace polynet {

RatMatrix reflection_matrix(int n, int label) {
  if (n < 2) throw ValidationError("reflection_matrix: n must be at least 2");
  if (label < 1 || label > n) {
    throw ValidationError("reflection_matrix: label " + std::to_string(label) + " outside {1.." +
                          std::to_string(n) + "}");
  }
  RatMatrix m = RatMatrix::identity(static_cast<std::size_t>(n));
  const Rational off(2, n - 1);
  const auto col = static_cast<std::size_t>(label - 1);
  for (std::size_t r = 0; r < static_cast<std::size_t>(n); ++r) m(r, col) = r == col ? Rational(-1) : off;
  return m;
}

FacetPlacement::FacetPlacement(RatMatrix coords) : coords_(std::move(coords)) {
  const std::size_t n = coords_.order();
  for (std::size_t c = 0; c < n; ++c) {
    mpq_class s = 0;
    for (std::size_t r = 0; r < n; ++r) s += coords_(r, c).raw();
    if (s != 1) {
      throw ValidationError("placement column " + std::to_string(c + 1) +
                            " does not lie in the hyperplane (sum " + s.get_str() + ")");
    }
  }
}

bool is_nondegenerate(const FacetPlacement& f) {
  const std::size_t n = f.coords().order();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = f.coords()(r, c).raw();
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(a[p][k]) == 0) ++p;
    if (p == n) return false;
    std::swap(a[p], a[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(a[i][k]) == 0) continue;
      const mpq_class factor = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= factor * a[k][j];
    }
  }
  return true;
}

namespace {

// parent x M_label touches only column `label`: that column becomes
// (2/(n-1)) * (sum of the other columns) - (old column).
RatMatrix reflect_column(const RatMatrix& parent, int label) {
  const std::size_t n = parent.order();
  const auto col = static_cast<std::size_t>(label - 1);
  const mpq_class off(2, static_cast<unsigned long>(n - 1));
  RatMatrix out = parent;
  for (std::size_t r = 0; r < n; ++r) {
    mpq_class others = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (c != col) others += parent(r, c).raw();
    }
    out(r, col) = Rational(mpq_class(off * others - parent(r, col).raw()));
  }
  return out;
}

}  // namespace

FacetPlacement reflect_placement(const FacetPlacement& parent, int label) {
  if (label < 1 || label > parent.dimension()) {
    throw ValidationError("reflect_placement: label " + std::to_string(label) + " out of range");
  }
  return FacetPlacement(reflect_column(parent.coords(), label));
}

Unfolding embed_chain(const UnfoldList& list) {
  const int n = list.dimension();
  if (n < 2) throw ValidationError("embed_chain: dimension must be at least 2");
  Unfolding u;
  u.n = n;
  u.placements.reserve(list.size() + 1);
  u.placements.emplace_back(RatMatrix::identity(static_cast<std::size_t>(n)));
  RatMatrix current = RatMatrix::identity(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < list.size(); ++k) {
    current = reflect_column(current, list[k]);
    u.placements.emplace_back(current);
    u.edges.push_back({k, k + 1, list[k]});
  }
  return u;
}

Unfolding embed_tree(int n, const RidgeTree& tree) {
  if (n < 2) throw ValidationError("embed_tree: dimension must be at least 2");
  if (tree.facet_count == 0 || tree.root >= tree.facet_count) {
    throw ValidationError("embed_tree: root outside the facet range");
  }
  if (tree.edges.size() + 1 != tree.facet_count) {
    throw ValidationError("embed_tree: a tree on " + std::to_string(tree.facet_count) +
                          " facets needs " + std::to_string(tree.facet_count - 1) + " edges");
  }
  std::vector<std::vector<std::pair<std::size_t, int>>> adj(tree.facet_count);
  for (const auto& e : tree.edges) {
    if (e.parent >= tree.facet_count || e.child >= tree.facet_count || e.parent == e.child) {
      throw ValidationError("embed_tree: edge endpoint out of range");
    }
    if (e.label < 1 || e.label > n) throw ValidationError("embed_tree: ridge label out of range");
    adj[e.parent].emplace_back(e.child, e.label);
    adj[e.child].emplace_back(e.parent, e.label);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  Unfolding u;
  u.n = n;
  std::vector<std::size_t> order_of(tree.facet_count, tree.facet_count);
  std::deque<std::size_t> queue{tree.root};
  order_of[tree.root] = 0;
  u.placements.emplace_back(RatMatrix::identity(static_cast<std::size_t>(n)));
  while (!queue.empty()) {
    const std::size_t f = queue.front();
    queue.pop_front();
    for (const auto& [g, label] : adj[f]) {
      if (order_of[g] != tree.facet_count) continue;
      order_of[g] = u.placements.size();
      u.edges.push_back({order_of[f], order_of[g], label});
      u.placements.emplace_back(reflect_column(u.placements[order_of[f]].coords(), label));
      queue.push_back(g);
    }
  }
  if (u.placements.size() != tree.facet_count) throw ValidationError("embed_tree: tree is disconnected");
  return u;
}

RidgeTree orthoplex_ridge_tree(const SpanningTree& tree, int root) {
  const auto& g = tree.graph();
  RidgeTree out;
  out.facet_count = static_cast<std::size_t>(g.vertex_count());
  out.root = static_cast<std::size_t>(root);
  for (const auto& [a, b] : tree.edge_list()) {
    const unsigned diff = static_cast<unsigned>(a ^ b);
    if (std::popcount(diff) != 1) {
      throw ValidationError("orthoplex_ridge_tree: edge does not join adjacent cube vertices");
    }
    out.edges.push_back({static_cast<std::size_t>(a), static_cast<std::size_t>(b), std::countr_zero(diff) + 1});
  }
  return out;
}

RidgeTree simplex_ridge_tree(int n, const SpanningTree& tree, int root) {
  const auto& g = tree.graph();
  if (g.vertex_count() != n + 1) {
    throw ValidationError("simplex_ridge_tree: the n-simplex has n + 1 facets");
  }
  const auto facets = static_cast<std::size_t>(n + 1);
  std::vector<std::vector<std::size_t>> adj(facets);
  for (const auto& [a, b] : tree.edge_list()) {
    adj[static_cast<std::size_t>(a)].push_back(static_cast<std::size_t>(b));
    adj[static_cast<std::size_t>(b)].push_back(static_cast<std::size_t>(a));
  }
  // slot[f][v]: slot (1..n) of simplex vertex v in facet f, 0 if v is the missing vertex.
  std::vector<std::vector<int>> slot(facets);
  auto& root_slots = slot[static_cast<std::size_t>(root)];
  root_slots.assign(facets, 0);
  for (std::size_t v = 0, next = 1; v < facets; ++v) {
    if (v != static_cast<std::size_t>(root)) root_slots[v] = static_cast<int>(next++);
  }
  RidgeTree out;
  out.facet_count = facets;
  out.root = static_cast<std::size_t>(root);
  std::deque<std::size_t> queue{static_cast<std::size_t>(root)};
  while (!queue.empty()) {
    const std::size_t p = queue.front();
    queue.pop_front();
    for (std::size_t c : adj[p]) {
      if (!slot[c].empty()) continue;
      const int label = slot[p][c];
      slot[c] = slot[p];
      slot[c][p] = label;
      slot[c][c] = 0;
      out.edges.push_back({p, c, label});
      queue.push_back(c);
    }
  }
  return out;
}

RatVector centroid(const FacetPlacement& f) {
  const std::size_t n = f.coords().order();
  RatVector out(n);
  const mpq_class inv(1, static_cast<unsigned long>(n));
  for (std::size_t r = 0; r < n; ++r) {
    mpq_class s = 0;
    for (std::size_t c = 0; c < n; ++c) s += f.coords()(r, c).raw();
    out[r] = Rational(mpq_class(s * inv));
  }
  return out;
}

CentroidThresholds centroid_thresholds(int n) {
  if (n < 2) throw ValidationError("centroid_thresholds: n must be at least 2");
  return {Rational(4, static_cast<long>(n) * (n - 1)), Rational(4L * (n - 1), n)};
}

namespace {

// Rows of F^-1 G: barycentric coordinates of g's vertices relative to f.
// Returns true when some row is <= 0 throughout.
bool beyond_some_face(const RatMatrix& f, const RatMatrix& g) {
  const std::size_t n = f.order();
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      m[r][c] = f(r, c).raw();
      m[r][n + c] = g(r, c).raw();
    }
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(m[piv][col]) == 0) ++piv;
    if (piv == n) throw ValidationError("degenerate facet placement");
    std::swap(m[piv], m[col]);
    const mpq_class p = m[col][col];
    for (auto& v : m[col]) v /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(m[r][col]) == 0) continue;
      const mpq_class factor = m[r][col];
      for (std::size_t c = col; c < 2 * n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    bool all_nonpositive = true;
    for (std::size_t c = n; c < 2 * n && all_nonpositive; ++c) all_nonpositive = sgn(m[r][c]) <= 0;
    if (all_nonpositive) return true;
  }
  return false;
}

}  // namespace

bool separated_by_face_hyperplane(const FacetPlacement& f, const FacetPlacement& g) {
  if (f.dimension() != g.dimension()) throw DimensionError("overlap test: placement dimensions differ");
  return beyond_some_face(f.coords(), g.coords()) || beyond_some_face(g.coords(), f.coords());
}

std::optional<RatVector> common_interior_point(const FacetPlacement& f, const FacetPlacement& g) {
  if (f.dimension() != g.dimension()) throw DimensionError("overlap test: placement dimensions differ");
  if (separated_by_face_hyperplane(f, g)) return std::nullopt;
  const auto n = static_cast<std::size_t>(f.dimension());
  // Unknowns: t, lambda'_1..n, mu'_1..n >= 0 with lambda = lambda' + t, mu = mu' + t.
  // F lambda = G mu (the last coordinate row is implied by the column sums),
  // sum lambda = sum mu = 1; maximize t.
  const std::size_t vars = 1 + 2 * n;
  std::vector<RatVector> a;
  RatVector b;
  for (std::size_t r = 0; r + 1 < n; ++r) {
    RatVector row(vars, Rational(0));
    mpq_class t_coeff = 0;
    for (std::size_t j = 0; j < n; ++j) {
      row[1 + j] = f.coords()(r, j);
      row[1 + n + j] = -g.coords()(r, j);
      t_coeff += f.coords()(r, j).raw() - g.coords()(r, j).raw();
    }
    row[0] = Rational(t_coeff);
    a.push_back(std::move(row));
    b.emplace_back(0);
  }
  for (int side = 0; side < 2; ++side) {
    RatVector row(vars, Rational(0));
    row[0] = static_cast<long>(n);
    for (std::size_t j = 0; j < n; ++j) row[1 + side * n + j] = 1;
    a.push_back(std::move(row));
    b.emplace_back(1);
  }
  RatVector c(vars, Rational(0));
  c[0] = 1;
  const LpResult lp = solve_lp(a, b, c);
  if (lp.status != LpStatus::Optimal || lp.value.sign() <= 0) return std::nullopt;
  RatVector lambda(n);
  for (std::size_t j = 0; j < n; ++j) lambda[j] = lp.x[1 + j] + lp.value;
  return f.coords() * lambda;
}

bool interiors_overlap(const FacetPlacement& f, const FacetPlacement& g) {
  return common_interior_point(f, g).has_value();
}

const char* to_string(OverlapKind kind) {
  switch (kind) {
    case OverlapKind::MustOverlapByCentroid:
      return "MustOverlapByCentroid";
    case OverlapKind::CannotOverlapByCentroid:
      return "CannotOverlapByCentroid";
    case OverlapKind::ExactOverlap:
      return "ExactOverlap";
    case OverlapKind::ExactDisjoint:
      return "ExactDisjoint";
  }
  return "?";
}

OverlapVerdict classify_overlap(const FacetPlacement& f, const FacetPlacement& g) {
  if (f.dimension() != g.dimension()) throw DimensionError("classify_overlap: placement dimensions differ");
  OverlapVerdict v;
  v.centroid_distance_sq = squared_distance(centroid(f), centroid(g));
  const auto thresholds = centroid_thresholds(f.dimension());
  if (v.centroid_distance_sq < thresholds.low_sq) {
    v.kind = OverlapKind::MustOverlapByCentroid;
  } else if (v.centroid_distance_sq > thresholds.high_sq) {
    v.kind = OverlapKind::CannotOverlapByCentroid;
  } else {
    v.kind = interiors_overlap(f, g) ? OverlapKind::ExactOverlap : OverlapKind::ExactDisjoint;
  }
  return v;
}

std::optional<std::pair<std::size_t, std::size_t>> find_overlap(const Unfolding& u) {
  for (std::size_t i = 0; i < u.placements.size(); ++i) {
    for (std::size_t j = i + 1; j < u.placements.size(); ++j) {
      if (classify_overlap(u.placements[i], u.placements[j]).overlaps()) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

bool is_net(const Unfolding& u) { return !find_overlap(u).has_value(); }

}  // namespace polynet
