#include "polynet/skeleton.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "polynet/errors.hpp"
#include "polynet/parallel.hpp"

namespace polynet {

SkeletonGraph::SkeletonGraph(std::string name, int vertex_count,
                             std::vector<std::pair<int, int>> edges,
                             std::vector<Permutation> generators)
    : name_(std::move(name)),
      vertex_count_(vertex_count),
      edges_(std::move(edges)),
      generators_(std::move(generators)) {
  if (vertex_count < 1 || vertex_count > 64) {
    throw ValidationError("skeleton graph needs 1..64 vertices");
  }
  if (edges_.size() > 64) throw ValidationError("skeleton graph supports at most 64 edges");
  for (auto& [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw ValidationError("edge endpoint out of range");
    }
    if (u == v) throw ValidationError("loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw ValidationError("duplicate edge");
  }
  incident_.assign(static_cast<std::size_t>(vertex_count), 0);
  adjacency_.assign(static_cast<std::size_t>(vertex_count), 0);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto [u, v] = edges_[e];
    incident_[static_cast<std::size_t>(u)] |= EdgeMask{1} << e;
    incident_[static_cast<std::size_t>(v)] |= EdgeMask{1} << e;
    adjacency_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    adjacency_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  }
  for (const auto& g : generators_) {
    if (g.size() != static_cast<std::size_t>(vertex_count)) {
      throw ValidationError("automorphism generator has wrong length");
    }
    std::vector<int> sorted = g;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < vertex_count; ++i) {
      if (sorted[static_cast<std::size_t>(i)] != i) {
        throw ValidationError("automorphism generator is not a permutation");
      }
    }
    for (const auto& [u, v] : edges_) {
      if (edge_index(g[static_cast<std::size_t>(u)], g[static_cast<std::size_t>(v)]) < 0) {
        throw ValidationError("generator does not map edges to edges");
      }
    }
  }
}

int SkeletonGraph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v});
  if (it == edges_.end() || *it != std::pair{u, v}) return -1;
  return static_cast<int>(it - edges_.begin());
}

std::vector<Permutation> SkeletonGraph::automorphism_group(std::size_t limit) const {
  Permutation identity(static_cast<std::size_t>(vertex_count_));
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<Permutation> elements{identity};
  std::set<Permutation> seen{identity};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : generators_) {
      Permutation composed(identity.size());
      for (std::size_t v = 0; v < identity.size(); ++v) {
        composed[v] = g[static_cast<std::size_t>(elements[i][v])];
      }
      if (seen.insert(composed).second) {
        if (elements.size() >= limit) throw ResourceError("automorphism group exceeds limit");
        elements.push_back(std::move(composed));
      }
    }
  }
  return elements;
}

EdgeMask SkeletonGraph::map_edges(const Permutation& perm, EdgeMask mask) const {
  EdgeMask out = 0;
  while (mask) {
    const int e = std::countr_zero(mask);
    mask &= mask - 1;
    const auto [u, v] = edges_[static_cast<std::size_t>(e)];
    out |= EdgeMask{1}
           << edge_index(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  }
  return out;
}

SkeletonGraph hypercube_graph(int n) {
  if (n < 1 || n > 6) throw ValidationError("hypercube_graph supports 1 <= n <= 6");
  const int count = 1 << n;
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < count; ++v) {
    for (int b = 0; b < n; ++b) {
      const int w = v ^ (1 << b);
      if (v < w) edges.emplace_back(v, w);
    }
  }
  std::vector<Permutation> gens;
  for (int b = 0; b + 1 < n; ++b) {
    Permutation swap_bits(static_cast<std::size_t>(count));
    for (int v = 0; v < count; ++v) {
      const int lo = (v >> b) & 1;
      const int hi = (v >> (b + 1)) & 1;
      int w = v & ~((1 << b) | (1 << (b + 1)));
      w |= (lo << (b + 1)) | (hi << b);
      swap_bits[static_cast<std::size_t>(v)] = w;
    }
    gens.push_back(std::move(swap_bits));
  }
  Permutation flip(static_cast<std::size_t>(count));
  for (int v = 0; v < count; ++v) flip[static_cast<std::size_t>(v)] = v ^ 1;
  gens.push_back(std::move(flip));
  return SkeletonGraph("Q" + std::to_string(n), count, std::move(edges), std::move(gens));
}

SkeletonGraph orthoplex_graph(int n) {
  if (n < 2 || n > 8) throw ValidationError("orthoplex_graph supports 2 <= n <= 8");
  const int count = 2 * n;
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < count; ++u) {
    for (int v = u + 1; v < count; ++v) {
      if (u / 2 != v / 2) edges.emplace_back(u, v);
    }
  }
  std::vector<Permutation> gens;
  for (int i = 0; i + 1 < n; ++i) {
    Permutation swap_axes(static_cast<std::size_t>(count));
    std::iota(swap_axes.begin(), swap_axes.end(), 0);
    std::swap(swap_axes[static_cast<std::size_t>(2 * i)], swap_axes[static_cast<std::size_t>(2 * i + 2)]);
    std::swap(swap_axes[static_cast<std::size_t>(2 * i + 1)],
              swap_axes[static_cast<std::size_t>(2 * i + 3)]);
    gens.push_back(std::move(swap_axes));
  }
  Permutation negate(static_cast<std::size_t>(count));
  std::iota(negate.begin(), negate.end(), 0);
  std::swap(negate[0], negate[1]);
  gens.push_back(std::move(negate));
  return SkeletonGraph(std::to_string(n) + "-orthoplex", count, std::move(edges), std::move(gens));
}

SkeletonGraph complete_graph(int m) {
  if (m < 1 || m > 11) throw ValidationError("complete_graph supports 1 <= m <= 11");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < m; ++u) {
    for (int v = u + 1; v < m; ++v) edges.emplace_back(u, v);
  }
  std::vector<Permutation> gens;
  if (m >= 2) {
    Permutation swap01(static_cast<std::size_t>(m));
    std::iota(swap01.begin(), swap01.end(), 0);
    std::swap(swap01[0], swap01[1]);
    gens.push_back(std::move(swap01));
    Permutation cycle(static_cast<std::size_t>(m));
    for (int v = 0; v < m; ++v) cycle[static_cast<std::size_t>(v)] = (v + 1) % m;
    gens.push_back(std::move(cycle));
  }
  return SkeletonGraph("K" + std::to_string(m), m, std::move(edges), std::move(gens));
}

namespace {

// Vertex mask reachable from `start` using only edges in `avail`.
std::uint64_t reachable(const SkeletonGraph& g, EdgeMask avail, int start) {
  std::uint64_t seen = std::uint64_t{1} << start;
  std::uint64_t frontier = seen;
  while (frontier) {
    const int u = std::countr_zero(frontier);
    frontier &= frontier - 1;
    EdgeMask inc = g.incident(u) & avail;
    while (inc) {
      const int e = std::countr_zero(inc);
      inc &= inc - 1;
      const auto [a, b] = g.edges()[static_cast<std::size_t>(e)];
      const int w = a == u ? b : a;
      const std::uint64_t bit = std::uint64_t{1} << w;
      if (!(seen & bit)) {
        seen |= bit;
        frontier |= bit;
      }
    }
  }
  return seen;
}

std::uint64_t all_vertices(const SkeletonGraph& g) {
  return g.vertex_count() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.vertex_count()) - 1;
}

}  // namespace

bool is_spanning_tree(const SkeletonGraph& graph, EdgeMask edges) {
  const EdgeMask valid =
      graph.edge_count() == 64 ? ~EdgeMask{0} : (EdgeMask{1} << graph.edge_count()) - 1;
  if (edges & ~valid) return false;
  if (std::popcount(edges) != graph.vertex_count() - 1) return false;
  return reachable(graph, edges, 0) == all_vertices(graph);
}

SpanningTree::SpanningTree(const SkeletonGraph& graph, EdgeMask edges)
    : graph_(&graph), edges_(edges) {
  if (!is_spanning_tree(graph, edges)) {
    throw ValidationError("edge set is not a spanning tree of " + graph.name());
  }
}

std::vector<std::pair<int, int>> SpanningTree::edge_list() const {
  std::vector<std::pair<int, int>> out;
  for (EdgeMask m = edges_; m; m &= m - 1) {
    out.push_back(graph_->edges()[static_cast<std::size_t>(std::countr_zero(m))]);
  }
  return out;
}

namespace {

// Grows a subtree one cut edge at a time: either the lowest cut edge joins the
// tree, or it is excluded for the rest of this frame. Excluding stops once the
// remaining edges no longer connect the graph, so every branch yields a tree.
struct TreeGrower {
  const SkeletonGraph& g;
  const std::function<void(EdgeMask)>& visit;
  std::uint64_t everything;
  int target;

  void grow(std::uint64_t tree_vertices, EdgeMask tree_edges, EdgeMask available) {
    if (std::popcount(tree_edges) == target) {
      visit(tree_edges);
      return;
    }
    EdgeMask cut = 0;
    for (std::uint64_t vs = tree_vertices; vs; vs &= vs - 1) cut ^= g.incident(std::countr_zero(vs));
    cut &= available;
    while (cut) {
      const int e = std::countr_zero(cut);
      const EdgeMask bit = EdgeMask{1} << e;
      const auto [a, b] = g.edges()[static_cast<std::size_t>(e)];
      const int outside = (tree_vertices >> a & 1) ? b : a;
      grow(tree_vertices | (std::uint64_t{1} << outside), tree_edges | bit, available);
      available &= ~bit;
      cut &= ~bit;
      if (reachable(g, available, 0) != everything) break;
    }
  }
};

}  // namespace

void for_each_spanning_tree(const SkeletonGraph& graph, const std::function<void(EdgeMask)>& visit,
                            unsigned jobs) {
  const std::uint64_t everything = all_vertices(graph);
  const EdgeMask all_edges =
      graph.edge_count() == 64 ? ~EdgeMask{0} : (EdgeMask{1} << graph.edge_count()) - 1;
  if (reachable(graph, all_edges, 0) != everything) return;
  if (graph.vertex_count() == 1) {
    visit(0);
    return;
  }
  TreeGrower grower{graph, visit, everything, graph.vertex_count() - 1};

  // Partition by the tree's edge set at vertex 0 (a nonempty subset of its star).
  std::vector<int> star;
  for (EdgeMask m = graph.incident(0); m; m &= m - 1) star.push_back(std::countr_zero(m));
  const std::size_t subsets = (std::size_t{1} << star.size()) - 1;
  parallel_for(subsets, jobs, [&](std::size_t index) {
    const std::size_t choice = index + 1;
    EdgeMask chosen = 0;
    std::uint64_t vertices = 1;
    for (std::size_t k = 0; k < star.size(); ++k) {
      if (!(choice >> k & 1)) continue;
      const int e = star[k];
      chosen |= EdgeMask{1} << e;
      const auto [a, b] = graph.edges()[static_cast<std::size_t>(e)];
      vertices |= std::uint64_t{1} << (a == 0 ? b : a);
    }
    const EdgeMask available = all_edges & ~(graph.incident(0) & ~chosen);
    if (reachable(graph, available, 0) != everything) return;
    grower.grow(vertices, chosen, available);
  });
}

BigInt kirchhoff_tree_count(const SkeletonGraph& graph) {
  const int m = graph.vertex_count() - 1;
  if (m == 0) return 1;
  // Laplacian with row/column 0 removed.
  std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(m), std::vector<BigInt>(static_cast<std::size_t>(m), 0));
  for (const auto& [u, v] : graph.edges()) {
    for (int w : {u, v}) {
      if (w > 0) a[static_cast<std::size_t>(w - 1)][static_cast<std::size_t>(w - 1)] += 1;
    }
    if (u > 0 && v > 0) {
      a[static_cast<std::size_t>(u - 1)][static_cast<std::size_t>(v - 1)] -= 1;
      a[static_cast<std::size_t>(v - 1)][static_cast<std::size_t>(u - 1)] -= 1;
    }
  }
  // Bareiss: every intermediate division is exact.
  BigInt previous = 1;
  int sign = 1;
  for (int k = 0; k < m; ++k) {
    auto K = static_cast<std::size_t>(k);
    if (a[K][K] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < m; ++r) {
        if (a[static_cast<std::size_t>(r)][K] != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return 0;
      std::swap(a[K], a[static_cast<std::size_t>(swap_row)]);
      sign = -sign;
    }
    for (int i = k + 1; i < m; ++i) {
      auto I = static_cast<std::size_t>(i);
      for (int j = k + 1; j < m; ++j) {
        auto J = static_cast<std::size_t>(j);
        a[I][J] = (a[I][J] * a[K][K] - a[I][K] * a[K][J]) / previous;
      }
      a[I][K] = 0;
    }
    previous = a[K][K];
  }
  return sign * a[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(m - 1)];
}

SpanningTreeCensus count_spanning_trees_up_to_symmetry(const SkeletonGraph& graph,
                                                       const CensusOptions& options) {
  SpanningTreeCensus census;
  census.kirchhoff = kirchhoff_tree_count(graph);
  if (!options.allow_long && census.kirchhoff > BigInt(std::to_string(options.long_threshold))) {
    throw ResourceError(graph.name() + " has " + census.kirchhoff.get_str() +
                        " spanning trees; this census is long-running (allow_long/--force)");
  }
  const auto group = graph.automorphism_group();
  census.group_order = group.size();

  // Edge permutation per non-identity element, applied bit by bit.
  std::vector<std::vector<std::uint8_t>> edge_maps;
  for (std::size_t k = 1; k < group.size(); ++k) {
    std::vector<std::uint8_t> map(graph.edge_count());
    for (std::size_t e = 0; e < graph.edge_count(); ++e) {
      const auto [u, v] = graph.edges()[e];
      map[e] = static_cast<std::uint8_t>(graph.edge_index(group[k][static_cast<std::size_t>(u)],
                                                          group[k][static_cast<std::size_t>(v)]));
    }
    edge_maps.push_back(std::move(map));
  }

  std::atomic<std::uint64_t> total{0};
  std::atomic<std::uint64_t> orbits{0};
  std::mutex callback_mutex;
  for_each_spanning_tree(
      graph,
      [&](EdgeMask tree) {
        total.fetch_add(1, std::memory_order_relaxed);
        for (const auto& map : edge_maps) {
          EdgeMask image = 0;
          for (EdgeMask m = tree; m; m &= m - 1) image |= EdgeMask{1} << map[static_cast<std::size_t>(std::countr_zero(m))];
          if (image < tree) return;
        }
        orbits.fetch_add(1, std::memory_order_relaxed);
        if (options.on_representative) {
          std::lock_guard lock(callback_mutex);
          options.on_representative(tree);
        }
      },
      options.jobs);
  census.total = total.load();
  census.orbits = orbits.load();
  return census;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

// Counts spanning trees that are unions of the given edge cycles.
struct FixedTreeCounter {
  const SkeletonGraph& g;
  std::vector<EdgeMask> cycles;
  std::vector<int> suffix_edges;
  int target;
  std::uint64_t count = 0;

  void run(std::size_t idx, int edges_used, const UnionFind& uf) {
    if (edges_used == target) {
      ++count;
      return;
    }
    if (idx == cycles.size() || edges_used + suffix_edges[idx] < target) return;
    // Take this cycle if it keeps the forest acyclic.
    const int size = std::popcount(cycles[idx]);
    if (edges_used + size <= target) {
      UnionFind next = uf;
      bool acyclic = true;
      for (EdgeMask m = cycles[idx]; m && acyclic; m &= m - 1) {
        const auto [a, b] = g.edges()[static_cast<std::size_t>(std::countr_zero(m))];
        acyclic = next.unite(a, b);
      }
      if (acyclic) run(idx + 1, edges_used + size, next);
    }
    run(idx + 1, edges_used, uf);
  }
};

}  // namespace

BigInt burnside_tree_orbit_count(const SkeletonGraph& graph) {
  const auto group = graph.automorphism_group();
  BigInt fixed_sum = kirchhoff_tree_count(graph);
  for (std::size_t k = 1; k < group.size(); ++k) {
    std::vector<int> edge_perm(graph.edge_count());
    for (std::size_t e = 0; e < graph.edge_count(); ++e) {
      const auto [u, v] = graph.edges()[e];
      edge_perm[e] = graph.edge_index(group[k][static_cast<std::size_t>(u)], group[k][static_cast<std::size_t>(v)]);
    }
    FixedTreeCounter counter{graph, {}, {}, graph.vertex_count() - 1};
    std::vector<bool> done(graph.edge_count(), false);
    for (std::size_t e = 0; e < graph.edge_count(); ++e) {
      if (done[e]) continue;
      EdgeMask cycle = 0;
      for (std::size_t f = e; !done[f]; f = static_cast<std::size_t>(edge_perm[f])) {
        done[f] = true;
        cycle |= EdgeMask{1} << f;
      }
      counter.cycles.push_back(cycle);
    }
    counter.suffix_edges.assign(counter.cycles.size() + 1, 0);
    for (std::size_t i = counter.cycles.size(); i-- > 0;) {
      counter.suffix_edges[i] = counter.suffix_edges[i + 1] + std::popcount(counter.cycles[i]);
    }
    counter.run(0, 0, UnionFind(graph.vertex_count()));
    fixed_sum += counter.count;
  }
  if (fixed_sum % static_cast<unsigned long>(group.size()) != 0) {
    throw std::logic_error("Burnside sum is not divisible by the group order");
  }
  return fixed_sum / static_cast<unsigned long>(group.size());
}

}  // namespace polynet
