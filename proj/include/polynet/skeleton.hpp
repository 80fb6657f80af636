#pragma once

// Dual 1-skeleton graphs with explicit automorphism generators, spanning-tree
// enumeration, and spanning-tree counts up to symmetry.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "polynet/exact_math.hpp"

namespace polynet {

/// Bit e set iff edge e (index into SkeletonGraph::edges()) is present.
using EdgeMask = std::uint64_t;
using Permutation = std::vector<int>;

class SkeletonGraph {
 public:
  /// Edges are normalized to (min, max) and sorted. Throws ValidationError on
  /// loops, duplicate edges, endpoints out of range, more than 64 vertices or
  /// edges, or a generator that is not an automorphism.
  SkeletonGraph(std::string name, int vertex_count, std::vector<std::pair<int, int>> edges,
                std::vector<Permutation> generators);

  const std::string& name() const { return name_; }
  int vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  /// Index of edge {u, v}, or -1.
  int edge_index(int u, int v) const;
  /// Mask of edges incident to v.
  EdgeMask incident(int v) const { return incident_[static_cast<std::size_t>(v)]; }
  /// Vertex u's neighbours as a bitmask.
  std::uint64_t neighbours(int u) const { return adjacency_[static_cast<std::size_t>(u)]; }

  /// Every element of the group generated by the generators (identity first).
  /// Throws ResourceError if the group exceeds `limit` elements.
  std::vector<Permutation> automorphism_group(std::size_t limit = 200000) const;

  /// Image of an edge set under a vertex permutation.
  EdgeMask map_edges(const Permutation& perm, EdgeMask mask) const;

 private:
  std::string name_;
  int vertex_count_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<Permutation> generators_;
  std::vector<EdgeMask> incident_;
  std::vector<std::uint64_t> adjacency_;
};

/// 1-skeleton of Q_n; vertex ids are the coordinate bitmasks. Generators are
/// the adjacent coordinate transpositions and the flip of bit 0 (group order 2^n n!).
SkeletonGraph hypercube_graph(int n);

/// 1-skeleton of the n-orthoplex; vertex 2i is +e_(i+1), vertex 2i+1 is -e_(i+1).
SkeletonGraph orthoplex_graph(int n);

/// K_m; generated by (0 1) and the m-cycle.
SkeletonGraph complete_graph(int m);

/// An edge subset of a graph that is acyclic, connected and spanning.
class SpanningTree {
 public:
  /// Throws ValidationError if `edges` is not a spanning tree of `graph`.
  SpanningTree(const SkeletonGraph& graph, EdgeMask edges);

  const SkeletonGraph& graph() const { return *graph_; }
  EdgeMask edges() const { return edges_; }
  std::vector<std::pair<int, int>> edge_list() const;

 private:
  const SkeletonGraph* graph_;
  EdgeMask edges_;
};

bool is_spanning_tree(const SkeletonGraph& graph, EdgeMask edges);

/// Calls visit(mask) once per spanning tree. With jobs > 1 the trees are produced
/// concurrently from disjoint partitions, so the visitor must be thread-safe.
void for_each_spanning_tree(const SkeletonGraph& graph, const std::function<void(EdgeMask)>& visit,
                            unsigned jobs = 1);

/// Matrix-tree theorem: any cofactor of the Laplacian (fraction-free Bareiss elimination).
BigInt kirchhoff_tree_count(const SkeletonGraph& graph);

struct CensusOptions {
  /// Runs censuses with more than long_threshold trees.
  bool allow_long = false;
  std::uint64_t long_threshold = 10'000'000;
  unsigned jobs = 1;
  /// Receives each orbit's canonical representative (may be called concurrently when jobs > 1).
  std::function<void(EdgeMask)> on_representative;
};

struct SpanningTreeCensus {
  std::uint64_t total = 0;   ///< trees enumerated
  std::uint64_t orbits = 0;  ///< trees that are the minimum mask of their orbit
  BigInt kirchhoff;          ///< matrix-tree count for cross-checking `total`
  std::size_t group_order = 0;
};

/// Orbit count by explicit canonicalization: a tree is a representative iff no
/// group element maps it to a numerically smaller edge mask.
SpanningTreeCensus count_spanning_trees_up_to_symmetry(const SkeletonGraph& graph,
                                                       const CensusOptions& options = {});

/// Independent orbit count by Burnside's lemma; fixed trees of each non-identity
/// element are enumerated as unions of edge cycles, the identity uses Kirchhoff.
BigInt burnside_tree_orbit_count(const SkeletonGraph& graph);

}  // namespace polynet
