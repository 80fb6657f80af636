#pragma once

// Facet placements in the hyperplane x_1 + ... + x_n = 1 built from reflection
// matrices, centroid bounds, and exact interior-overlap decisions.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "polynet/exact_math.hpp"
#include "polynet/lists.hpp"
#include "polynet/skeleton.hpp"

namespace polynet {

/// Identity except column `label`, which is (2/(n-1), ..., -1, ..., 2/(n-1))
/// with -1 in row `label`: the reflection of the standard facet across the
/// ridge opposite vertex `label`. Labels are 1-based.
RatMatrix reflection_matrix(int n, int label);

/// Column i holds the coordinates of the vertex labelled i + 1.
class FacetPlacement {
 public:
  /// Throws ValidationError unless every column sums to exactly 1.
  explicit FacetPlacement(RatMatrix coords);

  int dimension() const { return static_cast<int>(coords_.order()); }
  const RatMatrix& coords() const { return coords_; }
  RatVector vertex(int label) const { return coords_.column(static_cast<std::size_t>(label - 1)); }

  friend bool operator==(const FacetPlacement&, const FacetPlacement&) = default;

 private:
  RatMatrix coords_;
};

/// Columns affinely independent (the matrix has full rank).
bool is_nondegenerate(const FacetPlacement& f);

struct UnfoldingEdge {
  std::size_t parent = 0;
  std::size_t child = 0;
  int label = 0;  ///< ridge label: the column that changes from parent to child

  friend bool operator==(const UnfoldingEdge&, const UnfoldingEdge&) = default;
};

struct Unfolding {
  int n = 0;
  std::vector<FacetPlacement> placements;  ///< index 0 is the root (identity)
  std::vector<UnfoldingEdge> edges;        ///< parent index < child index
};

/// parent x M_label; only column `label` changes.
FacetPlacement reflect_placement(const FacetPlacement& parent, int label);

/// Chain C(L): N_0 = I, N_k = N_(k-1) M_(a_k). Validity of L is not required.
Unfolding embed_chain(const UnfoldList& list);

/// Undirected facet tree whose edges carry ridge labels.
struct RidgeTree {
  std::size_t facet_count = 0;
  std::size_t root = 0;
  std::vector<UnfoldingEdge> edges;  ///< (parent, child) orientation is ignored
};

/// Root gets the identity; each child is parent x M_label. Placements are
/// ordered breadth-first from the root (lower neighbour index first).
/// Throws ValidationError on malformed trees or labels outside {1..n}.
Unfolding embed_tree(int n, const RidgeTree& tree);

/// Ridge labels for a spanning tree of Q_n: facets of the n-orthoplex are cube
/// vertices, and crossing bit b is the ridge labelled b + 1.
RidgeTree orthoplex_ridge_tree(const SpanningTree& tree, int root = 0);

/// Ridge labels for a spanning tree of K_(n+1) (facet i of the n-simplex is
/// opposite simplex vertex i). Each facet's vertices occupy slots 1..n; crossing
/// into facet c replaces vertex c by the parent's missing vertex in the same slot.
RidgeTree simplex_ridge_tree(int n, const SpanningTree& tree, int root = 0);

RatVector centroid(const FacetPlacement& f);

struct CentroidThresholds {
  Rational low_sq;   ///< 4 / (n (n - 1)): closer centroids force an overlap
  Rational high_sq;  ///< 4 (n - 1) / n: farther centroids rule one out
};
CentroidThresholds centroid_thresholds(int n);

/// Sufficient test for disjoint interiors: some face hyperplane of one facet
/// has every vertex of the other on its far side (or on it).
bool separated_by_face_hyperplane(const FacetPlacement& f, const FacetPlacement& g);

/// A point with strictly positive barycentric coordinates in both facets, found
/// by maximizing the smallest barycentric coordinate with the exact simplex
/// method; nullopt when the open interiors are disjoint. Pairs separated by a
/// face hyperplane are answered without the LP.
std::optional<RatVector> common_interior_point(const FacetPlacement& f, const FacetPlacement& g);

bool interiors_overlap(const FacetPlacement& f, const FacetPlacement& g);

enum class OverlapKind { MustOverlapByCentroid, CannotOverlapByCentroid, ExactOverlap, ExactDisjoint };

struct OverlapVerdict {
  OverlapKind kind = OverlapKind::ExactDisjoint;
  Rational centroid_distance_sq;

  bool overlaps() const {
    return kind == OverlapKind::MustOverlapByCentroid || kind == OverlapKind::ExactOverlap;
  }
};

const char* to_string(OverlapKind kind);

/// Centroid fast path first, exact LP when the distance is between the thresholds.
OverlapVerdict classify_overlap(const FacetPlacement& f, const FacetPlacement& g);

/// First overlapping pair (i < j) in lexicographic order, or nullopt.
std::optional<std::pair<std::size_t, std::size_t>> find_overlap(const Unfolding& u);

/// True iff no two placements have intersecting interiors.
bool is_net(const Unfolding& u);

}  // namespace polynet
