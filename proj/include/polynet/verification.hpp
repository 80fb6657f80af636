#pragma once

// Runners that mechanically check the all-net results for simplices and
// orthoplexes, the orthoplex counterexamples, and the enumeration counts.
// Each runner returns a TheoremReport with counts, witnesses and timing.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "polynet/exact_math.hpp"
#include "polynet/geometry.hpp"
#include "polynet/lists.hpp"

namespace polynet {

enum class TheoremStatus { Verified, CounterexampleFound, Failed };
const char* to_string(TheoremStatus status);

struct OverlapWitness {
  UnfoldList list;
  std::pair<std::size_t, std::size_t> facet_pair{0, 0};
  /// Lies in both closed facets and strictly inside the first one.
  std::optional<RatVector> point;
  Rational centroid_distance_sq;
  OverlapKind kind = OverlapKind::ExactOverlap;
};

using StatValue = std::variant<std::int64_t, double, bool, std::string>;

struct TheoremReport {
  std::string theorem_id;
  TheoremStatus status = TheoremStatus::Failed;
  std::vector<OverlapWitness> witnesses;
  /// Conventions, sub-results and human-readable evidence.
  std::vector<std::string> notes;
  std::vector<std::pair<std::string, StatValue>> stats;
  std::vector<TheoremReport> parts;
  double seconds = 0.0;

  void set(const std::string& key, StatValue value);
  /// Integer stat or nullopt.
  std::optional<std::int64_t> count(const std::string& key) const;
  bool verified() const { return status == TheoremStatus::Verified; }
};

struct RunOptions {
  unsigned jobs = 1;
  /// Enables the long-running censuses (Q4 tree census, Q5 path census).
  bool allow_long = false;
  /// Positivity grid step.
  Rational grid_step = Rational(1, 10000);
};

/// First row of N_k for C(<1, 2, ..., k>): negative in columns <= k, zero after.
/// A chain of distinct simplex facets has at most n + 1 facets, so k is capped at n.
TheoremReport verify_simplex_sign_structure(int n, int k_max);

/// Embeds every spanning tree of K_(n+1) and checks each is a net (n <= 7).
TheoremReport verify_simplex_allnet(int n, const RunOptions& options = {});

/// Valid 4-dimensional lists with 8 entries: 128 up to relabeling, 66 classes up
/// to reversal, 4 of them reversal-symmetric; every class embeds without overlap.
TheoremReport verify_orthoplex4_length8();

/// Facets with at least eight facets between them (index gap >= 9) along any
/// valid 4-dimensional list of length 9..15 have squared centroid distance > 3.
TheoremReport verify_orthoplex4_distance(const RunOptions& options = {});

/// Every maximal path in the 4-cube skeleton has at least nine vertices; also
/// checks the adjacent-endpoint configuration cannot close up with eight.
TheoremReport verify_orthoplex4_maximal_paths();

/// Combines the three lemmas above; with allow_long also embeds every canonical
/// spanning tree of Q4 and runs is_net on it.
TheoremReport verify_orthoplex4_allnet(const RunOptions& options = {});

/// Every valid 4-dimensional list (all lengths up to 15) embeds with no
/// overlapping pair of facets, checked exactly.
TheoremReport verify_orthoplex4_chains_exhaustive(const RunOptions& options = {});

/// Embeds the chain and classifies the first/last pair (or every pair).
/// CounterexampleFound iff some pair overlaps; Verified when none does.
/// Throws ValidationError for invalid lists.
TheoremReport check_counterexample(int n, const UnfoldList& list, bool all_pairs = false);

struct CounterexampleEntry {
  std::vector<int> dimensions;
  UnfoldList list;
  std::string description;
};

/// The known failing chains for dimensions 5 through 9.
std::vector<CounterexampleEntry> builtin_counterexamples();

/// N_k v for v = (1/(n-1), 0, 1/(n-1), ..., 1/(n-1)), the midpoint of the ridge
/// of the first facet opposite vertex 2.
RatVector ridge_midpoint_image(int n, const UnfoldList& list);

/// The list <1,2,3,4,2,4,1,2,3> used for every n > 9.
UnfoldList long_range_list(int n);

struct PolynomialReconstruction {
  /// Coordinates 1..4 and the common coordinate i >= 5, in x = 2/(n-1).
  std::vector<RatPoly> polynomials;
  std::vector<int> sample_dimensions;
  std::vector<int> check_dimensions;
  bool consistent = false;
};

/// Interpolates the image coordinates from exact samples at n = first_n, ...,
/// first_n + 10 and checks the remaining dimensions lie on the interpolants.
PolynomialReconstruction reconstruct_image_polynomials(int first_n = 12,
                                                       std::vector<int> check_dimensions = {23, 30});

/// The image polynomials as printed in the source (ascending powers). The printed
/// x^9 coefficient of p1 is +1/2; the exact computation gives -1/2.
std::vector<RatPoly> reference_image_polynomials();

/// Strict positivity on (0, x_max]: at every multiple of grid_step and at every
/// x = 2/(n-1) <= x_max with n <= 1000; lowest-degree coefficients positive.
TheoremReport verify_positivity_range(const std::vector<RatPoly>& polys, const Rational& x_max,
                                      const Rational& grid_step = Rational(1, 10000));

/// Reconstruction, the hyperplane identity, positivity on (0, 2/9] (n >= 10) and
/// the direct check that the ridge-midpoint image is positive and the first and
/// tenth facets overlap for every n in [10, 64]. Comparison with the printed
/// coefficients and positivity up to 0.2278 are reported but do not set the status.
TheoremReport verify_polynomials(const RunOptions& options = {});

/// Runs check_counterexample on the built-in chains (optionally one dimension);
/// dimension > 9 uses the long-range list.
TheoremReport verify_orthoplex_counterexamples(std::optional<int> dimension = std::nullopt);

/// Census targets: octahedron-nets, cube4-unfoldings, q3-paths, q4-paths,
/// kirchhoff, burnside, orthoplex4-unfoldings (long), q5-paths (long), or "all".
TheoremReport verify_counts(const std::string& target, const RunOptions& options = {});

std::vector<std::string> count_targets();

}  // namespace polynet
