#include "polynet/verification.hpp"

#include <algorithm>
#include <atomic>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "polynet/errors.hpp"
#include "polynet/parallel.hpp"
#include "polynet/skeleton.hpp"

namespace polynet {

const char* to_string(TheoremStatus status) {
  switch (status) {
    case TheoremStatus::Verified:
      return "Verified";
    case TheoremStatus::CounterexampleFound:
      return "CounterexampleFound";
    case TheoremStatus::Failed:
      return "Failed";
  }
  return "?";
}

void TheoremReport::set(const std::string& key, StatValue value) {
  for (auto& [k, v] : stats) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  stats.emplace_back(key, std::move(value));
}

std::optional<std::int64_t> TheoremReport::count(const std::string& key) const {
  for (const auto& [k, v] : stats) {
    if (k == key) {
      if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::int64_t as_stat(std::uint64_t v) { return static_cast<std::int64_t>(v); }

std::int64_t as_stat(const BigInt& v) { return static_cast<std::int64_t>(v.get_si()); }

std::string exact_and_approx(const Rational& r) {
  std::ostringstream os;
  os.precision(12);
  os << r.to_short_string() << " (~" << r.to_double() << ")";
  return os.str();
}

bool all_parts_verified(const TheoremReport& r) {
  return std::all_of(r.parts.begin(), r.parts.end(),
                     [](const TheoremReport& p) { return p.verified(); });
}

}  // namespace

TheoremReport verify_simplex_sign_structure(int n, int k_max) {
  if (n < 2) throw ValidationError("sign structure needs n >= 2");
  if (k_max < 1) throw ValidationError("sign structure needs k_max >= 1");
  Stopwatch clock;
  TheoremReport report;
  report.theorem_id = "simplex-sign-structure";
  const int k_limit = std::min(k_max, n);
  if (k_max > n) {
    report.notes.push_back("k capped at n = " + std::to_string(n) +
                           ": a chain of distinct simplex facets has at most n + 1 facets");
  }
  bool ok = true;
  std::int64_t entries = 0;
  std::vector<int> labels;
  FacetPlacement current(RatMatrix::identity(static_cast<std::size_t>(n)));
  for (int k = 1; k <= k_limit; ++k) {
    labels.push_back(k);
    current = reflect_placement(current, k);
    for (int j = 1; j <= n; ++j) {
      const int s = current.coords()(0, static_cast<std::size_t>(j - 1)).sign();
      const bool good = j <= k ? s < 0 : s == 0;
      ++entries;
      if (!good && ok) {
        ok = false;
        report.notes.push_back("N_" + std::to_string(k) + " first row has sign " + std::to_string(s) +
                               " at column " + std::to_string(j));
      }
    }
  }
  report.status = ok ? TheoremStatus::Verified : TheoremStatus::Failed;
  report.set("n", std::int64_t{n});
  report.set("kRequested", std::int64_t{k_max});
  report.set("kChecked", std::int64_t{k_limit});
  report.set("entriesChecked", entries);
  report.seconds = clock.seconds();
  return report;
}

TheoremReport verify_simplex_allnet(int n, const RunOptions& options) {
  if (n < 2) throw ValidationError("simplex all-net needs n >= 2");
  if (n > 7) throw ResourceError("exhaustive simplex check is bounded to n <= 7");
  Stopwatch clock;
  TheoremReport report;
  report.theorem_id = "simplex-allnet";
  const SkeletonGraph graph = complete_graph(n + 1);
  std::vector<EdgeMask> trees;
  for_each_spanning_tree(graph, [&](EdgeMask m) { trees.push_back(m); });
  std::sort(trees.begin(), trees.end());

  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> overlaps(trees.size());
  parallel_for(trees.size(), options.jobs, [&](std::size_t i) {
    const Unfolding u = embed_tree(n, simplex_ridge_tree(n, SpanningTree(graph, trees[i])));
    overlaps[i] = find_overlap(u);
  });
  std::int64_t failures = 0;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (!overlaps[i]) continue;
    if (failures++ == 0) {
      std::ostringstream os;
      os << "tree mask " << trees[i] << " overlaps at placements " << overlaps[i]->first << ","
         << overlaps[i]->second;
      report.notes.push_back(os.str());
    }
  }
  report.parts.push_back(verify_simplex_sign_structure(n, n));
  report.status = failures == 0 && all_parts_verified(report) ? TheoremStatus::Verified
                                                               : TheoremStatus::Failed;
  report.set("n", std::int64_t{n});
  report.set("spanningTrees", as_stat(trees.size()));
  report.set("kirchhoff", as_stat(kirchhoff_tree_count(graph)));
  report.set("nets", as_stat(trees.size()) - failures);
  report.set("nonNets", failures);
  report.seconds = clock.seconds();
  return report;
}

TheoremReport verify_orthoplex4_length8() {
  Stopwatch clock;
  TheoremReport report;
  report.theorem_id = "orthoplex4-length8";
  std::vector<UnfoldList> lists;
  enumerate_valid_lists(4, 8, {LabelMode::FirstOccurrence, {}},
                        [&](const std::vector<int>& e) { lists.emplace_back(4, e); });
  std::set<UnfoldList> classes;
  for (const auto& l : lists) classes.insert(canonicalize_list(l));
  std::int64_t self_reverse = 0;
  std::int64_t nets = 0;
  for (const auto& c : classes) {
    if (is_reversal_symmetric(c)) ++self_reverse;
    if (const auto hit = find_overlap(embed_chain(c))) {
      report.notes.push_back("class " + c.to_string() + " overlaps at facets " +
                             std::to_string(hit->first) + "," + std::to_string(hit->second));
    } else {
      ++nets;
    }
  }
  report.set("validLists8", as_stat(lists.size()));
  report.set("validLists8AllLabelings", as_stat(count_valid_lists(4, 8)));
  report.set("classes", as_stat(classes.size()));
  report.set("selfReverse", self_reverse);
  report.set("nets", nets);
  report.notes.push_back("lists counted up to relabeling (labels in first-occurrence order)");
  report.status = nets == static_cast<std::int64_t>(classes.size()) ? TheoremStatus::Verified
                                                                    : TheoremStatus::Failed;
  report.seconds = clock.seconds();
  return report;
}

namespace {

struct DistanceScan {
  std::uint64_t checks = 0;
  std::array<std::uint64_t, 16> lists_by_length{};
  std::optional<Rational> min_sq;
  std::optional<std::pair<std::vector<int>, std::pair<std::size_t, std::size_t>>> min_where;
  std::vector<std::pair<std::vector<int>, std::pair<std::size_t, std::size_t>>> violations;
};

constexpr std::size_t kMinGap = 9;  // eight facets strictly between i and j
constexpr std::size_t kMaxLength4 = 15;

void scan_distances(std::vector<int>& labels, CubeVertex vertex, std::uint32_t visited, int max_label,
                    std::vector<FacetPlacement>& placements, std::vector<RatVector>& centroids,
                    const Rational& bound, DistanceScan& out) {
  const std::size_t j = labels.size();
  if (j >= kMinGap) {
    ++out.lists_by_length[j];
    for (std::size_t i = 0; i + kMinGap <= j; ++i) {
      ++out.checks;
      const Rational d = squared_distance(centroids[i], centroids[j]);
      if (!out.min_sq || d < *out.min_sq) {
        out.min_sq = d;
        out.min_where = {labels, {i, j}};
      }
      if (!(d > bound)) out.violations.push_back({labels, {i, j}});
    }
  }
  if (j == kMaxLength4) return;
  for (int a = 1; a <= std::min(4, max_label + 1); ++a) {
    if (!labels.empty() && labels.back() == a) continue;
    const CubeVertex w = vertex ^ (CubeVertex{1} << (a - 1));
    if (visited >> w & 1u) continue;
    labels.push_back(a);
    placements.push_back(reflect_placement(placements.back(), a));
    centroids.push_back(centroid(placements.back()));
    scan_distances(labels, w, visited | (1u << w), std::max(max_label, a), placements, centroids, bound,
                   out);
    centroids.pop_back();
    placements.pop_back();
    labels.pop_back();
  }
}

}  // namespace

TheoremReport verify_orthoplex4_distance(const RunOptions& options) {
  Stopwatch clock;
  TheoremReport report;
  report.theorem_id = "orthoplex4-distance";
  const Rational bound = centroid_thresholds(4).high_sq;  // 3

  std::vector<std::vector<int>> prefixes;
  enumerate_valid_lists(4, 4, {LabelMode::FirstOccurrence, {}},
                        [&](const std::vector<int>& p) { prefixes.push_back(p); });
  std::vector<DistanceScan> partial(prefixes.size());
  parallel_for(prefixes.size(), options.jobs, [&](std::size_t idx) {
    std::vector<int> labels;
    std::vector<FacetPlacement> placements{FacetPlacement(RatMatrix::identity(4))};
    std::vector<RatVector> centroids{centroid(placements.back())};
    CubeVertex v = 0;
    std::uint32_t visited = 1;
    int max_label = 0;
    for (int a : prefixes[idx]) {
      labels.push_back(a);
      v ^= CubeVertex{1} << (a - 1);
      visited |= 1u << v;
      max_label = std::max(max_label, a);
      placements.push_back(reflect_placement(placements.back(), a));
      centroids.push_back(centroid(placements.back()));
    }
    scan_distances(labels, v, visited, max_label, placements, centroids, bound, partial[idx]);
  });

  DistanceScan total;
  for (auto& p : partial) {
    total.checks += p.checks;
    for (std::size_t L = 0; L < total.lists_by_length.size(); ++L) {
      total.lists_by_length[L] += p.lists_by_length[L];
    }
    if (p.min_sq && (!total.min_sq || *p.min_sq < *total.min_sq)) {
      total.min_sq = p.min_sq;
      total.min_where = p.min_where;
    }
    total.violations.insert(total.violations.end(), p.violations.begin(), p.violations.end());
  }
  std::int64_t lists = 0;
  std::int64_t literal_pairs = 0;
  for (std::size_t L = kMinGap; L <= kMaxLength4; ++L) {
    const auto c = static_cast<std::int64_t>(total.lists_by_length[L]);
    lists += c;
    literal_pairs += c * static_cast<std::int64_t>((L - 8) * (L - 7) / 2);
    report.set("validListsLength" + std::to_string(L), c);
  }
  report.set("validLists9to15", lists);
  report.set("qualifyingPairs", literal_pairs);
  report.set("distinctPrefixChecks", as_stat(total.checks));
  report.set("violations", as_stat(total.violations.size()));
  if (total.min_sq) {
    report.set("minDistanceSquared", total.min_sq->to_short_string());
    report.set("minDistance", std::sqrt(total.min_sq->to_double()));
    report.notes.push_back("closest qualifying pair: facets " + std::to_string(total.min_where->second.first) +
                           "," + std::to_string(total.min_where->second.second) + " of " +
                           UnfoldList(4, total.min_where->first).to_string());
  }
  report.notes.push_back(
      "pairs qualify when at least eight facets lie strictly between them (index gap >= 9); "
      "lists are non-revisiting paths of Q4, counted up to relabeling (an isometry)");
  for (std::size_t i = 0; i < std::min<std::size_t>(5, total.violations.size()); ++i) {
    const auto& [labels, pair] = total.violations[i];
    report.notes.push_back("violation: " + UnfoldList(4, labels).to_string() + " facets " +
                           std::to_string(pair.first) + "," + std::to_string(pair.second));
  }
  report.status = total.violations.empty() ? TheoremStatus::Verified : TheoremStatus::Failed;
  report.seconds = clock.seconds();
  return report;
}

TheoremReport verify_orthoplex4_maximal_paths() {
  Stopwatch clock;
  TheoremReport report;
  report.theorem_id = "orthoplex4-maximal-paths";
  std::uint64_t count = 0;
  std::size_t min_vertices = SIZE_MAX;
  std::size_t max_vertices = 0;
  std::map<std::size_t, std::uint64_t> histogram;
  std::optional<CubePath> shortest;
  for_each_maximal_extension(CubePath{4, {0}}, [&](const CubePath& p) {
    ++count;
    ++histogram[p.vertices.size()];
    if (p.vertices.size() < min_vertices) {
      min_vertices = p.vertices.size();
      shortest = p;
    }
    max_vertices = std::max(max_vertices, p.vertices.size());
  });
  report.set("maximalPathsThroughOrigin", as_stat(count));
  report.set("minVertices", as_stat(min_vertices));
  report.set("maxVertices", as_stat(max_vertices));
  for (const auto& [size, c] : histogram) report.set("paths" + std::to_string(size) + "Vertices", as_stat(c));
  if (shortest) report.notes.push_back("a shortest maximal path: " + path_to_list(*shortest).to_string());

  // Adjacent endpoints s = 0000, e = 1000 and their neighbourhoods: longest s-e
  // path inside those eight vertices.
  const std::vector<CubeVertex> block{0b0000, 0b0001, 0b0010, 0b0100, 0b1000, 0b0011, 0b0101, 0b1001};
  auto in_block = [&](CubeVertex v) { return std::find(block.begin(), block.end(), v) != block.end(); };
  std::size_t longest = 0;
  std::function<void(CubeVertex, std::uint32_t, std::size_t)> walk = [&](CubeVertex v, std::uint32_t used,
                                                                         std::size_t len) {
    if (v == 0b0001) {
      longest = std::max(longest, len);
      return;
    }
    for (int b = 0; b < 4; ++b) {
      const CubeVertex w = v ^ (CubeVertex{1} << b);
      if (!in_block(w) || (used >> w & 1u)) continue;
      walk(w, used | (1u << w), len + 1);
    }
  };
  walk(0, 1u, 1);
  report.set("blockedConfigLongestPath", as_stat(longest));
  report.notes.push_back("start 0000 and end 0001 adjacent: the longest path between them inside "
                         "their closed neighbourhoods has " + std::to_string(longest) + " vertices");
  report.status = min_vertices >= 9 && longest < block.size() ? TheoremStatus::Verified
                                                              : TheoremStatus::Failed;
  report.seconds = clock.seconds();
  return report;
}

TheoremReport verify_orthoplex4_allnet(const RunOptions& options) {
  Stopwatch clock;
  TheoremReport report;
  report.theorem_id = "orthoplex4-allnet";
  report.parts.push_back(verify_orthoplex4_maximal_paths());
  report.parts.push_back(verify_orthoplex4_length8());
  report.parts.push_back(verify_orthoplex4_distance(options));
  for (const char* key : {"validLists8", "classes", "selfReverse"}) {
    report.set(key, *report.parts[1].count(key));
  }
  report.set("minMaximalPathVertices", *report.parts[0].count("minVertices"));
  report.set("distanceViolations", *report.parts[2].count("violations"));
  bool census_ok = true;
  if (options.allow_long) {
    const SkeletonGraph q4 = hypercube_graph(4);
    std::atomic<std::int64_t> non_nets{0};
    CensusOptions census_options;
    census_options.allow_long = true;
    census_options.jobs = options.jobs;
    census_options.on_representative = [&](EdgeMask tree) {
      if (!is_net(embed_tree(4, orthoplex_ridge_tree(SpanningTree(q4, tree))))) ++non_nets;
    };
    const auto census = count_spanning_trees_up_to_symmetry(q4, census_options);
    report.set("censusUnfoldings", as_stat(census.orbits));
    report.set("censusTrees", as_stat(census.total));
    report.set("censusNonNets", non_nets.load());
    census_ok = non_nets.load() == 0;
  }
  report.status = all_parts_verified(report) && census_ok ? TheoremStatus::Verified
                                                          : TheoremStatus::Failed;
  report.seconds = clock.seconds();
  return report;
}

TheoremReport verify_orthoplex4_chains_exhaustive(const RunOptions& options) {
  Stopwatch clock;
  TheoremReport report;
  report.theorem_id = "orthoplex4-chains-exhaustive";
  std::vector<std::vector<int>> prefixes;
  enumerate_valid_lists(4, 3, {LabelMode::FirstOccurrence, {}},
                        [&](const std::vector<int>& p) { prefixes.push_back(p); });
  struct Tally {
    std::uint64_t chains = 0;
    std::uint64_t pairs = 0;
    std::vector<std::string> overlaps;
  };
  std::vector<Tally> partial(prefixes.size());
  parallel_for(prefixes.size(), options.jobs, [&](std::size_t idx) {
    Tally& t = partial[idx];
    std::vector<int> labels;
    std::vector<FacetPlacement> placements{FacetPlacement(RatMatrix::identity(4))};
    auto check_last = [&] {
      ++t.chains;
      const std::size_t j = placements.size() - 1;
      for (std::size_t i = 0; i < j; ++i) {
        ++t.pairs;
        if (classify_overlap(placements[i], placements[j]).overlaps()) {
          t.overlaps.push_back(UnfoldList(4, labels).to_string() + " facets " + std::to_string(i) + "," +
                               std::to_string(j));
        }
      }
    };
    std::function<void(CubeVertex, std::uint32_t, int)> dfs = [&](CubeVertex v, std::uint32_t visited,
                                                                  int max_label) {
      if (labels.size() > prefixes[idx].size()) check_last();
      if (labels.size() == kMaxLength4) return;
      for (int a = 1; a <= std::min(4, max_label + 1); ++a) {
        if (!labels.empty() && labels.back() == a) continue;
        const CubeVertex w = v ^ (CubeVertex{1} << (a - 1));
        if (visited >> w & 1u) continue;
        labels.push_back(a);
        placements.push_back(reflect_placement(placements.back(), a));
        dfs(w, visited | (1u << w), std::max(max_label, a));
        placements.pop_back();
        labels.pop_back();
      }
    };
    CubeVertex v = 0;
    std::uint32_t visited = 1;
    int max_label = 0;
    for (int a : prefixes[idx]) {
      labels.push_back(a);
      v ^= CubeVertex{1} << (a - 1);
      visited |= 1u << v;
      max_label = std::max(max_label, a);
      placements.push_back(reflect_placement(placements.back(), a));
      // Prefix facets are checked once, by the partition that owns them.
      if (idx == 0 || std::vector<int>(labels) != std::vector<int>(prefixes[idx - 1].begin(),
                                                                     prefixes[idx - 1].begin() +
                                                                         static_cast<std::ptrdiff_t>(labels.size()))) {
        check_last();
      }
    }
    dfs(v, visited, max_label);
  });
  std::int64_t chains = 0;
  std::int64_t pairs = 0;
  std::vector<std::string> overlaps;
  for (auto& t : partial) {
    chains += as_stat(t.chains);
    pairs += as_stat(t.pairs);
    overlaps.insert(overlaps.end(), t.overlaps.begin(), t.overlaps.end());
  }
  report.set("chains", chains);
  report.set("pairsChecked", pairs);
  report.set("overlappingPairs", as_stat(overlaps.size()));
  for (std::size_t i = 0; i < std::min<std::size_t>(5, overlaps.size()); ++i) report.notes.push_back(overlaps[i]);
  report.status = overlaps.empty() ? TheoremStatus::Verified : TheoremStatus::Failed;
  report.seconds = clock.seconds();
  return report;
}

TheoremReport check_counterexample(int n, const UnfoldList& list_in, bool all_pairs) {
  Stopwatch clock;
  const UnfoldList list = list_in.with_dimension(n);
  if (!is_valid_list(list)) {
    throw ValidationError("list " + list.to_string() + " is not valid in dimension " + std::to_string(n));
  }
  TheoremReport report;
  report.theorem_id = "orthoplex-counterexample";
  const Unfolding u = embed_chain(list);
  const std::size_t last = u.placements.size() - 1;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (all_pairs) {
    for (std::size_t i = 0; i < u.placements.size(); ++i) {
      for (std::size_t j = i + 1; j < u.placements.size(); ++j) pairs.emplace_back(i, j);
    }
  } else if (last > 0) {
    pairs.emplace_back(0, last);
  }
  bool consistent = true;
  for (const auto& [i, j] : pairs) {
    const OverlapVerdict verdict = classify_overlap(u.placements[i], u.placements[j]);
    if (!all_pairs || (i == 0 && j == last)) {
      report.set("designatedPair", std::to_string(i) + "," + std::to_string(j));
      report.set("designatedVerdict", std::string(to_string(verdict.kind)));
      report.set("centroidDistanceSquared", verdict.centroid_distance_sq.to_short_string());
      report.set("centroidDistance", std::sqrt(verdict.centroid_distance_sq.to_double()));
    }
    if (!verdict.overlaps()) continue;
    OverlapWitness w;
    w.list = list;
    w.facet_pair = {i, j};
    w.centroid_distance_sq = verdict.centroid_distance_sq;
    w.kind = verdict.kind;
    w.point = common_interior_point(u.placements[i], u.placements[j]);
    if (!w.point) {
      consistent = false;
      report.notes.push_back("centroid test and exact test disagree on facets " + std::to_string(i) + "," +
                             std::to_string(j));
    }
    report.witnesses.push_back(std::move(w));
  }
  const auto thresholds = centroid_thresholds(n);
  report.set("n", std::int64_t{n});
  report.set("list", list.to_string());
  report.set("facets", as_stat(u.placements.size()));
  report.set("pairsExamined", as_stat(pairs.size()));
  report.set("overlappingPairs", as_stat(report.witnesses.size()));
  report.set("mustOverlapBelowSquared", thresholds.low_sq.to_short_string());
  report.set("mustOverlapBelow", std::sqrt(thresholds.low_sq.to_double()));
  if (!consistent) {
    report.status = TheoremStatus::Failed;
  } else {
    report.status = report.witnesses.empty() ? TheoremStatus::Verified : TheoremStatus::CounterexampleFound;
  }
  report.seconds = clock.seconds();
  return report;
}

std::vector<CounterexampleEntry> builtin_counterexamples() {
  return {
      {{5},
       UnfoldList(5, {1, 2, 1, 3, 1, 2, 1, 4, 1, 2, 3, 5, 1, 2, 3, 2, 5, 3, 2, 1, 5, 4, 3, 4, 2, 4, 1, 2, 3, 2, 1}),
       "spanning chain through all 32 facets of the 5-orthoplex"},
      {{5},
       UnfoldList(5, {1, 2, 3, 4, 2, 1, 5, 4, 2, 4, 5, 4, 2, 1, 5, 4, 3, 1, 5}),
       "20-facet chain failing the centroid test in dimension 5"},
      {{6}, UnfoldList(6, {1, 2, 3, 1, 4, 5, 4, 3, 5, 4, 1, 3, 2, 1, 4}), "16-facet chain for dimension 6"},
      {{7, 8}, UnfoldList(7, {1, 2, 3, 4, 1, 5, 3, 5, 4, 3, 2, 1}), "13-facet chain for dimensions 7 and 8"},
      {{9}, UnfoldList(9, {1, 2, 3, 4, 2, 4, 1, 2, 3}), "10-facet chain for dimension 9"},
  };
}

UnfoldList long_range_list(int n) { return UnfoldList(n, {1, 2, 3, 4, 2, 4, 1, 2, 3}); }

RatVector ridge_midpoint_image(int n, const UnfoldList& list) {
  if (n < 3) throw ValidationError("ridge_midpoint_image needs n >= 3");
  RatVector v(static_cast<std::size_t>(n), Rational(1, n - 1));
  v[1] = 0;
  const Unfolding u = embed_chain(list.with_dimension(n));
  return u.placements.back().coords() * v;
}

PolynomialReconstruction reconstruct_image_polynomials(int first_n, std::vector<int> check_dimensions) {
  if (first_n < 5) throw ValidationError("reconstruction needs samples with n >= 5");
  constexpr int kSamples = 11;  // degree <= 10
  PolynomialReconstruction out;
  out.consistent = true;
  out.check_dimensions = std::move(check_dimensions);
  std::vector<std::vector<std::pair<Rational, Rational>>> samples(5);
  auto sample = [&](int n) {
    const RatVector image = ridge_midpoint_image(n, long_range_list(n));
    for (std::size_t i = 5; i < image.size(); ++i) {
      if (image[i] != image[4]) out.consistent = false;
    }
    return image;
  };
  for (int n = first_n; n < first_n + kSamples; ++n) {
    out.sample_dimensions.push_back(n);
    const RatVector image = sample(n);
    const Rational x(2, n - 1);
    for (std::size_t c = 0; c < 5; ++c) samples[c].emplace_back(x, image[c]);
  }
  for (const auto& s : samples) out.polynomials.push_back(poly_interpolate(s));
  for (int n : out.check_dimensions) {
    if (n < 5) throw ValidationError("check dimensions must be >= 5");
    const RatVector image = sample(n);
    const Rational x(2, n - 1);
    for (std::size_t c = 0; c < 5; ++c) {
      if (poly_eval(out.polynomials[c], x) != image[c]) out.consistent = false;
    }
  }
  return out;
}

std::vector<RatPoly> reference_image_polynomials() {
  auto halves = [](std::vector<long> twice) {
    std::vector<Rational> c;
    for (long v : twice) c.emplace_back(v, 2);
    return RatPoly(std::move(c));
  };
  return {
      halves({0, 1, 2, 2, -3, -10, -16, -14, -6, 1}),
      halves({0, 0, 2, 2, -1, -3, 1, 11, 13, 6, 1}),
      halves({0, 1, -2, -8, -11, -4, 12, 24, 19, 7, 1}),
      halves({0, 1, 0, -3, -5, 4, 21, 29, 20, 7, 1}),
      halves({0, 1, 0, -1, 2, 13, 26, 30, 20, 7, 1}),
  };
}

TheoremReport verify_positivity_range(const std::vector<RatPoly>& polys, const Rational& x_max,
                                      const Rational& grid_step) {
  Stopwatch clock;
  TheoremReport report;
  report.theorem_id = "polynomial-positivity";
  if (grid_step.sign() <= 0) throw ValidationError("grid step must be positive");
  if (x_max.sign() <= 0) throw ValidationError("x_max must be positive");
  std::optional<std::pair<std::size_t, Rational>> offending;
  std::int64_t evaluations = 0;
  auto check = [&](const Rational& x) {
    for (std::size_t i = 0; i < polys.size() && !offending; ++i) {
      ++evaluations;
      if (poly_eval(polys[i], x).sign() <= 0) offending = std::pair{i, x};
    }
  };
  std::int64_t grid_points = 0;
  for (Rational x = grid_step; x <= x_max && !offending; x += grid_step) {
    ++grid_points;
    check(x);
  }
  std::int64_t dimension_points = 0;
  for (int n = 3; n <= 1000 && !offending; ++n) {
    const Rational x(2, n - 1);
    if (x > x_max) continue;
    ++dimension_points;
    check(x);
  }
  bool lowest_positive = true;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (polys[i].lowest_term().sign() <= 0) lowest_positive = false;
    report.set("lowestTerm" + std::to_string(i + 1), polys[i].lowest_term().to_short_string());
  }
  report.set("xMax", x_max.to_short_string());
  report.set("gridStep", grid_step.to_short_string());
  report.set("gridPoints", grid_points);
  report.set("dimensionPoints", dimension_points);
  report.set("evaluations", evaluations);
  if (offending) {
    report.status = TheoremStatus::CounterexampleFound;
    report.set("offendingPolynomial", static_cast<std::int64_t>(offending->first + 1));
    report.set("offendingX", offending->second.to_short_string());
    report.notes.push_back("polynomial " + std::to_string(offending->first + 1) + " is not positive at x = " +
                           exact_and_approx(offending->second));
  } else if (!lowest_positive) {
    report.status = TheoremStatus::Failed;
    report.notes.push_back("a lowest-degree coefficient is not positive");
  } else {
    report.status = TheoremStatus::Verified;
    report.notes.push_back("positive at grid resolution " + grid_step.to_short_string() +
                           " and at every x = 2/(n-1) <= x_max with n <= 1000");
  }
  report.seconds = clock.seconds();
  return report;
}

TheoremReport verify_polynomials(const RunOptions& options) {
  Stopwatch clock;
  TheoremReport report;
  report.theorem_id = "polynomials";
  const auto rec = reconstruct_image_polynomials();
  const auto printed = reference_image_polynomials();
  bool twice_integral = true;
  for (std::size_t i = 0; i < rec.polynomials.size(); ++i) {
    const RatPoly& p = rec.polynomials[i];
    const std::string name = i < 4 ? "p" + std::to_string(i + 1) : "pTail";
    report.set(name, p.to_string());
    report.set(name + "MatchesPrinted", p == printed[i]);
    for (const auto& c : p.coefficients()) twice_integral = twice_integral && (c * 2).is_integer();
    const std::size_t top = static_cast<std::size_t>(std::max(p.degree(), printed[i].degree()));
    for (std::size_t k = 0; k <= top; ++k) {
      if (p.coefficient(k) != printed[i].coefficient(k)) {
        report.notes.push_back(name + ": computed x^" + std::to_string(k) + " coefficient " +
                               p.coefficient(k).to_short_string() + ", printed " +
                               printed[i].coefficient(k).to_short_string());
      }
    }
  }
  report.set("interpolationConsistent", rec.consistent);
  report.set("coefficientsTwiceIntegral", twice_integral);

  // The image lies in the hyperplane: x (p1 + p2 + p3 + p4 + (n - 4) pTail) = x with n - 4 = 2/x - 3.
  RatPoly total;
  {
    std::vector<Rational> acc(12, Rational(0));
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t k = 0; k < rec.polynomials[i].coefficients().size(); ++k) {
        acc[k + 1] += rec.polynomials[i].coefficient(k);
      }
    }
    for (std::size_t k = 0; k < rec.polynomials[4].coefficients().size(); ++k) {
      acc[k] += rec.polynomials[4].coefficient(k) * 2;
      acc[k + 1] -= rec.polynomials[4].coefficient(k) * 3;
    }
    total = RatPoly(acc);
  }
  const bool hyperplane = total == RatPoly({Rational(0), Rational(1)});
  report.set("hyperplaneIdentity", hyperplane);

  const Rational needed_max(2, 9);  // x = 2/(n-1) for n >= 10
  TheoremReport needed = verify_positivity_range(rec.polynomials, needed_max, options.grid_step);
  needed.theorem_id = "polynomial-positivity-n-ge-10";
  TheoremReport claimed = verify_positivity_range(rec.polynomials, Rational(2278, 10000), options.grid_step);
  claimed.theorem_id = "polynomial-positivity-to-0.2278";
  claimed.notes.push_back("informational: the stated bound 0.2278 is not needed for n >= 10");

  // Direct route, independent of the interpolants.
  bool direct_ok = true;
  std::int64_t direct_checked = 0;
  for (int n = 10; n <= 64; ++n) {
    const UnfoldList list = long_range_list(n);
    const RatVector image = ridge_midpoint_image(n, list);
    const bool positive = std::all_of(image.begin(), image.end(), [](const Rational& r) { return r.sign() > 0; });
    const Unfolding u = embed_chain(list);
    const bool overlap = interiors_overlap(u.placements.front(), u.placements[9]);
    const Rational x(2, n - 1);
    bool on_polys = true;
    for (std::size_t c = 0; c < image.size(); ++c) {
      on_polys = on_polys && poly_eval(rec.polynomials[std::min<std::size_t>(c, 4)], x) == image[c];
    }
    ++direct_checked;
    if (!(positive && overlap && on_polys)) {
      direct_ok = false;
      report.notes.push_back("direct check failed at n = " + std::to_string(n));
    }
  }
  report.set("directDimensionsChecked", direct_checked);
  report.set("directAllPositiveAndOverlapping", direct_ok);
  report.status = rec.consistent && twice_integral && hyperplane && direct_ok && needed.verified()
                      ? TheoremStatus::Verified
                      : TheoremStatus::Failed;
  report.parts.push_back(std::move(needed));
  report.parts.push_back(std::move(claimed));
  report.seconds = clock.seconds();
  return report;
}

TheoremReport verify_orthoplex_counterexamples(std::optional<int> dimension) {
  Stopwatch clock;
  TheoremReport report;
  report.theorem_id = "orthoplex-counterexamples";
  bool all_found = true;
  auto run = [&](int n, const UnfoldList& list, bool require_centroid) {
    TheoremReport part = check_counterexample(n, list);
    const bool found = part.status == TheoremStatus::CounterexampleFound;
    const bool by_centroid = !part.witnesses.empty() && part.witnesses.front().kind == OverlapKind::MustOverlapByCentroid;
    if (!found || (require_centroid && !by_centroid)) all_found = false;
    report.parts.push_back(std::move(part));
  };
  for (const auto& entry : builtin_counterexamples()) {
    for (int n : entry.dimensions) {
      if (!dimension || *dimension == n) run(n, entry.list, true);
    }
  }
  if (dimension && *dimension > 9) {
    auto part = check_counterexample(*dimension, long_range_list(*dimension));
    const RatVector image = ridge_midpoint_image(*dimension, long_range_list(*dimension));
    const bool positive = std::all_of(image.begin(), image.end(), [](const Rational& r) { return r.sign() > 0; });
    part.set("ridgeMidpointImagePositive", positive);
    if (positive && !part.witnesses.empty()) {
      // The ridge-midpoint image sits on the last facet and strictly inside the first.
      part.witnesses.front().point = image;
    }
    if (part.status != TheoremStatus::CounterexampleFound || !positive) all_found = false;
    report.parts.push_back(std::move(part));
  } else if (dimension && *dimension < 5) {
    throw ValidationError("orthoplex counterexamples exist only for n > 4");
  }
  for (const auto& p : report.parts) {
    for (const auto& w : p.witnesses) report.witnesses.push_back(w);
  }
  report.set("chainsChecked", as_stat(report.parts.size()));
  report.status = all_found && !report.parts.empty() ? TheoremStatus::CounterexampleFound : TheoremStatus::Failed;
  report.seconds = clock.seconds();
  return report;
}

std::vector<std::string> count_targets() {
  return {"octahedron-nets", "cube4-unfoldings", "q3-paths",          "q4-paths", "kirchhoff",
          "burnside",        "orthoplex4-unfoldings", "q5-paths"};
}

namespace {

bool is_long_target(const std::string& t) { return t == "orthoplex4-unfoldings" || t == "q5-paths"; }

TheoremReport count_one(const std::string& target, const RunOptions& options) {
  TheoremReport report;
  report.theorem_id = "counts/" + target;
  auto expect = [&](const std::string& key, std::int64_t actual, std::int64_t expected) {
    report.set(key, actual);
    report.set(key + "Expected", expected);
    return actual == expected;
  };
  CensusOptions census_options;
  census_options.allow_long = options.allow_long;
  census_options.jobs = options.jobs;
  bool ok = false;
  if (target == "octahedron-nets" || target == "orthoplex4-unfoldings") {
    const int n = target == "octahedron-nets" ? 3 : 4;
    const SkeletonGraph cube = hypercube_graph(n);
    std::atomic<std::int64_t> nets{0};
    census_options.on_representative = [&](EdgeMask tree) {
      if (is_net(embed_tree(n, orthoplex_ridge_tree(SpanningTree(cube, tree))))) ++nets;
    };
    const auto census = count_spanning_trees_up_to_symmetry(cube, census_options);
    ok = expect("unfoldings", as_stat(census.orbits), n == 3 ? 11 : 110912);
    ok = expect("nets", nets.load(), as_stat(census.orbits)) && ok;
    ok = expect("spanningTrees", as_stat(census.total), as_stat(census.kirchhoff)) && ok;
    report.set("groupOrder", as_stat(census.group_order));
  } else if (target == "cube4-unfoldings") {
    const auto census = count_spanning_trees_up_to_symmetry(orthoplex_graph(4), census_options);
    ok = expect("unfoldings", as_stat(census.orbits), 261);
    ok = expect("spanningTrees", as_stat(census.total), as_stat(census.kirchhoff)) && ok;
    report.set("groupOrder", as_stat(census.group_order));
  } else if (target == "q3-paths" || target == "q4-paths" || target == "q5-paths") {
    const int n = target[1] - '0';
    const auto census = count_spanning_paths_up_to_symmetry(n, options.allow_long, options.jobs);
    const std::int64_t expected = n == 3 ? 3 : n == 4 ? 238 : 48828036;
    ok = expect("spanningPaths", as_stat(census.up_to_symmetry), expected);
    report.set("spanningPathsUpToReversal", as_stat(census.up_to_symmetry_and_reversal));
    report.set("reversalSymmetric", as_stat(census.reversal_symmetric));
    report.set("directedFromFixedStart", as_stat(census.directed_from_start));
    report.notes.push_back(
        "spanningPaths counts directed Hamiltonian paths up to the hyperoctahedral group "
        "(equivalently spanning lists up to relabeling); spanningPathsUpToReversal also identifies reversals");
  } else if (target == "kirchhoff") {
    const SkeletonGraph q3 = hypercube_graph(3);
    const SkeletonGraph q4 = hypercube_graph(4);
    ok = expect("q3Kirchhoff", as_stat(kirchhoff_tree_count(q3)), 384);
    ok = expect("q4Kirchhoff", as_stat(kirchhoff_tree_count(q4)), 42467328) && ok;
    std::int64_t q3_total = 0;
    for_each_spanning_tree(q3, [&](EdgeMask) { ++q3_total; });
    ok = expect("q3Enumerated", q3_total, 384) && ok;
    ok = expect("cube4Kirchhoff", as_stat(kirchhoff_tree_count(orthoplex_graph(4))), 82944) && ok;
    if (options.allow_long) {
      std::atomic<std::int64_t> q4_total{0};
      for_each_spanning_tree(q4, [&](EdgeMask) { q4_total.fetch_add(1, std::memory_order_relaxed); }, options.jobs);
      ok = expect("q4Enumerated", q4_total.load(), 42467328) && ok;
    }
  } else if (target == "burnside") {
    ok = expect("octahedronUnfoldings", as_stat(burnside_tree_orbit_count(hypercube_graph(3))), 11);
    ok = expect("cube4Unfoldings", as_stat(burnside_tree_orbit_count(orthoplex_graph(4))), 261) && ok;
    ok = expect("orthoplex4Unfoldings", as_stat(burnside_tree_orbit_count(hypercube_graph(4))), 110912) && ok;
    report.notes.push_back("orbit counts by Burnside's lemma, independent of the canonical-form census");
  } else {
    throw ValidationError("unknown count target '" + target + "'");
  }
  report.status = ok ? TheoremStatus::Verified : TheoremStatus::Failed;
  return report;
}

}  // namespace

TheoremReport verify_counts(const std::string& target, const RunOptions& options) {
  Stopwatch clock;
  TheoremReport report;
  if (target == "all") {
    report.theorem_id = "counts";
    for (const auto& t : count_targets()) {
      if (is_long_target(t) && !options.allow_long) continue;
      report.parts.push_back(count_one(t, options));
    }
    report.status = all_parts_verified(report) ? TheoremStatus::Verified : TheoremStatus::Failed;
  } else {
    if (is_long_target(target) && !options.allow_long) {
      throw ResourceError("count target '" + target + "' is long-running; pass --force");
    }
    report = count_one(target, options);
  }
  report.seconds = clock.seconds();
  return report;
}

}  // namespace polynet
