#pragma once

// Ridge-label lists, their Gray-code paths on the n-cube, and enumeration of
// valid lists (paths that never revisit a cube vertex).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polynet {

using CubeVertex = std::uint64_t;

/// Sequence of labels in {1..n} with no label repeated twice in a row.
class UnfoldList {
 public:
  UnfoldList() = default;
  /// Throws ValidationError on n outside [1, 64], labels outside {1..n}, or immediate repeats.
  UnfoldList(int n, std::vector<int> entries);
  /// Parses comma- and/or whitespace-separated labels. An empty string is the empty list.
  static UnfoldList parse(int n, std::string_view text);

  int dimension() const { return n_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }

  UnfoldList reversed() const;
  /// Same entries reinterpreted in a larger dimension.
  UnfoldList with_dimension(int n) const;
  /// "<1,2,3>"
  std::string to_string() const;

  friend bool operator==(const UnfoldList&, const UnfoldList&) = default;
  friend auto operator<=>(const UnfoldList& a, const UnfoldList& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  int n_ = 1;
  std::vector<int> entries_;
};

struct CubePath {
  int n = 0;
  std::vector<CubeVertex> vertices;

  friend bool operator==(const CubePath&, const CubePath&) = default;
  friend auto operator<=>(const CubePath&, const CubePath&) = default;
};

/// True iff the Gray-code path of the list never revisits a vertex.
/// Running XOR of prefix masks; O(k) expected.
bool is_valid_list(const UnfoldList& list);

/// Shortest window [start, end] (1-based, inclusive) in which every label occurs
/// an even number of times; nullopt for valid lists. Ties go to the earliest window.
std::optional<std::pair<std::size_t, std::size_t>> shortest_even_window(const UnfoldList& list);

/// Path of size k+1 starting at `start`, flipping bit a_i - 1 at step i.
CubePath list_to_path(const UnfoldList& list, CubeVertex start = 0);

/// Inverse of list_to_path for paths whose steps are single-bit flips.
UnfoldList path_to_list(const CubePath& path);

/// Relabels entries so labels appear in first-occurrence order 1, 2, 3, ...
UnfoldList relabel_first_occurrence(const UnfoldList& list);

/// Canonical representative under relabeling and reversal: the lexicographically
/// smaller of relabel(L) and relabel(reverse(L)).
UnfoldList canonicalize_list(const UnfoldList& list);

/// True iff relabel(reverse(L)) == relabel(L).
bool is_reversal_symmetric(const UnfoldList& list);

enum class LabelMode {
  All,              ///< every valid list over {1..n}
  FirstOccurrence,  ///< one list per relabeling class (labels introduced in order 1, 2, ...)
};

struct EnumerationOptions {
  LabelMode labels = LabelMode::All;
  /// Only lists extending this prefix are produced (used to partition work).
  std::vector<int> prefix;
};

/// Depth-first lexicographic enumeration of all valid lists of exactly `length`
/// entries. The visitor receives each list's entries; the span is reused between calls.
void enumerate_valid_lists(int n, std::size_t length, const EnumerationOptions& options,
                           const std::function<void(const std::vector<int>&)>& visit);

std::uint64_t count_valid_lists(int n, std::size_t length, const EnumerationOptions& options = {});

/// All paths obtained by extending `path` at either end until neither end can be
/// extended. Each returned path keeps the orientation of `path`. Sorted, no duplicates.
std::vector<CubePath> maximal_path_extensions(const CubePath& path);

/// Streaming form of maximal_path_extensions; each extension is produced exactly once.
void for_each_maximal_extension(const CubePath& path,
                                const std::function<void(const CubePath&)>& visit);

struct SpanningPathCensus {
  int n = 0;
  /// Spanning lists from a fixed start vertex, all labelings (directed Hamiltonian paths from 0).
  std::uint64_t directed_from_start = 0;
  /// Directed Hamiltonian paths up to the hyperoctahedral group.
  std::uint64_t up_to_symmetry = 0;
  /// Classes among those that are fixed by path reversal.
  std::uint64_t reversal_symmetric = 0;
  /// Undirected Hamiltonian paths up to the hyperoctahedral group (reversal identified).
  std::uint64_t up_to_symmetry_and_reversal = 0;
};

/// Hamiltonian paths of Q_n counted up to symmetry. n <= 4 always runs; n == 5
/// needs allow_long (it enumerates ~5e7 classes). Larger n throws ResourceError.
SpanningPathCensus count_spanning_paths_up_to_symmetry(int n, bool allow_long = false,
                                                       unsigned jobs = 1);

}  // namespace polynet
