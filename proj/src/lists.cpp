#include "polynet/lists.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <unordered_map>
#include <unordered_set>

#include "polynet/errors.hpp"
#include "polynet/parallel.hpp"

namespace polynet {

namespace {

constexpr CubeVertex bit_of(int label) { return CubeVertex{1} << (label - 1); }

// Visited-vertex set: a flat bitmap for small cubes, a hash set otherwise.
class VertexSet {
 public:
  explicit VertexSet(int n) {
    if (n <= 20) dense_.assign(std::size_t{1} << n, 0);
  }
  bool contains(CubeVertex v) const {
    return dense_.empty() ? sparse_.count(v) != 0 : dense_[v] != 0;
  }
  void insert(CubeVertex v) {
    if (dense_.empty()) {
      sparse_.insert(v);
    } else {
      dense_[v] = 1;
    }
  }
  void erase(CubeVertex v) {
    if (dense_.empty()) {
      sparse_.erase(v);
    } else {
      dense_[v] = 0;
    }
  }

 private:
  std::vector<char> dense_;
  std::unordered_set<CubeVertex> sparse_;
};

}  // namespace

UnfoldList::UnfoldList(int n, std::vector<int> entries) : n_(n), entries_(std::move(entries)) {
  if (n < 1 || n > 64) throw ValidationError("dimension must lie in [1, 64], got " + std::to_string(n));
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const int a = entries_[i];
    if (a < 1 || a > n) {
      throw ValidationError("label " + std::to_string(a) + " at position " + std::to_string(i + 1) +
                            " is outside {1.." + std::to_string(n) + "}");
    }
    if (i > 0 && entries_[i - 1] == a) {
      throw ValidationError("label " + std::to_string(a) + " repeated at positions " +
                            std::to_string(i) + " and " + std::to_string(i + 1));
    }
  }
}

UnfoldList UnfoldList::parse(int n, std::string_view text) {
  std::vector<int> entries;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (i < text.size()) {
    if (is_sep(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    const auto token = text.substr(i, j - i);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ValidationError("not an integer label: '" + std::string(token) + "'");
    }
    entries.push_back(value);
    i = j;
  }
  return UnfoldList(n, std::move(entries));
}

UnfoldList UnfoldList::reversed() const {
  UnfoldList out = *this;
  std::reverse(out.entries_.begin(), out.entries_.end());
  return out;
}

UnfoldList UnfoldList::with_dimension(int n) const { return UnfoldList(n, entries_); }

std::string UnfoldList::to_string() const {
  std::string s = "<";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(entries_[i]);
  }
  return s + ">";
}

bool is_valid_list(const UnfoldList& list) {
  VertexSet seen(list.dimension());
  CubeVertex v = 0;
  seen.insert(v);
  for (int a : list.entries()) {
    v ^= bit_of(a);
    if (seen.contains(v)) return false;
    seen.insert(v);
  }
  return true;
}

std::optional<std::pair<std::size_t, std::size_t>> shortest_even_window(const UnfoldList& list) {
  // Window (i, j] is all-even iff prefix parities i and j coincide.
  std::unordered_map<CubeVertex, std::size_t> last_seen;
  std::optional<std::pair<std::size_t, std::size_t>> best;
  CubeVertex v = 0;
  last_seen[v] = 0;
  for (std::size_t j = 1; j <= list.size(); ++j) {
    v ^= bit_of(list[j - 1]);
    if (auto it = last_seen.find(v); it != last_seen.end()) {
      const std::size_t i = it->second;
      if (!best || j - i < best->second + 1 - best->first) best = std::pair{i + 1, j};
    }
    last_seen[v] = j;
  }
  return best;
}

CubePath list_to_path(const UnfoldList& list, CubeVertex start) {
  CubePath path{list.dimension(), {start}};
  path.vertices.reserve(list.size() + 1);
  for (int a : list.entries()) path.vertices.push_back(path.vertices.back() ^ bit_of(a));
  return path;
}

UnfoldList path_to_list(const CubePath& path) {
  std::vector<int> entries;
  for (std::size_t i = 1; i < path.vertices.size(); ++i) {
    const CubeVertex d = path.vertices[i] ^ path.vertices[i - 1];
    if (d == 0 || (d & (d - 1)) != 0) {
      throw ValidationError("path step " + std::to_string(i) + " does not flip exactly one bit");
    }
    entries.push_back(std::countr_zero(d) + 1);
  }
  return UnfoldList(path.n, std::move(entries));
}

UnfoldList relabel_first_occurrence(const UnfoldList& list) {
  std::vector<int> map(static_cast<std::size_t>(list.dimension()) + 1, 0);
  int next = 0;
  std::vector<int> out;
  out.reserve(list.size());
  for (int a : list.entries()) {
    if (map[a] == 0) map[a] = ++next;
    out.push_back(map[a]);
  }
  return UnfoldList(list.dimension(), std::move(out));
}

UnfoldList canonicalize_list(const UnfoldList& list) {
  return std::min(relabel_first_occurrence(list), relabel_first_occurrence(list.reversed()));
}

bool is_reversal_symmetric(const UnfoldList& list) {
  return relabel_first_occurrence(list) == relabel_first_occurrence(list.reversed());
}

namespace {

struct ListWalker {
  int n;
  std::size_t length;
  LabelMode mode;
  const std::function<void(const std::vector<int>&)>& visit;
  VertexSet seen;
  std::vector<int> entries;

  void run(CubeVertex v, int max_label) {
    if (entries.size() == length) {
      visit(entries);
      return;
    }
    const int limit = mode == LabelMode::FirstOccurrence ? std::min(n, max_label + 1) : n;
    for (int a = 1; a <= limit; ++a) {
      if (!entries.empty() && entries.back() == a) continue;
      const CubeVertex w = v ^ bit_of(a);
      if (seen.contains(w)) continue;
      seen.insert(w);
      entries.push_back(a);
      run(w, std::max(max_label, a));
      entries.pop_back();
      seen.erase(w);
    }
  }
};

}  // namespace

void enumerate_valid_lists(int n, std::size_t length, const EnumerationOptions& options,
                           const std::function<void(const std::vector<int>&)>& visit) {
  const UnfoldList prefix(n, options.prefix);
  if (prefix.size() > length) return;
  if (options.labels == LabelMode::FirstOccurrence && relabel_first_occurrence(prefix) != prefix) {
    return;
  }
  ListWalker walker{n, length, options.labels, visit, VertexSet(n), {}};
  CubeVertex v = 0;
  walker.seen.insert(v);
  int max_label = 0;
  for (int a : prefix.entries()) {
    v ^= bit_of(a);
    if (walker.seen.contains(v)) return;
    walker.seen.insert(v);
    walker.entries.push_back(a);
    max_label = std::max(max_label, a);
  }
  walker.run(v, max_label);
}

std::uint64_t count_valid_lists(int n, std::size_t length, const EnumerationOptions& options) {
  std::uint64_t count = 0;
  enumerate_valid_lists(n, length, options, [&](const std::vector<int>&) { ++count; });
  return count;
}

namespace {

struct ExtensionWalker {
  int n;
  VertexSet used;
  std::vector<CubeVertex> head;  // prepended vertices, nearest first
  std::vector<CubeVertex> tail;  // appended vertices, nearest first
  const CubePath& base;
  const std::function<void(const CubePath&)>& visit;

  CubeVertex head_end() const { return head.empty() ? base.vertices.front() : head.back(); }
  CubeVertex tail_end() const { return tail.empty() ? base.vertices.back() : tail.back(); }

  bool blocked(CubeVertex v) const {
    for (int b = 0; b < n; ++b) {
      if (!used.contains(v ^ (CubeVertex{1} << b))) return false;
    }
    return true;
  }

  void grow_tail() {
    grow_head();
    const CubeVertex end = tail_end();
    for (int b = 0; b < n; ++b) {
      const CubeVertex w = end ^ (CubeVertex{1} << b);
      if (used.contains(w)) continue;
      used.insert(w);
      tail.push_back(w);
      grow_tail();
      tail.pop_back();
      used.erase(w);
    }
  }

  void grow_head() {
    if (blocked(head_end()) && blocked(tail_end())) {
      CubePath p{n, {}};
      p.vertices.reserve(head.size() + base.vertices.size() + tail.size());
      p.vertices.insert(p.vertices.end(), head.rbegin(), head.rend());
      p.vertices.insert(p.vertices.end(), base.vertices.begin(), base.vertices.end());
      p.vertices.insert(p.vertices.end(), tail.begin(), tail.end());
      visit(p);
      return;
    }
    const CubeVertex end = head_end();
    for (int b = 0; b < n; ++b) {
      const CubeVertex w = end ^ (CubeVertex{1} << b);
      if (used.contains(w)) continue;
      used.insert(w);
      head.push_back(w);
      grow_head();
      head.pop_back();
      used.erase(w);
    }
  }
};

}  // namespace

void for_each_maximal_extension(const CubePath& path,
                                const std::function<void(const CubePath&)>& visit) {
  if (path.vertices.empty()) throw ValidationError("maximal_path_extensions: empty path");
  if (path.n < 1 || path.n > 64) throw ValidationError("maximal_path_extensions: bad dimension");
  ExtensionWalker walker{path.n, VertexSet(path.n), {}, {}, path, visit};
  for (std::size_t i = 0; i < path.vertices.size(); ++i) {
    const CubeVertex v = path.vertices[i];
    if (path.n < 64 && (v >> path.n) != 0) {
      throw ValidationError("maximal_path_extensions: vertex outside Q_n");
    }
    if (i > 0 && std::popcount(v ^ path.vertices[i - 1]) != 1) {
      throw ValidationError("maximal_path_extensions: consecutive vertices are not adjacent");
    }
    if (walker.used.contains(v)) {
      throw ValidationError("maximal_path_extensions: path revisits a vertex");
    }
    walker.used.insert(v);
  }
  walker.grow_tail();
}

std::vector<CubePath> maximal_path_extensions(const CubePath& path) {
  std::vector<CubePath> out;
  for_each_maximal_extension(path, [&](const CubePath& p) { out.push_back(p); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Hamiltonian-path counter over Q_n (n <= 5) with labels in first-occurrence
// order, so each hyperoctahedral class of directed paths is produced once.
struct HamiltonCounter {
  int n;
  std::uint32_t full;
  std::size_t target;
  std::vector<int> entries;
  std::uint64_t classes = 0;
  std::uint64_t symmetric = 0;

  bool reversal_fixed() const {
    // relabel(reverse(L)) == L, with L already in first-occurrence form.
    int map[8] = {0, 0, 0, 0, 0, 0, 0, 0};
    int next = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const int a = entries[entries.size() - 1 - i];
      if (map[a] == 0) map[a] = ++next;
      if (map[a] != entries[i]) return false;
    }
    return true;
  }

  // Prune when two unvisited vertices are dead ends: only the final vertex of
  // a Hamiltonian path may have no unvisited neighbour left after it is entered.
  bool hopeless(std::uint32_t visited, std::uint32_t current) const {
    int dead_ends = 0;
    std::uint32_t open = full & ~visited;
    while (open) {
      const int v = std::countr_zero(open);
      open &= open - 1;
      int free_nbrs = 0;
      bool touches_current = false;
      for (int b = 0; b < n; ++b) {
        const std::uint32_t w = static_cast<std::uint32_t>(v) ^ (1u << b);
        if (!(visited >> w & 1u)) ++free_nbrs;
        if (w == current) touches_current = true;
      }
      if (free_nbrs == 0 && !touches_current) return true;
      if (free_nbrs + (touches_current ? 1 : 0) <= 1 && ++dead_ends > 1) return true;
    }
    return false;
  }

  void run(std::uint32_t visited, std::uint32_t v, int max_label) {
    if (entries.size() == target) {
      ++classes;
      if (reversal_fixed()) ++symmetric;
      return;
    }
    if (entries.size() + 3 < target && hopeless(visited, v)) return;
    const int limit = std::min(n, max_label + 1);
    for (int a = 1; a <= limit; ++a) {
      const std::uint32_t w = v ^ (1u << (a - 1));
      if (visited >> w & 1u) continue;
      entries.push_back(a);
      run(visited | (1u << w), w, std::max(max_label, a));
      entries.pop_back();
    }
  }
};

}  // namespace

SpanningPathCensus count_spanning_paths_up_to_symmetry(int n, bool allow_long, unsigned jobs) {
  if (n < 1) throw ValidationError("dimension must be positive");
  if (n > 5) throw ResourceError("spanning-path census is bounded to n <= 5");
  if (n == 5 && !allow_long) {
    throw ResourceError("the Q5 spanning-path census is long-running; pass allow_long/--force");
  }
  const std::size_t target = (std::size_t{1} << n) - 1;

  // Partition by first-occurrence prefixes of a fixed depth; reduction is by index.
  const std::size_t depth = std::min<std::size_t>(target, n >= 5 ? 8 : 3);
  std::vector<std::vector<int>> prefixes;
  enumerate_valid_lists(n, depth, {LabelMode::FirstOccurrence, {}},
                        [&](const std::vector<int>& p) { prefixes.push_back(p); });
  std::vector<std::pair<std::uint64_t, std::uint64_t>> partial(prefixes.size());
  parallel_for(prefixes.size(), jobs, [&](std::size_t i) {
    HamiltonCounter counter{n, n == 5 ? 0xFFFFFFFFu : ((1u << (1u << n)) - 1u), target, {}};
    std::uint32_t visited = 1u;
    std::uint32_t v = 0;
    int max_label = 0;
    for (int a : prefixes[i]) {
      v ^= 1u << (a - 1);
      visited |= 1u << v;
      max_label = std::max(max_label, a);
    }
    counter.entries = prefixes[i];
    counter.run(visited, v, max_label);
    partial[i] = {counter.classes, counter.symmetric};
  });

  SpanningPathCensus census;
  census.n = n;
  for (const auto& [c, s] : partial) {
    census.up_to_symmetry += c;
    census.reversal_symmetric += s;
  }
  std::uint64_t factorial = 1;
  for (int k = 2; k <= n; ++k) factorial *= static_cast<std::uint64_t>(k);
  // Spanning lists use every label, so S_n acts freely on them.
  census.directed_from_start = census.up_to_symmetry * factorial;
  census.up_to_symmetry_and_reversal = (census.up_to_symmetry + census.reversal_symmetric) / 2;
  return census;
}

}  // namespace polynet
