#pragma once

// Independent reference implementations used only by the tests.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

// Every consecutive sublist checked for all-even multiplicities.
inline bool valid_by_sublists(const std::vector<int>& list, int n) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    std::vector<int> counts(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t j = i; j < list.size(); ++j) {
      ++counts[static_cast<std::size_t>(list[j])];
      if (std::all_of(counts.begin(), counts.end(), [](int c) { return c % 2 == 0; })) return false;
    }
  }
  return true;
}

// Walks the Gray code path with an explicit coordinate vector.
inline bool valid_by_walk(const std::vector<int>& list, int n) {
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  std::set<std::vector<int>> seen{v};
  for (int a : list) {
    v[static_cast<std::size_t>(a - 1)] ^= 1;
    if (!seen.insert(v).second) return false;
  }
  return true;
}

// All lists over {1..n} of the given length without immediate repeats.
inline void for_each_list(int n, std::size_t length, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> cur;
  std::function<void()> rec = [&] {
    if (cur.size() == length) {
      f(cur);
      return;
    }
    for (int a = 1; a <= n; ++a) {
      if (!cur.empty() && cur.back() == a) continue;
      cur.push_back(a);
      rec();
      cur.pop_back();
    }
  };
  rec();
}

struct Graph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

inline Graph cube(int n) {
  Graph g{1 << n, {}};
  for (int v = 0; v < (1 << n); ++v) {
    for (int b = 0; b < n; ++b) {
      if (!(v >> b & 1)) g.edges.emplace_back(v, v | (1 << b));
    }
  }
  return g;
}

inline Graph complete(int m) {
  Graph g{m, {}};
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) g.edges.emplace_back(i, j);
  }
  return g;
}

inline int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
  return x;
}

// Spanning trees as sorted edge-index sets, by brute force over subsets of size V-1.
inline std::vector<std::vector<int>> spanning_trees(const Graph& g) {
  std::vector<std::vector<int>> out;
  const int need = g.vertices - 1;
  std::vector<int> pick;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(pick.size()) == need) {
      std::vector<int> parent(static_cast<std::size_t>(g.vertices));
      std::iota(parent.begin(), parent.end(), 0);
      for (int e : pick) {
        const int a = find_root(parent, g.edges[static_cast<std::size_t>(e)].first);
        const int b = find_root(parent, g.edges[static_cast<std::size_t>(e)].second);
        if (a == b) return;
        parent[static_cast<std::size_t>(a)] = b;
      }
      out.push_back(pick);
      return;
    }
    for (int e = start; e < static_cast<int>(g.edges.size()); ++e) {
      pick.push_back(e);
      rec(e + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

// Hyperoctahedral group acting on cube vertices: permute coordinates, then flip.
inline std::vector<std::vector<int>> cube_symmetries(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    for (int flip = 0; flip < (1 << n); ++flip) {
      std::vector<int> map(static_cast<std::size_t>(1 << n));
      for (int v = 0; v < (1 << n); ++v) {
        int w = 0;
        for (int b = 0; b < n; ++b) {
          if (v >> b & 1) w |= 1 << perm[static_cast<std::size_t>(b)];
        }
        map[static_cast<std::size_t>(v)] = w ^ flip;
      }
      out.push_back(std::move(map));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline std::size_t tree_orbits(const Graph& g, const std::vector<std::vector<int>>& group) {
  auto index_of = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      if (g.edges[e] == std::pair{u, v}) return static_cast<int>(e);
    }
    return -1;
  };
  std::set<std::vector<int>> canon;
  for (const auto& t : spanning_trees(g)) {
    std::vector<int> best;
    for (const auto& s : group) {
      std::vector<int> img;
      for (int e : t) {
        const auto [u, v] = g.edges[static_cast<std::size_t>(e)];
        img.push_back(index_of(s[static_cast<std::size_t>(u)], s[static_cast<std::size_t>(v)]));
      }
      std::sort(img.begin(), img.end());
      if (best.empty() || img < best) best = img;
    }
    canon.insert(best);
  }
  return canon.size();
}

// Directed Hamiltonian paths of Q_n starting at vertex 0.
inline std::uint64_t hamiltonian_paths_from_origin(int n) {
  const int total = 1 << n;
  std::uint64_t count = 0;
  std::vector<char> seen(static_cast<std::size_t>(total), 0);
  std::function<void(int, int)> rec = [&](int v, int depth) {
    if (depth == total) {
      ++count;
      return;
    }
    for (int b = 0; b < n; ++b) {
      const int w = v ^ (1 << b);
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = 1;
      rec(w, depth + 1);
      seen[static_cast<std::size_t>(w)] = 0;
    }
  };
  seen[0] = 1;
  rec(0, 1);
  return count;
}

// Solves A x = b by Gauss-Jordan over mpq; A must be invertible.
inline std::vector<mpq_class> solve(std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (sgn(a[p][c]) == 0) ++p;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(a[r][c]) == 0) continue;
      const mpq_class f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t r = 0; r < n; ++r) b[r] /= a[r][r];
  return b;
}

// Chain matrices multiplied out in full, column formula written independently.
inline std::vector<std::vector<mpq_class>> chain_product(int n, const std::vector<int>& list) {
  std::vector<std::vector<mpq_class>> m(static_cast<std::size_t>(n), std::vector<mpq_class>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  for (int a : list) {
    std::vector<std::vector<mpq_class>> r(static_cast<std::size_t>(n), std::vector<mpq_class>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        mpq_class s = 0;
        for (int k = 0; k < n; ++k) {
          mpq_class mkj = k == j ? 1 : 0;
          if (j == a - 1) mkj = k == j ? mpq_class(-1) : mpq_class(mpq_class(2) / (n - 1));
          s += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * mkj;
        }
        r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s;
      }
    }
    m = std::move(r);
  }
  return m;
}

}  // namespace oracle
