#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "polynet/errors.hpp"
#include "polynet/lists.hpp"

using namespace polynet;

TEST_CASE("list parsing and well-formedness") {
  CHECK(UnfoldList::parse(4, "1,2, 3 4").entries() == std::vector<int>{1, 2, 3, 4});
  CHECK(UnfoldList::parse(3, "").empty());
  CHECK_THROWS_AS(UnfoldList(4, {1, 1}), ValidationError);
  CHECK_THROWS_AS(UnfoldList(4, {1, 0, 2}), ValidationError);
  CHECK_THROWS_AS(UnfoldList(3, {4}), ValidationError);
  CHECK_THROWS(UnfoldList::parse(4, "1,x"));
}

TEST_CASE("validity examples") {
  CHECK_FALSE(is_valid_list(UnfoldList(4, {1, 2, 1, 2})));
  CHECK(shortest_even_window(UnfoldList(4, {1, 2, 1, 2})) == std::pair<std::size_t, std::size_t>{1, 4});
  CHECK(is_valid_list(UnfoldList(3, {1, 2, 1, 3, 1, 2, 1})));
  CHECK_FALSE(shortest_even_window(UnfoldList(3, {1, 2, 1, 3, 1, 2, 1})).has_value());
  CHECK(is_valid_list(UnfoldList(9, {1, 2, 3, 4, 2, 4, 1, 2, 3})));
  CHECK(shortest_even_window(UnfoldList(4, {3, 1, 2, 1, 2, 4})) == std::pair<std::size_t, std::size_t>{2, 5});
}

TEST_CASE("validity agrees with the sublist scan and the path walk") {
  std::size_t checked = 0;
  for (int n = 1; n <= 4; ++n) {
    for (std::size_t len = 0; len <= 10; ++len) {
      oracle::for_each_list(n, len, [&](const std::vector<int>& l) {
        const bool fast = is_valid_list(UnfoldList(n, l));
        REQUIRE(fast == oracle::valid_by_sublists(l, n));
        REQUIRE(fast == oracle::valid_by_walk(l, n));
        const auto window = shortest_even_window(UnfoldList(n, l));
        REQUIRE(window.has_value() == !fast);
        ++checked;
      });
    }
  }
  CHECK(checked > 100000);
}

TEST_CASE("list_to_path and path_to_list") {
  const CubePath p = list_to_path(UnfoldList(3, {3, 2, 3}), 0b101);
  CHECK(p.vertices == std::vector<CubeVertex>{0b101, 0b001, 0b011, 0b111});
  // The Gray code is read with bit 1 as the leftmost digit: 101 -> 100 -> 110 -> 111.
  CHECK(list_to_path(UnfoldList(3, {}), 0b110).vertices == std::vector<CubeVertex>{0b110});
  CHECK(path_to_list(p) == UnfoldList(3, {3, 2, 3}));
}

TEST_CASE("enumeration counts") {
  CHECK(count_valid_lists(4, 8, {LabelMode::FirstOccurrence, {}}) == 128);
  CHECK(count_valid_lists(4, 8) == 3072);
  CHECK(count_valid_lists(2, 1) == 2);
  CHECK(count_valid_lists(2, 3) == 2);
  CHECK(count_valid_lists(2, 3, {LabelMode::FirstOccurrence, {}}) == 1);
  CHECK(count_valid_lists(3, 7, {LabelMode::FirstOccurrence, {}}) == 3);
  CHECK(count_valid_lists(4, 15) == 5712);
  CHECK(count_valid_lists(4, 15) == oracle::hamiltonian_paths_from_origin(4));
  CHECK(count_valid_lists(4, 15, {LabelMode::FirstOccurrence, {}}) == 238);
  CHECK(count_valid_lists(4, 16) == 0);
  CHECK(count_valid_lists(3, 0) == 1);
}

TEST_CASE("enumeration emits distinct valid lists in lexicographic order") {
  for (int n = 2; n <= 4; ++n) {
    for (std::size_t len = 1; len <= 9; ++len) {
      for (LabelMode mode : {LabelMode::All, LabelMode::FirstOccurrence}) {
        std::vector<std::vector<int>> seen;
        enumerate_valid_lists(n, len, {mode, {}}, [&](const std::vector<int>& l) { seen.push_back(l); });
        CHECK(std::is_sorted(seen.begin(), seen.end()));
        CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
        std::size_t brute = 0;
        oracle::for_each_list(n, len, [&](const std::vector<int>& l) {
          if (!oracle::valid_by_walk(l, n)) return;
          if (mode == LabelMode::FirstOccurrence && relabel_first_occurrence(UnfoldList(n, l)).entries() != l) return;
          ++brute;
        });
        CHECK(seen.size() == brute);
        for (const auto& l : seen) CHECK(is_valid_list(UnfoldList(n, l)));
      }
    }
  }
}

TEST_CASE("prefix-restricted enumeration partitions the full enumeration") {
  std::uint64_t total = 0;
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      if (a == b) continue;
      total += count_valid_lists(4, 9, {LabelMode::All, {a, b}});
    }
  }
  CHECK(total == count_valid_lists(4, 9));
}

TEST_CASE("canonicalization") {
  CHECK(relabel_first_occurrence(UnfoldList(3, {3, 1, 2, 1})) == UnfoldList(3, {1, 2, 3, 2}));
  // The reverse <1,2,1,3> relabels to a smaller list.
  CHECK(canonicalize_list(UnfoldList(3, {3, 1, 2, 1})) == UnfoldList(3, {1, 2, 1, 3}));
  CHECK(canonicalize_list(UnfoldList(3, {1})) == UnfoldList(3, {1}));
  std::set<UnfoldList> classes;
  std::size_t symmetric = 0;
  enumerate_valid_lists(4, 8, {LabelMode::FirstOccurrence, {}},
                        [&](const std::vector<int>& l) { classes.insert(canonicalize_list(UnfoldList(4, l))); });
  for (const auto& c : classes) symmetric += is_reversal_symmetric(c) ? 1 : 0;
  CHECK(classes.size() == 66);
  CHECK(symmetric == 4);

  std::mt19937_64 rng(5);
  std::vector<std::vector<int>> pool;
  enumerate_valid_lists(5, 12, {}, [&](const std::vector<int>& l) {
    if (rng() % 500 == 0) pool.push_back(l);
  });
  REQUIRE(pool.size() > 50);
  for (const auto& l : pool) {
    const UnfoldList list(5, l);
    const UnfoldList c = canonicalize_list(list);
    CHECK(canonicalize_list(c) == c);
    std::vector<int> perm{1, 2, 3, 4, 5};
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> relabeled;
    const UnfoldList rev = list.reversed();
    for (int a : rev.entries()) relabeled.push_back(perm[static_cast<std::size_t>(a - 1)]);
    CHECK(canonicalize_list(UnfoldList(5, relabeled)) == c);
  }
}

TEST_CASE("maximal path extensions") {
  const CubePath ham = list_to_path(UnfoldList(3, {1, 2, 1, 3, 1, 2, 1}));
  const auto ext = maximal_path_extensions(ham);
  REQUIRE(ext.size() == 1);
  CHECK(ext.front() == ham);

  std::size_t min_vertices = 100;
  std::size_t count = 0;
  for_each_maximal_extension(CubePath{4, {0}}, [&](const CubePath& p) {
    ++count;
    min_vertices = std::min(min_vertices, p.vertices.size());
    // Both ends blocked.
    for (CubeVertex end : {p.vertices.front(), p.vertices.back()}) {
      for (int b = 0; b < 4; ++b) {
        const CubeVertex w = end ^ (CubeVertex{1} << b);
        CHECK(std::find(p.vertices.begin(), p.vertices.end(), w) != p.vertices.end());
      }
    }
  });
  CHECK(min_vertices >= 9);
  CHECK(min_vertices == 10);
  CHECK(count > 0);
  CHECK_THROWS(maximal_path_extensions(CubePath{3, {0, 3}}));
  CHECK_THROWS(maximal_path_extensions(CubePath{3, {0, 1, 0}}));
}

TEST_CASE("spanning paths up to symmetry") {
  const auto q3 = count_spanning_paths_up_to_symmetry(3);
  CHECK(q3.up_to_symmetry == 3);
  CHECK(q3.up_to_symmetry_and_reversal == 3);
  CHECK(q3.directed_from_start == oracle::hamiltonian_paths_from_origin(3));
  const auto q4 = count_spanning_paths_up_to_symmetry(4);
  CHECK(q4.up_to_symmetry == 238);
  // The hyperoctahedral group (order 384) acts freely on directed Hamiltonian paths.
  CHECK(q4.up_to_symmetry * 384 == 16 * oracle::hamiltonian_paths_from_origin(4));
  CHECK(q4.up_to_symmetry_and_reversal == (q4.up_to_symmetry + q4.reversal_symmetric) / 2);
  CHECK_THROWS_AS(count_spanning_paths_up_to_symmetry(5), ResourceError);
  CHECK_THROWS_AS(count_spanning_paths_up_to_symmetry(6, true), ResourceError);
}
