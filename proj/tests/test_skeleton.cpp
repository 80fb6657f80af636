#include <doctest.h>

#include <algorithm>
#include <mutex>

#include "oracles.hpp"
#include "polynet/errors.hpp"
#include "polynet/skeleton.hpp"

using namespace polynet;

TEST_CASE("graph builders") {
  const SkeletonGraph q3 = hypercube_graph(3);
  CHECK(q3.vertex_count() == 8);
  CHECK(q3.edge_count() == 12);
  CHECK(q3.automorphism_group().size() == 48);
  CHECK(hypercube_graph(4).automorphism_group().size() == 384);
  const SkeletonGraph o4 = orthoplex_graph(4);
  CHECK(o4.vertex_count() == 8);
  CHECK(o4.edge_count() == 24);
  CHECK(o4.automorphism_group().size() == 384);
  CHECK(complete_graph(5).automorphism_group().size() == 120);
  CHECK_THROWS_AS(SkeletonGraph("bad", 3, {{0, 1}, {1, 2}}, {{1, 0, 2}}), ValidationError);
}

TEST_CASE("spanning tree validation") {
  const SkeletonGraph k4 = complete_graph(4);
  CHECK(is_spanning_tree(k4, 0b000111));
  CHECK_FALSE(is_spanning_tree(k4, 0b001011));  // triangle 0-1-2 plus nothing to 3
  CHECK_FALSE(is_spanning_tree(k4, 0b000011));
  CHECK_THROWS_AS(SpanningTree(k4, 0b000011), ValidationError);
}

TEST_CASE("tree enumeration matches brute force and Kirchhoff") {
  struct Case {
    SkeletonGraph graph;
    oracle::Graph brute;
  };
  for (const auto& [graph, brute] : {Case{hypercube_graph(3), oracle::cube(3)}, Case{complete_graph(5), oracle::complete(5)},
                                     Case{complete_graph(6), oracle::complete(6)}}) {
    std::vector<EdgeMask> trees;
    for_each_spanning_tree(graph, [&](EdgeMask m) { trees.push_back(m); });
    std::sort(trees.begin(), trees.end());
    CHECK(std::adjacent_find(trees.begin(), trees.end()) == trees.end());
    for (EdgeMask m : trees) CHECK(is_spanning_tree(graph, m));
    CHECK(trees.size() == oracle::spanning_trees(brute).size());
    CHECK(kirchhoff_tree_count(graph) == static_cast<unsigned long>(trees.size()));
  }
  CHECK(kirchhoff_tree_count(hypercube_graph(3)) == 384);
  CHECK(kirchhoff_tree_count(hypercube_graph(4)) == 42467328);
  CHECK(kirchhoff_tree_count(orthoplex_graph(4)) == 82944);
  CHECK(kirchhoff_tree_count(complete_graph(8)) == 262144);
}

TEST_CASE("parallel tree enumeration produces the same set") {
  const SkeletonGraph g = orthoplex_graph(4);
  std::vector<EdgeMask> serial;
  for_each_spanning_tree(g, [&](EdgeMask m) { serial.push_back(m); });
  std::mutex lock;
  std::vector<EdgeMask> parallel;
  for_each_spanning_tree(g, [&](EdgeMask m) {
    std::lock_guard guard(lock);
    parallel.push_back(m);
  }, 3);
  std::sort(serial.begin(), serial.end());
  std::sort(parallel.begin(), parallel.end());
  CHECK(serial == parallel);
  CHECK(serial.size() == 82944);
}

TEST_CASE("tree census up to symmetry") {
  const auto q3 = count_spanning_trees_up_to_symmetry(hypercube_graph(3));
  CHECK(q3.orbits == 11);
  CHECK(q3.total == 384);
  CHECK(q3.group_order == 48);
  CHECK(q3.orbits == oracle::tree_orbits(oracle::cube(3), oracle::cube_symmetries(3)));

  const auto o4 = count_spanning_trees_up_to_symmetry(orthoplex_graph(4));
  CHECK(o4.orbits == 261);
  CHECK(o4.total == 82944);

  CHECK(burnside_tree_orbit_count(hypercube_graph(3)) == 11);
  CHECK(burnside_tree_orbit_count(orthoplex_graph(4)) == 261);
  CHECK(burnside_tree_orbit_count(hypercube_graph(4)) == 110912);
  CHECK(burnside_tree_orbit_count(complete_graph(5)) == 3);  // trees on 5 labeled vertices up to relabeling

  CHECK_THROWS_AS(count_spanning_trees_up_to_symmetry(hypercube_graph(4)), ResourceError);
}
