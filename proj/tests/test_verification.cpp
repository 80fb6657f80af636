#include <doctest.h>

#include <cmath>

#include "polynet/errors.hpp"
#include "polynet/verification.hpp"

using namespace polynet;

TEST_CASE("simplex sign structure") {
  const auto r = verify_simplex_sign_structure(3, 1);
  CHECK(r.verified());
  CHECK(embed_chain(UnfoldList(3, {1})).placements.back().coords().row(0) ==
        RatVector{Rational(-1), Rational(0), Rational(0)});
  for (int n = 2; n <= 10; ++n) CHECK(verify_simplex_sign_structure(n, 2 * n).verified());
  CHECK(*verify_simplex_sign_structure(10, 20).count("kChecked") == 10);
}

TEST_CASE("simplex all-net for small n") {
  for (int n = 2; n <= 4; ++n) {
    const auto r = verify_simplex_allnet(n);
    CHECK(r.verified());
    CHECK(*r.count("nonNets") == 0);
  }
  CHECK(*verify_simplex_allnet(4).count("spanningTrees") == 125);
  CHECK_THROWS_AS(verify_simplex_allnet(8), ResourceError);
}

TEST_CASE("4-orthoplex lemmas") {
  const auto eight = verify_orthoplex4_length8();
  CHECK(eight.verified());
  CHECK(*eight.count("validLists8") == 128);
  CHECK(*eight.count("classes") == 66);
  CHECK(*eight.count("selfReverse") == 4);
  CHECK(*eight.count("nets") == 66);
  CHECK(is_net(embed_chain(canonicalize_list(UnfoldList(4, {1, 2, 1, 3, 1, 2, 1, 4})))));

  const auto distance = verify_orthoplex4_distance();
  CHECK(distance.verified());
  CHECK(*distance.count("violations") == 0);
  CHECK(*distance.count("validListsLength15") == 238);
  CHECK(*distance.count("qualifyingPairs") == 40736);

  const auto paths = verify_orthoplex4_maximal_paths();
  CHECK(paths.verified());
  CHECK(*paths.count("minVertices") == 10);
  CHECK(*paths.count("blockedConfigLongestPath") == 4);

  const auto all = verify_orthoplex4_allnet();
  CHECK(all.verified());
  CHECK(all.parts.size() == 3);
}

TEST_CASE("distance parallel partitions agree") {
  RunOptions opts;
  opts.jobs = 3;
  const auto a = verify_orthoplex4_distance();
  const auto b = verify_orthoplex4_distance(opts);
  CHECK(a.stats == b.stats);
}

TEST_CASE("every valid 4-dimensional chain is a net") {
  const auto r = verify_orthoplex4_chains_exhaustive();
  CHECK(r.verified());
  CHECK(*r.count("overlappingPairs") == 0);
}

TEST_CASE("dim-5 spanning chain") {
  const auto entries = builtin_counterexamples();
  const auto& entry = entries.front();
  REQUIRE(entry.list.size() == 31);
  const Unfolding u = embed_chain(entry.list);
  const RatVector c = centroid(u.placements.back());
  const double expected[] = {0.22687086, 0.04417632, 0.36540937, 0.12942886, 0.23411458};
  for (std::size_t i = 0; i < 5; ++i) CHECK(std::abs(c[i].to_double() - expected[i]) < 1e-8);
  const auto r = check_counterexample(5, entry.list);
  CHECK(r.status == TheoremStatus::CounterexampleFound);
  REQUIRE(r.witnesses.size() == 1);
  const auto& w = r.witnesses.front();
  CHECK(w.kind == OverlapKind::MustOverlapByCentroid);
  CHECK(w.centroid_distance_sq < Rational(1, 5));
  CHECK(std::abs(std::sqrt(w.centroid_distance_sq.to_double()) - 0.24188305539) < 1e-9);
  REQUIRE(w.point.has_value());
  // Witness re-verification.
  CHECK(interiors_overlap(u.placements[w.facet_pair.first], u.placements[w.facet_pair.second]));
}

TEST_CASE("built-in counterexamples") {
  const auto entries = builtin_counterexamples();
  CHECK(entries.size() == 5);
  for (const auto& e : entries) {
    for (int n : e.dimensions) {
      CHECK(is_valid_list(e.list.with_dimension(n)));
      const auto r = check_counterexample(n, e.list);
      CHECK(r.status == TheoremStatus::CounterexampleFound);
      REQUIRE_FALSE(r.witnesses.empty());
      CHECK(r.witnesses.front().kind == OverlapKind::MustOverlapByCentroid);
      const auto& w = r.witnesses.front();
      const Unfolding u = embed_chain(e.list.with_dimension(n));
      CHECK(interiors_overlap(u.placements[w.facet_pair.first], u.placements[w.facet_pair.second]));
    }
  }
  CHECK(entries[2].list.size() == 15);
  CHECK(entries[3].dimensions == std::vector<int>{7, 8});
  CHECK(entries[3].list.size() == 12);

  const auto nine = verify_orthoplex_counterexamples(9);
  CHECK(nine.status == TheoremStatus::CounterexampleFound);
  REQUIRE(nine.witnesses.size() == 1);
  CHECK(nine.witnesses.front().facet_pair == std::pair<std::size_t, std::size_t>{0, 9});
  CHECK(verify_orthoplex_counterexamples().status == TheoremStatus::CounterexampleFound);
  const auto twelve = verify_orthoplex_counterexamples(12);
  CHECK(twelve.status == TheoremStatus::CounterexampleFound);
  CHECK_THROWS(verify_orthoplex_counterexamples(4));
}

TEST_CASE("4-dimensional lists never produce counterexamples") {
  const auto r = check_counterexample(4, UnfoldList(4, {1, 2, 1, 3, 1, 2, 1, 4, 1, 2, 1, 3, 1, 2, 1}), true);
  CHECK(r.status == TheoremStatus::Verified);
  CHECK(*r.count("pairsExamined") == 16 * 15 / 2);
  CHECK_THROWS_AS(check_counterexample(4, UnfoldList(4, {1, 2, 1, 2})), ValidationError);
}

TEST_CASE("ridge midpoint images") {
  const RatVector v = ridge_midpoint_image(10, UnfoldList(10, {}));
  CHECK(v[1] == Rational(0));
  CHECK(v[0] == Rational(1, 9));
  const RatVector image = ridge_midpoint_image(10, long_range_list(10));
  CHECK(sum(image) == Rational(1));
  for (const auto& x : image) CHECK(x.sign() > 0);
  CHECK_THROWS(ridge_midpoint_image(2, UnfoldList(2, {})));
  for (int n = 10; n <= 64; ++n) {
    const RatVector w = ridge_midpoint_image(n, long_range_list(n));
    CHECK(std::all_of(w.begin(), w.end(), [](const Rational& r) { return r.sign() > 0; }));
  }
}

TEST_CASE("image polynomials") {
  const auto rec = reconstruct_image_polynomials();
  CHECK(rec.consistent);
  REQUIRE(rec.polynomials.size() == 5);
  const auto printed = reference_image_polynomials();
  // Coordinates 2, 3, 4 and the tail agree with the printed coefficients.
  for (std::size_t i = 1; i < 5; ++i) CHECK(rec.polynomials[i] == printed[i]);
  // p1 differs only in the sign of the x^9 coefficient.
  CHECK(rec.polynomials[0].coefficient(9) == Rational(-1, 2));
  CHECK(printed[0].coefficient(9) == Rational(1, 2));
  for (std::size_t k = 0; k < 9; ++k) CHECK(rec.polynomials[0].coefficient(k) == printed[0].coefficient(k));
  const RatPoly tail({Rational(0), Rational(1, 2), Rational(0), Rational(-1, 2), Rational(1), Rational(13, 2),
                      Rational(13), Rational(15), Rational(10), Rational(7, 2), Rational(1, 2)});
  CHECK(rec.polynomials[4] == tail);
  for (const auto& p : rec.polynomials) {
    CHECK(p.lowest_term().sign() > 0);
    for (const auto& c : p.coefficients()) CHECK((c * 2).is_integer());
  }
  // The interpolants also describe n = 5..11 (five or more coordinates).
  for (int n = 5; n <= 11; ++n) {
    const RatVector image = ridge_midpoint_image(n, long_range_list(n));
    for (std::size_t c = 0; c < image.size(); ++c) {
      CHECK(poly_eval(rec.polynomials[std::min<std::size_t>(c, 4)], Rational(2, n - 1)) == image[c]);
    }
  }
  CHECK(poly_eval(rec.polynomials[0], Rational(2, 9)).sign() > 0);
  CHECK(poly_eval(rec.polynomials[0], Rational(1, 2)) == Rational(187, 1024));
  const auto extra = reconstruct_image_polynomials(12, {30});
  CHECK(extra.consistent);
}

TEST_CASE("positivity range") {
  const auto polys = reconstruct_image_polynomials().polynomials;
  CHECK(verify_positivity_range(polys, Rational(2, 9)).verified());
  CHECK(verify_positivity_range(polys, Rational(2277, 10000)).verified());
  const auto r = verify_positivity_range(polys, Rational(2278, 10000));
  CHECK(r.status == TheoremStatus::CounterexampleFound);
  CHECK(*r.count("offendingPolynomial") == 3);
  CHECK(poly_eval(polys[2], Rational(2278, 10000)).sign() < 0);
  CHECK_THROWS(verify_positivity_range(polys, Rational(0)));
  const auto full = verify_polynomials();
  CHECK(full.verified());
}

TEST_CASE("counts") {
  for (const char* target : {"octahedron-nets", "cube4-unfoldings", "q3-paths", "q4-paths", "kirchhoff", "burnside"}) {
    CAPTURE(target);
    CHECK(verify_counts(target).verified());
  }
  CHECK(*verify_counts("q4-paths").count("spanningPaths") == 238);
  CHECK(*verify_counts("q4-paths").count("spanningPathsUpToReversal") == 131);
  CHECK_THROWS_AS(verify_counts("q5-paths"), ResourceError);
  CHECK_THROWS_AS(verify_counts("nonsense"), ValidationError);
  const auto all = verify_counts("all");
  CHECK(all.verified());
  CHECK(all.parts.size() == 6);
}
