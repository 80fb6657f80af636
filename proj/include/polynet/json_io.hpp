#pragma once

// JSON and SVG serialization. Rationals are "p/q" strings; every exact field
// has a float mirror under an "approx" key.

#include <string>
#include <vector>

#include <json.hpp>

#include "polynet/geometry.hpp"
#include "polynet/verification.hpp"

namespace polynet {

using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json vector_to_json(const RatVector& v);

/// {"index", "matrix": [[p/q]], "approx": [[float]]}; row-major, columns are vertices.
Json placement_to_json(const FacetPlacement& f, std::size_t index);

/// Throws ValidationError when the record is malformed or violates the placement invariants.
FacetPlacement placement_from_json(const Json& j);

/// {"n", "list", "placements": [...], "edges": [...]}
Json unfolding_to_json(const Unfolding& u, const UnfoldList& list);
std::vector<FacetPlacement> placements_from_json(const Json& j);

Json witness_to_json(const OverlapWitness& w);

/// Timings are omitted when include_timing is false.
Json report_to_json(const TheoremReport& report, bool include_timing);

/// SVG 1.1 drawing of a 3-dimensional unfolding projected to the plane of the
/// triangle with frame u = (1,-1,0)/sqrt 2, v = (1,1,-2)/sqrt 6.
std::string unfolding_to_svg(const Unfolding& u);

}  // namespace polynet
