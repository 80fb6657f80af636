#include "polynet/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "polynet/errors.hpp"

namespace polynet {

Json rational_to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ValidationError("expected a rational string, got " + j.dump());
}

Json vector_to_json(const RatVector& v) {
  Json exact = Json::array();
  Json approx = Json::array();
  for (const auto& x : v) {
    exact.push_back(rational_to_json(x));
    approx.push_back(x.to_double());
  }
  return Json{{"exact", exact}, {"approx", approx}};
}

Json placement_to_json(const FacetPlacement& f, std::size_t index) {
  const RatMatrix& m = f.coords();
  Json exact = Json::array();
  Json approx = Json::array();
  for (std::size_t r = 0; r < m.order(); ++r) {
    Json er = Json::array();
    Json ar = Json::array();
    for (std::size_t c = 0; c < m.order(); ++c) {
      er.push_back(rational_to_json(m(r, c)));
      ar.push_back(m(r, c).to_double());
    }
    exact.push_back(std::move(er));
    approx.push_back(std::move(ar));
  }
  return Json{{"index", index}, {"matrix", exact}, {"approx", approx}};
}

FacetPlacement placement_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("matrix") || !j["matrix"].is_array()) {
    throw ValidationError("placement record needs a \"matrix\" array");
  }
  const auto& rows = j["matrix"];
  std::vector<std::vector<Rational>> parsed;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != rows.size()) throw ValidationError("placement matrix must be square");
    std::vector<Rational> r;
    for (const auto& x : row) r.push_back(rational_from_json(x));
    parsed.push_back(std::move(r));
  }
  if (parsed.empty()) throw ValidationError("placement matrix is empty");
  return FacetPlacement(RatMatrix::from_rows(parsed));
}

Json unfolding_to_json(const Unfolding& u, const UnfoldList& list) {
  Json placements = Json::array();
  for (std::size_t i = 0; i < u.placements.size(); ++i) placements.push_back(placement_to_json(u.placements[i], i));
  Json edges = Json::array();
  for (const auto& e : u.edges) edges.push_back(Json{{"parent", e.parent}, {"child", e.child}, {"label", e.label}});
  return Json{{"n", u.n}, {"list", list.entries()}, {"placements", placements}, {"edges", edges}};
}

std::vector<FacetPlacement> placements_from_json(const Json& j) {
  const Json& arr = j.is_object() && j.contains("placements") ? j["placements"] : j;
  if (!arr.is_array()) throw ValidationError("expected an array of placements");
  std::vector<FacetPlacement> out;
  for (const auto& p : arr) out.push_back(placement_from_json(p));
  return out;
}

Json witness_to_json(const OverlapWitness& w) {
  Json out{{"n", w.list.dimension()},
           {"list", w.list.entries()},
           {"facetPair", {w.facet_pair.first, w.facet_pair.second}},
           {"kind", to_string(w.kind)},
           {"centroidDistanceSquared", rational_to_json(w.centroid_distance_sq)},
           {"approxCentroidDistance", std::sqrt(w.centroid_distance_sq.to_double())}};
  if (w.point) {
    out["point"] = vector_to_json(*w.point);
  } else {
    out["point"] = nullptr;
  }
  return out;
}

Json report_to_json(const TheoremReport& report, bool include_timing) {
  Json stats = Json::object();
  for (const auto& [key, value] : report.stats) {
    std::visit([&](const auto& v) { stats[key] = v; }, value);
  }
  Json witnesses = Json::array();
  for (const auto& w : report.witnesses) witnesses.push_back(witness_to_json(w));
  Json out{{"theoremId", report.theorem_id},
           {"status", to_string(report.status)},
           {"stats", stats},
           {"witnesses", witnesses},
           {"notes", report.notes}};
  if (!report.parts.empty()) {
    Json parts = Json::array();
    for (const auto& p : report.parts) parts.push_back(report_to_json(p, include_timing));
    out["parts"] = parts;
  }
  if (include_timing) out["seconds"] = report.seconds;
  return out;
}

std::string unfolding_to_svg(const Unfolding& u) {
  if (u.n != 3) throw DimensionError("SVG output is only available for n = 3");
  const double s2 = std::sqrt(2.0);
  const double s6 = std::sqrt(6.0);
  auto project = [&](const RatVector& p) {
    const double x = p[0].to_double();
    const double y = p[1].to_double();
    const double z = p[2].to_double();
    return std::pair{(x - y) / s2, (x + y - 2 * z) / s6};
  };
  std::vector<std::vector<std::pair<double, double>>> triangles;
  double min_x = std::numeric_limits<double>::max();
  double min_y = min_x;
  double max_x = std::numeric_limits<double>::lowest();
  double max_y = max_x;
  for (const auto& f : u.placements) {
    auto& tri = triangles.emplace_back();
    for (int label = 1; label <= 3; ++label) {
      auto [x, y] = project(f.vertex(label));
      y = -y;  // SVG y grows downwards
      tri.emplace_back(x, y);
      min_x = std::min(min_x, x);
      max_x = std::max(max_x, x);
      min_y = std::min(min_y, y);
      max_y = std::max(max_y, y);
    }
  }
  constexpr double scale = 100.0;
  constexpr double margin = 20.0;
  const double width = (max_x - min_x) * scale + 2 * margin;
  const double height = (max_y - min_y) * scale + 2 * margin;
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    os << "  <polygon id=\"facet-" << i << "\" points=\"";
    for (std::size_t k = 0; k < 3; ++k) {
      if (k) os << ' ';
      os << (triangles[i][k].first - min_x) * scale + margin << ',' << (triangles[i][k].second - min_y) * scale + margin;
    }
    os << "\" fill=\"" << (i == 0 ? "#f4c06a" : "#cfe3f5") << "\" stroke=\"#223\" stroke-width=\"1.5\"/>\n";
  }
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    double cx = 0;
    double cy = 0;
    for (const auto& [x, y] : triangles[i]) {
      cx += x / 3;
      cy += y / 3;
    }
    os << "  <text x=\"" << (cx - min_x) * scale + margin << "\" y=\"" << (cy - min_y) * scale + margin
       << "\" font-size=\"12\" text-anchor=\"middle\">" << i << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace polynet
