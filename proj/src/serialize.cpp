#include "cliquepack/serialize.hpp"

namespace cliquepack {

Json to_json(const FractionalPacking& p) {
  Json cliques = Json::array();
  Json weights = Json::array();
  for (const auto& [q, w] : p.weights) {
    cliques.push_back(q);
    weights.push_back(to_string(w));
  }
  return Json{{"r", p.r}, {"cliques", std::move(cliques)}, {"weights", std::move(weights)}};
}

FractionalPacking packing_from_json(const Json& doc) {
  try {
    FractionalPacking p;
    p.r = doc.at("r").get<int>();
    const auto& cliques = doc.at("cliques");
    const auto& weights = doc.at("weights");
    if (!cliques.is_array() || !weights.is_array() || cliques.size() != weights.size()) {
      throw ParseError("packing JSON needs equally long 'cliques' and 'weights' arrays");
    }
    for (std::size_t i = 0; i < cliques.size(); ++i) {
      auto q = cliques[i].get<Clique>();
      if (!p.weights.emplace(std::move(q), parse_rational(weights[i].get<std::string>())).second) {
        throw ParseError("packing JSON lists a clique twice");
      }
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed packing JSON: ") + e.what());
  }
}

Json to_json(const MultipartiteProfile& profile) { return Json(profile.parts()); }

Json to_json(const SymmetrizationTrace& trace) {
  Json steps = Json::array();
  for (const auto& s : trace.steps) {
    steps.push_back(Json{{"classes", Json::array({s.class_a, s.class_b})},
                         {"direction", to_string(s.direction)},
                         {"h_before", to_string(s.h_before)},
                         {"h_after", to_string(s.h_after)},
                         {"e_before", s.e_before},
                         {"e_after", s.e_after}});
  }
  return Json{{"r", trace.r},
              {"n", trace.initial.order()},
              {"e", trace.initial.edge_count()},
              {"steps", std::move(steps)},
              {"final_profile", to_json(trace.profile)},
              {"monotone", trace.is_monotone()}};
}

Json to_json(const PackingScalars& s) {
  return Json{{"n", s.n},
              {"r", s.r},
              {"profile", to_json(s.profile)},
              {"e_G", s.e_G},
              {"e_H", s.e_H},
              {"x1", to_string(s.x1)},
              {"k_G", to_string(s.k_G)},
              {"t_H", to_string(s.t_H)},
              {"k_H", to_string(s.k_H)},
              {"alpha", to_string(s.alpha)}};
}

Json to_json(const TheoremReport& report) {
  return Json{{"n", report.n},
              {"r", report.r},
              {"e", report.edges},
              {"k", to_string(report.k)},
              {"nu_star", to_string(report.nu_star)},
              {"bound", to_string(report.bound)},
              {"satisfied", report.satisfied}};
}

Json to_json(const AbcExample& ex) {
  return Json{{"n", ex.n},
              {"t", ex.t},
              {"sizes", {ex.size_a, ex.size_b, ex.size_c}},
              {"e", ex.edges},
              {"k_integral", ex.k_integral},
              {"k_formula", to_string(ex.k_formula)},
              {"f_t", to_string(ex.f_t)},
              {"triangles", ex.triangles},
              {"edges_in_triangles", ex.edges_in_triangles},
              {"bc_edges_in_no_triangle", ex.bc_edges_in_no_triangle}};
}

}  // namespace cliquepack
