#include <qnormal/json_io.hpp>

#include <sstream>

namespace qnormal {

using nlohmann::json;

json vector_json(std::span<const Integer> v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

std::vector<Integer> vector_from_json(const json& j) {
  std::vector<Integer> out;
  for (const auto& x : j) out.push_back(parse_integer(x.get<std::string>()));
  return out;
}

json to_json(const AdmissibilityReport& report) {
  return {{"admissible", report.admissible()},
          {"nonnegative", report.nonnegative},
          {"matching", report.matching},
          {"quad_condition", report.quad_condition},
          {"offending_tetrahedra", report.offending_tetrahedra},
          {"offending_rows", report.offending_rows}};
}

json to_json(const EnumerationResult& result, bool timing) {
  json vertices = json::array();
  for (const auto& v : result.vertices) {
    vertices.push_back({{"kind", std::string(to_string(v.kind))}, {"vector", vector_json(v.vector)}, {"support", v.support}});
  }
  json stats{{"rays_per_stage", result.stats.rays_per_stage},
             {"filtered_per_stage", result.stats.filtered_per_stage},
             {"combinations", result.stats.combinations}};
  if (timing) stats["wall_seconds"] = result.stats.wall_seconds;
  return {{"schema", kJsonSchema}, {"vertices", vertices}, {"statistics", stats}};
}

json to_json(const SurfaceInvariants& inv) {
  json comps = json::array();
  for (const auto& c : inv.components) {
    json classes = json::array();
    for (const auto& b : c.boundary_classes) {
      classes.push_back({{"boundary_component", b.boundary_component}, {"class", vector_json(b.coordinates)}});
    }
    comps.push_back({{"vector", vector_json(c.vector.entries())},
                     {"euler_characteristic", c.euler_characteristic},
                     {"orientable", c.orientable},
                     {"two_sided", c.two_sided},
                     {"closed", c.closed},
                     {"boundary_curves", c.boundary_curves},
                     {"weight", c.weight.str()},
                     {"size", c.size},
                     {"boundary_classes", classes}});
  }
  return {{"components", comps},
          {"component_count", inv.component_count()},
          {"euler_characteristic", inv.euler_characteristic},
          {"weight", inv.weight.str()},
          {"size", inv.size}};
}

json to_json(const SurveyRow& row) {
  json out{{"vertex", vector_json(row.vertex.vector)},
           {"kind", std::string(to_string(row.vertex.kind))},
           {"standard", vector_json(row.standard.entries())},
           {"surface", to_json(row.invariants)}};
  out["essential_disc"] = row.essential_disc ? json(*row.essential_disc) : json(nullptr);
  return out;
}

json survey_json(const std::vector<SurveyRow>& rows, CoordKind coords) {
  json out = json::array();
  for (const auto& r : rows) out.push_back(to_json(r));
  return {{"schema", kJsonSchema}, {"coords", std::string(to_string(coords))}, {"rows", out}};
}

json to_json(const RecognitionReport& report) {
  const auto& p = report.preconditions;
  json out{{"schema", kJsonSchema},
           {"verdict", std::string(to_string(report.verdict))},
           {"coords", std::string(to_string(report.coords))},
           {"preconditions",
            {{"checked", {{"orientable", p.orientable}, {"has_boundary", p.has_boundary},
                          {"single_boundary_component", p.single_boundary_component},
                          {"torus_boundary", p.torus_boundary}}},
             {"assumed", {{"irreducible", p.irreducible_assumed}, {"knot_complement", p.knot_complement_assumed}}}}},
           {"contract",
            "If the manifold is an irreducible knot complement: DISC_FOUND certifies the unknot, NO_DISC certifies "
            "a nontrivial knot. Irreducibility is assumed, not checked."}};
  if (!report.reason.empty()) out["reason"] = report.reason;
  if (report.verdict == Verdict::unsupported) return out;
  auto row_ref = [&](const std::optional<std::size_t>& i) -> json {
    if (!i) return nullptr;
    const auto& row = report.survey[*i];
    return {{"index", *i},
            {"vertex", vector_json(row.vertex.vector)},
            {"standard", vector_json(row.standard.entries())},
            {"surface", to_json(row.invariants)}};
  };
  out["witness"] = row_ref(report.witness);
  out["minimal_witness"] = row_ref(report.minimal_witness);
  out["witness_rechecked"] = report.witness_rechecked;
  out["oracle_agrees"] = report.oracle_agrees ? json(*report.oracle_agrees) : json(nullptr);
  json rows = json::array();
  for (const auto& r : report.survey) rows.push_back(to_json(r));
  out["survey"] = rows;
  out["statistics"] = {{"rays_per_stage", report.stats.rays_per_stage},
                       {"filtered_per_stage", report.stats.filtered_per_stage},
                       {"combinations", report.stats.combinations}};
  return out;
}

json to_json(const CrossCheckReport& report) {
  auto opt = [](const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); };
  json disc = json::array();
  for (const auto& d : report.discrepancies) {
    disc.push_back({{"check", d.check}, {"detail", d.detail}, {"vector", vector_json(d.vector)}});
  }
  return {{"schema", kJsonSchema},
          {"ok", report.ok()},
          {"quad_vertices", report.quad_vertices},
          {"standard_vertices", report.standard_vertices},
          {"quad_filter_agrees", report.quad_filter_agrees},
          {"quad_oracle_agrees", opt(report.quad_oracle_agrees)},
          {"standard_filter_agrees", report.standard_filter_agrees},
          {"standard_oracle_agrees", opt(report.standard_oracle_agrees)},
          {"projections_checked", report.projections_checked},
          {"quad_vertices_among_standard", report.quad_vertices_among_standard},
          {"warnings", report.warnings},
          {"discrepancies", disc}};
}

json to_json(const BoundarySurface& boundary) {
  json comps = json::array();
  for (const auto& c : boundary.components()) {
    json basis = json::array();
    for (const auto& chain : c.homology_basis) {
      json cells = json::array();
      for (const auto& [e, m] : chain) cells.push_back({{"edge", e}, {"multiplicity", m.str()}});
      basis.push_back(cells);
    }
    json torsion = json::array();
    for (const auto& t : c.torsion) torsion.push_back(t.str());
    comps.push_back({{"faces", c.faces.size()},
                     {"edges", c.edges},
                     {"vertices", c.vertices},
                     {"euler_characteristic", c.euler_characteristic},
                     {"orientable", c.orientable},
                     {"genus", c.genus},
                     {"homology_basis", basis},
                     {"torsion", torsion}});
  }
  return comps;
}

std::string sparse_rays(const EnumerationResult& result) {
  std::ostringstream os;
  for (const auto& v : result.vertices) {
    bool first = true;
    for (std::size_t i : v.support) {
      if (!first) os << ' ';
      os << i << ':' << v.vector[i];
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace qnormal
