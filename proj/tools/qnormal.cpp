// qnormal: command-line front end for the normal surface engine.
//
// Exit codes: 0 = DISC_FOUND (or success), 1 = NO_DISC (or cross-check
// discrepancy), 2 = UNSUPPORTED, 3 = parse/resource/usage error.

#include <qnormal/coordinates.hpp>
#include <qnormal/enumeration.hpp>
#include <qnormal/errors.hpp>
#include <qnormal/json_io.hpp>
#include <qnormal/triangulation.hpp>
#include <qnormal/unknot.hpp>

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

namespace {

constexpr int kExitDisc = 0;
constexpr int kExitNoDisc = 1;
constexpr int kExitUnsupported = 2;
constexpr int kExitError = 3;

struct CommonOptions {
  std::string file;
  std::string coords = "quad";
  bool no_filter = false;
  bool oracle = false;
  bool json = false;
  std::size_t max_rays = 200000;
};

qnormal::PipelineConfig config_from(const CommonOptions& o) {
  qnormal::PipelineConfig cfg;
  cfg.coords = qnormal::parse_coord_kind(o.coords);
  cfg.filter = !o.no_filter;
  cfg.oracle = o.oracle;
  cfg.max_rays = o.max_rays;
  return cfg;
}

void add_common(CLI::App* cmd, CommonOptions& o, bool enumeration_flags) {
  cmd->add_option("file", o.file, "triangulation file")->required();
  cmd->add_flag("--json", o.json, "emit JSON");
  if (!enumeration_flags) return;
  cmd->add_option("--coords", o.coords, "coordinate system")->check(CLI::IsMember({"quad", "standard"}));
  cmd->add_flag("--no-filter", o.no_filter, "apply the quad condition only after enumeration");
  cmd->add_flag("--oracle", o.oracle, "cross-check against the brute-force oracle");
  cmd->add_option("--max-rays", o.max_rays, "cap on intermediate rays")->check(CLI::PositiveNumber);
}

std::string sparse(std::span<const qnormal::Integer> v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += std::to_string(i) + ":" + v[i].str();
  }
  return out.empty() ? "0" : out;
}

void print_rows(const std::vector<qnormal::SurveyRow>& rows) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    const auto& inv = row.invariants;
    std::cout << '#' << i++ << "  " << sparse(row.vertex.vector) << "\n    chi=" << inv.euler_characteristic
              << " components=" << inv.component_count() << " weight=" << inv.weight << " size=" << inv.size;
    for (const auto& c : inv.components) {
      std::cout << "\n    component chi=" << c.euler_characteristic << (c.orientable ? " orientable" : " non-orientable")
                << (c.closed ? " closed" : " bounded") << " curves=" << c.boundary_curves;
      for (const auto& b : c.boundary_classes) {
        std::cout << " [";
        for (std::size_t k = 0; k < b.coordinates.size(); ++k) std::cout << (k ? "," : "") << b.coordinates[k];
        std::cout << ']';
      }
    }
    if (row.essential_disc) std::cout << (*row.essential_disc ? "\n    ESSENTIAL DISC" : "");
    std::cout << '\n';
  }
}

int run_recognize(const CommonOptions& o) {
  const auto tri = qnormal::load_triangulation(o.file);
  const auto report = qnormal::recognize(tri, config_from(o));
  if (o.json) {
    std::cout << qnormal::to_json(report).dump(2) << '\n';
  } else {
    std::cout << qnormal::to_string(report.verdict) << '\n';
    if (!report.reason.empty()) std::cout << "reason: " << report.reason << '\n';
    if (report.witness) {
      const auto& row = report.survey[*report.witness];
      std::cout << "witness vertex: " << sparse(row.vertex.vector) << "\nstandard: " << sparse(row.standard.entries())
                << '\n';
    }
    if (report.verdict != qnormal::Verdict::unsupported) {
      std::cout << report.survey.size() << " vertex surfaces examined\n";
    }
  }
  switch (report.verdict) {
    case qnormal::Verdict::disc_found:
      return kExitDisc;
    case qnormal::Verdict::no_disc:
      return kExitNoDisc;
    case qnormal::Verdict::unsupported:
      return kExitUnsupported;
  }
  return kExitError;
}

int run_survey(const CommonOptions& o) {
  const auto tri = qnormal::load_triangulation(o.file);
  const auto cfg = config_from(o);
  const auto rows = qnormal::survey(tri, cfg);
  if (o.json) {
    std::cout << qnormal::survey_json(rows, cfg.coords).dump(2) << '\n';
  } else {
    print_rows(rows);
  }
  return 0;
}

int run_enumerate(const CommonOptions& o, const std::string& dump_rays, bool timing) {
  const auto tri = qnormal::load_triangulation(o.file);
  const auto cfg = config_from(o);
  const auto system =
      cfg.coords == qnormal::CoordKind::quad ? qnormal::q_matching_system(tri) : qnormal::standard_matching_system(tri);
  qnormal::EnumerationOptions opts;
  opts.filter = cfg.filter;
  opts.max_rays = cfg.max_rays;
  const auto result = qnormal::enumerate_dd(system, opts);
  int status = 0;
  if (cfg.oracle) {
    const auto oracle = qnormal::enumerate_bruteforce(system);
    if (!(oracle.vertices == result.vertices)) {
      std::cerr << "oracle disagrees with double description\n";
      status = kExitNoDisc;
    }
  }
  if (!dump_rays.empty()) {
    std::ofstream out(dump_rays);
    if (!out) throw qnormal::Error("cannot write '" + dump_rays + "'");
    out << qnormal::sparse_rays(result);
  }
  if (o.json) {
    std::cout << qnormal::to_json(result, timing).dump(2) << '\n';
  } else {
    std::cout << qnormal::sparse_rays(result);
  }
  return status;
}

int run_crosscheck(const CommonOptions& o) {
  const auto tri = qnormal::load_triangulation(o.file);
  const auto report = qnormal::cross_check(tri);
  if (o.json) {
    std::cout << qnormal::to_json(report).dump(2) << '\n';
  } else {
    std::cout << "quad vertices: " << report.quad_vertices << "\nstandard vertices: " << report.standard_vertices
              << "\nprojections checked: " << report.projections_checked << "\nQ-vertices among standard vertices: "
              << report.quad_vertices_among_standard << '\n';
    for (const auto& w : report.warnings) std::cout << "warning: " << w << '\n';
    for (const auto& d : report.discrepancies) std::cout << "DISCREPANCY " << d.check << ": " << d.detail << '\n';
    std::cout << (report.ok() ? "OK" : "FAILED") << '\n';
  }
  return report.ok() ? 0 : kExitNoDisc;
}

int run_dump(const CommonOptions& o, const std::string& kind) {
  const auto tri = qnormal::load_triangulation(o.file);
  const auto system = qnormal::parse_coord_kind(kind) == qnormal::CoordKind::quad ? qnormal::q_matching_system(tri)
                                                                                   : qnormal::standard_matching_system(tri);
  std::cout << "# " << kind << " matching system: " << system.row_count() << " rows, " << system.columns()
            << " columns\n"
            << system.sparse_triplets();
  return 0;
}

int run_info(const CommonOptions& o) {
  const auto tri = qnormal::load_triangulation(o.file);
  nlohmann::json out{{"tetrahedra", tri.size()},
                     {"vertices", tri.vertex_classes().size()},
                     {"edges", tri.edge_classes().size()},
                     {"interior_edges", tri.interior_edge_count()},
                     {"interior_faces", tri.face_pairs().size()},
                     {"boundary_faces", tri.boundary_faces().size()},
                     {"orientable", tri.is_orientable()},
                     {"euler_characteristic", tri.euler_characteristic()},
                     {"boundary", qnormal::to_json(tri.boundary())}};
  std::cout << out.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal surface engine: Q-vertex enumeration and essential disc search"};
  app.require_subcommand(1);

  CommonOptions rec_opts, survey_opts, enum_opts, cross_opts, dump_opts, info_opts;
  std::string dump_rays;
  bool timing = false;
  std::string dump_kind = "quad";

  auto* rec = app.add_subcommand("recognize", "search the vertex surfaces for an essential disc");
  add_common(rec, rec_opts, true);
  auto* sur = app.add_subcommand("survey", "invariants of every vertex surface");
  add_common(sur, survey_opts, true);
  auto* en = app.add_subcommand("enumerate", "admissible vertex solutions of a matching system");
  add_common(en, enum_opts, true);
  en->add_option("--dump-rays", dump_rays, "write vectors in sparse index:value form to this file");
  en->add_flag("--timing", timing, "include wall time in JSON statistics");
  auto* cc = app.add_subcommand("crosscheck", "compare enumeration routes and coordinate systems");
  add_common(cc, cross_opts, false);
  auto* dump = app.add_subcommand("dump-equations", "print a matching system as `row col coeff` triplets");
  add_common(dump, dump_opts, false);
  dump->add_option("--kind", dump_kind, "matching system")->check(CLI::IsMember({"quad", "standard"}));
  auto* info = app.add_subcommand("info", "skeleton and boundary summary");
  add_common(info, info_opts, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (rec->parsed()) return run_recognize(rec_opts);
    if (sur->parsed()) return run_survey(survey_opts);
    if (en->parsed()) return run_enumerate(enum_opts, dump_rays, timing);
    if (cc->parsed()) return run_crosscheck(cross_opts);
    if (dump->parsed()) return run_dump(dump_opts, dump_kind);
    if (info->parsed()) return run_info(info_opts);
  } catch (const qnormal::NonOrientableError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
