#include <qnormal/unknot.hpp>

#include <qnormal/errors.hpp>

#include <algorithm>
#include <set>
#include <thread>

namespace qnormal {

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::disc_found:
      return "DISC_FOUND";
    case Verdict::no_disc:
      return "NO_DISC";
    case Verdict::unsupported:
      return "UNSUPPORTED";
  }
  return "UNSUPPORTED";
}

namespace {

bool single_torus_boundary(const Triangulation& tri) {
  const auto& comps = tri.boundary().components();
  return comps.size() == 1 && comps.front().is_torus();
}

EnumerationResult enumerate_vertices(const Triangulation& tri, const PipelineConfig& cfg) {
  const MatchingSystem system =
      cfg.coords == CoordKind::quad ? q_matching_system(tri) : standard_matching_system(tri);
  EnumerationOptions opts;
  opts.filter = cfg.filter;
  opts.max_rays = cfg.max_rays;
  return enumerate_dd(system, opts);
}

SurveyRow analyse_vertex(const Triangulation& tri, const VertexSolution& vertex, bool pose_disc_question) {
  SurveyRow row{vertex, vertex.kind == CoordKind::quad ? quad_to_standard(vertex.as_quad(), tri) : vertex.as_standard(),
                {}, std::nullopt};
  const NormalSurface surface = realize(row.standard, tri);
  row.invariants = invariants(surface);
  if (pose_disc_question) {
    row.essential_disc = row.invariants.component_count() == 1 &&
                         is_essential_disc(row.invariants.components.front(), tri.boundary());
  }
  return row;
}

// Parallel map with results stored by index, so output order is fixed.
std::vector<SurveyRow> analyse_all(const Triangulation& tri, const std::vector<VertexSolution>& vertices,
                                   bool pose_disc_question, unsigned threads) {
  std::vector<std::optional<SurveyRow>> slots(vertices.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, vertices.size())));
  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](unsigned w) {
    try {
      for (std::size_t i = w; i < vertices.size(); i += threads) {
        slots[i] = analyse_vertex(tri, vertices[i], pose_disc_question);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (threads <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<SurveyRow> rows;
  rows.reserve(slots.size());
  for (auto& s : slots) rows.push_back(std::move(*s));
  return rows;
}

bool same_components(const ComponentInvariants& a, const ComponentInvariants& b) {
  if (a.vector != b.vector || a.euler_characteristic != b.euler_characteristic || a.orientable != b.orientable ||
      a.two_sided != b.two_sided || a.closed != b.closed || a.boundary_curves != b.boundary_curves ||
      a.weight != b.weight || a.size != b.size || a.boundary_classes.size() != b.boundary_classes.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.boundary_classes.size(); ++i) {
    if (a.boundary_classes[i].coordinates != b.boundary_classes[i].coordinates) return false;
  }
  return true;
}

std::vector<std::vector<Integer>> vectors_of(const EnumerationResult& r) {
  std::vector<std::vector<Integer>> out;
  for (const auto& v : r.vertices) out.push_back(v.vector);
  return out;
}

}  // namespace

std::vector<SurveyRow> survey(const Triangulation& tri, const PipelineConfig& cfg) {
  const auto result = enumerate_vertices(tri, cfg);
  return analyse_all(tri, result.vertices, single_torus_boundary(tri), cfg.threads);
}

RecognitionReport recognize(const Triangulation& tri, const PipelineConfig& cfg) {
  RecognitionReport report;
  report.coords = cfg.coords;
  auto& pre = report.preconditions;
  pre.orientable = tri.is_orientable();
  pre.has_boundary = !tri.is_closed();
  pre.single_boundary_component = tri.boundary().components().size() == 1;
  pre.torus_boundary = single_torus_boundary(tri);

  if (!pre.orientable) {
    report.reason = "triangulation is not orientable";
    return report;
  }
  if (!pre.has_boundary) {
    report.reason = "triangulation is closed; a knot complement has torus boundary";
    return report;
  }
  if (!pre.single_boundary_component) {
    report.reason = "triangulation has " + std::to_string(tri.boundary().components().size()) +
                    " boundary components; exactly one is required";
    return report;
  }
  if (!pre.torus_boundary) {
    report.reason = "boundary is not a torus";
    return report;
  }

  const auto result = enumerate_vertices(tri, cfg);
  report.stats = result.stats;
  if (cfg.oracle) {
    const MatchingSystem system =
        cfg.coords == CoordKind::quad ? q_matching_system(tri) : standard_matching_system(tri);
    report.oracle_agrees = vectors_of(enumerate_bruteforce(system, cfg.oracle_limit)) == vectors_of(result);
  }
  report.survey = analyse_all(tri, result.vertices, true, cfg.threads);

  for (std::size_t i = 0; i < report.survey.size(); ++i) {
    if (!report.survey[i].essential_disc.value_or(false)) continue;
    if (!report.witness) report.witness = i;
    const auto& best = report.minimal_witness;
    const auto key = [&](std::size_t k) {
      return std::make_pair(report.survey[k].invariants.weight, report.survey[k].invariants.size);
    };
    if (!best || key(i) < key(*best)) report.minimal_witness = i;
  }

  if (report.witness) {
    report.verdict = Verdict::disc_found;
    const auto& row = report.survey[*report.witness];
    const SurveyRow again = analyse_vertex(tri, row.vertex, true);
    report.witness_rechecked = again.standard == row.standard && again.essential_disc == row.essential_disc &&
                               again.invariants.component_count() == 1 &&
                               same_components(again.invariants.components.front(), row.invariants.components.front());
    if (!report.witness_rechecked) throw InternalError("witness invariants changed on recomputation");
  } else {
    report.verdict = Verdict::no_disc;
  }
  return report;
}

CrossCheckReport cross_check(const Triangulation& tri, const PipelineConfig& cfg) {
  const MatchingSystem qsys = q_matching_system(tri);
  const MatchingSystem ssys = standard_matching_system(tri);
  CrossCheckReport report;

  EnumerationOptions filtered;
  filtered.max_rays = cfg.max_rays;
  EnumerationOptions unfiltered = filtered;
  unfiltered.filter = false;

  auto compare = [&](const MatchingSystem& sys, const char* label, bool& filter_agrees,
                     std::optional<bool>& oracle_agrees) {
    const auto a = enumerate_dd(sys, filtered);
    const auto b = enumerate_dd(sys, unfiltered);
    filter_agrees = vectors_of(a) == vectors_of(b);
    if (!filter_agrees) {
      report.discrepancies.push_back({std::string(label) + " filtered-vs-unfiltered",
                                      "vertex sets differ (" + std::to_string(a.vertices.size()) + " vs " +
                                          std::to_string(b.vertices.size()) + ")",
                                      {}});
    }
    if (sys.columns() <= cfg.oracle_limit) {
      const auto c = enumerate_bruteforce(sys, cfg.oracle_limit);
      oracle_agrees = vectors_of(a) == vectors_of(c);
      if (!*oracle_agrees) {
        report.discrepancies.push_back({std::string(label) + " dd-vs-bruteforce",
                                        "vertex sets differ (" + std::to_string(a.vertices.size()) + " vs " +
                                            std::to_string(c.vertices.size()) + ")",
                                        {}});
      }
    } else {
      report.warnings.push_back(std::string(label) + " brute-force oracle skipped: " + std::to_string(sys.columns()) +
                                " coordinates exceed the limit of " + std::to_string(cfg.oracle_limit));
    }
    return a;
  };

  const auto quad = compare(qsys, "quad", report.quad_filter_agrees, report.quad_oracle_agrees);
  const auto standard = compare(ssys, "standard", report.standard_filter_agrees, report.standard_oracle_agrees);
  report.quad_vertices = quad.vertices.size();
  report.standard_vertices = standard.vertices.size();

  std::set<std::vector<Integer>> standard_set;
  for (const auto& v : standard.vertices) {
    standard_set.insert(v.vector);
    const QuadVector projected = project_to_quad(v.as_standard());
    if (projected.is_zero()) continue;
    ++report.projections_checked;
    if (!qsys.annihilates(projected.entries())) {
      report.discrepancies.push_back({"projection", "quad projection of a standard vertex violates Q-matching", v.vector});
    }
  }
  for (const auto& v : quad.vertices) {
    try {
      const StandardVector lifted = quad_to_standard(v.as_quad(), tri);
      if (!is_admissible(lifted, ssys).admissible()) {
        report.discrepancies.push_back({"lift", "canonical standard vector is not admissible", v.vector});
      }
      if (project_to_quad(lifted) != v.as_quad()) {
        report.discrepancies.push_back({"lift", "canonical standard vector does not project back", v.vector});
      }
      std::vector<Integer> entries(lifted.entries().begin(), lifted.entries().end());
      if (standard_set.count(primitive(entries))) ++report.quad_vertices_among_standard;
    } catch (const AdmissibilityError& e) {
      report.discrepancies.push_back({"lift", e.what(), v.vector});
    }
  }
  return report;
}

}  // namespace qnormal
