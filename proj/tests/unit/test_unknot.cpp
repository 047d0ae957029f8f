#include "doctest.h"
#include "support.hpp"

#include <qnormal/errors.hpp>
#include <qnormal/json_io.hpp>
#include <qnormal/unknot.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sys/wait.h>

using namespace qnormal;
using qtest::corpus;
using qtest::Vec;

namespace {

nlohmann::json expected(const std::string& name) {
  std::ifstream in(qtest::corpus_dir() / (name + ".expected.json"));
  return nlohmann::json::parse(in);
}

std::set<Vec> expected_set(const nlohmann::json& list) {
  std::set<Vec> out;
  for (const auto& v : list) out.insert(vector_from_json(v));
  return out;
}

struct Run {
  int status = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  Run r;
  const std::string cmd = std::string(QNORMAL_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string corpus_file(const std::string& name) { return (qtest::corpus_dir() / (name + ".tri")).string(); }

}  // namespace

TEST_CASE("enumeration matches the corpus reference vectors") {
  for (const auto& name : qtest::corpus_names()) {
    CAPTURE(name);
    const auto tri = corpus(name);
    const auto exp = expected(name);
    const auto q = q_matching_system(tri);
    const auto s = standard_matching_system(tri);
    CHECK(qtest::vector_set(enumerate_dd(q)) == expected_set(exp["quad_vertices"]));
    CHECK(qtest::vector_set(enumerate_dd(s)) == expected_set(exp["standard_vertices"]));
    CHECK(qtest::vector_set(enumerate_bruteforce(q)) == expected_set(exp["quad_vertices"]));
    if (s.columns() <= kDefaultOracleLimit) {
      CHECK(qtest::vector_set(enumerate_bruteforce(s)) == expected_set(exp["standard_vertices"]));
    }
  }
}

TEST_CASE("verdicts match the corpus reference") {
  for (const auto& name : qtest::corpus_names()) {
    CAPTURE(name);
    const auto report = recognize(corpus(name));
    CHECK(std::string(to_string(report.verdict)) == expected(name)["verdict"].get<std::string>());
  }
}

TEST_CASE("layered solid tori contain an essential disc") {
  for (const char* name : {"lst_1", "lst_2", "lst_3"}) {
    CAPTURE(name);
    PipelineConfig cfg;
    cfg.oracle = true;
    const auto report = recognize(corpus(name), cfg);
    REQUIRE(report.verdict == Verdict::disc_found);
    REQUIRE(report.witness);
    REQUIRE(report.minimal_witness);
    CHECK(report.witness_rechecked);
    CHECK(report.oracle_agrees == true);
    const auto& row = report.survey[*report.witness];
    REQUIRE(row.invariants.component_count() == 1);
    const auto& c = row.invariants.components.front();
    CHECK(c.euler_characteristic == 1);
    CHECK(c.boundary_curves == 1);
    CHECK(c.two_sided);
    CHECK_FALSE(c.boundary_classes.front().is_trivial());
    const auto& best = report.survey[*report.minimal_witness].invariants;
    for (const auto& r : report.survey) {
      if (r.essential_disc.value_or(false)) {
        CHECK(std::pair(best.weight, best.size) <= std::pair(r.invariants.weight, r.invariants.size));
      }
    }
  }
  // The one-tetrahedron disc is the meridian (1 1 0 0 0 0 1).
  const auto r1 = recognize(corpus("lst_1"));
  CHECK(r1.survey[*r1.witness].standard == qtest::standard(qtest::ints({1, 1, 0, 0, 0, 0, 1})));
}

TEST_CASE("the trefoil complement has no essential disc") {
  const auto report = recognize(corpus("trefoil_complement"));
  CHECK(report.verdict == Verdict::no_disc);
  CHECK(report.survey.size() == 11);
  for (const auto& row : report.survey) CHECK(row.essential_disc == false);
  CHECK_FALSE(report.witness);
}

TEST_CASE("unsupported inputs") {
  for (const char* name : {"closed_s3_2tet", "lens_3_1", "single_tetrahedron"}) {
    CAPTURE(name);
    const auto report = recognize(corpus(name));
    CHECK(report.verdict == Verdict::unsupported);
    CHECK_FALSE(report.reason.empty());
    CHECK(report.survey.empty());
  }
  const auto klein = parse_triangulation("tets 2\nglue 0 0 1 0 0123\nglue 1 3 0 2 1302\n");
  const auto report = recognize(klein);
  CHECK(report.verdict == Verdict::unsupported);
  CHECK_FALSE(report.preconditions.orientable);
}

TEST_CASE("standard coordinates reach the same verdicts") {
  PipelineConfig cfg;
  cfg.coords = CoordKind::standard;
  for (const char* name : {"lst_1", "lst_2", "lst_3", "trefoil_complement"}) {
    CAPTURE(name);
    CHECK(recognize(corpus(name), cfg).verdict == recognize(corpus(name)).verdict);
  }
}

TEST_CASE("survey") {
  const auto tri = corpus("lst_1");
  CHECK(survey(tri).size() == enumerate_bruteforce(q_matching_system(tri)).vertices.size());
  // Closed: the only zero-quad vertices are vertex-linking spheres.
  const auto closed = corpus("closed_s3_2tet");
  PipelineConfig cfg;
  cfg.coords = CoordKind::standard;
  for (const auto& row : survey(closed, cfg)) {
    CHECK_FALSE(row.essential_disc.has_value());
    if (project_to_quad(row.standard).is_zero()) {
      REQUIRE(row.invariants.component_count() == 1);
      CHECK(row.invariants.components.front().euler_characteristic == 2);
    }
  }
}

TEST_CASE("survey output is independent of the worker count") {
  for (const auto& name : qtest::corpus_names()) {
    const auto tri = corpus(name);
    PipelineConfig one;
    one.threads = 1;
    PipelineConfig many;
    many.threads = 4;
    CHECK(survey_json(survey(tri, one), one.coords).dump() == survey_json(survey(tri, many), many.coords).dump());
  }
}

TEST_CASE("verdicts are invariant under relabelling and edge flips") {
  std::mt19937 rng(17);
  for (const char* name : {"lst_2", "lst_3", "trefoil_complement"}) {
    CAPTURE(name);
    const auto tri = corpus(name);
    const auto base = recognize(tri);
    for (std::size_t k = 0; k < tri.edge_classes().size(); ++k) {
      CHECK(recognize(tri.with_flipped_edge(k)).verdict == base.verdict);
    }
    std::vector<std::size_t> perm(tri.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(recognize(permute_tetrahedra(tri, perm)).verdict == base.verdict);
  }
}

TEST_CASE("cross-check passes on the corpus") {
  for (const auto& name : qtest::corpus_names()) {
    CAPTURE(name);
    const auto report = cross_check(corpus(name));
    CHECK(report.ok());
    CHECK(report.quad_filter_agrees);
    CHECK(report.standard_filter_agrees);
    CHECK(report.quad_oracle_agrees == true);
  }
  const auto trefoil = cross_check(corpus("trefoil_complement"));
  CHECK_FALSE(trefoil.standard_oracle_agrees.has_value());
  CHECK(trefoil.warnings.size() == 1);
}

TEST_CASE("recognition report JSON") {
  const auto j = to_json(recognize(corpus("lst_1")));
  CHECK(j["schema"] == 1);
  CHECK(j["verdict"] == "DISC_FOUND");
  CHECK(j.contains("witness"));
  CHECK(j.contains("preconditions"));
}

TEST_CASE("command-line exit codes") {
  CHECK(run_cli("recognize " + corpus_file("lst_1")).status == 0);
  CHECK(run_cli("recognize " + corpus_file("trefoil_complement")).status == 1);
  CHECK(run_cli("recognize " + corpus_file("closed_s3_2tet")).status == 2);
  CHECK(run_cli("recognize /nonexistent.tri").status == 3);
  CHECK(run_cli("recognize " + corpus_file("lst_2") + " --max-rays 1").status == 3);
  CHECK(run_cli("recognize " + corpus_file("lst_2") + " --coords triangles").status == 3);
  CHECK(run_cli("crosscheck " + corpus_file("lst_3")).status == 0);
  const auto json = run_cli("recognize " + corpus_file("lst_2") + " --json --oracle");
  CHECK(json.status == 0);
  const auto parsed = nlohmann::json::parse(json.out);
  CHECK(parsed["schema"] == 1);
  CHECK(parsed["oracle_agrees"] == true);
  const auto dump = run_cli("dump-equations " + corpus_file("lst_2") + " --kind quad");
  CHECK(dump.out.find("0 3 2\n") != std::string::npos);
  const auto a = run_cli("survey " + corpus_file("trefoil_complement") + " --json");
  const auto b = run_cli("survey " + corpus_file("trefoil_complement") + " --json");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
}
