#include "doctest.h"
#include "support.hpp"

#include <qnormal/errors.hpp>
#include <qnormal/json_io.hpp>

using namespace qnormal;
using qtest::corpus;
using qtest::ints;
using qtest::Vec;

namespace {

MatchingSystem scaled(const MatchingSystem& sys, const std::vector<int>& factors) {
  auto rows = sys.rows();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (auto& x : rows[r]) x *= factors[r % factors.size()];
  }
  return MatchingSystem(sys.kind(), sys.tetrahedra(), rows, sys.labels());
}

MatchingSystem reordered(const MatchingSystem& sys, std::mt19937& rng) {
  auto rows = sys.rows();
  std::shuffle(rows.begin(), rows.end(), rng);
  return MatchingSystem(sys.kind(), sys.tetrahedra(), rows);
}

std::vector<MatchingSystem> small_systems() {
  std::vector<MatchingSystem> out;
  for (const auto& name : qtest::corpus_names()) {
    const auto tri = corpus(name);
    out.push_back(q_matching_system(tri));
    if (tri.size() <= 3) out.push_back(standard_matching_system(tri));
  }
  return out;
}

}  // namespace

TEST_CASE("primitive") {
  CHECK(primitive(ints({2, 4, 6})) == ints({1, 2, 3}));
  CHECK(primitive(ints({1, 2, 3})) == ints({1, 2, 3}));
  CHECK(primitive(ints({0, 0, 5})) == ints({0, 0, 1}));
  CHECK_THROWS_AS(primitive(ints({0, 0})), std::invalid_argument);
  const auto v = enumerate_dd(q_matching_system(corpus("trefoil_complement"))).vertices.back().vector;
  Vec doubled = v;
  for (auto& x : doubled) x *= 2;
  CHECK(primitive(doubled) == v);
}

TEST_CASE("empty systems give the unit rays") {
  const MatchingSystem quad(CoordKind::quad, 1, {});
  const auto q = enumerate_dd(quad);
  REQUIRE(q.vertices.size() == 3);
  CHECK(q.vertices[0].vector == ints({0, 0, 1}));
  CHECK(q.vertices[2].vector == ints({1, 0, 0}));
  CHECK(enumerate_bruteforce(quad).vertices == q.vertices);
  const auto s = enumerate_dd(standard_matching_system(corpus("single_tetrahedron")));
  CHECK(s.vertices.size() == 7);
  for (const auto& v : s.vertices) CHECK(v.support.size() == 1);
}

TEST_CASE("a system with only the zero solution has no vertices") {
  const MatchingSystem sys(CoordKind::quad, 1, {ints({1, 1, 1})});
  CHECK(enumerate_dd(sys).vertices.empty());
  CHECK(enumerate_bruteforce(sys).vertices.empty());
}

TEST_CASE("filtered, unfiltered and brute force agree") {
  for (const auto& sys : small_systems()) {
    CAPTURE(sys.columns());
    const auto oracle = enumerate_bruteforce(sys);
    EnumerationOptions unfiltered;
    unfiltered.filter = false;
    CHECK(qtest::vectors_of(enumerate_dd(sys)) == qtest::vectors_of(oracle));
    CHECK(qtest::vectors_of(enumerate_dd(sys, unfiltered)) == qtest::vectors_of(oracle));
  }
}

TEST_CASE("vertex counts of the corpus") {
  // Quad and standard vertex counts, cross-referenced with Regina 7.4.1.
  const std::vector<std::tuple<std::string, std::size_t, std::size_t>> expected{
      {"single_tetrahedron", 3, 7}, {"lst_1", 3, 4},    {"lst_2", 4, 5},           {"lst_3", 5, 7},
      {"closed_s3_2tet", 3, 7},     {"lens_3_1", 1, 2}, {"trefoil_complement", 11, 15}};
  for (const auto& [name, quad, standard] : expected) {
    CAPTURE(name);
    const auto tri = corpus(name);
    CHECK(enumerate_dd(q_matching_system(tri)).vertices.size() == quad);
    CHECK(enumerate_dd(standard_matching_system(tri)).vertices.size() == standard);
  }
}

TEST_CASE("returned vertices are admissible primitive extreme rays") {
  for (const auto& sys : small_systems()) {
    const auto result = enumerate_dd(sys);
    const auto all = qtest::vectors_of(result);
    for (const auto& v : result.vertices) {
      CHECK(is_admissible(v.vector, sys).admissible());
      CHECK(gcd_of(v.vector) == 1);
      CHECK(qtest::algebraically_extreme(sys, v.vector));
      CHECK(v.support.size() == qtest::support_size(v.vector));
      for (auto i : v.support) CHECK(v.vector[i] != 0);
    }
    // No returned ray is a positive combination of two others inside its support.
    for (const auto& r : all) {
      for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
          if (all[i] == r || all[j] == r) continue;
          bool inside = true;
          for (std::size_t k = 0; k < r.size(); ++k) {
            inside = inside && (r[k] != 0 || (all[i][k] == 0 && all[j][k] == 0));
          }
          if (inside) CHECK_FALSE(qtest::positive_combination(all[i], all[j], r));
        }
      }
    }
  }
}

TEST_CASE("enumeration is invariant under row scaling and insertion order") {
  std::mt19937 rng(11);
  for (const char* name : {"lst_3", "trefoil_complement", "closed_s3_2tet"}) {
    CAPTURE(name);
    const auto tri = corpus(name);
    for (const auto& sys : {q_matching_system(tri), standard_matching_system(tri)}) {
      const auto base = qtest::vectors_of(enumerate_dd(sys));
      CHECK(qtest::vectors_of(enumerate_dd(scaled(sys, {3, 1, 7, 2}))) == base);
      EnumerationOptions in_order;
      in_order.sort_rows = false;
      for (int k = 0; k < 3; ++k) {
        CHECK(qtest::vectors_of(enumerate_dd(reordered(sys, rng), in_order)) == base);
      }
    }
  }
}

TEST_CASE("combinatorial adjacency matches the rank test") {
  EnumerationOptions opts;
  opts.verify_adjacency = true;
  for (const char* name : {"lst_3", "trefoil_complement"}) {
    const auto tri = corpus(name);
    CHECK(qtest::vectors_of(enumerate_dd(standard_matching_system(tri), opts)) ==
          qtest::vectors_of(enumerate_dd(standard_matching_system(tri))));
  }
}

TEST_CASE("resource guards") {
  const auto sys = standard_matching_system(corpus("trefoil_complement"));
  CHECK_THROWS_AS(enumerate_bruteforce(sys), ResourceLimitError);
  EnumerationOptions tight;
  tight.max_rays = 3;
  CHECK_THROWS_AS(enumerate_dd(sys, tight), ResourceLimitError);
}

TEST_CASE("statistics") {
  const auto sys = standard_matching_system(corpus("lst_3"));
  EnumerationOptions unfiltered;
  unfiltered.filter = false;
  const auto f = enumerate_dd(sys);
  const auto u = enumerate_dd(sys, unfiltered);
  CHECK(f.stats.rays_per_stage.size() == sys.row_count());
  CHECK(f.stats.filtered_per_stage.size() == sys.row_count());
  CHECK(u.stats.filtered_per_stage.size() == 1);
  CHECK(f.stats.combinations <= u.stats.combinations);
}

TEST_CASE("enumeration output is deterministic") {
  const auto sys = standard_matching_system(corpus("trefoil_complement"));
  CHECK(to_json(enumerate_dd(sys)).dump() == to_json(enumerate_dd(sys)).dump());
  CHECK(sparse_rays(enumerate_dd(sys)) == sparse_rays(enumerate_dd(sys)));
}
