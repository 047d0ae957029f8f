#pragma once

#include <qnormal/coordinates.hpp>
#include <qnormal/enumeration.hpp>
#include <qnormal/surface.hpp>
#include <qnormal/triangulation.hpp>

#include <optional>
#include <string>
#include <vector>

namespace qnormal {

enum class Verdict { disc_found, no_disc, unsupported };

std::string_view to_string(Verdict verdict);

struct PipelineConfig {
  CoordKind coords = CoordKind::quad;
  bool filter = true;
  /// Also run the brute-force oracle and record whether it agrees.
  bool oracle = false;
  std::size_t max_rays = 200000;
  std::size_t oracle_limit = kDefaultOracleLimit;
  /// Worker threads for per-vertex realization; 0 picks the hardware count.
  unsigned threads = 0;
};

/// One enumerated vertex solution together with its realized surface data.
struct SurveyRow {
  VertexSolution vertex;
  StandardVector standard;  // canonical standard representative
  SurfaceInvariants invariants;
  /// Connected and an essential disc; unset when the boundary is not a
  /// single torus, so the question is not posed.
  std::optional<bool> essential_disc;
};

struct Preconditions {
  bool orientable = false;
  bool has_boundary = false;
  bool single_boundary_component = false;
  bool torus_boundary = false;
  // Hypotheses that are assumed, not machine-checked.
  bool irreducible_assumed = true;
  bool knot_complement_assumed = true;
};

struct RecognitionReport {
  Verdict verdict = Verdict::unsupported;
  std::string reason;
  CoordKind coords = CoordKind::quad;
  Preconditions preconditions;
  std::vector<SurveyRow> survey;
  /// Index into `survey` of the first essential disc in sorted vertex order.
  std::optional<std::size_t> witness;
  /// Index of the essential disc minimising (weight, size) lexicographically.
  std::optional<std::size_t> minimal_witness;
  /// The witness invariants agreed with an independent realization pass.
  bool witness_rechecked = false;
  std::optional<bool> oracle_agrees;
  EnumerationStats stats;
};

/// Vertex solutions of the chosen coordinate system, each realized via its
/// canonical standard representative, in sorted vertex order.
std::vector<SurveyRow> survey(const Triangulation& tri, const PipelineConfig& cfg = {});

/// Searches the vertex surfaces for an essential disc. For an irreducible
/// knot complement, disc_found certifies the unknot and no_disc certifies a
/// nontrivial knot.
RecognitionReport recognize(const Triangulation& tri, const PipelineConfig& cfg = {});

struct Discrepancy {
  std::string check;
  std::string detail;
  std::vector<Integer> vector;
};

struct CrossCheckReport {
  std::size_t quad_vertices = 0;
  std::size_t standard_vertices = 0;
  bool quad_filter_agrees = false;
  std::optional<bool> quad_oracle_agrees;
  bool standard_filter_agrees = false;
  std::optional<bool> standard_oracle_agrees;
  /// Standard vertices with nonzero quad part whose projection was checked.
  std::size_t projections_checked = 0;
  /// Q-vertices whose canonical standard vector is itself a standard vertex.
  std::size_t quad_vertices_among_standard = 0;
  std::vector<std::string> warnings;
  std::vector<Discrepancy> discrepancies;

  bool ok() const { return discrepancies.empty(); }
};

/// Filtered, unfiltered and brute-force enumerations must agree; standard
/// vertices must project into the Q-solution space; every Q-vertex must lift
/// to an admissible canonical standard vector. Throws NonOrientableError.
CrossCheckReport cross_check(const Triangulation& tri, const PipelineConfig& cfg = {});

}  // namespace qnormal
