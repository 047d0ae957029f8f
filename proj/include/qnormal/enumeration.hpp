#pragma once

#include <qnormal/coordinates.hpp>
#include <qnormal/integer.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace qnormal {

/// Primitive integer representative of an admissible extreme ray.
struct VertexSolution {
  CoordKind kind = CoordKind::quad;
  std::vector<Integer> vector;
  std::vector<std::size_t> support;

  StandardVector as_standard() const;
  QuadVector as_quad() const;

  friend bool operator==(const VertexSolution& a, const VertexSolution& b) {
    return a.kind == b.kind && a.vector == b.vector;
  }
};

struct EnumerationStats {
  /// Rays alive after each inserted equation (after filtering, if enabled).
  std::vector<std::size_t> rays_per_stage;
  /// Rays discarded by the quad condition at each stage (or at the end when
  /// filtering is off, as a single entry).
  std::vector<std::size_t> filtered_per_stage;
  /// Adjacent pairs combined over the whole run.
  std::size_t combinations = 0;
  double wall_seconds = 0.0;
};

struct EnumerationResult {
  std::vector<VertexSolution> vertices;  // lexicographically sorted, no duplicates
  EnumerationStats stats;
};

struct EnumerationOptions {
  /// Drop quad-condition violators at every stage instead of only at the end.
  bool filter = true;
  /// Insert equations sparsest first; otherwise in the system's row order.
  bool sort_rows = true;
  /// Cap on live rays at any stage; exceeding it throws ResourceLimitError.
  std::size_t max_rays = 200000;
  /// Recheck every combinatorial adjacency decision with an exact rank test.
  bool verify_adjacency = false;
};

/// Admissible extreme rays of {A x = 0, x >= 0} by the incremental double
/// description method.
EnumerationResult enumerate_dd(const MatchingSystem& system, const EnumerationOptions& options = {});

inline constexpr std::size_t kDefaultOracleLimit = 24;

/// Independent exhaustive oracle: examines every candidate support and keeps
/// those whose column-restricted kernel is a single strictly positive ray.
/// Throws ResourceLimitError when the system has more than `max_columns` columns.
EnumerationResult enumerate_bruteforce(const MatchingSystem& system, std::size_t max_columns = kDefaultOracleLimit);

/// v divided by the gcd of its entries. Throws std::invalid_argument for 0.
std::vector<Integer> primitive(std::span<const Integer> v);

/// Exact rank over the rationals.
std::size_t rank_of(std::vector<std::vector<Integer>> rows);

}  // namespace qnormal
