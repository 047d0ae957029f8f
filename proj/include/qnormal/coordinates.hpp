#pragma once

#include <qnormal/errors.hpp>
#include <qnormal/integer.hpp>
#include <qnormal/tetrahedron.hpp>
#include <qnormal/triangulation.hpp>

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qnormal {

enum class CoordKind { standard, quad };

std::string_view to_string(CoordKind kind);
CoordKind parse_coord_kind(std::string_view text);

constexpr std::size_t coords_per_tet(CoordKind kind) {
  return kind == CoordKind::standard ? tet::kDiscTypes : tet::kQuadTypes;
}

/// Column of the triangle cutting off `vertex` in tetrahedron `t` (standard layout).
constexpr std::size_t triangle_column(std::size_t t, int vertex) { return 7 * t + static_cast<std::size_t>(vertex); }

/// Column of quad type `q` of tetrahedron `t` in the given layout.
constexpr std::size_t quad_column(CoordKind kind, std::size_t t, int q) {
  return kind == CoordKind::standard ? 7 * t + 4 + static_cast<std::size_t>(q) : 3 * t + static_cast<std::size_t>(q);
}

/// Nonnegative integer normal coordinates: 7 per tetrahedron (4 triangles
/// by cut-off vertex, then 3 quads) or 3 per tetrahedron (quads only).
template <CoordKind Kind>
class CoordinateVector {
 public:
  static constexpr CoordKind kind = Kind;

  CoordinateVector() = default;

  /// Throws std::invalid_argument on a negative entry or a length that is
  /// not a positive multiple of the per-tetrahedron width.
  explicit CoordinateVector(std::vector<Integer> entries) : entries_(std::move(entries)) {
    if (entries_.empty() || entries_.size() % coords_per_tet(Kind) != 0) {
      throw std::invalid_argument("coordinate vector length " + std::to_string(entries_.size()) +
                                  " is not a positive multiple of " + std::to_string(coords_per_tet(Kind)));
    }
    for (const auto& x : entries_) {
      if (x < 0) throw std::invalid_argument("normal coordinates must be nonnegative");
    }
  }

  static CoordinateVector zero(std::size_t tetrahedra) {
    return CoordinateVector(std::vector<Integer>(tetrahedra * coords_per_tet(Kind), 0));
  }

  std::size_t size() const { return entries_.size(); }
  std::size_t tetrahedra() const { return entries_.size() / coords_per_tet(Kind); }
  const Integer& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Integer> entries() const { return entries_; }

  const Integer& quad(std::size_t t, int q) const { return entries_[quad_column(Kind, t, q)]; }
  const Integer& triangle(std::size_t t, int v) const
    requires(Kind == CoordKind::standard)
  {
    return entries_[triangle_column(t, v)];
  }

  bool is_zero() const {
    for (const auto& x : entries_) {
      if (x != 0) return false;
    }
    return true;
  }

  friend bool operator==(const CoordinateVector&, const CoordinateVector&) = default;
  friend bool operator<(const CoordinateVector& a, const CoordinateVector& b) { return a.entries_ < b.entries_; }

 private:
  std::vector<Integer> entries_;
};

using StandardVector = CoordinateVector<CoordKind::standard>;
using QuadVector = CoordinateVector<CoordKind::quad>;

/// Which constraint a matching row encodes.
struct RowLabel {
  // Standard rows: index into Triangulation::face_pairs() and the arc type,
  // named by the vertex of tet_a's face that the arc cuts off.
  std::size_t face_pair = 0;
  int arc_vertex = -1;
  // Quad rows: the interior edge class.
  std::size_t edge_class = 0;
};

/// Exact integer constraint matrix A of the cone {x >= 0, A x = 0}.
class MatchingSystem {
 public:
  /// Each row must have `tetrahedra * coords_per_tet(kind)` entries.
  MatchingSystem(CoordKind kind, std::size_t tetrahedra, std::vector<std::vector<Integer>> rows,
                 std::vector<RowLabel> labels = {});

  CoordKind kind() const { return kind_; }
  std::size_t tetrahedra() const { return tetrahedra_; }
  std::size_t columns() const { return tetrahedra_ * coords_per_tet(kind_); }
  std::size_t row_count() const { return rows_.size(); }
  const std::vector<Integer>& row(std::size_t i) const { return rows_[i]; }
  const std::vector<std::vector<Integer>>& rows() const { return rows_; }
  const std::vector<RowLabel>& labels() const { return labels_; }

  /// A x, exactly. Throws std::invalid_argument on a length mismatch.
  std::vector<Integer> residual(std::span<const Integer> x) const;
  bool annihilates(std::span<const Integer> x) const;

  /// `row col coeff` lines for every nonzero entry, 0-based.
  std::string sparse_triplets() const;

 private:
  CoordKind kind_;
  std::size_t tetrahedra_;
  std::vector<std::vector<Integer>> rows_;
  std::vector<RowLabel> labels_;
};

/// Three rows per interior face, ordered by face pair then arc type.
MatchingSystem standard_matching_system(const Triangulation& tri);

/// One row per interior edge class. Rotation about an edge follows the
/// right-hand rule around its default orientation, so reversing an edge
/// negates its row. Throws NonOrientableError.
MatchingSystem q_matching_system(const Triangulation& tri);

/// Coefficients of the three quad types of one tetrahedron for one incidence
/// of an oriented edge (local tail -> head) in a tetrahedron with sign
/// `tet_sign`, rotating by the right-hand rule about tail -> head.
std::array<int, 3> q_incidence_coefficients(int tail, int head, int tet_sign);

struct QuadConditionResult {
  bool satisfied = true;
  std::vector<std::size_t> offending_tetrahedra;
};

QuadConditionResult quad_condition(CoordKind kind, std::span<const Integer> entries);
template <CoordKind K>
QuadConditionResult quad_condition(const CoordinateVector<K>& v) {
  return quad_condition(K, v.entries());
}

struct AdmissibilityReport {
  bool nonnegative = true;
  bool matching = true;
  bool quad_condition = true;
  std::vector<std::size_t> offending_tetrahedra;
  std::vector<std::size_t> offending_rows;
  std::vector<std::size_t> negative_entries;

  bool admissible() const { return nonnegative && matching && quad_condition; }
};

AdmissibilityReport is_admissible(std::span<const Integer> entries, const MatchingSystem& system);
template <CoordKind K>
AdmissibilityReport is_admissible(const CoordinateVector<K>& v, const MatchingSystem& system) {
  return is_admissible(v.entries(), system);
}

/// Triangle coordinate 1 at every corner of vertex class `vertex_class`.
StandardVector vertex_link(const Triangulation& tri, std::size_t vertex_class);

QuadVector project_to_quad(const StandardVector& v);

/// Canonical standard representative of a Q-matching quad vector: triangle
/// values integrated over each vertex link and shifted to minimum zero.
/// Throws AdmissibilityError if q violates Q-matching or the quad condition.
StandardVector quad_to_standard(const QuadVector& q, const Triangulation& tri);

/// Coefficients c_v >= 0 with v = canonical + sum c_v * link(v), or nullopt
/// if `v` minus `canonical` is not such a combination.
std::optional<std::vector<Integer>> vertex_link_decomposition(const Triangulation& tri, const StandardVector& v,
                                                              const StandardVector& canonical);

/// Entrywise sum; throws IncompatibleSumError if the result breaks the quad condition.
template <CoordKind K>
CoordinateVector<K> haken_sum(const CoordinateVector<K>& a, const CoordinateVector<K>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("haken_sum: length mismatch");
  std::vector<Integer> sum(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + b[i];
  const auto qc = quad_condition(K, sum);
  if (!qc.satisfied) {
    const std::size_t t = qc.offending_tetrahedra.front();
    throw IncompatibleSumError(t, "Haken sum incompatible: two quad types coexist in tetrahedron " + std::to_string(t));
  }
  return CoordinateVector<K>(std::move(sum));
}

}  // namespace qnormal
