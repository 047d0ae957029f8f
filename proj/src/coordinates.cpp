#include <qnormal/coordinates.hpp>

#include <deque>
#include <map>
#include <sstream>

namespace qnormal {

std::string_view to_string(CoordKind kind) { return kind == CoordKind::standard ? "standard" : "quad"; }

CoordKind parse_coord_kind(std::string_view text) {
  if (text == "standard") return CoordKind::standard;
  if (text == "quad") return CoordKind::quad;
  throw std::invalid_argument("unknown coordinate kind '" + std::string(text) + "' (expected quad or standard)");
}

MatchingSystem::MatchingSystem(CoordKind kind, std::size_t tetrahedra, std::vector<std::vector<Integer>> rows,
                               std::vector<RowLabel> labels)
    : kind_(kind), tetrahedra_(tetrahedra), rows_(std::move(rows)), labels_(std::move(labels)) {
  if (tetrahedra_ == 0) throw std::invalid_argument("matching system needs at least one tetrahedron");
  for (const auto& r : rows_) {
    if (r.size() != columns()) throw std::invalid_argument("matching row has the wrong number of columns");
  }
  if (labels_.empty()) labels_.resize(rows_.size());
  if (labels_.size() != rows_.size()) throw std::invalid_argument("one label per matching row required");
}

std::vector<Integer> MatchingSystem::residual(std::span<const Integer> x) const {
  if (x.size() != columns()) throw std::invalid_argument("vector length does not match the matching system");
  std::vector<Integer> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(dot(r, x));
  return out;
}

bool MatchingSystem::annihilates(std::span<const Integer> x) const {
  for (const auto& r : residual(x)) {
    if (r != 0) return false;
  }
  return true;
}

std::string MatchingSystem::sparse_triplets() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (rows_[i][j] != 0) os << i << ' ' << j << ' ' << rows_[i][j] << '\n';
    }
  }
  return os.str();
}

MatchingSystem standard_matching_system(const Triangulation& tri) {
  const std::size_t cols = 7 * tri.size();
  std::vector<std::vector<Integer>> rows;
  std::vector<RowLabel> labels;
  const auto& pairs = tri.face_pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& fp = pairs[i];
    for (int p : tet::face_vertices(fp.face_a)) {
      const int p_b = fp.perm[p];
      std::vector<Integer> row(cols, 0);
      row[triangle_column(fp.tet_a, p)] += 1;
      row[quad_column(CoordKind::standard, fp.tet_a, tet::quad_separating(p, fp.face_a))] += 1;
      row[triangle_column(fp.tet_b, p_b)] -= 1;
      row[quad_column(CoordKind::standard, fp.tet_b, tet::quad_separating(p_b, fp.face_b))] -= 1;
      rows.push_back(std::move(row));
      labels.push_back({i, p, 0});
    }
  }
  return MatchingSystem(CoordKind::standard, tri.size(), std::move(rows), std::move(labels));
}

std::array<int, 3> q_incidence_coefficients(int tail, int head, int tet_sign) {
  int c = -1;
  int d = -1;
  for (int v = 0; v < 4; ++v) {
    if (v == tail || v == head) continue;
    (c < 0 ? c : d) = v;
  }
  // Right-hand rule about tail -> head: the first face met by positive
  // rotation contains `first`, the second contains `second`.
  const bool positive = arrangement_sign(tail, head, c, d) * tet_sign > 0;
  const int first = positive ? c : d;
  const int second = positive ? d : c;
  std::array<int, 3> out{0, 0, 0};
  // Cuts off the tail in the first face and the head in the second.
  out[static_cast<std::size_t>(tet::quad_separating(tail, second))] = 1;
  out[static_cast<std::size_t>(tet::quad_separating(tail, first))] = -1;
  return out;
}

MatchingSystem q_matching_system(const Triangulation& tri) {
  if (!tri.is_orientable()) {
    throw NonOrientableError("Q-matching equations require an orientable triangulation");
  }
  const auto& sign = *tri.orientation();
  const std::size_t cols = 3 * tri.size();
  std::vector<std::vector<Integer>> rows;
  std::vector<RowLabel> labels;
  const auto& edges = tri.edge_classes();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (!edges[k].interior) continue;
    std::vector<Integer> row(cols, 0);
    // The rotation sense is fixed by the default orientation, so reversing the
    // edge only swaps tail and head and negates the row.
    const int flip = edges[k].reversed ? -1 : 1;
    for (const auto& inc : edges[k].incidences) {
      const int tail = edges[k].reversed ? inc.head() : inc.tail();
      const int head = edges[k].reversed ? inc.tail() : inc.head();
      const auto coeffs = q_incidence_coefficients(tail, head, sign[inc.tet]);
      for (int q = 0; q < 3; ++q) {
        row[quad_column(CoordKind::quad, inc.tet, q)] += flip * coeffs[static_cast<std::size_t>(q)];
      }
    }
    rows.push_back(std::move(row));
    labels.push_back({0, -1, k});
  }
  return MatchingSystem(CoordKind::quad, tri.size(), std::move(rows), std::move(labels));
}

QuadConditionResult quad_condition(CoordKind kind, std::span<const Integer> entries) {
  const std::size_t width = coords_per_tet(kind);
  if (entries.size() % width != 0) throw std::invalid_argument("quad_condition: bad vector length");
  QuadConditionResult out;
  for (std::size_t t = 0; t < entries.size() / width; ++t) {
    int positive = 0;
    for (int q = 0; q < 3; ++q) {
      if (entries[quad_column(kind, t, q)] > 0) ++positive;
    }
    if (positive > 1) {
      out.satisfied = false;
      out.offending_tetrahedra.push_back(t);
    }
  }
  return out;
}

AdmissibilityReport is_admissible(std::span<const Integer> entries, const MatchingSystem& system) {
  if (entries.size() != system.columns()) throw std::invalid_argument("is_admissible: length mismatch");
  AdmissibilityReport report;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] < 0) {
      report.nonnegative = false;
      report.negative_entries.push_back(i);
    }
  }
  const auto residual = system.residual(entries);
  for (std::size_t r = 0; r < residual.size(); ++r) {
    if (residual[r] != 0) {
      report.matching = false;
      report.offending_rows.push_back(r);
    }
  }
  auto qc = quad_condition(system.kind(), entries);
  report.quad_condition = qc.satisfied;
  report.offending_tetrahedra = std::move(qc.offending_tetrahedra);
  return report;
}

StandardVector vertex_link(const Triangulation& tri, std::size_t vertex_class) {
  if (vertex_class >= tri.vertex_classes().size()) throw IndexOutOfRangeError("vertex class index out of range");
  std::vector<Integer> v(7 * tri.size(), 0);
  for (const auto& corner : tri.vertex_classes()[vertex_class].corners) v[triangle_column(corner.tet, corner.index)] = 1;
  return StandardVector(std::move(v));
}

QuadVector project_to_quad(const StandardVector& v) {
  std::vector<Integer> q(3 * v.tetrahedra());
  for (std::size_t t = 0; t < v.tetrahedra(); ++t) {
    for (int i = 0; i < 3; ++i) q[quad_column(CoordKind::quad, t, i)] = v.quad(t, i);
  }
  return QuadVector(std::move(q));
}

StandardVector quad_to_standard(const QuadVector& q, const Triangulation& tri) {
  if (q.tetrahedra() != tri.size()) throw std::invalid_argument("quad vector length does not match the triangulation");
  if (const auto qc = quad_condition(q); !qc.satisfied) {
    throw AdmissibilityError("quad vector violates the quad condition in tetrahedron " +
                             std::to_string(qc.offending_tetrahedra.front()));
  }
  if (tri.is_orientable()) {
    const auto sys = q_matching_system(tri);
    const auto residual = sys.residual(q.entries());
    for (std::size_t r = 0; r < residual.size(); ++r) {
      if (residual[r] != 0) {
        throw AdmissibilityError("quad vector violates the Q-matching equation of edge class " +
                                 std::to_string(sys.labels()[r].edge_class));
      }
    }
  }

  std::vector<Integer> out(7 * tri.size(), 0);
  for (std::size_t t = 0; t < tri.size(); ++t) {
    for (int i = 0; i < 3; ++i) out[quad_column(CoordKind::standard, t, i)] = q.quad(t, i);
  }

  for (const auto& vc : tri.vertex_classes()) {
    // Integrate t(B, pi p) - t(A, p) = q_A(p | f) - q_B(pi p | g) over the link.
    std::map<TetSlot, Integer> value;
    const TetSlot root = vc.corners.front();
    value[root] = 0;
    std::deque<TetSlot> queue{root};
    while (!queue.empty()) {
      const TetSlot c = queue.front();
      queue.pop_front();
      for (int f = 0; f < 4; ++f) {
        if (f == c.index) continue;
        const auto& g = tri.gluing(c.tet, f);
        if (!g) continue;
        const TetSlot n{g->tet, g->perm[c.index]};
        const Integer expected =
            value[c] + q.quad(c.tet, tet::quad_separating(c.index, f)) - q.quad(n.tet, tet::quad_separating(n.index, g->face));
        auto it = value.find(n);
        if (it == value.end()) {
          value.emplace(n, expected);
          queue.push_back(n);
        } else if (it->second != expected) {
          throw AdmissibilityError("inconsistent triangle integration around a vertex link: quad vector violates Q-matching");
        }
      }
    }
    Integer lowest = value.begin()->second;
    for (const auto& [slot, x] : value) lowest = std::min(lowest, x);
    for (const auto& [slot, x] : value) out[triangle_column(slot.tet, slot.index)] = x - lowest;
  }
  return StandardVector(std::move(out));
}

std::optional<std::vector<Integer>> vertex_link_decomposition(const Triangulation& tri, const StandardVector& v,
                                                              const StandardVector& canonical) {
  if (v.size() != canonical.size() || v.tetrahedra() != tri.size()) {
    throw std::invalid_argument("vertex_link_decomposition: length mismatch");
  }
  for (std::size_t t = 0; t < tri.size(); ++t) {
    for (int q = 0; q < 3; ++q) {
      if (v.quad(t, q) != canonical.quad(t, q)) return std::nullopt;
    }
  }
  std::vector<Integer> coeffs;
  for (const auto& vc : tri.vertex_classes()) {
    const auto& first = vc.corners.front();
    const Integer c = v.triangle(first.tet, first.index) - canonical.triangle(first.tet, first.index);
    if (c < 0) return std::nullopt;
    for (const auto& corner : vc.corners) {
      if (v.triangle(corner.tet, corner.index) - canonical.triangle(corner.tet, corner.index) != c) return std::nullopt;
    }
    coeffs.push_back(c);
  }
  return coeffs;
}

}  // namespace qnormal
