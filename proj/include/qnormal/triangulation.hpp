#pragma once

#include <qnormal/integer.hpp>
#include <qnormal/permutation.hpp>

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qnormal {

/// Face `face` of some tetrahedron is glued to face `face` of `tet`, with
/// vertex label i of the source sent to label perm[i] of `tet`.
struct FaceGluing {
  std::size_t tet = 0;
  int face = 0;
  Permutation4 perm;

  friend bool operator==(const FaceGluing&, const FaceGluing&) = default;
};

/// One line of gluing input: face `face_a` of `tet_a` onto face `face_b` of `tet_b`.
struct GluingSpec {
  std::size_t tet_a = 0;
  int face_a = 0;
  std::size_t tet_b = 0;
  int face_b = 0;
  Permutation4 perm;
};

/// A corner (vertex incidence) or face slot of a specific tetrahedron.
struct TetSlot {
  std::size_t tet = 0;
  int index = 0;

  friend auto operator<=>(const TetSlot&, const TetSlot&) = default;
};

struct EdgeIncidence {
  std::size_t tet = 0;
  int edge = 0;  // local edge index 0..5
  /// True when the class tail is the smaller local label of this edge.
  bool aligned = true;

  /// Local label of the class tail / head inside this tetrahedron.
  int tail() const;
  int head() const;
};

struct EdgeClass {
  /// Walk order around the edge: cyclic for interior edges, linear from one
  /// boundary face to the other for boundary edges.
  std::vector<EdgeIncidence> incidences;
  bool interior = true;
  std::size_t tail_vertex = 0;  // vertex class at the tail
  std::size_t head_vertex = 0;
  /// Oriented against the default (lowest incidence, smaller label first).
  bool reversed = false;
};

struct VertexClass {
  std::vector<TetSlot> corners;  // sorted
  bool boundary = false;
  /// Euler characteristic of the vertex link (2 for a sphere, 1 for a disc).
  long link_euler = 0;
};

/// An interior face: (tet_a, face_a) < (tet_b, face_b) lexicographically.
struct FacePair {
  std::size_t tet_a = 0;
  int face_a = 0;
  std::size_t tet_b = 0;
  int face_b = 0;
  Permutation4 perm;  // labels of tet_a onto labels of tet_b
};

/// An oriented boundary 1-cell (edge class) with an integer multiplicity.
using EdgeChain = std::map<std::size_t, Integer>;

struct BoundaryComponent {
  std::vector<std::size_t> faces;     // indices into Triangulation::boundary_faces()
  std::vector<std::size_t> edges;     // edge class indices, sorted
  std::vector<std::size_t> vertices;  // vertex class indices, sorted
  long euler_characteristic = 0;
  bool orientable = true;
  /// Orientable genus, or the number of cross-caps when non-orientable.
  long genus = 0;
  /// Cycles (in edge-class coordinates) whose classes form a basis of the
  /// free part of first homology.
  std::vector<EdgeChain> homology_basis;
  /// Invariant factors > 1 (torsion) of first homology.
  std::vector<Integer> torsion;

  bool is_torus() const { return orientable && euler_characteristic == 0; }
  bool is_sphere() const { return orientable && euler_characteristic == 2; }
  std::size_t rank() const { return homology_basis.size(); }

  // Reduction data used to express a cycle in the homology basis.
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> edge_ends;  // tail, head vertex
  std::vector<std::size_t> cycle_edges;            // non-tree edges
  std::vector<std::vector<Integer>> column_basis;  // unimodular change of basis
  std::size_t relation_rank = 0;
};

class BoundarySurface {
 public:
  BoundarySurface() = default;
  explicit BoundarySurface(std::vector<BoundaryComponent> components)
      : components_(std::move(components)) {}

  const std::vector<BoundaryComponent>& components() const { return components_; }
  bool empty() const { return components_.empty(); }

  /// Component containing the given boundary edge class; nullopt if none.
  std::optional<std::size_t> component_of_edge(std::size_t edge_class) const;

  /// Coordinates of the free part of the class of `cycle` in component `c`.
  /// Throws InternalError when `cycle` is not a cycle of that component.
  std::vector<Integer> homology_coordinates(std::size_t c, const EdgeChain& cycle) const;

 private:
  std::vector<BoundaryComponent> components_;
};

/// A triangulated compact 3-manifold. Immutable after construction.
class Triangulation {
 public:
  /// Builds and validates a triangulation. A gluing and its involutive
  /// partner may both be present as long as they agree.
  static Triangulation from_gluings(std::size_t num_tetrahedra,
                                    const std::vector<GluingSpec>& gluings);

  std::size_t size() const { return adjacency_.size(); }

  const std::optional<FaceGluing>& gluing(std::size_t tet, int face) const {
    return adjacency_[tet][static_cast<std::size_t>(face)];
  }
  bool is_boundary_face(std::size_t tet, int face) const { return !gluing(tet, face).has_value(); }

  const std::vector<EdgeClass>& edge_classes() const { return edges_; }
  const std::vector<VertexClass>& vertex_classes() const { return vertices_; }
  const std::vector<FacePair>& face_pairs() const { return face_pairs_; }
  const std::vector<TetSlot>& boundary_faces() const { return boundary_faces_; }

  std::size_t edge_class_of(std::size_t tet, int edge) const { return edge_of_[tet][static_cast<std::size_t>(edge)]; }
  /// Alignment of the local edge with its class orientation.
  bool edge_aligned(std::size_t tet, int edge) const { return edge_aligned_[tet][static_cast<std::size_t>(edge)]; }
  std::size_t vertex_class_of(std::size_t tet, int vertex) const {
    return vertex_of_[tet][static_cast<std::size_t>(vertex)];
  }

  std::size_t interior_edge_count() const;
  bool is_closed() const { return boundary_faces_.empty(); }

  bool is_orientable() const { return orientation_.has_value(); }
  /// Per-tetrahedron signs (+1/-1); tetrahedron 0 of each connected piece is +1.
  const std::optional<std::vector<int>>& orientation() const { return orientation_; }

  const BoundarySurface& boundary() const { return boundary_; }

  /// V - E + F - T of the cell structure.
  long euler_characteristic() const;

  /// Same triangulation with edge class `edge_class` oriented the other way.
  Triangulation with_flipped_edge(std::size_t edge_class) const;

  /// Canonical text form (one `glue` line per interior face).
  std::string to_text() const;

 private:
  Triangulation() = default;
  void compute_skeleton();
  void compute_orientation();
  void compute_boundary();

  std::vector<std::array<std::optional<FaceGluing>, 4>> adjacency_;
  std::vector<EdgeClass> edges_;
  std::vector<VertexClass> vertices_;
  std::vector<FacePair> face_pairs_;
  std::vector<TetSlot> boundary_faces_;
  std::vector<std::array<std::size_t, 6>> edge_of_;
  std::vector<std::array<bool, 6>> edge_aligned_;
  std::vector<std::array<std::size_t, 4>> vertex_of_;
  std::optional<std::vector<int>> orientation_;
  BoundarySurface boundary_;
};

/// Parses the line-oriented `tets N` / `glue A f B g p0p1p2p3` format.
Triangulation parse_triangulation(std::string_view text);
Triangulation load_triangulation(const std::string& path);

/// Relabels tetrahedra: old tetrahedron i becomes new_index[i].
Triangulation permute_tetrahedra(const Triangulation& tri, const std::vector<std::size_t>& new_index);

}  // namespace qnormal
