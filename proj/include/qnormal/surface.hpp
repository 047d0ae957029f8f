#pragma once

#include <qnormal/coordinates.hpp>
#include <qnormal/triangulation.hpp>

#include <cstddef>
#include <vector>

namespace qnormal {

/// One normal disc instance. Types 0..3 are triangles (by cut-off vertex),
/// 4..6 quads. Triangle copy 0 is nearest its vertex; quad copy 0 is nearest
/// the side containing vertex 0.
struct Disc {
  std::size_t tet = 0;
  int type = 0;
  std::size_t copy = 0;
};

/// A normal arc: the segment of one disc on one face of one tetrahedron.
struct ArcSide {
  std::size_t disc = 0;
  std::size_t tet = 0;
  int face = 0;
  int cut_vertex = 0;     // vertex of the face this arc cuts off
  std::size_t depth = 0;  // 0 = nearest cut_vertex
  /// Points on the edges {cut, x} and {cut, y} of the face, with x < y.
  std::size_t point_low = 0;
  std::size_t point_high = 0;
};

/// An arc class: one or two arc sides identified across an interior face.
struct Arc {
  std::vector<ArcSide> sides;
  bool on_boundary() const { return sides.size() == 1; }
};

/// The unique embedded normal surface with a given admissible vector, as a
/// glued cell complex. Holds a reference to its triangulation, which must
/// outlive it.
class NormalSurface {
 public:
  const Triangulation& triangulation() const { return *tri_; }
  const std::vector<Disc>& discs() const { return discs_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  /// Intersection points with the 1-skeleton, grouped by edge class.
  std::size_t point_count() const { return point_edge_.size(); }
  std::size_t edge_of_point(std::size_t p) const { return point_edge_[p]; }
  std::size_t position_of_point(std::size_t p) const { return point_position_[p]; }

  /// Intersection counts of every incidence of every edge class.
  const std::vector<std::vector<Integer>>& edge_incidence_counts() const { return incidence_counts_; }
  /// Intersection count per edge class.
  const std::vector<Integer>& edge_weights() const { return edge_weights_; }

  /// Disc counts re-read from the realized complex.
  StandardVector vector() const;
  bool empty() const { return discs_.empty(); }

 private:
  friend NormalSurface realize(const StandardVector& v, const Triangulation& tri);

  const Triangulation* tri_ = nullptr;
  std::vector<Disc> discs_;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> point_edge_;
  std::vector<std::size_t> point_position_;
  std::vector<std::vector<Integer>> incidence_counts_;
  std::vector<Integer> edge_weights_;
};

/// Throws AdmissibilityError if v is not admissible for the standard system
/// and ResourceLimitError for surfaces with millions of discs.
NormalSurface realize(const StandardVector& v, const Triangulation& tri);

struct BoundaryCurveClass {
  std::size_t surface_component = 0;
  std::size_t boundary_component = 0;
  /// Coordinates in the boundary component's homology basis; defined up to sign.
  std::vector<Integer> coordinates;

  bool is_trivial() const;
};

struct ComponentInvariants {
  StandardVector vector;
  long euler_characteristic = 0;
  bool orientable = true;
  bool two_sided = true;
  bool closed = true;
  std::size_t boundary_curves = 0;
  Integer weight = 0;
  std::size_t size = 0;  // nonzero standard coordinates
  std::vector<BoundaryCurveClass> boundary_classes;
};

struct SurfaceInvariants {
  std::vector<ComponentInvariants> components;
  long euler_characteristic = 0;
  Integer weight = 0;
  std::size_t size = 0;

  std::size_t component_count() const { return components.size(); }
};

/// Components, Euler characteristic, orientability, two-sidedness, weight,
/// size and boundary-curve homology classes.
SurfaceInvariants invariants(const NormalSurface& s);

/// Boundary curves of the surface in the boundary of the manifold, with their
/// homology classes. Empty for closed surfaces.
std::vector<BoundaryCurveClass> boundary_curves(const NormalSurface& s);

/// True iff the component is a disc (chi = 1, one boundary curve) whose
/// boundary is nonzero in the homology of its torus boundary component.
/// Closed components return false. Throws UnsupportedBoundaryError when the
/// curve lies on a boundary component that is not a torus.
bool is_essential_disc(const ComponentInvariants& component, const BoundarySurface& boundary);

}  // namespace qnormal
