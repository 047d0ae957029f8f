#pragma once

// Local combinatorics of a single tetrahedron with vertices labelled 0..3.
//
// Edges are indexed by vertex pairs in the order 01,02,03,12,13,23.
// Face f is the face opposite vertex f.
// Quad type q (0..2) separates vertices {0, q+1} from the other two.

#include <array>
#include <utility>

namespace qnormal::tet {

inline constexpr int kTriangleTypes = 4;
inline constexpr int kQuadTypes = 3;
inline constexpr int kDiscTypes = kTriangleTypes + kQuadTypes;

inline constexpr std::array<std::pair<int, int>, 6> kEdgeVertices{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

constexpr int edge_index(int u, int w) {
  if (u > w) std::swap(u, w);
  for (int e = 0; e < 6; ++e) {
    if (kEdgeVertices[e].first == u && kEdgeVertices[e].second == w) return e;
  }
  return -1;
}

/// The three vertices of face f in increasing order.
constexpr std::array<int, 3> face_vertices(int f) {
  std::array<int, 3> out{};
  int k = 0;
  for (int v = 0; v < 4; ++v) {
    if (v != f) out[k++] = v;
  }
  return out;
}

/// The quad type that puts vertices x and y on the same side.
constexpr int quad_separating(int x, int y) {
  if (x == 0) return y - 1;
  if (y == 0) return x - 1;
  return (6 - x - y) - 1;
}

/// The two vertex pairs a quad type separates; first pair contains vertex 0.
constexpr std::array<std::pair<int, int>, 2> quad_sides(int q) {
  const int i = q + 1;
  int j = -1;
  int k = -1;
  for (int v = 1; v < 4; ++v) {
    if (v == i) continue;
    if (j < 0) {
      j = v;
    } else {
      k = v;
    }
  }
  return {{{0, i}, {j, k}}};
}

/// True when vertex v lies on the vertex-0 side of quad q.
constexpr bool on_zero_side(int q, int v) { return v == 0 || v == q + 1; }

/// A quad meets edge {u,w} iff it separates u from w.
constexpr bool quad_meets_edge(int q, int u, int w) {
  return on_zero_side(q, u) != on_zero_side(q, w);
}

}  // namespace qnormal::tet
