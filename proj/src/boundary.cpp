// Boundary surface of a triangulation: components, Euler characteristic,
// orientability and an integral basis of first homology.

#include <qnormal/errors.hpp>
#include <qnormal/tetrahedron.hpp>
#include <qnormal/triangulation.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace qnormal {

namespace {

using Matrix = std::vector<std::vector<Integer>>;

Matrix identity(std::size_t k) {
  Matrix m(k, std::vector<Integer>(k, 0));
  for (std::size_t i = 0; i < k; ++i) m[i][i] = 1;
  return m;
}

struct SmithForm {
  std::vector<Integer> diagonal;  // nonzero invariant factors, in order
  Matrix column_ops;              // Q with P * R * Q = D
  Matrix column_ops_inverse;
};

// Smith normal form of `r` (rows x k), tracking column operations only.
SmithForm smith_normal_form(Matrix r, std::size_t k) {
  SmithForm out{{}, identity(k), identity(k)};
  auto& q = out.column_ops;
  auto& qinv = out.column_ops_inverse;
  const std::size_t rows = r.size();

  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& row : r) std::swap(row[a], row[b]);
    for (auto& row : q) std::swap(row[a], row[b]);
    std::swap(qinv[a], qinv[b]);
  };
  // col_j -= m * col_t
  auto sub_col = [&](std::size_t j, std::size_t t, const Integer& m) {
    if (m == 0) return;
    for (auto& row : r) row[j] -= m * row[t];
    for (auto& row : q) row[j] -= m * row[t];
    for (std::size_t c = 0; c < k; ++c) qinv[t][c] += m * qinv[j][c];
  };
  auto sub_row = [&](std::size_t i, std::size_t t, const Integer& m) {
    if (m == 0) return;
    for (std::size_t c = 0; c < k; ++c) r[i][c] -= m * r[t][c];
  };

  for (std::size_t t = 0; t < std::min(rows, k); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t bi = rows;
      std::size_t bj = k;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < k; ++j) {
          if (r[i][j] != 0 && (bi == rows || abs(r[i][j]) < abs(r[bi][bj]))) {
            bi = i;
            bj = j;
          }
        }
      }
      if (bi == rows) return out;
      std::swap(r[t], r[bi]);
      swap_cols(t, bj);
      if (r[t][t] < 0) {
        for (auto& x : r[t]) x = -x;
      }

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        sub_row(i, t, r[i][t] / r[t][t]);
        if (r[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < k; ++j) {
        sub_col(j, t, r[t][j] / r[t][t]);
        if (r[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold any offending row into the pivot row and retry.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < k; ++j) {
          if (r[i][j] % r[t][t] != 0) {
            for (std::size_t c = 0; c < k; ++c) r[t][c] += r[i][c];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    out.diagonal.push_back(r[t][t]);
  }
  return out;
}

struct FaceSlot {
  std::size_t face;  // boundary face index
  std::size_t edge;  // edge class
  int direction;     // +1 when the face's label cycle runs along the class orientation
};

}  // namespace

void Triangulation::compute_boundary() {
  const std::size_t nf = boundary_faces_.size();
  std::vector<FaceSlot> slots;
  std::map<std::size_t, std::vector<std::size_t>> slots_of_edge;
  for (std::size_t fi = 0; fi < nf; ++fi) {
    const auto& bf = boundary_faces_[fi];
    const auto fv = tet::face_vertices(bf.index);
    // Cycle fv0 -> fv1 -> fv2 -> fv0.
    const std::array<std::pair<int, int>, 3> sides{{{fv[0], fv[1]}, {fv[1], fv[2]}, {fv[2], fv[0]}}};
    for (const auto& [u, w] : sides) {
      const int e = tet::edge_index(u, w);
      const int along_local = u < w ? 1 : -1;
      const int dir = along_local * (edge_aligned(bf.tet, e) ? 1 : -1);
      const std::size_t cls = edge_class_of(bf.tet, e);
      slots_of_edge[cls].push_back(slots.size());
      slots.push_back({fi, cls, dir});
    }
  }
  for (const auto& [cls, ss] : slots_of_edge) {
    if (ss.size() != 2) {
      throw InvalidGluingError("boundary edge class " + std::to_string(cls) + " lies in " +
                               std::to_string(ss.size()) + " boundary faces");
    }
  }

  // Components and orientations by breadth-first propagation over faces.
  std::vector<int> orient(nf, 0);
  std::vector<std::size_t> component(nf, SIZE_MAX);
  std::vector<BoundaryComponent> comps;
  std::vector<bool> comp_orientable;
  for (std::size_t root = 0; root < nf; ++root) {
    if (component[root] != SIZE_MAX) continue;
    const std::size_t c = comps.size();
    comps.emplace_back();
    bool orientable = true;
    component[root] = c;
    orient[root] = 1;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t f = queue.front();
      queue.pop_front();
      comps[c].faces.push_back(f);
      for (std::size_t s = 3 * f; s < 3 * f + 3; ++s) {
        const auto& pair = slots_of_edge[slots[s].edge];
        const std::size_t other = pair[0] == s ? pair[1] : pair[0];
        const std::size_t g = slots[other].face;
        const int want = -orient[f] * slots[s].direction * slots[other].direction;
        if (component[g] == SIZE_MAX) {
          component[g] = c;
          orient[g] = want;
          queue.push_back(g);
        } else if (orient[g] != want) {
          orientable = false;
        }
      }
    }
    std::sort(comps[c].faces.begin(), comps[c].faces.end());
    comp_orientable.push_back(orientable);
  }

  for (std::size_t c = 0; c < comps.size(); ++c) {
    auto& comp = comps[c];
    comp.orientable = comp_orientable[c];
    std::set<std::size_t> edges;
    std::set<std::size_t> verts;
    for (std::size_t f : comp.faces) {
      const auto& bf = boundary_faces_[f];
      for (std::size_t s = 3 * f; s < 3 * f + 3; ++s) edges.insert(slots[s].edge);
      for (int v : tet::face_vertices(bf.index)) verts.insert(vertex_of_[bf.tet][static_cast<std::size_t>(v)]);
    }
    comp.edges.assign(edges.begin(), edges.end());
    comp.vertices.assign(verts.begin(), verts.end());
    comp.euler_characteristic = static_cast<long>(verts.size()) - static_cast<long>(edges.size()) +
                                static_cast<long>(comp.faces.size());
    comp.genus = comp.orientable ? (2 - comp.euler_characteristic) / 2 : 2 - comp.euler_characteristic;
    for (std::size_t e : comp.edges) comp.edge_ends[e] = {edges_[e].tail_vertex, edges_[e].head_vertex};

    // Spanning tree of the 1-skeleton; non-tree edges index the cycle basis.
    std::map<std::size_t, std::pair<std::size_t, int>> parent;  // vertex -> (tree edge, +1 if edge points to parent)
    std::set<std::size_t> tree_edges;
    std::set<std::size_t> reached{comp.vertices.front()};
    std::deque<std::size_t> queue{comp.vertices.front()};
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t e : comp.edges) {
        const auto [tail, head] = comp.edge_ends[e];
        std::size_t w = SIZE_MAX;
        int dir = 0;
        if (tail == v && head != v) {
          w = head;
          dir = -1;  // edge runs from parent v to child w
        } else if (head == v && tail != v) {
          w = tail;
          dir = 1;
        }
        if (w == SIZE_MAX || reached.count(w)) continue;
        reached.insert(w);
        parent[w] = {e, dir};
        tree_edges.insert(e);
        queue.push_back(w);
      }
    }
    for (std::size_t e : comp.edges) {
      if (!tree_edges.count(e)) comp.cycle_edges.push_back(e);
    }
    const std::size_t k = comp.cycle_edges.size();
    std::map<std::size_t, std::size_t> cycle_index;
    for (std::size_t j = 0; j < k; ++j) cycle_index[comp.cycle_edges[j]] = j;

    Matrix relations;
    for (std::size_t f : comp.faces) {
      std::vector<Integer> row(k, 0);
      for (std::size_t s = 3 * f; s < 3 * f + 3; ++s) {
        auto it = cycle_index.find(slots[s].edge);
        if (it != cycle_index.end()) row[it->second] += orient[f] * slots[s].direction;
      }
      relations.push_back(std::move(row));
    }
    SmithForm snf = smith_normal_form(relations, k);
    comp.relation_rank = snf.diagonal.size();
    for (const auto& d : snf.diagonal) {
      if (d > 1) comp.torsion.push_back(d);
    }
    comp.column_basis = snf.column_ops;

    // Path from a vertex to the tree root as an edge chain.
    auto root_path = [&](std::size_t v) {
      EdgeChain chain;
      while (parent.count(v)) {
        const auto [e, dir] = parent[v];
        chain[e] += dir;
        const auto [tail, head] = comp.edge_ends[e];
        v = (dir == 1) ? head : tail;
      }
      return chain;
    };
    for (std::size_t i = comp.relation_rank; i < k; ++i) {
      EdgeChain cycle;
      for (std::size_t j = 0; j < k; ++j) {
        const Integer& coeff = snf.column_ops_inverse[i][j];
        if (coeff == 0) continue;
        const std::size_t e = comp.cycle_edges[j];
        const auto [tail, head] = comp.edge_ends[e];
        cycle[e] += coeff;
        for (const auto& [pe, m] : root_path(head)) cycle[pe] += coeff * m;
        for (const auto& [pe, m] : root_path(tail)) cycle[pe] -= coeff * m;
      }
      std::erase_if(cycle, [](const auto& kv) { return kv.second == 0; });
      comp.homology_basis.push_back(std::move(cycle));
    }
  }
  boundary_ = BoundarySurface(std::move(comps));
}

std::optional<std::size_t> BoundarySurface::component_of_edge(std::size_t edge_class) const {
  for (std::size_t c = 0; c < components_.size(); ++c) {
    if (std::binary_search(components_[c].edges.begin(), components_[c].edges.end(), edge_class)) return c;
  }
  return std::nullopt;
}

std::vector<Integer> BoundarySurface::homology_coordinates(std::size_t c, const EdgeChain& cycle) const {
  const auto& comp = components_.at(c);
  std::map<std::size_t, Integer> vertex_boundary;
  for (const auto& [e, m] : cycle) {
    auto it = comp.edge_ends.find(e);
    if (it == comp.edge_ends.end()) {
      throw InternalError("chain uses edge class " + std::to_string(e) + " outside boundary component " +
                          std::to_string(c));
    }
    vertex_boundary[it->second.second] += m;
    vertex_boundary[it->second.first] -= m;
  }
  for (const auto& [v, m] : vertex_boundary) {
    if (m != 0) throw InternalError("chain is not a cycle at vertex class " + std::to_string(v));
  }
  const std::size_t k = comp.cycle_edges.size();
  std::vector<Integer> coords;
  for (std::size_t i = comp.relation_rank; i < k; ++i) {
    Integer value = 0;
    for (std::size_t j = 0; j < k; ++j) {
      auto it = cycle.find(comp.cycle_edges[j]);
      if (it != cycle.end()) value += it->second * comp.column_basis[j][i];
    }
    coords.push_back(value);
  }
  return coords;
}

}  // namespace qnormal
