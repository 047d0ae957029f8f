#include <qnormal/triangulation.hpp>

#include <qnormal/errors.hpp>
#include <qnormal/tetrahedron.hpp>

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace qnormal {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::string slot_name(std::size_t tet, int face) {
  return "face " + std::to_string(face) + " of tetrahedron " + std::to_string(tet);
}

}  // namespace

int EdgeIncidence::tail() const {
  const auto [lo, hi] = tet::kEdgeVertices[static_cast<std::size_t>(edge)];
  return aligned ? lo : hi;
}

int EdgeIncidence::head() const {
  const auto [lo, hi] = tet::kEdgeVertices[static_cast<std::size_t>(edge)];
  return aligned ? hi : lo;
}

Triangulation Triangulation::from_gluings(std::size_t num_tetrahedra,
                                          const std::vector<GluingSpec>& gluings) {
  if (num_tetrahedra == 0) throw InvalidGluingError("a triangulation needs at least one tetrahedron");

  Triangulation tri;
  tri.adjacency_.resize(num_tetrahedra);
  std::vector<std::array<bool, 4>> explicit_side(num_tetrahedra, {false, false, false, false});

  for (const auto& g : gluings) {
    if (g.tet_a >= num_tetrahedra || g.tet_b >= num_tetrahedra) {
      throw IndexOutOfRangeError("tetrahedron index out of range in gluing of " + slot_name(g.tet_a, g.face_a));
    }
    if (g.face_a < 0 || g.face_a > 3 || g.face_b < 0 || g.face_b > 3) {
      throw IndexOutOfRangeError("face index out of range (expected 0..3)");
    }
    if (g.tet_a == g.tet_b && g.face_a == g.face_b) {
      throw InvalidGluingError(slot_name(g.tet_a, g.face_a) + " is glued to itself");
    }
    if (g.perm[g.face_a] != g.face_b) {
      throw InvalidGluingError("permutation " + g.perm.str() + " does not carry " + slot_name(g.tet_a, g.face_a) +
                               " onto " + slot_name(g.tet_b, g.face_b));
    }
    auto& side_a = explicit_side[g.tet_a][static_cast<std::size_t>(g.face_a)];
    if (side_a) throw InvalidGluingError(slot_name(g.tet_a, g.face_a) + " is glued more than once");
    side_a = true;

    const FaceGluing forward{g.tet_b, g.face_b, g.perm};
    const FaceGluing backward{g.tet_a, g.face_a, g.perm.inverse()};
    auto& slot_a = tri.adjacency_[g.tet_a][static_cast<std::size_t>(g.face_a)];
    auto& slot_b = tri.adjacency_[g.tet_b][static_cast<std::size_t>(g.face_b)];
    if ((slot_a && *slot_a != forward) || (slot_b && *slot_b != backward)) {
      throw InvalidGluingError("gluing of " + slot_name(g.tet_a, g.face_a) + " to " + slot_name(g.tet_b, g.face_b) +
                               " disagrees with an existing gluing (not involutive)");
    }
    slot_a = forward;
    slot_b = backward;
  }

  tri.compute_skeleton();
  tri.compute_orientation();
  tri.compute_boundary();
  return tri;
}

void Triangulation::compute_skeleton() {
  const std::size_t n = size();

  // Vertex classes.
  UnionFind corners(4 * n);
  for (std::size_t t = 0; t < n; ++t) {
    for (int f = 0; f < 4; ++f) {
      const auto& g = gluing(t, f);
      if (!g) continue;
      for (int v : tet::face_vertices(f)) corners.unite(4 * t + v, 4 * g->tet + g->perm[v]);
    }
  }
  vertex_of_.assign(n, {});
  std::vector<std::size_t> root_to_class(4 * n, SIZE_MAX);
  vertices_.clear();
  for (std::size_t c = 0; c < 4 * n; ++c) {
    const std::size_t root = corners.find(c);
    if (root_to_class[root] == SIZE_MAX) {
      root_to_class[root] = vertices_.size();
      vertices_.emplace_back();
    }
    const std::size_t cls = root_to_class[root];
    vertex_of_[c / 4][c % 4] = cls;
    vertices_[cls].corners.push_back({c / 4, static_cast<int>(c % 4)});
  }

  // Edge classes, walking around each edge across glued faces.
  edge_of_.assign(n, {});
  edge_aligned_.assign(n, {});
  std::vector<std::array<bool, 6>> visited(n, {false, false, false, false, false, false});
  edges_.clear();

  struct Step {
    std::size_t tet;
    int tail;
    int head;
  };
  // Crossing the face opposite `across`; returns nullopt at a boundary face.
  auto cross = [this](const Step& s, int across) -> std::optional<std::pair<Step, int>> {
    const auto& g = gluing(s.tet, across);
    if (!g) return std::nullopt;
    Step next{g->tet, g->perm[s.tail], g->perm[s.head]};
    // The face we arrived through is opposite perm[across]; exit via the other one.
    int exit = -1;
    for (int v = 0; v < 4; ++v) {
      if (v != next.tail && v != next.head && v != g->perm[across]) exit = v;
    }
    return std::make_pair(next, exit);
  };
  auto others = [](int a, int b) {
    std::array<int, 2> out{};
    int k = 0;
    for (int v = 0; v < 4; ++v) {
      if (v != a && v != b) out[static_cast<std::size_t>(k++)] = v;
    }
    return out;
  };

  for (std::size_t t = 0; t < n; ++t) {
    for (int e = 0; e < 6; ++e) {
      if (visited[t][static_cast<std::size_t>(e)]) continue;
      const auto [lo, hi] = tet::kEdgeVertices[static_cast<std::size_t>(e)];
      const Step start{t, lo, hi};
      const auto sides = others(lo, hi);

      auto walk = [&](int first_exit, bool& closed) {
        std::vector<Step> path;
        Step cur = start;
        int exit = first_exit;
        closed = false;
        while (true) {
          auto next = cross(cur, exit);
          if (!next) break;
          const Step& s = next->first;
          if (s.tet == start.tet && tet::edge_index(s.tail, s.head) == e) {
            if (s.tail != start.tail) {
              throw InvalidGluingError("edge " + std::to_string(e) + " of tetrahedron " + std::to_string(t) +
                                       " is identified with itself in reverse");
            }
            closed = true;
            break;
          }
          if (path.size() > 6 * size()) throw InvalidGluingError("edge walk does not terminate");
          path.push_back(s);
          cur = s;
          exit = next->second;
        }
        return path;
      };

      bool closed = false;
      std::vector<Step> forward = walk(std::max(sides[0], sides[1]), closed);
      std::vector<Step> sequence;
      if (closed) {
        sequence.push_back(start);
        sequence.insert(sequence.end(), forward.begin(), forward.end());
      } else {
        bool back_closed = false;
        std::vector<Step> backward = walk(std::min(sides[0], sides[1]), back_closed);
        std::reverse(backward.begin(), backward.end());
        sequence = std::move(backward);
        sequence.push_back(start);
        sequence.insert(sequence.end(), forward.begin(), forward.end());
      }

      EdgeClass cls;
      cls.interior = closed;
      const std::size_t index = edges_.size();
      for (const auto& s : sequence) {
        const int local = tet::edge_index(s.tail, s.head);
        auto& seen = visited[s.tet][static_cast<std::size_t>(local)];
        const bool aligned = s.tail < s.head;
        if (seen) {
          if (edge_of_[s.tet][static_cast<std::size_t>(local)] != index ||
              edge_aligned_[s.tet][static_cast<std::size_t>(local)] != aligned) {
            throw InvalidGluingError("edge " + std::to_string(local) + " of tetrahedron " + std::to_string(s.tet) +
                                     " is identified with itself in reverse");
          }
          continue;
        }
        seen = true;
        edge_of_[s.tet][static_cast<std::size_t>(local)] = index;
        edge_aligned_[s.tet][static_cast<std::size_t>(local)] = aligned;
        cls.incidences.push_back({s.tet, local, aligned});
      }
      cls.tail_vertex = vertex_of_[t][static_cast<std::size_t>(lo)];
      cls.head_vertex = vertex_of_[t][static_cast<std::size_t>(hi)];
      edges_.push_back(std::move(cls));
    }
  }

  face_pairs_.clear();
  boundary_faces_.clear();
  for (std::size_t t = 0; t < n; ++t) {
    for (int f = 0; f < 4; ++f) {
      const auto& g = gluing(t, f);
      if (!g) {
        boundary_faces_.push_back({t, f});
      } else if (TetSlot{t, f} < TetSlot{g->tet, g->face}) {
        face_pairs_.push_back({t, f, g->tet, g->face, g->perm});
      }
    }
  }

  // Vertex links must be spheres (interior) or discs (boundary).
  for (const auto& bf : boundary_faces_) {
    for (int v : tet::face_vertices(bf.index)) vertices_[vertex_of_[bf.tet][static_cast<std::size_t>(v)]].boundary = true;
  }
  std::vector<long> link_vertices(vertices_.size(), 0);
  std::vector<long> link_edges(vertices_.size(), 0);
  for (const auto& cls : edges_) {
    ++link_vertices[cls.tail_vertex];
    ++link_vertices[cls.head_vertex];
  }
  auto count_face = [&](std::size_t t, int f) {
    for (int v : tet::face_vertices(f)) ++link_edges[vertex_of_[t][static_cast<std::size_t>(v)]];
  };
  for (const auto& fp : face_pairs_) count_face(fp.tet_a, fp.face_a);
  for (const auto& bf : boundary_faces_) count_face(bf.tet, bf.index);
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    auto& vc = vertices_[v];
    vc.link_euler = link_vertices[v] - link_edges[v] + static_cast<long>(vc.corners.size());
    const long expected = vc.boundary ? 1 : 2;
    if (vc.link_euler != expected) {
      throw InvalidGluingError("link of vertex class " + std::to_string(v) + " is not a " +
                               (vc.boundary ? "disc" : "sphere") + " (Euler characteristic " +
                               std::to_string(vc.link_euler) + ")");
    }
  }
}

void Triangulation::compute_orientation() {
  const std::size_t n = size();
  std::vector<int> sign(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (sign[root] != 0) continue;
    sign[root] = 1;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t t = queue.front();
      queue.pop_front();
      for (int f = 0; f < 4; ++f) {
        const auto& g = gluing(t, f);
        if (!g) continue;
        const int want = -g->perm.sign() * sign[t];
        if (sign[g->tet] == 0) {
          sign[g->tet] = want;
          queue.push_back(g->tet);
        } else if (sign[g->tet] != want) {
          orientation_.reset();
          return;
        }
      }
    }
  }
  orientation_ = std::move(sign);
}

std::size_t Triangulation::interior_edge_count() const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [](const EdgeClass& e) { return e.interior; }));
}

long Triangulation::euler_characteristic() const {
  return static_cast<long>(vertices_.size()) - static_cast<long>(edges_.size()) +
         static_cast<long>(face_pairs_.size() + boundary_faces_.size()) - static_cast<long>(size());
}

Triangulation Triangulation::with_flipped_edge(std::size_t edge_class) const {
  if (edge_class >= edges_.size()) throw IndexOutOfRangeError("edge class index out of range");
  Triangulation out = *this;
  auto& cls = out.edges_[edge_class];
  for (auto& inc : cls.incidences) {
    inc.aligned = !inc.aligned;
    out.edge_aligned_[inc.tet][static_cast<std::size_t>(inc.edge)] = inc.aligned;
  }
  std::swap(cls.tail_vertex, cls.head_vertex);
  cls.reversed = !cls.reversed;
  out.compute_boundary();
  return out;
}

std::string Triangulation::to_text() const {
  std::ostringstream os;
  os << "tets " << size() << '\n';
  for (const auto& fp : face_pairs_) {
    os << "glue " << fp.tet_a << ' ' << fp.face_a << ' ' << fp.tet_b << ' ' << fp.face_b << ' ' << fp.perm.str()
       << '\n';
  }
  return os.str();
}

Triangulation permute_tetrahedra(const Triangulation& tri, const std::vector<std::size_t>& new_index) {
  if (new_index.size() != tri.size()) throw std::invalid_argument("permutation length must equal tetrahedron count");
  std::vector<bool> hit(tri.size(), false);
  for (auto i : new_index) {
    if (i >= tri.size() || hit[i]) throw std::invalid_argument("not a permutation of tetrahedron indices");
    hit[i] = true;
  }
  std::vector<GluingSpec> gluings;
  for (const auto& fp : tri.face_pairs()) {
    gluings.push_back({new_index[fp.tet_a], fp.face_a, new_index[fp.tet_b], fp.face_b, fp.perm});
  }
  return Triangulation::from_gluings(tri.size(), gluings);
}

}  // namespace qnormal
