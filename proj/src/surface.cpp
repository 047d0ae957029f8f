#include <qnormal/surface.hpp>

#include <qnormal/errors.hpp>
#include <qnormal/tetrahedron.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace qnormal {

namespace {

constexpr std::size_t kMaxRealizedDiscs = 5'000'000;

constexpr bool is_triangle(int type) { return type < 4; }

// Local edges met by a disc, in cyclic order around its boundary.
std::vector<std::pair<int, int>> disc_cycle(int type) {
  if (is_triangle(type)) {
    const auto others = tet::face_vertices(type);
    return {{type, others[0]}, {type, others[1]}, {type, others[2]}};
  }
  const auto sides = tet::quad_sides(type - 4);
  const auto [a, b] = sides[0];
  const auto [c, d] = sides[1];
  return {{a, c}, {a, d}, {b, d}, {b, c}};
}

int cycle_index(const std::vector<std::pair<int, int>>& cycle, int u, int w) {
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const auto [x, y] = cycle[i];
    if ((x == u && y == w) || (x == w && y == u)) return static_cast<int>(i);
  }
  return -1;
}

// +1 when the disc's reference orientation runs along the arc from its point
// on edge {cut, x} to its point on edge {cut, y}.
int arc_direction(int type, int cut, int x, int y) {
  const auto cycle = disc_cycle(type);
  const int n = static_cast<int>(cycle.size());
  const int i = cycle_index(cycle, cut, x);
  const int j = cycle_index(cycle, cut, y);
  if (i < 0 || j < 0) throw InternalError("arc endpoints are not on the disc");
  return (j == (i + 1) % n) ? 1 : -1;
}

// +1 when the disc's reference normal points towards `cut`.
int toward(int type, int cut) {
  if (is_triangle(type)) return 1;
  return tet::on_zero_side(type - 4, cut) ? 1 : -1;
}

std::pair<int, int> face_others(int face, int cut) {
  int x = -1;
  int y = -1;
  for (int v : tet::face_vertices(face)) {
    if (v == cut) continue;
    (x < 0 ? x : y) = v;
  }
  return {x, y};
}

class DiscUnion {
 public:
  explicit DiscUnion(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

NormalSurface realize(const StandardVector& v, const Triangulation& tri) {
  if (v.tetrahedra() != tri.size()) throw std::invalid_argument("vector length does not match the triangulation");
  const auto report = is_admissible(v, standard_matching_system(tri));
  if (!report.admissible()) {
    std::string why = "vector is not admissible:";
    if (!report.quad_condition) why += " quad condition fails in tetrahedron " + std::to_string(report.offending_tetrahedra.front());
    if (!report.matching) why += " matching row " + std::to_string(report.offending_rows.front()) + " has nonzero residual";
    throw AdmissibilityError(why);
  }

  NormalSurface s;
  s.tri_ = &tri;
  const std::size_t n = tri.size();

  std::vector<std::array<std::size_t, 7>> count(n);
  std::vector<std::array<std::size_t, 7>> base(n);
  Integer total = 0;
  for (const auto& x : v.entries()) total += x;
  if (total > kMaxRealizedDiscs) throw ResourceLimitError("surface has too many discs to realize");
  for (std::size_t t = 0; t < n; ++t) {
    for (int type = 0; type < 7; ++type) {
      count[t][static_cast<std::size_t>(type)] = static_cast<std::size_t>(v[7 * t + static_cast<std::size_t>(type)]);
      base[t][static_cast<std::size_t>(type)] = s.discs_.size();
      for (std::size_t c = 0; c < count[t][static_cast<std::size_t>(type)]; ++c) s.discs_.push_back({t, type, c});
    }
  }
  auto triangles = [&](std::size_t t, int vtx) { return count[t][static_cast<std::size_t>(vtx)]; };
  auto quads = [&](std::size_t t, int q) { return count[t][static_cast<std::size_t>(4 + q)]; };
  // Discs meeting local edge {u,w}: triangles at u, the quad block, triangles at w.
  auto on_edge = [&](std::size_t t, int u, int w) {
    std::size_t c = triangles(t, u) + triangles(t, w);
    for (int q = 0; q < 3; ++q) {
      if (tet::quad_meets_edge(q, u, w)) c += quads(t, q);
    }
    return c;
  };

  // Points on the 1-skeleton, indexed by (edge class, position from the tail).
  const auto& edges = tri.edge_classes();
  std::vector<std::size_t> point_base(edges.size());
  s.incidence_counts_.resize(edges.size());
  s.edge_weights_.resize(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    point_base[e] = s.point_edge_.size();
    for (const auto& inc : edges[e].incidences) {
      const auto [lo, hi] = tet::kEdgeVertices[static_cast<std::size_t>(inc.edge)];
      s.incidence_counts_[e].push_back(on_edge(inc.tet, lo, hi));
    }
    const Integer w = s.incidence_counts_[e].front();
    for (const auto& c : s.incidence_counts_[e]) {
      if (c != w) throw InternalError("edge class " + std::to_string(e) + " is crossed unequally by its incidences");
    }
    s.edge_weights_[e] = w;
    for (std::size_t k = 0; k < static_cast<std::size_t>(w); ++k) {
      s.point_edge_.push_back(e);
      s.point_position_.push_back(k);
    }
  }
  // The point at depth `depth` from local vertex u along local edge {u,w}.
  auto point_at = [&](std::size_t t, int u, int w, std::size_t depth) {
    const int e = tet::edge_index(u, w);
    const std::size_t total_here = on_edge(t, u, w);
    const std::size_t from_low = u < w ? depth : total_here - 1 - depth;
    const std::size_t from_tail = tri.edge_aligned(t, e) ? from_low : total_here - 1 - from_low;
    return point_base[tri.edge_class_of(t, e)] + from_tail;
  };

  auto arc_sides = [&](std::size_t t, int face, int cut) {
    std::vector<ArcSide> out;
    const int q = tet::quad_separating(cut, face);
    const std::size_t nt = triangles(t, cut);
    const std::size_t nq = quads(t, q);
    const auto [x, y] = face_others(face, cut);
    for (std::size_t k = 0; k < nt + nq; ++k) {
      std::size_t disc = 0;
      if (k < nt) {
        disc = base[t][static_cast<std::size_t>(cut)] + k;
      } else {
        const std::size_t j = k - nt;
        disc = base[t][static_cast<std::size_t>(4 + q)] + (tet::on_zero_side(q, cut) ? j : nq - 1 - j);
      }
      out.push_back({disc, t, face, cut, k, point_at(t, cut, x, k), point_at(t, cut, y, k)});
    }
    return out;
  };

  for (const auto& fp : tri.face_pairs()) {
    for (int cut : tet::face_vertices(fp.face_a)) {
      auto a = arc_sides(fp.tet_a, fp.face_a, cut);
      auto b = arc_sides(fp.tet_b, fp.face_b, fp.perm[cut]);
      if (a.size() != b.size()) throw InternalError("arc counts differ across an interior face");
      for (std::size_t k = 0; k < a.size(); ++k) {
        const std::set<std::size_t> pa{a[k].point_low, a[k].point_high};
        const std::set<std::size_t> pb{b[k].point_low, b[k].point_high};
        if (pa != pb) throw InternalError("glued arcs do not share endpoints");
        s.arcs_.push_back({{a[k], b[k]}});
      }
    }
  }
  for (const auto& bf : tri.boundary_faces()) {
    for (int cut : tet::face_vertices(bf.index)) {
      for (auto& side : arc_sides(bf.tet, bf.index, cut)) s.arcs_.push_back({{side}});
    }
  }
  return s;
}

StandardVector NormalSurface::vector() const {
  std::vector<Integer> v(7 * tri_->size(), 0);
  for (const auto& d : discs_) v[7 * d.tet + static_cast<std::size_t>(d.type)] += 1;
  return StandardVector(std::move(v));
}

bool BoundaryCurveClass::is_trivial() const {
  return std::all_of(coordinates.begin(), coordinates.end(), [](const Integer& x) { return x == 0; });
}

namespace {

struct Components {
  std::vector<std::size_t> of_disc;  // component index per disc
  std::size_t count = 0;
};

Components disc_components(const NormalSurface& s) {
  DiscUnion uf(s.discs().size());
  for (const auto& arc : s.arcs()) {
    if (arc.sides.size() == 2) uf.unite(arc.sides[0].disc, arc.sides[1].disc);
  }
  Components out;
  out.of_disc.assign(s.discs().size(), SIZE_MAX);
  std::map<std::size_t, std::size_t> root_index;
  for (std::size_t d = 0; d < s.discs().size(); ++d) {
    const std::size_t r = uf.find(d);
    auto [it, inserted] = root_index.emplace(r, out.count);
    if (inserted) ++out.count;
    out.of_disc[d] = it->second;
  }
  return out;
}

// End of the edge class (0 = tail, 1 = head) on the cut-vertex side of an
// arc endpoint lying on local edge {cut, other}.
int cut_end(const Triangulation& tri, std::size_t t, int cut, int other) {
  const int e = tet::edge_index(cut, other);
  const auto [lo, hi] = tet::kEdgeVertices[static_cast<std::size_t>(e)];
  const int tail = tri.edge_aligned(t, e) ? lo : hi;
  return cut == tail ? 0 : 1;
}

}  // namespace

std::vector<BoundaryCurveClass> boundary_curves(const NormalSurface& s) {
  const auto& tri = s.triangulation();
  const Components comps = disc_components(s);
  std::map<std::size_t, std::vector<std::size_t>> arcs_at_point;
  std::vector<std::size_t> boundary_arcs;
  for (std::size_t i = 0; i < s.arcs().size(); ++i) {
    const auto& arc = s.arcs()[i];
    if (!arc.on_boundary()) continue;
    boundary_arcs.push_back(i);
    arcs_at_point[arc.sides[0].point_low].push_back(i);
    arcs_at_point[arc.sides[0].point_high].push_back(i);
  }
  for (const auto& [p, list] : arcs_at_point) {
    if (list.size() != 2) throw InternalError("boundary arcs do not close up at point " + std::to_string(p));
  }

  auto end_at = [&](const ArcSide& side, std::size_t point) {
    const auto [x, y] = face_others(side.face, side.cut_vertex);
    const int other = point == side.point_low ? x : y;
    return cut_end(tri, side.tet, side.cut_vertex, other);
  };

  std::vector<BoundaryCurveClass> out;
  std::set<std::size_t> used;
  for (std::size_t start : boundary_arcs) {
    if (used.count(start)) continue;
    EdgeChain chain;
    std::size_t current = start;
    std::size_t exit = s.arcs()[start].sides[0].point_high;
    do {
      used.insert(current);
      const auto& list = arcs_at_point[exit];
      const std::size_t next = list[0] == current ? list[1] : list[0];
      const int in_end = end_at(s.arcs()[current].sides[0], exit);
      const int out_end = end_at(s.arcs()[next].sides[0], exit);
      if (in_end != out_end) chain[s.edge_of_point(exit)] += (in_end == 0 ? 1 : -1);
      const auto& ns = s.arcs()[next].sides[0];
      exit = ns.point_low == exit ? ns.point_high : ns.point_low;
      current = next;
    } while (current != start);
    std::erase_if(chain, [](const auto& kv) { return kv.second == 0; });

    const auto& first = s.arcs()[start].sides[0];
    const auto bc = tri.boundary().component_of_edge(s.edge_of_point(first.point_low));
    if (!bc) throw InternalError("boundary arc endpoint is not on a boundary edge");
    out.push_back({comps.of_disc[first.disc], *bc, tri.boundary().homology_coordinates(*bc, chain)});
  }
  return out;
}

SurfaceInvariants invariants(const NormalSurface& s) {
  const auto& tri = s.triangulation();
  const Components comps = disc_components(s);
  SurfaceInvariants out;
  out.components.resize(comps.count);

  std::vector<long> faces(comps.count, 0);
  std::vector<long> arcs(comps.count, 0);
  std::vector<std::set<std::size_t>> points(comps.count);
  std::vector<std::vector<Integer>> vectors(comps.count, std::vector<Integer>(7 * tri.size(), 0));
  for (std::size_t d = 0; d < s.discs().size(); ++d) {
    const auto& disc = s.discs()[d];
    ++faces[comps.of_disc[d]];
    vectors[comps.of_disc[d]][7 * disc.tet + static_cast<std::size_t>(disc.type)] += 1;
  }
  std::vector<bool> closed(comps.count, true);
  for (const auto& arc : s.arcs()) {
    const std::size_t c = comps.of_disc[arc.sides[0].disc];
    ++arcs[c];
    points[c].insert(arc.sides[0].point_low);
    points[c].insert(arc.sides[0].point_high);
    if (arc.on_boundary()) closed[c] = false;
  }

  // Orientation and transverse side, propagated across glued arcs.
  std::vector<std::vector<std::pair<std::size_t, std::pair<int, int>>>> links(s.discs().size());
  for (const auto& arc : s.arcs()) {
    if (arc.sides.size() != 2) continue;
    const auto& a = arc.sides[0];
    const auto& b = arc.sides[1];
    const auto& da = s.discs()[a.disc];
    const auto& db = s.discs()[b.disc];
    const auto [ax, ay] = face_others(a.face, a.cut_vertex);
    const auto [bx, by] = face_others(b.face, b.cut_vertex);
    const auto& g = *tri.gluing(a.tet, a.face);
    const int mu = g.perm[ax] < g.perm[ay] ? 1 : -1;
    const int orient_rel = -arc_direction(da.type, a.cut_vertex, ax, ay) * arc_direction(db.type, b.cut_vertex, bx, by) * mu;
    const int side_rel = toward(da.type, a.cut_vertex) * toward(db.type, b.cut_vertex);
    links[a.disc].push_back({b.disc, {orient_rel, side_rel}});
    links[b.disc].push_back({a.disc, {orient_rel, side_rel}});
  }
  std::vector<int> orient(s.discs().size(), 0);
  std::vector<int> side(s.discs().size(), 0);
  std::vector<bool> orientable(comps.count, true);
  std::vector<bool> two_sided(comps.count, true);
  for (std::size_t root = 0; root < s.discs().size(); ++root) {
    if (orient[root] != 0) continue;
    orient[root] = 1;
    side[root] = 1;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t d = queue.front();
      queue.pop_front();
      for (const auto& [nb, rel] : links[d]) {
        const int want_o = orient[d] * rel.first;
        const int want_s = side[d] * rel.second;
        if (orient[nb] == 0) {
          orient[nb] = want_o;
          side[nb] = want_s;
          queue.push_back(nb);
          continue;
        }
        if (orient[nb] != want_o) orientable[comps.of_disc[d]] = false;
        if (side[nb] != want_s) two_sided[comps.of_disc[d]] = false;
      }
    }
  }

  for (std::size_t c = 0; c < comps.count; ++c) {
    auto& ci = out.components[c];
    ci.vector = StandardVector(std::move(vectors[c]));
    ci.euler_characteristic = static_cast<long>(points[c].size()) - arcs[c] + faces[c];
    ci.orientable = orientable[c];
    ci.two_sided = two_sided[c];
    ci.closed = closed[c];
    ci.weight = static_cast<long>(points[c].size());
    ci.size = static_cast<std::size_t>(
        std::count_if(ci.vector.entries().begin(), ci.vector.entries().end(), [](const Integer& x) { return x != 0; }));
    out.euler_characteristic += ci.euler_characteristic;
  }
  if (!tri.is_closed()) {
    for (auto& curve : boundary_curves(s)) {
      auto& ci = out.components[curve.surface_component];
      ++ci.boundary_curves;
      ci.boundary_classes.push_back(std::move(curve));
    }
  }
  for (const auto& w : s.edge_weights()) out.weight += w;
  const auto whole = s.empty() ? StandardVector::zero(tri.size()) : s.vector();
  out.size = static_cast<std::size_t>(
      std::count_if(whole.entries().begin(), whole.entries().end(), [](const Integer& x) { return x != 0; }));
  return out;
}

bool is_essential_disc(const ComponentInvariants& component, const BoundarySurface& boundary) {
  if (component.closed) return false;
  for (const auto& curve : component.boundary_classes) {
    if (!boundary.components().at(curve.boundary_component).is_torus()) {
      throw UnsupportedBoundaryError("boundary curve lies on boundary component " +
                                     std::to_string(curve.boundary_component) + ", which is not a torus");
    }
  }
  if (component.euler_characteristic != 1 || component.boundary_curves != 1) return false;
  return !component.boundary_classes.front().is_trivial();
}

}  // namespace qnormal
