#pragma once

// Shared fixtures and independent oracles for the unit and acceptance tests.
// Nothing here calls the library routine it is used to check.

#include <qnormal/coordinates.hpp>
#include <qnormal/enumeration.hpp>
#include <qnormal/surface.hpp>
#include <qnormal/triangulation.hpp>

#include <algorithm>
#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace qtest {

using qnormal::Integer;
using Vec = std::vector<Integer>;

inline std::filesystem::path corpus_dir() { return QNORMAL_CORPUS_DIR; }

inline const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names{"single_tetrahedron", "lst_1",    "lst_2",
                                              "lst_3",              "closed_s3_2tet", "lens_3_1",
                                              "trefoil_complement"};
  return names;
}

inline qnormal::Triangulation corpus(const std::string& name) {
  return qnormal::load_triangulation((corpus_dir() / (name + ".tri")).string());
}

inline Vec ints(std::initializer_list<long long> xs) {
  Vec out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

inline std::vector<Vec> vectors_of(const qnormal::EnumerationResult& r) {
  std::vector<Vec> out;
  for (const auto& v : r.vertices) out.push_back(v.vector);
  return out;
}

inline std::set<Vec> vector_set(const qnormal::EnumerationResult& r) {
  const auto v = vectors_of(r);
  return {v.begin(), v.end()};
}

inline std::size_t support_size(const Vec& v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; }));
}

// Rank over the rationals by fraction-free elimination.
inline std::size_t rational_rank(std::vector<Vec> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      const Integer a = m[rank][c];
      const Integer b = m[r][c];
      for (std::size_t j = 0; j < cols; ++j) m[r][j] = a * m[r][j] - b * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Extreme ray test: the columns of A on the support of r have a
// one-dimensional kernel.
inline bool algebraically_extreme(const qnormal::MatchingSystem& sys, const Vec& r) {
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] != 0) cols.push_back(i);
  }
  std::vector<Vec> sub;
  for (const auto& row : sys.rows()) {
    Vec s;
    for (auto c : cols) s.push_back(row[c]);
    sub.push_back(std::move(s));
  }
  return rational_rank(sub) + 1 == cols.size();
}

// True when r = a*y + b*z for some rationals a, b > 0.
inline bool positive_combination(const Vec& y, const Vec& z, const Vec& r) {
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Integer det = y[i] * z[j] - y[j] * z[i];
      if (det == 0) continue;
      // Cramer: a = (r_i z_j - r_j z_i) / det, b = (y_i r_j - y_j r_i) / det.
      const Integer an = r[i] * z[j] - r[j] * z[i];
      const Integer bn = y[i] * r[j] - y[j] * r[i];
      if (an * det <= 0 || bn * det <= 0) return false;
      for (std::size_t k = 0; k < n; ++k) {
        if (an * y[k] + bn * z[k] != det * r[k]) return false;
      }
      return true;
    }
  }
  return false;  // y and z parallel
}

inline bool quad_condition_holds(const Vec& v, std::size_t width, std::size_t quad_offset) {
  for (std::size_t t = 0; t * width < v.size(); ++t) {
    int positive = 0;
    for (std::size_t q = 0; q < 3; ++q) positive += v[t * width + quad_offset + q] > 0;
    if (positive > 1) return false;
  }
  return true;
}

// Decomposes d = sum_v c_v * link(v) by reading the triangle value at one
// corner of each vertex class and checking every other coordinate.
inline std::optional<Vec> link_combination(const qnormal::Triangulation& tri, const Vec& d) {
  Vec c(tri.vertex_classes().size(), 0);
  std::vector<bool> seen(c.size(), false);
  for (std::size_t t = 0; t < tri.size(); ++t) {
    for (int q = 0; q < 3; ++q) {
      if (d[7 * t + 4 + static_cast<std::size_t>(q)] != 0) return std::nullopt;
    }
    for (int v = 0; v < 4; ++v) {
      const std::size_t cls = tri.vertex_class_of(t, v);
      const Integer& x = d[7 * t + static_cast<std::size_t>(v)];
      if (!seen[cls]) {
        seen[cls] = true;
        c[cls] = x;
      } else if (c[cls] != x) {
        return std::nullopt;
      }
    }
  }
  for (const auto& x : c) {
    if (x < 0) return std::nullopt;
  }
  return c;
}

// Vertex classes by exhaustive closure: repeatedly merge labels across
// every gluing until nothing changes.
inline std::vector<std::vector<std::pair<std::size_t, int>>> vertex_orbits(const qnormal::Triangulation& tri) {
  const std::size_t n = tri.size() * 4;
  std::vector<std::size_t> label(n);
  for (std::size_t i = 0; i < n; ++i) label[i] = i;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t t = 0; t < tri.size(); ++t) {
      for (int f = 0; f < 4; ++f) {
        const auto& g = tri.gluing(t, f);
        if (!g) continue;
        for (int v = 0; v < 4; ++v) {
          if (v == f) continue;
          const std::size_t a = 4 * t + static_cast<std::size_t>(v);
          const std::size_t b = 4 * g->tet + static_cast<std::size_t>(g->perm[v]);
          const std::size_t m = std::min(label[a], label[b]);
          if (label[a] != m || label[b] != m) {
            label[a] = label[b] = m;
            changed = true;
          }
        }
      }
    }
  }
  std::map<std::size_t, std::vector<std::pair<std::size_t, int>>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[label[i]].push_back({i / 4, static_cast<int>(i % 4)});
  std::vector<std::vector<std::pair<std::size_t, int>>> out;
  for (auto& [k, g] : groups) out.push_back(std::move(g));
  return out;
}

// Same for edges: an edge is an unordered local vertex pair.
inline std::size_t edge_orbit_count(const qnormal::Triangulation& tri) {
  const std::size_t n = tri.size() * 6;
  std::vector<std::size_t> label(n);
  for (std::size_t i = 0; i < n; ++i) label[i] = i;
  auto local = [](int u, int w) {
    static constexpr std::array<std::array<int, 4>, 4> idx{
        {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}}};
    return static_cast<std::size_t>(idx[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)]);
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t t = 0; t < tri.size(); ++t) {
      for (int f = 0; f < 4; ++f) {
        const auto& g = tri.gluing(t, f);
        if (!g) continue;
        for (int u = 0; u < 4; ++u) {
          for (int w = u + 1; w < 4; ++w) {
            if (u == f || w == f) continue;
            const std::size_t a = 6 * t + local(u, w);
            const std::size_t b = 6 * g->tet + local(g->perm[u], g->perm[w]);
            const std::size_t m = std::min(label[a], label[b]);
            if (label[a] != m || label[b] != m) {
              label[a] = label[b] = m;
              changed = true;
            }
          }
        }
      }
    }
  }
  return std::set<std::size_t>(label.begin(), label.end()).size();
}

// Coordinate image of a vector under a relabelling of tetrahedra.
inline Vec permute_coordinates(const Vec& v, const std::vector<std::size_t>& new_index, std::size_t width) {
  Vec out(v.size(), 0);
  for (std::size_t t = 0; t < new_index.size(); ++t) {
    for (std::size_t k = 0; k < width; ++k) out[new_index[t] * width + k] = v[t * width + k];
  }
  return out;
}

// Random admissible standard vectors built as positive combinations of
// compatible standard vertex solutions and vertex links.
inline std::vector<Vec> random_admissible_sums(const qnormal::Triangulation& tri, const std::vector<Vec>& vertices,
                                               std::size_t count, std::mt19937& rng) {
  std::vector<Vec> pool = vertices;
  for (std::size_t v = 0; v < tri.vertex_classes().size(); ++v) {
    const auto link = qnormal::vertex_link(tri, v);
    pool.emplace_back(link.entries().begin(), link.entries().end());
  }
  std::vector<Vec> out;
  if (pool.empty()) return out;
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> terms(2, 4);
  std::uniform_int_distribution<int> mult(1, 3);
  for (std::size_t attempts = 0; out.size() < count && attempts < 100 * count; ++attempts) {
    Vec sum(pool.front().size(), 0);
    const int k = terms(rng);
    for (int i = 0; i < k; ++i) {
      const auto& v = pool[pick(rng)];
      const int m = mult(rng);
      for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += m * v[j];
    }
    if (quad_condition_holds(sum, 7, 4)) out.push_back(std::move(sum));
  }
  return out;
}

inline qnormal::StandardVector standard(const Vec& v) { return qnormal::StandardVector(v); }

}  // namespace qtest
