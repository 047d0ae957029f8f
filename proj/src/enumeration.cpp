#include <qnormal/enumeration.hpp>

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <chrono>
#include <numeric>
#include <optional>

namespace qnormal {

namespace {

using Bits = boost::dynamic_bitset<>;

struct Ray {
  std::vector<Integer> coords;
  Bits zeros;  // coordinates where the ray vanishes
};

Bits zero_set(const std::vector<Integer>& v) {
  Bits z(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) z[i] = (v[i] == 0);
  return z;
}

// Quad-condition check on a support given as the complement of a zero set.
bool support_admissible(const Bits& zeros, CoordKind kind, std::size_t tets) {
  for (std::size_t t = 0; t < tets; ++t) {
    int present = 0;
    for (int q = 0; q < 3; ++q) {
      if (!zeros[quad_column(kind, t, q)]) ++present;
    }
    if (present > 1) return false;
  }
  return true;
}

VertexSolution make_solution(CoordKind kind, std::vector<Integer> v) {
  VertexSolution s{kind, std::move(v), {}};
  for (std::size_t i = 0; i < s.vector.size(); ++i) {
    if (s.vector[i] != 0) s.support.push_back(i);
  }
  return s;
}

void sort_unique(std::vector<VertexSolution>& sols) {
  std::sort(sols.begin(), sols.end(), [](const auto& a, const auto& b) { return a.vector < b.vector; });
  sols.erase(std::unique(sols.begin(), sols.end()), sols.end());
}

}  // namespace

StandardVector VertexSolution::as_standard() const {
  if (kind != CoordKind::standard) throw std::logic_error("not a standard vertex solution");
  return StandardVector(vector);
}

QuadVector VertexSolution::as_quad() const {
  if (kind != CoordKind::quad) throw std::logic_error("not a quad vertex solution");
  return QuadVector(vector);
}

std::vector<Integer> primitive(std::span<const Integer> v) {
  const Integer g = gcd_of(v);
  if (g == 0) throw std::invalid_argument("primitive: the zero vector has no primitive representative");
  std::vector<Integer> out(v.begin(), v.end());
  if (g != 1) {
    for (auto& x : out) x /= g;
  }
  return out;
}

std::size_t rank_of(std::vector<std::vector<Integer>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Integer a = rows[rank][c];
      const Integer b = rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[r][j] = a * rows[r][j] - b * rows[rank][j];
      const Integer g = gcd_of(rows[r]);
      if (g > 1) {
        for (auto& x : rows[r]) x /= g;
      }
    }
    ++rank;
  }
  return rank;
}

EnumerationResult enumerate_dd(const MatchingSystem& system, const EnumerationOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  const std::size_t n = system.columns();
  const CoordKind kind = system.kind();
  const std::size_t tets = system.tetrahedra();
  EnumerationResult result;

  std::vector<Ray> rays;
  rays.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Integer> unit(n, 0);
    unit[i] = 1;
    Bits z = zero_set(unit);
    rays.push_back({std::move(unit), std::move(z)});
  }

  std::vector<std::size_t> order(system.row_count());
  std::iota(order.begin(), order.end(), 0);
  if (options.sort_rows) {
    auto nonzeros = [&](std::size_t r) {
      const auto& row = system.row(r);
      return std::count_if(row.begin(), row.end(), [](const Integer& x) { return x != 0; });
    };
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return nonzeros(a) < nonzeros(b); });
  }

  std::vector<std::vector<Integer>> inserted;
  for (std::size_t r : order) {
    const auto& row = system.row(r);
    std::vector<std::size_t> zero_side;
    std::vector<std::size_t> positive;
    std::vector<std::size_t> negative;
    std::vector<Integer> value(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      value[i] = dot(row, rays[i].coords);
      if (value[i] == 0) {
        zero_side.push_back(i);
      } else if (value[i] > 0) {
        positive.push_back(i);
      } else {
        negative.push_back(i);
      }
    }

    std::vector<Ray> next;
    for (std::size_t i : zero_side) next.push_back(rays[i]);
    std::size_t filtered = 0;
    for (std::size_t p : positive) {
      for (std::size_t m : negative) {
        Bits common = rays[p].zeros & rays[m].zeros;
        if (options.filter && !support_admissible(common, kind, tets)) {
          ++filtered;
          continue;
        }
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k == p || k == m) continue;
          if (common.is_subset_of(rays[k].zeros)) adjacent = false;
        }
        if (options.verify_adjacency) {
          auto constraints = inserted;
          for (std::size_t i = 0; i < n; ++i) {
            if (common[i]) {
              std::vector<Integer> unit(n, 0);
              unit[i] = 1;
              constraints.push_back(std::move(unit));
            }
          }
          const bool algebraic = rank_of(std::move(constraints)) == n - 2;
          if (algebraic != adjacent) throw InternalError("combinatorial and algebraic adjacency tests disagree");
        }
        if (!adjacent) continue;
        ++result.stats.combinations;
        std::vector<Integer> combined(n);
        for (std::size_t i = 0; i < n; ++i) combined[i] = value[p] * rays[m].coords[i] - value[m] * rays[p].coords[i];
        combined = primitive(combined);
        Bits z = zero_set(combined);
        next.push_back({std::move(combined), std::move(z)});
        if (next.size() > options.max_rays) {
          throw ResourceLimitError("double description exceeded the cap of " + std::to_string(options.max_rays) +
                                   " rays");
        }
      }
    }
    rays = std::move(next);
    inserted.push_back(row);
    result.stats.rays_per_stage.push_back(rays.size());
    if (options.filter) result.stats.filtered_per_stage.push_back(filtered);
  }

  std::size_t dropped = 0;
  for (auto& ray : rays) {
    if (!support_admissible(ray.zeros, kind, tets)) {
      ++dropped;
      continue;
    }
    result.vertices.push_back(make_solution(kind, std::move(ray.coords)));
  }
  if (!options.filter) result.stats.filtered_per_stage.push_back(dropped);
  sort_unique(result.vertices);
  result.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

namespace {

// Exact rational elimination on small integer matrices, kept independent of
// the double description code path.
struct Overflow {};

// Checked machine arithmetic; the bignum path is taken when a step overflows.
struct Checked {
  long long v = 0;
  Checked() = default;
  Checked(long long x) : v(x) {}
  friend Checked operator*(Checked a, Checked b) {
    long long r;
    if (__builtin_mul_overflow(a.v, b.v, &r)) throw Overflow{};
    return r;
  }
  friend Checked operator-(Checked a, Checked b) {
    long long r;
    if (__builtin_sub_overflow(a.v, b.v, &r)) throw Overflow{};
    return r;
  }
  friend Checked operator-(Checked a) { return Checked(0) - a; }
  friend Checked operator/(Checked a, Checked b) { return a.v / b.v; }
  Checked& operator/=(Checked b) { v /= b.v; return *this; }
  friend bool operator==(Checked a, Checked b) { return a.v == b.v; }
  friend bool operator==(Checked a, int b) { return a.v == b; }
  friend bool operator>(Checked a, int b) { return a.v > b; }
};

Checked abs_of(Checked a) { return a.v < 0 ? -a : a; }
Integer abs_of(const Integer& a) { return abs(a); }

Checked gcd_pair(Checked a, Checked b) { return std::gcd(a.v, b.v); }
Integer gcd_pair(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

template <class T>
T lcm_pair(const T& a, const T& b) {
  return a / gcd_pair(a, b) * b;
}

template <class T>
std::optional<std::vector<T>> kernel_ray(std::vector<std::vector<T>> m, std::size_t k) {
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < k && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[rank], m[p]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const T a = m[rank][c];
      const T b = m[r][c];
      T g = 0;
      for (std::size_t j = 0; j < k; ++j) {
        m[r][j] = a * m[r][j] - b * m[rank][j];
        g = gcd_pair(g, m[r][j]);
      }
      if (g > 1) {
        for (auto& x : m[r]) x /= g;
      }
    }
    pivot_col.push_back(c);
    ++rank;
    if (k - rank < 1) return std::nullopt;
  }
  if (k - rank != 1) return std::nullopt;
  std::vector<bool> is_pivot(k, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  T scale = 1;
  for (std::size_t i = 0; i < rank; ++i) scale = lcm_pair(scale, abs_of(m[i][pivot_col[i]]));
  std::vector<T> x(k, 0);
  x[free_col] = scale;
  for (std::size_t i = 0; i < rank; ++i) {
    // a x_pivot + b x_free = 0
    x[pivot_col[i]] = -(m[i][free_col] * (scale / m[i][pivot_col[i]]));
  }
  return x;
}

class KernelProbe {
 public:
  explicit KernelProbe(const MatchingSystem& system) : rows_(system.rows()) {
    small_ = true;
    for (const auto& row : rows_) {
      std::vector<Checked> r;
      for (const auto& x : row) {
        if (abs(x) > 1000000) small_ = false;
        r.emplace_back(small_ ? x.convert_to<long long>() : 0);
      }
      small_rows_.push_back(std::move(r));
    }
  }

  // Generator of the kernel of A restricted to `columns`, if it is one-dimensional.
  std::optional<std::vector<Integer>> unique_ray(const std::vector<std::size_t>& columns) const {
    if (small_) {
      try {
        auto x = kernel_ray(restrict_to(small_rows_, columns), columns.size());
        if (!x) return std::nullopt;
        std::vector<Integer> out;
        for (auto c : *x) out.emplace_back(c.v);
        return out;
      } catch (const Overflow&) {
      }
    }
    return kernel_ray(restrict_to(rows_, columns), columns.size());
  }

 private:
  template <class T>
  static std::vector<std::vector<T>> restrict_to(const std::vector<std::vector<T>>& rows,
                                                 const std::vector<std::size_t>& columns) {
    std::vector<std::vector<T>> m;
    for (const auto& row : rows) {
      std::vector<T> r(columns.size());
      bool nonzero = false;
      for (std::size_t j = 0; j < columns.size(); ++j) {
        r[j] = row[columns[j]];
        nonzero = nonzero || !(r[j] == 0);
      }
      if (nonzero) m.push_back(std::move(r));
    }
    return m;
  }

  std::vector<std::vector<Integer>> rows_;
  std::vector<std::vector<Checked>> small_rows_;
  bool small_ = false;
};

}  // namespace

EnumerationResult enumerate_bruteforce(const MatchingSystem& system, std::size_t max_columns) {
  const auto started = std::chrono::steady_clock::now();
  const std::size_t n = system.columns();
  if (n > max_columns) {
    throw ResourceLimitError("brute-force oracle limited to " + std::to_string(max_columns) + " coordinates, system has " +
                             std::to_string(n));
  }
  const CoordKind kind = system.kind();
  const std::size_t tets = system.tetrahedra();
  const KernelProbe probe(system);

  // Per tetrahedron: any subset of triangles (standard only) and at most one quad.
  const std::size_t triangle_choices = kind == CoordKind::standard ? 16 : 1;
  const std::size_t local_choices = triangle_choices * 4;
  std::vector<std::size_t> digit(tets, 0);
  EnumerationResult result;
  while (true) {
    std::vector<std::size_t> columns;
    for (std::size_t t = 0; t < tets; ++t) {
      const std::size_t tri_mask = digit[t] % triangle_choices;
      const std::size_t quad_choice = digit[t] / triangle_choices;
      for (int v = 0; v < 4; ++v) {
        if (tri_mask & (1u << v)) columns.push_back(triangle_column(t, v));
      }
      if (quad_choice > 0) columns.push_back(quad_column(kind, t, static_cast<int>(quad_choice) - 1));
    }
    std::sort(columns.begin(), columns.end());
    if (!columns.empty()) {
      if (auto ray = probe.unique_ray(columns)) {
        bool all_pos = true;
        bool all_neg = true;
        for (const auto& x : *ray) {
          all_pos = all_pos && x > 0;
          all_neg = all_neg && x < 0;
        }
        if (all_pos || all_neg) {
          std::vector<Integer> full(n, 0);
          for (std::size_t j = 0; j < columns.size(); ++j) full[columns[j]] = all_pos ? (*ray)[j] : -(*ray)[j];
          result.vertices.push_back(make_solution(kind, primitive(full)));
        }
      }
    }
    std::size_t t = 0;
    while (t < tets && ++digit[t] == local_choices) digit[t++] = 0;
    if (t == tets) break;
  }
  sort_unique(result.vertices);
  result.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace qnormal
