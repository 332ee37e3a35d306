#include "orbitcover/homology.hpp"

#include <bit>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace orbitcover {

namespace {

std::int64_t sub_mul(std::int64_t a, std::int64_t q, std::int64_t b) {
  std::int64_t prod = 0;
  std::int64_t out = 0;
  if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &out)) {
    throw std::overflow_error("integer overflow during Smith reduction");
  }
  return out;
}

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("integer overflow during Smith reduction");
  }
  return out;
}

void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

std::uint64_t magnitude(std::int64_t v) {
  return v < 0 ? std::uint64_t(0) - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
}

}  // namespace

std::vector<std::int64_t> invariant_factors(IntegerMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::int64_t> diagonal;

  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pr = rows;
    std::size_t pc = cols;
    for (std::size_t r = t; r < rows; ++r) {
      for (std::size_t c = t; c < cols; ++c) {
        if (m(r, c) != 0 && (pr == rows || magnitude(m(r, c)) < magnitude(m(pr, pc)))) {
          pr = r;
          pc = c;
        }
      }
    }
    if (pr == rows) break;
    swap_rows(m, t, pr);
    swap_cols(m, t, pc);

    for (;;) {
      bool cleared = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (m(r, t) == 0) continue;
        const std::int64_t q = m(r, t) / m(t, t);
        for (std::size_t c = t; c < cols; ++c) {
          if (m(t, c) != 0) m(r, c) = sub_mul(m(r, c), q, m(t, c));
        }
        if (m(r, t) != 0) cleared = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (m(t, c) == 0) continue;
        const std::int64_t q = m(t, c) / m(t, t);
        for (std::size_t r = t; r < rows; ++r) {
          if (m(r, t) != 0) m(r, c) = sub_mul(m(r, c), q, m(r, t));
        }
        if (m(t, c) != 0) cleared = false;
      }

      if (!cleared) {
        // A remainder smaller than the pivot survived; promote it.
        std::size_t br = t;
        std::size_t bc = t;
        for (std::size_t r = t + 1; r < rows; ++r) {
          if (m(r, t) != 0 && magnitude(m(r, t)) < magnitude(m(br, bc))) {
            br = r;
            bc = t;
          }
        }
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (m(t, c) != 0 && magnitude(m(t, c)) < magnitude(m(br, bc))) {
            br = t;
            bc = c;
          }
        }
        swap_rows(m, t, br);
        swap_cols(m, t, bc);
        continue;
      }

      // Row and column t are clear; enforce d_t | every trailing entry.
      const std::int64_t pivot = m(t, t);
      if (pivot == 1 || pivot == -1) break;
      std::size_t bad_row = rows;
      for (std::size_t r = t + 1; r < rows && bad_row == rows; ++r) {
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (m(r, c) % pivot != 0) {
            bad_row = r;
            break;
          }
        }
      }
      if (bad_row == rows) break;
      for (std::size_t c = t; c < cols; ++c) m(t, c) = add(m(t, c), m(bad_row, c));
    }
    diagonal.push_back(static_cast<std::int64_t>(magnitude(m(t, t))));
  }
  return diagonal;
}

IntegerMatrix boundary_matrix(const SimplicialComplex& complex, int d) {
  const auto& masks = complex.masks_by_dim();
  const std::size_t col_count = (d >= 0 && d <= complex.dimension()) ? masks[d].size() : 0;
  const std::size_t row_count = (d >= 1 && d - 1 <= complex.dimension()) ? masks[d - 1].size() : 0;
  IntegerMatrix m(row_count, col_count);
  if (row_count == 0 || col_count == 0) return m;

  std::unordered_map<std::uint64_t, std::size_t> row_of;
  for (std::size_t r = 0; r < row_count; ++r) row_of.emplace(masks[d - 1][r], r);
  for (std::size_t c = 0; c < col_count; ++c) {
    const std::uint64_t simplex = masks[d][c];
    std::int64_t sign = 1;
    for (std::uint64_t rest = simplex; rest; rest &= rest - 1) {
      const std::uint64_t vertex = rest & (~rest + 1);
      m(row_of.at(simplex & ~vertex), c) = sign;
      sign = -sign;
    }
  }
  return m;
}

int connected_components(const SimplicialComplex& complex) {
  std::vector<int> parent(complex.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  int components = complex.vertex_count();
  for (const auto& edge : complex.simplices(1)) {
    const int a = find(edge[0]);
    const int b = find(edge[1]);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

bool HomologyProfile::has_torsion() const {
  for (const auto& t : torsion) {
    if (!t.empty()) return true;
  }
  return false;
}

HomologyProfile homology(const SimplicialComplex& complex) {
  const int dim = complex.dimension();
  const auto f = complex.f_vector();

  // factors[p] belongs to the boundary map out of dimension p; p = 0 and
  // p = dim + 1 are zero maps.
  std::vector<std::vector<std::int64_t>> factors(dim + 2);
  for (int p = 1; p <= dim; ++p) factors[p] = invariant_factors(boundary_matrix(complex, p));
  auto rank = [&](int p) { return static_cast<std::int64_t>(factors[p].size()); };

  HomologyProfile out;
  std::int64_t f_sum = 0;
  std::int64_t b_sum = 0;
  for (int p = 0; p <= dim; ++p) {
    const auto fp = static_cast<std::int64_t>(f[p]);
    const std::int64_t b = fp - rank(p) - rank(p + 1);
    out.betti.push_back(b);
    std::vector<std::int64_t> torsion;
    for (std::int64_t d : factors[p + 1]) {
      if (d > 1) torsion.push_back(d);
    }
    out.torsion.push_back(std::move(torsion));
    f_sum += (p % 2 == 0) ? fp : -fp;
    b_sum += (p % 2 == 0) ? b : -b;
  }
  out.euler_characteristic = f_sum;

  if (f_sum != b_sum) {
    throw std::logic_error("Euler characteristic mismatch between f-vector and Betti numbers");
  }
  if (out.betti.at(0) != connected_components(complex)) {
    throw std::logic_error("b_0 disagrees with the union-find component count");
  }
  return out;
}

}  // namespace orbitcover
