#include "stickel/integer_matrix.hpp"

#include <algorithm>

namespace stickel {
namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void add_row_multiple(IntMatrix& m, size_t target, size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (size_t k = 0; k < m[target].size(); ++k) m[target][k] += factor * m[source][k];
}

void add_column_multiple(IntMatrix& m, size_t target, size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (auto& row : m) row[target] += factor * row[source];
}

void swap_columns(IntMatrix& m, size_t a, size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace

IntMatrix identity_matrix(size_t n) {
  IntMatrix m(n, IntVector(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

SmithForm smith_normal_form(const IntMatrix& a, size_t columns) {
  const size_t rows = a.size();
  SmithForm out{a, identity_matrix(rows), identity_matrix(columns), {}};
  IntMatrix& d = out.diagonal;
  const size_t steps = std::min(rows, columns);
  for (size_t t = 0; t < steps; ++t) {
    while (true) {
      // smallest nonzero entry of the trailing block becomes the pivot
      size_t pr = rows, pc = columns;
      for (size_t i = t; i < rows; ++i) {
        for (size_t j = t; j < columns; ++j) {
          if (d[i][j] != 0 && (pr == rows || abs(d[i][j]) < abs(d[pr][pc]))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == rows) break;
      std::swap(d[t], d[pr]);
      std::swap(out.left[t], out.left[pr]);
      swap_columns(d, t, pc);
      swap_columns(out.right, t, pc);

      bool clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        Integer q = floor_div(d[i][t], d[t][t]);
        add_row_multiple(d, i, t, -q);
        add_row_multiple(out.left, i, t, -q);
        if (d[i][t] != 0) clean = false;
      }
      for (size_t j = t + 1; j < columns; ++j) {
        Integer q = floor_div(d[t][j], d[t][t]);
        add_column_multiple(d, j, t, -q);
        add_column_multiple(out.right, j, t, -q);
        if (d[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (size_t i = t + 1; i < rows && divides; ++i) {
        for (size_t j = t + 1; j < columns; ++j) {
          if (d[i][j] % d[t][t] != 0) {
            add_row_multiple(d, t, i, 1);
            add_row_multiple(out.left, t, i, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (d[t][t] < 0) {
      for (auto& x : d[t]) x = -x;
      for (auto& x : out.left[t]) x = -x;
    }
  }
  for (size_t t = 0; t < steps; ++t) out.invariants.push_back(d[t][t]);
  return out;
}

IntMatrix hermite_normal_form(IntMatrix m) {
  if (m.empty()) return m;
  const size_t columns = m[0].size();
  size_t row = 0;
  for (size_t c = 0; c < columns && row < m.size(); ++c) {
    while (true) {
      size_t best = m.size();
      for (size_t i = row; i < m.size(); ++i) {
        if (m[i][c] != 0 && (best == m.size() || abs(m[i][c]) < abs(m[best][c]))) best = i;
      }
      if (best == m.size()) break;
      std::swap(m[row], m[best]);
      bool done = true;
      for (size_t i = row + 1; i < m.size(); ++i) {
        add_row_multiple(m, i, row, -floor_div(m[i][c], m[row][c]));
        if (m[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (m[row][c] == 0) continue;
    if (m[row][c] < 0) {
      for (auto& x : m[row]) x = -x;
    }
    for (size_t i = 0; i < row; ++i) add_row_multiple(m, i, row, -floor_div(m[i][c], m[row][c]));
    ++row;
  }
  m.resize(row);
  return m;
}

std::optional<IntVector> lattice_coordinates(const IntMatrix& basis, const IntVector& x) {
  IntVector rest = x;
  IntVector coords(basis.size(), 0);
  for (size_t i = 0; i < basis.size(); ++i) {
    size_t pivot = 0;
    while (pivot < basis[i].size() && basis[i][pivot] == 0) ++pivot;
    if (pivot == basis[i].size()) continue;
    for (size_t k = 0; k < pivot; ++k) {
      if (rest[k] != 0) return std::nullopt;
    }
    if (rest[pivot] % basis[i][pivot] != 0) return std::nullopt;
    coords[i] = rest[pivot] / basis[i][pivot];
    for (size_t k = 0; k < rest.size(); ++k) rest[k] -= coords[i] * basis[i][k];
  }
  for (const auto& v : rest) {
    if (v != 0) return std::nullopt;
  }
  return coords;
}

IntMatrix kernel_modulo(const IntMatrix& d, size_t columns, const Integer& modulus) {
  SmithForm snf = smith_normal_form(d, columns);
  IntMatrix generators;
  for (size_t i = 0; i < columns; ++i) {
    Integer factor = 1;
    if (i < snf.invariants.size()) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), snf.invariants[i].get_mpz_t(), modulus.get_mpz_t());
      factor = modulus / g;
    }
    IntVector v(columns);
    for (size_t k = 0; k < columns; ++k) v[k] = factor * snf.right[k][i];
    generators.push_back(std::move(v));
  }
  return hermite_normal_form(std::move(generators));
}

Integer absolute_determinant(IntMatrix a) {
  const size_t n = a.size();
  if (n == 0) return 1;
  Integer previous = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) std::swap(a[p], a[k]);
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous;  // Bareiss
      }
    }
    previous = a[k][k];
  }
  return abs(a[n - 1][n - 1]);
}

}  // namespace stickel
