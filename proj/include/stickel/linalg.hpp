#ifndef STICKEL_LINALG_HPP
#define STICKEL_LINALG_HPP

// Dense linear algebra over an exact field. A Field supplies
//   using Elem; Elem zero() const; Elem one() const;
//   Elem add/sub/mul(const Elem&, const Elem&) const; Elem inv(const Elem&) const;
//   bool is_zero(const Elem&) const; bool equal(const Elem&, const Elem&) const;

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "stickel/arith.hpp"
#include "stickel/cyclotomic.hpp"

namespace stickel {

template <class Field>
using FieldMatrix = std::vector<std::vector<typename Field::Elem>>;

struct PrimeField {
  using Elem = int64_t;
  int64_t p;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(int64_t x) const { return mod(x, p); }
  Elem add(Elem a, Elem b) const { return (a + b) % p; }
  Elem sub(Elem a, Elem b) const { return (a - b + p) % p; }
  Elem mul(Elem a, Elem b) const { return static_cast<Elem>(static_cast<__int128>(a) * b % p); }
  Elem inv(Elem a) const { return inverse_mod(a, p); }
  bool is_zero(Elem a) const { return a == 0; }
  bool equal(Elem a, Elem b) const { return a == b; }
};

struct CyclotomicField {
  using Elem = Cyclotomic;
  Elem zero() const { return Cyclotomic(); }
  Elem one() const { return Cyclotomic(1L); }
  Elem from_int(int64_t x) const { return Cyclotomic(static_cast<long>(x)); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const { return a.inverse(); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
};

/// Reduced row echelon form in place; returns the pivot columns.
template <class Field>
std::vector<size_t> row_reduce(const Field& f, FieldMatrix<Field>& m) {
  std::vector<size_t> pivots;
  if (m.empty()) return pivots;
  const size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && f.is_zero(m[p][c])) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const auto inv = f.inv(m[r][c]);
    for (size_t k = c; k < cols; ++k) m[r][k] = f.mul(m[r][k], inv);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || f.is_zero(m[i][c])) continue;
      const auto factor = m[i][c];
      for (size_t k = c; k < cols; ++k) m[i][k] = f.sub(m[i][k], f.mul(factor, m[r][k]));
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

/// Basis (as rows) of { y : m y = 0 } for a matrix with `cols` columns.
template <class Field>
FieldMatrix<Field> kernel(const Field& f, FieldMatrix<Field> m, size_t cols) {
  std::vector<size_t> pivots = row_reduce(f, m);
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  FieldMatrix<Field> out;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename Field::Elem> v(cols, f.zero());
    v[free] = f.one();
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.sub(f.zero(), m[i][free]);
    out.push_back(std::move(v));
  }
  return out;
}

/// Characteristic polynomial det(x I - m), constant term first, via reduction
/// to upper Hessenberg form.
template <class Field>
std::vector<typename Field::Elem> characteristic_polynomial(const Field& f, FieldMatrix<Field> h) {
  using Elem = typename Field::Elem;
  const size_t n = h.size();
  for (size_t j = 0; j + 2 < n; ++j) {
    size_t p = j + 1;
    while (p < n && f.is_zero(h[p][j])) ++p;
    if (p == n) continue;
    if (p != j + 1) {
      std::swap(h[p], h[j + 1]);
      for (auto& row : h) std::swap(row[p], row[j + 1]);
    }
    const Elem inv = f.inv(h[j + 1][j]);
    for (size_t i = j + 2; i < n; ++i) {
      if (f.is_zero(h[i][j])) continue;
      const Elem factor = f.mul(h[i][j], inv);
      for (size_t k = 0; k < n; ++k) h[i][k] = f.sub(h[i][k], f.mul(factor, h[j + 1][k]));
      for (size_t k = 0; k < n; ++k) h[k][j + 1] = f.add(h[k][j + 1], f.mul(factor, h[k][i]));
    }
  }
  std::vector<std::vector<Elem>> polys(n + 1);
  polys[0] = {f.one()};
  for (size_t k = 1; k <= n; ++k) {
    // (x - h[k-1][k-1]) * p_{k-1}
    const auto& prev = polys[k - 1];
    std::vector<Elem> next(prev.size() + 1, f.zero());
    for (size_t i = 0; i < prev.size(); ++i) {
      next[i + 1] = f.add(next[i + 1], prev[i]);
      next[i] = f.sub(next[i], f.mul(h[k - 1][k - 1], prev[i]));
    }
    Elem t = f.one();
    for (size_t i = 1; i < k; ++i) {
      t = f.mul(t, h[k - i][k - i - 1]);
      if (f.is_zero(t)) break;
      const Elem c = f.mul(t, h[k - i - 1][k - 1]);
      const auto& lower = polys[k - i - 1];
      for (size_t m = 0; m < lower.size(); ++m) next[m] = f.sub(next[m], f.mul(c, lower[m]));
    }
    polys[k] = std::move(next);
  }
  return polys[n];
}

template <class Field>
typename Field::Elem evaluate_polynomial(const Field& f, const std::vector<typename Field::Elem>& poly,
                                         const typename Field::Elem& x) {
  typename Field::Elem acc = f.zero();
  for (size_t i = poly.size(); i-- > 0;) acc = f.add(f.mul(acc, x), poly[i]);
  return acc;
}

/// Splits F^dim into the common eigenspaces of pairwise commuting matrices
/// acting on column vectors. `roots` returns the distinct roots of a
/// characteristic polynomial. Returns one spanning vector per eigenspace;
/// throws std::runtime_error when some common eigenspace has dimension > 1.
template <class Field>
FieldMatrix<Field> common_eigenvectors(
    const Field& f, const std::vector<FieldMatrix<Field>>& matrices, size_t dim,
    const std::function<std::vector<typename Field::Elem>(size_t matrix_index,
                                                          const std::vector<typename Field::Elem>&)>& roots) {
  using Elem = typename Field::Elem;
  struct Subspace {
    FieldMatrix<Field> basis;  // rows, reduced echelon
    std::vector<size_t> pivots;
  };
  FieldMatrix<Field> full(dim, std::vector<Elem>(dim, f.zero()));
  for (size_t i = 0; i < dim; ++i) full[i][i] = f.one();
  std::vector<Subspace> spaces;
  {
    auto pivots = row_reduce(f, full);
    spaces.push_back({full, pivots});
  }
  for (size_t j = 0; j < matrices.size(); ++j) {
    bool all_lines = true;
    for (const auto& s : spaces) all_lines = all_lines && s.basis.size() == 1;
    if (all_lines) break;
    const auto& a = matrices[j];
    std::vector<Subspace> next;
    for (auto& space : spaces) {
      const size_t d = space.basis.size();
      if (d == 1) {
        next.push_back(std::move(space));
        continue;
      }
      // restricted[k][i] = coordinate k of A v_i in the echelon basis
      FieldMatrix<Field> restricted(d, std::vector<Elem>(d, f.zero()));
      for (size_t i = 0; i < d; ++i) {
        for (size_t k = 0; k < d; ++k) {
          const size_t row = space.pivots[k];
          Elem acc = f.zero();
          for (size_t c = 0; c < dim; ++c) {
            if (!f.is_zero(space.basis[i][c]) && !f.is_zero(a[row][c])) acc = f.add(acc, f.mul(a[row][c], space.basis[i][c]));
          }
          restricted[k][i] = acc;
        }
      }
      std::vector<Elem> eigenvalues = roots(j, characteristic_polynomial(f, restricted));
      size_t found = 0;
      std::vector<Subspace> pieces;
      for (const Elem& lambda : eigenvalues) {
        FieldMatrix<Field> shifted = restricted;
        for (size_t i = 0; i < d; ++i) shifted[i][i] = f.sub(shifted[i][i], lambda);
        FieldMatrix<Field> ker = kernel(f, shifted, d);
        if (ker.empty()) continue;
        FieldMatrix<Field> vectors;
        for (const auto& y : ker) {
          std::vector<Elem> v(dim, f.zero());
          for (size_t i = 0; i < d; ++i) {
            if (f.is_zero(y[i])) continue;
            for (size_t c = 0; c < dim; ++c) v[c] = f.add(v[c], f.mul(y[i], space.basis[i][c]));
          }
          vectors.push_back(std::move(v));
        }
        auto pivots = row_reduce(f, vectors);
        found += vectors.size();
        pieces.push_back({std::move(vectors), std::move(pivots)});
      }
      if (found != d) {
        throw std::runtime_error("common_eigenvectors: eigenspaces of dimension " + std::to_string(found) +
                                 " do not fill a subspace of dimension " + std::to_string(d));
      }
      for (auto& piece : pieces) next.push_back(std::move(piece));
    }
    spaces = std::move(next);
  }
  FieldMatrix<Field> out;
  for (auto& s : spaces) {
    if (s.basis.size() != 1) throw std::runtime_error("common_eigenvectors: class matrices do not separate characters");
    out.push_back(std::move(s.basis[0]));
  }
  return out;
}

}  // namespace stickel

#endif  // STICKEL_LINALG_HPP
