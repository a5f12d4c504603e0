#include "stickel/character_table.hpp"

#include <algorithm>

#include "stickel/linalg.hpp"

namespace stickel {

CharacterTable::CharacterTable(GroupPtr group, std::vector<std::vector<Cyclotomic>> rows)
    : group_(std::move(group)), rows_(std::move(rows)) {
  const int64_t e = group_->exponent();
  for (auto& row : rows_) {
    for (auto& x : row) {
      if (x.level() != e && e % x.level() == 0) x = raise(x, e);
    }
  }
}

int CharacterTable::degree(int irr) const {
  auto d = rows_[irr][0].rational();
  if (!d || !is_integral(*d) || *d <= 0) throw DomainError("character degree is not a positive integer");
  return static_cast<int>(d->get_num().get_si());
}

std::vector<std::vector<std::vector<int64_t>>> class_structure_constants(const FiniteGroup& g) {
  const int r = g.num_classes();
  std::vector<std::vector<std::vector<int64_t>>> c(r, std::vector<std::vector<int64_t>>(r, std::vector<int64_t>(r, 0)));
  for (int l = 0; l < r; ++l) {
    const int target = g.classes()[l].representative;
    for (int j = 0; j < r; ++j) {
      for (int x : g.classes()[j].elements) ++c[j][g.class_of(g.mul(g.inv(x), target))][l];
    }
  }
  return c;
}

void sort_character_rows(std::vector<std::vector<Cyclotomic>>& rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    const auto da = a[0].rational(), db = b[0].rational();
    if (da && db && *da != *db) return *da < *db;
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
      auto c = compare(a[i], b[i]);
      if (c != 0) return c > 0;
    }
    return false;
  });
}

CharacterTable dixon_character_table(const GroupPtr& gp, int max_order) {
  const FiniteGroup& g = *gp;
  if (g.order() > max_order) {
    throw SizeCapError("group order " + std::to_string(g.order()) + " exceeds the table bound " +
                       std::to_string(max_order));
  }
  const int64_t n = g.order();
  const int r = g.num_classes();
  const int64_t e = g.exponent();

  // p = 1 (mod e) and p > 2|G|: degrees satisfy d^2 <= |G| < p and eigenvalue
  // multiplicities are at most d, so both lift uniquely from F_p.
  int64_t p = e + 1;
  while (p <= 2 * n || !is_prime(p)) p += e;
  const PrimeField f{p};

  const auto c = class_structure_constants(g);
  std::vector<FieldMatrix<PrimeField>> matrices;
  for (int j = 1; j < r; ++j) {
    FieldMatrix<PrimeField> m(r, std::vector<int64_t>(r));
    for (int k = 0; k < r; ++k) {
      for (int l = 0; l < r; ++l) m[k][l] = f.from_int(c[j][k][l]);
    }
    matrices.push_back(std::move(m));
  }
  auto roots = [&](size_t, const std::vector<int64_t>& poly) {
    std::vector<int64_t> out;
    for (int64_t lambda = 0; lambda < p; ++lambda) {
      if (evaluate_polynomial(f, poly, lambda) == 0) out.push_back(lambda);
    }
    return out;
  };
  FieldMatrix<PrimeField> vectors = common_eigenvectors<PrimeField>(f, matrices, static_cast<size_t>(r), roots);

  // primitive e-th root of unity mod p
  int64_t z = 1;
  for (int64_t cand = 2; cand < p; ++cand) {
    int64_t w = pow_mod(cand, (p - 1) / e, p);
    if (multiplicative_order(w, p) == e) {
      z = w;
      break;
    }
  }
  if (e == 1) z = 1;
  std::vector<int64_t> z_powers(static_cast<size_t>(e));
  for (int64_t k = 0; k < e; ++k) z_powers[static_cast<size_t>(k)] = pow_mod(z, k, p);

  std::vector<int> inverse_class(r);
  for (int l = 0; l < r; ++l) inverse_class[l] = g.class_of(g.inv(g.classes()[l].representative));

  std::vector<std::vector<Cyclotomic>> rows;
  for (auto& v : vectors) {
    const int64_t scale = f.inv(v[0]);
    for (auto& x : v) x = f.mul(x, scale);
    int64_t s = 0;
    for (int l = 0; l < r; ++l) {
      s = f.add(s, f.mul(f.mul(v[l], v[inverse_class[l]]), f.inv(f.from_int(g.classes()[l].size()))));
    }
    const int64_t d2 = f.mul(f.from_int(n), f.inv(s));
    int64_t degree = 0;
    for (int64_t d = 1; d * d <= n; ++d) {
      if (d * d % p == d2) degree = d;
    }
    if (degree == 0) throw std::runtime_error("dixon: no character degree matches " + std::to_string(d2) + " mod p");
    std::vector<int64_t> theta(r);
    for (int l = 0; l < r; ++l) {
      theta[l] = f.mul(f.mul(v[l], degree), f.inv(f.from_int(g.classes()[l].size())));
    }
    const int64_t e_inv = f.inv(f.from_int(e));
    std::vector<Cyclotomic> row;
    for (int l = 0; l < r; ++l) {
      std::vector<Rational> weights(static_cast<size_t>(e));
      for (int64_t k = 0; k < e; ++k) {
        int64_t acc = 0;
        for (int64_t i = 0; i < e; ++i) {
          acc = f.add(acc, f.mul(theta[g.power_class(l, i)], z_powers[static_cast<size_t>(mod(-i * k, e))]));
        }
        const int64_t multiplicity = f.mul(acc, e_inv);
        if (multiplicity > degree) throw std::runtime_error("dixon: eigenvalue multiplicity does not lift");
        weights[static_cast<size_t>(k)] = multiplicity;
      }
      row.push_back(Cyclotomic::from_root_weights(e, weights));
    }
    rows.push_back(std::move(row));
  }
  sort_character_rows(rows);
  return CharacterTable(gp, std::move(rows));
}

CharacterTable character_table(const GroupPtr& g, TableMethod method, int max_order) {
  return method == TableMethod::dixon ? dixon_character_table(g, max_order)
                                      : burnside_character_table(g, std::min(max_order, 24));
}

std::vector<TableDefect> validate_table(const CharacterTable& t) {
  std::vector<TableDefect> defects;
  const FiniteGroup& g = *t.group();
  const int r = g.num_classes();
  const int64_t n = g.order();
  const int64_t e = g.exponent();
  if (t.size() != r) {
    defects.push_back({"row_count", std::to_string(t.size()) + " rows for " + std::to_string(r) + " classes"});
    return defects;
  }
  for (int i = 0; i < t.size(); ++i) {
    if (static_cast<int>(t.row(i).size()) != r) {
      defects.push_back({"row_count", "row " + std::to_string(i) + " has " + std::to_string(t.row(i).size()) +
                                          " values for " + std::to_string(r) + " classes"});
      return defects;
    }
  }
  for (int i = 0; i < t.size(); ++i) {
    for (int c = 0; c < r; ++c) {
      const Cyclotomic& x = t.value(i, c);
      if (!lower(raise(x, lcm(x.level(), e)), e)) {
        defects.push_back({"field", "value of row " + std::to_string(i) + " at class " + std::to_string(c) +
                                        " is not in Q(zeta_" + std::to_string(e) + ")"});
      }
    }
    auto d = t.value(i, 0).rational();
    if (!d || !is_integral(*d) || *d <= 0) {
      defects.push_back({"degree", "row " + std::to_string(i) + " has degree " + t.value(i, 0).to_string()});
    }
  }
  for (int i = 0; i < r; ++i) {
    for (int j = i; j < r; ++j) {
      Cyclotomic acc;
      for (int c = 0; c < r; ++c) acc += t.value(i, c) * t.value(j, c).conj() * Cyclotomic(static_cast<long>(g.classes()[c].size()));
      acc = acc * Cyclotomic(Rational(1, n));
      const Cyclotomic expected(i == j ? 1L : 0L);
      if (!(acc == expected)) {
        defects.push_back({"row_orthogonality", "rows " + std::to_string(i) + "," + std::to_string(j) +
                                                    ": inner product " + lower_to_minimal_level(acc).to_string() +
                                                    ", expected " + expected.to_string()});
      }
    }
  }
  for (int a = 0; a < r; ++a) {
    for (int b = a; b < r; ++b) {
      Cyclotomic acc;
      for (int i = 0; i < r; ++i) acc += t.value(i, a) * t.value(i, b).conj();
      const Cyclotomic expected(a == b ? static_cast<long>(n / g.classes()[a].size()) : 0L);
      if (!(acc == expected)) {
        defects.push_back({"column_orthogonality", "classes " + std::to_string(a) + "," + std::to_string(b) +
                                                       ": sum " + lower_to_minimal_level(acc).to_string() +
                                                       ", expected " + expected.to_string()});
      }
    }
  }
  Cyclotomic sum;
  for (int i = 0; i < r; ++i) sum += t.value(i, 0) * t.value(i, 0);
  if (!(sum == Cyclotomic(static_cast<long>(n)))) {
    defects.push_back({"degree_sum", "sum of squared degrees is " + sum.to_string() + ", expected " + std::to_string(n)});
  }
  return defects;
}

}  // namespace stickel
