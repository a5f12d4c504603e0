#include "stickel/group.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace stickel {
namespace {

std::string cycle_label(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == static_cast<int>(start)) continue;
    out += "(";
    size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      out += (first ? "" : ",") + std::to_string(x + 1);
      first = false;
      x = static_cast<size_t>(p[x]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

}  // namespace

FiniteGroup FiniteGroup::from_cayley_table(std::vector<std::vector<int>> table, std::string name,
                                           std::vector<std::string> labels) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw GroupAxiomError("closure", "empty Cayley table");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n) {
      throw GroupAxiomError("closure", "row " + std::to_string(a) + " has " + std::to_string(table[a].size()) +
                                           " entries, expected " + std::to_string(n));
    }
    for (int b = 0; b < n; ++b) {
      if (table[a][b] < 0 || table[a][b] >= n) {
        throw GroupAxiomError("closure", "product " + std::to_string(a) + "*" + std::to_string(b) + " = " +
                                             std::to_string(table[a][b]) + " is not an element");
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    if (table[0][a] != a || table[a][0] != a) {
      throw GroupAxiomError("identity", "element 0 is not a two-sided identity at " + std::to_string(a));
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = table[a][b];
      for (int c = 0; c < n; ++c) {
        if (table[ab][c] != table[a][table[b][c]]) {
          throw GroupAxiomError("associativity", "(" + std::to_string(a) + "*" + std::to_string(b) + ")*" +
                                                     std::to_string(c) + " != " + std::to_string(a) + "*(" +
                                                     std::to_string(b) + "*" + std::to_string(c) + ")");
        }
      }
    }
  }
  FiniteGroup g;
  g.inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (table[a][b] == 0 && table[b][a] == 0) {
        g.inverse_[a] = b;
        break;
      }
    }
    if (g.inverse_[a] < 0) throw GroupAxiomError("inverse", "element " + std::to_string(a) + " has no inverse");
  }
  g.table_ = std::move(table);
  g.name_ = std::move(name);
  if (labels.empty()) {
    for (int a = 0; a < n; ++a) labels.push_back("g" + std::to_string(a));
  } else if (static_cast<int>(labels.size()) != n) {
    throw DomainError("label count does not match group order");
  }
  g.labels_ = std::move(labels);
  g.finish_construction();
  return g;
}

void FiniteGroup::finish_construction() {
  const int n = order();
  orders_.assign(n, 1);
  exponent_ = 1;
  for (int a = 0; a < n; ++a) {
    int x = a, k = 1;
    while (x != 0) {
      x = mul(x, a);
      ++k;
    }
    orders_[a] = k;
    exponent_ = static_cast<int>(lcm(exponent_, k));
  }
  classes_ = conjugacy_classes(*this);
  class_index_.assign(n, -1);
  for (int c = 0; c < num_classes(); ++c) {
    for (int g : classes_[c].elements) class_index_[g] = c;
  }
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<Permutation>& generators, std::string name,
                                           int max_order) {
  size_t degree = 0;
  for (const auto& p : generators) degree = std::max(degree, p.size());
  auto normalise = [degree](Permutation p) {
    for (size_t i = p.size(); i < degree; ++i) p.push_back(static_cast<int>(i));
    return p;
  };
  std::vector<Permutation> gens;
  for (const auto& p : generators) {
    Permutation q = normalise(p);
    std::vector<bool> hit(degree, false);
    for (int x : q) {
      if (x < 0 || static_cast<size_t>(x) >= degree || hit[x]) throw DomainError("generator is not a permutation");
      hit[x] = true;
    }
    gens.push_back(std::move(q));
  }
  auto compose = [degree](const Permutation& p, const Permutation& q) {
    Permutation r(degree);
    for (size_t x = 0; x < degree; ++x) r[x] = p[q[x]];
    return r;
  };
  Permutation id(degree);
  for (size_t x = 0; x < degree; ++x) id[x] = static_cast<int>(x);
  std::vector<Permutation> elements{id};
  std::map<Permutation, int> index{{id, 0}};
  for (size_t i = 0; i < elements.size(); ++i) {
    for (const auto& gen : gens) {
      Permutation next = compose(elements[i], gen);
      if (index.emplace(next, static_cast<int>(elements.size())).second) {
        elements.push_back(std::move(next));
        if (static_cast<int>(elements.size()) > max_order) {
          throw SizeCapError("generated group exceeds the order bound " + std::to_string(max_order));
        }
      }
    }
  }
  const int n = static_cast<int>(elements.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) table[a][b] = index.at(compose(elements[a], elements[b]));
  }
  std::vector<std::string> labels;
  for (const auto& p : elements) labels.push_back(cycle_label(p));
  return from_cayley_table(std::move(table), std::move(name), std::move(labels));
}

int FiniteGroup::pow(int a, int64_t k) const {
  const int64_t m = orders_[a];
  int64_t e = mod(k, m);
  int x = 0;
  for (int64_t i = 0; i < e; ++i) x = mul(x, a);
  return x;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a) {
    for (int b = a + 1; b < order(); ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

std::vector<int> FiniteGroup::cyclic_subgroup(int s) const {
  std::vector<int> out{0};
  for (int x = s; x != 0; x = mul(x, s)) out.push_back(x);
  return out;
}

std::vector<int> FiniteGroup::generated_subgroup(const std::vector<int>& generators) const {
  std::vector<bool> in(order(), false);
  std::vector<int> elements{0};
  in[0] = true;
  for (size_t i = 0; i < elements.size(); ++i) {
    for (int gen : generators) {
      int next = mul(elements[i], gen);
      if (!in[next]) {
        in[next] = true;
        elements.push_back(next);
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<ConjugacyClass> out;
  for (int a = 0; a < n; ++a) {
    if (seen[a]) continue;
    std::set<int> orbit;
    for (int x = 0; x < n; ++x) orbit.insert(g.conjugate(a, x));
    ConjugacyClass c;
    c.elements.assign(orbit.begin(), orbit.end());
    c.representative = c.elements.front();
    for (int y : c.elements) seen[y] = true;
    out.push_back(std::move(c));
  }
  return out;
}

GroupHom::GroupHom(GroupPtr source, GroupPtr target, std::vector<int> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != source_->order()) throw DomainError("GroupHom: image table size mismatch");
  for (int x : images_) {
    if (x < 0 || x >= target_->order()) throw DomainError("GroupHom: image out of range");
  }
  if (images_[0] != 0) throw DomainError("GroupHom: identity does not map to identity");
  for (int a = 0; a < source_->order(); ++a) {
    for (int b = 0; b < source_->order(); ++b) {
      if (images_[source_->mul(a, b)] != target_->mul(images_[a], images_[b])) {
        throw DomainError("GroupHom: not multiplicative at (" + std::to_string(a) + ", " + std::to_string(b) + ")");
      }
    }
  }
}

std::vector<int> GroupHom::kernel() const {
  std::vector<int> out;
  for (int a = 0; a < source_->order(); ++a) {
    if (images_[a] == 0) out.push_back(a);
  }
  return out;
}

Abelianization derived_and_abelianization(const GroupPtr& g) {
  std::vector<int> commutators;
  for (int a = 0; a < g->order(); ++a) {
    for (int b = 0; b < g->order(); ++b) commutators.push_back(g->commutator(a, b));
  }
  std::sort(commutators.begin(), commutators.end());
  commutators.erase(std::unique(commutators.begin(), commutators.end()), commutators.end());
  std::vector<int> derived = g->generated_subgroup(commutators);

  // cosets gG', numbered by their least element
  std::vector<int> coset_of(g->order(), -1);
  std::vector<int> reps;
  for (int a = 0; a < g->order(); ++a) {
    if (coset_of[a] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(a);
    for (int d : derived) coset_of[g->mul(a, d)] = id;
  }
  const int m = static_cast<int>(reps.size());
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i) {
    labels.push_back(g->label(reps[i]) + "G'");
    for (int j = 0; j < m; ++j) table[i][j] = coset_of[g->mul(reps[i], reps[j])];
  }
  auto quotient = std::make_shared<const FiniteGroup>(
      FiniteGroup::from_cayley_table(std::move(table), g->name() + "^ab", std::move(labels)));
  GroupHom projection(g, quotient, coset_of);
  return Abelianization{std::move(derived), quotient, std::move(projection)};
}

std::vector<int> sigma_set(const FiniteGroup& g, int64_t q, Strictness strictness) {
  if (q < 2) throw DomainError("sigma_set: q must be at least 2, got " + std::to_string(q));
  if (strictness == Strictness::strict && !is_prime_power(q)) {
    throw DomainError("sigma_set: q=" + std::to_string(q) + " is not a prime power (strict mode)");
  }
  std::vector<int> out;
  for (int s = 0; s < g.order(); ++s) {
    if (g.class_of(g.pow(s, q)) == g.class_of(s)) out.push_back(s);
  }
  return out;
}

bool are_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return false;
  std::multiset<int> oa, ob;
  for (int x = 0; x < a.order(); ++x) {
    oa.insert(a.element_order(x));
    ob.insert(b.element_order(x));
  }
  if (oa != ob) return false;

  std::vector<int> gens;
  std::vector<int> span{0};
  while (static_cast<int>(span.size()) < a.order()) {
    int best = -1;
    for (int x = 0; x < a.order(); ++x) {
      if (std::binary_search(span.begin(), span.end(), x)) continue;
      if (best < 0 || a.element_order(x) > a.element_order(best)) best = x;
    }
    gens.push_back(best);
    span = a.generated_subgroup(gens);
  }

  std::vector<int> images(gens.size());
  auto try_extend = [&]() {
    std::vector<int> map(a.order(), -1);
    map[0] = 0;
    std::deque<int> queue{0};
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (size_t i = 0; i < gens.size(); ++i) {
        int y = a.mul(x, gens[i]);
        int fy = b.mul(map[x], images[i]);
        if (map[y] < 0) {
          map[y] = fy;
          queue.push_back(y);
        } else if (map[y] != fy) {
          return false;
        }
      }
    }
    std::vector<int> sorted = map;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < b.order(); ++i) {
      if (sorted[i] != i) return false;
    }
    return true;
  };
  std::function<bool(size_t)> search = [&](size_t depth) {
    if (depth == gens.size()) return try_extend();
    for (int y = 0; y < b.order(); ++y) {
      if (b.element_order(y) != a.element_order(gens[depth])) continue;
      images[depth] = y;
      if (search(depth + 1)) return true;
    }
    return false;
  };
  return search(0);
}

FiniteGroup cyclic_group(int n) {
  if (n < 1 || n > kMaxGroupOrder) throw SizeCapError("cyclic group order out of range: " + std::to_string(n));
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    labels.push_back(a == 0 ? "1" : (a == 1 ? "a" : "a^" + std::to_string(a)));
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return FiniteGroup::from_cayley_table(std::move(table), "C" + std::to_string(n), std::move(labels));
}

FiniteGroup dihedral_group(int n) {
  if (n < 1 || 2 * n > kMaxGroupOrder) throw SizeCapError("dihedral group order out of range: " + std::to_string(2 * n));
  const int size = 2 * n;
  std::vector<std::vector<int>> table(size, std::vector<int>(size));
  std::vector<std::string> labels;
  for (int x = 0; x < size; ++x) {
    const int a = x % n, b = x / n;
    std::string r = a == 0 ? "" : (a == 1 ? "r" : "r^" + std::to_string(a));
    labels.push_back(b == 0 ? (r.empty() ? "1" : r) : r + "s");
    for (int y = 0; y < size; ++y) {
      const int c = y % n, d = y / n;
      const int na = static_cast<int>(mod(a + (b == 0 ? c : -c), n));
      table[x][y] = na + n * ((b + d) % 2);
    }
  }
  return FiniteGroup::from_cayley_table(std::move(table), "D" + std::to_string(n), std::move(labels));
}

FiniteGroup symmetric_group(int n, int max_order) {
  if (n < 1 || n > 6) throw DomainError("symmetric groups are available for n <= 6");
  std::vector<Permutation> gens;
  if (n >= 2) {
    Permutation transposition(n), cycle(n);
    for (int i = 0; i < n; ++i) {
      transposition[i] = i;
      cycle[i] = (i + 1) % n;
    }
    std::swap(transposition[0], transposition[1]);
    gens = {transposition, cycle};
  }
  return FiniteGroup::from_permutations(gens, "S" + std::to_string(n), max_order);
}

FiniteGroup alternating_group(int n, int max_order) {
  if (n < 1 || n > 6) throw DomainError("alternating groups are available for n <= 6");
  std::vector<Permutation> gens;
  for (int i = 2; i < n; ++i) {
    Permutation p(n);
    for (int x = 0; x < n; ++x) p[x] = x;
    p[0] = 1;
    p[1] = i;
    p[i] = 0;
    gens.push_back(p);
  }
  return FiniteGroup::from_permutations(gens, "A" + std::to_string(n), max_order);
}

FiniteGroup quaternion_group() {
  // index = 2*unit + sign, units 1,i,j,k; sign bit 1 means negated
  static const int unit_product[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int unit_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static const char* names[4] = {"1", "i", "j", "k"};
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  std::vector<std::string> labels;
  for (int x = 0; x < 8; ++x) {
    labels.push_back(std::string(x % 2 ? "-" : "") + names[x / 2]);
    for (int y = 0; y < 8; ++y) {
      const int u = x / 2, v = y / 2;
      const int sign = (x % 2) ^ (y % 2) ^ unit_sign[u][v];
      table[x][y] = 2 * unit_product[u][v] + sign;
    }
  }
  return FiniteGroup::from_cayley_table(std::move(table), "Q8", std::move(labels));
}

FiniteGroup builtin_group(std::string_view name, int max_order) {
  auto bad = [&]() { return DomainError("unknown builtin group '" + std::string(name) + "'"); };
  if (name == "Q8") return quaternion_group();
  if (name.size() < 2) throw bad();
  const char kind = name[0];
  int n = 0;
  for (char ch : name.substr(1)) {
    if (ch < '0' || ch > '9' || n > 10000) throw bad();
    n = n * 10 + (ch - '0');
  }
  FiniteGroup out = [&]() {
    switch (kind) {
      case 'C':
        if (n > max_order) throw SizeCapError("C" + std::to_string(n) + " exceeds the order bound");
        return cyclic_group(n);
      case 'D':
        if (2 * n > max_order) throw SizeCapError("D" + std::to_string(n) + " exceeds the order bound");
        return dihedral_group(n);
      case 'S':
        return symmetric_group(n, max_order);
      case 'A':
        return alternating_group(n, max_order);
      default:
        throw bad();
    }
  }();
  return out;
}

const std::vector<std::string>& verification_catalog() {
  static const std::vector<std::string> catalog = {"C2", "C3", "C4", "C5",  "C6", "C7", "C8", "C9", "C10",
                                                   "C11", "C12", "S3", "D4", "D5", "D6", "Q8", "A4", "S4",
                                                   "A5"};
  return catalog;
}

}  // namespace stickel
