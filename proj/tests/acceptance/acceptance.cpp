// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "stickel/local_field.hpp"
#include "stickel/random.hpp"
#include "stickel/stickelberger.hpp"
#include "stickel/tame.hpp"

using namespace stickel;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  long cases = 0;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
  void expect(bool ok, const std::function<std::string()>& why) {
    ++cases;
    if (!ok) fail(why());
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

const std::vector<std::string> kSmallCatalog = {"C2",  "C3",  "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11",
                                                "C12", "S3",  "S4", "D4", "D5", "D6", "Q8", "A4"};

struct Entry {
  GroupPtr group;
  TablePtr table;
};

const std::vector<Entry>& catalog() {
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> out;
    for (const auto& name : verification_catalog()) {
      auto g = std::make_shared<const FiniteGroup>(builtin_group(name));
      out.push_back({g, std::make_shared<const CharacterTable>(character_table(g))});
    }
    return out;
  }();
  return entries;
}

VirtualCharacter irr(const TablePtr& t, int i) { return VirtualCharacter::irreducible(t, i); }

bool conjugate(const FiniteGroup& g, int a, int b) {
  for (int x = 0; x < g.order(); ++x) {
    if (g.mul(g.mul(g.inv(x), a), x) == b) return true;
  }
  return false;
}

std::string str(const std::vector<Rational>& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
  return out + ")";
}

Outcome ac1() {
  Outcome o;
  const auto t0 = Clock::now();
  for (const auto& name : kSmallCatalog) {
    const auto g = std::make_shared<const FiniteGroup>(builtin_group(name));
    const CharacterTable dixon = dixon_character_table(g);
    const auto defects = validate_table(dixon);
    o.expect(defects.empty(), [&] { return name + ": " + defects.front().check + " " + defects.front().detail; });
    long sum = 0;
    for (int i = 0; i < dixon.size(); ++i) sum += static_cast<long>(dixon.degree(i)) * dixon.degree(i);
    o.expect(sum == g->order(), [&] { return name + ": sum of squared degrees " + std::to_string(sum); });
    o.expect(dixon == burnside_character_table(g), [&] { return name + ": Dixon and exact routes differ"; });
  }
  const double secs = seconds_since(t0);
  o.expect(secs < 60, [&] { return "runtime " + std::to_string(secs) + " s"; });
  std::ostringstream os;
  os << kSmallCatalog.size() << " groups in " << secs << " s";
  if (o.pass) o.detail = os.str();
  return o;
}

Outcome ac2() {
  Outcome o;
  for (const auto& [g, t] : catalog()) {
    for (int i = 0; i < t->size(); ++i) {
      for (int s = 0; s < g->order(); ++s) {
        const Rational a = stick_pair(irr(t, i), s), b = stick_pair_via_induction(irr(t, i), s);
        o.expect(a == b, [&] { return g->name() + " chi" + std::to_string(i) + " at " + g->label(s) + ": " + to_string(a) + " vs " + to_string(b); });
      }
    }
  }
  return o;
}

Outcome ac3() {
  Outcome o;
  std::vector<std::string> collisions;
  for (const auto& [g, t] : catalog()) {
    std::vector<std::vector<Rational>> prints;
    for (const auto& cls : g->classes()) prints.push_back(class_fingerprint(t, cls.representative));
    for (int a = 0; a < g->num_classes(); ++a) {
      for (int b = a + 1; b < g->num_classes(); ++b) {
        ++o.cases;
        if (prints[a] == prints[b]) {
          collisions.push_back(g->name() + " " + g->label(g->classes()[a].representative) + " ~ " +
                               g->label(g->classes()[b].representative) + " " + str(prints[a]));
        }
      }
    }
  }
  if (!collisions.empty()) {
    std::string msg = "equal fingerprints on distinct classes:";
    for (const auto& c : collisions) msg += " [" + c + "]";
    o.fail(msg);
  }
  return o;
}

Outcome ac4() {
  Outcome o;
  for (const auto& [g, t] : catalog()) {
    const AGLattice lattice(t);
    SeededRng rng(0, "acceptance-theta-" + g->name());
    for (int i = 0; i < t->size(); ++i) {
      const GroupRingQ th = theta_map(irr(t, i));
      o.expect(th.is_central(), [&] { return g->name() + ": Theta(chi" + std::to_string(i) + ") not class-constant"; });
    }
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<long> c;
      for (int i = 0; i < t->size(); ++i) c.push_back(rng.uniform(-5, 5));
      const auto chi = VirtualCharacter::from_integers(t, c);
      const GroupRingQ th = theta_map(chi);
      o.expect(th.is_central(), [&] { return g->name() + ": Theta not class-constant"; });
      o.expect(th.is_integral() == lattice.contains(chi), [&] { return g->name() + ": integrality differs from A_G membership"; });
    }
    const int e = g->exponent();
    for (int64_t k = 1; k < e; ++k) {
      if (gcd(k, e) != 1) continue;
      for (int i = 0; i < t->size(); ++i) {
        for (int x = 0; x < g->order(); ++x) {
          const auto [l, r] = galois_twist_pair_check(irr(t, i), x, k);
          o.expect(l == r, [&] { return g->name() + ": equivariance fails at k=" + std::to_string(k); });
        }
      }
    }
  }
  return o;
}

Outcome ac5() {
  Outcome o;
  for (const auto& [g, t] : catalog()) {
    std::set<int> derived{0};
    std::set<int> gens;
    for (int a = 0; a < g->order(); ++a)
      for (int b = 0; b < g->order(); ++b) gens.insert(g->commutator(a, b));
    for (bool grew = true; grew;) {
      grew = false;
      for (int x : std::set<int>(derived))
        for (int y : gens) grew |= derived.insert(g->mul(x, y)).second;
    }
    const Integer expected = g->order() / static_cast<long>(derived.size());
    const Integer index = AGLattice(t).index();
    o.expect(index == expected, [&] { return g->name() + ": index " + index.get_str() + ", |G^ab| " + expected.get_str(); });
  }
  return o;
}

Outcome ac6() {
  Outcome o;
  for (const auto& [g, t] : catalog()) {
    const AGLattice lattice(t);
    for (int64_t q : {2, 3, 5, 7}) {
      for (int s : sigma_set(*g, q)) {
        if (gcd(g->element_order(s), q) != 1) continue;
        const Resolvend r = phi_map(g, q, s).resolvend;
        for (int i = 0; i < t->size(); ++i) {
          const LocalElement d = det_resolvend_cyclic(r, irr(t, i));
          const LocalElement expected = LocalElement::monomial(q, stick_pair(irr(t, i), s));
          o.expect(d == expected, [&] { return g->name() + " q=" + std::to_string(q) + " s=" + g->label(s) + ": " + d.to_string(); });
        }
        if (g->classes()[g->class_of(s)].representative != s) continue;
        const LambdaFunction f = f_element(g, q, s);
        SeededRng rng(0, "acceptance-bridge-" + g->name() + "-" + std::to_string(q) + "-" + std::to_string(s));
        std::vector<IntVector> alphas(lattice.basis().begin(), lattice.basis().end());
        for (int k = 0; k < 20; ++k) {
          IntVector a(t->size(), 0);
          for (const auto& row : lattice.basis()) {
            const long c = rng.uniform(-3, 3);
            for (int i = 0; i < t->size(); ++i) a[i] += c * row[i];
          }
          alphas.push_back(a);
        }
        for (const auto& a : alphas) {
          const VirtualCharacter alpha(t, std::vector<Rational>(a.begin(), a.end()));
          o.expect(theta_transpose(f, a, lattice) == det_resolvend_cyclic(r, alpha),
                   [&] { return g->name() + " q=" + std::to_string(q) + " s=" + g->label(s) + ": bridge mismatch"; });
        }
      }
    }
  }
  return o;
}

Outcome ac7() {
  Outcome o;
  for (const auto& [g, t] : catalog()) {
    for (int64_t q : {2, 3, 5, 7}) {
      const auto sigma = sigma_set(*g, q);
      for (int a : sigma) {
        for (int b : sigma) {
          const bool same = det_distinguishes_classes(t, q, a, b);
          o.expect(same == conjugate(*g, a, b), [&] { return g->name() + " q=" + std::to_string(q) + ": " + g->label(a) + " vs " + g->label(b); });
        }
      }
    }
  }
  return o;
}

Outcome ac8() {
  Outcome o;
  for (int64_t q : {2, 3, 5, 7}) {
    SeededRng rng(0, "acceptance-tamerel-" + std::to_string(q));
    for (int i = 0; i < 100; ++i) {
      LocalElement x(q);
      for (int k = rng.uniform(1, 4); k > 0; --k) {
        int64_t den, level;
        do den = rng.uniform(1, 12);
        while (gcd(den, q) != 1);
        do level = rng.uniform(1, 12);
        while (gcd(level, q) != 1);
        x += LocalElement::monomial(q, ratio(rng.uniform(0, 2 * den), den),
                                    Cyclotomic(ratio(rng.uniform(-3, 3), rng.uniform(1, 3))) * Cyclotomic::zeta(level, rng.uniform(0, level - 1)));
      }
      o.expect(phi_op(sigma_op(phi_inverse_op(x))) == sigma_pow(x, q), [&] { return "relation fails on " + x.to_string(); });
    }
  }
  o.expect(are_isomorphic(TameQuotient(2, 3, 2).to_group(), builtin_group("S3")), [] { return "T(2,3,2) is not S3"; });
  for (const auto& [g, t] : catalog()) {
    for (int64_t q : {2, 3}) {
      for (int s = 0; s < g->order(); ++s) {
        const int M = g->element_order(s);
        if (gcd(M, q) != 1) continue;
        const int N = M == 1 ? 1 : static_cast<int>(multiplicative_order(q, M));
        const TameQuotient quotient(q, M, N);
        for (int u = 0; u < g->order(); ++u) {
          if (g->pow(u, N) != 0 || g->mul(g->mul(u, s), g->inv(u)) != g->pow(s, q)) continue;
          const Factorisation f = factorise_hom(quotient, *g, s, u);
          for (const auto& c : f.checks) {
            o.expect(c.passed, [&] { return g->name() + " s=" + g->label(s) + " t=" + g->label(u) + ": " + c.name; });
          }
        }
      }
    }
  }
  return o;
}

Outcome ac9() {
  Outcome o;
  for (const auto& [g, t] : catalog()) {
    for (int s = 0; s < g->order(); ++s) {
      const Rational d = disc_valuation(*g, s);
      const long m = g->element_order(s);
      o.expect(is_integral(d), [&] { return g->name() + ": non-integral valuation"; });
      o.expect((d == 0) == (s == 0), [&] { return g->name() + ": zero valuation off the identity"; });
      o.expect(d * m == (m - 1) * g->order(), [&] { return g->name() + ": valuation " + to_string(d); });
    }
  }
  const FiniteGroup s3 = builtin_group("S3");
  for (int s = 0; s < 6; ++s) {
    const int m = s3.element_order(s);
    if (m == 3) o.expect(disc_valuation(s3, s) == 4, [] { return "S3 3-cycle valuation"; });
    if (m == 2) o.expect(disc_valuation(s3, s) == 3, [] { return "S3 transposition valuation"; });
  }
  return o;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome ac10() {
  Outcome o;
  std::vector<std::string> reports;
  double slowest = 0;
  for (int run = 0; run < 2; ++run) {
    const std::string path = "acceptance_verify_" + std::to_string(run) + ".json";
    const std::string cmd = std::string(STICKEL_CLI) + " verify --all-catalog --seed 0 --format json --out " + path + " 2>/dev/null";
    const auto t0 = Clock::now();
    const int raw = std::system(cmd.c_str());
    const double secs = seconds_since(t0);
    slowest = std::max(slowest, secs);
    o.expect(WIFEXITED(raw) && WEXITSTATUS(raw) <= 1, [&] { return "verify did not run (status " + std::to_string(raw) + ")"; });
    o.expect(secs < 300, [&] { return "verify took " + std::to_string(secs) + " s"; });
    reports.push_back(read_file(path));
    std::remove(path.c_str());
  }
  o.expect(!reports[0].empty(), [] { return "empty report"; });
  o.expect(reports[0] == reports[1], [] { return "reports differ between runs"; });
  if (o.pass) o.detail = "byte-identical reports, slowest run " + std::to_string(slowest) + " s";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4}, {"AC5", ac5},
      {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}, {"AC10", ac10}};
  int failed = 0;
  for (const auto& [id, body] : criteria) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      o = body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::cout << id << " " << (o.pass ? "PASS" : "FAIL") << " (" << o.cases << " cases, " << seconds_since(t0) << " s)";
    if (!o.detail.empty()) std::cout << " " << o.detail;
    std::cout << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed ? 1 : 0;
}
