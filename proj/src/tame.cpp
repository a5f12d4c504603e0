#include "stickel/tame.hpp"

namespace stickel {

TameQuotient::TameQuotient(int64_t q, int64_t M, int64_t N) : q_(q), M_(M), N_(N) {
  if (q < 2) throw DomainError("q must be at least 2");
  if (M < 1 || N < 1) throw DomainError("M and N must be positive");
  if (M * N > 100000) throw SizeCapError("tame quotient of order " + std::to_string(M * N) + " is too large");
  if (pow_mod(q, N, M) != mod(1, M)) {
    throw DomainError("q^N = 1 (mod M) fails for q = " + std::to_string(q) + ", M = " + std::to_string(M) +
                      ", N = " + std::to_string(N));
  }
  for (int64_t n = 0; n < N; ++n) q_powers_.push_back(pow_mod(q, n, M));
}

int TameQuotient::mul(int a, int b) const {
  const int64_t m1 = sigma_exponent(a), n1 = phi_exponent(a);
  const int64_t m2 = sigma_exponent(b), n2 = phi_exponent(b);
  return index(m1 + m2 * q_powers_[n1], n1 + n2);
}

std::string TameQuotient::label(int w) const {
  return "s^" + std::to_string(sigma_exponent(w)) + " f^" + std::to_string(phi_exponent(w));
}

FiniteGroup TameQuotient::to_group() const {
  const int n = order();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    labels.push_back(label(a));
    for (int b = 0; b < n; ++b) table[a][b] = mul(a, b);
  }
  return FiniteGroup::from_cayley_table(std::move(table),
                                        "T(" + std::to_string(q_) + "," + std::to_string(M_) + "," + std::to_string(N_) + ")",
                                        std::move(labels));
}

bool Factorisation::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

Factorisation factorise_hom(const TameQuotient& w, const FiniteGroup& g, int s, int t) {
  const std::string pair = "(s, t) = (" + g.label(s) + ", " + g.label(t) + ")";
  if (g.pow(s, w.M()) != g.identity()) throw DomainError("s^M != e for " + pair);
  if (g.pow(t, w.N()) != g.identity()) throw DomainError("t^N != e for " + pair);
  if (g.mul(g.mul(t, s), g.inv(t)) != g.pow(s, w.q())) throw DomainError("t s t^-1 != s^q for " + pair);

  Factorisation out{w.q(), w.M(), w.N(), s, t, {}, {}, {}, {}};
  const int n = w.order();
  for (int x = 0; x < n; ++x) {
    const int sm = g.pow(s, w.sigma_exponent(x)), tn = g.pow(t, w.phi_exponent(x));
    out.pi.push_back(g.mul(sm, tn));
    out.pi_r.push_back(sm);
    out.pi_nr.push_back(tn);
  }
  auto make = [](const char* name) { return FactorisationCheck{name, true, 0, std::nullopt}; };
  FactorisationCheck hom = make("homomorphism"), nr_hom = make("unramified_homomorphism"), fac = make("factorisation"),
                     cocycle = make("cocycle");
  auto fail = [](FactorisationCheck& c, int a, int b) {
    if (c.passed) c.counterexample = std::make_pair(a, b);
    c.passed = false;
  };
  for (int a = 0; a < n; ++a) {
    ++fac.cases;
    if (out.pi[a] != g.mul(out.pi_r[a], out.pi_nr[a])) fail(fac, a, -1);
    for (int b = 0; b < n; ++b) {
      const int ab = w.mul(a, b);
      ++hom.cases;
      ++nr_hom.cases;
      ++cocycle.cases;
      if (out.pi[ab] != g.mul(out.pi[a], out.pi[b])) fail(hom, a, b);
      if (out.pi_nr[ab] != g.mul(out.pi_nr[a], out.pi_nr[b])) fail(nr_hom, a, b);
      const int twisted = g.mul(g.mul(out.pi_r[a], out.pi_nr[a]), g.mul(out.pi_r[b], g.inv(out.pi_nr[a])));
      if (out.pi_r[ab] != twisted) fail(cocycle, a, b);
    }
  }
  out.checks = {hom, nr_hom, fac, cocycle};
  return out;
}

Rational disc_valuation(const FiniteGroup& g, int s) {
  const long m = g.element_order(s);
  return ratio(Integer(m - 1) * g.order(), Integer(m));
}

}  // namespace stickel
