#include "monoidforge/clean.hpp"

#include <algorithm>
#include <unordered_set>

#include "monoidforge/decomposition.hpp"

namespace mf {

IdealChain CleanCertificate::chain(const MonomialIdeal& I) const {
  std::vector<MonomialIdeal> ideals{I};
  for (const CleanStep& s : steps) ideals.push_back(add_generator(s.ideal_before, s.pivot));
  return IdealChain(std::move(ideals));
}

namespace {

struct IdealKey {
  std::size_t operator()(const MonomialIdeal& I) const {
    std::size_t h = 1469598103934665603ull;
    for (const Monomial& g : I.generators())
      for (int e : g.exponents()) h = (h ^ static_cast<std::size_t>(e + 1)) * 1099511628211ull;
    return h ^ I.generator_count();
  }
};

struct CleanSearch {
  int n;
  std::vector<VertexSet> primes;            // minimal primes of the input
  std::vector<MonomialIdeal> prime_ideals;  // matching ideals, for colon comparison
  std::vector<Monomial> box;                // pivot candidates, exponents <= t_i(I)
  std::unordered_set<MonomialIdeal, IdealKey> dead;

  bool extend(const MonomialIdeal& J, std::vector<CleanStep>& steps) {
    if (J.is_unit()) return true;
    if (dead.contains(J)) return false;
    for (std::size_t p = 0; p < primes.size(); ++p) {
      for (const Monomial& f : box) {
        if (J.contains(f)) continue;
        if (colon(J, f) != prime_ideals[p]) continue;
        steps.push_back({J, f, primes[p]});
        if (extend(add_generator(J, f), steps)) return true;
        steps.pop_back();
      }
    }
    dead.insert(J);
    return false;
  }
};

} // namespace

std::optional<CleanCertificate> find_clean_filtration(const MonomialIdeal& I) {
  detail::require_proper_nonzero(I, "find_clean_filtration");
  CleanSearch search;
  search.n = I.ambient();
  search.primes = minimal_primes(I);
  for (VertexSet p : search.primes) search.prime_ideals.push_back(monomial_prime(I.ambient(), p));

  // Colon ideals J : f are unchanged once an exponent of f passes the
  // matching t_i, so the box below is a complete pivot search space.
  const std::vector<int> t = t_vector(I);
  Exponents e(static_cast<std::size_t>(I.ambient()), 0);
  while (true) {
    search.box.emplace_back(e);
    int pos = 0;
    while (pos < I.ambient() && e[static_cast<std::size_t>(pos)] == t[static_cast<std::size_t>(pos)]) {
      e[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == I.ambient()) break;
    ++e[static_cast<std::size_t>(pos)];
  }
  std::sort(search.box.begin(), search.box.end());

  std::vector<CleanStep> steps;
  if (!search.extend(I, steps)) return std::nullopt;
  CleanCertificate certificate{std::move(steps)};
  if (!verify_clean_certificate(I, certificate))
    throw Error("find_clean_filtration: search produced an invalid certificate");
  return certificate;
}

bool is_clean(const MonomialIdeal& I) { return find_clean_filtration(I).has_value(); }

bool verify_clean_certificate(const MonomialIdeal& I, const CleanCertificate& certificate) {
  if (certificate.steps.empty()) return false;
  const std::vector<VertexSet> minimal = minimal_primes(I);
  MonomialIdeal current = I;
  for (const CleanStep& step : certificate.steps) {
    if (step.ideal_before != current) return false;
    if (std::find(minimal.begin(), minimal.end(), step.prime) == minimal.end()) return false;
    if (current.contains(step.pivot)) return false;
    // (a) every prime variable arises as u : pivot for some generator u
    for (int var : step.prime.to_vector()) {
      const Monomial target = Monomial::variable(current.ambient(), var);
      bool hit = false;
      for (const Monomial& u : current.generators())
        if (colon(u, step.pivot) == target) {
          hit = true;
          break;
        }
      if (!hit) return false;
    }
    // (b) every generator's colon is divisible by some prime variable
    for (const Monomial& u : current.generators()) {
      const Monomial c = colon(u, step.pivot);
      bool divisible = false;
      for (int var : step.prime.to_vector())
        if (c.exponent(var) >= 1) {
          divisible = true;
          break;
        }
      if (!divisible) return false;
    }
    current = add_generator(current, step.pivot);
  }
  return current.is_unit();
}

} // namespace mf
