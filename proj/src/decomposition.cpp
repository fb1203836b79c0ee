#include "monoidforge/decomposition.hpp"

#include <algorithm>
#include <set>

namespace mf {

VertexSet IrreducibleComponent::support() const {
  VertexSet s;
  for (auto [v, e] : exponents) s = s.with(v);
  return s;
}

MonomialIdeal IrreducibleComponent::as_ideal(int n) const {
  std::vector<Monomial> gens;
  for (auto [v, e] : exponents) {
    Exponents ex(n, 0);
    ex.at(v) = e;
    gens.emplace_back(std::move(ex));
  }
  return MonomialIdeal(n, std::move(gens));
}

namespace {

IrreducibleComponent component_of_pure_powers(const MonomialIdeal& I) {
  IrreducibleComponent c;
  for (const Monomial& g : I.generators()) {
    int v = g.support().min();
    c.exponents[v] = g.exponent(v); // minimality: one pure power per variable
  }
  return c;
}

// Splits at the first generator with more than one variable:
// I = (G \ u, x_i^a) meet (G \ u, u / x_i^a) for u = x_i^a * u'' coprime.
void decompose_rec(const MonomialIdeal& I, std::set<IrreducibleComponent>& out) {
  const int n = I.ambient();
  for (std::size_t k = 0; k < I.generator_count(); ++k) {
    const Monomial& u = I.generators()[k];
    VertexSet s = u.support();
    if (s.size() < 2) continue;
    int v = s.min();
    Exponents left(n, 0);
    left[v] = u.exponent(v);
    Exponents right(u.exponents());
    right[v] = 0;
    std::vector<Monomial> rest;
    for (std::size_t j = 0; j < I.generator_count(); ++j)
      if (j != k) rest.push_back(I.generators()[j]);
    std::vector<Monomial> a = rest, b = std::move(rest);
    a.emplace_back(std::move(left));
    b.emplace_back(std::move(right));
    decompose_rec(MonomialIdeal(n, std::move(a)), out);
    decompose_rec(MonomialIdeal(n, std::move(b)), out);
    return;
  }
  out.insert(component_of_pure_powers(I));
}

MonomialIdeal intersect_components(int n, const std::vector<IrreducibleComponent>& comps,
                                   std::size_t skip = static_cast<std::size_t>(-1)) {
  MonomialIdeal result = MonomialIdeal::unit(n);
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (i != skip) result = intersect(result, comps[i].as_ideal(n));
  return result;
}

} // namespace

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& I) {
  detail::require_proper_nonzero(I, "irreducible_decomposition");
  std::set<IrreducibleComponent> collected;
  decompose_rec(I, collected);
  std::vector<IrreducibleComponent> comps(collected.begin(), collected.end());
  // Drop components containing the intersection of the others, one at a
  // time, until the family is irredundant.
  bool changed = true;
  while (changed && comps.size() > 1) {
    changed = false;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      MonomialIdeal others = intersect_components(I.ambient(), comps, i);
      if (comps[i].as_ideal(I.ambient()).contains(others)) {
        comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return comps;
}

std::vector<VertexSet> associated_primes(const MonomialIdeal& I) {
  std::vector<VertexSet> primes;
  for (const IrreducibleComponent& c : irreducible_decomposition(I)) primes.push_back(c.support());
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

std::vector<VertexSet> minimal_primes(const MonomialIdeal& I) {
  std::vector<VertexSet> ass = associated_primes(I);
  std::vector<VertexSet> mins;
  for (const VertexSet& p : ass) {
    bool minimal = true;
    for (const VertexSet& q : ass)
      if (q != p && q.subset_of(p)) {
        minimal = false;
        break;
      }
    if (minimal) mins.push_back(p);
  }
  return mins;
}

int height(const MonomialIdeal& I) {
  int h = kMaxVariables + 1;
  for (const VertexSet& p : minimal_primes(I)) h = std::min(h, p.size());
  return h;
}

int krull_dim(const MonomialIdeal& I) { return I.ambient() - height(I); }

bool is_equidimensional(const MonomialIdeal& I) {
  std::vector<VertexSet> mins = minimal_primes(I);
  for (const VertexSet& p : mins)
    if (p.size() != mins.front().size()) return false;
  return true;
}

} // namespace mf
