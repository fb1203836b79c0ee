#include "monoidforge/random_inputs.hpp"

#include <algorithm>

#include "monoidforge/decomposition.hpp"
#include "monoidforge/rng.hpp"

namespace mf {

MonomialIdeal random_monomial_ideal(int n, int max_exp, int max_gens, std::uint64_t seed) {
  if (n < 1 || max_exp < 1 || max_gens < 1)
    throw PreconditionError("random_monomial_ideal: parameters must be positive");
  Rng rng(seed);
  const int count = rng.uniform(1, max_gens);
  std::vector<Monomial> gens;
  for (int k = 0; k < count; ++k) {
    Exponents e(static_cast<std::size_t>(n), 0);
    do {
      for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = rng.uniform(0, max_exp);
    } while (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; }));
    gens.emplace_back(e);
  }
  return MonomialIdeal(n, std::move(gens));
}

PureConfiguration random_pure_configuration(int n, int c, int r, std::uint64_t seed) {
  if (c < 1 || c > n) throw PreconditionError("random_pure_configuration: need 1 <= c <= n");
  Rng rng(seed);
  std::vector<VertexSet> faces;
  int attempts = 0;
  while (static_cast<int>(faces.size()) < r) {
    if (++attempts > 10000)
      throw PreconditionError("random_pure_configuration: not enough distinct c-subsets");
    VertexSet f;
    while (f.size() < c) f = f.with(rng.uniform(0, n - 1));
    if (std::find(faces.begin(), faces.end(), f) == faces.end()) faces.push_back(f);
  }
  return PureConfiguration(n, std::move(faces));
}

MonomialIdeal random_with_ass(const MonomialIdeal& I, int max_exp, std::uint64_t seed) {
  detail::require_proper_nonzero(I, "random_with_ass");
  const std::vector<VertexSet> ass = associated_primes(I);
  for (VertexSet p : ass)
    for (VertexSet q : ass)
      if (p != q && p.subset_of(q))
        throw PreconditionError("random_with_ass: associated primes must be pairwise incomparable");

  Rng rng(seed);
  MonomialIdeal result = MonomialIdeal::unit(I.ambient());
  for (VertexSet p : ass) {
    std::vector<Monomial> gens;
    for (int v : p.to_vector()) {
      Exponents e(static_cast<std::size_t>(I.ambient()), 0);
      e[static_cast<std::size_t>(v)] = rng.uniform(1, max_exp);
      gens.emplace_back(std::move(e));
    }
    result = intersect(result, MonomialIdeal(I.ambient(), std::move(gens)));
  }
  return result;
}

SimplicialComplex random_complex(int n, int max_facets, std::uint64_t seed) {
  if (n < 1 || max_facets < 1) throw PreconditionError("random_complex: parameters must be positive");
  Rng rng(seed);
  const int count = rng.uniform(1, max_facets);
  std::vector<VertexSet> faces;
  for (int k = 0; k < count; ++k) {
    VertexSet f;
    const int size = rng.uniform(0, n);
    while (f.size() < size) f = f.with(rng.uniform(0, n - 1));
    faces.push_back(f);
  }
  return SimplicialComplex(n, std::move(faces));
}

} // namespace mf
