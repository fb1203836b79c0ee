#include "monoidforge/filtration.hpp"

#include <algorithm>

#include "monoidforge/decomposition.hpp"
#include "monoidforge/polarization.hpp"
#include "monoidforge/simplicial_complex.hpp"

namespace mf {

IdealChain::IdealChain(std::vector<MonomialIdeal> chain) : ideals(std::move(chain)) {
  if (ideals.size() < 2) throw PreconditionError("ideal chain needs at least two members");
  for (std::size_t k = 0; k + 1 < ideals.size(); ++k) {
    if (!ideals[k + 1].contains(ideals[k]) || ideals[k + 1] == ideals[k])
      throw PreconditionError("ideal chain must increase strictly");
  }
  if (!ideals.back().is_unit()) throw PreconditionError("ideal chain must end at the unit ideal");
}

IdealChain dimension_filtration(const MonomialIdeal& I) {
  detail::require_proper_nonzero(I, "dimension_filtration");
  const int n = I.ambient();
  const std::vector<IrreducibleComponent> comps = irreducible_decomposition(I);
  std::vector<int> dims;
  for (const IrreducibleComponent& c : comps) dims.push_back(n - c.height());
  std::vector<int> cutoffs(dims);
  std::sort(cutoffs.begin(), cutoffs.end());
  cutoffs.erase(std::unique(cutoffs.begin(), cutoffs.end()), cutoffs.end());

  std::vector<MonomialIdeal> chain{I};
  for (int cutoff : cutoffs) {
    MonomialIdeal layer = MonomialIdeal::unit(n);
    for (std::size_t k = 0; k < comps.size(); ++k)
      if (dims[k] > cutoff) layer = intersect(layer, comps[k].as_ideal(n));
    chain.push_back(std::move(layer));
  }
  return IdealChain(std::move(chain));
}

MonomialIdeal alexander_dual_ideal(const MonomialIdeal& I) {
  if (!I.is_squarefree()) throw PreconditionError("alexander_dual_ideal: ideal must be squarefree");
  const SimplicialComplex complex = from_stanley_reisner(I);
  const VertexSet full = VertexSet::full(I.ambient());
  std::vector<Monomial> gens;
  gens.reserve(complex.facets().size());
  for (VertexSet f : complex.facets()) gens.push_back(squarefree_monomial(I.ambient(), full - f));
  return MonomialIdeal(I.ambient(), std::move(gens));
}

bool is_sequentially_cm(const MonomialIdeal& I, const FieldSpec& field) {
  detail::require_proper_nonzero(I, "is_sequentially_cm");
  const MonomialIdeal squarefree = I.is_squarefree() ? I : polarize(I).first;
  const MonomialIdeal dual = alexander_dual_ideal(squarefree);
  if (dual.is_zero() || dual.is_unit()) return true; // complex had no facets off the full simplex
  return is_componentwise_linear(dual, field);
}

} // namespace mf
