#ifndef MONOIDFORGE_FILTRATION_HPP
#define MONOIDFORGE_FILTRATION_HPP

#include <vector>

#include "monoidforge/betti.hpp"
#include "monoidforge/ideal.hpp"

namespace mf {

/// A strictly increasing chain of ideals I = I_0 < I_1 < ... < I_r = S.
/// Inclusions are verified generator-wise at construction.
struct IdealChain {
  std::vector<MonomialIdeal> ideals;

  explicit IdealChain(std::vector<MonomialIdeal> chain);

  std::size_t length() const { return ideals.size(); }
  friend bool operator==(const IdealChain&, const IdealChain&) = default;
};

/// The candidate attached chain, built combinatorially: the k-th member
/// intersects the irreducible components whose dimension exceeds the k-th
/// smallest occurring component dimension.  For sequentially CM ideals this
/// is the attached filtration; otherwise it is reported as a candidate.
IdealChain dimension_filtration(const MonomialIdeal& I);

/// Decided through the squarefree case: polarize, pass to the
/// Stanley-Reisner complex, and test componentwise linearity of the
/// Alexander dual ideal.
bool is_sequentially_cm(const MonomialIdeal& I, const FieldSpec& field);

/// The Alexander dual ideal of the complex of a squarefree ideal: one
/// generator per facet, supported on the facet's complement.
MonomialIdeal alexander_dual_ideal(const MonomialIdeal& I);

} // namespace mf

#endif
