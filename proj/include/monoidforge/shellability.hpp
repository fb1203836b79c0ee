#ifndef MONOIDFORGE_SHELLABILITY_HPP
#define MONOIDFORGE_SHELLABILITY_HPP

#include <optional>
#include <vector>

#include "monoidforge/field.hpp"
#include "monoidforge/simplicial_complex.hpp"

namespace mf {

/// Searches for a non-pure shelling order (Bjoerner-Wachs): each facet must
/// meet the complex spanned by its predecessors in a pure subcomplex of
/// codimension one.  Facets are tried in weakly decreasing dimension, which
/// loses no shellings, and failed prefix sets are memoized.
std::optional<std::vector<VertexSet>> find_shelling(const SimplicialComplex& c);

/// Rejects the void complex.
bool is_shellable(const SimplicialComplex& c);

/// Reisner's criterion: every face link, the empty face included, has
/// vanishing reduced homology below its dimension.
bool reisner_cm(const SimplicialComplex& c, const FieldSpec& field);

} // namespace mf

#endif
