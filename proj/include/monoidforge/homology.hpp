#ifndef MONOIDFORGE_HOMOLOGY_HPP
#define MONOIDFORGE_HOMOLOGY_HPP

#include <vector>

#include "monoidforge/field.hpp"
#include "monoidforge/simplicial_complex.hpp"

namespace mf {

/// Reduced homology dimensions, indexed from j = -1 (slot 0) up to the
/// dimension of the complex.  The void complex has an empty profile; the
/// empty complex has H~_{-1} = K and nothing else.
struct HomologyProfile {
  std::vector<int> dims;

  int at(int j) const {
    const int idx = j + 1;
    if (idx < 0 || idx >= static_cast<int>(dims.size())) return 0;
    return dims[static_cast<std::size_t>(idx)];
  }
  bool all_zero() const {
    for (int d : dims)
      if (d != 0) return false;
    return true;
  }
  int top_index() const { return static_cast<int>(dims.size()) - 2; }

  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

/// Exact reduced simplicial homology over K, via ranks of the boundary
/// maps of the augmented chain complex.
HomologyProfile reduced_homology(const SimplicialComplex& c, const FieldSpec& field);

} // namespace mf

#endif
