#ifndef MONOIDFORGE_TEXT_IO_HPP
#define MONOIDFORGE_TEXT_IO_HPP

#include <string>
#include <vector>

#include "monoidforge/ideal.hpp"
#include "monoidforge/simplicial_complex.hpp"

namespace mf {

/// Ideal grammar: "n; g1, g2, ..." with *-separated factors "xk" or
/// "xk^e" (1-based k, e >= 1) and "1" for the unit generator; whitespace is
/// ignored.  "n;" alone is the zero ideal.
MonomialIdeal parse_ideal(const std::string& text);
std::string print_ideal(const MonomialIdeal& I);

/// A single monomial in the factor grammar, e.g. "x1^2*x3" or "1".
Monomial parse_monomial(const std::string& text, int n);
std::string print_monomial(const Monomial& u);

/// Complex grammar: "n; {1,2},{2,3}".  "n;" is the void complex and
/// "n; {}" the empty complex.
SimplicialComplex parse_complex(const std::string& text);
std::string print_complex(const SimplicialComplex& c);

/// Facet-list grammar without the ambient prefix, e.g. "{1,2},{1,3}".
std::vector<VertexSet> parse_faces(const std::string& text, int n);
std::string print_faces(const std::vector<VertexSet>& faces);

} // namespace mf

#endif
