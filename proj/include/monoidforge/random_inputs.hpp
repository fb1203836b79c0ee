#ifndef MONOIDFORGE_RANDOM_INPUTS_HPP
#define MONOIDFORGE_RANDOM_INPUTS_HPP

#include <cstdint>

#include "monoidforge/battery.hpp"
#include "monoidforge/ideal.hpp"
#include "monoidforge/simplicial_complex.hpp"

namespace mf {

/// Proper nonzero ideal with up to max_gens generators and exponents up to
/// max_exp; identical seeds give identical ideals.
MonomialIdeal random_monomial_ideal(int n, int max_exp, int max_gens, std::uint64_t seed);

/// r distinct random c-subsets of [n].
PureConfiguration random_pure_configuration(int n, int c, int r, std::uint64_t seed);

/// Random monomial ideal with the same associated primes as I: one
/// irreducible component per associated prime, random exponents.  Requires
/// the associated primes of I to be pairwise incomparable.
MonomialIdeal random_with_ass(const MonomialIdeal& I, int max_exp, std::uint64_t seed);

/// Random nonvoid complex from up to max_facets random faces.
SimplicialComplex random_complex(int n, int max_facets, std::uint64_t seed);

} // namespace mf

#endif
