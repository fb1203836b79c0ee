#ifndef MONOIDFORGE_DECOMPOSITION_HPP
#define MONOIDFORGE_DECOMPOSITION_HPP

#include <map>
#include <vector>

#include "monoidforge/ideal.hpp"

namespace mf {

/// An irreducible monomial ideal (x_j^{a_j} : j in F) with all a_j >= 1.
/// Its radical is the monomial prime P_F.
struct IrreducibleComponent {
  std::map<int, int> exponents; // variable (0-based) -> exponent >= 1

  VertexSet support() const;
  MonomialIdeal as_ideal(int n) const;
  int height() const { return static_cast<int>(exponents.size()); }

  friend bool operator==(const IrreducibleComponent&, const IrreducibleComponent&) = default;
  auto operator<=>(const IrreducibleComponent&) const = default;
};

/// Irredundant irreducible decomposition by recursive generator splitting.
/// The intersection of the result equals I; the component radicals are
/// exactly the associated primes of S/I.
std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& I);

/// Supports of the irredundant irreducible components.
std::vector<VertexSet> associated_primes(const MonomialIdeal& I);

/// Inclusion-minimal associated primes.
std::vector<VertexSet> minimal_primes(const MonomialIdeal& I);

/// Minimum support size over the minimal primes.
int height(const MonomialIdeal& I);

/// dim S/I = n - height(I).
int krull_dim(const MonomialIdeal& I);

/// All minimal primes have the same height.
bool is_equidimensional(const MonomialIdeal& I);

} // namespace mf

#endif
