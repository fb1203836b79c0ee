#ifndef MONOIDFORGE_IDEAL_HPP
#define MONOIDFORGE_IDEAL_HPP

#include <vector>

#include "monoidforge/monomial.hpp"

namespace mf {

/// A monomial ideal, stored as its unique minimal monomial generating set
/// G(I), kept sorted.  The empty generator set is the zero ideal; the set
/// {1} is the unit ideal.  Immutable.
class MonomialIdeal {
public:
  /// Minimalizes the given generators (divisibility pruning).
  MonomialIdeal(int n, std::vector<Monomial> generators);

  static MonomialIdeal zero(int n) { return MonomialIdeal(n, {}); }
  static MonomialIdeal unit(int n) { return MonomialIdeal(n, {Monomial::unit(n)}); }

  int ambient() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t generator_count() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }
  bool is_proper() const { return !is_unit(); }
  bool is_squarefree() const;

  /// True iff some generator divides u.
  bool contains(const Monomial& u) const;
  /// True iff every generator of other lies in this ideal.
  bool contains(const MonomialIdeal& other) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
  int n_;
  std::vector<Monomial> gens_;
};

/// Divisibility pruning; the result's generators form an antichain.
MonomialIdeal minimalize(int n, std::vector<Monomial> generators);

/// Generated by the squarefree reductions of the generators.
MonomialIdeal radical(const MonomialIdeal& I);

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);

/// I : v, computed generator-wise.
MonomialIdeal colon(const MonomialIdeal& I, const Monomial& v);

/// Adds one generator and re-minimalizes.
MonomialIdeal add_generator(const MonomialIdeal& I, const Monomial& u);

/// t_i = max exponent of x_i over G(I).  Rejects zero and unit ideals.
std::vector<int> t_vector(const MonomialIdeal& I);

/// The prime ideal P_F = (x_i : i in F).
MonomialIdeal monomial_prime(int n, VertexSet F);

namespace detail {
void require_proper_nonzero(const MonomialIdeal& I, const char* op);
}

} // namespace mf

#endif
