#ifndef MONOIDFORGE_BETTI_HPP
#define MONOIDFORGE_BETTI_HPP

#include <map>
#include <vector>

#include "monoidforge/field.hpp"
#include "monoidforge/ideal.hpp"

namespace mf {

/// Multigraded Betti numbers of S/I.  beta_{0,0} = 1 always; all other
/// entries sit at multidegrees from the lcm lattice of G(I).
class BettiTable {
public:
  explicit BettiTable(int n) : n_(n) {}

  int ambient() const { return n_; }
  void add(int i, const Exponents& b, long value);
  long at(int i, const Exponents& b) const;
  const std::map<int, std::map<Exponents, long>>& entries() const { return entries_; }

  /// Totalized view: (homological index, total degree) -> sum of entries.
  std::map<std::pair<int, int>, long> totals() const;
  /// Sum of the row at homological index i.
  long total_at(int i) const;
  /// Largest homological index with an entry.
  int projective_dimension() const;
  /// Total degrees at the last homological index, with multiplicity.
  std::vector<int> last_shifts() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
  int n_;
  std::map<int, std::map<Exponents, long>> entries_;
};

/// Betti numbers from upper Koszul complexes: beta_{i,b}(S/I) is the
/// (i-2)-nd reduced homology of { sigma : x^b / x^sigma in I }.
BettiTable betti_koszul(const MonomialIdeal& I, const FieldSpec& field);

/// Independent route: homology of the multigraded strands of the Taylor
/// complex on G(I).  Exponential in the generator count, hence the bound.
BettiTable betti_taylor(const MonomialIdeal& I, const FieldSpec& field, std::size_t max_gens = 14);

int projective_dimension(const MonomialIdeal& I, const FieldSpec& field);
/// depth via Auslander-Buchsbaum: n - projdim(S/I).
int depth_ab(const MonomialIdeal& I, const FieldSpec& field);

/// CM with a single last Betti number at the codimension.
bool is_gorenstein(const MonomialIdeal& I, const FieldSpec& field);

std::vector<int> last_shifts(const MonomialIdeal& I, const FieldSpec& field);
/// CM with all last shifts in one degree.
bool is_level(const MonomialIdeal& I, const FieldSpec& field);

/// Ideal generated by every monomial of total degree d lying in I.
MonomialIdeal degree_component(const MonomialIdeal& I, int d);

/// Ideal generated by the squarefree monomials of degree d in I.
MonomialIdeal squarefree_degree_component(const MonomialIdeal& I, int d);

/// All generators in one degree d0 and all beta_{i,j}(I) zero unless
/// j = i + d0.  Scans the lcm lattice with early exit.
bool has_linear_resolution(const MonomialIdeal& I, const FieldSpec& field);

/// Every nonzero degree component has a linear resolution.  Squarefree
/// ideals are tested through their squarefree components, which decide the
/// same property and stay enumerable.
bool is_componentwise_linear(const MonomialIdeal& I, const FieldSpec& field);

} // namespace mf

#endif
