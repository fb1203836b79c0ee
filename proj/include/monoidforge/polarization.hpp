#ifndef MONOIDFORGE_POLARIZATION_HPP
#define MONOIDFORGE_POLARIZATION_HPP

#include <utility>
#include <vector>

#include "monoidforge/ideal.hpp"

namespace mf {

/// Bookkeeping for a sequence of 1-step polarizations.  Target variables
/// 0..source_n-1 are the original ones; each later variable records which
/// source variable it polarizes.
struct PolarizationRecord {
  int source_n = 0;
  int target_n = 0;
  std::vector<int> variable_origin;          // size target_n; identity on the first source_n
  std::vector<std::pair<int, int>> steps;    // (source variable, new variable index)

  static PolarizationRecord identity(int n);
  bool consistent() const;

  friend bool operator==(const PolarizationRecord&, const PolarizationRecord&) = default;
};

/// One polarization step at variable `var`: every generator with exponent
/// >= 2 there trades one x_var for a fresh variable appended after the
/// current last one.  Requires t_var >= 2.
std::pair<MonomialIdeal, PolarizationRecord> polarize_step(const MonomialIdeal& I, int var);

/// Complete polarization: iterates 1-step polarizations, lowest variable
/// index first, until the ideal is squarefree.
std::pair<MonomialIdeal, PolarizationRecord> polarize(const MonomialIdeal& I);

/// Substitutes 1 for every new variable of the record and minimalizes;
/// on a complete polarization this recovers the radical of the source.
MonomialIdeal depolarize_radical(const MonomialIdeal& Ip, const PolarizationRecord& record);

} // namespace mf

#endif
