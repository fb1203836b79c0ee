#ifndef MONOIDFORGE_CLEAN_HPP
#define MONOIDFORGE_CLEAN_HPP

#include <optional>
#include <vector>

#include "monoidforge/filtration.hpp"
#include "monoidforge/ideal.hpp"

namespace mf {

/// One step of a clean filtration: ideal_after = (ideal_before, pivot) and
/// ideal_before : pivot = the monomial prime on `prime`, a minimal prime of
/// the filtered ideal.
struct CleanStep {
  MonomialIdeal ideal_before;
  Monomial pivot;
  VertexSet prime;

  friend bool operator==(const CleanStep&, const CleanStep&) = default;
};

/// A verified witness that S/I is clean.
struct CleanCertificate {
  std::vector<CleanStep> steps;

  /// The filtration as a chain I = I_0 < I_1 < ... < S.
  IdealChain chain(const MonomialIdeal& I) const;

  friend bool operator==(const CleanCertificate&, const CleanCertificate&) = default;
};

/// Backtracking search over monomial pivots from the box [0, t_i(I)] and
/// minimal primes of I; failed states are memoized.  Cleanness does not
/// depend on the coefficient field.
std::optional<CleanCertificate> find_clean_filtration(const MonomialIdeal& I);

bool is_clean(const MonomialIdeal& I);

/// Re-checks a certificate through the generator-wise colon conditions:
/// every prime variable is hit by some u : pivot, and every u : pivot is
/// divisible by a prime variable.
bool verify_clean_certificate(const MonomialIdeal& I, const CleanCertificate& certificate);

} // namespace mf

#endif
