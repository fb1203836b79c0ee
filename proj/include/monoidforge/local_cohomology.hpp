#ifndef MONOIDFORGE_LOCAL_COHOMOLOGY_HPP
#define MONOIDFORGE_LOCAL_COHOMOLOGY_HPP

#include <map>
#include <string>
#include <vector>

#include "monoidforge/decomposition.hpp"
#include "monoidforge/field.hpp"
#include "monoidforge/homology.hpp"

namespace mf {

/// One clamped multidegree pattern: entry_i is -1 or lies in [0, t_i - 1].
/// A pattern stands for the infinite family of a in Z^n with a_i <= -1
/// exactly on the negative entries and a_i = entry_i elsewhere; the degree
/// complex, hence the local cohomology dimension, is constant across the
/// family.
struct ClampedDegree {
  std::vector<int> entries;

  VertexSet negative_support() const;
  /// Largest total degree in the family (attained at a_i = -1 on the
  /// negative support).
  int max_total_degree() const;

  friend bool operator==(const ClampedDegree&, const ClampedDegree&) = default;
  auto operator<=>(const ClampedDegree&) const = default;
};

/// Graded dimensions of the local cohomology modules of S/I, one row per
/// cohomological index, with only the nonzero clamp entries kept.
class LocalCohomologyTable {
public:
  LocalCohomologyTable(int n, FieldSpec field) : n_(n), field_(field) {}

  int ambient() const { return n_; }
  const FieldSpec& field() const { return field_; }
  const std::map<int, std::map<ClampedDegree, int>>& rows() const { return rows_; }

  void set(int i, ClampedDegree degree, int dim);
  int dimension_at(int i, const ClampedDegree& degree) const;

  bool row_empty(int i) const;
  /// Smallest / largest cohomological index with a nonzero entry.
  int min_nonzero_index() const;
  int max_nonzero_index() const;

  friend bool operator==(const LocalCohomologyTable&, const LocalCohomologyTable&) = default;

private:
  int n_;
  FieldSpec field_;
  std::map<int, std::map<ClampedDegree, int>> rows_;
};

/// dim_K H^i_m(S/I)_a for a single multidegree a (any integer vector).
int local_cohomology_dim(const MonomialIdeal& I, int i, const std::vector<int>& a,
                         const FieldSpec& field);

/// The full table: all prod(t_i + 1) clamp patterns are visited and the
/// nonzero contributions recorded.  Every a in Z^n with nonzero cohomology
/// is represented by exactly one pattern.
LocalCohomologyTable local_cohomology_table(const MonomialIdeal& I, const FieldSpec& field);

int depth(const MonomialIdeal& I, const FieldSpec& field);
int depth(const LocalCohomologyTable& table);

/// dim S/I re-derived from the table; asserts agreement with the
/// decomposition-side value.
int krull_dim_check(const MonomialIdeal& I, const FieldSpec& field);

bool is_cm(const MonomialIdeal& I, const FieldSpec& field);

/// Generalized Cohen-Macaulay: equidimensional and every below-dimension
/// row is supported on finitely many degrees, i.e. on patterns with empty
/// negative support only.
bool is_gcm(const MonomialIdeal& I, const FieldSpec& field);

/// Only defined for squarefree ideals, where it coincides with GCM.
bool is_buchsbaum(const MonomialIdeal& I, const FieldSpec& field);

int a_invariant(const MonomialIdeal& I, const FieldSpec& field);
int a_invariant_bound(const MonomialIdeal& I);
bool has_maximal_a_invariant(const MonomialIdeal& I, const FieldSpec& field);

/// Per-degree comparison of the tables of I and sqrt(I) over the patterns
/// with all entries <= 0; lists any disagreements (none are expected).
struct AgreementViolation {
  int i;
  ClampedDegree degree;
  int dim_ideal;
  int dim_radical;
};
struct AgreementReport {
  bool agrees = true;
  std::vector<AgreementViolation> violations;
};
AgreementReport radical_cohomology_agreement(const MonomialIdeal& I, const FieldSpec& field);

} // namespace mf

#endif
