#include "monoidforge/local_cohomology.hpp"

#include <algorithm>
#include <numeric>

namespace mf {

VertexSet ClampedDegree::negative_support() const {
  VertexSet s;
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i] < 0) s = s.with(static_cast<int>(i));
  return s;
}

int ClampedDegree::max_total_degree() const {
  return std::accumulate(entries.begin(), entries.end(), 0);
}

void LocalCohomologyTable::set(int i, ClampedDegree degree, int dim) {
  if (dim != 0) rows_[i][std::move(degree)] = dim;
}

int LocalCohomologyTable::dimension_at(int i, const ClampedDegree& degree) const {
  auto row = rows_.find(i);
  if (row == rows_.end()) return 0;
  auto hit = row->second.find(degree);
  return hit == row->second.end() ? 0 : hit->second;
}

bool LocalCohomologyTable::row_empty(int i) const {
  auto row = rows_.find(i);
  return row == rows_.end() || row->second.empty();
}

int LocalCohomologyTable::min_nonzero_index() const {
  for (const auto& [i, row] : rows_)
    if (!row.empty()) return i;
  throw PreconditionError("local cohomology table is empty");
}

int LocalCohomologyTable::max_nonzero_index() const {
  int best = -1;
  bool found = false;
  for (const auto& [i, row] : rows_)
    if (!row.empty()) {
      best = i;
      found = true;
    }
  if (!found) throw PreconditionError("local cohomology table is empty");
  return best;
}

namespace {

// The Takayama summand at one clamp pattern: dim H^i at any a in the family
// equals dim H~_{i - |F| - 1}(Delta_a) when F = G_a is a face of the
// complex of sqrt(I), and 0 otherwise.
struct ClampContext {
  const MonomialIdeal& I;
  const FieldSpec& field;
  SimplicialComplex radical_complex;
  std::vector<int> t;

  ClampContext(const MonomialIdeal& ideal, const FieldSpec& f)
      : I(ideal), field(f), radical_complex(from_stanley_reisner(radical(ideal))), t(t_vector(ideal)) {}
};

HomologyProfile clamp_profile(const ClampContext& ctx, const ClampedDegree& degree) {
  return reduced_homology(delta_a(ctx.I, degree.entries), ctx.field);
}

} // namespace

int local_cohomology_dim(const MonomialIdeal& I, int i, const std::vector<int>& a,
                         const FieldSpec& field) {
  detail::require_proper_nonzero(I, "local_cohomology_dim");
  if (static_cast<int>(a.size()) != I.ambient())
    throw PreconditionError("local_cohomology_dim: degree vector length mismatch");
  const std::vector<int> t = t_vector(I);
  for (int k = 0; k < I.ambient(); ++k)
    if (a[static_cast<std::size_t>(k)] > t[static_cast<std::size_t>(k)] - 1) return 0;

  VertexSet G;
  ClampedDegree degree;
  degree.entries.resize(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    degree.entries[k] = std::max(a[k], -1);
    if (a[k] < 0) G = G.with(static_cast<int>(k));
  }
  const SimplicialComplex radical_complex = from_stanley_reisner(radical(I));
  if (!radical_complex.is_face(G)) return 0;
  const HomologyProfile h = reduced_homology(delta_a(I, degree.entries), field);
  return h.at(i - G.size() - 1);
}

LocalCohomologyTable local_cohomology_table(const MonomialIdeal& I, const FieldSpec& field) {
  detail::require_proper_nonzero(I, "local_cohomology_table");
  ClampContext ctx(I, field);
  const int n = I.ambient();
  LocalCohomologyTable table(n, field);

  // Odometer sweep over all prod(t_i + 1) clamp patterns.
  ClampedDegree degree;
  degree.entries.assign(static_cast<std::size_t>(n), -1);
  while (true) {
    const VertexSet G = degree.negative_support();
    if (ctx.radical_complex.is_face(G)) {
      const HomologyProfile h = clamp_profile(ctx, degree);
      for (int j = -1; j <= h.top_index(); ++j)
        if (h.at(j) != 0) table.set(j + G.size() + 1, degree, h.at(j));
    }
    int pos = 0;
    while (pos < n && degree.entries[static_cast<std::size_t>(pos)] ==
                          ctx.t[static_cast<std::size_t>(pos)] - 1) {
      degree.entries[static_cast<std::size_t>(pos)] = -1;
      ++pos;
    }
    if (pos == n) break;
    ++degree.entries[static_cast<std::size_t>(pos)];
  }
  return table;
}

int depth(const LocalCohomologyTable& table) { return table.min_nonzero_index(); }

int depth(const MonomialIdeal& I, const FieldSpec& field) {
  return depth(local_cohomology_table(I, field));
}

int krull_dim_check(const MonomialIdeal& I, const FieldSpec& field) {
  const int from_table = local_cohomology_table(I, field).max_nonzero_index();
  const int combinatorial = krull_dim(I);
  if (from_table != combinatorial)
    throw Error("krull_dim_check: table says " + std::to_string(from_table) +
                ", decomposition says " + std::to_string(combinatorial));
  return from_table;
}

bool is_cm(const MonomialIdeal& I, const FieldSpec& field) {
  const LocalCohomologyTable table = local_cohomology_table(I, field);
  return depth(table) == table.max_nonzero_index();
}

bool is_gcm(const MonomialIdeal& I, const FieldSpec& field) {
  if (!is_equidimensional(I)) return false;
  const LocalCohomologyTable table = local_cohomology_table(I, field);
  const int dim = table.max_nonzero_index();
  for (const auto& [i, row] : table.rows()) {
    if (i >= dim) continue;
    for (const auto& [degree, value] : row)
      if (!degree.negative_support().empty()) return false; // infinitely many degrees
  }
  return true;
}

bool is_buchsbaum(const MonomialIdeal& I, const FieldSpec& field) {
  detail::require_proper_nonzero(I, "is_buchsbaum");
  if (!I.is_squarefree())
    throw UnsupportedInputError(
        "is_buchsbaum: only squarefree ideals are supported (where Buchsbaum and "
        "generalized Cohen-Macaulay agree)");
  return is_gcm(I, field);
}

int a_invariant(const MonomialIdeal& I, const FieldSpec& field) {
  const LocalCohomologyTable table = local_cohomology_table(I, field);
  const int dim = table.max_nonzero_index();
  int best = 0;
  bool first = true;
  for (const auto& [degree, value] : table.rows().at(dim)) {
    const int total = degree.max_total_degree();
    if (first || total > best) best = total;
    first = false;
  }
  return best;
}

int a_invariant_bound(const MonomialIdeal& I) {
  const std::vector<int> t = t_vector(I);
  return std::accumulate(t.begin(), t.end(), 0) - I.ambient();
}

bool has_maximal_a_invariant(const MonomialIdeal& I, const FieldSpec& field) {
  return a_invariant(I, field) == a_invariant_bound(I);
}

AgreementReport radical_cohomology_agreement(const MonomialIdeal& I, const FieldSpec& field) {
  detail::require_proper_nonzero(I, "radical_cohomology_agreement");
  const MonomialIdeal rad = radical(I);
  const LocalCohomologyTable mine = local_cohomology_table(I, field);
  const LocalCohomologyTable theirs = local_cohomology_table(rad, field);
  const int n = I.ambient();
  const int top = std::max(mine.max_nonzero_index(), theirs.max_nonzero_index());

  AgreementReport report;
  // Sweep all patterns with entries in {-1, 0}; these cover exactly the
  // degrees a <= 0.  Coordinates with t_i = 0 admit only -1.
  const std::vector<int> t = t_vector(I);
  ClampedDegree degree;
  degree.entries.assign(static_cast<std::size_t>(n), -1);
  while (true) {
    for (int i = 0; i <= top; ++i) {
      const int a = mine.dimension_at(i, degree);
      const int b = theirs.dimension_at(i, degree);
      if (a != b) {
        report.agrees = false;
        report.violations.push_back({i, degree, a, b});
      }
    }
    int pos = 0;
    while (pos < n && (degree.entries[static_cast<std::size_t>(pos)] == 0 ||
                       t[static_cast<std::size_t>(pos)] == 0)) {
      degree.entries[static_cast<std::size_t>(pos)] = -1;
      ++pos;
    }
    if (pos == n) break;
    degree.entries[static_cast<std::size_t>(pos)] = 0;
  }
  return report;
}

} // namespace mf
