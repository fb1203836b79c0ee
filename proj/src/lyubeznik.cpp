#include "monoidforge/lyubeznik.hpp"

#include <algorithm>

#include "monoidforge/decomposition.hpp"
#include "monoidforge/local_cohomology.hpp"

namespace mf {

SizeReport size_report(const MonomialIdeal& I) {
  detail::require_proper_nonzero(I, "size");
  // Components grouped by associated prime; v and h only see the supports.
  const std::vector<VertexSet> supports = associated_primes(I);
  VertexSet full;
  for (VertexSet s : supports) full = full | s;

  const std::size_t r = supports.size();
  int v = static_cast<int>(r);
  for (std::uint32_t pick = 1; pick < (1u << r); ++pick) {
    VertexSet covered;
    for (std::size_t j = 0; j < r; ++j)
      if ((pick >> j) & 1u) covered = covered | supports[j];
    if (covered == full) v = std::min(v, std::popcount(pick));
  }

  SizeReport report;
  report.v = v;
  report.h = full.size();
  report.size = v + (I.ambient() - report.h) - 1;
  return report;
}

LyubeznikReport check_lyubeznik_bound(const MonomialIdeal& I, const FieldSpec& field) {
  LyubeznikReport report;
  report.depth = depth(I, field);
  report.size = size_report(I).size;
  report.holds = report.depth >= report.size;
  return report;
}

} // namespace mf
