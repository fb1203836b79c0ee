#ifndef MONOIDFORGE_EXACT_RANK_HPP
#define MONOIDFORGE_EXACT_RANK_HPP

#include <utility>
#include <vector>

#include "monoidforge/field.hpp"

namespace mf {

/// Integer matrix in sparse row form.  Boundary maps of chain complexes
/// land here; entries are tiny but ranks must be exact.
struct SparseIntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, long>>> row_entries; // per row: (col, value), cols ascending

  void add_entry(int r, int c, long v) { row_entries[static_cast<std::size_t>(r)].emplace_back(c, v); }
};

/// Exact rank over the given field.  Rationals use exact fraction
/// arithmetic (GMP); GF(p) eliminates modulo p.  No tolerances anywhere.
int exact_rank(const SparseIntMatrix& m, const FieldSpec& field);

} // namespace mf

#endif
