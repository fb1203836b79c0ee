#include "monoidforge/shellability.hpp"

#include <algorithm>
#include <unordered_set>

#include "monoidforge/homology.hpp"

namespace mf {

namespace {

// The candidate facet attaches cleanly iff each intersection with an
// earlier facet extends to one of full codimension-one size.
bool attaches(VertexSet candidate, const std::vector<VertexSet>& placed) {
  for (VertexSet earlier : placed) {
    const VertexSet cut = candidate & earlier;
    bool covered = false;
    for (VertexSet other : placed) {
      const VertexSet big = candidate & other;
      if (big.size() == candidate.size() - 1 && cut.subset_of(big)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

struct ShellingSearch {
  std::vector<VertexSet> facets; // sorted by decreasing size
  std::unordered_set<std::uint64_t> dead;
  std::vector<VertexSet> order;

  bool extend(std::uint64_t used, std::vector<VertexSet>& placed) {
    if (placed.size() == facets.size()) return true;
    if (dead.contains(used)) return false;
    // In a weakly decreasing shelling the next facet is always of maximal
    // size among the unused ones.
    int next_size = -1;
    for (std::size_t i = 0; i < facets.size(); ++i)
      if (!(used & (1ull << i))) {
        next_size = facets[i].size();
        break;
      }
    const int min_dim_used = placed.empty() ? kMaxVariables + 1 : placed.back().size();
    if (next_size <= min_dim_used) {
      for (std::size_t i = 0; i < facets.size(); ++i) {
        if (used & (1ull << i)) continue;
        if (facets[i].size() != next_size) break; // sorted by decreasing size
        if (!placed.empty() && !attaches(facets[i], placed)) continue;
        placed.push_back(facets[i]);
        if (extend(used | (1ull << i), placed)) return true;
        placed.pop_back();
      }
    }
    dead.insert(used);
    return false;
  }
};

} // namespace

std::optional<std::vector<VertexSet>> find_shelling(const SimplicialComplex& c) {
  if (c.is_void()) throw PreconditionError("find_shelling: void complex");
  if (c.facets().size() > 48)
    throw UnsupportedInputError("find_shelling: facet count beyond desk scale");
  ShellingSearch search;
  search.facets = c.facets();
  std::sort(search.facets.begin(), search.facets.end(),
            [](VertexSet a, VertexSet b) { return a.size() > b.size(); });
  std::vector<VertexSet> placed;
  if (search.extend(0, placed)) return placed;
  return std::nullopt;
}

bool is_shellable(const SimplicialComplex& c) { return find_shelling(c).has_value(); }

bool reisner_cm(const SimplicialComplex& c, const FieldSpec& field) {
  if (c.is_void()) throw PreconditionError("reisner_cm: void complex");
  for (VertexSet f : c.all_faces()) {
    const SimplicialComplex lk = link(c, f);
    const int top = lk.dim();
    const HomologyProfile h = reduced_homology(lk, field);
    for (int j = -1; j < top; ++j)
      if (h.at(j) != 0) return false;
  }
  return true;
}

} // namespace mf
