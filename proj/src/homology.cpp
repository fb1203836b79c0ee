#include "monoidforge/homology.hpp"

#include <unordered_map>

#include "monoidforge/exact_rank.hpp"

namespace mf {

namespace {

// A cone has vanishing reduced homology; detecting an apex saves the bulk
// of the matrix work in the degree-complex sweeps.
bool has_cone_apex(const SimplicialComplex& c) {
  if (c.facets().empty() || c.facets().front().empty()) return false;
  VertexSet common = c.facets().front();
  for (VertexSet f : c.facets()) common = common & f;
  return !common.empty();
}

} // namespace

HomologyProfile reduced_homology(const SimplicialComplex& c, const FieldSpec& field) {
  HomologyProfile profile;
  if (c.is_void()) return profile;

  const int top = c.dim();
  profile.dims.assign(static_cast<std::size_t>(top + 2), 0);
  if (has_cone_apex(c)) return profile;

  // Faces grouped by dimension, with dense indices per layer.
  std::vector<std::vector<std::uint32_t>> layer(static_cast<std::size_t>(top + 1));
  for (VertexSet f : c.all_faces())
    if (!f.empty()) layer[static_cast<std::size_t>(f.size() - 1)].push_back(f.bits());
  std::vector<std::unordered_map<std::uint32_t, int>> index(layer.size());
  for (std::size_t d = 0; d < layer.size(); ++d)
    for (std::size_t i = 0; i < layer[d].size(); ++i)
      index[d][layer[d][i]] = static_cast<int>(i);

  // ranks[j] = rank of the boundary map from j-chains to (j-1)-chains.
  std::vector<int> ranks(static_cast<std::size_t>(top + 2), 0);
  if (!layer.empty() && !layer[0].empty()) ranks[0] = 1; // augmentation onto K
  for (int j = 1; j <= top; ++j) {
    SparseIntMatrix m;
    m.rows = static_cast<int>(layer[static_cast<std::size_t>(j)].size());
    m.cols = static_cast<int>(layer[static_cast<std::size_t>(j - 1)].size());
    m.row_entries.resize(static_cast<std::size_t>(m.rows));
    for (int r = 0; r < m.rows; ++r) {
      const std::uint32_t face = layer[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)];
      int k = 0;
      long sign = 1;
      for (std::uint32_t b = face; b; b &= b - 1, ++k, sign = -sign) {
        const std::uint32_t sub = face & ~(b & (~b + 1));
        m.add_entry(r, index[static_cast<std::size_t>(j - 1)].at(sub), sign);
      }
    }
    ranks[static_cast<std::size_t>(j)] = exact_rank(m, field);
  }

  const auto count = [&](int j) {
    if (j == -1) return 1;
    return static_cast<int>(layer[static_cast<std::size_t>(j)].size());
  };
  for (int j = -1; j <= top; ++j) {
    const int out = j >= 0 ? ranks[static_cast<std::size_t>(j)] : 0;
    const int in = j + 1 <= top ? ranks[static_cast<std::size_t>(j + 1)] : 0;
    profile.dims[static_cast<std::size_t>(j + 1)] = count(j) - out - in;
  }
  return profile;
}

} // namespace mf
