#include "monoidforge/simplicial_complex.hpp"

#include <algorithm>
#include <unordered_set>

namespace mf {

namespace {

constexpr int kEnumerationLimit = 20; // full-subset sweeps stay under 2^20 masks

void require_enumerable(int n, const char* op) {
  if (n > kEnumerationLimit)
    throw UnsupportedInputError(std::string(op) + ": vertex sets beyond " +
                                std::to_string(kEnumerationLimit) + " are out of desk scale");
}

bool compare_faces(VertexSet a, VertexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.bits() < b.bits();
}

// Maximal subsets of `universe` containing none of `nonfaces`.  Works in a
// compressed index space so only |universe| bits are swept.
std::vector<VertexSet> maximal_faces_avoiding(VertexSet universe,
                                              const std::vector<std::uint32_t>& nonfaces) {
  const std::vector<int> verts = universe.to_vector();
  const int k = static_cast<int>(verts.size());
  require_enumerable(k, "face enumeration");

  std::vector<int> position(kMaxVariables + 2, -1);
  for (int i = 0; i < k; ++i) position[static_cast<std::size_t>(verts[static_cast<std::size_t>(i)])] = i;

  const std::uint32_t total = 1u << k;
  std::vector<char> bad(total, 0);
  for (std::uint32_t nf : nonfaces) {
    if ((nf & ~universe.bits()) != 0) continue; // cannot fit inside the universe
    std::uint32_t compressed = 0;
    for (std::uint32_t b = nf; b; b &= b - 1)
      compressed |= 1u << position[static_cast<std::size_t>(std::countr_zero(b))];
    bad[compressed] = 1;
  }
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    if (bad[mask]) continue;
    for (int i = 0; i < k; ++i)
      if ((mask >> i) & 1u) {
        if (bad[mask & ~(1u << i)]) {
          bad[mask] = 1;
          break;
        }
      }
  }

  std::vector<VertexSet> facets;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    if (bad[mask]) continue;
    bool maximal = true;
    for (int i = 0; i < k && maximal; ++i)
      if (!((mask >> i) & 1u) && !bad[mask | (1u << i)]) maximal = false;
    if (!maximal) continue;
    std::uint32_t expanded = 0;
    for (std::uint32_t b = mask; b; b &= b - 1)
      expanded |= 1u << verts[static_cast<std::size_t>(std::countr_zero(b))];
    facets.emplace_back(expanded);
  }
  return facets;
}

} // namespace

SimplicialComplex::SimplicialComplex(int n, std::vector<VertexSet> facets) : n_(n) {
  if (n < 1 || n > kMaxVariables)
    throw PreconditionError("complex: vertex count must be between 1 and " +
                            std::to_string(kMaxVariables));
  for (VertexSet f : facets)
    if (!f.subset_of(VertexSet::full(n))) throw PreconditionError("complex: facet outside vertex set");
  std::sort(facets.begin(), facets.end(), compare_faces);
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  for (VertexSet f : facets) {
    bool maximal = true;
    for (VertexSet g : facets)
      if (g != f && f.subset_of(g)) {
        maximal = false;
        break;
      }
    if (maximal) facets_.push_back(f);
  }
}

bool SimplicialComplex::is_pure() const {
  for (VertexSet f : facets_)
    if (f.size() != facets_.front().size()) return false;
  return true;
}

int SimplicialComplex::dim() const {
  if (is_void()) throw PreconditionError("dim: the void complex has no dimension");
  int d = -1;
  for (VertexSet f : facets_) d = std::max(d, f.size() - 1);
  return d;
}

bool SimplicialComplex::is_face(VertexSet f) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](VertexSet g) { return f.subset_of(g); });
}

std::vector<VertexSet> SimplicialComplex::all_faces() const {
  std::unordered_set<std::uint32_t> seen;
  for (VertexSet f : facets_)
    for_each_subset(f.bits(), [&](std::uint32_t sub) { seen.insert(sub); });
  std::vector<VertexSet> faces;
  faces.reserve(seen.size());
  for (std::uint32_t m : seen) faces.emplace_back(m);
  std::sort(faces.begin(), faces.end(), compare_faces);
  return faces;
}

SimplicialComplex from_stanley_reisner(const MonomialIdeal& I) {
  if (!I.is_squarefree()) throw PreconditionError("from_stanley_reisner: ideal must be squarefree");
  if (I.is_unit()) throw PreconditionError("from_stanley_reisner: ideal must be proper");
  std::vector<std::uint32_t> nonfaces;
  nonfaces.reserve(I.generator_count());
  for (const Monomial& g : I.generators()) nonfaces.push_back(g.support().bits());
  return SimplicialComplex(I.ambient(),
                           maximal_faces_avoiding(VertexSet::full(I.ambient()), nonfaces));
}

MonomialIdeal to_stanley_reisner(const SimplicialComplex& c) {
  const int n = c.vertex_count();
  require_enumerable(n, "to_stanley_reisner");
  const std::uint32_t total = 1u << n;
  std::vector<char> face(total, 0);
  for (VertexSet f : c.facets())
    for_each_subset(f.bits(), [&](std::uint32_t sub) { face[sub] = 1; });
  std::vector<Monomial> gens;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    if (face[mask]) continue;
    bool minimal = true;
    for (std::uint32_t b = mask; b && minimal; b &= b - 1)
      if (!face[mask & ~(1u << std::countr_zero(b))]) minimal = false;
    if (minimal) gens.push_back(squarefree_monomial(n, VertexSet(mask)));
  }
  return MonomialIdeal(n, std::move(gens));
}

SimplicialComplex link(const SimplicialComplex& c, VertexSet f) {
  if (!c.is_face(f)) throw PreconditionError("link: not a face of the complex");
  std::vector<VertexSet> facets;
  for (VertexSet g : c.facets())
    if (f.subset_of(g)) facets.push_back(g - f);
  return SimplicialComplex(c.vertex_count(), std::move(facets));
}

SimplicialComplex restriction(const SimplicialComplex& c, VertexSet w) {
  std::vector<VertexSet> facets;
  for (VertexSet g : c.facets()) facets.push_back(g & w);
  return SimplicialComplex(c.vertex_count(), std::move(facets));
}

SimplicialComplex alexander_dual(const SimplicialComplex& c) {
  const int n = c.vertex_count();
  require_enumerable(n, "alexander_dual");
  if (c.is_void()) return SimplicialComplex::full_simplex(n);
  const VertexSet full = VertexSet::full(n);
  // Facets of the dual are complements of minimal non-faces.
  std::vector<VertexSet> facets;
  for (const Monomial& g : to_stanley_reisner(c).generators()) facets.push_back(full - g.support());
  return SimplicialComplex(n, std::move(facets));
}

SimplicialComplex delta_a(const MonomialIdeal& I, const std::vector<int>& a) {
  detail::require_proper_nonzero(I, "delta_a");
  const int n = I.ambient();
  if (static_cast<int>(a.size()) != n) throw PreconditionError("delta_a: degree vector length mismatch");
  const std::vector<int> t = t_vector(I);
  std::vector<int> clamped(a);
  for (int i = 0; i < n; ++i)
    clamped[static_cast<std::size_t>(i)] =
        std::min(std::max(clamped[static_cast<std::size_t>(i)], -1), t[static_cast<std::size_t>(i)] - 1);

  VertexSet negative;
  for (int i = 0; i < n; ++i)
    if (clamped[static_cast<std::size_t>(i)] < 0) negative = negative.with(i);
  const VertexSet universe = VertexSet::full(n) - negative;

  // sigma is a face iff every generator still exceeds the degree bound at
  // some coordinate outside L = sigma union G_a; equivalently no witness
  // set M_u fits inside sigma.
  std::vector<std::uint32_t> nonfaces;
  nonfaces.reserve(I.generator_count());
  for (const Monomial& u : I.generators()) {
    std::uint32_t witness = 0;
    for (int i : universe.to_vector())
      if (u.exponent(i) > clamped[static_cast<std::size_t>(i)]) witness |= 1u << i;
    if (witness == 0) return SimplicialComplex::void_complex(n); // u blocks every L
    nonfaces.push_back(witness);
  }
  return SimplicialComplex(n, maximal_faces_avoiding(universe, nonfaces));
}

} // namespace mf
