#ifndef MONOIDFORGE_SIMPLICIAL_COMPLEX_HPP
#define MONOIDFORGE_SIMPLICIAL_COMPLEX_HPP

#include <vector>

#include "monoidforge/ideal.hpp"
#include "monoidforge/vertex_set.hpp"

namespace mf {

/// A simplicial complex on vertex set {0..n-1}, stored by its facets.
/// The void complex (no faces at all) has an empty facet list and is
/// distinct from the empty complex, whose single facet is the empty face.
class SimplicialComplex {
public:
  /// Keeps only maximal faces.  An empty list yields the void complex.
  SimplicialComplex(int n, std::vector<VertexSet> facets);

  static SimplicialComplex void_complex(int n) { return SimplicialComplex(n, {}); }
  static SimplicialComplex empty_complex(int n) { return SimplicialComplex(n, {VertexSet()}); }
  static SimplicialComplex full_simplex(int n) { return SimplicialComplex(n, {VertexSet::full(n)}); }

  int vertex_count() const { return n_; }
  const std::vector<VertexSet>& facets() const { return facets_; }

  bool is_void() const { return facets_.empty(); }
  bool is_empty_complex() const { return facets_.size() == 1 && facets_[0].empty(); }
  bool is_pure() const;

  /// Rejects the void complex.
  int dim() const;

  bool is_face(VertexSet f) const;

  /// All faces, sorted by (cardinality, mask); includes the empty face
  /// unless the complex is void.
  std::vector<VertexSet> all_faces() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
  int n_;
  std::vector<VertexSet> facets_;
};

/// Stanley-Reisner complex of a squarefree proper ideal: faces are the
/// subsets whose indicator monomial avoids I.  The zero ideal gives the
/// full simplex.
SimplicialComplex from_stanley_reisner(const MonomialIdeal& I);

/// Ideal of minimal non-faces; inverse of from_stanley_reisner.
MonomialIdeal to_stanley_reisner(const SimplicialComplex& c);

/// link(c, f) = { g : g disjoint from f, g union f a face }.
SimplicialComplex link(const SimplicialComplex& c, VertexSet f);

/// Faces contained in w.
SimplicialComplex restriction(const SimplicialComplex& c, VertexSet w);

/// { f : complement of f is not a face }.
SimplicialComplex alexander_dual(const SimplicialComplex& c);

/// Takayama's degree complex at a.  Entries of a are clamped into
/// [-1, t_i - 1] (documented semantics; the local cohomology formula only
/// ever evaluates inside that box).  Faces live in the complement of
/// G_a = { i : a_i < 0 }.
SimplicialComplex delta_a(const MonomialIdeal& I, const std::vector<int>& a);

} // namespace mf

#endif
