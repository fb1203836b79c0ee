#include "monoidforge/ideal.hpp"

#include <algorithm>

namespace mf {

namespace detail {
void require_proper_nonzero(const MonomialIdeal& I, const char* op) {
  if (I.is_zero() || I.is_unit()) throw ZeroOrUnitIdealError(op);
}
} // namespace detail

MonomialIdeal::MonomialIdeal(int n, std::vector<Monomial> generators) : n_(n) {
  if (n < 1 || n > kMaxVariables)
    throw PreconditionError("ideal: ambient ring must have between 1 and " +
                            std::to_string(kMaxVariables) + " variables");
  for (const Monomial& g : generators) detail::require_same_ambient(n, g.ambient());
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  // Divisibility pruning.  Sorted by degree, so divisors precede multiples.
  for (const Monomial& g : generators) {
    bool redundant = false;
    for (const Monomial& kept : gens_)
      if (kept.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) gens_.push_back(g);
  }
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& u) const {
  detail::require_same_ambient(n_, u.ambient());
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(u); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  detail::require_same_ambient(n_, other.n_);
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Monomial& g) { return contains(g); });
}

MonomialIdeal minimalize(int n, std::vector<Monomial> generators) {
  return MonomialIdeal(n, std::move(generators));
}

MonomialIdeal radical(const MonomialIdeal& I) {
  std::vector<Monomial> gens;
  gens.reserve(I.generator_count());
  for (const Monomial& g : I.generators()) gens.push_back(reduce(g));
  return MonomialIdeal(I.ambient(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  detail::require_same_ambient(I.ambient(), J.ambient());
  if (I.is_zero() || J.is_zero()) return MonomialIdeal::zero(I.ambient());
  std::vector<Monomial> gens;
  gens.reserve(I.generator_count() * J.generator_count());
  for (const Monomial& u : I.generators())
    for (const Monomial& v : J.generators()) gens.push_back(lcm(u, v));
  return MonomialIdeal(I.ambient(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& v) {
  detail::require_same_ambient(I.ambient(), v.ambient());
  std::vector<Monomial> gens;
  gens.reserve(I.generator_count());
  for (const Monomial& u : I.generators()) gens.push_back(colon(u, v));
  return MonomialIdeal(I.ambient(), std::move(gens));
}

MonomialIdeal add_generator(const MonomialIdeal& I, const Monomial& u) {
  std::vector<Monomial> gens = I.generators();
  gens.push_back(u);
  return MonomialIdeal(I.ambient(), std::move(gens));
}

std::vector<int> t_vector(const MonomialIdeal& I) {
  detail::require_proper_nonzero(I, "t_vector");
  std::vector<int> t(I.ambient(), 0);
  for (const Monomial& g : I.generators())
    for (int i = 0; i < I.ambient(); ++i) t[i] = std::max(t[i], g.exponent(i));
  return t;
}

MonomialIdeal monomial_prime(int n, VertexSet F) {
  std::vector<Monomial> gens;
  for (int v : F.to_vector()) gens.push_back(Monomial::variable(n, v));
  return MonomialIdeal(n, std::move(gens));
}

} // namespace mf
