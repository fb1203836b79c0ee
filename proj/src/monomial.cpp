#include "monoidforge/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace mf {

namespace detail {
void require_same_ambient(int lhs, int rhs) {
  if (lhs != rhs) throw AmbientMismatchError(lhs, rhs);
}
} // namespace detail

Monomial::Monomial(Exponents exponents) : exponents_(std::move(exponents)) {
  if (exponents_.empty() || exponents_.size() > static_cast<std::size_t>(kMaxVariables))
    throw PreconditionError("monomial: ambient ring must have between 1 and " +
                            std::to_string(kMaxVariables) + " variables");
  for (int e : exponents_)
    if (e < 0) throw PreconditionError("monomial: exponents must be non-negative");
}

Monomial Monomial::unit(int n) { return Monomial(Exponents(n, 0)); }

Monomial Monomial::variable(int n, int var) {
  Exponents e(n, 0);
  e.at(var) = 1;
  return Monomial(std::move(e));
}

int Monomial::total_degree() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

bool Monomial::is_unit() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](int e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](int e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
  detail::require_same_ambient(ambient(), other.ambient());
  for (int i = 0; i < ambient(); ++i)
    if (exponents_[i] > other.exponents_[i]) return false;
  return true;
}

VertexSet Monomial::support() const {
  VertexSet s;
  for (int i = 0; i < ambient(); ++i)
    if (exponents_[i] > 0) s = s.with(i);
  return s;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (auto c = ambient() <=> other.ambient(); c != 0) return c;
  if (auto c = total_degree() <=> other.total_degree(); c != 0) return c;
  return std::lexicographical_compare_three_way(exponents_.begin(), exponents_.end(),
                                                other.exponents_.begin(), other.exponents_.end());
}

VertexSet support(const Monomial& u) { return u.support(); }

Monomial reduce(const Monomial& u) {
  Exponents e(u.exponents());
  for (int& x : e) x = x > 0 ? 1 : 0;
  return Monomial(std::move(e));
}

Monomial colon(const Monomial& u, const Monomial& v) {
  detail::require_same_ambient(u.ambient(), v.ambient());
  Exponents e(u.ambient());
  for (int i = 0; i < u.ambient(); ++i) e[i] = std::max(u.exponent(i) - v.exponent(i), 0);
  return Monomial(std::move(e));
}

Monomial lcm(const Monomial& u, const Monomial& v) {
  detail::require_same_ambient(u.ambient(), v.ambient());
  Exponents e(u.ambient());
  for (int i = 0; i < u.ambient(); ++i) e[i] = std::max(u.exponent(i), v.exponent(i));
  return Monomial(std::move(e));
}

Monomial product(const Monomial& u, const Monomial& v) {
  detail::require_same_ambient(u.ambient(), v.ambient());
  Exponents e(u.ambient());
  for (int i = 0; i < u.ambient(); ++i) e[i] = u.exponent(i) + v.exponent(i);
  return Monomial(std::move(e));
}

Monomial squarefree_monomial(int n, VertexSet s) {
  Exponents e(n, 0);
  for (int v : s.to_vector()) e.at(v) = 1;
  return Monomial(std::move(e));
}

} // namespace mf
