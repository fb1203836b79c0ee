#ifndef MONOIDFORGE_MONOMIAL_HPP
#define MONOIDFORGE_MONOMIAL_HPP

#include <compare>
#include <vector>

#include "monoidforge/errors.hpp"
#include "monoidforge/vertex_set.hpp"

namespace mf {

using Exponents = std::vector<int>;

/// A monomial in a fixed ambient ring K[x1..xn], stored as its exponent
/// vector.  The unit monomial is the all-zeros vector.  Immutable.
class Monomial {
public:
  explicit Monomial(Exponents exponents);
  static Monomial unit(int n);
  static Monomial variable(int n, int var); // var is 0-based

  int ambient() const { return static_cast<int>(exponents_.size()); }
  int exponent(int var) const { return exponents_[var]; }
  const Exponents& exponents() const { return exponents_; }

  int total_degree() const;
  bool is_unit() const;
  bool is_squarefree() const;
  bool divides(const Monomial& other) const;

  VertexSet support() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Degree-then-lex order; used only to keep generator lists canonical.
  std::strong_ordering operator<=>(const Monomial& other) const;

private:
  Exponents exponents_;
};

/// { i : x_i divides u }.
VertexSet support(const Monomial& u);

/// The squarefree monomial with the same support as u.
Monomial reduce(const Monomial& u);

/// Componentwise max(a_i - b_i, 0).
Monomial colon(const Monomial& u, const Monomial& v);

Monomial lcm(const Monomial& u, const Monomial& v);
Monomial product(const Monomial& u, const Monomial& v);

/// Indicator monomial of a vertex set.
Monomial squarefree_monomial(int n, VertexSet s);

namespace detail {
void require_same_ambient(int lhs, int rhs);
}

} // namespace mf

#endif
