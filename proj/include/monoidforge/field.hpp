#ifndef MONOIDFORGE_FIELD_HPP
#define MONOIDFORGE_FIELD_HPP

#include <compare>
#include <string>

#include "monoidforge/errors.hpp"

namespace mf {

/// Coefficient field for homological computations: the rationals or a prime
/// field GF(p).  Property decisions are field-tagged because CM-ness and its
/// relatives depend on the characteristic.
struct FieldSpec {
  enum class Kind { Rationals, Prime };
  Kind kind = Kind::Rationals;
  long p = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(long p);

  /// "q" or "fp:<p>".
  static FieldSpec parse(const std::string& text);
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
  auto operator<=>(const FieldSpec&) const = default;
};

bool is_prime_number(long p);

} // namespace mf

#endif
