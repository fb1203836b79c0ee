#include "monoidforge/field.hpp"

namespace mf {

bool is_prime_number(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(long p) {
  if (!is_prime_number(p)) throw PreconditionError("field: " + std::to_string(p) + " is not prime");
  FieldSpec f;
  f.kind = Kind::Prime;
  f.p = p;
  return f;
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.rfind("fp:", 0) == 0) {
    try {
      return prime(std::stol(text.substr(3)));
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    }
  }
  throw ParseError("field must be 'q' or 'fp:<prime>', got '" + text + "'", 0);
}

std::string FieldSpec::to_string() const {
  return kind == Kind::Rationals ? "q" : "fp:" + std::to_string(p);
}

} // namespace mf
