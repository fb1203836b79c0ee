#ifndef MONOIDFORGE_LYUBEZNIK_HPP
#define MONOIDFORGE_LYUBEZNIK_HPP

#include "monoidforge/field.hpp"
#include "monoidforge/ideal.hpp"

namespace mf {

/// Lyubeznik's size: v is the least number of primary components whose
/// support union reaches the union of all supports, h is the size of that
/// union, and size = v + (n - h) - 1.
struct SizeReport {
  int v = 0;
  int h = 0;
  int size = 0;

  friend bool operator==(const SizeReport&, const SizeReport&) = default;
};

SizeReport size_report(const MonomialIdeal& I);

struct LyubeznikReport {
  int depth = 0;
  int size = 0;
  bool holds = false;
};

/// Checks depth S/I >= size I over the given field.
LyubeznikReport check_lyubeznik_bound(const MonomialIdeal& I, const FieldSpec& field);

} // namespace mf

#endif
