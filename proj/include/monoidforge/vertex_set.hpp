#ifndef MONOIDFORGE_VERTEX_SET_HPP
#define MONOIDFORGE_VERTEX_SET_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace mf {

/// Largest number of variables / vertices the engine handles.  Subsets are
/// kept in machine words, which is plenty for desk-scale inputs.
inline constexpr int kMaxVariables = 30;

/// A subset of {0, ..., n-1} stored as a bit mask.  Vertices are 0-based
/// internally; the text grammar uses 1-based names x1..xn.
class VertexSet {
public:
  constexpr VertexSet() : bits_(0) {}
  constexpr explicit VertexSet(std::uint32_t bits) : bits_(bits) {}

  static VertexSet full(int n) { return VertexSet((n >= 32) ? ~0u : ((1u << n) - 1u)); }
  static VertexSet single(int v) { return VertexSet(1u << v); }
  static VertexSet of(std::initializer_list<int> vs) {
    std::uint32_t b = 0;
    for (int v : vs) b |= 1u << v;
    return VertexSet(b);
  }
  static VertexSet from_vector(const std::vector<int>& vs) {
    std::uint32_t b = 0;
    for (int v : vs) b |= 1u << v;
    return VertexSet(b);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr VertexSet with(int v) const { return VertexSet(bits_ | (1u << v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(1u << v)); }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }

  constexpr auto operator<=>(const VertexSet&) const = default;

  /// Sorted list of members (0-based).
  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint32_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  /// Lowest member; undefined on the empty set.
  constexpr int min() const { return std::countr_zero(bits_); }

private:
  std::uint32_t bits_;
};

/// Iterates subsets of `mask` in decreasing numeric order, excluding `mask`
/// itself unless `include_self`; always ends with the empty set.
template <typename Fn>
void for_each_subset(std::uint32_t mask, Fn&& fn) {
  std::uint32_t sub = mask;
  while (true) {
    fn(sub);
    if (sub == 0) break;
    sub = (sub - 1) & mask;
  }
}

} // namespace mf

#endif
