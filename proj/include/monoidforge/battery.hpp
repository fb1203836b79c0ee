#ifndef MONOIDFORGE_BATTERY_HPP
#define MONOIDFORGE_BATTERY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monoidforge/field.hpp"
#include "monoidforge/ideal.hpp"

namespace mf {

/// A family of pairwise distinct faces of [n], all of the same cardinality;
/// the intersection of their monomial primes is the squarefree ideal the
/// condition battery revolves around.
struct PureConfiguration {
  int n = 0;
  int c = 0;
  std::vector<VertexSet> faces;

  PureConfiguration(int n, std::vector<VertexSet> faces);

  int r() const { return static_cast<int>(faces.size()); }
  MonomialIdeal prime_intersection() const;

  friend bool operator==(const PureConfiguration&, const PureConfiguration&) = default;
};

/// Exponent choices a_{ij} >= 1 for the components Q_{F_i}; row i matches
/// faces[i], with one entry per member of the face (ascending order).
using ExponentMatrix = std::vector<std::vector<int>>;

/// Builds the intersection of the components (x_j^{a_ij} : j in F_i).
MonomialIdeal configured_intersection(const PureConfiguration& cfg, const ExponentMatrix& exps);

/// Detected shape behind condition (e): all faces are c-subsets of a
/// (c+1)-set, or share a common (c-1)-core with distinct extra vertices.
enum class NormalForm { None, DeletedSimplex, CommonCore };

struct NonCmWitness {
  std::vector<int> subset;   // component indices, 0-based
  ExponentMatrix exponents;  // the certified exponent matrix
  MonomialIdeal ideal;       // the non-CM intersection built from it
};

struct Thm32Report {
  bool hypothesis_cm = false; // whole battery is conditional on this
  bool cond_b = false;        // every subfamily intersection is CM
  bool cond_c = false;        // pairwise unions of size c+1
  bool cond_d = false;        // union c+1 or intersection c-1
  bool cond_e = false;        // normal-form detection
  bool cond_f = false;        // size = dim
  NormalForm normal_form = NormalForm::None;
  int samples_a_cm = 0, samples_a_total = 0; // random exponent matrices
  int samples_g_cm = 0, samples_g_total = 0; // random Ass-preserving ideals
  std::optional<NonCmWitness> witness;
  /// Pairwise agreement of (b), (c), (d), (e), (f), row-major 5x5.
  std::vector<std::vector<bool>> agreement;
};

Thm32Report theorem32_battery(const PureConfiguration& cfg, const FieldSpec& field,
                              int samples, int max_exp, std::uint64_t seed);

/// Exact sweep over subsets A with squares on the chosen components, as in
/// the paper's implication (a) => (b), then random sampling.
std::optional<NonCmWitness> find_noncm_witness(const PureConfiguration& cfg, const FieldSpec& field,
                                               int samples, int max_exp, std::uint64_t seed);

struct Cor33Report {
  bool cond_b = false; // r = 1 or c = 1
  int samples_gorenstein = 0, samples_total = 0;
  std::optional<MonomialIdeal> non_gorenstein_witness;
  std::string witness_kind; // "common-core", "triple-intersection", "sampled", or ""
};

Cor33Report corollary33_battery(const PureConfiguration& cfg, const FieldSpec& field, int samples,
                                int max_exp, std::uint64_t seed);

} // namespace mf

#endif
