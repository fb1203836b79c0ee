#include "monoidforge/betti.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "monoidforge/decomposition.hpp"
#include "monoidforge/exact_rank.hpp"
#include "monoidforge/homology.hpp"
#include "monoidforge/local_cohomology.hpp"

namespace mf {

void BettiTable::add(int i, const Exponents& b, long value) {
  if (value != 0) entries_[i][b] += value;
}

long BettiTable::at(int i, const Exponents& b) const {
  auto row = entries_.find(i);
  if (row == entries_.end()) return 0;
  auto hit = row->second.find(b);
  return hit == row->second.end() ? 0 : hit->second;
}

std::map<std::pair<int, int>, long> BettiTable::totals() const {
  std::map<std::pair<int, int>, long> t;
  for (const auto& [i, row] : entries_)
    for (const auto& [b, v] : row)
      t[{i, std::accumulate(b.begin(), b.end(), 0)}] += v;
  return t;
}

long BettiTable::total_at(int i) const {
  auto row = entries_.find(i);
  if (row == entries_.end()) return 0;
  long sum = 0;
  for (const auto& [b, v] : row) sum += v;
  return sum;
}

int BettiTable::projective_dimension() const {
  int pd = 0;
  for (const auto& [i, row] : entries_)
    if (!row.empty()) pd = std::max(pd, i);
  return pd;
}

std::vector<int> BettiTable::last_shifts() const {
  std::vector<int> shifts;
  const int pd = projective_dimension();
  auto row = entries_.find(pd);
  if (row == entries_.end()) return shifts;
  for (const auto& [b, v] : row->second) {
    const int total = std::accumulate(b.begin(), b.end(), 0);
    for (long k = 0; k < v; ++k) shifts.push_back(total);
  }
  std::sort(shifts.begin(), shifts.end());
  return shifts;
}

namespace {

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : e) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

// Closure of the generator degrees under pairwise lcm; excludes the origin.
std::vector<Exponents> lcm_lattice(const MonomialIdeal& I) {
  std::unordered_set<Exponents, ExponentsHash> seen;
  std::vector<Exponents> queue;
  for (const Monomial& g : I.generators())
    if (seen.insert(g.exponents()).second) queue.push_back(g.exponents());
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const Exponents current = queue[k];
    for (const Monomial& g : I.generators()) {
      Exponents join(current.size());
      for (std::size_t i = 0; i < join.size(); ++i)
        join[i] = std::max(current[i], g.exponent(static_cast<int>(i)));
      if (seen.insert(join).second) queue.push_back(join);
    }
  }
  return queue;
}

// Membership sweep for the squarefree fast path: in[mask] says whether the
// squarefree monomial on `mask` lies in I.
std::vector<char> squarefree_membership(const MonomialIdeal& I) {
  const int n = I.ambient();
  std::vector<char> in(static_cast<std::size_t>(1) << n, 0);
  for (const Monomial& g : I.generators()) in[g.support().bits()] = 1;
  for (std::uint32_t mask = 0; mask < in.size(); ++mask) {
    if (in[mask]) continue;
    for (std::uint32_t b = mask; b; b &= b - 1)
      if (in[mask & ~(b & (~b + 1))]) {
        in[mask] = 1;
        break;
      }
  }
  return in;
}

// Upper Koszul complex at multidegree b, as its facet list.
SimplicialComplex upper_koszul_complex(const MonomialIdeal& I, const Exponents& b,
                                       const std::vector<char>* sf_membership) {
  const int n = I.ambient();
  VertexSet supp;
  for (int i = 0; i < n; ++i)
    if (b[static_cast<std::size_t>(i)] > 0) supp = supp.with(i);

  const auto is_member = [&](std::uint32_t sigma) {
    if (sf_membership) return (*sf_membership)[supp.bits() & ~sigma] != 0;
    Exponents rest(b);
    for (std::uint32_t m = sigma; m; m &= m - 1) --rest[static_cast<std::size_t>(std::countr_zero(m))];
    return I.contains(Monomial(rest));
  };

  // Faces are downward closed, so collect maximal members directly.
  std::vector<char> face(static_cast<std::size_t>(1) << supp.size(), 0);
  const std::vector<int> verts = supp.to_vector();
  const std::uint32_t total = 1u << verts.size();
  const auto expand = [&](std::uint32_t compressed) {
    std::uint32_t out = 0;
    for (std::uint32_t m = compressed; m; m &= m - 1)
      out |= 1u << verts[static_cast<std::size_t>(std::countr_zero(m))];
    return out;
  };
  for (std::uint32_t mask = 0; mask < total; ++mask) face[mask] = is_member(expand(mask)) ? 1 : 0;

  std::vector<VertexSet> facets;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    if (!face[mask]) continue;
    bool maximal = true;
    for (std::size_t i = 0; i < verts.size() && maximal; ++i)
      if (!((mask >> i) & 1u) && face[mask | (1u << i)]) maximal = false;
    if (maximal) facets.emplace_back(expand(mask));
  }
  return SimplicialComplex(n, std::move(facets));
}

} // namespace

BettiTable betti_koszul(const MonomialIdeal& I, const FieldSpec& field) {
  detail::require_proper_nonzero(I, "betti_koszul");
  const int n = I.ambient();
  BettiTable table(n);
  table.add(0, Exponents(static_cast<std::size_t>(n), 0), 1);

  std::vector<char> sf;
  const bool fast_path = I.is_squarefree() && n <= 20;
  if (fast_path) sf = squarefree_membership(I);

  for (const Exponents& b : lcm_lattice(I)) {
    const SimplicialComplex kb = upper_koszul_complex(I, b, fast_path ? &sf : nullptr);
    const HomologyProfile h = reduced_homology(kb, field);
    for (int j = -1; j <= h.top_index(); ++j)
      if (h.at(j) != 0) table.add(j + 2, b, h.at(j));
  }
  return table;
}

BettiTable betti_taylor(const MonomialIdeal& I, const FieldSpec& field, std::size_t max_gens) {
  detail::require_proper_nonzero(I, "betti_taylor");
  const std::size_t m = I.generator_count();
  if (m > max_gens)
    throw UnsupportedInputError("betti_taylor: " + std::to_string(m) +
                                " generators exceed the strand bound of " + std::to_string(max_gens));
  const int n = I.ambient();

  // lcm over each subset of generators, by dynamic programming.
  const std::uint32_t total = 1u << m;
  std::vector<Exponents> joins(total, Exponents(static_cast<std::size_t>(n), 0));
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    const int g = std::countr_zero(mask);
    const Exponents& prev = joins[mask & (mask - 1)];
    Exponents& here = joins[mask];
    for (int i = 0; i < n; ++i)
      here[static_cast<std::size_t>(i)] =
          std::max(prev[static_cast<std::size_t>(i)],
                   I.generators()[static_cast<std::size_t>(g)].exponent(i));
  }

  std::unordered_map<Exponents, std::vector<std::uint32_t>, ExponentsHash> strands;
  for (std::uint32_t mask = 0; mask < total; ++mask) strands[joins[mask]].push_back(mask);

  BettiTable table(n);
  for (const auto& [b, members] : strands) {
    std::unordered_map<std::uint32_t, int> index;
    std::vector<std::vector<std::uint32_t>> by_card(m + 1);
    for (std::uint32_t mask : members) by_card[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
    for (std::size_t card = 0; card <= m; ++card)
      for (std::size_t i = 0; i < by_card[card].size(); ++i)
        index[by_card[card][i]] = static_cast<int>(i);

    // rank of the strand differential from cardinality c to c-1.
    std::vector<int> ranks(m + 2, 0);
    for (std::size_t c = 1; c <= m; ++c) {
      if (by_card[c].empty()) continue;
      SparseIntMatrix mat;
      mat.rows = static_cast<int>(by_card[c].size());
      mat.cols = static_cast<int>(by_card[c - 1].size());
      mat.row_entries.resize(static_cast<std::size_t>(mat.rows));
      for (int r = 0; r < mat.rows; ++r) {
        const std::uint32_t tau = by_card[c][static_cast<std::size_t>(r)];
        int pos = 0;
        long sign = 1;
        for (std::uint32_t bmask = tau; bmask; bmask &= bmask - 1, ++pos, sign = -sign) {
          const std::uint32_t sub = tau & ~(bmask & (~bmask + 1));
          if (joins[sub] == b) mat.add_entry(r, index.at(sub), sign);
        }
      }
      ranks[c] = exact_rank(mat, field);
    }
    for (std::size_t c = 0; c <= m; ++c) {
      const long dim = static_cast<long>(by_card[c].size()) - ranks[c] - ranks[c + 1];
      if (dim != 0) table.add(static_cast<int>(c), b, dim);
    }
  }
  return table;
}

int projective_dimension(const MonomialIdeal& I, const FieldSpec& field) {
  return betti_koszul(I, field).projective_dimension();
}

int depth_ab(const MonomialIdeal& I, const FieldSpec& field) {
  return I.ambient() - projective_dimension(I, field);
}

bool is_gorenstein(const MonomialIdeal& I, const FieldSpec& field) {
  detail::require_proper_nonzero(I, "is_gorenstein");
  if (!is_cm(I, field)) return false;
  return betti_koszul(I, field).total_at(height(I)) == 1;
}

std::vector<int> last_shifts(const MonomialIdeal& I, const FieldSpec& field) {
  detail::require_proper_nonzero(I, "last_shifts");
  return betti_koszul(I, field).last_shifts();
}

bool is_level(const MonomialIdeal& I, const FieldSpec& field) {
  detail::require_proper_nonzero(I, "is_level");
  if (!is_cm(I, field)) return false;
  const std::vector<int> shifts = last_shifts(I, field);
  return std::adjacent_find(shifts.begin(), shifts.end(), std::not_equal_to<>()) == shifts.end();
}

MonomialIdeal degree_component(const MonomialIdeal& I, int d) {
  detail::require_proper_nonzero(I, "degree_component");
  int dmin = I.generators().front().total_degree();
  for (const Monomial& g : I.generators()) dmin = std::min(dmin, g.total_degree());
  if (d < dmin) throw PreconditionError("degree_component: degree below the least generator degree");

  const int n = I.ambient();
  std::set<Exponents> found;
  // Degree-d multiples of each generator, via an odometer over the cofactor.
  for (const Monomial& g : I.generators()) {
    const int extra = d - g.total_degree();
    if (extra < 0) continue;
    Exponents cofactor(static_cast<std::size_t>(n), 0);
    cofactor[0] = extra;
    while (true) {
      Exponents e = g.exponents();
      for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] += cofactor[static_cast<std::size_t>(i)];
      found.insert(std::move(e));
      // next composition of `extra` into n parts
      int pos = 0;
      while (pos < n - 1 && cofactor[static_cast<std::size_t>(pos)] == 0) ++pos;
      if (pos == n - 1) break;
      const int head = cofactor[static_cast<std::size_t>(pos)];
      cofactor[static_cast<std::size_t>(pos)] = 0;
      cofactor[0] = head - 1;
      ++cofactor[static_cast<std::size_t>(pos + 1)];
    }
  }
  std::vector<Monomial> gens;
  gens.reserve(found.size());
  for (const Exponents& e : found) gens.emplace_back(e);
  return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal squarefree_degree_component(const MonomialIdeal& I, int d) {
  detail::require_proper_nonzero(I, "squarefree_degree_component");
  if (!I.is_squarefree())
    throw PreconditionError("squarefree_degree_component: ideal must be squarefree");
  const int n = I.ambient();
  if (n > 20)
    throw UnsupportedInputError("squarefree_degree_component: vertex sets beyond 20 are out of desk scale");
  const std::vector<char> membership = squarefree_membership(I);
  std::vector<Monomial> gens;
  for (std::uint32_t mask = 0; mask < membership.size(); ++mask)
    if (membership[mask] && std::popcount(mask) == d)
      gens.push_back(squarefree_monomial(n, VertexSet(mask)));
  return MonomialIdeal(n, std::move(gens));
}

bool has_linear_resolution(const MonomialIdeal& I, const FieldSpec& field) {
  detail::require_proper_nonzero(I, "has_linear_resolution");
  const int d0 = I.generators().front().total_degree();
  for (const Monomial& g : I.generators())
    if (g.total_degree() != d0)
      throw UnsupportedInputError("has_linear_resolution: generators of mixed degrees");

  std::vector<char> sf;
  const bool fast_path = I.is_squarefree() && I.ambient() <= 20;
  if (fast_path) sf = squarefree_membership(I);

  for (const Exponents& b : lcm_lattice(I)) {
    const int total = std::accumulate(b.begin(), b.end(), 0);
    const SimplicialComplex kb = upper_koszul_complex(I, b, fast_path ? &sf : nullptr);
    const HomologyProfile h = reduced_homology(kb, field);
    for (int j = -1; j <= h.top_index(); ++j)
      if (h.at(j) != 0 && j != total - d0 - 1) return false;
  }
  return true;
}

bool is_componentwise_linear(const MonomialIdeal& I, const FieldSpec& field) {
  detail::require_proper_nonzero(I, "is_componentwise_linear");
  int dmin = I.generators().front().total_degree();
  int dmax = dmin;
  for (const Monomial& g : I.generators()) {
    dmin = std::min(dmin, g.total_degree());
    dmax = std::max(dmax, g.total_degree());
  }
  // One probe degree past the top checks the stabilization assumption.
  for (int d = dmin; d <= dmax + 1; ++d) {
    MonomialIdeal component =
        I.is_squarefree() ? squarefree_degree_component(I, d) : degree_component(I, d);
    if (component.is_zero()) continue;
    if (!has_linear_resolution(component, field)) return false;
  }
  return true;
}

} // namespace mf
