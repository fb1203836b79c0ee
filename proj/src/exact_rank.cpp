#include "monoidforge/exact_rank.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <limits>

namespace mf {

namespace {

struct RationalOps {
  using Elem = mpq_class;
  static Elem from_long(long v) { return Elem(v); }
  static bool is_zero(const Elem& a) { return sgn(a) == 0; }
  static Elem ratio(const Elem& num, const Elem& den) { return num / den; }
  // a - f*b
  static Elem fused(const Elem& a, const Elem& f, const Elem& b) { return a - f * b; }
};

struct PrimeOps {
  using Elem = long;
  long p;
  Elem from_long(long v) const {
    long r = v % p;
    return r < 0 ? r + p : r;
  }
  static bool is_zero(Elem a) { return a == 0; }
  Elem mul(Elem a, Elem b) const { return static_cast<long>((__int128)a * b % p); }
  Elem inverse(Elem a) const {
    long t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
      long q = r / nr;
      t -= q * nt;
      std::swap(t, nt);
      r -= q * nr;
      std::swap(r, nr);
    }
    return t < 0 ? t + p : t;
  }
  Elem ratio(Elem num, Elem den) const { return mul(num, inverse(den)); }
  Elem fused(Elem a, Elem f, Elem b) const {
    long r = (a - static_cast<long>((__int128)f * b % p)) % p;
    return r < 0 ? r + p : r;
  }
};

// Sparse Gaussian elimination with a fill-reducing pivot rule: shortest
// active row, then least-populated column within it.
template <typename Ops>
int sparse_rank(const SparseIntMatrix& m, const Ops& ops) {
  using Elem = typename Ops::Elem;
  using Row = std::vector<std::pair<int, Elem>>;

  std::vector<Row> rows;
  rows.reserve(m.row_entries.size());
  std::vector<int> colcount(static_cast<std::size_t>(m.cols), 0);
  for (const auto& src : m.row_entries) {
    Row row;
    row.reserve(src.size());
    for (auto [c, v] : src) {
      Elem e = ops.from_long(v);
      if (!Ops::is_zero(e)) {
        row.emplace_back(c, std::move(e));
        ++colcount[static_cast<std::size_t>(c)];
      }
    }
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    if (!row.empty()) rows.push_back(std::move(row));
  }

  int rank = 0;
  while (!rows.empty()) {
    // Pivot search.
    std::size_t best_row = 0;
    int best_col = -1;
    long best_score = std::numeric_limits<long>::max();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (const auto& [c, v] : rows[r]) {
        long score = (static_cast<long>(rows[r].size()) - 1) *
                     (colcount[static_cast<std::size_t>(c)] - 1);
        if (score < best_score) {
          best_score = score;
          best_row = r;
          best_col = c;
        }
      }
      if (best_score == 0) break;
    }

    Row pivot = std::move(rows[best_row]);
    rows[best_row] = std::move(rows.back());
    rows.pop_back();
    for (const auto& [c, v] : pivot) --colcount[static_cast<std::size_t>(c)];
    ++rank;

    const Elem* pivot_val = nullptr;
    for (const auto& [c, v] : pivot)
      if (c == best_col) pivot_val = &v;

    for (std::size_t r = 0; r < rows.size();) {
      Row& row = rows[r];
      auto hit = std::lower_bound(row.begin(), row.end(), best_col,
                                  [](const auto& e, int c) { return e.first < c; });
      if (hit == row.end() || hit->first != best_col) {
        ++r;
        continue;
      }
      Elem factor = ops.ratio(hit->second, *pivot_val);
      Row merged;
      merged.reserve(row.size() + pivot.size());
      auto a = row.begin();
      auto b = pivot.begin();
      while (a != row.end() || b != pivot.end()) {
        if (b == pivot.end() || (a != row.end() && a->first < b->first)) {
          merged.push_back(std::move(*a++));
        } else if (a == row.end() || b->first < a->first) {
          Elem v = ops.fused(ops.from_long(0), factor, b->second);
          if (!Ops::is_zero(v)) {
            ++colcount[static_cast<std::size_t>(b->first)];
            merged.emplace_back(b->first, std::move(v));
          }
          ++b;
        } else {
          Elem v = ops.fused(a->second, factor, b->second);
          if (!Ops::is_zero(v)) {
            merged.emplace_back(a->first, std::move(v));
          } else {
            --colcount[static_cast<std::size_t>(a->first)];
          }
          ++a;
          ++b;
        }
      }
      if (merged.empty()) {
        row = std::move(rows.back());
        rows.pop_back();
      } else {
        row = std::move(merged);
        ++r;
      }
    }
  }
  return rank;
}

} // namespace

int exact_rank(const SparseIntMatrix& m, const FieldSpec& field) {
  if (m.rows == 0 || m.cols == 0) return 0;
  if (field.kind == FieldSpec::Kind::Rationals) return sparse_rank(m, RationalOps{});
  return sparse_rank(m, PrimeOps{field.p});
}

} // namespace mf
