#include "monoidforge/polarization.hpp"

#include <numeric>

namespace mf {

PolarizationRecord PolarizationRecord::identity(int n) {
  PolarizationRecord r;
  r.source_n = r.target_n = n;
  r.variable_origin.resize(static_cast<std::size_t>(n));
  std::iota(r.variable_origin.begin(), r.variable_origin.end(), 0);
  return r;
}

bool PolarizationRecord::consistent() const {
  if (target_n - source_n != static_cast<int>(steps.size())) return false;
  if (static_cast<int>(variable_origin.size()) != target_n) return false;
  for (int i = 0; i < source_n; ++i)
    if (variable_origin[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

std::pair<MonomialIdeal, PolarizationRecord> polarize_step(const MonomialIdeal& I, int var) {
  detail::require_proper_nonzero(I, "polarize_step");
  if (var < 0 || var >= I.ambient()) throw PreconditionError("polarize_step: variable out of range");
  if (t_vector(I).at(static_cast<std::size_t>(var)) < 2)
    throw PreconditionError("polarize_step: variable has no generator with exponent >= 2");
  const int n = I.ambient();
  const int fresh = n;
  std::vector<Monomial> gens;
  gens.reserve(I.generator_count());
  for (const Monomial& g : I.generators()) {
    Exponents e = g.exponents();
    e.push_back(0);
    if (e[static_cast<std::size_t>(var)] >= 2) {
      --e[static_cast<std::size_t>(var)];
      e.back() = 1;
    }
    gens.emplace_back(std::move(e));
  }
  PolarizationRecord rec = PolarizationRecord::identity(n);
  rec.target_n = n + 1;
  rec.variable_origin.push_back(var);
  rec.steps.emplace_back(var, fresh);
  return {MonomialIdeal(n + 1, std::move(gens)), rec};
}

std::pair<MonomialIdeal, PolarizationRecord> polarize(const MonomialIdeal& I) {
  detail::require_proper_nonzero(I, "polarize");
  MonomialIdeal current = I;
  PolarizationRecord rec = PolarizationRecord::identity(I.ambient());
  for (int var = 0; var < I.ambient(); ++var) {
    while (t_vector(current).at(static_cast<std::size_t>(var)) >= 2) {
      auto [next, step] = polarize_step(current, var);
      current = std::move(next);
      rec.target_n = current.ambient();
      rec.variable_origin.push_back(step.variable_origin.back());
      rec.steps.emplace_back(step.steps.front());
    }
  }
  return {current, rec};
}

MonomialIdeal depolarize_radical(const MonomialIdeal& Ip, const PolarizationRecord& record) {
  if (!record.consistent() || Ip.ambient() != record.target_n)
    throw PreconditionError("depolarize_radical: record does not match the ideal");
  std::vector<Monomial> gens;
  gens.reserve(Ip.generator_count());
  for (const Monomial& g : Ip.generators()) {
    Exponents e(static_cast<std::size_t>(record.source_n), 0);
    for (int i = 0; i < record.source_n; ++i) e[static_cast<std::size_t>(i)] = g.exponent(i);
    gens.push_back(reduce(Monomial(std::move(e))));
  }
  return MonomialIdeal(record.source_n, std::move(gens));
}

} // namespace mf
