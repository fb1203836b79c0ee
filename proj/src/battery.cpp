#include "monoidforge/battery.hpp"

#include <algorithm>

#include "monoidforge/betti.hpp"
#include "monoidforge/decomposition.hpp"
#include "monoidforge/local_cohomology.hpp"
#include "monoidforge/lyubeznik.hpp"
#include "monoidforge/rng.hpp"

namespace mf {

PureConfiguration::PureConfiguration(int n, std::vector<VertexSet> face_list)
    : n(n), faces(std::move(face_list)) {
  if (faces.empty()) throw PreconditionError("pure configuration: no faces");
  c = faces.front().size();
  if (c < 1) throw PreconditionError("pure configuration: faces must be nonempty");
  for (VertexSet f : faces) {
    if (!f.subset_of(VertexSet::full(n)))
      throw PreconditionError("pure configuration: face outside vertex set");
    if (f.size() != c) throw PreconditionError("pure configuration: faces of mixed cardinality");
  }
  std::vector<VertexSet> sorted(faces);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw PreconditionError("pure configuration: faces must be pairwise distinct");
}

MonomialIdeal PureConfiguration::prime_intersection() const {
  MonomialIdeal result = MonomialIdeal::unit(n);
  for (VertexSet f : faces) result = intersect(result, monomial_prime(n, f));
  return result;
}

MonomialIdeal configured_intersection(const PureConfiguration& cfg, const ExponentMatrix& exps) {
  if (exps.size() != cfg.faces.size())
    throw PreconditionError("configured_intersection: one exponent row per face required");
  MonomialIdeal result = MonomialIdeal::unit(cfg.n);
  for (std::size_t i = 0; i < cfg.faces.size(); ++i) {
    const std::vector<int> verts = cfg.faces[i].to_vector();
    if (exps[i].size() != verts.size())
      throw PreconditionError("configured_intersection: exponent row length mismatch");
    std::vector<Monomial> gens;
    for (std::size_t j = 0; j < verts.size(); ++j) {
      if (exps[i][j] < 1) throw PreconditionError("configured_intersection: exponents must be >= 1");
      Exponents e(static_cast<std::size_t>(cfg.n), 0);
      e[static_cast<std::size_t>(verts[j])] = exps[i][j];
      gens.emplace_back(std::move(e));
    }
    result = intersect(result, MonomialIdeal(cfg.n, std::move(gens)));
  }
  return result;
}

namespace {

ExponentMatrix ones_matrix(const PureConfiguration& cfg) {
  ExponentMatrix m;
  for (VertexSet f : cfg.faces) m.emplace_back(static_cast<std::size_t>(f.size()), 1);
  return m;
}

ExponentMatrix random_matrix(const PureConfiguration& cfg, int max_exp, Rng& rng) {
  ExponentMatrix m = ones_matrix(cfg);
  for (auto& row : m)
    for (int& e : row) e = rng.uniform(1, max_exp);
  return m;
}

NormalForm detect_normal_form(const PureConfiguration& cfg) {
  if (cfg.r() == 1) return NormalForm::DeletedSimplex; // a single face fits both shapes
  VertexSet all = cfg.faces.front(), core = cfg.faces.front();
  for (VertexSet f : cfg.faces) {
    all = all | f;
    core = core & f;
  }
  // Either shape pins the family up to relabeling: c-subsets of a (c+1)-set
  // miss one vertex each, and a (c-1)-core forces distinct extra vertices.
  if (all.size() == cfg.c + 1) return NormalForm::DeletedSimplex;
  if (core.size() == cfg.c - 1) return NormalForm::CommonCore;
  return NormalForm::None;
}

} // namespace

std::optional<NonCmWitness> find_noncm_witness(const PureConfiguration& cfg, const FieldSpec& field,
                                               int samples, int max_exp, std::uint64_t seed) {
  // Paper-guided exact sweep: squares on the components of A, primes
  // elsewhere.  A non-CM subfamily intersection certifies the witness.
  const int r = cfg.r();
  for (std::uint32_t pick = 1; pick < (1u << r); ++pick) {
    MonomialIdeal subfamily = MonomialIdeal::unit(cfg.n);
    for (int i = 0; i < r; ++i)
      if ((pick >> i) & 1u)
        subfamily = intersect(subfamily, monomial_prime(cfg.n, cfg.faces[static_cast<std::size_t>(i)]));
    if (is_cm(subfamily, field)) continue;

    ExponentMatrix exps = ones_matrix(cfg);
    std::vector<int> subset;
    for (int i = 0; i < r; ++i)
      if ((pick >> i) & 1u) {
        subset.push_back(i);
        for (int& e : exps[static_cast<std::size_t>(i)]) e = 2;
      }
    MonomialIdeal witness_ideal = configured_intersection(cfg, exps);
    if (is_cm(witness_ideal, field))
      throw Error("find_noncm_witness: squared witness unexpectedly Cohen-Macaulay");
    return NonCmWitness{std::move(subset), std::move(exps), std::move(witness_ideal)};
  }

  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    ExponentMatrix exps = random_matrix(cfg, max_exp, rng);
    MonomialIdeal J = configured_intersection(cfg, exps);
    if (is_cm(J, field)) continue;
    std::vector<int> subset;
    for (int i = 0; i < r; ++i)
      if (std::any_of(exps[static_cast<std::size_t>(i)].begin(), exps[static_cast<std::size_t>(i)].end(),
                      [](int e) { return e >= 2; }))
        subset.push_back(i);
    return NonCmWitness{std::move(subset), std::move(exps), std::move(J)};
  }
  return std::nullopt;
}

Thm32Report theorem32_battery(const PureConfiguration& cfg, const FieldSpec& field, int samples,
                              int max_exp, std::uint64_t seed) {
  Thm32Report report;
  const MonomialIdeal I = cfg.prime_intersection();
  report.hypothesis_cm = is_cm(I, field);
  if (!report.hypothesis_cm) return report; // distinguished status; nothing else is evaluated

  const int r = cfg.r();

  // (b) exact: all subfamily intersections.
  report.cond_b = true;
  for (std::uint32_t pick = 1; pick < (1u << r) && report.cond_b; ++pick) {
    MonomialIdeal part = MonomialIdeal::unit(cfg.n);
    for (int i = 0; i < r; ++i)
      if ((pick >> i) & 1u)
        part = intersect(part, monomial_prime(cfg.n, cfg.faces[static_cast<std::size_t>(i)]));
    report.cond_b = is_cm(part, field);
  }

  // (c) exact: pairwise unions of size c+1.
  report.cond_c = true;
  for (int i = 0; i < r && report.cond_c; ++i)
    for (int j = i + 1; j < r && report.cond_c; ++j)
      report.cond_c = (cfg.faces[static_cast<std::size_t>(i)] | cfg.faces[static_cast<std::size_t>(j)])
                          .size() == cfg.c + 1;

  // (d) exact, vacuous for r = 1.
  if (r == 1) {
    report.cond_d = true;
  } else {
    VertexSet all = cfg.faces.front(), core = cfg.faces.front();
    for (VertexSet f : cfg.faces) {
      all = all | f;
      core = core & f;
    }
    report.cond_d = all.size() == cfg.c + 1 || core.size() == cfg.c - 1;
  }

  // (e) by normal-form detection.
  report.normal_form = detect_normal_form(cfg);
  report.cond_e = report.normal_form != NormalForm::None;

  // (f) via size.
  report.cond_f = size_report(I).size == krull_dim(I);

  // (a) sampled: random exponent matrices.
  Rng rng_a(mix_seed(seed ^ 0xA));
  report.samples_a_total = samples;
  for (int s = 0; s < samples; ++s)
    if (is_cm(configured_intersection(cfg, random_matrix(cfg, max_exp, rng_a)), field))
      ++report.samples_a_cm;

  // (g) sampled: Ass-preserving ideals, one irreducible component per prime.
  Rng rng_g(mix_seed(seed ^ 0x60));
  report.samples_g_total = samples;
  for (int s = 0; s < samples; ++s)
    if (is_cm(configured_intersection(cfg, random_matrix(cfg, max_exp, rng_g)), field))
      ++report.samples_g_cm;

  if (!(report.cond_c && report.cond_d && report.cond_e && report.cond_f))
    report.witness = find_noncm_witness(cfg, field, samples, max_exp, mix_seed(seed ^ 0x57));

  const bool conds[5] = {report.cond_b, report.cond_c, report.cond_d, report.cond_e, report.cond_f};
  report.agreement.assign(5, std::vector<bool>(5, false));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) report.agreement[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = conds[i] == conds[j];
  return report;
}

Cor33Report corollary33_battery(const PureConfiguration& cfg, const FieldSpec& field, int samples,
                                int max_exp, std::uint64_t seed) {
  Cor33Report report;
  report.cond_b = cfg.r() == 1 || cfg.c == 1;

  Rng rng(seed);
  report.samples_total = samples;
  for (int s = 0; s < samples; ++s)
    if (is_gorenstein(configured_intersection(cfg, random_matrix(cfg, max_exp, rng)), field))
      ++report.samples_gorenstein;

  if (report.cond_b) return report;

  // The paper's explicit witnesses for r >= 2, c >= 2.
  const NormalForm form = detect_normal_form(cfg);
  if (form == NormalForm::CommonCore ||
      (form == NormalForm::DeletedSimplex && cfg.r() == 2)) {
    // Square one core vertex in the first component, primes elsewhere.
    VertexSet core = cfg.faces.front();
    for (VertexSet f : cfg.faces) core = core & f;
    const std::vector<int> verts = cfg.faces.front().to_vector();
    ExponentMatrix exps = ones_matrix(cfg);
    for (std::size_t j = 0; j < verts.size(); ++j)
      if (verts[j] == core.min()) exps[0][j] = 2;
    MonomialIdeal J = configured_intersection(cfg, exps);
    if (!is_gorenstein(J, field)) {
      report.non_gorenstein_witness = J;
      report.witness_kind = "common-core";
      return report;
    }
  }
  if (form == NormalForm::DeletedSimplex && cfg.r() >= 3) {
    MonomialIdeal J = monomial_prime(cfg.n, cfg.faces[0]);
    J = intersect(J, monomial_prime(cfg.n, cfg.faces[1]));
    J = intersect(J, monomial_prime(cfg.n, cfg.faces[2]));
    if (!is_gorenstein(J, field)) {
      report.non_gorenstein_witness = J;
      report.witness_kind = "triple-intersection";
      return report;
    }
  }
  // Fall back to any sampled or squared non-Gorenstein intersection.
  std::optional<NonCmWitness> fallback = find_noncm_witness(cfg, field, samples, max_exp, seed);
  if (fallback) {
    report.non_gorenstein_witness = fallback->ideal;
    report.witness_kind = "sampled";
  }
  return report;
}

} // namespace mf
