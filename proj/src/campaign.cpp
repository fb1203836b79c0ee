#include "monoidforge/campaign.hpp"

#include <algorithm>
#include <chrono>

#include "monoidforge/betti.hpp"
#include "monoidforge/clean.hpp"
#include "monoidforge/filtration.hpp"
#include "monoidforge/local_cohomology.hpp"
#include "monoidforge/lyubeznik.hpp"
#include "monoidforge/parallel.hpp"
#include "monoidforge/polarization.hpp"
#include "monoidforge/random_inputs.hpp"
#include "monoidforge/rng.hpp"
#include "monoidforge/shellability.hpp"
#include "monoidforge/text_io.hpp"

namespace mf {

namespace {

using Clock = std::chrono::steady_clock;

// Per-item findings, merged in index order so outcomes are deterministic.
struct Collector {
  CampaignOutcome outcome;
  std::vector<std::vector<std::string>> per_item;
  std::vector<int> per_item_checks;

  explicit Collector(std::string name, std::size_t count) {
    outcome.name = std::move(name);
    outcome.count = static_cast<int>(count);
    per_item.resize(count);
    per_item_checks.assign(count, 0);
  }

  void finish(Clock::time_point started) {
    for (std::size_t i = 0; i < per_item.size(); ++i) {
      outcome.checks += per_item_checks[i];
      for (std::string& note : per_item[i]) {
        ++outcome.violations;
        if (outcome.notes.size() < 50) outcome.notes.push_back(std::move(note));
      }
    }
    outcome.elapsed_seconds =
        std::chrono::duration<double>(Clock::now() - started).count();
  }
};

// Field-tagged property snapshot sharing one cohomology table and one
// Betti table per ideal.
struct PropertySnapshot {
  int depth = 0;
  int dim = 0;
  bool cm = false;
  bool gcm = false;
  bool gorenstein = false;
  bool level = false;
  bool maximal_a = false;
  int a_invariant = 0;
};

PropertySnapshot snapshot(const MonomialIdeal& I, const FieldSpec& field) {
  PropertySnapshot s;
  const LocalCohomologyTable table = local_cohomology_table(I, field);
  s.depth = depth(table);
  s.dim = table.max_nonzero_index();
  s.cm = s.depth == s.dim;

  s.gcm = is_equidimensional(I);
  if (s.gcm)
    for (const auto& [i, row] : table.rows()) {
      if (i >= s.dim || !s.gcm) break;
      for (const auto& [degree, value] : row)
        if (!degree.negative_support().empty()) {
          s.gcm = false;
          break;
        }
    }

  int best = 0;
  bool first = true;
  for (const auto& [degree, value] : table.rows().at(s.dim)) {
    const int total = degree.max_total_degree();
    if (first || total > best) best = total;
    first = false;
  }
  s.a_invariant = best;
  s.maximal_a = s.a_invariant == a_invariant_bound(I);

  if (s.cm) {
    const BettiTable betti = betti_koszul(I, field);
    s.gorenstein = betti.total_at(height(I)) == 1;
    const std::vector<int> shifts = betti.last_shifts();
    s.level = !shifts.empty() && shifts.front() == shifts.back();
  }
  return s;
}

std::string describe(const MonomialIdeal& I, const FieldSpec& field, const char* what) {
  return std::string(what) + " fails for " + print_ideal(I) + " over " + field.to_string();
}

} // namespace

CampaignOutcome run_campaign_theorem26(const CampaignConfig& config) {
  const auto started = Clock::now();
  Collector collector("theorem26", static_cast<std::size_t>(config.count));
  parallel_for(static_cast<std::size_t>(config.count), [&](std::size_t item) {
    const MonomialIdeal I = random_monomial_ideal(config.n, config.max_exp, config.max_gens,
                                                  mix_seed(config.seed ^ (item + 1)));
    const MonomialIdeal rad = radical(I);
    if (rad == I) return; // transfers are vacuous for squarefree inputs
    auto& notes = collector.per_item[item];
    auto& checks = collector.per_item_checks[item];

    for (const FieldSpec& field : config.fields) {
      const PropertySnapshot mine = snapshot(I, field);
      const PropertySnapshot theirs = snapshot(rad, field);
      ++checks;
      if (mine.cm && !theirs.cm) notes.push_back(describe(I, field, "CM transfer"));
      ++checks;
      if (mine.gorenstein && !theirs.gorenstein)
        notes.push_back(describe(I, field, "Gorenstein transfer"));
      ++checks;
      if (mine.gcm && !theirs.gcm) notes.push_back(describe(I, field, "generalized CM transfer"));
      ++checks;
      if (mine.level && mine.maximal_a && !(theirs.level && theirs.maximal_a))
        notes.push_back(describe(I, field, "level + maximal a-invariant transfer"));
      ++checks;
      if (is_sequentially_cm(I, field) && !is_sequentially_cm(rad, field))
        notes.push_back(describe(I, field, "sequentially CM transfer"));
    }
    ++checks;
    if (is_clean(I) && !is_clean(rad))
      notes.push_back("clean transfer fails for " + print_ideal(I));
  });
  collector.finish(started);
  return collector.outcome;
}

CampaignOutcome run_campaign_cor22(const CampaignConfig& config) {
  const auto started = Clock::now();
  Collector collector("cor22", static_cast<std::size_t>(config.count));
  parallel_for(static_cast<std::size_t>(config.count), [&](std::size_t item) {
    const MonomialIdeal I = random_monomial_ideal(config.n, config.max_exp, config.max_gens,
                                                  mix_seed(config.seed ^ (item + 1)));
    for (const FieldSpec& field : config.fields) {
      ++collector.per_item_checks[item];
      if (a_invariant(I, field) > a_invariant_bound(I))
        collector.per_item[item].push_back(describe(I, field, "a-invariant bound"));
    }
  });
  collector.finish(started);

  // The bound is attained exactly on (x1^2).
  const MonomialIdeal witness = parse_ideal("1; x1^2");
  ++collector.outcome.checks;
  if (a_invariant(witness, FieldSpec::rationals()) != 1 || a_invariant_bound(witness) != 1) {
    ++collector.outcome.violations;
    collector.outcome.notes.push_back("a((x1^2)) != 1");
  }
  return collector.outcome;
}

CampaignOutcome run_campaign_cor24(const CampaignConfig& config) {
  const auto started = Clock::now();
  Collector collector("cor24", static_cast<std::size_t>(config.count));
  parallel_for(static_cast<std::size_t>(config.count), [&](std::size_t item) {
    const MonomialIdeal I = random_monomial_ideal(config.n, config.max_exp, config.max_gens,
                                                  mix_seed(config.seed ^ (item + 1)));
    for (const FieldSpec& field : config.fields) {
      ++collector.per_item_checks[item];
      if (!radical_cohomology_agreement(I, field).agrees)
        collector.per_item[item].push_back(describe(I, field, "radical cohomology agreement"));
    }
  });
  collector.finish(started);
  return collector.outcome;
}

CampaignOutcome run_campaign_lyubeznik(const CampaignConfig& config) {
  const auto started = Clock::now();
  Collector collector("lyubeznik", static_cast<std::size_t>(config.count));
  parallel_for(static_cast<std::size_t>(config.count), [&](std::size_t item) {
    const MonomialIdeal I = random_monomial_ideal(config.n, config.max_exp, config.max_gens,
                                                  mix_seed(config.seed ^ (item + 1)));
    for (const FieldSpec& field : config.fields) {
      ++collector.per_item_checks[item];
      if (!check_lyubeznik_bound(I, field).holds)
        collector.per_item[item].push_back(describe(I, field, "depth >= size"));
    }
  });
  collector.finish(started);
  return collector.outcome;
}

CampaignOutcome run_campaign_dress(const CampaignConfig& config) {
  const auto started = Clock::now();
  Collector collector("dress", static_cast<std::size_t>(config.count));
  const int vertex_cap = std::min(config.n, 5);
  parallel_for(static_cast<std::size_t>(config.count), [&](std::size_t item) {
    Rng rng(mix_seed(config.seed ^ (item + 1)));
    const int n = rng.uniform(1, vertex_cap);
    const SimplicialComplex complex =
        random_complex(n, 5, mix_seed(config.seed ^ (item + 1) ^ 0x5D5ull));
    const MonomialIdeal ideal = to_stanley_reisner(complex);
    if (ideal.is_zero()) return; // full simplex: the zero ideal carries no decision
    ++collector.per_item_checks[item];
    if (is_clean(ideal) != is_shellable(complex))
      collector.per_item[item].push_back("Dress equivalence fails for " + print_complex(complex));
  });
  collector.finish(started);
  return collector.outcome;
}

CampaignOutcome run_campaign_betti_agreement(const CampaignConfig& config) {
  const auto started = Clock::now();
  Collector collector("betti-agreement", static_cast<std::size_t>(config.count));
  parallel_for(static_cast<std::size_t>(config.count), [&](std::size_t item) {
    const MonomialIdeal I = random_monomial_ideal(config.n, config.max_exp, config.max_gens,
                                                  mix_seed(config.seed ^ (item + 1)));
    const MonomialIdeal rad = radical(I);
    const MonomialIdeal polarized = polarize(I).first;
    auto& notes = collector.per_item[item];
    auto& checks = collector.per_item_checks[item];
    for (const FieldSpec& field : config.fields) {
      const BettiTable koszul = betti_koszul(I, field);
      ++checks;
      if (koszul != betti_taylor(I, field))
        notes.push_back(describe(I, field, "Koszul/Taylor agreement"));

      const BettiTable radical_table = betti_koszul(rad, field);
      ++checks;
      for (int i = 0; i <= koszul.projective_dimension(); ++i)
        if (radical_table.total_at(i) > koszul.total_at(i)) {
          notes.push_back(describe(I, field, "radical Betti monotonicity"));
          break;
        }

      const BettiTable polarized_table = betti_taylor(polarized, field);
      ++checks;
      for (int i = 0; i <= std::max(koszul.projective_dimension(),
                                    polarized_table.projective_dimension());
           ++i)
        if (polarized_table.total_at(i) != koszul.total_at(i)) {
          notes.push_back(describe(I, field, "polarization Betti invariance"));
          break;
        }
    }
  });
  collector.finish(started);
  return collector.outcome;
}

CampaignOutcome run_campaign(const std::string& name, const CampaignConfig& config) {
  if (name == "theorem26") return run_campaign_theorem26(config);
  if (name == "cor22") return run_campaign_cor22(config);
  if (name == "cor24") return run_campaign_cor24(config);
  if (name == "lyubeznik") return run_campaign_lyubeznik(config);
  if (name == "dress") return run_campaign_dress(config);
  if (name == "betti-agreement") return run_campaign_betti_agreement(config);
  throw PreconditionError("unknown campaign '" + name + "'");
}

} // namespace mf
