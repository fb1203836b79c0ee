#ifndef MONOIDFORGE_CAMPAIGN_HPP
#define MONOIDFORGE_CAMPAIGN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "monoidforge/field.hpp"

namespace mf {

/// Outcome of a seeded property campaign.  `violations` counts failed
/// checks; the notes keep one reproducible description per failure.
struct CampaignOutcome {
  std::string name;
  int count = 0;
  int checks = 0;
  int violations = 0;
  std::vector<std::string> notes;
  double elapsed_seconds = 0.0;

  bool clean_run() const { return violations == 0; }
};

struct CampaignConfig {
  int n = 4;
  int max_exp = 3;
  int max_gens = 6;
  int count = 200;
  std::uint64_t seed = 7;
  std::vector<FieldSpec> fields{FieldSpec::rationals(), FieldSpec::prime(2)};
};

/// Radical transfer of CM, Gorenstein, sequentially CM, generalized CM,
/// clean, and level-with-maximal-a-invariant.
CampaignOutcome run_campaign_theorem26(const CampaignConfig& config);

/// a-invariant upper bound, plus the exactness witness a((x1^2)) = 1.
CampaignOutcome run_campaign_cor22(const CampaignConfig& config);

/// Local cohomology agreement between I and sqrt(I) at degrees <= 0.
CampaignOutcome run_campaign_cor24(const CampaignConfig& config);

/// depth >= size.
CampaignOutcome run_campaign_lyubeznik(const CampaignConfig& config);

/// Cleanness of the Stanley-Reisner ideal against non-pure shellability;
/// config.n caps the vertex count.
CampaignOutcome run_campaign_dress(const CampaignConfig& config);

/// Koszul/Taylor agreement, radical monotonicity, polarization invariance.
CampaignOutcome run_campaign_betti_agreement(const CampaignConfig& config);

CampaignOutcome run_campaign(const std::string& name, const CampaignConfig& config);

} // namespace mf

#endif
