#ifndef MONOIDFORGE_JSON_IO_HPP
#define MONOIDFORGE_JSON_IO_HPP

#include <json.hpp>

#include "monoidforge/battery.hpp"
#include "monoidforge/betti.hpp"
#include "monoidforge/campaign.hpp"
#include "monoidforge/clean.hpp"
#include "monoidforge/decomposition.hpp"
#include "monoidforge/homology.hpp"
#include "monoidforge/local_cohomology.hpp"
#include "monoidforge/lyubeznik.hpp"
#include "monoidforge/polarization.hpp"

namespace mf {

/// Key order is fixed everywhere so reports with equal seeds serialize
/// byte-identically.
using Json = nlohmann::ordered_json;

Json to_json(const MonomialIdeal& I);
Json to_json(const SimplicialComplex& c);
Json to_json(const HomologyProfile& profile);
Json to_json(const PolarizationRecord& record);
PolarizationRecord record_from_json(const Json& j);
Json to_json(const IrreducibleComponent& component, int n);
Json to_json(const LocalCohomologyTable& table);
Json to_json(const BettiTable& table);
Json to_json(const IdealChain& chain);
Json to_json(const CleanCertificate& certificate);
Json to_json(const SizeReport& report);
Json to_json(const LyubeznikReport& report);
Json to_json(const AgreementReport& report);
Json to_json(const Thm32Report& report);
Json to_json(const Cor33Report& report);
Json to_json(const CampaignOutcome& outcome);

/// 1-based vertex list for a support/prime/face.
Json vertices_json(VertexSet s);

} // namespace mf

#endif
