#include "monoidforge/json_io.hpp"

#include "monoidforge/text_io.hpp"

namespace mf {

Json vertices_json(VertexSet s) {
  Json out = Json::array();
  for (int v : s.to_vector()) out.push_back(v + 1);
  return out;
}

Json to_json(const MonomialIdeal& I) { return print_ideal(I); }

Json to_json(const SimplicialComplex& c) { return print_complex(c); }

Json to_json(const HomologyProfile& profile) {
  Json out = Json::array();
  for (int d : profile.dims) out.push_back(d);
  return out;
}

Json to_json(const PolarizationRecord& record) {
  Json steps = Json::array();
  for (auto [src, fresh] : record.steps) steps.push_back(Json::array({src + 1, fresh + 1}));
  return Json{{"source_n", record.source_n},
              {"target_n", record.target_n},
              {"variable_origin", [&] {
                 Json origins = Json::array();
                 for (int v : record.variable_origin) origins.push_back(v + 1);
                 return origins;
               }()},
              {"steps", steps}};
}

PolarizationRecord record_from_json(const Json& j) {
  PolarizationRecord record;
  record.source_n = j.at("source_n").get<int>();
  record.target_n = j.at("target_n").get<int>();
  for (const Json& v : j.at("variable_origin")) record.variable_origin.push_back(v.get<int>() - 1);
  for (const Json& step : j.at("steps"))
    record.steps.emplace_back(step.at(0).get<int>() - 1, step.at(1).get<int>() - 1);
  if (!record.consistent()) throw PreconditionError("polarization record JSON is inconsistent");
  return record;
}

Json to_json(const IrreducibleComponent& component, int n) {
  Json exponents = Json::object();
  for (auto [v, e] : component.exponents) exponents["x" + std::to_string(v + 1)] = e;
  return Json{{"support", vertices_json(component.support())},
              {"exponents", exponents},
              {"ideal", to_json(component.as_ideal(n))}};
}

Json to_json(const LocalCohomologyTable& table) {
  Json rows = Json::object();
  for (const auto& [i, row] : table.rows()) {
    Json cells = Json::array();
    for (const auto& [degree, dim] : row) {
      Json clamp = Json::array();
      for (int e : degree.entries) clamp.push_back(e);
      cells.push_back(Json{{"clamp", clamp},
                           {"negative_support", vertices_json(degree.negative_support())},
                           {"dim", dim}});
    }
    rows[std::to_string(i)] = cells;
  }
  return Json{{"field", table.field().to_string()}, {"rows", rows}};
}

Json to_json(const BettiTable& table) {
  Json entries = Json::array();
  for (const auto& [i, row] : table.entries())
    for (const auto& [b, v] : row) {
      Json degree = Json::array();
      for (int e : b) degree.push_back(e);
      entries.push_back(Json{{"i", i}, {"multidegree", degree}, {"value", v}});
    }
  Json totals = Json::array();
  for (const auto& [key, v] : table.totals())
    totals.push_back(Json::array({key.first, key.second, v}));
  return Json{{"entries", entries},
              {"totals", totals},
              {"projective_dimension", table.projective_dimension()}};
}

Json to_json(const IdealChain& chain) {
  Json out = Json::array();
  for (const MonomialIdeal& I : chain.ideals) out.push_back(to_json(I));
  return out;
}

Json to_json(const CleanCertificate& certificate) {
  Json steps = Json::array();
  for (const CleanStep& s : certificate.steps)
    steps.push_back(Json{{"ideal", to_json(s.ideal_before)},
                         {"pivot", print_monomial(s.pivot)},
                         {"prime", vertices_json(s.prime)}});
  return steps;
}

Json to_json(const SizeReport& report) {
  return Json{{"v", report.v}, {"h", report.h}, {"size", report.size}};
}

Json to_json(const LyubeznikReport& report) {
  return Json{{"depth", report.depth}, {"size", report.size}, {"holds", report.holds}};
}

Json to_json(const AgreementReport& report) {
  Json violations = Json::array();
  for (const AgreementViolation& v : report.violations) {
    Json clamp = Json::array();
    for (int e : v.degree.entries) clamp.push_back(e);
    violations.push_back(Json{{"i", v.i},
                              {"clamp", clamp},
                              {"dim_ideal", v.dim_ideal},
                              {"dim_radical", v.dim_radical}});
  }
  return Json{{"agrees", report.agrees}, {"violations", violations}};
}

namespace {

Json to_json(const NonCmWitness& witness) {
  Json subset = Json::array();
  for (int i : witness.subset) subset.push_back(i + 1);
  Json exponents = Json::array();
  for (const auto& row : witness.exponents) {
    Json r = Json::array();
    for (int e : row) r.push_back(e);
    exponents.push_back(r);
  }
  return Json{{"subset", subset}, {"exponents", exponents}, {"ideal", to_json(witness.ideal)}};
}

const char* form_name(NormalForm form) {
  switch (form) {
    case NormalForm::DeletedSimplex: return "deleted-simplex";
    case NormalForm::CommonCore: return "common-core";
    default: return "none";
  }
}

} // namespace

Json to_json(const Thm32Report& report) {
  Json out{{"hypothesis_cm", report.hypothesis_cm}};
  if (!report.hypothesis_cm) {
    out["status"] = "hypothesis-failed";
    return out;
  }
  out["status"] = "evaluated";
  out["conditions"] = Json{{"b", report.cond_b}, {"c", report.cond_c}, {"d", report.cond_d},
                           {"e", report.cond_e}, {"f", report.cond_f}};
  out["normal_form"] = form_name(report.normal_form);
  out["samples"] = Json{{"a_cm", report.samples_a_cm},
                        {"a_total", report.samples_a_total},
                        {"g_cm", report.samples_g_cm},
                        {"g_total", report.samples_g_total}};
  if (report.witness) out["witness"] = to_json(*report.witness);
  Json agreement = Json::array();
  for (const auto& row : report.agreement) {
    Json r = Json::array();
    for (bool b : row) r.push_back(b);
    agreement.push_back(r);
  }
  out["agreement"] = agreement;
  return out;
}

Json to_json(const Cor33Report& report) {
  Json out{{"r1_or_c1", report.cond_b},
           {"samples_gorenstein", report.samples_gorenstein},
           {"samples_total", report.samples_total}};
  if (report.non_gorenstein_witness) {
    out["witness"] = to_json(*report.non_gorenstein_witness);
    out["witness_kind"] = report.witness_kind;
  }
  return out;
}

Json to_json(const CampaignOutcome& outcome) {
  Json notes = Json::array();
  for (const std::string& n : outcome.notes) notes.push_back(n);
  return Json{{"campaign", outcome.name},
              {"count", outcome.count},
              {"checks", outcome.checks},
              {"violations", outcome.violations},
              {"notes", notes}};
}

} // namespace mf
