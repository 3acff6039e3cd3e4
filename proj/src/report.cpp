#include "cdu/report.hpp"

namespace cdu {

namespace {

Json field_json(const FieldSpec& field) {
  Json j;
  j["m"] = field.degree();
  j["modulus_hex"] = format_element(field.modulus());
  return j;
}

}  // namespace

Json report_to_json(const FunctionTable& table, const CUniformityReport& report) {
  Json j;
  j["c"] = format_element(report.c);
  if (const auto& p = table.params(); p && table.field().degree() % (2 * p->t) == 0) {
    j["theorem_case"] = to_string(classify_theorem_case(table.field(), p->t, report.c));
  }
  j["uniformity"] = report.uniformity;
  j["classification"] = to_string(report.classification);
  j["classical_ddt"] = report.classical_ddt;
  Json spectrum = Json::object();
  for (const auto& [value, count] : report.spectrum) spectrum[std::to_string(value)] = count;
  j["spectrum"] = std::move(spectrum);
  Json witnesses = Json::array();
  for (const auto& w : report.witnesses) {
    witnesses.push_back("a=" + format_element(w.a) + " b=" + format_element(w.b));
  }
  j["witnesses"] = std::move(witnesses);
  return j;
}

Json analysis_document(const FunctionTable& table, const std::vector<CUniformityReport>& reports,
                       double elapsed_seconds) {
  Json doc;
  doc["tool_version"] = kToolVersion;
  doc["field"] = field_json(table.field());
  doc["params"] = table.params() ? Json(format_family_params(*table.params())) : Json(nullptr);
  Json list = Json::array();
  for (const auto& r : reports) list.push_back(report_to_json(table, r));
  doc["reports"] = std::move(list);
  doc["metadata"] = {{"elapsed_seconds", elapsed_seconds}};
  return doc;
}

Json suite_document(const VerificationSuiteResult& result) {
  Json doc;
  doc["tool_version"] = kToolVersion;
  doc["suite"] = to_string(result.suite);
  doc["max_m"] = result.max_m;
  doc["passed"] = result.passed();
  doc["violations"] = result.violations();
  Json verdicts = Json::array();
  for (const auto& v : result.verdicts) {
    Json j;
    j["instance"] = v.instance;
    j["claim"] = v.claim;
    j["predicted"] = v.predicted;
    j["passed"] = v.passed;
    j["observed"] = v.observed;
    j["bound"] = v.bound;
    j["checked"] = v.checked;
    j["sampled"] = v.sampled;
    if (!v.detail.empty()) j["detail"] = v.detail;
    verdicts.push_back(std::move(j));
  }
  doc["verdicts"] = std::move(verdicts);
  doc["notes"] = result.notes;
  doc["metadata"] = {{"elapsed_seconds", result.elapsed_seconds}};
  return doc;
}

}  // namespace cdu
