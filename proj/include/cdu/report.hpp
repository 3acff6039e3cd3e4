#pragma once

// Machine-readable report documents. Key order is fixed; wall-clock data only
// appears under "metadata".

#include <string_view>
#include <vector>

#include <json.hpp>

#include "cdu/cdiff.hpp"
#include "cdu/verify.hpp"

namespace cdu {

inline constexpr std::string_view kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

Json report_to_json(const FunctionTable& table, const CUniformityReport& report);

// {tool_version, field {m, modulus_hex}, params, reports[], metadata {elapsed_seconds}}
Json analysis_document(const FunctionTable& table, const std::vector<CUniformityReport>& reports,
                       double elapsed_seconds);

Json suite_document(const VerificationSuiteResult& result);

}  // namespace cdu
