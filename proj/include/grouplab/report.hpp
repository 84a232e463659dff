#pragma once

#include <string>

#include <json.hpp>

#include "grouplab/harness.hpp"
#include "grouplab/involution.hpp"
#include "grouplab/predicates.hpp"

namespace grouplab {

using nlohmann::json;

void to_json(json& j, const TripleRecord& r);
void from_json(const json& j, TripleRecord& r);
void to_json(json& j, const RunSummary& s);
void from_json(const json& j, RunSummary& s);
void to_json(json& j, const VerificationRun& run);
void from_json(const json& j, VerificationRun& run);

json to_json(const ClassificationReport& r);
json to_json(const Theorem2Report& r);
json to_json(const PipelineResult& r);

enum class ReportFormat { Json, Markdown };

/// Deterministic serialization; records keep their sweep order.
std::string emit_report(const VerificationRun& run, ReportFormat format);
VerificationRun parse_report(const std::string& json_text);

}  // namespace grouplab
