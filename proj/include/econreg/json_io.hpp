#pragma once

#include <json.hpp>

#include "econreg/descriptive.hpp"
#include "econreg/inference.hpp"
#include "econreg/ols.hpp"
#include "econreg/report.hpp"
#include "econreg/workflow.hpp"

// JSON shapes are documented in docs/json-schemas.md. Non-finite numbers are
// written as null.
namespace econreg::json {

using nlohmann::json;

json to_json(const RegressionModel& model);
json to_json(const CorrelationMatrix& m);
json to_json(const inference::TestVerdict& v);
json to_json(const workflow::ConsistencyCheck& c);
json to_json(const workflow::StageArtifact& stage);
json to_json(const report::ReportTable& table);

report::ReportTable table_from_json(const json& j);

}  // namespace econreg::json
