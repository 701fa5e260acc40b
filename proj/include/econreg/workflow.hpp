#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "econreg/dataset.hpp"
#include "econreg/descriptive.hpp"
#include "econreg/inference.hpp"
#include "econreg/ols.hpp"

namespace econreg::workflow {

enum class StageId { IndexScreen, PriceLink, RateModel, GpdiModel };

std::string_view to_string(StageId id) noexcept;

/// Column names for the six roles in the staged analysis. `indices` fixes the
/// tie-break order for stage selections.
struct VariableConfig {
  std::vector<std::string> indices{"NYSE", "DJ", "SP500"};
  std::string price = "CPIU";
  std::string rate = "TB3";
  std::string investment = "GPDI";
};

struct StagePlan {
  StageId stage_id = StageId::IndexScreen;
  std::vector<std::string> inputs;
  std::string selection_rule;
  std::vector<std::string> outputs;
};

struct StageArtifact {
  StagePlan plan;
  std::optional<CorrelationMatrix> matrix;
  std::optional<RegressionModel> model;
  /// Variables chosen by this stage (empty for pure model stages).
  std::vector<std::string> selected;
  /// Human-readable log of every comparison and choice.
  std::vector<std::string> decisions;
};

/// IndexScreen: correlate the indices and keep the pair with the largest |r|.
/// PriceLink: correlate that pair with the price variable, keep the stronger
/// index, fit price ~ index. RateModel: rate ~ index + price. GpdiModel:
/// investment ~ index + price + rate. Ties go to the earlier configured name.
std::vector<StageArtifact> run_staged_analysis(const Dataset& ds, const VariableConfig& config = {});

/// Overall F verdict followed by one t verdict per coefficient (constant first).
std::vector<inference::TestVerdict> verdict_report(const RegressionModel& model, double alpha = 0.05);

// ---------------------------------------------------------------------------
// Published-statistics fixture and the consistency checks run over it.

struct FixtureRecord {
  std::string id;
  std::string table;
  std::string printed;
  double value = 0.0;
  int decimals = 0;
  std::string note;

  /// Half a unit in the last printed digit.
  double rounding() const;
};

struct FixtureModel {
  std::string id;
  std::string dependent;
  std::vector<std::string> predictors;
  std::vector<std::string> tables;
  std::optional<std::string> dependent_label;
};

struct StatisticsFixture {
  int version = 0;
  std::map<std::string, std::string> labels;
  std::vector<FixtureModel> models;
  std::vector<FixtureRecord> records;

  const FixtureRecord& record(const std::string& id) const;
  double value(const std::string& id) const { return record(id).value; }
  FixtureRecord& mutable_record(const std::string& id);
};

StatisticsFixture parse_fixture(const std::string& json_text);
StatisticsFixture load_fixture(const std::filesystem::path& path);
/// The fixture compiled into the library.
const StatisticsFixture& builtin_fixture();

struct ConsistencyCheck {
  std::string label;
  /// Check class, e.g. "correlation", "covariance", "p-value".
  std::string kind;
  std::string table;
  double expected = 0.0;
  double computed = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  /// Fixture record ids the check reads.
  std::vector<std::string> inputs;
};

std::vector<ConsistencyCheck> paper_consistency_suite(const StatisticsFixture& fixture);
std::vector<ConsistencyCheck> paper_consistency_suite();

/// A model rebuilt from the fixture's printed tables, for rendering.
RegressionModel fixture_model(const StatisticsFixture& fixture, const std::string& model_id);

}  // namespace econreg::workflow
