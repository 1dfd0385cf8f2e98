#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gut/classing.hpp"
#include "gut/decision.hpp"
#include "gut/measure_space.hpp"
#include "gut/sequence.hpp"

namespace gut::cli {

using Json = nlohmann::ordered_json;

/// Input document failed its schema; `path` locates the offending field
/// ("$.schemes[2].payoffs").
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Parses text, turning nlohmann parse errors into SchemaError("$", ...)
/// with the line/column the parser reports.
Json parse_document(const std::string& text);

/// Rounds to 12 significant digits; integral results become JSON integers.
Json number(double value);
Json interval(const GUInterval& value);

struct SpaceDocument {
  std::vector<std::string> atoms;
  std::vector<GUInterval> assignment;
  MeasureMode mode = MeasureMode::Coherent;
};

struct ClusterDocument {
  double delta = 0.0;
  std::vector<GUInterval> items;
};

struct GenerateDocument {
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::vector<DistributionSpec> distributions;
};

DecisionProblem read_problem(const Json& doc);
SpaceDocument read_space(const Json& doc);
ClusterDocument read_cluster(const Json& doc);
GenerateDocument read_generate(const Json& doc);

Json write_decision(const DecisionProblem& problem, const DecisionReport& report);
Json write_axioms(const AxiomReport& report, const SpaceDocument& space);
Json write_classes(const ClusterDocument& doc, const std::vector<IndexClass>& classes);
Json write_sequence(const GenerateDocument& doc, const std::vector<double>& sequence);

}  // namespace gut::cli
