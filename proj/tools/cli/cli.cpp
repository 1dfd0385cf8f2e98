#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "gut/error.hpp"
#include "json_io.hpp"

namespace gut::cli {

namespace {

struct CommandConfig {
  std::string subcommand;
  std::string input_path;
  std::string inline_json;
  std::string format = "json";
  std::optional<std::string> mode;
  std::optional<std::string> attitude;
  std::optional<double> delta;
  std::optional<std::uint64_t> seed;
  double tolerance = kDefaultTolerance;
};

std::string read_input(const CommandConfig& config) {
  if (!config.inline_json.empty()) return config.inline_json;
  if (config.input_path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(config.input_path);
  if (!in) throw SchemaError("--input", "cannot open '" + config.input_path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fmt(double value) {
  std::ostringstream os;
  os << number(value).dump();
  return os.str();
}

std::string fmt(const GUInterval& value) { return interval(value).dump(); }

// Left-aligned columns padded to the widest cell (counted in code points).
void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  auto width = [](const std::string& s) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
  };
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    widths.resize(std::max(widths.size(), row.size()));
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], width(row[i]));
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(widths[i] - width(row[i]) + 2, ' ');
    }
    out << line << '\n';
  }
}

int cmd_decide(const CommandConfig& config, const Json& doc, std::ostream& out) {
  auto problem = read_problem(doc);
  if (config.attitude) problem = problem.with_attitude(parse_risk_attitude(*config.attitude));
  const auto report = decide(problem, config.tolerance);

  if (config.format == "json") {
    out << write_decision(problem, report).dump(2) << '\n';
    return kOk;
  }
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"/"};
  std::vector<std::string> gum_row{"GUM"};
  for (const auto& n : problem.natures()) {
    header.push_back(n.name);
    gum_row.push_back(fmt(n.gum));
  }
  header.insert(header.end(), {"GEU", "Comparison"});
  gum_row.insert(gum_row.end(), {"/", "/"});
  rows.push_back(header);
  rows.push_back(gum_row);
  for (std::size_t i = 0; i < problem.schemes().size(); ++i) {
    const auto& s = problem.schemes()[i];
    std::vector<std::string> row{s.name};
    for (double p : s.payoffs) row.push_back(fmt(p));
    row.push_back(fmt(report.geus[i]));
    std::string comparison = "/";
    for (const auto& c : report.comparisons) {
      if (c.index != i) continue;
      comparison = "GEU" + std::to_string(c.index + 1) + " " + std::string(symbol(c.relation)) + " GEU" +
                   std::to_string(c.against + 1);
    }
    row.push_back(comparison);
    rows.push_back(std::move(row));
  }
  print_table(out, rows);
  out << "\nSelected: " << report.selected_name << " (" << to_string(report.rationale) << "; " << report.note
      << ")\n";
  return kOk;
}

int cmd_validate(const CommandConfig& config, const Json& doc, std::ostream& out, std::ostream& err) {
  auto space = read_space(doc);
  if (config.mode) space.mode = parse_measure_mode(*config.mode);
  SpaceOptions options;
  options.tolerance = config.tolerance;
  const auto report = check_axioms(space.atoms, space.assignment, space.mode, options);

  if (config.format == "json") {
    out << write_axioms(report, space).dump(2) << '\n';
  } else {
    std::vector<std::vector<std::string>> rows{{"axiom", "status", "detail"}};
    for (const auto& c : report.checks) rows.push_back({c.axiom, c.ok ? "ok" : "VIOLATED", c.detail});
    print_table(out, rows);
    out << "\nmode: " << to_string(report.mode) << ", " << (report.valid() ? "valid" : "invalid") << '\n';
  }
  if (!report.valid()) {
    err << "error: invalid measure space (" << to_string(space.mode) << " mode): " << report.violations() << '\n';
    return kDomainError;
  }
  return kOk;
}

int cmd_cluster(const CommandConfig& config, const Json& doc, std::ostream& out) {
  auto cluster = read_cluster(doc);
  if (config.delta) cluster.delta = *config.delta;
  const auto classes = classify(cluster.items, cluster.delta);
  if (config.format == "json") {
    out << write_classes(cluster, classes).dump(2) << '\n';
    return kOk;
  }
  std::vector<std::vector<std::string>> rows{{"class", "pivot", "members"}};
  for (std::size_t k = 0; k < classes.size(); ++k) {
    std::string members;
    for (auto idx : classes[k]) members += (members.empty() ? "" : " ") + std::to_string(idx);
    rows.push_back({"B" + std::to_string(k + 1), fmt(cluster.items[classes[k].front()]), members});
  }
  print_table(out, rows);
  return kOk;
}

int cmd_generate(const CommandConfig& config, const Json& doc, std::ostream& out) {
  auto gen = read_generate(doc);
  if (config.seed) gen.seed = *config.seed;
  const auto sequence = generate_sequence(gen.distributions, gen.k, gen.seed);
  if (config.format == "json") {
    out << write_sequence(gen, sequence).dump(2) << '\n';
    return kOk;
  }
  std::vector<std::vector<std::string>> rows{{"j", "value"}};
  for (std::size_t j = 0; j < sequence.size(); ++j) rows.push_back({std::to_string(j + 1), fmt(sequence[j])});
  print_table(out, rows);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CommandConfig config;
  CLI::App app{"Generalized uncertain measures: decisions, classing, sequences, validation", "gut"};
  app.require_subcommand(1, 1);

  auto add_common = [&config](CLI::App* sub) {
    auto* input = sub->add_option("--input", config.input_path, "Input JSON document ('-' for stdin)");
    auto* inline_json = sub->add_option("--json", config.inline_json, "Inline input JSON document");
    input->excludes(inline_json);
    sub->add_option("--format", config.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--tolerance", config.tolerance, "Absolute comparison tolerance")
        ->check(CLI::NonNegativeNumber);
  };

  auto* decide_cmd = app.add_subcommand("decide", "Solve a generalized expected utility decision problem");
  add_common(decide_cmd);
  decide_cmd->add_option("--attitude", config.attitude, "Risk attitude at the inclusion stage")
      ->check(CLI::IsMember({"averse", "seeking"}));

  auto* cluster_cmd = app.add_subcommand("cluster", "Delta-neighbour classing of intervals");
  add_common(cluster_cmd);
  cluster_cmd->add_option("--delta", config.delta, "Neighbourhood radius")->check(CLI::NonNegativeNumber);

  auto* generate_cmd = app.add_subcommand("generate", "Generate a generalized uncertain sequence");
  add_common(generate_cmd);
  generate_cmd->add_option("--seed", config.seed, "Generator seed");

  auto* validate_cmd = app.add_subcommand("validate", "Check the measure axioms of a space");
  add_common(validate_cmd);
  validate_cmd->add_option("--mode", config.mode, "Normalization mode")->check(CLI::IsMember({"strict", "coherent"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  for (auto* sub : {decide_cmd, cluster_cmd, generate_cmd, validate_cmd}) {
    if (sub->parsed()) config.subcommand = sub->get_name();
  }
  if (config.input_path.empty() && config.inline_json.empty()) {
    err << "error: one of --input or --json is required\n";
    return kInputError;
  }

  try {
    const auto doc = parse_document(read_input(config));
    if (config.subcommand == "decide") return cmd_decide(config, doc, out);
    if (config.subcommand == "validate") return cmd_validate(config, doc, out, err);
    if (config.subcommand == "cluster") return cmd_cluster(config, doc, out);
    return cmd_generate(config, doc, out);
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const gut::Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace gut::cli
