// Copyright 2026 The schemewalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "schemewalk/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "schemewalk/errors.hpp"
#include "schemewalk/group_schemes.hpp"
#include "schemewalk/oracle.hpp"
#include "schemewalk/scheme_spec.hpp"
#include "schemewalk/spectral.hpp"
#include "schemewalk/walk.hpp"

namespace schemewalk::cli {
namespace {

using nlohmann::json;

constexpr double kDefaultTailTolerance = 1e-12;

double rounded(double x) { return std::stod(format_number(x)); }

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
  return quoted + "\"";
}

std::string format_complex(std::complex<double> z) {
  const auto im = format_number(z.imag());
  return format_number(z.real()) + (im.front() == '-' ? "" : "+") + im + "i";
}

std::string format_deviation(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

struct WalkOptions {
  std::string graph;
  std::vector<double> times;
  double t0 = 0.0;
  double t1 = 20.0;
  int steps = 64;
  std::string engine = "auto";
  bool normalized = false;
  bool vertexLevel = false;
  std::string format = "csv";
  std::optional<int> generatingClass;
};

struct SpectrumOptions {
  std::string graph;
  bool line = false;
  int nodes = 256;
  std::optional<double> meixner;
  std::optional<double> tailTolerance;
  std::string format = "csv";
};

struct CharacterOptions {
  std::string group;
  int n = 0;
  std::string descriptor;
  std::string format = "csv";
};

struct CatalogOptions {
  std::string name;
  std::vector<std::int64_t> params;
};

SchemeSpec load_spec(const std::string& text, const std::optional<int>& generatingClass) {
  SchemeSpec spec = parse_graph_spec(text);
  if (generatingClass) {
    auto* group = std::get_if<FromGroup>(&spec);
    if (!group) fail(ErrorCode::UsageError, "--class applies only to group specs");
    group->generatingClass = *generatingClass;
    validate_spec(spec);
  }
  return spec;
}

std::vector<double> resolve_times(const WalkOptions& o, bool explicitTimes) {
  if (explicitTimes) return o.times;
  if (o.steps < 0) fail(ErrorCode::UsageError, "--steps must be non-negative");
  return time_grid(o.t0, o.t1, o.steps);
}

double tail_tolerance(const std::optional<double>& flag) {
  if (flag) {
    if (!(*flag > 0.0)) fail(ErrorCode::UsageError, "--tail-tol must be positive");
    return *flag;
  }
  if (const char* env = std::getenv("SCHEME_WALK_TAIL_TOL")) {
    char* end = nullptr;
    const double value = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(value > 0.0)) {
      fail(ErrorCode::UsageError, std::string("SCHEME_WALK_TAIL_TOL is not a positive number: ") + env);
    }
    return value;
  }
  return kDefaultTailTolerance;
}

void emit_walk(const AmplitudeSeries& series, const SchemeSpec& spec, Engine engine,
               const WalkOptions& o, std::ostream& out) {
  if (o.format == "json") {
    json records = json::array();
    for (std::size_t r = 0; r < series.times.size(); ++r) {
      for (int k = 0; k < series.strata(); ++k) {
        const auto z = series.amplitudes(static_cast<Eigen::Index>(r), k);
        const double re = rounded(z.real());
        const double im = rounded(z.imag());
        records.push_back({{"t", rounded(series.times[r])},
                           {"stratum", k},
                           {"re", re},
                           {"im", im},
                           {"prob", rounded(re * re + im * im)}});
      }
    }
    json doc = {{"graph", describe(spec)},
                {"engine", to_string(engine)},
                {"normalization", series.normalization == Normalization::Vertex ? "vertex" : "stratum"},
                {"normalized_adjacency", o.normalized},
                {"strata_sizes", series.strataSizes.sizes},
                {"records", records}};
    out << doc.dump(2) << "\n";
    return;
  }
  out << "t,stratum,re,im,prob\n";
  for (std::size_t r = 0; r < series.times.size(); ++r) {
    for (int k = 0; k < series.strata(); ++k) {
      const auto z = series.amplitudes(static_cast<Eigen::Index>(r), k);
      const double re = rounded(z.real());
      const double im = rounded(z.imag());
      out << format_number(series.times[r]) << ',' << k << ',' << format_number(re) << ','
          << format_number(im) << ',' << format_number(re * re + im * im) << '\n';
    }
  }
}

void emit_pairs(const std::string& left, const std::string& right, const std::vector<double>& xs,
                const std::vector<double>& ws, const std::string& format, std::ostream& out) {
  if (format == "json") {
    json rows = json::array();
    for (std::size_t i = 0; i < xs.size(); ++i) rows.push_back({{left, rounded(xs[i])}, {right, rounded(ws[i])}});
    out << rows.dump(2) << "\n";
    return;
  }
  out << left << ',' << right << '\n';
  for (std::size_t i = 0; i < xs.size(); ++i) out << format_number(xs[i]) << ',' << format_number(ws[i]) << '\n';
}

void cmd_walk(const WalkOptions& o, bool explicitTimes, std::ostream& out) {
  const auto spec = load_spec(o.graph, o.generatingClass);
  WalkRequest request{spec, resolve_times(o, explicitTimes), parse_engine(o.engine), o.normalized};
  const Engine engine = resolve_engine(spec, request.engine);
  auto series = dispatch(request);
  if (o.vertexLevel) series = series.to_vertex_level();
  emit_walk(series, spec, engine, o, out);
}

void cmd_average(const WalkOptions& o, std::ostream& out) {
  const auto spec = load_spec(o.graph, o.generatingClass);
  const auto averages = dispatch_average(spec, parse_engine(o.engine));
  const auto& values = o.vertexLevel ? averages.vertex : averages.stratum;
  if (o.format == "json") {
    json rows = json::array();
    for (std::size_t k = 0; k < values.size(); ++k) rows.push_back({{"stratum", k}, {"avg_prob", rounded(values[k])}});
    out << rows.dump(2) << "\n";
    return;
  }
  out << "stratum,avg_prob\n";
  for (std::size_t k = 0; k < values.size(); ++k) out << k << ',' << format_number(values[k]) << '\n';
}

void cmd_spectrum(const SpectrumOptions& o, std::ostream& out) {
  const int sources = static_cast<int>(!o.graph.empty()) + static_cast<int>(o.line) +
                      static_cast<int>(o.meixner.has_value());
  if (sources != 1) fail(ErrorCode::UsageError, "give exactly one of --graph, --line, --meixner");
  if (o.line) {
    if (o.nodes < 1) fail(ErrorCode::UsageError, "--nodes must be positive");
    const auto dist = continuous_line_distribution(o.nodes);
    emit_pairs("node", "density_weight", dist.ruleNodes, dist.ruleWeights, o.format, out);
    return;
  }
  if (o.meixner) {
    const auto dist = meixner_distribution(*o.meixner, tail_tolerance(o.tailTolerance)).truncated();
    emit_pairs("atom", "weight", dist.atoms, dist.weights, o.format, out);
    return;
  }
  const auto spec = load_spec(o.graph, std::nullopt);
  const auto dist = spectrum_of(spec);
  emit_pairs("atom", "weight", dist.atoms, dist.weights, o.format, out);
}

GroupDescriptor group_from_options(const CharacterOptions& o) {
  if (!o.descriptor.empty()) {
    if (!o.group.empty()) fail(ErrorCode::UsageError, "give either --spec or --group, not both");
    json j;
    try {
      j = json::parse(o.descriptor);
    } catch (const json::parse_error& e) {
      fail(ErrorCode::SchemaError, std::string("/: malformed JSON: ") + e.what());
    }
    if (!j.is_object()) fail(ErrorCode::SchemaError, "/: expected an object");
    for (const auto& [key, value] : j.items()) {
      if (key != "group" && key != "n") fail(ErrorCode::SchemaError, "/" + key + ": unknown field");
    }
    if (!j.contains("group") || !j["group"].is_string()) fail(ErrorCode::SchemaError, "/group: expected a string");
    if (!j.contains("n") || !j["n"].is_number_integer()) fail(ErrorCode::SchemaError, "/n: expected an integer");
    GroupDescriptor g{parse_group_family(j["group"].get<std::string>()), j["n"].get<int>()};
    validate_group(g);
    return g;
  }
  if (o.group.empty()) fail(ErrorCode::UsageError, "give --group and --n, or --spec");
  GroupDescriptor g{parse_group_family(o.group), o.n};
  validate_group(g);
  return g;
}

void cmd_characters(const GroupDescriptor& group, const std::string& format, std::ostream& out) {
  const auto table = character_table(group);
  if (format == "json") {
    json rows = json::array();
    for (int i = 0; i < table.values.rows(); ++i) {
      json values = json::array();
      for (int k = 0; k < table.values.cols(); ++k) {
        values.push_back({rounded(table.values(i, k).real()), rounded(table.values(i, k).imag())});
      }
      rows.push_back({{"irrep", table.irrepLabels[static_cast<std::size_t>(i)]},
                      {"dimension", table.irrepDims[static_cast<std::size_t>(i)]},
                      {"values", values}});
    }
    json doc = {{"group", table.groupName},
                {"class_labels", table.classLabels},
                {"class_sizes", table.classSizes},
                {"irreps", rows}};
    out << doc.dump(2) << "\n";
    return;
  }
  out << "irrep";
  for (const auto& label : table.classLabels) out << ',' << csv_field(label);
  out << '\n';
  for (int i = 0; i < table.values.rows(); ++i) {
    out << csv_field(table.irrepLabels[static_cast<std::size_t>(i)]);
    for (int k = 0; k < table.values.cols(); ++k) out << ',' << format_complex(table.values(i, k));
    out << '\n';
  }
}

void cmd_catalog_list(std::ostream& out) {
  out << "name,params,description\n";
  for (const auto& info : catalog_names()) {
    std::string params;
    for (std::size_t i = 0; i < info.paramNames.size(); ++i) params += (i ? ";" : "") + info.paramNames[i];
    out << info.name << ',' << csv_field(params) << ',' << csv_field(info.description) << '\n';
  }
}

json distribution_json(const DiscreteDistribution& dist) {
  json rows = json::array();
  for (std::size_t i = 0; i < dist.size(); ++i) {
    rows.push_back({{"atom", rounded(dist.atoms[i])}, {"weight", rounded(dist.weights[i])}});
  }
  return rows;
}

void cmd_catalog_show(const CatalogEntry& entry, std::ostream& out) {
  json doc = {{"name", entry.name},
              {"description", entry.description},
              {"param_names", entry.paramNames},
              {"params", entry.params},
              {"intersection_array", entry.array},
              {"stratum_sizes", derive_stratum_sizes(entry.array).sizes},
              {"quadrature", distribution_json(gauss_quadrature(jacobi_from_intersection(entry.array)))}};
  doc["tabulated"] = entry.expected ? distribution_json(*entry.expected) : json(nullptr);
  out << doc.dump(2) << "\n";
}

struct Check {
  std::string name;
  double deviation = 0.0;
  double tolerance = 0.0;
  std::optional<bool> pass;  // empty = not applicable
};

std::vector<Check> verify_spec(const SchemeSpec& spec, Engine engine, const std::vector<double>& times) {
  std::vector<Check> checks;
  auto add = [&](std::string name, double deviation, double tolerance) {
    checks.push_back({std::move(name), deviation, tolerance, deviation < tolerance});
  };
  const auto graph = oracle::build_graph(spec);
  const auto partition = oracle::spec_partition(spec, graph);
  const auto walk = oracle::exact_walk(graph, times);
  add("eigensolver_residual", walk.eigenResidual, 1e-8);
  add("eigenvector_orthogonality", walk.orthogonalityDefect, 1e-10);
  add("vertex_unitarity", walk.unitarityDefect, 1e-9);
  add("stratum_uniformity", times.empty() ? 0.0 : oracle::stratum_spread(walk, partition), 1e-9);

  const auto series = dispatch(WalkRequest{spec, times, engine, false});
  add("stratum_unitarity", series.unitarity_defect(), 1e-9);
  const auto exact = oracle::stratum_amplitudes(walk, partition);
  if (exact.cols() != series.amplitudes.cols()) {
    checks.push_back({"engine_vs_oracle", INFINITY, 1e-8, false});
  } else {
    add("engine_vs_oracle", times.empty() ? 0.0 : (exact - series.amplitudes).cwiseAbs().maxCoeff(), 1e-8);
  }

  const auto distance = oracle::bfs_strata(graph);
  try {
    const auto derived = oracle::derive_intersection_array(graph, distance);
    const auto q = oracle::quantum_decomposition(graph, distance);
    const auto ladder = oracle::check_ladder(graph, distance, q, jacobi_from_intersection(derived));
    checks.push_back({"decomposition_exact", ladder.exact() ? 0.0 : 1.0, 0.5, ladder.exact()});
    add("ladder_actions", ladder.worst(), 1e-10);
    if (!std::holds_alternative<FromGroup>(spec)) {
      const bool same = derived == intersection_array_of(spec);
      checks.push_back({"intersection_array", same ? 0.0 : 1.0, 0.5, same});
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotDistanceRegular) throw;
    checks.push_back({"decomposition_exact", 0.0, 0.0, std::nullopt});
    checks.push_back({"ladder_actions", 0.0, 0.0, std::nullopt});
  }
  return checks;
}

int report_checks(const std::vector<Check>& checks, std::ostream& out, std::ostream& err) {
  out << "invariant,max_deviation,tolerance,status\n";
  int failed = 0;
  for (const auto& c : checks) {
    const std::string status = !c.pass ? "n/a" : (*c.pass ? "pass" : "FAIL");
    failed += c.pass && !*c.pass;
    out << c.name << ',' << format_deviation(c.deviation) << ',' << format_deviation(c.tolerance) << ','
        << status << '\n';
  }
  if (failed) {
    err << "VerificationFailed: " << failed << " of " << checks.size() << " invariants failed\n";
    return 1;
  }
  return 0;
}

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::UsageError:
    case ErrorCode::SchemaError:
    case ErrorCode::UnknownCatalogName:
    case ErrorCode::BadParams:
      return true;
    default:
      return false;
  }
}

}  // namespace

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  std::string s = buf;
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::vector<double> time_grid(double t0, double t1, int steps) {
  std::vector<double> times;
  if (steps <= 0) return times;
  if (steps == 1) return {t0};
  times.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) times.push_back(t0 + (t1 - t0) * i / (steps - 1));
  return times;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Continuous-time quantum walks on association schemes", "schemewalk"};
  app.require_subcommand(1);

  WalkOptions walk;
  auto* walkCmd = app.add_subcommand("walk", "Stratum amplitudes on a time grid");
  auto add_common = [](CLI::App* cmd, WalkOptions& o) {
    cmd->add_option("--graph", o.graph, "catalog:name[:params], srg:n,k,l,e, group:family:n, JSON text or file")
        ->required();
    cmd->add_option("--engine", o.engine, "eigen | character | spectral | product | auto");
    cmd->add_option("--class", o.generatingClass, "Generating class block for group specs");
    cmd->add_flag("--vertex-level", o.vertexLevel, "Report vertex-level values");
    cmd->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));
  };
  add_common(walkCmd, walk);
  auto* timesOpt = walkCmd->add_option("--times", walk.times, "Explicit comma-separated times")->delimiter(',');
  walkCmd->add_option("--t0", walk.t0)->excludes(timesOpt);
  walkCmd->add_option("--t1", walk.t1)->excludes(timesOpt);
  walkCmd->add_option("--steps", walk.steps)->excludes(timesOpt);
  walkCmd->add_flag("--normalized", walk.normalized, "Use the degree-normalized adjacency matrix");

  WalkOptions average;
  auto* averageCmd = app.add_subcommand("average", "Long-time average probabilities");
  add_common(averageCmd, average);

  SpectrumOptions spectrum;
  auto* spectrumCmd = app.add_subcommand("spectrum", "Spectral distribution seen from the root");
  spectrumCmd->add_option("--graph", spectrum.graph);
  spectrumCmd->add_flag("--line", spectrum.line, "Infinite line (arcsine law)");
  spectrumCmd->add_option("--nodes", spectrum.nodes, "Quadrature nodes for --line");
  spectrumCmd->add_option("--meixner", spectrum.meixner, "Johnson-limit geometric law with parameter p");
  spectrumCmd->add_option("--tail-tol", spectrum.tailTolerance, "Truncation tail mass for --meixner");
  spectrumCmd->add_option("--format", spectrum.format)->check(CLI::IsMember({"csv", "json"}));

  CharacterOptions characters;
  auto* charactersCmd = app.add_subcommand("characters", "Character table of a group");
  charactersCmd->add_option("--group", characters.group, "cyclic | dihedral | symmetric");
  charactersCmd->add_option("--n", characters.n);
  charactersCmd->add_option("--spec", characters.descriptor, R"(JSON {"group": ..., "n": ...})");
  charactersCmd->add_option("--format", characters.format)->check(CLI::IsMember({"csv", "json"}));

  CatalogOptions catalogOpts;
  auto* catalogCmd = app.add_subcommand("catalog", "Named distance-regular graphs");
  catalogCmd->require_subcommand(1);
  auto* listCmd = catalogCmd->add_subcommand("list", "List catalog names");
  auto* showCmd = catalogCmd->add_subcommand("show", "Show one catalog entry");
  showCmd->add_option("name", catalogOpts.name)->required();
  showCmd->add_option("params", catalogOpts.params);

  WalkOptions verify;
  auto* verifyCmd = app.add_subcommand("verify", "Check engine output against the explicit-graph oracle");
  verifyCmd->add_option("--graph", verify.graph)->required();
  verifyCmd->add_option("--engine", verify.engine);
  verifyCmd->add_option("--class", verify.generatingClass);
  verifyCmd->add_option("--t0", verify.t0);
  verifyCmd->add_option("--t1", verify.t1);
  verifyCmd->add_option("--steps", verify.steps);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::string message = e.what();
    std::replace(message.begin(), message.end(), '\n', ' ');
    err << "UsageError: " << message << "\n";
    return 2;
  }

  std::ostringstream buffer;
  int status = 0;
  // Input stage: anything thrown before computation starts is a usage error.
  bool computing = false;
  try {
    if (walkCmd->parsed()) {
      cmd_walk(walk, timesOpt->count() > 0, buffer);
    } else if (averageCmd->parsed()) {
      cmd_average(average, buffer);
    } else if (spectrumCmd->parsed()) {
      cmd_spectrum(spectrum, buffer);
    } else if (charactersCmd->parsed()) {
      const auto group = group_from_options(characters);
      computing = true;
      cmd_characters(group, characters.format, buffer);
    } else if (catalogCmd->parsed() && listCmd->parsed()) {
      cmd_catalog_list(buffer);
    } else if (catalogCmd->parsed() && showCmd->parsed()) {
      cmd_catalog_show(catalog(catalogOpts.name, catalogOpts.params), buffer);
    } else if (verifyCmd->parsed()) {
      const auto spec = load_spec(verify.graph, verify.generatingClass);
      const auto engine = parse_engine(verify.engine);
      if (verify.steps < 0) fail(ErrorCode::UsageError, "--steps must be non-negative");
      computing = true;
      std::ostringstream report;
      status = report_checks(verify_spec(spec, engine, time_grid(verify.t0, verify.t1, verify.steps)), report, err);
      out << report.str();
      return status;
    }
  } catch (const Error& e) {
    err << to_string(e.code()) << ": " << e.what() << "\n";
    return !computing && is_input_error(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    err << "InternalError: " << e.what() << "\n";
    return 1;
  }
  out << buffer.str();
  return status;
}

}  // namespace schemewalk::cli
