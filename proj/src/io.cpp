#include "qcog/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "qcog/errors.hpp"

namespace qcog::io {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::size_t stop = end == std::string_view::npos ? text.size() : end;
    std::string_view line = text.substr(start, stop - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_double_field(std::string_view field, std::size_t line_number) {
  std::string_view body = trim(field);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (ec != std::errc() || ptr != body.data() + body.size() || body.empty()) {
    fail(errc::parse_error, "line " + std::to_string(line_number) + ": '" +
                                std::string(field) + "' is not a number");
  }
  return value;
}

json parse_json_text(std::string_view text, const char* what) {
  json parsed = json::parse(text, nullptr, false);
  if (parsed.is_discarded()) {
    fail(errc::parse_error, std::string(what) + ": invalid JSON");
  }
  return parsed;
}

const json& require_key(const json& object, const char* key, const char* ctx) {
  if (!object.is_object() || !object.contains(key)) {
    fail(errc::parse_error, std::string(ctx) + ": missing key '" + key + "'");
  }
  return object.at(key);
}

std::string require_string(const json& object, const char* key, const char* ctx) {
  const json& value = require_key(object, key, ctx);
  if (!value.is_string()) {
    fail(errc::parse_error, std::string(ctx) + ": '" + key + "' must be a string");
  }
  return value.get<std::string>();
}

std::uint64_t require_count(const json& object, const char* key, const char* ctx) {
  const json& value = require_key(object, key, ctx);
  if (value.is_number_unsigned()) return value.get<std::uint64_t>();
  if (value.is_number_integer() && value.get<std::int64_t>() >= 0) {
    return static_cast<std::uint64_t>(value.get<std::int64_t>());
  }
  fail(errc::parse_error,
       std::string(ctx) + ": '" + key + "' must be a nonnegative integer");
}

CoincidenceCounts parse_counts_table(const json& object, const char* key,
                                     const char* label) {
  const json& table = require_key(object, key, "counts");
  CoincidenceCounts counts;
  counts.label = label;
  counts.outcomes = {require_string(table, "x1", key), require_string(table, "x2", key),
                     require_string(table, "y1", key), require_string(table, "y2", key)};
  counts.n11 = require_count(table, "n11", key);
  counts.n12 = require_count(table, "n12", key);
  counts.n21 = require_count(table, "n21", key);
  counts.n22 = require_count(table, "n22", key);
  return counts;
}

MarginalPair parse_marginal_pair(const json& object, const char* key, const char* label) {
  const json& pair = require_key(object, key, "marginals");
  MarginalPair result;
  result.label = label;
  result.outcome1 = require_string(pair, "x1", key);
  result.outcome2 = require_string(pair, "x2", key);
  result.c1 = require_count(pair, "n1", key);
  result.c2 = require_count(pair, "n2", key);
  return result;
}

const char* effect_name(Effect e) {
  switch (e) {
    case Effect::weakening: return "weakening";
    case Effect::strengthening: return "strengthening";
    default: return "neutral";
  }
}

json outcomes_json(const OutcomeLabels& o) {
  return json{{"x1", o.x1}, {"x2", o.x2}, {"y1", o.y1}, {"y2", o.y2}};
}

json experiment_json(const ChshExperiment& e) {
  return json{{"label", e.label},
              {"outcomes", outcomes_json(e.outcomes)},
              {"probabilities",
               {{"p11", e.probabilities.p11},
                {"p12", e.probabilities.p12},
                {"p21", e.probabilities.p21},
                {"p22", e.probabilities.p22}}},
              {"expectation", e.expectation}};
}

json complex_vector_json(const ComplexVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out.push_back(json::array({v[i].real(), v[i].imag()}));
  }
  return out;
}

std::string format_g17(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

}  // namespace

std::string fnv1a_digest(std::string_view bytes) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(hash));
  return buffer;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    fail(errc::io_error, "cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    fail(errc::io_error, "error while reading '" + path + "'");
  }
  return std::move(buffer).str();
}

void write_output(const std::string& path, std::string_view bytes) {
  if (path == "-") {
    std::cout.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    fail(errc::io_error, "cannot open '" + path + "' for writing");
  }
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) {
    fail(errc::io_error, "error while writing '" + path + "'");
  }
}

RawDataset parse_dataset_csv(std::string_view text) {
  std::vector<std::string_view> lines = split_lines(text);
  if (lines.empty() || trim(lines[0]) != "exemplar,mu_a,mu_b,mu_a_or_b") {
    fail(errc::parse_error, "expected header 'exemplar,mu_a,mu_b,mu_a_or_b'");
  }
  RawDataset raw;
  std::vector<double> a;
  std::vector<double> b;
  std::vector<double> a_or_b;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    std::vector<std::string_view> fields = split_fields(lines[i]);
    if (fields.size() != 4) {
      fail(errc::parse_error, "line " + std::to_string(i + 1) + ": expected 4 fields, got " +
                                  std::to_string(fields.size()));
    }
    std::string_view label = trim(fields[0]);
    if (label.empty()) {
      fail(errc::parse_error, "line " + std::to_string(i + 1) + ": empty exemplar name");
    }
    raw.exemplars.emplace_back(label);
    a.push_back(parse_double_field(fields[1], i + 1));
    b.push_back(parse_double_field(fields[2], i + 1));
    a_or_b.push_back(parse_double_field(fields[3], i + 1));
  }
  auto n = static_cast<Eigen::Index>(raw.exemplars.size());
  raw.mu_a = Eigen::Map<const Eigen::ArrayXd>(a.data(), n);
  raw.mu_b = Eigen::Map<const Eigen::ArrayXd>(b.data(), n);
  raw.mu_a_or_b = Eigen::Map<const Eigen::ArrayXd>(a_or_b.data(), n);
  return raw;
}

std::vector<int> parse_signs(std::string_view text) {
  std::vector<int> signs;
  for (char c : text) {
    if (c == '+') {
      signs.push_back(1);
    } else if (c == '-') {
      signs.push_back(-1);
    } else if (c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      continue;
    } else {
      fail(errc::parse_error, std::string("unexpected character '") + c + "' in sign list");
    }
  }
  if (signs.empty()) {
    fail(errc::parse_error, "sign list is empty");
  }
  return signs;
}

std::array<CoincidenceCounts, 4> parse_counts_json(std::string_view text) {
  json parsed = parse_json_text(text, "counts");
  return {parse_counts_table(parsed, "AB", "AB"), parse_counts_table(parsed, "ApB", "A'B"),
          parse_counts_table(parsed, "ABp", "AB'"),
          parse_counts_table(parsed, "ApBp", "A'B'")};
}

MarginalCounts parse_marginals_json(std::string_view text) {
  json parsed = parse_json_text(text, "marginals");
  MarginalCounts m;
  m.a = parse_marginal_pair(parsed, "A", "A");
  m.ap = parse_marginal_pair(parsed, "Ap", "A'");
  m.b = parse_marginal_pair(parsed, "B", "B");
  m.bp = parse_marginal_pair(parsed, "Bp", "B'");
  return m;
}

ConceptPairGrid parse_grid_json(std::string_view text) {
  json parsed = parse_json_text(text, "grid");
  auto read_pairs = [&](const char* key) {
    const json& value = require_key(parsed, key, "grid");
    if (!value.is_array() || value.size() != 2) {
      fail(errc::parse_error, std::string("grid: '") + key + "' must be a 2x2 array");
    }
    std::array<std::array<std::string, 2>, 2> pairs;
    for (std::size_t i = 0; i < 2; ++i) {
      const json& pair = value.at(i);
      if (!pair.is_array() || pair.size() != 2 || !pair.at(0).is_string() ||
          !pair.at(1).is_string()) {
        fail(errc::parse_error, std::string("grid: '") + key + "' must hold word pairs");
      }
      pairs[i] = {pair.at(0).get<std::string>(), pair.at(1).get<std::string>()};
    }
    return pairs;
  };
  ConceptPairGrid grid;
  grid.subjects = read_pairs("subjects");
  grid.verbs = read_pairs("verbs");
  return grid;
}

json fit_report(const DisjunctionDataset& ds, const InterferenceFit& fit) {
  std::vector<Effect> effects = classify_interference(fit.interference, fit.beta_deg);
  json rows = json::array();
  for (Eigen::Index k = 0; k < ds.size(); ++k) {
    rows.push_back(json{{"exemplar", ds.exemplars()[static_cast<std::size_t>(k)]},
                        {"mu_a", ds.mu_a.weights[k]},
                        {"mu_b", ds.mu_b.weights[k]},
                        {"mu_a_or_b", ds.mu_a_or_b.weights[k]},
                        {"interference", fit.interference[k]},
                        {"lambda", fit.lambda[k]},
                        {"theta_deg", fit.beta_deg[k]},
                        {"classification",
                         effect_name(effects[static_cast<std::size_t>(k)])}});
  }
  return json{{"anchor_index", fit.anchor},
              {"c_m", fit.c_m},
              {"rows", rows},
              {"vector_a", complex_vector_json(fit.vector_a)},
              {"vector_b", complex_vector_json(fit.vector_b)},
              {"max_residual", fit.residuals.max()}};
}

json chsh_report(const ChshReport& report) {
  json experiments = json::array();
  for (const ChshExperiment& e : report.experiments) {
    experiments.push_back(experiment_json(e));
  }
  return json{{"experiments", experiments},
              {"s", report.s},
              {"verdict", report.violates ? "violates" : "satisfies"}};
}

json chsh_report(const ProductModel& model) {
  ChshStatistic s =
      chsh_statistic(model.joint[0].expectation, model.joint[1].expectation,
                     model.joint[2].expectation, model.joint[3].expectation);
  json experiments = json::array();
  for (const ChshExperiment& e : model.joint) {
    experiments.push_back(experiment_json(e));
  }
  return json{{"marginal_expectations",
               {{"A", model.e_a}, {"A'", model.e_ap}, {"B", model.e_b}, {"B'", model.e_bp}}},
              {"experiments", experiments},
              {"s", s.s},
              {"verdict", s.violates ? "violates" : "satisfies"}};
}

namespace {

json grid_json(const ConceptPairGrid& grid) {
  return json{{"subjects", {{grid.subjects[0][0], grid.subjects[0][1]},
                            {grid.subjects[1][0], grid.subjects[1][1]}}},
              {"verbs", {{grid.verbs[0][0], grid.verbs[0][1]},
                         {grid.verbs[1][0], grid.verbs[1][1]}}}};
}

json corpus_header_json(const Corpus& corpus, const ConceptPairGrid& grid) {
  return json{{"source", corpus.source},
              {"document_count", corpus.documents.size()},
              {"grid", grid_json(grid)}};
}

}  // namespace

json corpus_report(const Corpus& corpus, const ConceptPairGrid& grid,
                   const std::array<CoincidenceCounts, 4>& counts, const ChshReport* chsh) {
  json report = corpus_header_json(corpus, grid);
  json tables = json::array();
  for (const CoincidenceCounts& c : counts) {
    tables.push_back(json{{"label", c.label},
                          {"outcomes", outcomes_json(c.outcomes)},
                          {"n11", c.n11},
                          {"n12", c.n12},
                          {"n21", c.n21},
                          {"n22", c.n22}});
  }
  report["counts"] = tables;
  if (chsh != nullptr) {
    report["chsh"] = chsh_report(*chsh);
  }
  return report;
}

json corpus_report(const Corpus& corpus, const ConceptPairGrid& grid,
                   const MarginalCounts& counts, const ChshReport* chsh) {
  json report = corpus_header_json(corpus, grid);
  json pairs = json::array();
  for (const MarginalPair* p : {&counts.a, &counts.ap, &counts.b, &counts.bp}) {
    pairs.push_back(json{{"label", p->label},
                         {"outcome1", p->outcome1},
                         {"outcome2", p->outcome2},
                         {"c1", p->c1},
                         {"c2", p->c2}});
  }
  report["marginals"] = pairs;
  if (chsh != nullptr) {
    report["chsh"] = chsh_report(*chsh);
  }
  return report;
}

std::string render_report(json report, const RunInfo& run) {
  report["run"] = json{{"subcommand", run.subcommand},
                       {"input_digest", run.input_digest},
                       {"options", run.options},
                       {"warnings", run.warnings}};
  return report.dump(2) + "\n";
}

std::string profile_csv(const ScreenProfile& profile) {
  std::string out = "x,rho_a,rho_b,rho_classical,rho_quantum,interference\n";
  for (Eigen::Index i = 0; i < profile.x.size(); ++i) {
    out += format_g17(profile.x[i]);
    out += ',';
    out += format_g17(profile.rho_a[i]);
    out += ',';
    out += format_g17(profile.rho_b[i]);
    out += ',';
    out += format_g17(profile.rho_classical[i]);
    out += ',';
    out += format_g17(profile.rho_quantum[i]);
    out += ',';
    out += format_g17(profile.interference[i]);
    out += '\n';
  }
  return out;
}

}  // namespace qcog::io
