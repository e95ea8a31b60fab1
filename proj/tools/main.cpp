#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "qcog/chsh.hpp"
#include "qcog/corpus.hpp"
#include "qcog/dataset.hpp"
#include "qcog/datasets.hpp"
#include "qcog/errors.hpp"
#include "qcog/interference.hpp"
#include "qcog/io.hpp"
#include "qcog/slit.hpp"

namespace {

// Process exit codes by failure class: 1 I/O, 2 validation/schema/config,
// 3 model does not exist, 4 degenerate counts.
int exit_code_for(qcog::errc code) {
  switch (code) {
    case qcog::errc::io_error:
    case qcog::errc::empty_corpus:
      return 1;
    case qcog::errc::not_representable:
    case qcog::errc::constraint_violated:
    case qcog::errc::zero_anchor_mass:
      return 3;
    case qcog::errc::empty_table:
    case qcog::errc::all_zero_table:
    case qcog::errc::empty_marginal:
      return 4;
    default:
      return 2;
  }
}

// Human-readable notes go to stdout unless the report itself occupies it.
std::ostream& note_stream(const std::string& out) {
  return out == "-" ? std::cerr : std::cout;
}

struct FitOptions {
  std::string input;
  std::string demo;
  std::string signs_path;
  bool reference_signs = false;
  double tolerance = 0.01;
  std::string out = "-";
};

int run_fit(const FitOptions& opt) {
  std::string text;
  std::string input_name;
  if (!opt.demo.empty()) {
    text = std::string(qcog::datasets::fruits_vegetables_csv());
    input_name = "demo:" + opt.demo;
  } else if (!opt.input.empty()) {
    text = qcog::io::read_file(opt.input);
    input_name = opt.input;
  } else {
    qcog::fail(qcog::errc::invalid_argument, "fit needs --input or --demo");
  }

  qcog::RawDataset raw = qcog::io::parse_dataset_csv(text);
  qcog::DisjunctionDataset ds = qcog::validate_dataset(raw, opt.tolerance);

  std::optional<qcog::SignAssignment> signs;
  std::string signs_name = "greedy";
  if (opt.reference_signs) {
    signs = qcog::SignAssignment{qcog::datasets::fruits_vegetables_reference_signs(),
                                 qcog::SignAssignment::Source::user};
    signs_name = "reference";
  } else if (!opt.signs_path.empty()) {
    signs = qcog::SignAssignment{qcog::io::parse_signs(qcog::io::read_file(opt.signs_path)),
                                 qcog::SignAssignment::Source::user};
    signs_name = opt.signs_path;
  }

  qcog::InterferenceFit fit = qcog::fit_disjunction(ds, signs);

  qcog::io::RunInfo run;
  run.subcommand = "fit";
  run.input_digest = qcog::io::fnv1a_digest(text);
  run.options = {{"input", input_name}, {"signs", signs_name}, {"tolerance", opt.tolerance}};
  qcog::io::write_output(opt.out, qcog::io::render_report(qcog::io::fit_report(ds, fit), run));

  note_stream(opt.out) << "fit: anchor '" << ds.exemplars()[static_cast<std::size_t>(fit.anchor)]
                       << "', c_m = " << fit.c_m
                       << ", max residual = " << fit.residuals.max() << "\n";
  return 0;
}

struct ChshOptions {
  std::string input;
  std::string marginals;
  std::string demo;
  std::string out = "-";
};

int run_chsh(const ChshOptions& opt) {
  std::string text;
  std::string input_name;
  bool product = false;
  if (opt.demo == "animal-acts") {
    text = std::string(qcog::datasets::animal_acts_json());
    input_name = "demo:animal-acts";
  } else if (opt.demo == "animal-acts-product") {
    text = std::string(qcog::datasets::animal_acts_marginals_json());
    input_name = "demo:animal-acts-product";
    product = true;
  } else if (!opt.marginals.empty()) {
    text = qcog::io::read_file(opt.marginals);
    input_name = opt.marginals;
    product = true;
  } else if (!opt.input.empty()) {
    text = qcog::io::read_file(opt.input);
    input_name = opt.input;
  } else {
    qcog::fail(qcog::errc::invalid_argument, "chsh needs --input, --marginals, or --demo");
  }

  qcog::io::json report;
  double s = 0.0;
  bool violates = false;
  if (product) {
    qcog::MarginalCounts counts = qcog::io::parse_marginals_json(text);
    qcog::ProductModel model = qcog::product_expectations(counts);
    report = qcog::io::chsh_report(model);
    s = report.at("s").get<double>();
    violates = report.at("verdict").get<std::string>() == "violates";
  } else {
    std::array<qcog::CoincidenceCounts, 4> tables = qcog::io::parse_counts_json(text);
    qcog::ChshReport chsh = qcog::chsh_from_counts(tables);
    report = qcog::io::chsh_report(chsh);
    s = chsh.s;
    violates = chsh.violates;
  }

  qcog::io::RunInfo run;
  run.subcommand = "chsh";
  run.input_digest = qcog::io::fnv1a_digest(text);
  run.options = {{"input", input_name}, {"model", product ? "product" : "coincidence"}};
  qcog::io::write_output(opt.out, qcog::io::render_report(std::move(report), run));

  note_stream(opt.out) << "chsh: S = " << s << " ("
                       << (violates ? "violates" : "satisfies") << " the |S| <= 2 bound)\n";
  return 0;
}

struct CorpusOptions {
  std::string corpus;
  std::string format = "auto";
  std::string grid;
  std::string demo;
  std::string mode = "coincidence";
  bool chsh = false;
  std::string out = "-";
};

std::string corpus_digest(const qcog::Corpus& corpus) {
  std::string stream;
  for (const qcog::Document& doc : corpus.documents) {
    stream += doc.id;
    stream += '\0';
    stream += doc.body;
    stream += '\0';
  }
  return qcog::io::fnv1a_digest(stream);
}

int run_corpus(const CorpusOptions& opt) {
  if (opt.corpus.empty()) {
    qcog::fail(qcog::errc::invalid_argument, "corpus needs --corpus");
  }
  qcog::CorpusFormat format;
  if (opt.format == "files") {
    format = qcog::CorpusFormat::one_doc_per_file;
  } else if (opt.format == "lines") {
    format = qcog::CorpusFormat::one_doc_per_line;
  } else {
    std::error_code ec;
    format = std::filesystem::is_directory(opt.corpus, ec)
                 ? qcog::CorpusFormat::one_doc_per_file
                 : qcog::CorpusFormat::one_doc_per_line;
  }
  qcog::Corpus corpus = qcog::load_corpus(opt.corpus, format);

  std::string grid_name;
  qcog::ConceptPairGrid grid;
  if (!opt.demo.empty()) {
    grid = qcog::datasets::animal_acts_grid();
    grid_name = "demo:" + opt.demo;
  } else if (!opt.grid.empty()) {
    grid = qcog::io::parse_grid_json(qcog::io::read_file(opt.grid));
    grid_name = opt.grid;
  } else {
    qcog::fail(qcog::errc::invalid_argument, "corpus needs --grid or --demo");
  }
  qcog::validate_grid(grid);

  qcog::io::RunInfo run;
  run.subcommand = "corpus";
  run.input_digest = corpus_digest(corpus);
  run.options = {{"corpus", opt.corpus},
                 {"format", format == qcog::CorpusFormat::one_doc_per_file ? "files" : "lines"},
                 {"grid", grid_name},
                 {"mode", opt.mode},
                 {"chsh", opt.chsh}};

  qcog::io::json report;
  std::string summary;
  if (opt.mode == "marginal") {
    qcog::MarginalCounts counts = qcog::build_marginal_counts(corpus, grid);
    if (opt.chsh) {
      qcog::ChshReport chsh = qcog::chsh_from_marginals(counts);
      report = qcog::io::corpus_report(corpus, grid, counts, &chsh);
      summary = "S = " + std::to_string(chsh.s) +
                (chsh.violates ? " (violates)" : " (satisfies)");
    } else {
      report = qcog::io::corpus_report(corpus, grid, counts, nullptr);
      summary = "marginal counts collected";
    }
  } else if (opt.mode == "coincidence") {
    std::array<qcog::CoincidenceCounts, 4> counts = qcog::build_coincidence_counts(corpus, grid);
    if (opt.chsh) {
      qcog::ChshReport chsh = qcog::chsh_from_counts(counts);
      report = qcog::io::corpus_report(corpus, grid, counts, &chsh);
      summary = "S = " + std::to_string(chsh.s) +
                (chsh.violates ? " (violates)" : " (satisfies)");
    } else {
      report = qcog::io::corpus_report(corpus, grid, counts, nullptr);
      summary = "coincidence counts collected";
    }
  } else {
    qcog::fail(qcog::errc::invalid_argument, "mode must be 'coincidence' or 'marginal'");
  }
  qcog::io::write_output(opt.out, qcog::io::render_report(std::move(report), run));

  note_stream(opt.out) << "corpus: " << corpus.documents.size() << " documents, " << summary
                       << "\n";
  return 0;
}

struct SlitOptions {
  double wavelength = 500e-9;
  double separation = 1e-4;
  double distance = 1.0;
  double sigma = 5e-3;
  std::optional<double> x_min;
  std::optional<double> x_max;
  Eigen::Index points = 2001;
  std::string out = "-";
};

int run_slit(const SlitOptions& opt) {
  qcog::SlitConfig cfg = qcog::SlitConfig::with_default_grid(
      opt.wavelength, opt.separation, opt.distance, opt.sigma, opt.points);
  if (opt.x_min.has_value() != opt.x_max.has_value()) {
    qcog::fail(qcog::errc::invalid_config, "--xmin and --xmax must be given together");
  }
  if (opt.x_min.has_value()) {
    cfg.x_min = *opt.x_min;
    cfg.x_max = *opt.x_max;
  }
  qcog::ScreenProfile profile = qcog::screen_profile(cfg);
  qcog::io::write_output(opt.out, qcog::io::profile_csv(profile));

  note_stream(opt.out) << "slit: " << profile.x.size() << " samples on [" << cfg.x_min << ", "
                       << cfg.x_max << "], expected fringe spacing "
                       << cfg.wavelength * cfg.distance / cfg.separation << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interference models of concept disjunction, CHSH statistics from count "
               "data, and double-slit density profiles"};
  app.require_subcommand(1);

  FitOptions fit;
  CLI::App* fit_cmd =
      app.add_subcommand("fit", "Fit a complex Hilbert-space model to disjunction data");
  CLI::Option* fit_input = fit_cmd->add_option("--input", fit.input, "Dataset CSV path");
  CLI::Option* fit_demo =
      fit_cmd->add_option("--demo", fit.demo, "Bundled dataset")
          ->check(CLI::IsMember({"fruits-vegetables"}));
  CLI::Option* fit_signs =
      fit_cmd->add_option("--signs", fit.signs_path, "File with a +/- sign per exemplar");
  CLI::Option* fit_ref = fit_cmd->add_flag("--reference-signs", fit.reference_signs,
                                           "Use the bundled dataset's reference signs");
  fit_cmd->add_option("--tolerance", fit.tolerance, "Column-sum validation tolerance")
      ->capture_default_str();
  fit_cmd->add_option("--out", fit.out, "Report path, or - for stdout")->capture_default_str();
  fit_input->excludes(fit_demo);
  fit_signs->excludes(fit_ref);

  ChshOptions chsh;
  CLI::App* chsh_cmd =
      app.add_subcommand("chsh", "Compute the CHSH statistic from count tables");
  CLI::Option* chsh_input =
      chsh_cmd->add_option("--input", chsh.input, "Coincidence counts JSON path");
  CLI::Option* chsh_marg =
      chsh_cmd->add_option("--marginals", chsh.marginals, "Marginal counts JSON path");
  CLI::Option* chsh_demo =
      chsh_cmd->add_option("--demo", chsh.demo, "Bundled counts")
          ->check(CLI::IsMember({"animal-acts", "animal-acts-product"}));
  chsh_cmd->add_option("--out", chsh.out, "Report path, or - for stdout")
      ->capture_default_str();
  chsh_input->excludes(chsh_marg)->excludes(chsh_demo);
  chsh_marg->excludes(chsh_demo);

  CorpusOptions corpus;
  CLI::App* corpus_cmd =
      app.add_subcommand("corpus", "Count subject-verb phrases in a document collection");
  corpus_cmd->add_option("--corpus", corpus.corpus, "Corpus directory or file")->required();
  corpus_cmd->add_option("--format", corpus.format, "Corpus layout")
      ->check(CLI::IsMember({"auto", "files", "lines"}))
      ->capture_default_str();
  CLI::Option* corpus_grid =
      corpus_cmd->add_option("--grid", corpus.grid, "Subject/verb grid JSON path");
  CLI::Option* corpus_demo = corpus_cmd->add_option("--demo", corpus.demo, "Bundled grid")
                                 ->check(CLI::IsMember({"animal-acts"}));
  corpus_cmd->add_option("--mode", corpus.mode, "Count tables to build")
      ->check(CLI::IsMember({"coincidence", "marginal"}))
      ->capture_default_str();
  corpus_cmd->add_flag("--chsh", corpus.chsh, "Chain the counts into a CHSH statistic");
  corpus_cmd->add_option("--out", corpus.out, "Report path, or - for stdout")
      ->capture_default_str();
  corpus_grid->excludes(corpus_demo);

  SlitOptions slit;
  CLI::App* slit_cmd =
      app.add_subcommand("slit", "Sample double-slit density profiles on a screen");
  slit_cmd->add_option("--wavelength", slit.wavelength, "Wavelength in meters")
      ->capture_default_str();
  slit_cmd->add_option("--separation", slit.separation, "Slit separation in meters")
      ->capture_default_str();
  slit_cmd->add_option("--distance", slit.distance, "Screen distance in meters")
      ->capture_default_str();
  slit_cmd->add_option("--sigma", slit.sigma, "Gaussian envelope width in meters")
      ->capture_default_str();
  slit_cmd->add_option("--xmin", slit.x_min, "Grid start in meters");
  slit_cmd->add_option("--xmax", slit.x_max, "Grid end in meters");
  slit_cmd->add_option("--points", slit.points, "Grid point count")->capture_default_str();
  slit_cmd->add_option("--out", slit.out, "CSV path, or - for stdout")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (fit_cmd->parsed()) return run_fit(fit);
    if (chsh_cmd->parsed()) return run_chsh(chsh);
    if (corpus_cmd->parsed()) return run_corpus(corpus);
    if (slit_cmd->parsed()) return run_slit(slit);
  } catch (const qcog::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
