#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qcog/chsh.hpp"
#include "qcog/corpus.hpp"
#include "qcog/dataset.hpp"
#include "qcog/interference.hpp"
#include "qcog/slit.hpp"

namespace qcog::io {

using json = nlohmann::ordered_json;

/// FNV-1a 64-bit digest of a byte string, as 16 lowercase hex digits.
std::string fnv1a_digest(std::string_view bytes);

/// Reads a whole file; fails with errc::io_error.
std::string read_file(const std::string& path);

/// Writes bytes to a file (or stdout when path is "-").
void write_output(const std::string& path, std::string_view bytes);

// -- parsers ---------------------------------------------------------------

/// Parses disjunction-table CSV with header "exemplar,mu_a,mu_b,mu_a_or_b".
RawDataset parse_dataset_csv(std::string_view text);

/// Parses a +/- sign sequence such as "+,-,-,+" or "+--+".
std::vector<int> parse_signs(std::string_view text);

/// Parses four coincidence tables keyed "AB", "ApB", "ABp", "ApBp",
/// each {x1,x2,y1,y2,n11,n12,n21,n22}. Order: AB, ApB, ABp, ApBp.
std::array<CoincidenceCounts, 4> parse_counts_json(std::string_view text);

/// Parses marginal counts keyed "A", "Ap", "B", "Bp",
/// each {x1,x2,n1,n2}.
MarginalCounts parse_marginals_json(std::string_view text);

/// Parses {"subjects":[[..,..],[..,..]],"verbs":[[..,..],[..,..]]}.
ConceptPairGrid parse_grid_json(std::string_view text);

// -- reports ---------------------------------------------------------------

/// Provenance block appended to every JSON report.
struct RunInfo {
  std::string subcommand;
  std::string input_digest;       // fnv1a_digest of the primary input bytes
  json options = json::object();  // effective option values
  std::vector<std::string> warnings;
};

json fit_report(const DisjunctionDataset& ds, const InterferenceFit& fit);
json chsh_report(const ChshReport& report);
json chsh_report(const ProductModel& model);
// Corpus count reports; `chsh` may be null when no statistic was chained.
json corpus_report(const Corpus& corpus, const ConceptPairGrid& grid,
                   const std::array<CoincidenceCounts, 4>& counts, const ChshReport* chsh);
json corpus_report(const Corpus& corpus, const ConceptPairGrid& grid,
                   const MarginalCounts& counts, const ChshReport* chsh);

/// Serializes a report plus its "run" block with a trailing newline.
std::string render_report(json report, const RunInfo& run);

/// Screen profile as CSV: header
/// "x,rho_a,rho_b,rho_classical,rho_quantum,interference", %.17g values.
std::string profile_csv(const ScreenProfile& profile);

}  // namespace qcog::io
