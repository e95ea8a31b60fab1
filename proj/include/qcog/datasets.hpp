#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "qcog/chsh.hpp"
#include "qcog/corpus.hpp"
#include "qcog/dataset.hpp"

// Bundled datasets, embedded as the same text the CLI accepts so the demo
// path exercises the regular parsers.

namespace qcog::datasets {

/// 24-exemplar concept-disjunction table for Fruits / Vegetables.
std::string_view fruits_vegetables_csv();
RawDataset fruits_vegetables();

/// The sign sequence under which the bundled table's reference solution
/// (its printed lambda column and state vectors) is reproduced.
std::vector<int> fruits_vegetables_reference_signs();

/// Four coincidence count tables for the animal-acts CHSH design
/// (horse/bear x growls/whinnies and the primed variants).
std::string_view animal_acts_json();
std::array<CoincidenceCounts, 4> animal_acts();

/// Single-word counts for the same eight words, for the product model.
std::string_view animal_acts_marginals_json();
MarginalCounts animal_acts_marginals();

/// The subject/verb grid of the same design, as corpus-grid JSON.
std::string_view animal_acts_grid_json();
ConceptPairGrid animal_acts_grid();

}  // namespace qcog::datasets
