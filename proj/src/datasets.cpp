#include "qcog/datasets.hpp"

#include "qcog/io.hpp"

namespace qcog::datasets {

namespace {

// 24 exemplars of the concepts Fruits (A) and Vegetables (B) with measured
// membership weights for A, B, and "A or B".
constexpr std::string_view kFruitsVegetablesCsv =
    "exemplar,mu_a,mu_b,mu_a_or_b\n"
    "Almond,0.0359,0.0133,0.0269\n"
    "Acorn,0.0425,0.0108,0.0249\n"
    "Peanut,0.0372,0.0220,0.0269\n"
    "Olive,0.0586,0.0269,0.0415\n"
    "Coconut,0.0755,0.0125,0.0604\n"
    "Raisin,0.1026,0.0170,0.0555\n"
    "Elderberry,0.1138,0.0170,0.0480\n"
    "Apple,0.1184,0.0155,0.0688\n"
    "Mustard,0.0149,0.0250,0.0146\n"
    "Wheat,0.0136,0.0255,0.0165\n"
    "Root Ginger,0.0157,0.0323,0.0385\n"
    "Chili Pepper,0.0167,0.0446,0.0323\n"
    "Garlic,0.0100,0.0301,0.0293\n"
    "Mushroom,0.0140,0.0545,0.0604\n"
    "Watercress,0.0112,0.0658,0.0482\n"
    "Lentils,0.0095,0.0713,0.0338\n"
    "Green Pepper,0.0324,0.0788,0.0506\n"
    "Yam,0.0533,0.0724,0.0541\n"
    "Tomato,0.0881,0.0679,0.0688\n"
    "Pumpkin,0.0797,0.0713,0.0579\n"
    "Broccoli,0.0143,0.1284,0.0642\n"
    "Rice,0.0140,0.0412,0.0248\n"
    "Parsley,0.0155,0.0266,0.0308\n"
    "Black Pepper,0.0127,0.0294,0.0222\n";

constexpr std::string_view kFruitsVegetablesSigns =
    "+,-,-,+,+,+,-,+,-,+,+,-,-,+,-,+,-,+,+,-,-,-,-,+";

constexpr std::string_view kAnimalActsJson = R"({
  "AB":   {"x1": "horse", "x2": "bear", "y1": "growls", "y2": "whinnies",
           "n11": 670, "n12": 5650, "n21": 44800, "n22": 5},
  "ApB":  {"x1": "tiger", "x2": "cat", "y1": "growls", "y2": "whinnies",
           "n11": 5500, "n12": 0, "n21": 2530, "n22": 4},
  "ABp":  {"x1": "horse", "x2": "bear", "y1": "snorts", "y2": "meows",
           "n11": 11900, "n12": 41, "n21": 897, "n22": 156},
  "ApBp": {"x1": "tiger", "x2": "cat", "y1": "snorts", "y2": "meows",
           "n11": 96, "n12": 163, "n21": 5040, "n22": 26500}
}
)";

constexpr std::string_view kAnimalActsMarginalsJson = R"({
  "A":  {"x1": "horse", "x2": "bear", "n1": 169000000, "n2": 176000000},
  "Ap": {"x1": "tiger", "x2": "cat", "n1": 107000000, "n2": 721000000},
  "B":  {"x1": "growls", "x2": "whinnies", "n1": 1420000, "n2": 60800},
  "Bp": {"x1": "snorts", "x2": "meows", "n1": 449000, "n2": 349000}
}
)";

constexpr std::string_view kAnimalActsGridJson = R"({
  "subjects": [["horse", "bear"], ["tiger", "cat"]],
  "verbs": [["growls", "whinnies"], ["snorts", "meows"]]
}
)";

}  // namespace

std::string_view fruits_vegetables_csv() { return kFruitsVegetablesCsv; }

RawDataset fruits_vegetables() { return io::parse_dataset_csv(kFruitsVegetablesCsv); }

std::vector<int> fruits_vegetables_reference_signs() {
  return io::parse_signs(kFruitsVegetablesSigns);
}

std::string_view animal_acts_json() { return kAnimalActsJson; }

std::array<CoincidenceCounts, 4> animal_acts() { return io::parse_counts_json(kAnimalActsJson); }

std::string_view animal_acts_marginals_json() { return kAnimalActsMarginalsJson; }

MarginalCounts animal_acts_marginals() {
  return io::parse_marginals_json(kAnimalActsMarginalsJson);
}

std::string_view animal_acts_grid_json() { return kAnimalActsGridJson; }

ConceptPairGrid animal_acts_grid() { return io::parse_grid_json(kAnimalActsGridJson); }

}  // namespace qcog::datasets
