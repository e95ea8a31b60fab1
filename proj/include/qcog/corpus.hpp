#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qcog/chsh.hpp"

namespace qcog {

struct Document {
  std::string id;
  std::string body;
};

/// An immutable document collection, ordered lexicographically by id.
struct Corpus {
  std::vector<Document> documents;
  std::string source;  // path the corpus was loaded from, or a description
};

enum class CorpusFormat {
  one_doc_per_file,  // directory of .txt files, id = file name
  one_doc_per_line,  // single file, id = 1-based line number as text
};

/// Reads a corpus from disk. Invalid UTF-8 bytes are replaced during
/// normalization, not at load time. IoError on unreadable paths, EmptyCorpus
/// when no documents result.
Corpus load_corpus(const std::filesystem::path& path, CorpusFormat format);

/// Lowercased, punctuation-stripped, whitespace-split token stream.
/// Word characters are ASCII alphanumerics plus codepoints >= U+00C0 outside
/// the General Punctuation block and the two Latin-1 arithmetic signs; case
/// folding covers ASCII and Latin-1 uppercase. Everything else, including
/// U+FFFD from invalid byte sequences, separates tokens. Idempotent: tokens
/// re-normalize to themselves.
std::vector<std::string> normalize_tokens(std::string_view text);

/// A normalized, nonempty phrase. Tokens contain no separator characters.
struct PhraseQuery {
  std::vector<std::string> tokens;

  static PhraseQuery make(std::string_view text);
};

/// Number of documents whose token stream contains the phrase consecutively
/// at least once. A document counts at most once.
std::uint64_t count_documents_with_phrase(const Corpus& corpus, const PhraseQuery& query);

/// The 2x2 CHSH design over words: subject pairs (A1,A2), (A'1,A'2) and verb
/// pairs (B1,B2), (B'1,B'2). All eight entries must be distinct after
/// normalization.
struct ConceptPairGrid {
  std::array<std::array<std::string, 2>, 2> subjects;
  std::array<std::array<std::string, 2>, 2> verbs;
};

/// Throws on empty or duplicate normalized entries.
void validate_grid(const ConceptPairGrid& grid);

/// The four coincidence tables (order AB, A'B, AB', A'B'); cell n_ij counts
/// documents containing the phrase "subject_i verb_j". Tables with zero total
/// are returned as such; consumers raise AllZeroTable where CHSH needs them.
std::array<CoincidenceCounts, 4> build_coincidence_counts(const Corpus& corpus,
                                                          const ConceptPairGrid& grid);

/// Single-word document counts for the eight grid words, paired per
/// experiment. Zero-total pairs are returned as such; product_expectations
/// raises EmptyMarginal on them.
MarginalCounts build_marginal_counts(const Corpus& corpus, const ConceptPairGrid& grid);

}  // namespace qcog
