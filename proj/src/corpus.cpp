#include "qcog/corpus.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "qcog/errors.hpp"

namespace qcog {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

// Decodes one UTF-8 scalar value starting at `pos`, advancing `pos`. Any
// malformed, overlong, surrogate, or out-of-range sequence consumes a single
// byte and yields U+FFFD, which is never a word character.
char32_t decode_utf8(std::string_view text, std::size_t& pos) {
  auto byte = [&](std::size_t i) { return static_cast<unsigned char>(text[i]); };
  unsigned char b0 = byte(pos);
  if (b0 < 0x80) {
    pos += 1;
    return b0;
  }
  auto continuation = [&](std::size_t i) {
    return i < text.size() && (byte(i) & 0xC0) == 0x80;
  };
  if ((b0 & 0xE0) == 0xC0) {
    if (!continuation(pos + 1)) {
      pos += 1;
      return kReplacement;
    }
    char32_t cp = ((b0 & 0x1Fu) << 6) | (byte(pos + 1) & 0x3Fu);
    if (cp < 0x80) {
      pos += 1;
      return kReplacement;
    }
    pos += 2;
    return cp;
  }
  if ((b0 & 0xF0) == 0xE0) {
    if (!continuation(pos + 1) || !continuation(pos + 2)) {
      pos += 1;
      return kReplacement;
    }
    char32_t cp =
        ((b0 & 0x0Fu) << 12) | ((byte(pos + 1) & 0x3Fu) << 6) | (byte(pos + 2) & 0x3Fu);
    if (cp < 0x800 || (cp >= 0xD800 && cp <= 0xDFFF)) {
      pos += 1;
      return kReplacement;
    }
    pos += 3;
    return cp;
  }
  if ((b0 & 0xF8) == 0xF0) {
    if (!continuation(pos + 1) || !continuation(pos + 2) || !continuation(pos + 3)) {
      pos += 1;
      return kReplacement;
    }
    char32_t cp = ((b0 & 0x07u) << 18) | ((byte(pos + 1) & 0x3Fu) << 12) |
                  ((byte(pos + 2) & 0x3Fu) << 6) | (byte(pos + 3) & 0x3Fu);
    if (cp < 0x10000 || cp > 0x10FFFF) {
      pos += 1;
      return kReplacement;
    }
    pos += 4;
    return cp;
  }
  pos += 1;
  return kReplacement;
}

bool is_word_char(char32_t cp) {
  if ((cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z') || (cp >= '0' && cp <= '9')) {
    return true;
  }
  if (cp < 0xC0) return false;
  if (cp == 0xD7 || cp == 0xF7) return false;         // multiplication / division signs
  if (cp >= 0x2000 && cp <= 0x206F) return false;     // general punctuation block
  if (cp == kReplacement) return false;               // stands for bytes that broke decoding
  return true;
}

char32_t fold_case(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  return cp;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string read_whole_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    fail(errc::io_error, "cannot open '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    fail(errc::io_error, "error while reading '" + path.string() + "'");
  }
  return std::move(buffer).str();
}

// True when `tokens` contains `phrase` as a consecutive run.
bool contains_phrase(const std::vector<std::string>& tokens,
                     const std::vector<std::string>& phrase) {
  if (phrase.empty() || phrase.size() > tokens.size()) return false;
  return std::search(tokens.begin(), tokens.end(), phrase.begin(), phrase.end()) !=
         tokens.end();
}

// Evaluates many phrase queries with one tokenization pass per document.
std::vector<std::uint64_t> count_documents_many(const Corpus& corpus,
                                                const std::vector<const PhraseQuery*>& queries) {
  std::vector<std::uint64_t> counts(queries.size(), 0);
  for (const Document& doc : corpus.documents) {
    std::vector<std::string> tokens = normalize_tokens(doc.body);
    for (std::size_t q = 0; q < queries.size(); ++q) {
      if (contains_phrase(tokens, queries[q]->tokens)) counts[q] += 1;
    }
  }
  return counts;
}

}  // namespace

std::vector<std::string> normalize_tokens(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char32_t cp = decode_utf8(text, pos);
    if (is_word_char(cp)) {
      append_utf8(current, fold_case(cp));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

PhraseQuery PhraseQuery::make(std::string_view text) {
  PhraseQuery query{normalize_tokens(text)};
  if (query.tokens.empty()) {
    fail(errc::invalid_argument, "phrase contains no word tokens");
  }
  return query;
}

Corpus load_corpus(const std::filesystem::path& path, CorpusFormat format) {
  Corpus corpus;
  corpus.source = path.string();
  std::error_code ec;
  if (format == CorpusFormat::one_doc_per_file) {
    if (!std::filesystem::is_directory(path, ec)) {
      fail(errc::io_error, "'" + path.string() + "' is not a readable directory");
    }
    std::filesystem::directory_iterator it(path, ec);
    if (ec) {
      fail(errc::io_error, "cannot list '" + path.string() + "': " + ec.message());
    }
    for (const auto& entry : it) {
      if (!entry.is_regular_file() || entry.path().extension() != ".txt") continue;
      corpus.documents.push_back(
          {entry.path().filename().string(), read_whole_file(entry.path())});
    }
  } else {
    if (!std::filesystem::is_regular_file(path, ec)) {
      fail(errc::io_error, "'" + path.string() + "' is not a readable file");
    }
    std::string text = read_whole_file(path);
    std::size_t line = 0;
    std::size_t start = 0;
    while (start < text.size()) {
      std::size_t end = text.find('\n', start);
      std::size_t stop = end == std::string::npos ? text.size() : end;
      if (stop > start && text[stop - 1] == '\r') --stop;
      corpus.documents.push_back({std::to_string(++line), text.substr(start, stop - start)});
      if (end == std::string::npos) break;
      start = end + 1;
    }
  }
  std::sort(corpus.documents.begin(), corpus.documents.end(),
            [](const Document& a, const Document& b) { return a.id < b.id; });
  if (corpus.documents.empty()) {
    fail(errc::empty_corpus, "no documents found in '" + path.string() + "'");
  }
  return corpus;
}

std::uint64_t count_documents_with_phrase(const Corpus& corpus, const PhraseQuery& query) {
  return count_documents_many(corpus, {&query})[0];
}

void validate_grid(const ConceptPairGrid& grid) {
  std::unordered_set<std::string> seen;
  for (const auto& pairs : {grid.subjects, grid.verbs}) {
    for (const auto& pair : pairs) {
      for (const auto& word : pair) {
        std::vector<std::string> tokens = normalize_tokens(word);
        if (tokens.size() != 1) {
          fail(errc::invalid_argument,
               "grid entry '" + word + "' must normalize to a single word");
        }
        if (!seen.insert(tokens[0]).second) {
          fail(errc::duplicate_label, "grid word '" + tokens[0] + "' appears twice");
        }
      }
    }
  }
}

std::array<CoincidenceCounts, 4> build_coincidence_counts(const Corpus& corpus,
                                                          const ConceptPairGrid& grid) {
  validate_grid(grid);
  // Experiments in the fixed order AB, A'B, AB', A'B':
  // (subject pair, verb pair) indices (0,0), (1,0), (0,1), (1,1).
  static constexpr std::array<std::array<std::size_t, 2>, 4> kDesign = {
      {{0, 0}, {1, 0}, {0, 1}, {1, 1}}};
  static constexpr std::array<const char*, 4> kLabels = {"AB", "A'B", "AB'", "A'B'"};

  std::array<CoincidenceCounts, 4> tables;
  std::vector<PhraseQuery> queries;
  queries.reserve(16);
  for (std::size_t e = 0; e < 4; ++e) {
    const auto& subjects = grid.subjects[kDesign[e][0]];
    const auto& verbs = grid.verbs[kDesign[e][1]];
    tables[e].label = kLabels[e];
    tables[e].outcomes = {normalize_tokens(subjects[0])[0], normalize_tokens(subjects[1])[0],
                          normalize_tokens(verbs[0])[0], normalize_tokens(verbs[1])[0]};
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        queries.push_back(PhraseQuery::make(subjects[i] + " " + verbs[j]));
      }
    }
  }
  std::vector<const PhraseQuery*> pointers;
  pointers.reserve(queries.size());
  for (const auto& q : queries) pointers.push_back(&q);
  std::vector<std::uint64_t> counts = count_documents_many(corpus, pointers);
  for (std::size_t e = 0; e < 4; ++e) {
    tables[e].n11 = counts[4 * e + 0];
    tables[e].n12 = counts[4 * e + 1];
    tables[e].n21 = counts[4 * e + 2];
    tables[e].n22 = counts[4 * e + 3];
  }
  return tables;
}

MarginalCounts build_marginal_counts(const Corpus& corpus, const ConceptPairGrid& grid) {
  validate_grid(grid);
  std::vector<PhraseQuery> queries;
  queries.reserve(8);
  for (const auto& pairs : {grid.subjects, grid.verbs}) {
    for (const auto& pair : pairs) {
      queries.push_back(PhraseQuery::make(pair[0]));
      queries.push_back(PhraseQuery::make(pair[1]));
    }
  }
  std::vector<const PhraseQuery*> pointers;
  pointers.reserve(queries.size());
  for (const auto& q : queries) pointers.push_back(&q);
  std::vector<std::uint64_t> counts = count_documents_many(corpus, pointers);

  auto pair_at = [&](std::size_t base, const char* label) {
    MarginalPair p;
    p.label = label;
    p.outcome1 = queries[base].tokens[0];
    p.outcome2 = queries[base + 1].tokens[0];
    p.c1 = counts[base];
    p.c2 = counts[base + 1];
    return p;
  };
  MarginalCounts m;
  m.a = pair_at(0, "A");
  m.ap = pair_at(2, "A'");
  m.b = pair_at(4, "B");
  m.bp = pair_at(6, "B'");
  return m;
}

}  // namespace qcog
