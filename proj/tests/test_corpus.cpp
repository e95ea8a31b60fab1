#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "qcog/corpus.hpp"
#include "qcog/datasets.hpp"
#include "qcog/errors.hpp"
#include "support/testutil.hpp"

using qcog::errc;
using testutil::thrown_code;

namespace fs = std::filesystem;

namespace {

std::vector<std::string> tok(std::string_view text) { return qcog::normalize_tokens(text); }

/// Fresh directory under the system temp root, removed when the guard dies.
struct TempDir {
  fs::path path;

  TempDir() {
    path = fs::temp_directory_path() /
           ("qcog-test-" + std::to_string(std::rand()) + "-" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

void write_file(const fs::path& p, const std::string& body) {
  std::ofstream out(p, std::ios::binary);
  out << body;
}

qcog::ConceptPairGrid small_grid() {
  qcog::ConceptPairGrid grid;
  grid.subjects = {{{"horse", "bear"}, {"tiger", "cat"}}};
  grid.verbs = {{{"growls", "whinnies"}, {"snorts", "meows"}}};
  return grid;
}

}  // namespace

TEST_CASE("tokenization lowercases and splits on punctuation") {
  CHECK(tok("The Horse growls.") == std::vector<std::string>{"the", "horse", "growls"});
  CHECK(tok("  spaced\tout\nwords ") == std::vector<std::string>{"spaced", "out", "words"});
  CHECK(tok("don't") == std::vector<std::string>{"don", "t"});
  CHECK(tok("a2z 42") == std::vector<std::string>{"a2z", "42"});
  CHECK(tok("") == std::vector<std::string>{});
  CHECK(tok("...!!!") == std::vector<std::string>{});
}

TEST_CASE("tokenization folds Latin-1 uppercase and keeps letters beyond ASCII") {
  CHECK(tok("Äpfel") == std::vector<std::string>{"äpfel"});      // Ä -> ä
  CHECK(tok("straße") == std::vector<std::string>{"straße"});   // ß unchanged
  CHECK(tok("ÉLÈVE") == std::vector<std::string>{"élève"});
  // The two Latin-1 arithmetic signs separate although their neighbors fold.
  CHECK(tok("3×4") == std::vector<std::string>{"3", "4"});           // multiplication sign
  CHECK(tok("8÷2") == std::vector<std::string>{"8", "2"});           // division sign
}

TEST_CASE("general punctuation separates, other high codepoints do not") {
  CHECK(tok("one—two") == std::vector<std::string>{"one", "two"});   // em dash
  CHECK(tok("it’s") == std::vector<std::string>{"it", "s"});        // curly apostrophe
  CHECK(tok("a b") == std::vector<std::string>{"a", "b"});          // thin space
  CHECK(tok("世界") == std::vector<std::string>{"世界"});  // CJK stays one token
  CHECK(tok("\U0001f600") == std::vector<std::string>{"\U0001f600"});      // emoji is a word char
}

TEST_CASE("invalid UTF-8 bytes act as separators") {
  CHECK(tok("ab\xffzz") == std::vector<std::string>{"ab", "zz"});
  CHECK(tok("ab\x80zz") == std::vector<std::string>{"ab", "zz"});   // lone continuation
  CHECK(tok("ab\xc0\xafzz") == std::vector<std::string>{"ab", "zz"});  // overlong encoding
  CHECK(tok("ab\xe2") == std::vector<std::string>{"ab"});           // truncated sequence
  CHECK(tok("\xed\xa0\x80x") == std::vector<std::string>{"x"});     // surrogate half
  CHECK(tok("\xf5\x80\x80\x80x") == std::vector<std::string>{"x"});  // above U+10FFFF
}

TEST_CASE("tokenization is idempotent") {
  const char* samples[] = {"The Horse growls.", "Äpfel — straße",
                           "it’s 3×4 \U0001f600", "don't STOP"};
  for (const char* sample : samples) {
    auto once = tok(sample);
    std::string joined;
    for (const auto& t : once) {
      if (!joined.empty()) joined += ' ';
      joined += t;
    }
    CHECK(tok(joined) == once);
  }
}

TEST_CASE("phrase queries normalize like documents") {
  auto q = qcog::PhraseQuery::make("The HORSE growls!");
  CHECK(q.tokens == std::vector<std::string>{"the", "horse", "growls"});
  CHECK(thrown_code([] { qcog::PhraseQuery::make("..."); }) == errc::invalid_argument);
  CHECK(thrown_code([] { qcog::PhraseQuery::make(""); }) == errc::invalid_argument);
}

TEST_CASE("phrase matching needs consecutive tokens and counts presence once") {
  qcog::Corpus corpus;
  corpus.documents = {
      {"1", "The horse growls loudly."},
      {"2", "horse loudly growls"},
      {"3", "A horse growls; later the horse growls again."},
      {"4", "HORSE GROWLS"},
      {"5", "growls horse"},
  };
  auto q = qcog::PhraseQuery::make("horse growls");
  CHECK(qcog::count_documents_with_phrase(corpus, q) == 3);  // docs 1, 3 (once), 4

  auto single = qcog::PhraseQuery::make("growls");
  CHECK(qcog::count_documents_with_phrase(corpus, single) == 5);

  auto missing = qcog::PhraseQuery::make("bear whinnies");
  CHECK(qcog::count_documents_with_phrase(corpus, missing) == 0);
}

TEST_CASE("directory corpora take .txt files sorted by file name") {
  TempDir dir;
  write_file(dir.path / "b.txt", "beta");
  write_file(dir.path / "a.txt", "alpha");
  write_file(dir.path / "notes.md", "ignored");
  fs::create_directories(dir.path / "sub.txt");  // a directory, not a file
  auto corpus = qcog::load_corpus(dir.path, qcog::CorpusFormat::one_doc_per_file);
  REQUIRE(corpus.documents.size() == 2);
  CHECK(corpus.documents[0].id == "a.txt");
  CHECK(corpus.documents[0].body == "alpha");
  CHECK(corpus.documents[1].id == "b.txt");
  CHECK(corpus.documents[1].body == "beta");
}

TEST_CASE("line corpora number before sorting, so ids sort as text") {
  TempDir dir;
  std::string lines;
  for (int i = 1; i <= 11; ++i) lines += "line " + std::to_string(i) + "\r\n";
  write_file(dir.path / "docs.txt", lines);
  auto corpus = qcog::load_corpus(dir.path / "docs.txt", qcog::CorpusFormat::one_doc_per_line);
  REQUIRE(corpus.documents.size() == 11);
  // Lexicographic: "1", "10", "11", "2", ... and the CR is stripped.
  CHECK(corpus.documents[0].id == "1");
  CHECK(corpus.documents[0].body == "line 1");
  CHECK(corpus.documents[1].id == "10");
  CHECK(corpus.documents[1].body == "line 10");
  CHECK(corpus.documents[3].id == "2");
  CHECK(corpus.documents[3].body == "line 2");
}

TEST_CASE("a trailing newline does not create an empty document") {
  TempDir dir;
  write_file(dir.path / "docs.txt", "only line\n");
  auto corpus = qcog::load_corpus(dir.path / "docs.txt", qcog::CorpusFormat::one_doc_per_line);
  REQUIRE(corpus.documents.size() == 1);
  CHECK(corpus.documents[0].body == "only line");
}

TEST_CASE("empty or unreadable corpora are rejected") {
  TempDir dir;
  CHECK(thrown_code([&] {
          qcog::load_corpus(dir.path, qcog::CorpusFormat::one_doc_per_file);
        }) == errc::empty_corpus);

  write_file(dir.path / "empty.txt", "");
  CHECK(thrown_code([&] {
          qcog::load_corpus(dir.path / "empty.txt", qcog::CorpusFormat::one_doc_per_line);
        }) == errc::empty_corpus);

  CHECK(thrown_code([&] {
          qcog::load_corpus(dir.path / "missing", qcog::CorpusFormat::one_doc_per_file);
        }) == errc::io_error);
  CHECK(thrown_code([&] {
          qcog::load_corpus(dir.path / "missing.txt", qcog::CorpusFormat::one_doc_per_line);
        }) == errc::io_error);
}

TEST_CASE("grid validation wants eight distinct single words") {
  validate_grid(small_grid());  // the bundled shape is fine

  auto grid = small_grid();
  grid.verbs[1][0] = "snorts loudly";
  CHECK(thrown_code([&] { qcog::validate_grid(grid); }) == errc::invalid_argument);

  grid = small_grid();
  grid.verbs[1][0] = "";
  CHECK(thrown_code([&] { qcog::validate_grid(grid); }) == errc::invalid_argument);

  grid = small_grid();
  grid.verbs[1][1] = "Horse";  // collides with subjects[0][0] after folding
  CHECK(thrown_code([&] { qcog::validate_grid(grid); }) == errc::duplicate_label);
}

TEST_CASE("coincidence counting reproduces planted multiplicities") {
  std::array<qcog::CoincidenceCounts, 4> planted;
  const std::uint64_t cells[4][4] = {{7, 3, 2, 5}, {1, 0, 4, 2}, {3, 1, 1, 1}, {2, 2, 5, 9}};
  auto grid = small_grid();
  const char* labels[4] = {"AB", "A'B", "AB'", "A'B'"};
  const int subject_pair[4] = {0, 1, 0, 1};
  const int verb_pair[4] = {0, 0, 1, 1};
  for (int e = 0; e < 4; ++e) {
    auto& t = planted[static_cast<std::size_t>(e)];
    t.label = labels[e];
    t.outcomes.x1 = grid.subjects[static_cast<std::size_t>(subject_pair[e])][0];
    t.outcomes.x2 = grid.subjects[static_cast<std::size_t>(subject_pair[e])][1];
    t.outcomes.y1 = grid.verbs[static_cast<std::size_t>(verb_pair[e])][0];
    t.outcomes.y2 = grid.verbs[static_cast<std::size_t>(verb_pair[e])][1];
    t.n11 = cells[e][0];
    t.n12 = cells[e][1];
    t.n21 = cells[e][2];
    t.n22 = cells[e][3];
  }

  auto corpus = testutil::synthetic_corpus(planted);
  auto counted = qcog::build_coincidence_counts(corpus, grid);
  for (int e = 0; e < 4; ++e) {
    const auto& got = counted[static_cast<std::size_t>(e)];
    const auto& want = planted[static_cast<std::size_t>(e)];
    CHECK(got.label == want.label);
    CHECK(got.outcomes.x1 == want.outcomes.x1);
    CHECK(got.outcomes.y2 == want.outcomes.y2);
    CHECK(got.n11 == want.n11);
    CHECK(got.n12 == want.n12);
    CHECK(got.n21 == want.n21);
    CHECK(got.n22 == want.n22);
  }

  // The statistic computed from the counted tables equals the one computed
  // from the planted tables.
  auto from_counted = qcog::chsh_from_counts(counted);
  auto from_planted = qcog::chsh_from_counts(planted);
  CHECK(from_counted.s == from_planted.s);
}

TEST_CASE("marginal counting sees single words") {
  auto corpus = testutil::synthetic_word_corpus({
      {"horse", 5}, {"bear", 3}, {"tiger", 2}, {"cat", 7},
      {"growls", 4}, {"whinnies", 1}, {"snorts", 6}, {"meows", 2},
  });
  auto marginals = qcog::build_marginal_counts(corpus, small_grid());
  CHECK(marginals.a.label == "A");
  CHECK(marginals.a.outcome1 == "horse");
  CHECK(marginals.a.c1 == 5);
  CHECK(marginals.a.c2 == 3);
  CHECK(marginals.ap.label == "A'");
  CHECK(marginals.ap.c1 == 2);
  CHECK(marginals.ap.c2 == 7);
  CHECK(marginals.b.c1 == 4);
  CHECK(marginals.b.c2 == 1);
  CHECK(marginals.bp.label == "B'");
  CHECK(marginals.bp.outcome2 == "meows");
  CHECK(marginals.bp.c1 == 6);
  CHECK(marginals.bp.c2 == 2);
}

TEST_CASE("counting is case- and punctuation-insensitive end to end") {
  qcog::Corpus corpus;
  corpus.documents = {
      {"1", "The HORSE growls!"},
      {"2", "Horse—growls."},   // em dash still separates the two words
      {"3", "horsegrowls"},          // fused: no token boundary, no match
  };
  auto counts = qcog::build_coincidence_counts(corpus, small_grid());
  CHECK(counts[0].n11 == 2);
  CHECK(counts[0].total() == 2);
  CHECK(counts[1].total() == 0);  // returned as zero, not an error
}

TEST_CASE("the bundled grid parses and validates") {
  auto grid = qcog::datasets::animal_acts_grid();
  CHECK(grid.subjects[0][0] == "horse");
  CHECK(grid.subjects[1][1] == "cat");
  CHECK(grid.verbs[0][1] == "whinnies");
  CHECK(grid.verbs[1][1] == "meows");
  validate_grid(grid);
}
