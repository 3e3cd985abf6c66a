#pragma once

#include "qtop/braid.hpp"
#include "qtop/io.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace qtop {

struct CorpusExpectation {
  int level = 0;
  std::complex<double> value;
  double tolerance = 1e-9;
  std::string provenance;
};

struct CorpusEntry {
  std::string name;
  int strands = 1;
  std::string word;  // braid text notation
  std::vector<int> framings;
  std::vector<CorpusExpectation> expected;
  std::string note;

  LinkPresentation presentation() const {
    return LinkPresentation::make(BraidWord::parse(strands, word), framings);
  }
};

std::vector<CorpusEntry> corpus_from_json(const Json& j);
Json corpus_to_json(const std::vector<CorpusEntry>& entries);

// The corpus shipped with the engine: unknots with framings -2..2, three
// framed Hopf links, three framed trefoils, the figure-eight knot, and a
// Hopf link with a split unknot.
const std::vector<CorpusEntry>& builtin_corpus();

std::vector<CorpusEntry> load_corpus_file(const std::string& path);

}  // namespace qtop
