#include "koszuldual/corpus.hpp"

#include "koszuldual/corpus_data.hpp"
#include "koszuldual/errors.hpp"
#include "koszuldual/io.hpp"

namespace koszuldual {

const std::vector<CorpusEntry>& bundled_corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> out;
    for (const auto& [name, text] : corpus_data::kFiles) out.push_back({std::string(name), std::string(text)});
    return out;
  }();
  return entries;
}

QuadraticPresentation corpus_example(const std::string& name) {
  for (const auto& e : bundled_corpus())
    if (e.name == name) return parse(e.text);
  throw Error(ErrorKind::InvalidArgument, "no bundled example '" + name + "'");
}

const std::string& corpus_expectations() {
  static const std::string s(corpus_data::kExpectations);
  return s;
}

}  // namespace koszuldual
