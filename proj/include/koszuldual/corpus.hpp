#ifndef KOSZULDUAL_CORPUS_HPP
#define KOSZULDUAL_CORPUS_HPP

#include <string>
#include <vector>

#include "koszuldual/presentation.hpp"

namespace koszuldual {

struct CorpusEntry {
  std::string name;  // "ex1" .. "ex8"
  std::string text;  // the .quiver source
};

/// The bundled examples, embedded at build time.
const std::vector<CorpusEntry>& bundled_corpus();
/// Parsed example by name; throws Error(InvalidArgument) for an unknown name.
QuadraticPresentation corpus_example(const std::string& name);
/// corpus/expectations.json as embedded.
const std::string& corpus_expectations();

}  // namespace koszuldual

#endif
