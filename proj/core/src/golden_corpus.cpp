#include "wht/golden_corpus.hpp"

#include <stdexcept>
#include <string>

#include "wht/corpus_dsl.hpp"

namespace wht {

namespace detail {
extern const char kGoldenCorpusText[];
}  // namespace detail

std::string_view golden_source() { return detail::kGoldenCorpusText; }

const Corpus& load_golden() {
  static const Corpus corpus = [] {
    ParseResult parsed = parse_corpus(golden_source());
    if (!parsed.ok()) {
      const Diagnostic& first = parsed.diagnostics.front();
      std::string where;
      if (first.location) {
        where = std::to_string(first.location->line) + ":" + std::to_string(first.location->column) + ": ";
      }
      throw std::logic_error("embedded golden corpus is invalid: " + where + first.message);
    }
    return std::move(parsed.corpus);
  }();
  return corpus;
}

}  // namespace wht
