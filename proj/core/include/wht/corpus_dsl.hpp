#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wht/corpus_model.hpp"

namespace wht {

/// Outcome of reading a corpus document. On any Error diagnostic the corpus
/// is empty; otherwise it is fully validated and diagnostics hold warnings.
struct ParseResult {
  Corpus corpus;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return !has_errors(diagnostics); }
};

/// Reads the annotation language:
///
///   application "Urp" {
///     id: 13
///     year: 1999
///     genre: "Interactive Surfaces and Spaces"
///     refs: ["underkoffler1999urp"]
///     entity "Clock-object" { what: tool how: tangible }
///     entity "Pinwheels" { what: datum how: tangible count: many }
///   }
///
/// `#` comments run to end of line. Unknown field keys are warnings.
ParseResult parse_corpus(std::string_view text);

/// Canonical text: fixed field order, two-space indent, one blank line
/// between applications. parse_corpus(serialize_corpus(c)) == c.
std::string serialize_corpus(const Corpus& corpus);

/// Compact JSON interchange, `{"applications":[...]}`.
std::string export_json(const Corpus& corpus);

ParseResult import_json(std::string_view text);

}  // namespace wht
