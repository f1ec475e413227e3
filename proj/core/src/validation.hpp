#pragma once

#include <cstddef>
#include <vector>

#include "wht/corpus_model.hpp"

namespace wht::detail {

/// Which part of an application a validation finding is about, so readers
/// that track source positions can attach the right span.
enum class Site { Application, Id, Name, Entity, Count };

struct Finding {
  Diagnostic diagnostic;
  std::size_t position;  // index into Corpus::applications
  Site site;
};

/// validate() before ordering, with positional provenance.
std::vector<Finding> validate_findings(const Corpus& corpus);

}  // namespace wht::detail
