#pragma once

#include <string_view>

#include "wht/corpus_model.hpp"

namespace wht {

/// DSL source of the reference corpus compiled into the library
/// (33 applications, 145 entity records).
std::string_view golden_source();

/// The parsed reference corpus. Parsed once; the embedded text failing to
/// parse is a packaging defect and throws std::logic_error.
const Corpus& load_golden();

}  // namespace wht
