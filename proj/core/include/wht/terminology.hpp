#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wht/corpus_model.hpp"

namespace wht {

inline constexpr std::size_t kTermCount = kRoleCount * kTangibilityCount;

/// One cell of the what-how grid, named by its blended word.
struct TermKey {
  Role role;
  Tangibility tangibility;
  std::string_view canonical_name;  // lowercase, e.g. "datible"

  /// Position in hallmark component order (role-major, tangibility-minor).
  constexpr std::size_t index() const {
    return static_cast<std::size_t>(role) * kTangibilityCount +
           static_cast<std::size_t>(tangibility);
  }

  friend constexpr bool operator==(const TermKey& a, const TermKey& b) {
    return a.role == b.role && a.tangibility == b.tangibility;
  }
};

class UnknownTerm : public std::invalid_argument {
 public:
  explicit UnknownTerm(std::string name)
      : std::invalid_argument("unknown term '" + name + "'"), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

TermKey term_of(Role role, Tangibility tangibility);

/// Case-insensitive exact match against the twelve names.
/// Throws UnknownTerm for anything else.
TermKey parse_term(std::string_view name);

/// The twelve terms in hallmark component order.
const std::array<TermKey, kTermCount>& all_terms();

/// Gloss in the form "Tool is intangible".
std::string term_gloss(const TermKey& term);

}  // namespace wht
