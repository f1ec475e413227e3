#include "wht/terminology.hpp"

#include "text_util.hpp"

namespace wht {

namespace {

constexpr std::array<TermKey, kTermCount> kTerms = {{
    {Role::Datum, Tangibility::Tangible, "datible"},
    {Role::Datum, Tangibility::Graspable, "datable"},
    {Role::Datum, Tangibility::Intangible, "datnible"},
    {Role::Tool, Tangibility::Tangible, "tolible"},
    {Role::Tool, Tangibility::Graspable, "tolable"},
    {Role::Tool, Tangibility::Intangible, "tolnible"},
    {Role::Operation, Tangibility::Tangible, "opible"},
    {Role::Operation, Tangibility::Graspable, "opable"},
    {Role::Operation, Tangibility::Intangible, "opnible"},
    {Role::Constraint, Tangibility::Tangible, "constible"},
    {Role::Constraint, Tangibility::Graspable, "constable"},
    {Role::Constraint, Tangibility::Intangible, "constnible"},
}};

static_assert([] {
  for (std::size_t i = 0; i < kTerms.size(); ++i) {
    if (kTerms[i].index() != i) return false;
  }
  return true;
}());

}  // namespace

TermKey term_of(Role role, Tangibility tangibility) {
  return kTerms[TermKey{role, tangibility, {}}.index()];
}

TermKey parse_term(std::string_view name) {
  const std::string lowered = detail::ascii_lower(name);
  for (const auto& term : kTerms) {
    if (term.canonical_name == lowered) return term;
  }
  throw UnknownTerm(std::string(name));
}

const std::array<TermKey, kTermCount>& all_terms() { return kTerms; }

std::string term_gloss(const TermKey& term) {
  std::string role(to_string(term.role));
  role[0] = static_cast<char>(role[0] - 'a' + 'A');
  return role + " is " + std::string(to_string(term.tangibility));
}

}  // namespace wht
