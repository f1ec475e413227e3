#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wht/hallmark.hpp"

namespace wht {

enum class TangibilityClass : std::uint8_t { ClassI, ClassII, ClassIII, ClassIV };

inline constexpr std::size_t kClassCount = 4;

/// Roman numeral label: "I" .. "IV".
std::string_view roman(TangibilityClass cls);

struct ClassResult {
  std::optional<TangibilityClass> outcome;  // nullopt = unclassified
  std::string matched_rule;                 // set iff outcome is a class
  std::string reason;                       // set iff unclassified

  bool classified() const { return outcome.has_value(); }

  friend bool operator==(const ClassResult&, const ClassResult&) = default;
};

/// "I".."IV", or "unclassified".
std::string class_label(const ClassResult& result);

/// Truth value of each class definition, indexed by TangibilityClass.
/// Evaluated on positivity of the data, tool and operation components.
std::array<bool, kClassCount> class_predicates(const Hallmark& hallmark);

/// Classifies by the class definitions, tried I to IV. Positive data is
/// "datible or datable" read inclusively, so a hallmark with both siblings
/// positive still belongs to Class I or II.
ClassResult classify(const Hallmark& hallmark);

enum class Cell : std::uint8_t { Zero, Positive, Any };

struct PatternRule {
  TangibilityClass cls;
  std::array<Cell, kTermCount> cells;
  std::string_view id;  // "I.1" = first printed row for Class I
};

/// The eight hallmark patterns, two per class, in printed order.
const std::vector<PatternRule>& pattern_table();

bool matches(const PatternRule& rule, const Hallmark& hallmark);

/// First matching rule wins; unclassified when none match.
ClassResult classify_by_patterns(const Hallmark& hallmark, const std::vector<PatternRule>& rules);

}  // namespace wht
