#include "wht/classifier.hpp"

namespace wht {

namespace {

struct Presence {
  bool data_t, data_g, data_i;
  bool tool_t, tool_g, tool_i;
  bool op_t, op_g;

  explicit Presence(const Hallmark& h)
      : data_t(h[0].is_positive()),
        data_g(h[1].is_positive()),
        data_i(h[2].is_positive()),
        tool_t(h[3].is_positive()),
        tool_g(h[4].is_positive()),
        tool_i(h[5].is_positive()),
        op_t(h[6].is_positive()),
        op_g(h[7].is_positive()) {}

  bool bodied_data() const { return data_t || data_g; }
  bool bodied_tools() const { return tool_t || tool_g; }
  bool any_tools() const { return tool_t || tool_g || tool_i; }
  bool bodied_ops() const { return op_t || op_g; }
};

constexpr std::string_view kRoman[] = {"I", "II", "III", "IV"};

ClassResult classified(TangibilityClass cls, std::string rule) {
  return {cls, std::move(rule), {}};
}

ClassResult unclassified(std::string reason) { return {std::nullopt, {}, std::move(reason)}; }

constexpr Cell Z = Cell::Zero;
constexpr Cell P = Cell::Positive;
constexpr Cell A = Cell::Any;

}  // namespace

std::string_view roman(TangibilityClass cls) { return kRoman[static_cast<std::size_t>(cls)]; }

std::string class_label(const ClassResult& result) {
  return result.outcome ? std::string(roman(*result.outcome)) : std::string("unclassified");
}

std::array<bool, kClassCount> class_predicates(const Hallmark& hallmark) {
  const Presence p(hallmark);
  return {
      p.bodied_data() && !p.data_i,
      p.bodied_data() && p.data_i,
      p.data_i && !p.bodied_data() && p.bodied_tools(),
      !p.bodied_data() && !p.data_i && !p.any_tools() && p.bodied_ops(),
  };
}

ClassResult classify(const Hallmark& hallmark) {
  const auto holds = class_predicates(hallmark);
  for (std::size_t i = 0; i < kClassCount; ++i) {
    if (holds[i]) return classified(static_cast<TangibilityClass>(i), "class-" + std::string(kRoman[i]));
  }

  // No bodied data here, otherwise Class I or II would have fired.
  const Presence p(hallmark);
  if (p.data_i) return unclassified("intangible data without tangible or graspable tools");
  if (p.any_tools()) return unclassified("tools without data");
  return unclassified("no data, no bodied operation");
}

const std::vector<PatternRule>& pattern_table() {
  // Columns: datible datable datnible | tolible tolable tolnible |
  //          opible opable opnible | constible constable constnible
  static const std::vector<PatternRule> kRules = {
      {TangibilityClass::ClassI, {P, Z, Z, A, A, A, A, A, A, A, A, A}, "I.1"},
      {TangibilityClass::ClassI, {Z, P, Z, A, A, A, A, A, A, A, A, A}, "I.2"},
      {TangibilityClass::ClassII, {P, Z, P, A, A, A, A, A, A, A, A, A}, "II.1"},
      {TangibilityClass::ClassII, {Z, P, P, A, A, A, A, A, A, A, A, A}, "II.2"},
      {TangibilityClass::ClassIII, {Z, Z, P, Z, P, A, A, A, A, A, A, A}, "III.1"},
      {TangibilityClass::ClassIII, {Z, Z, P, P, Z, A, A, A, A, A, A, A}, "III.2"},
      {TangibilityClass::ClassIV, {Z, Z, Z, Z, Z, Z, P, Z, A, A, A, A}, "IV.1"},
      {TangibilityClass::ClassIV, {Z, Z, Z, Z, Z, Z, Z, P, A, A, A, A}, "IV.2"},
  };
  return kRules;
}

bool matches(const PatternRule& rule, const Hallmark& hallmark) {
  for (std::size_t i = 0; i < kTermCount; ++i) {
    const bool positive = hallmark[i].is_positive();
    switch (rule.cells[i]) {
      case Cell::Zero:
        if (positive) return false;
        break;
      case Cell::Positive:
        if (!positive) return false;
        break;
      case Cell::Any:
        break;
    }
  }
  return true;
}

ClassResult classify_by_patterns(const Hallmark& hallmark, const std::vector<PatternRule>& rules) {
  for (const auto& rule : rules) {
    if (matches(rule, hallmark)) return classified(rule.cls, "table-" + std::string(rule.id));
  }
  return unclassified("no hallmark pattern matches");
}

}  // namespace wht
