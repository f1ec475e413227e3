#include "wht/corpus_model.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>
#include <tuple>

#include "text_util.hpp"
#include "validation.hpp"

namespace wht {

namespace {

constexpr std::string_view kRoleKeywords[] = {"datum", "tool", "operation", "constraint"};
constexpr std::string_view kTangibilityKeywords[] = {"tangible", "graspable", "intangible"};

Diagnostic error_for(const Application& app, std::string message,
                     std::optional<std::size_t> entity = std::nullopt) {
  return {Severity::Error, std::move(message), std::nullopt, app.id, entity};
}

}  // namespace

std::string_view to_string(Role role) {
  return kRoleKeywords[static_cast<std::size_t>(role)];
}

std::string_view to_string(Tangibility tangibility) {
  return kTangibilityKeywords[static_cast<std::size_t>(tangibility)];
}

std::optional<Role> role_from_keyword(std::string_view keyword) {
  for (std::size_t i = 0; i < kRoleCount; ++i) {
    if (kRoleKeywords[i] == keyword) return static_cast<Role>(i);
  }
  return std::nullopt;
}

std::optional<Tangibility> tangibility_from_keyword(std::string_view keyword) {
  for (std::size_t i = 0; i < kTangibilityCount; ++i) {
    if (kTangibilityKeywords[i] == keyword) return static_cast<Tangibility>(i);
  }
  return std::nullopt;
}

std::uint64_t Count::value() const {
  if (many_) throw std::logic_error("Count::value() called on symbolic count 'many'");
  return value_;
}

std::size_t Corpus::entity_record_count() const {
  std::size_t total = 0;
  for (const auto& app : applications) total += app.entities.size();
  return total;
}

std::string_view to_string(Severity severity) {
  return severity == Severity::Error ? "error" : "warning";
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

namespace detail {

std::vector<Finding> validate_findings(const Corpus& corpus) {
  std::vector<Finding> out;
  std::map<std::int64_t, std::size_t> seen_ids;
  std::map<std::string, std::int64_t> seen_names;

  for (std::size_t pos = 0; pos < corpus.applications.size(); ++pos) {
    const Application& app = corpus.applications[pos];
    const auto add = [&](Diagnostic d, Site site) { out.push_back({std::move(d), pos, site}); };

    if (app.id <= 0) {
      add(error_for(app, "id must be positive (got " + std::to_string(app.id) + ")"), Site::Id);
    } else if (++seen_ids[app.id] == 2) {
      add(error_for(app, "duplicate application id " + std::to_string(app.id)), Site::Id);
    }

    const std::string trimmed = trim(app.name);
    if (trimmed.empty()) {
      add(error_for(app, "application name must not be empty"), Site::Name);
    } else {
      const auto [it, inserted] = seen_names.emplace(ascii_lower(trimmed), app.id);
      if (!inserted) {
        add(error_for(app, "duplicate application name '" + app.name + "' (also used by id " +
                               std::to_string(it->second) + ")"),
            Site::Name);
      }
    }

    if (app.entities.empty()) {
      add({Severity::Warning, "application '" + app.name + "' has no entities", std::nullopt,
           app.id, std::nullopt},
          Site::Application);
    }

    for (std::size_t i = 0; i < app.entities.size(); ++i) {
      const Entity& entity = app.entities[i];
      if (trim(entity.name).empty()) {
        add(error_for(app, "entity name must not be empty", i), Site::Entity);
      }
      if (!entity.count.is_positive()) {
        add(error_for(app, "entity '" + entity.name + "': count must be positive", i), Site::Count);
      }
    }
  }
  return out;
}

}  // namespace detail

std::vector<Diagnostic> validate(const Corpus& corpus) {
  std::vector<Diagnostic> out;
  for (auto& finding : detail::validate_findings(corpus)) out.push_back(std::move(finding.diagnostic));

  // Stable: findings with identical keys keep their discovery order.
  std::stable_sort(out.begin(), out.end(), [](const Diagnostic& a, const Diagnostic& b) {
    const auto key = [](const Diagnostic& d) {
      return std::tuple(d.subject.has_value(), d.subject.value_or(0), d.entity_index.has_value(),
                        d.entity_index.value_or(0));
    };
    return key(a) < key(b);
  });
  return out;
}

}  // namespace wht
