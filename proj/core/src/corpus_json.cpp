#include <algorithm>
#include <cstdint>
#include <set>

#include <json.hpp>

#include "validation.hpp"
#include "wht/corpus_dsl.hpp"

namespace wht {

namespace {

using Json = nlohmann::ordered_json;

SourceSpan span_at_byte(std::string_view text, std::size_t byte) {
  SourceSpan span;
  // nlohmann reports the 1-based byte index of the offending character.
  const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++span.line;
      span.column = 1;
    } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
      ++span.column;
    }
  }
  return span;
}

class Importer {
 public:
  ParseResult run(const Json& root) {
    ParseResult result;
    if (!root.is_object()) {
      error("document root must be an object");
      return finish(std::move(result));
    }
    const auto apps = root.find("applications");
    if (apps == root.end() || !apps->is_array()) {
      error("'applications' must be an array");
      return finish(std::move(result));
    }
    for (const auto& [key, value] : root.items()) {
      if (key != "applications") warning("unknown top-level key '" + key + "'");
    }
    for (std::size_t i = 0; i < apps->size(); ++i) {
      read_application((*apps)[i], "applications[" + std::to_string(i) + "]", result.corpus);
    }

    for (auto& finding : detail::validate_findings(result.corpus)) {
      diagnostics_.push_back(std::move(finding.diagnostic));
    }
    return finish(std::move(result));
  }

 private:
  ParseResult finish(ParseResult result) {
    if (has_errors(diagnostics_)) result.corpus = {};
    result.diagnostics = std::move(diagnostics_);
    return result;
  }

  void error(std::string message, std::optional<std::int64_t> subject = std::nullopt) {
    diagnostics_.push_back({Severity::Error, std::move(message), std::nullopt, subject, std::nullopt});
  }
  void warning(std::string message, std::optional<std::int64_t> subject = std::nullopt) {
    diagnostics_.push_back(
        {Severity::Warning, std::move(message), std::nullopt, subject, std::nullopt});
  }

  static bool is_integer(const Json& v) { return v.is_number_integer() || v.is_number_unsigned(); }

  std::optional<std::string> optional_string(const Json& obj, const char* key,
                                             const std::string& path) {
    const auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return std::nullopt;
    if (!it->is_string()) {
      error(path + "." + key + " must be a string");
      return std::nullopt;
    }
    return it->get<std::string>();
  }

  void read_application(const Json& obj, const std::string& path, Corpus& corpus) {
    if (!obj.is_object()) {
      error(path + " must be an object");
      return;
    }
    Application app;
    std::optional<std::int64_t> subject;

    const auto id = obj.find("id");
    if (id == obj.end() || !is_integer(*id)) {
      error(path + ".id must be an integer");
    } else if (id->is_number_unsigned() && id->get<std::uint64_t>() > INT64_MAX) {
      error(path + ".id out of range");
    } else {
      app.id = id->get<std::int64_t>();
      subject = app.id;
    }

    const auto name = obj.find("name");
    if (name == obj.end() || !name->is_string()) {
      error(path + ".name must be a string", subject);
    } else {
      app.name = name->get<std::string>();
    }

    if (const auto year = obj.find("year"); year != obj.end() && !year->is_null()) {
      if (is_integer(*year)) {
        app.year = year->get<std::int64_t>();
      } else {
        error(path + ".year must be an integer", subject);
      }
    }
    app.genre = optional_string(obj, "genre", path);
    app.subgenre = optional_string(obj, "subgenre", path);

    if (const auto refs = obj.find("refs"); refs != obj.end()) {
      if (!refs->is_array()) {
        error(path + ".refs must be an array of strings", subject);
      } else {
        for (const auto& ref : *refs) {
          if (ref.is_string()) {
            app.refs.push_back(ref.get<std::string>());
          } else {
            error(path + ".refs must be an array of strings", subject);
          }
        }
      }
    }

    const auto entities = obj.find("entities");
    if (entities == obj.end() || !entities->is_array()) {
      error(path + ".entities must be an array", subject);
    } else {
      for (std::size_t i = 0; i < entities->size(); ++i) {
        read_entity((*entities)[i], path + ".entities[" + std::to_string(i) + "]", subject, app);
      }
    }

    for (const auto& [key, value] : obj.items()) {
      static const std::set<std::string> kKnown = {"id",       "name", "year",    "genre",
                                                   "subgenre", "refs", "entities"};
      if (!kKnown.count(key)) warning(path + ": unknown key '" + key + "'", subject);
    }
    corpus.applications.push_back(std::move(app));
  }

  void read_entity(const Json& obj, const std::string& path, std::optional<std::int64_t> subject,
                   Application& app) {
    if (!obj.is_object()) {
      error(path + " must be an object", subject);
      return;
    }
    Entity entity;
    if (const auto name = obj.find("name"); name != obj.end() && name->is_string()) {
      entity.name = name->get<std::string>();
    } else {
      error(path + ".name must be a string", subject);
    }

    const auto what = obj.find("what");
    if (what == obj.end() || !what->is_string()) {
      error(path + ".what must be a string", subject);
    } else if (const auto role = role_from_keyword(what->get<std::string>())) {
      entity.role = *role;
    } else {
      error(path + ".what: unknown role '" + what->get<std::string>() + "'", subject);
    }

    const auto how = obj.find("how");
    if (how == obj.end() || !how->is_string()) {
      error(path + ".how must be a string", subject);
    } else if (const auto t = tangibility_from_keyword(how->get<std::string>())) {
      entity.tangibility = *t;
    } else {
      error(path + ".how: unknown tangibility '" + how->get<std::string>() + "'", subject);
    }

    if (const auto count = obj.find("count"); count != obj.end()) {
      if (count->is_string() && count->get<std::string>() == "many") {
        entity.count = Count::many();
      } else if (count->is_number_unsigned() ||
                 (count->is_number_integer() && count->get<std::int64_t>() >= 0)) {
        entity.count = Count::exact(count->get<std::uint64_t>());
      } else {
        error(path + ".count must be a positive integer or \"many\"", subject);
      }
    }
    entity.note = optional_string(obj, "note", path);

    for (const auto& [key, value] : obj.items()) {
      static const std::set<std::string> kKnown = {"name", "what", "how", "count", "note"};
      if (!kKnown.count(key)) warning(path + ": unknown key '" + key + "'", subject);
    }
    app.entities.push_back(std::move(entity));
  }

  std::vector<Diagnostic> diagnostics_;
};

}  // namespace

std::string export_json(const Corpus& corpus) {
  Json apps = Json::array();
  for (const auto& app : corpus.applications) {
    Json a;
    a["id"] = app.id;
    a["name"] = app.name;
    if (app.year) a["year"] = *app.year;
    if (app.genre) a["genre"] = *app.genre;
    if (app.subgenre) a["subgenre"] = *app.subgenre;
    a["refs"] = app.refs;
    Json entities = Json::array();
    for (const auto& entity : app.entities) {
      Json e;
      e["name"] = entity.name;
      e["what"] = to_string(entity.role);
      e["how"] = to_string(entity.tangibility);
      if (entity.count.is_many()) {
        e["count"] = "many";
      } else {
        e["count"] = entity.count.value();
      }
      if (entity.note) e["note"] = *entity.note;
      entities.push_back(std::move(e));
    }
    a["entities"] = std::move(entities);
    apps.push_back(std::move(a));
  }
  Json root;
  root["applications"] = std::move(apps);
  return root.dump(-1, ' ', false, Json::error_handler_t::replace);
}

ParseResult import_json(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    ParseResult result;
    result.diagnostics.push_back({Severity::Error, std::string("malformed JSON: ") + e.what(),
                                  span_at_byte(text, e.byte), std::nullopt, std::nullopt});
    return result;
  }
  return Importer().run(root);
}

}  // namespace wht
