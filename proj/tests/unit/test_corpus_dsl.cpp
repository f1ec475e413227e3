#include <doctest.h>

#include "wht/corpus_dsl.hpp"
#include "wht/golden_corpus.hpp"

using namespace wht;

namespace {

const char* kMinimal = R"(application "X" { id: 1 entity "e" { what: datum how: tangible } })";

// The single Error among the diagnostics; warnings may accompany it.
const Diagnostic& only_error(const ParseResult& r) {
  const Diagnostic* found = nullptr;
  for (const auto& d : r.diagnostics) {
    if (d.severity != Severity::Error) continue;
    REQUIRE(found == nullptr);
    found = &d;
  }
  REQUIRE(found != nullptr);
  return *found;
}

}  // namespace

TEST_CASE("minimal document") {
  const ParseResult r = parse_corpus(kMinimal);
  REQUIRE(r.ok());
  CHECK(r.diagnostics.empty());
  REQUIRE(r.corpus.applications.size() == 1);
  const Application& a = r.corpus.applications[0];
  CHECK(a.id == 1);
  CHECK(a.name == "X");
  REQUIRE(a.entities.size() == 1);
  CHECK(a.entities[0] == Entity{"e", Role::Datum, Tangibility::Tangible, Count::exact(1), std::nullopt});
}

TEST_CASE("unknown role is reported at its span") {
  const ParseResult r = parse_corpus("application \"X\" {\n  id: 1\n  entity \"e\" { what: gizmo how: tangible }\n}\n");
  const Diagnostic& d = only_error(r);
  CHECK(d.message == "unknown role 'gizmo'");
  REQUIRE(d.location);
  CHECK(d.location->line == 3);
  CHECK(d.location->column == 22);
  CHECK(r.corpus.applications.empty());
}

TEST_CASE("golden source parses cleanly") {
  const ParseResult r = parse_corpus(golden_source());
  CHECK(r.ok());
  CHECK(r.diagnostics.empty());
  CHECK(r.corpus.applications.size() == 33);
  CHECK(r.corpus.entity_record_count() == 145);
}

TEST_CASE("full field set") {
  const ParseResult r = parse_corpus(R"(# leading comment
application "Pinwheels" {   # trailing comment
  id: 9
  year: 1998
  genre: "Ambient Media"
  subgenre: "Dynamic everyday objects"
  refs: ["a", "b\"q\\"]
  entity "Spinning \"pinwheels\"" {
    what: datum
    how: tangible
    count: many
    note: "airflow"
  }
  entity "pair" { what: tool how: intangible count: 2 }
}
)");
  REQUIRE(r.ok());
  const Application& a = r.corpus.applications.at(0);
  CHECK(a.year == 1998);
  CHECK(a.genre == "Ambient Media");
  CHECK(a.subgenre == "Dynamic everyday objects");
  CHECK(a.refs == std::vector<std::string>{"a", "b\"q\\"});
  CHECK(a.entities[0].name == "Spinning \"pinwheels\"");
  CHECK(a.entities[0].count == Count::many());
  CHECK(a.entities[0].note == "airflow");
  CHECK(a.entities[1].count == Count::exact(2));
  CHECK(a.entities[1].tangibility == Tangibility::Intangible);
}

TEST_CASE("syntax errors carry a span inside the offending token") {
  struct Case {
    const char* text;
    std::size_t line, column;
  };
  const Case cases[] = {
      {"application \"X\" { id: 1 @ }", 1, 25},
      {"application \"X\" {\n  id: 1x\n}", 2, 7},
      {"application \"X", 1, 13},
      {"application \"X\\q\" { id: 1 }", 1, 15},
      {"app \"X\" {}", 1, 1},
      {"application \"X\" { id: 1 entity \"e\" { what: datum how: tangible }", 1, 65},
  };
  for (const auto& c : cases) {
    CAPTURE(c.text);
    const Diagnostic& d = only_error(parse_corpus(c.text));
    REQUIRE(d.location);
    CHECK(d.location->line == c.line);
    CHECK(d.location->column == c.column);
  }
}

TEST_CASE("columns count code points") {
  const ParseResult r = parse_corpus("application \"日本\" { id: 1 entity \"é\" { what: x how: tangible } }");
  const Diagnostic& d = only_error(r);
  REQUIRE(d.location);
  CHECK(d.location->column == 45);
}

TEST_CASE("semantic errors") {
  CHECK(only_error(parse_corpus(R"(application "X" { entity "e" { what: datum how: tangible } })")).message ==
        "application 'X' is missing an id");
  CHECK(only_error(parse_corpus(R"(application "X" { id: 1 entity "e" { how: tangible } })")).message ==
        "entity 'e' is missing 'what'");
  CHECK(only_error(parse_corpus(R"(application "X" { id: 1 id: 2 })")).message == "duplicate field 'id'");
  CHECK(only_error(parse_corpus(R"(application "X" { id: 1 entity "e" { what: datum how: tangible count: 0 } })"))
            .message == "entity 'e': count must be positive");
  const ParseResult dup = parse_corpus(R"(application "A" { id: 3 entity "e" { what: datum how: tangible } }
application "B" { id: 3 entity "e" { what: datum how: tangible } })");
  const Diagnostic& d = only_error(dup);
  CHECK(d.message == "duplicate application id 3");
  REQUIRE(d.location);
  CHECK(d.location->line == 2);
}

TEST_CASE("unknown fields are warnings") {
  const ParseResult r =
      parse_corpus(R"(application "X" { id: 1 colour: "red" entity "e" { what: datum how: tangible size: 3 } })");
  CHECK(r.ok());
  REQUIRE(r.diagnostics.size() == 2);
  CHECK(r.diagnostics[0].severity == Severity::Warning);
  CHECK(r.diagnostics[0].message == "unknown application field 'colour'");
  CHECK(r.corpus.applications.size() == 1);
}

TEST_CASE("serialize") {
  CHECK(serialize_corpus(Corpus{}).empty());
  CHECK(parse_corpus("").ok());
  CHECK(parse_corpus("  # nothing\n").corpus.applications.empty());

  const Corpus c = parse_corpus(kMinimal).corpus;
  const std::string text = serialize_corpus(c);
  CHECK(text ==
        "application \"X\" {\n"
        "  id: 1\n"
        "  entity \"e\" {\n"
        "    what: datum\n"
        "    how: tangible\n"
        "  }\n"
        "}\n");
  CHECK(parse_corpus(text).corpus == c);
  CHECK(serialize_corpus(c) == text);
}

TEST_CASE("golden corpus round-trips through the canonical form") {
  const std::string text = serialize_corpus(load_golden());
  const ParseResult r = parse_corpus(text);
  REQUIRE(r.ok());
  CHECK(r.corpus == load_golden());
  CHECK(serialize_corpus(r.corpus) == text);
}

TEST_CASE("arbitrary bytes never crash the parser") {
  const std::string samples[] = {"{", "}", "\"", "application", "application \"", "application \"x\" {",
                                 "application \"x\" { entity", "\xff\xfe", std::string(1, '\0'),
                                 "application \"x\" { id: -", "application \"x\" { id: 99999999999999999999 }"};
  for (const auto& s : samples) {
    const ParseResult r = parse_corpus(s);
    CHECK_FALSE(r.ok());
  }
}
