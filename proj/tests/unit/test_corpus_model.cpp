#include <doctest.h>

#include <algorithm>

#include "wht/corpus_model.hpp"
#include "wht/golden_corpus.hpp"

using namespace wht;

namespace {

Application app(std::int64_t id, std::string name, std::vector<Entity> entities = {{"e"}}) {
  Application a;
  a.id = id;
  a.name = std::move(name);
  a.entities = std::move(entities);
  return a;
}

std::size_t errors_in(const std::vector<Diagnostic>& ds) {
  return static_cast<std::size_t>(
      std::count_if(ds.begin(), ds.end(), [](const Diagnostic& d) { return d.severity == Severity::Error; }));
}

}  // namespace

TEST_CASE("empty corpus is valid") { CHECK(validate(Corpus{}).empty()); }

TEST_CASE("duplicate application id gives one error") {
  Corpus c{{app(7, "A"), app(7, "B")}};
  const auto ds = validate(c);
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].severity == Severity::Error);
  CHECK(ds[0].message.find("duplicate application id") != std::string::npos);
  CHECK(ds[0].subject == 7);
}

TEST_CASE("golden corpus validates without findings") { CHECK(validate(load_golden()).empty()); }

TEST_CASE("field-level invariants") {
  SUBCASE("id must be positive") {
    const auto ds = validate(Corpus{{app(0, "A")}});
    REQUIRE(errors_in(ds) == 1);
    CHECK(ds[0].message == "id must be positive (got 0)");
  }
  SUBCASE("empty names") {
    CHECK(errors_in(validate(Corpus{{app(1, "")}})) == 1);
    CHECK(errors_in(validate(Corpus{{app(1, "A", {{""}})}})) == 1);
  }
  SUBCASE("names are unique without regard to case") {
    const auto ds = validate(Corpus{{app(1, "ReacTable"), app(2, "reactable")}});
    REQUIRE(errors_in(ds) == 1);
    CHECK(ds[0].subject == 2);
  }
  SUBCASE("zero count is an error") {
    Entity e{"e"};
    e.count = Count::exact(0);
    const auto ds = validate(Corpus{{app(3, "A", {e})}});
    REQUIRE(errors_in(ds) == 1);
    CHECK(ds[0].entity_index == 0);
  }
  SUBCASE("application without entities is a warning") {
    const auto ds = validate(Corpus{{app(1, "A", {})}});
    REQUIRE(ds.size() == 1);
    CHECK(ds[0].severity == Severity::Warning);
    CHECK_FALSE(has_errors(ds));
  }
}

TEST_CASE("diagnostics are ordered by application id then entity") {
  Entity zero{"z"};
  zero.count = Count::exact(0);
  Corpus c{{app(9, "B", {{"ok"}, zero}), app(4, "A", {{""}}), app(2, "C", {zero, {""}})}};
  const auto ds = validate(c);
  REQUIRE(ds.size() == 4);
  CHECK(ds[0].subject == 2);
  CHECK(ds[0].entity_index == 0);
  CHECK(ds[1].subject == 2);
  CHECK(ds[1].entity_index == 1);
  CHECK(ds[2].subject == 4);
  CHECK(ds[3].subject == 9);
}

TEST_CASE("validate is idempotent") {
  Corpus c{{app(5, "X"), app(5, "x", {})}};
  CHECK(validate(c) == validate(c));
}

TEST_CASE("count arithmetic") {
  const Count one = Count::exact(1), two = Count::exact(2), many = Count::many();
  CHECK(one + two == Count::exact(3));
  CHECK(one + two == two + one);
  CHECK((one + two) + many == one + (two + many));
  CHECK(many + one == many);
  CHECK(Count::exact(0) + many == many);
  CHECK(many.is_positive());
  CHECK_FALSE(Count::exact(0).is_positive());
  CHECK_THROWS_AS(many.value(), std::logic_error);
}

TEST_CASE("role and tangibility orders") {
  CHECK(Role::Datum < Role::Tool);
  CHECK(Role::Tool < Role::Operation);
  CHECK(Role::Operation < Role::Constraint);
  CHECK(Tangibility::Tangible < Tangibility::Graspable);
  CHECK(Tangibility::Graspable < Tangibility::Intangible);
  CHECK(role_from_keyword("operation") == Role::Operation);
  CHECK_FALSE(role_from_keyword("gizmo").has_value());
  CHECK(tangibility_from_keyword("graspable") == Tangibility::Graspable);
}
