#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wht {

/// What digital entity a physical representation embodies. Declaration
/// order is the hallmark's role-major component order.
enum class Role : std::uint8_t { Datum, Tool, Operation, Constraint };

/// How the entity comes to the physical world, from the most embodied
/// (iconic, specialized form) to computer-generated and volatile.
enum class Tangibility : std::uint8_t { Tangible, Graspable, Intangible };

inline constexpr std::size_t kRoleCount = 4;
inline constexpr std::size_t kTangibilityCount = 3;

std::string_view to_string(Role role);
std::string_view to_string(Tangibility tangibility);

/// Keyword lookups used by the DSL and JSON readers ("datum", "graspable"...).
std::optional<Role> role_from_keyword(std::string_view keyword);
std::optional<Tangibility> tangibility_from_keyword(std::string_view keyword);

/// Entity multiplicity: an exact count or the symbolic unbounded "many".
/// Many absorbs under addition and compares equal only to Many.
class Count {
 public:
  constexpr Count() = default;

  static constexpr Count exact(std::uint64_t n) { return Count(n, false); }
  static constexpr Count many() { return Count(0, true); }

  constexpr bool is_many() const { return many_; }
  constexpr bool is_positive() const { return many_ || value_ > 0; }

  /// Exact value; throws std::logic_error when called on Many.
  std::uint64_t value() const;

  friend constexpr Count operator+(Count a, Count b) {
    if (a.many_ || b.many_) return many();
    return exact(a.value_ + b.value_);
  }
  Count& operator+=(Count other) { return *this = *this + other; }

  friend constexpr bool operator==(Count a, Count b) {
    return a.many_ == b.many_ && a.value_ == b.value_;
  }

 private:
  constexpr Count(std::uint64_t value, bool many) : value_(value), many_(many) {}

  std::uint64_t value_ = 0;
  bool many_ = false;
};

struct Entity {
  std::string name;
  Role role = Role::Datum;
  Tangibility tangibility = Tangibility::Tangible;
  Count count = Count::exact(1);
  std::optional<std::string> note;

  friend bool operator==(const Entity&, const Entity&) = default;
};

struct Application {
  std::int64_t id = 0;
  std::string name;
  std::optional<std::int64_t> year;
  std::optional<std::string> genre;
  std::optional<std::string> subgenre;
  std::vector<std::string> refs;
  std::vector<Entity> entities;

  friend bool operator==(const Application&, const Application&) = default;
};

struct Corpus {
  std::vector<Application> applications;

  std::size_t entity_record_count() const;

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

struct SourceSpan {
  std::size_t line = 1;
  std::size_t column = 1;

  friend auto operator<=>(const SourceSpan&, const SourceSpan&) = default;
};

enum class Severity : std::uint8_t { Error, Warning };

std::string_view to_string(Severity severity);

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string message;
  std::optional<SourceSpan> location;
  std::optional<std::int64_t> subject;       // application id
  std::optional<std::size_t> entity_index;   // within the subject

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

bool has_errors(const std::vector<Diagnostic>& diagnostics);

/// Checks every Corpus/Application/Entity invariant. Diagnostics come back
/// ordered by application id, then entity index; corpus-wide findings that
/// name no application come first.
std::vector<Diagnostic> validate(const Corpus& corpus);

}  // namespace wht
