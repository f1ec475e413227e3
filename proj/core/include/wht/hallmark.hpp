#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "wht/corpus_model.hpp"
#include "wht/terminology.hpp"

namespace wht {

/// Per-term entity counts of one application, indexed by all_terms() order.
struct Hallmark {
  std::array<Count, kTermCount> components{};

  Count& operator[](std::size_t i) { return components[i]; }
  const Count& operator[](std::size_t i) const { return components[i]; }
  Count& operator[](const TermKey& term) { return components[term.index()]; }
  const Count& operator[](const TermKey& term) const { return components[term.index()]; }

  bool has_many() const;

  friend bool operator==(const Hallmark&, const Hallmark&) = default;
};

/// Presence of each term: components greater than one are cut to one.
struct BinaryHallmark {
  std::array<std::uint8_t, kTermCount> components{};

  std::uint8_t operator[](std::size_t i) const { return components[i]; }

  /// Reinterprets the bits as exact counts 0/1.
  Hallmark lifted() const;

  friend bool operator==(const BinaryHallmark&, const BinaryHallmark&) = default;
  friend auto operator<=>(const BinaryHallmark&, const BinaryHallmark&) = default;
};

/// Raised when an exact-count operation meets the symbolic count "many".
class SymbolicCount : public std::domain_error {
 public:
  explicit SymbolicCount(std::optional<std::int64_t> application = std::nullopt);
  const std::optional<std::int64_t>& application() const { return application_; }

 private:
  std::optional<std::int64_t> application_;
};

/// Component k sums the Counts of the entities mapping to term k.
Hallmark compute_hallmark(const Application& app);

BinaryHallmark binarize(const Hallmark& hallmark);

/// Sum of absolute componentwise differences. Throws SymbolicCount if either
/// side holds Many; binarize first in that case.
std::uint64_t l1_distance(const Hallmark& a, const Hallmark& b);

/// Number of differing components, in [0, 12].
unsigned hamming_distance(const BinaryHallmark& a, const BinaryHallmark& b);

}  // namespace wht
