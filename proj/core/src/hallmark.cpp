#include "wht/hallmark.hpp"

#include <algorithm>
#include <string>

namespace wht {

namespace {

std::string symbolic_message(const std::optional<std::int64_t>& application) {
  std::string message = "exact distance undefined on symbolic count 'many'";
  if (application) message += " (application " + std::to_string(*application) + ")";
  return message;
}

}  // namespace

SymbolicCount::SymbolicCount(std::optional<std::int64_t> application)
    : std::domain_error(symbolic_message(application)), application_(application) {}

bool Hallmark::has_many() const {
  return std::any_of(components.begin(), components.end(),
                     [](const Count& c) { return c.is_many(); });
}

Hallmark BinaryHallmark::lifted() const {
  Hallmark out;
  for (std::size_t i = 0; i < kTermCount; ++i) out[i] = Count::exact(components[i]);
  return out;
}

Hallmark compute_hallmark(const Application& app) {
  Hallmark out;
  for (const auto& entity : app.entities) {
    out[term_of(entity.role, entity.tangibility)] += entity.count;
  }
  return out;
}

BinaryHallmark binarize(const Hallmark& hallmark) {
  BinaryHallmark out;
  for (std::size_t i = 0; i < kTermCount; ++i) {
    out.components[i] = hallmark[i].is_positive() ? 1 : 0;
  }
  return out;
}

std::uint64_t l1_distance(const Hallmark& a, const Hallmark& b) {
  if (a.has_many() || b.has_many()) throw SymbolicCount();
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < kTermCount; ++i) {
    const std::uint64_t x = a[i].value();
    const std::uint64_t y = b[i].value();
    total += x > y ? x - y : y - x;
  }
  return total;
}

unsigned hamming_distance(const BinaryHallmark& a, const BinaryHallmark& b) {
  unsigned differing = 0;
  for (std::size_t i = 0; i < kTermCount; ++i) {
    if (a[i] != b[i]) ++differing;
  }
  return differing;
}

}  // namespace wht
