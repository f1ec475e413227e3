#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wht/classifier.hpp"
#include "wht/corpus_model.hpp"
#include "wht/hallmark.hpp"

namespace wht {

/// Entity records per term, indexed by TermKey::index(). Multiplicity is
/// ignored here: an entity with count "many" is one record.
struct TermCoverage {
  std::array<std::size_t, kTermCount> records{};

  std::size_t operator[](const TermKey& term) const { return records[term.index()]; }
  std::size_t total() const;

  friend bool operator==(const TermCoverage&, const TermCoverage&) = default;
};

TermCoverage term_coverage(const Corpus& corpus);

struct RoleShare {
  std::size_t count = 0;
  unsigned percent = 0;  // rounded half-up

  friend bool operator==(const RoleShare&, const RoleShare&) = default;
};

class EmptyCorpus : public std::invalid_argument {
 public:
  EmptyCorpus() : std::invalid_argument("corpus has no entity records") {}
};

/// Records per role with their share of all records. Throws EmptyCorpus
/// when there are no entity records.
std::array<RoleShare, kRoleCount> role_distribution(const Corpus& corpus);

/// Integer percentage rounded half-up: round(100 * part / whole).
unsigned rounded_percent(std::size_t part, std::size_t whole);

struct ClassDistribution {
  std::array<std::size_t, kClassCount> classes{};
  std::size_t unclassified = 0;

  std::size_t operator[](TangibilityClass cls) const {
    return classes[static_cast<std::size_t>(cls)];
  }
  std::size_t total() const;

  friend bool operator==(const ClassDistribution&, const ClassDistribution&) = default;
};

ClassDistribution class_distribution(const Corpus& corpus);

template <typename Key>
struct Cluster {
  Key key;
  std::vector<std::int64_t> members;  // ascending application ids

  friend bool operator==(const Cluster&, const Cluster&) = default;
};

template <typename Key>
struct ClusterSummary {
  std::vector<Cluster<Key>> clusters;  // multi-member groups, by smallest member
  std::size_t distinct_count = 0;
};

using HallmarkClusters = ClusterSummary<Hallmark>;
using BinaryHallmarkClusters = ClusterSummary<BinaryHallmark>;

HallmarkClusters cluster_by_hallmark(const Corpus& corpus);
BinaryHallmarkClusters cluster_by_binary_hallmark(const Corpus& corpus);

enum class Metric { L1, HammingBinary };

struct DistanceMatrix {
  std::vector<std::int64_t> ids;      // ascending
  std::vector<std::uint64_t> cells;   // row-major, ids.size() squared

  std::uint64_t at(std::size_t row, std::size_t column) const {
    return cells[row * ids.size() + column];
  }
  /// Lookup by application ids; throws std::out_of_range for unknown ids.
  std::uint64_t between(std::int64_t a, std::int64_t b) const;
};

/// Pairwise distances indexed by ascending id. L1 throws SymbolicCount
/// naming the first application (by id) holding a "many" count.
DistanceMatrix distance_matrix(const Corpus& corpus, Metric metric);

enum class CrossKey { Genre, Subgenre };

inline constexpr std::string_view kNoKeyLabel = "(none)";

/// One application's position in the cross-classification.
struct CrossTabEntry {
  std::int64_t id = 0;
  std::string name;
  std::string genre;     // kNoKeyLabel when absent
  std::string subgenre;  // kNoKeyLabel when absent
  ClassResult result;
};

struct CrossTabRow {
  std::string label;
  /// Columns I..IV then unclassified; ascending ids in each cell.
  std::array<std::vector<std::int64_t>, kClassCount + 1> cells;
};

struct CrossTab {
  CrossKey key = CrossKey::Genre;
  std::vector<CrossTabRow> rows;      // sorted by label, "(none)" last
  std::vector<CrossTabEntry> entries; // ascending id

  const CrossTabRow* row(std::string_view label) const;
};

CrossTab cross_tab(const Corpus& corpus, CrossKey key);

}  // namespace wht
