#include "wht/analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

namespace wht {

namespace {

std::vector<const Application*> by_ascending_id(const Corpus& corpus) {
  std::vector<const Application*> apps;
  apps.reserve(corpus.applications.size());
  for (const auto& app : corpus.applications) apps.push_back(&app);
  std::stable_sort(apps.begin(), apps.end(),
                   [](const Application* a, const Application* b) { return a->id < b->id; });
  return apps;
}

// Total order over hallmarks for grouping; Many sorts after every exact value.
using HallmarkOrderKey = std::array<std::pair<bool, std::uint64_t>, kTermCount>;

HallmarkOrderKey order_key(const Hallmark& h) {
  HallmarkOrderKey key;
  for (std::size_t i = 0; i < kTermCount; ++i) {
    key[i] = h[i].is_many() ? std::pair(true, std::uint64_t{0}) : std::pair(false, h[i].value());
  }
  return key;
}

BinaryHallmark order_key(const BinaryHallmark& b) { return b; }

template <typename Key, typename KeyOf>
ClusterSummary<Key> group(const Corpus& corpus, KeyOf key_of) {
  using OrderKey = decltype(order_key(std::declval<Key>()));
  std::map<OrderKey, Cluster<Key>> groups;
  for (const Application* app : by_ascending_id(corpus)) {
    Key key = key_of(*app);
    auto [it, inserted] = groups.try_emplace(order_key(key), Cluster<Key>{key, {}});
    it->second.members.push_back(app->id);
  }

  ClusterSummary<Key> summary;
  summary.distinct_count = groups.size();
  for (auto& [order, cluster] : groups) {
    if (cluster.members.size() >= 2) summary.clusters.push_back(std::move(cluster));
  }
  std::sort(summary.clusters.begin(), summary.clusters.end(),
            [](const Cluster<Key>& a, const Cluster<Key>& b) {
              return a.members.front() < b.members.front();
            });
  return summary;
}

}  // namespace

std::size_t TermCoverage::total() const {
  return std::accumulate(records.begin(), records.end(), std::size_t{0});
}

TermCoverage term_coverage(const Corpus& corpus) {
  TermCoverage out;
  for (const auto& app : corpus.applications) {
    for (const auto& entity : app.entities) {
      ++out.records[term_of(entity.role, entity.tangibility).index()];
    }
  }
  return out;
}

unsigned rounded_percent(std::size_t part, std::size_t whole) {
  // floor(100 * part / whole + 1/2) in exact integer arithmetic.
  return static_cast<unsigned>((200 * part + whole) / (2 * whole));
}

std::array<RoleShare, kRoleCount> role_distribution(const Corpus& corpus) {
  std::array<RoleShare, kRoleCount> out{};
  std::size_t total = 0;
  for (const auto& app : corpus.applications) {
    for (const auto& entity : app.entities) {
      ++out[static_cast<std::size_t>(entity.role)].count;
      ++total;
    }
  }
  if (total == 0) throw EmptyCorpus();
  for (auto& share : out) share.percent = rounded_percent(share.count, total);
  return out;
}

std::size_t ClassDistribution::total() const {
  return std::accumulate(classes.begin(), classes.end(), unclassified);
}

ClassDistribution class_distribution(const Corpus& corpus) {
  ClassDistribution out;
  for (const auto& app : corpus.applications) {
    const ClassResult result = classify(compute_hallmark(app));
    if (result.outcome) {
      ++out.classes[static_cast<std::size_t>(*result.outcome)];
    } else {
      ++out.unclassified;
    }
  }
  return out;
}

HallmarkClusters cluster_by_hallmark(const Corpus& corpus) {
  return group<Hallmark>(corpus, [](const Application& app) { return compute_hallmark(app); });
}

BinaryHallmarkClusters cluster_by_binary_hallmark(const Corpus& corpus) {
  return group<BinaryHallmark>(
      corpus, [](const Application& app) { return binarize(compute_hallmark(app)); });
}

std::uint64_t DistanceMatrix::between(std::int64_t a, std::int64_t b) const {
  const auto index_of = [&](std::int64_t id) {
    const auto it = std::lower_bound(ids.begin(), ids.end(), id);
    if (it == ids.end() || *it != id) {
      throw std::out_of_range("application " + std::to_string(id) + " not in matrix");
    }
    return static_cast<std::size_t>(it - ids.begin());
  };
  return at(index_of(a), index_of(b));
}

DistanceMatrix distance_matrix(const Corpus& corpus, Metric metric) {
  const auto apps = by_ascending_id(corpus);
  std::vector<Hallmark> hallmarks;
  hallmarks.reserve(apps.size());
  for (const Application* app : apps) {
    hallmarks.push_back(compute_hallmark(*app));
    if (metric == Metric::L1 && hallmarks.back().has_many()) throw SymbolicCount(app->id);
  }

  std::vector<BinaryHallmark> binary;
  if (metric == Metric::HammingBinary) {
    for (const auto& h : hallmarks) binary.push_back(binarize(h));
  }

  DistanceMatrix out;
  const std::size_t n = apps.size();
  for (const Application* app : apps) out.ids.push_back(app->id);
  out.cells.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::uint64_t d = metric == Metric::L1 ? l1_distance(hallmarks[i], hallmarks[j])
                                                   : hamming_distance(binary[i], binary[j]);
      out.cells[i * n + j] = d;
      out.cells[j * n + i] = d;
    }
  }
  return out;
}

const CrossTabRow* CrossTab::row(std::string_view label) const {
  for (const auto& r : rows) {
    if (r.label == label) return &r;
  }
  return nullptr;
}

CrossTab cross_tab(const Corpus& corpus, CrossKey key) {
  CrossTab out;
  out.key = key;
  std::map<std::string, CrossTabRow> rows;
  for (const Application* app : by_ascending_id(corpus)) {
    CrossTabEntry entry{app->id, app->name, app->genre.value_or(std::string(kNoKeyLabel)),
                        app->subgenre.value_or(std::string(kNoKeyLabel)),
                        classify(compute_hallmark(*app))};
    const std::string& label = key == CrossKey::Genre ? entry.genre : entry.subgenre;
    CrossTabRow& row = rows[label];
    row.label = label;
    const std::size_t column =
        entry.result.outcome ? static_cast<std::size_t>(*entry.result.outcome) : kClassCount;
    row.cells[column].push_back(app->id);
    out.entries.push_back(std::move(entry));
  }

  const auto none = rows.find(std::string(kNoKeyLabel));
  for (auto it = rows.begin(); it != rows.end(); ++it) {
    if (it != none) out.rows.push_back(std::move(it->second));
  }
  if (none != rows.end()) out.rows.push_back(std::move(none->second));
  return out;
}

}  // namespace wht
