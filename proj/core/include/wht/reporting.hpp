#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wht/analysis.hpp"

namespace wht {

struct HallmarkRow {
  std::int64_t id = 0;
  std::string name;
  Hallmark hallmark;
  ClassResult result;
};

struct HallmarkTableReport {
  std::vector<HallmarkRow> rows;
};

struct ClassTableReport {
  std::vector<HallmarkRow> rows;
};

struct CoverageRow {
  std::string label;
  std::size_t count = 0;
  std::optional<unsigned> percent;
};

/// A labelled count table: term coverage, role or class distribution.
struct CoverageReport {
  std::string heading = "term";
  std::vector<CoverageRow> rows;
};

struct ClustersReport {
  std::optional<HallmarkClusters> exact;
  std::optional<BinaryHallmarkClusters> binary;
};

struct CrossTabReport {
  CrossTab table;
};

struct DistanceMatrixReport {
  DistanceMatrix matrix;
  Metric metric = Metric::HammingBinary;
};

enum class ReportKind { HallmarkTable, ClassTable, Coverage, Clusters, CrossTab, DistanceMatrix };

/// Tagged payload; the kind is the active alternative.
struct Report {
  std::variant<HallmarkTableReport, ClassTableReport, CoverageReport, ClustersReport,
               CrossTabReport, DistanceMatrixReport>
      payload;

  ReportKind kind() const { return static_cast<ReportKind>(payload.index()); }
};

// Builders over a corpus. Rows follow ascending application id.
HallmarkTableReport hallmark_table(const Corpus& corpus, bool binary = false);
ClassTableReport class_table(const Corpus& corpus);
CoverageReport coverage_report(const TermCoverage& coverage);
CoverageReport role_report(const std::array<RoleShare, kRoleCount>& shares);
CoverageReport class_report(const ClassDistribution& distribution);

/// "(a, b, ..., l)" with Many printed as "N".
std::string format_hallmark(const Hallmark& hallmark);

/// Fixed-width text tables, columns separated by two spaces.
std::string render_text(const Report& report);

/// One header row, RFC 4180 quoting, hallmark components as one column per
/// term, Many as `many`.
std::string render_csv(const Report& report);

/// Compact JSON; Many is the string "many".
std::string render_json(const Report& report);

/// Graphviz digraph with ranks genre -> subgenre -> application -> class.
std::string render_dot(const CrossTab& crosstab);

/// Quotes a CSV field when it holds a comma, quote or line break.
std::string csv_field(std::string_view raw);

}  // namespace wht
