#include "wht/reporting.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

namespace wht {

namespace {

using Json = nlohmann::ordered_json;


std::string count_text(const Count& c) { return c.is_many() ? "N" : std::to_string(c.value()); }
std::string count_csv(const Count& c) { return c.is_many() ? "many" : std::to_string(c.value()); }

Json count_json(const Count& c) {
  if (c.is_many()) return "many";
  return c.value();
}

std::string join_ids(const std::vector<std::int64_t>& ids, std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out += separator;
    out += std::to_string(ids[i]);
  }
  return out;
}

std::string format_binary(const BinaryHallmark& b) { return format_hallmark(b.lifted()); }

class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header, std::vector<bool> right_aligned = {})
      : right_(std::move(right_aligned)) {
    right_.resize(header.size(), false);
    rows_.push_back(std::move(header));
  }

  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string str() const {
    std::vector<std::size_t> widths(rows_.front().size(), 0);
    for (const auto& row : rows_) {
      for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
    }
    std::string out;
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c > 0) line += "  ";
        const std::size_t pad = widths[c] - row[c].size();
        const bool last = c + 1 == row.size();
        if (right_[c]) line += std::string(pad, ' ');
        line += row[c];
        if (!right_[c] && !last) line += std::string(pad, ' ');
      }
      out += line + "\n";
    }
    return out;
  }

 private:
  std::vector<bool> right_;
  std::vector<std::vector<std::string>> rows_;
};

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\n";
}

std::vector<std::string> term_columns() {
  std::vector<std::string> out;
  for (const auto& term : all_terms()) out.emplace_back(term.canonical_name);
  return out;
}

void append_counts(std::vector<std::string>& fields, const Hallmark& h) {
  for (std::size_t i = 0; i < kTermCount; ++i) fields.push_back(count_csv(h[i]));
}

Json hallmark_json(const Hallmark& h) {
  Json out = Json::array();
  for (std::size_t i = 0; i < kTermCount; ++i) out.push_back(count_json(h[i]));
  return out;
}

std::string metric_name(Metric metric) { return metric == Metric::L1 ? "l1" : "hamming"; }

std::string key_name(CrossKey key) { return key == CrossKey::Genre ? "genre" : "subgenre"; }

std::vector<HallmarkRow> rows_of(const Corpus& corpus, bool binary) {
  std::vector<HallmarkRow> rows;
  for (const auto& app : corpus.applications) {
    Hallmark h = compute_hallmark(app);
    ClassResult result = classify(h);
    if (binary) h = binarize(h).lifted();
    rows.push_back({app.id, app.name, h, std::move(result)});
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const HallmarkRow& a, const HallmarkRow& b) { return a.id < b.id; });
  return rows;
}

const std::array<std::string_view, kClassCount + 1> kClassColumns = {"I", "II", "III", "IV",
                                                                     "unclassified"};

// ---- text -----------------------------------------------------------------

std::string text_of(const HallmarkTableReport& r) {
  TextTable t({"#", "Application", "Hallmark", "Class"}, {true});
  for (const auto& row : r.rows) {
    t.add({std::to_string(row.id), row.name, format_hallmark(row.hallmark), class_label(row.result)});
  }
  return t.str();
}

std::string text_of(const ClassTableReport& r) {
  TextTable t({"#", "Application", "Class", "Rule"}, {true});
  for (const auto& row : r.rows) {
    t.add({std::to_string(row.id), row.name, class_label(row.result),
           row.result.classified() ? row.result.matched_rule : row.result.reason});
  }
  return t.str();
}

std::string text_of(const CoverageReport& r) {
  const bool with_percent = std::any_of(r.rows.begin(), r.rows.end(),
                                        [](const CoverageRow& row) { return row.percent.has_value(); });
  std::vector<std::string> header = {r.heading, "count"};
  if (with_percent) header.emplace_back("percent");
  TextTable t(header, {false, true, true});
  for (const auto& row : r.rows) {
    std::vector<std::string> line = {row.label, std::to_string(row.count)};
    if (with_percent) line.push_back(row.percent ? std::to_string(*row.percent) + "%" : "");
    t.add(std::move(line));
  }
  return t.str();
}

template <typename Key, typename Format>
std::string cluster_text(const ClusterSummary<Key>& summary, std::string_view label, Format format) {
  std::string out = "distinct " + std::string(label) + ": " + std::to_string(summary.distinct_count) + "\n";
  for (const auto& cluster : summary.clusters) {
    out += "  " + format(cluster.key) + ": " + join_ids(cluster.members, ", ") + "\n";
  }
  return out;
}

std::string text_of(const ClustersReport& r) {
  std::string out;
  if (r.exact) out += cluster_text(*r.exact, "hallmarks", format_hallmark);
  if (r.binary) out += cluster_text(*r.binary, "binary hallmarks", format_binary);
  return out;
}

std::string text_of(const CrossTabReport& r) {
  std::vector<std::string> header = {key_name(r.table.key)};
  header.insert(header.end(), kClassColumns.begin(), kClassColumns.end());
  TextTable t(header);
  for (const auto& row : r.table.rows) {
    std::vector<std::string> line = {row.label};
    for (const auto& cell : row.cells) line.push_back(cell.empty() ? "-" : join_ids(cell, ","));
    t.add(std::move(line));
  }
  return t.str();
}

std::string text_of(const DistanceMatrixReport& r) {
  const auto& m = r.matrix;
  std::vector<std::string> header = {metric_name(r.metric)};
  for (const auto id : m.ids) header.push_back(std::to_string(id));
  TextTable t(header, std::vector<bool>(header.size(), true));
  for (std::size_t i = 0; i < m.ids.size(); ++i) {
    std::vector<std::string> line = {std::to_string(m.ids[i])};
    for (std::size_t j = 0; j < m.ids.size(); ++j) line.push_back(std::to_string(m.at(i, j)));
    t.add(std::move(line));
  }
  return t.str();
}

// ---- csv ------------------------------------------------------------------

std::string csv_of(const HallmarkTableReport& r) {
  std::vector<std::string> header = {"id", "name"};
  const auto terms = term_columns();
  header.insert(header.end(), terms.begin(), terms.end());
  std::string out = csv_line(header);
  for (const auto& row : r.rows) {
    std::vector<std::string> fields = {std::to_string(row.id), row.name};
    append_counts(fields, row.hallmark);
    out += csv_line(fields);
  }
  return out;
}

std::string csv_of(const ClassTableReport& r) {
  std::vector<std::string> header = {"id", "name"};
  const auto terms = term_columns();
  header.insert(header.end(), terms.begin(), terms.end());
  header.emplace_back("class");
  std::string out = csv_line(header);
  for (const auto& row : r.rows) {
    std::vector<std::string> fields = {std::to_string(row.id), row.name};
    append_counts(fields, row.hallmark);
    fields.push_back(class_label(row.result));
    out += csv_line(fields);
  }
  return out;
}

std::string csv_of(const CoverageReport& r) {
  const bool with_percent = std::any_of(r.rows.begin(), r.rows.end(),
                                        [](const CoverageRow& row) { return row.percent.has_value(); });
  std::vector<std::string> header = {r.heading, "count"};
  if (with_percent) header.emplace_back("percent");
  std::string out = csv_line(header);
  for (const auto& row : r.rows) {
    std::vector<std::string> fields = {row.label, std::to_string(row.count)};
    if (with_percent) fields.push_back(row.percent ? std::to_string(*row.percent) : "");
    out += csv_line(fields);
  }
  return out;
}

std::string csv_of(const ClustersReport& r) {
  std::vector<std::string> header = {"kind", "distinct_count", "members"};
  const auto terms = term_columns();
  header.insert(header.end(), terms.begin(), terms.end());
  std::string out = csv_line(header);
  if (r.exact) {
    for (const auto& c : r.exact->clusters) {
      std::vector<std::string> f = {"hallmark", std::to_string(r.exact->distinct_count),
                                    join_ids(c.members, " ")};
      append_counts(f, c.key);
      out += csv_line(f);
    }
  }
  if (r.binary) {
    for (const auto& c : r.binary->clusters) {
      std::vector<std::string> f = {"binary", std::to_string(r.binary->distinct_count),
                                    join_ids(c.members, " ")};
      append_counts(f, c.key.lifted());
      out += csv_line(f);
    }
  }
  return out;
}

std::string csv_of(const CrossTabReport& r) {
  std::vector<std::string> header = {key_name(r.table.key)};
  header.insert(header.end(), kClassColumns.begin(), kClassColumns.end());
  std::string out = csv_line(header);
  for (const auto& row : r.table.rows) {
    std::vector<std::string> fields = {row.label};
    for (const auto& cell : row.cells) fields.push_back(join_ids(cell, " "));
    out += csv_line(fields);
  }
  return out;
}

std::string csv_of(const DistanceMatrixReport& r) {
  const auto& m = r.matrix;
  std::vector<std::string> header = {"id"};
  for (const auto id : m.ids) header.push_back(std::to_string(id));
  std::string out = csv_line(header);
  for (std::size_t i = 0; i < m.ids.size(); ++i) {
    std::vector<std::string> fields = {std::to_string(m.ids[i])};
    for (std::size_t j = 0; j < m.ids.size(); ++j) fields.push_back(std::to_string(m.at(i, j)));
    out += csv_line(fields);
  }
  return out;
}

// ---- json -----------------------------------------------------------------

Json row_json(const HallmarkRow& row) {
  Json j;
  j["id"] = row.id;
  j["name"] = row.name;
  j["hallmark"] = hallmark_json(row.hallmark);
  j["class"] = class_label(row.result);
  if (row.result.classified()) {
    j["rule"] = row.result.matched_rule;
  } else {
    j["reason"] = row.result.reason;
  }
  return j;
}

Json json_of(const HallmarkTableReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) rows.push_back(row_json(row));
  return {{"hallmarks", rows}};
}

Json json_of(const ClassTableReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) rows.push_back(row_json(row));
  return {{"classes", rows}};
}

Json json_of(const CoverageReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json j;
    j[r.heading] = row.label;
    j["count"] = row.count;
    if (row.percent) j["percent"] = *row.percent;
    rows.push_back(std::move(j));
  }
  return {{r.heading, rows}};
}

template <typename Key, typename ToJson>
Json cluster_json(const ClusterSummary<Key>& summary, ToJson to_json) {
  Json clusters = Json::array();
  for (const auto& c : summary.clusters) {
    clusters.push_back({{"key", to_json(c.key)}, {"members", c.members}});
  }
  return {{"distinct_count", summary.distinct_count}, {"clusters", clusters}};
}

Json json_of(const ClustersReport& r) {
  Json out = Json::object();
  if (r.exact) out["hallmark"] = cluster_json(*r.exact, hallmark_json);
  if (r.binary) {
    out["binary"] = cluster_json(*r.binary, [](const BinaryHallmark& b) {
      return Json(std::vector<int>(b.components.begin(), b.components.end()));
    });
  }
  return out;
}

Json json_of(const CrossTabReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.table.rows) {
    Json cells;
    for (std::size_t c = 0; c < row.cells.size(); ++c) cells[std::string(kClassColumns[c])] = row.cells[c];
    rows.push_back({{"label", row.label}, {"cells", cells}});
  }
  return {{"key", key_name(r.table.key)}, {"rows", rows}};
}

Json json_of(const DistanceMatrixReport& r) {
  Json matrix = Json::array();
  for (std::size_t i = 0; i < r.matrix.ids.size(); ++i) {
    Json line = Json::array();
    for (std::size_t j = 0; j < r.matrix.ids.size(); ++j) line.push_back(r.matrix.at(i, j));
    matrix.push_back(std::move(line));
  }
  return {{"metric", metric_name(r.metric)}, {"ids", r.matrix.ids}, {"matrix", matrix}};
}

std::string dot_id(std::string_view label) {
  std::string out = "\"";
  for (const char c : label) {
    if (c == '"' || c == '\\') out += '\\';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

std::string class_node(const ClassResult& result) {
  return result.outcome ? "Class " + std::string(roman(*result.outcome)) : "unclassified";
}

}  // namespace

HallmarkTableReport hallmark_table(const Corpus& corpus, bool binary) {
  return {rows_of(corpus, binary)};
}

ClassTableReport class_table(const Corpus& corpus) { return {rows_of(corpus, false)}; }

CoverageReport coverage_report(const TermCoverage& coverage) {
  CoverageReport out{"term", {}};
  for (const auto& term : all_terms()) {
    out.rows.push_back({std::string(term.canonical_name), coverage[term], std::nullopt});
  }
  return out;
}

CoverageReport role_report(const std::array<RoleShare, kRoleCount>& shares) {
  CoverageReport out{"role", {}};
  for (std::size_t i = 0; i < kRoleCount; ++i) {
    out.rows.push_back({std::string(to_string(static_cast<Role>(i))), shares[i].count, shares[i].percent});
  }
  return out;
}

CoverageReport class_report(const ClassDistribution& distribution) {
  CoverageReport out{"class", {}};
  for (std::size_t i = 0; i < kClassCount; ++i) {
    out.rows.push_back({std::string(kClassColumns[i]), distribution.classes[i], std::nullopt});
  }
  out.rows.push_back({"unclassified", distribution.unclassified, std::nullopt});
  return out;
}

std::string format_hallmark(const Hallmark& hallmark) {
  std::string out = "(";
  for (std::size_t i = 0; i < kTermCount; ++i) {
    if (i > 0) out += ", ";
    out += count_text(hallmark[i]);
  }
  return out + ")";
}

std::string csv_field(std::string_view raw) {
  if (raw.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(raw);
  std::string out = "\"";
  for (const char c : raw) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_text(const Report& report) {
  return std::visit([](const auto& r) { return text_of(r); }, report.payload);
}

std::string render_csv(const Report& report) {
  return std::visit([](const auto& r) { return csv_of(r); }, report.payload);
}

std::string render_json(const Report& report) {
  const Json j = std::visit([](const auto& r) { return json_of(r); }, report.payload);
  return j.dump(-1, ' ', false, Json::error_handler_t::replace) + "\n";
}

std::string render_dot(const CrossTab& crosstab) {
  if (crosstab.entries.empty()) return "digraph corpus {}\n";

  std::set<std::string> genres, subgenres;
  std::set<std::pair<std::string, std::string>> genre_edges;
  std::vector<bool> occupied(kClassCount + 1, false);
  for (const auto& e : crosstab.entries) {
    genres.insert(e.genre);
    subgenres.insert(e.subgenre);
    genre_edges.emplace(e.genre, e.subgenre);
    occupied[e.result.outcome ? static_cast<std::size_t>(*e.result.outcome) : kClassCount] = true;
  }

  std::ostringstream out;
  out << "digraph corpus {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=box];\n";
  const auto rank = [&out](const auto& labels) {
    out << "  { rank=same;";
    for (const auto& label : labels) out << ' ' << dot_id(label) << ';';
    out << " }\n";
  };
  rank(genres);
  rank(subgenres);
  std::vector<std::string> apps;
  for (const auto& e : crosstab.entries) apps.push_back(e.name);
  rank(apps);
  std::vector<std::string> classes;
  for (std::size_t c = 0; c <= kClassCount; ++c) {
    if (!occupied[c]) continue;
    classes.push_back(c < kClassCount
                          ? "Class " + std::string(roman(static_cast<TangibilityClass>(c)))
                          : "unclassified");
  }
  rank(classes);

  for (const auto& [genre, subgenre] : genre_edges) {
    out << "  " << dot_id(genre) << " -> " << dot_id(subgenre) << ";\n";
  }
  for (const auto& e : crosstab.entries) {
    out << "  " << dot_id(e.subgenre) << " -> " << dot_id(e.name) << ";\n";
  }
  for (const auto& e : crosstab.entries) {
    out << "  " << dot_id(e.name) << " -> " << dot_id(class_node(e.result)) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace wht
