#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wht/corpus_dsl.hpp"
#include "wht/golden_corpus.hpp"
#include "wht/reporting.hpp"
#include "wht/terminology.hpp"

namespace wht::cli {

namespace {

using Json = nlohmann::ordered_json;

const std::map<std::string, Format> kFormats = {
    {"text", Format::Text}, {"csv", Format::Csv}, {"json", Format::Json}, {"dot", Format::Dot}};

std::string_view format_name(Format f) {
  for (const auto& [name, value] : kFormats) {
    if (value == f) return name;
  }
  return "text";
}

std::string_view command_name(Command c) {
  switch (c) {
    case Command::Validate: return "validate";
    case Command::Classify: return "classify";
    case Command::Hallmark: return "hallmark";
    case Command::Analyze: return "analyze";
    case Command::Cluster: return "cluster";
    case Command::Term: return "term";
    case Command::Export: return "export";
  }
  return "?";
}

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Loaded {
  std::string source;  // file name used in diagnostics
  std::optional<Corpus> corpus;
};

bool looks_like_json(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string_view::npos && text[first] == '{';
}

void print_diagnostics(const std::string& source, const std::vector<Diagnostic>& diagnostics,
                       std::ostream& err) {
  for (const auto& d : diagnostics) {
    err << source << ':';
    if (d.location) err << d.location->line << ':' << d.location->column << ':';
    err << ' ' << to_string(d.severity) << ": " << d.message << '\n';
  }
}

bool read_file(const std::string& path, std::string& text) {
  std::ifstream file(path, std::ios::binary);
  if (!file) return false;
  text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  return !file.bad();
}

Loaded load(const CliConfig& config, std::istream& in, std::ostream& err) {
  Loaded out;
  std::string text;
  if (config.golden && !config.golden_file) {
    out.source = "<golden>";
    out.corpus = load_golden();
    return out;
  }
  if (config.golden) {
    out.source = *config.golden_file;
  } else {
    out.source = config.input == "-" ? "<stdin>" : config.input;
  }
  if (!config.golden && config.input == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else if (!read_file(out.source, text)) {
    err << out.source << ": error: cannot read file\n";
    return out;
  }

  ParseResult parsed = looks_like_json(text) ? import_json(text) : parse_corpus(text);
  print_diagnostics(out.source, parsed.diagnostics, err);
  if (parsed.ok()) out.corpus = std::move(parsed.corpus);
  return out;
}

void require_format(const CliConfig& config, std::initializer_list<Format> allowed) {
  for (const Format f : allowed) {
    if (config.format == f) return;
  }
  throw UsageError("format '" + std::string(format_name(config.format)) + "' is not supported by '" +
                   std::string(command_name(config.command)) + "'");
}

std::string render(const Report& report, Format format) {
  switch (format) {
    case Format::Csv: return render_csv(report);
    case Format::Json: return render_json(report);
    default: return render_text(report);
  }
}

Json parsed_json(const Report& report) { return Json::parse(render_json(report)); }

CoverageReport roles_of(const Corpus& corpus) {
  try {
    return role_report(role_distribution(corpus));
  } catch (const EmptyCorpus&) {
    CoverageReport out{"role", {}};
    for (std::size_t i = 0; i < kRoleCount; ++i) {
      out.rows.push_back({std::string(to_string(static_cast<Role>(i))), 0, std::nullopt});
    }
    return out;
  }
}

void analyze(const CliConfig& config, const Corpus& corpus, std::ostream& out) {
  if (config.format == Format::Dot) {
    out << render_dot(cross_tab(corpus, config.key));
    return;
  }
  const std::vector<Report> sections = {
      {coverage_report(term_coverage(corpus))},
      {roles_of(corpus)},
      {class_report(class_distribution(corpus))},
      {ClustersReport{cluster_by_hallmark(corpus), cluster_by_binary_hallmark(corpus)}},
      {CrossTabReport{cross_tab(corpus, config.key)}},
  };

  if (config.format == Format::Json) {
    Json j;
    j["applications"] = corpus.applications.size();
    j["entity_records"] = corpus.entity_record_count();
    const char* names[] = {"coverage", "roles", "classes", "clusters", "crosstab"};
    for (std::size_t i = 0; i < sections.size(); ++i) {
      Json section = parsed_json(sections[i]);
      // Single-key wrappers ({"term": [...]}) are unwrapped under the section name.
      j[names[i]] = section.size() == 1 && i < 3 ? section.begin().value() : section;
    }
    out << j.dump(-1, ' ', false, Json::error_handler_t::replace) << '\n';
    return;
  }

  if (config.format == Format::Text) {
    out << "applications: " << corpus.applications.size() << '\n';
    out << "entity records: " << corpus.entity_record_count() << '\n';
    out << '\n';
  }
  for (std::size_t i = 0; i < sections.size(); ++i) {
    if (i > 0) out << '\n';
    out << render(sections[i], config.format);
  }
}

void cluster(const CliConfig& config, const Corpus& corpus, std::ostream& out) {
  ClustersReport clusters;
  if (!config.binary) clusters.exact = cluster_by_hallmark(corpus);
  clusters.binary = cluster_by_binary_hallmark(corpus);
  const Report distances{DistanceMatrixReport{distance_matrix(corpus, config.metric), config.metric}};
  const Report grouped{std::move(clusters)};

  if (config.format == Format::Json) {
    Json j;
    j["clusters"] = parsed_json(grouped);
    j["distances"] = parsed_json(distances);
    out << j.dump(-1, ' ', false, Json::error_handler_t::replace) << '\n';
    return;
  }
  out << render(grouped, config.format) << '\n' << render(distances, config.format);
}

std::string term_line(const TermKey& term) {
  return std::string(term.canonical_name) + " = " + std::string(to_string(term.role)) + " × " +
         std::string(to_string(term.tangibility)) + " (\"" + term_gloss(term) + "\")";
}

int term(const CliConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<TermKey> terms;
  if (config.term) {
    try {
      terms.push_back(parse_term(*config.term));
    } catch (const UnknownTerm& e) {
      err << "error: " << e.what() << '\n';
      return kExitDataError;
    }
  } else {
    terms.assign(all_terms().begin(), all_terms().end());
  }

  if (config.format == Format::Json) {
    Json j = Json::array();
    for (const auto& t : terms) {
      j.push_back({{"name", t.canonical_name},
                   {"role", to_string(t.role)},
                   {"tangibility", to_string(t.tangibility)},
                   {"gloss", term_gloss(t)}});
    }
    out << j.dump() << '\n';
  } else {
    for (const auto& t : terms) out << term_line(t) << '\n';
  }
  return kExitOk;
}

int dispatch(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  switch (config.command) {
    case Command::Term: require_format(config, {Format::Text, Format::Json}); break;
    case Command::Validate: require_format(config, {Format::Text}); break;
    case Command::Export: require_format(config, {Format::Text, Format::Json}); break;
    case Command::Analyze: break;
    default: require_format(config, {Format::Text, Format::Csv, Format::Json}); break;
  }
  if (config.command == Command::Term) return term(config, out, err);

  const Loaded loaded = load(config, in, err);
  if (!loaded.corpus) return kExitDataError;
  const Corpus& corpus = *loaded.corpus;

  try {
    switch (config.command) {
      case Command::Validate:
        out << "ok: " << corpus.applications.size() << " applications, "
            << corpus.entity_record_count() << " entity records\n";
        break;
      case Command::Classify: out << render(Report{class_table(corpus)}, config.format); break;
      case Command::Hallmark:
        out << render(Report{hallmark_table(corpus, config.binary)}, config.format);
        break;
      case Command::Analyze: analyze(config, corpus, out); break;
      case Command::Cluster: cluster(config, corpus, out); break;
      case Command::Export:
        out << (config.format == Format::Json ? export_json(corpus) + "\n" : serialize_corpus(corpus));
        break;
      case Command::Term: break;
    }
  } catch (const SymbolicCount& e) {
    err << loaded.source << ": error: " << e.what() << '\n';
    return kExitDataError;
  }
  return kExitOk;
}

}  // namespace

std::variant<CliConfig, int> parse_args(int argc, const char* const* argv, std::ostream& out,
                                        std::ostream& err) {
  CliConfig config;
  std::string format = "text";
  std::string metric = "hamming";
  std::string key = "genre";

  CLI::App app{"Classify tangible-interface applications by their what-how hallmarks", "wht"};
  app.require_subcommand(1);

  const auto with_input = [&](CLI::App* sub) {
    auto* input = sub->add_option("input", config.input, "Corpus file (DSL or JSON), or - for stdin");
    auto* golden = sub->add_flag("--golden", config.golden, "Use the bundled corpus");
    sub->add_option("--golden-file", config.golden_file, "Read the bundled corpus from PATH instead")
        ->needs(golden);
    input->excludes(golden);
  };
  const auto with_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json", "dot"}));
  };

  struct Sub {
    Command command;
    const char* description;
  };
  const Sub subs[] = {
      {Command::Validate, "Check a corpus and report diagnostics"},
      {Command::Classify, "Assign a tangibility class to every application"},
      {Command::Hallmark, "Print each application's hallmark vector"},
      {Command::Analyze, "Coverage, distributions, clusters and cross-tabulation"},
      {Command::Cluster, "Hallmark clusters and pairwise distances"},
      {Command::Term, "Look up a what-how term"},
      {Command::Export, "Write the corpus as canonical DSL or JSON"},
  };
  std::map<CLI::App*, Command> commands;
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(std::string(command_name(s.command)), s.description);
    commands[sub] = s.command;
    with_format(sub);
    if (s.command == Command::Term) {
      sub->add_option("name", config.term, "Term name; omit to list all twelve");
      continue;
    }
    with_input(sub);
    if (s.command == Command::Hallmark || s.command == Command::Cluster) {
      sub->add_flag("--binary", config.binary, "Use binary hallmarks");
    }
    if (s.command == Command::Cluster) {
      sub->add_option("--metric", metric, "Distance metric")->check(CLI::IsMember({"l1", "hamming"}));
    }
    if (s.command == Command::Analyze) {
      sub->add_option("--key", key, "Cross-tabulation row key")
          ->check(CLI::IsMember({"genre", "subgenre"}));
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  for (const auto& [sub, command] : commands) {
    if (sub->parsed()) config.command = command;
  }
  config.format = kFormats.at(format);
  config.metric = metric == "l1" ? Metric::L1 : Metric::HammingBinary;
  config.key = key == "subgenre" ? CrossKey::Subgenre : CrossKey::Genre;

  if (config.command != Command::Term && config.input.empty() && !config.golden) {
    err << "error: an input file, - or --golden is required\n";
    return kExitUsage;
  }
  return config;
}

int run(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(config, in, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace wht::cli
