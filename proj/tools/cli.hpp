#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include "wht/analysis.hpp"

namespace wht::cli {

enum class Command { Validate, Classify, Hallmark, Analyze, Cluster, Term, Export };
enum class Format { Text, Csv, Json, Dot };

struct CliConfig {
  Command command = Command::Validate;
  std::string input;  // path, "-" for stdin; empty with golden
  bool golden = false;
  std::optional<std::string> golden_file;
  Format format = Format::Text;
  bool binary = false;
  Metric metric = Metric::HammingBinary;
  CrossKey key = CrossKey::Genre;
  std::optional<std::string> term;  // argument of `term`
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;

/// Parses argv into a config, or returns the exit code to use (help output
/// and usage errors are already written).
std::variant<CliConfig, int> parse_args(int argc, const char* const* argv, std::ostream& out,
                                        std::ostream& err);

int run(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace wht::cli
