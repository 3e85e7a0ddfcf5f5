#pragma once

// Command-line front end. run() is the whole program minus process setup so
// tests can drive it in-process.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace supersplit::cli {

enum class OutputFormat { table, json, csv };

struct RunConfig {
  std::int64_t factor_budget_ms = 30000;  // must be positive
  std::optional<std::filesystem::path> cache_path;
  OutputFormat output_format = OutputFormat::table;
  bool allow_large = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUnresolved = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

/// `args` excludes the program name. The cache path falls back to
/// SUPERSPLIT_FACTOR_CACHE when --cache is absent.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace supersplit::cli
