#pragma once

#include "supersplit/arith.hpp"

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

namespace supersplit::arith {

/// Persistent store of complete factorizations, one line per entry:
///
///     N = p1^e1 * p2^e2 * ...
///
/// Readers see an immutable snapshot; store() copies the map, appends to the
/// file and publishes the new snapshot under a single writer lock.
class FactorCache {
 public:
  /// In-memory cache, nothing is persisted.
  FactorCache() = default;
  /// Loads `path` if it exists; new entries are appended to it.
  explicit FactorCache(std::filesystem::path path);

  FactorCache(const FactorCache&) = delete;
  FactorCache& operator=(const FactorCache&) = delete;

  std::optional<FactorMap> lookup(const BigInt& n) const;

  /// Records a complete factorization. Incomplete maps and entries already
  /// present are ignored. Returns true if the entry was new.
  bool store(const FactorMap& f);

  std::size_t size() const;
  /// Lines in the file that failed to parse or verify.
  std::size_t rejected_lines() const { return rejected_; }
  const std::optional<std::filesystem::path>& path() const { return path_; }

  /// Path from SUPERSPLIT_FACTOR_CACHE, if set and non-empty.
  static std::optional<std::filesystem::path> path_from_env();

 private:
  using Map = std::map<BigInt, FactorMap>;

  std::shared_ptr<const Map> snapshot() const;

  std::optional<std::filesystem::path> path_;
  std::shared_ptr<const Map> entries_ = std::make_shared<const Map>();
  std::mutex writer_;
  std::size_t rejected_ = 0;
};

/// Parses one cache line. Returns nullopt for malformed lines or when the
/// product does not match N or a listed factor fails the primality test.
std::optional<FactorMap> parse_cache_line(std::string_view line);

std::string format_cache_line(const FactorMap& f);

}  // namespace supersplit::arith
