#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "planepart/big_count.hpp"

namespace planepart::cli {

enum class SequenceId { kP1d, kP2d };

/// Persistent count cache, stored as
///   {"p1d": {"<n>": "<decimal>"}, "p2d": {"<n>": "<decimal>"}}
class CacheFile {
 public:
  // Missing file -> empty cache. Malformed content throws DomainError.
  static CacheFile load(const std::filesystem::path& path);

  std::optional<BigCount> find(SequenceId id, int n) const;
  void store(SequenceId id, int n, const BigCount& value);

  // Writes through a temporary file; no-op when nothing changed.
  void save() const;

  bool dirty() const { return dirty_; }

 private:
  std::filesystem::path path_;
  std::map<int, BigCount> p1d_;
  std::map<int, BigCount> p2d_;
  bool dirty_ = false;
};

}  // namespace planepart::cli
