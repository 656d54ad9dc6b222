#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "planepart/big_count.hpp"

namespace planepart {

/// Plane partition stored row by row with zeros suppressed.
///
/// Rows are nonincreasing left to right, row lengths are nonincreasing top to
/// bottom, and every column is nonincreasing top to bottom. Use validate() to
/// check a hand-built value.
struct PlanePartition {
  std::vector<std::vector<int>> rows;

  int weight() const;
  int parts() const;

  friend bool operator==(const PlanePartition&, const PlanePartition&) = default;
};

bool validate(const PlanePartition& p);

struct GeneratorLimits {
  int max_n = 30;
  // Worker threads for the counting pass; 1 selects the serial walk.
  int jobs = 1;
};

// parts-count -> number of plane partitions with exactly that many parts.
using PartsHistogram = std::map<int, BigCount>;

/// Calls `visit` for every plane partition of n exactly once. Rows are chosen
/// in lexicographically decreasing order at each level, so the sequence is
/// deterministic (for n = 4 it starts with `4`, then `3 1`, then `3 / 1`).
/// Throws ResourceLimitError when n > limits.max_n.
void generate_all(int n, const std::function<void(const PlanePartition&)>& visit,
                  const GeneratorLimits& limits = {});

/// Histogram of parts counts over all plane partitions of n. Runs the serial
/// walk or, with limits.jobs > 1, the OpenMP kernel; both give identical maps.
PartsHistogram count_by_parts(int n, const GeneratorLimits& limits = {});

// Kernels behind count_by_parts, exposed for tests and the benchmark. Entry k
// of the result is the number of partitions with exactly k parts.
std::vector<std::uint64_t> count_by_parts_serial(int n);
std::vector<std::uint64_t> count_by_parts_parallel(int n, int jobs);

/// Block text format: one row per line, entries space-separated.
void write_block(std::ostream& out, const PlanePartition& p);

}  // namespace planepart
