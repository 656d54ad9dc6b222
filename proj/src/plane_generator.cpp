#include "planepart/plane_generator.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>

#include <omp.h>

#include "planepart/errors.hpp"

namespace planepart {

int PlanePartition::weight() const {
  int w = 0;
  for (const auto& row : rows) w += std::accumulate(row.begin(), row.end(), 0);
  return w;
}

int PlanePartition::parts() const {
  int k = 0;
  for (const auto& row : rows) k += static_cast<int>(row.size());
  return k;
}

bool validate(const PlanePartition& p) {
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    const auto& row = p.rows[i];
    if (row.empty()) return false;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] < 1) return false;
      if (j > 0 && row[j] > row[j - 1]) return false;
      if (i > 0) {
        const auto& above = p.rows[i - 1];
        if (j >= above.size() || row[j] > above[j]) return false;
      }
    }
  }
  return true;
}

namespace {

void check_ceiling(int n, const GeneratorLimits& limits) {
  if (n < 0) throw DomainError("plane partitions: n must be nonnegative, got " + std::to_string(n));
  if (n > limits.max_n) {
    throw ResourceLimitError("plane partitions: n = " + std::to_string(n) + " exceeds the generator ceiling " +
                             std::to_string(limits.max_n));
  }
}

// Depth-first walk over plane partitions of a fixed weight. Cells are kept in
// one flat buffer, row lengths on a stack. `on_complete(cells, lens)` fires for
// each finished partition.
template <class OnComplete>
class Walker {
 public:
  Walker(int n, OnComplete& on_complete)
      : n_(n), cells_(static_cast<std::size_t>(n) + 1), top_(static_cast<std::size_t>(n) + 1, n),
        on_complete_(on_complete) {
    lens_.reserve(static_cast<std::size_t>(n));
  }

  void run() {
    if (n_ == 0) {
      on_complete_(std::span<const int>{}, std::span<const int>{});
      return;
    }
    next_row(top_.data(), n_, 0, n_);
  }

  // Walks every completion below a fixed first row.
  void run_from(std::span<const int> first_row) {
    const int sum = std::accumulate(first_row.begin(), first_row.end(), 0);
    std::copy(first_row.begin(), first_row.end(), cells_.begin());
    finish_row(0, static_cast<int>(first_row.size()), n_ - sum);
  }

  // Calls `take(row)` with every admissible first row, lexicographically
  // decreasing.
  template <class Take>
  static void first_rows(int n, Take&& take) {
    std::vector<int> row(static_cast<std::size_t>(n));
    auto rec = [&](auto& self, int pos, int limit, int left) -> void {
      for (int v = std::min(limit, left); v >= 1; --v) {
        row[static_cast<std::size_t>(pos)] = v;
        if (left - v > 0) self(self, pos + 1, v, left - v);
        take(std::span<const int>(row.data(), static_cast<std::size_t>(pos) + 1));
      }
    };
    if (n > 0) rec(rec, 0, n, n);
  }

 private:
  // Chooses a row below `prev` (prev_len entries) starting at cell `offset`.
  void next_row(const int* prev, int prev_len, int offset, int remaining) {
    extend(prev, prev_len, offset, 0, std::numeric_limits<int>::max(), remaining);
  }

  void extend(const int* prev, int prev_len, int offset, int pos, int left_neighbour, int remaining) {
    const int cap = std::min({prev[pos], left_neighbour, remaining});
    int* row = cells_.data() + offset;
    for (int v = cap; v >= 1; --v) {
      row[pos] = v;
      if (pos + 1 < prev_len && remaining - v > 0) extend(prev, prev_len, offset, pos + 1, v, remaining - v);
      finish_row(offset, pos + 1, remaining - v);
    }
  }

  void finish_row(int offset, int len, int remaining) {
    lens_.push_back(len);
    if (remaining == 0) {
      on_complete_(std::span<const int>(cells_.data(), static_cast<std::size_t>(offset + len)),
                   std::span<const int>(lens_));
    } else {
      next_row(cells_.data() + offset, len, offset + len, remaining);
    }
    lens_.pop_back();
  }

  int n_;
  std::vector<int> cells_;
  std::vector<int> top_;  // virtual row above the first one
  std::vector<int> lens_;
  OnComplete& on_complete_;
};

struct PartsTally {
  std::vector<std::uint64_t> hist;
  void operator()(std::span<const int> cells, std::span<const int>) { ++hist[cells.size()]; }
};

PartsHistogram to_histogram(const std::vector<std::uint64_t>& raw) {
  PartsHistogram h;
  for (std::size_t k = 0; k < raw.size(); ++k) {
    if (raw[k] != 0) h.emplace(static_cast<int>(k), BigCount(raw[k]));
  }
  return h;
}

}  // namespace

void generate_all(int n, const std::function<void(const PlanePartition&)>& visit, const GeneratorLimits& limits) {
  check_ceiling(n, limits);
  PlanePartition p;
  auto build = [&](std::span<const int> cells, std::span<const int> lens) {
    p.rows.resize(lens.size());
    std::size_t at = 0;
    for (std::size_t i = 0; i < lens.size(); ++i) {
      const auto len = static_cast<std::size_t>(lens[i]);
      p.rows[i].assign(cells.begin() + static_cast<std::ptrdiff_t>(at),
                       cells.begin() + static_cast<std::ptrdiff_t>(at + len));
      at += len;
    }
    visit(p);
  };
  Walker<decltype(build)> walker(n, build);
  walker.run();
}

std::vector<std::uint64_t> count_by_parts_serial(int n) {
  PartsTally tally{std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0)};
  Walker<PartsTally> walker(n, tally);
  walker.run();
  return tally.hist;
}

std::vector<std::uint64_t> count_by_parts_parallel(int n, int jobs) {
  const auto width = static_cast<std::size_t>(n) + 1;
  if (n == 0) return count_by_parts_serial(0);

  std::vector<std::vector<int>> firsts;
  Walker<PartsTally>::first_rows(n, [&](std::span<const int> row) { firsts.emplace_back(row.begin(), row.end()); });

  // One histogram per subtree; summed in a fixed order afterwards.
  std::vector<std::vector<std::uint64_t>> partial(firsts.size());
  const auto count = static_cast<std::int64_t>(firsts.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(jobs, 1))
  for (std::int64_t i = 0; i < count; ++i) {
    PartsTally tally{std::vector<std::uint64_t>(width, 0)};
    Walker<PartsTally> walker(n, tally);
    walker.run_from(firsts[static_cast<std::size_t>(i)]);
    partial[static_cast<std::size_t>(i)] = std::move(tally.hist);
  }

  std::vector<std::uint64_t> hist(width, 0);
  for (const auto& h : partial) {
    for (std::size_t k = 0; k < width; ++k) hist[k] += h[k];
  }
  return hist;
}

PartsHistogram count_by_parts(int n, const GeneratorLimits& limits) {
  check_ceiling(n, limits);
  return to_histogram(limits.jobs > 1 ? count_by_parts_parallel(n, limits.jobs) : count_by_parts_serial(n));
}

void write_block(std::ostream& out, const PlanePartition& p) {
  for (const auto& row : p.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ' ';
      out << row[j];
    }
    out << '\n';
  }
}

}  // namespace planepart
