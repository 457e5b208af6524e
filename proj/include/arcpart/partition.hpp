#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace arcpart {

/// A partition stored largest part first: parts()[0] >= parts()[1] >= ... > 0.
///
/// Index helpers follow the 1-based convention lambda_1 >= ... >= lambda_m,
/// with lambda_j := 0 for j <= 0 so that index formulas that run off the
/// left end evaluate to zero instead of failing.
class Partition {
public:
  Partition() = default;
  /// Throws std::invalid_argument unless the parts are positive and non-increasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int weight() const noexcept { return weight_; }

  /// lambda_j for 1 <= j <= m, zero for j <= 0. Throws std::out_of_range for j > m.
  int at(long j) const;
  /// The l-th part counting from the right, i.e. lambda_{m-l+1}; l = 1 is the smallest part.
  int from_right(long l) const { return at(static_cast<long>(length()) - l + 1); }
  /// Smallest part, or 0 for the empty partition.
  int smallest() const noexcept { return parts_.empty() ? 0 : parts_.back(); }

  /// Number of parts equal to v.
  int multiplicity(int v) const noexcept;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Pruning hooks for enumeration.
///
/// `extend_ok` sees the prefix lambda_1..lambda_j right after lambda_j was
/// appended; returning false discards every partition with that prefix, so it
/// must only encode conditions that no later part can repair. `accept` is the
/// full predicate evaluated on complete partitions.
struct Constraint {
  std::function<bool(std::span<const int> prefix)> extend_ok;
  std::function<bool(const Partition&)> accept;
};

struct EnumerationOptions {
  std::optional<std::size_t> max_length;
  std::optional<std::size_t> exact_length;
  int min_part = 1;
};

/// Visits every partition of n satisfying the constraint, once, in
/// lexicographic order of the part sequence.
void for_each_partition(int n, const EnumerationOptions& opts, const Constraint& constraint,
                        const std::function<void(const Partition&)>& visit);

std::vector<Partition> enumerate_partitions(int n, const EnumerationOptions& opts = {},
                                            const Constraint& constraint = {});

}  // namespace arcpart
