#include "arcpart/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace arcpart {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (parts_[j] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (j > 0 && parts_[j] > parts_[j - 1])
      throw std::invalid_argument("partition parts must be non-increasing");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

int Partition::at(long j) const {
  if (j <= 0)
    return 0;
  if (static_cast<std::size_t>(j) > parts_.size())
    throw std::out_of_range("partition index past the last part");
  return parts_[static_cast<std::size_t>(j - 1)];
}

int Partition::multiplicity(int v) const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), v));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (j)
      s += ',';
    s += std::to_string(parts_[j]);
  }
  return s + ")";
}

namespace {

struct Walker {
  const EnumerationOptions& opts;
  const Constraint& constraint;
  const std::function<void(const Partition&)>& visit;
  std::vector<int> prefix;

  std::size_t length_cap() const {
    if (opts.exact_length)
      return *opts.exact_length;
    return opts.max_length.value_or(static_cast<std::size_t>(-1));
  }

  void emit() {
    if (opts.exact_length && prefix.size() != *opts.exact_length)
      return;
    Partition p(prefix);
    if (!constraint.accept || constraint.accept(p))
      visit(p);
  }

  // Parts are chosen in increasing order at each level, which yields the
  // lexicographic order of the (largest-first) part sequences.
  void walk(int remaining, int cap) {
    if (remaining == 0) {
      emit();
      return;
    }
    if (prefix.size() >= length_cap())
      return;
    const int hi = std::min(remaining, cap);
    for (int part = opts.min_part; part <= hi; ++part) {
      // the rest must still be expressible with parts in [min_part, part]
      const int rest = remaining - part;
      if (rest != 0 && rest < opts.min_part)
        continue;
      prefix.push_back(part);
      if (!constraint.extend_ok || constraint.extend_ok(prefix))
        walk(rest, part);
      prefix.pop_back();
    }
  }
};

}  // namespace

void for_each_partition(int n, const EnumerationOptions& opts, const Constraint& constraint,
                        const std::function<void(const Partition&)>& visit) {
  if (n < 0)
    throw std::invalid_argument("cannot enumerate partitions of a negative integer");
  if (opts.min_part < 1)
    throw std::invalid_argument("min_part must be at least 1");
  Walker w{opts, constraint, visit, {}};
  w.walk(n, n);
}

std::vector<Partition> enumerate_partitions(int n, const EnumerationOptions& opts,
                                            const Constraint& constraint) {
  std::vector<Partition> out;
  for_each_partition(n, opts, constraint, [&](const Partition& p) { out.push_back(p); });
  return out;
}

}  // namespace arcpart
