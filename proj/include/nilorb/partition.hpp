#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilorb {

/// Integer partition: a weakly decreasing sequence of positive parts.
/// The empty partition (of 0) is the default-constructed value.
class Partition {
public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1)
        throw std::invalid_argument("Partition: parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
  }

  const std::vector<int>& parts() const { return parts_; }

  int total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  int row_count() const { return static_cast<int>(parts_.size()); }

  bool empty() const { return parts_.empty(); }

  /// Part at 0-based index i; 0 beyond the last row (zero padding).
  int part(int i) const {
    return i >= 0 && i < row_count() ? parts_[static_cast<std::size_t>(i)] : 0;
  }

  bool all_parts_even() const {
    return std::all_of(parts_.begin(), parts_.end(),
                       [](int p) { return p % 2 == 0; });
  }

  int odd_part_count() const {
    return static_cast<int>(std::count_if(parts_.begin(), parts_.end(),
                                          [](int p) { return p % 2 != 0; }));
  }

  /// Conjugate partition: column lengths of the Young diagram.
  Partition transposed() const {
    std::vector<int> cols;
    for (int j = 1; j <= part(0); ++j) {
      int count = 0;
      for (int p : parts_) {
        if (p >= j) ++count;
      }
      cols.push_back(count);
    }
    return Partition(std::move(cols));
  }

  /// Exact multiset counts, part value -> multiplicity.
  std::map<int, int> multiplicities() const {
    std::map<int, int> m;
    for (int p : parts_) ++m[p];
    return m;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

  bool operator==(const Partition&) const = default;

private:
  std::vector<int> parts_;
};

/// Listing order used for all deterministic output: smaller totals first,
/// then reverse-lexicographic (larger parts first), so that for fixed n the
/// order matches enumerate_partitions.
inline bool listing_less(const Partition& a, const Partition& b) {
  if (a.total() != b.total()) return a.total() < b.total();
  return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                      a.parts().begin(), a.parts().end());
}

/// All partitions of n, each exactly once, in reverse-lexicographic order
/// (largest-first). n = 0 yields the single empty partition.
inline std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
  if (n == 0) return {Partition{}};
  std::vector<Partition> out;
  std::vector<int> cur{n};
  for (;;) {
    out.push_back(Partition(cur));
    int k = static_cast<int>(cur.size()) - 1;
    while (k >= 0 && cur[static_cast<std::size_t>(k)] == 1) --k;
    if (k < 0) break;
    int rem = static_cast<int>(cur.size()) - k;  // removed ones plus the 1 taken below
    cur[static_cast<std::size_t>(k)] -= 1;
    cur.resize(static_cast<std::size_t>(k) + 1);
    const int chunk = cur[static_cast<std::size_t>(k)];
    while (rem > 0) {
      const int p = std::min(chunk, rem);
      cur.push_back(p);
      rem -= p;
    }
  }
  return out;
}

/// Dominance order: true iff every prefix sum of lhs is >= the corresponding
/// prefix sum of rhs. Only partitions of equal totals are comparable.
inline bool dominates(const Partition& lhs, const Partition& rhs) {
  if (lhs.total() != rhs.total())
    throw std::invalid_argument(
        "dominates: partitions of unequal totals are not comparable");
  const int rows = std::max(lhs.row_count(), rhs.row_count());
  long prefix_l = 0;
  long prefix_r = 0;
  for (int i = 0; i < rows; ++i) {
    prefix_l += lhs.part(i);
    prefix_r += rhs.part(i);
    if (prefix_l < prefix_r) return false;
  }
  return true;
}

}  // namespace nilorb
