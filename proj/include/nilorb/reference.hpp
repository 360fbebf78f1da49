#pragma once

// Slow reference implementations, deliberately independent of the production
// enumeration code paths. The verification sweep and the acceptance suite
// compare production results against these.

#include "nilorb/algebra.hpp"
#include "nilorb/partition.hpp"
#include "nilorb/signed_diagram.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace nilorb::reference {

/// Number of partitions of n, by the textbook recursion on restricted
/// counts: count(n, k) = partitions of n with largest part <= k.
inline std::int64_t partition_count(int n) {
  if (n < 0) return 0;
  std::vector<std::vector<std::int64_t>> memo(
      static_cast<std::size_t>(n) + 1,
      std::vector<std::int64_t>(static_cast<std::size_t>(n) + 1, -1));
  const auto count = [&](auto&& self, int rest, int cap) -> std::int64_t {
    if (rest == 0) return 1;
    if (cap == 0) return 0;
    auto& slot = memo[static_cast<std::size_t>(rest)][static_cast<std::size_t>(cap)];
    if (slot >= 0) return slot;
    std::int64_t total = self(self, rest, cap - 1);
    if (rest >= cap) total += self(self, rest - cap, cap);
    return slot = total;
  };
  return count(count, n, n);
}

/// All partitions of n by plain recursive descent, as raw part vectors.
inline std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> stack;
  const auto rec = [&](auto&& self, int rest, int cap) -> void {
    if (rest == 0) {
      out.push_back(stack);
      return;
    }
    for (int p = std::min(rest, cap); p >= 1; --p) {
      stack.push_back(p);
      self(self, rest - p, p);
      stack.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

/// Transpose by filling an explicit box grid and counting columns.
inline std::vector<int> transpose(const std::vector<int>& parts) {
  if (parts.empty()) return {};
  std::vector<std::vector<bool>> grid;
  for (int p : parts) grid.push_back(std::vector<bool>(static_cast<std::size_t>(p), true));
  std::vector<int> cols;
  for (std::size_t j = 0; j < static_cast<std::size_t>(parts.front()); ++j) {
    int height = 0;
    for (const auto& row : grid) {
      if (j < row.size()) ++height;
    }
    cols.push_back(height);
  }
  return cols;
}

/// A raw signed filling: one row per part, each row a (length, starts_plus)
/// pair, canonicalized by plain sorting so multiset equality is equality.
using RawFilling = std::vector<std::pair<int, bool>>;

inline int raw_plus_boxes(const RawFilling& rows) {
  int total = 0;
  for (const auto& [length, starts_plus] : rows)
    total += starts_plus ? (length + 1) / 2 : length / 2;
  return total;
}

/// Every distinct signed filling of the given shape, found by walking all
/// 2^rows start-sign vectors and deduplicating through a set.
inline std::set<RawFilling> raw_fillings(const std::vector<int>& parts) {
  std::set<RawFilling> out;
  const int rows = static_cast<int>(parts.size());
  for (std::uint32_t mask = 0; mask < (1u << rows); ++mask) {
    RawFilling filling;
    for (int i = 0; i < rows; ++i)
      filling.emplace_back(parts[static_cast<std::size_t>(i)], (mask >> i & 1u) == 0);
    std::sort(filling.begin(), filling.end(),
              [](const auto& a, const auto& b) {
                if (a.first != b.first) return a.first > b.first;
                return a.second && !b.second;
              });
    out.insert(std::move(filling));
  }
  return out;
}

/// Distinct signed fillings of each partition of n, bucketed by the number
/// of + boxes. fillings_by_plus(n)[lam][p] = count with p plus boxes.
inline std::map<std::vector<int>, std::map<int, std::int64_t>> fillings_by_plus(int n) {
  std::map<std::vector<int>, std::map<int, std::int64_t>> out;
  for (const std::vector<int>& parts : partitions(n)) {
    auto& buckets = out[parts];
    for (const RawFilling& filling : raw_fillings(parts))
      ++buckets[raw_plus_boxes(filling)];
  }
  return out;
}

inline bool all_even(const std::vector<int>& parts) {
  return std::all_of(parts.begin(), parts.end(), [](int p) { return p % 2 == 0; });
}

inline bool orthogonal_valid(const std::vector<int>& parts) {
  std::map<int, int> mult;
  for (int p : parts) ++mult[p];
  for (const auto& [value, count] : mult) {
    if (value % 2 == 0 && count % 2 != 0) return false;
  }
  return true;
}

/// Orbit count of one simple algebra by literal application of the indexing
/// rules to raw enumerations.
inline std::int64_t orbit_count(const SimpleAlgebra& g) {
  switch (g.family) {
    case Family::sl_complex:
      return partition_count(g.p);

    case Family::sl_real: {
      std::int64_t total = 0;
      for (const auto& parts : partitions(g.p)) total += all_even(parts) ? 2 : 1;
      return total;
    }

    case Family::su: {
      std::int64_t total = 0;
      for (const auto& parts : partitions(g.p + g.q)) {
        for (const RawFilling& filling : raw_fillings(parts)) {
          if (raw_plus_boxes(filling) == g.p) ++total;
        }
      }
      return total;
    }

    case Family::so_complex: {
      std::int64_t total = 0;
      for (const auto& parts : partitions(g.p)) {
        if (!orthogonal_valid(parts)) continue;
        total += all_even(parts) ? 2 : 1;
      }
      return total;
    }

    case Family::so_real: {
      std::int64_t total = 0;
      for (const auto& parts : partitions(g.p + g.q)) {
        if (!orthogonal_valid(parts)) continue;
        for (const RawFilling& filling : raw_fillings(parts)) {
          if (raw_plus_boxes(filling) != g.p) continue;
          bool even_rows_ok = true;
          bool any_odd = false;
          bool odd_plus_even = true;
          bool odd_minus_even = true;
          for (const auto& [length, starts_plus] : filling) {
            const int plus = starts_plus ? (length + 1) / 2 : length / 2;
            const int minus = length - plus;
            if (length % 2 == 0) {
              if (!starts_plus) even_rows_ok = false;
            } else {
              any_odd = true;
              if (plus % 2 != 0) odd_plus_even = false;
              if (minus % 2 != 0) odd_minus_even = false;
            }
          }
          if (!even_rows_ok) continue;
          if (!any_odd)
            total += 4;
          else if (odd_plus_even || odd_minus_even)
            total += 2;
          else
            total += 1;
        }
      }
      return total;
    }
  }
  return 0;
}

inline std::int64_t orbit_count(const AlgebraSpec& g) {
  std::int64_t total = 1;
  for (const SimpleAlgebra& s : g.summands()) total *= orbit_count(s);
  return total;
}

}  // namespace nilorb::reference
