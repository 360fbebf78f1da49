#pragma once

#include "nilorb/partition.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace nilorb {

enum class Sign : std::uint8_t { plus, minus };

inline Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

/// Box counts of a signed diagram: number of boxes marked + and -.
struct Signature {
  int plus = 0;
  int minus = 0;

  int total() const { return plus + minus; }

  bool operator==(const Signature&) const = default;
};

/// One row of a signed Young diagram. Signs alternate along the row, so only
/// the leftmost sign is stored; everything else is a derived view.
struct SignedRow {
  int length = 0;
  Sign start = Sign::plus;

  int plus_count() const {
    return start == Sign::plus ? (length + 1) / 2 : length / 2;
  }
  int minus_count() const { return length - plus_count(); }
  bool even_length() const { return length % 2 == 0; }

  /// Row expanded to its full sign string, e.g. "+-+".
  std::string expanded() const {
    std::string s;
    Sign cur = start;
    for (int i = 0; i < length; ++i) {
      s.push_back(sign_char(cur));
      cur = opposite(cur);
    }
    return s;
  }

  bool operator==(const SignedRow&) const = default;
};

/// Canonical row order: longer rows first, and '+'-starting before
/// '-'-starting among rows of equal length.
inline bool canonical_row_less(const SignedRow& a, const SignedRow& b) {
  if (a.length != b.length) return a.length > b.length;
  return a.start == Sign::plus && b.start == Sign::minus;
}

/// Signed Young diagram. Rows are kept in canonical order, and equality is
/// multiset equality of (length, start sign) pairs: permuting rows of equal
/// length does not change the diagram.
class SignedYoungDiagram {
public:
  SignedYoungDiagram() = default;

  SignedYoungDiagram(const Partition& shape, const std::vector<Sign>& start_signs) {
    if (static_cast<int>(start_signs.size()) != shape.row_count())
      throw std::invalid_argument(
          "SignedYoungDiagram: exactly one start sign per row required");
    rows_.reserve(start_signs.size());
    for (int i = 0; i < shape.row_count(); ++i)
      rows_.push_back(SignedRow{shape.part(i), start_signs[static_cast<std::size_t>(i)]});
    canonicalize();
  }

  explicit SignedYoungDiagram(std::vector<SignedRow> rows) : rows_(std::move(rows)) {
    for (const SignedRow& r : rows_) {
      if (r.length < 1)
        throw std::invalid_argument("SignedYoungDiagram: row lengths must be positive");
    }
    canonicalize();
  }

  const std::vector<SignedRow>& rows() const { return rows_; }

  int row_count() const { return static_cast<int>(rows_.size()); }

  int total() const {
    int n = 0;
    for (const SignedRow& r : rows_) n += r.length;
    return n;
  }

  Partition shape() const {
    std::vector<int> lengths;
    lengths.reserve(rows_.size());
    for (const SignedRow& r : rows_) lengths.push_back(r.length);
    return Partition(std::move(lengths));
  }

  Signature signature() const {
    Signature sig;
    for (const SignedRow& r : rows_) {
      sig.plus += r.plus_count();
      sig.minus += r.minus_count();
    }
    return sig;
  }

  /// Per-row (+ count, - count) pairs, in canonical row order.
  std::vector<std::pair<int, int>> row_sign_counts() const {
    std::vector<std::pair<int, int>> counts;
    counts.reserve(rows_.size());
    for (const SignedRow& r : rows_)
      counts.emplace_back(r.plus_count(), r.minus_count());
    return counts;
  }

  bool all_rows_even() const {
    return std::all_of(rows_.begin(), rows_.end(),
                       [](const SignedRow& r) { return r.even_length(); });
  }

  bool has_odd_row() const { return !all_rows_even(); }

  bool operator==(const SignedYoungDiagram&) const = default;

private:
  void canonicalize() { std::stable_sort(rows_.begin(), rows_.end(), canonical_row_less); }

  std::vector<SignedRow> rows_;
};

/// Listing order for diagrams: by shape (partition listing order), then by
/// canonical start-sign sequence with '+' before '-'.
inline bool diagram_listing_less(const SignedYoungDiagram& a,
                                 const SignedYoungDiagram& b) {
  const Partition sa = a.shape();
  const Partition sb = b.shape();
  if (!(sa == sb)) return listing_less(sa, sb);
  for (int i = 0; i < a.row_count(); ++i) {
    const Sign x = a.rows()[static_cast<std::size_t>(i)].start;
    const Sign y = b.rows()[static_cast<std::size_t>(i)].start;
    if (x != y) return x == Sign::plus;
  }
  return false;
}

/// All signed diagrams with the given shape and signature, deduplicated under
/// row-multiset equality, in deterministic (listing) order. The signature
/// must fill the shape exactly; an unreachable signature yields an empty list.
inline std::vector<SignedYoungDiagram> enumerate_signed_fillings(const Partition& shape,
                                                                 Signature sig) {
  if (sig.plus < 0 || sig.minus < 0 || sig.total() != shape.total())
    throw std::invalid_argument(
        "enumerate_signed_fillings: signature must fill the shape");

  // Rows of equal length are interchangeable, so a filling is determined by
  // the number of '+'-starting rows in each length group.
  struct Group {
    int length = 0;
    int count = 0;
  };
  std::vector<Group> groups;
  for (int p : shape.parts()) {
    if (!groups.empty() && groups.back().length == p)
      ++groups.back().count;
    else
      groups.push_back(Group{p, 1});
  }

  std::vector<SignedYoungDiagram> out;
  std::vector<int> plus_starts(groups.size(), 0);

  auto emit = [&]() {
    std::vector<SignedRow> rows;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      for (int i = 0; i < groups[g].count; ++i) {
        const Sign start = i < plus_starts[g] ? Sign::plus : Sign::minus;
        rows.push_back(SignedRow{groups[g].length, start});
      }
    }
    SignedYoungDiagram y(std::move(rows));
    if (y.signature() == sig) out.push_back(std::move(y));
  };

  // Iterate '+'-start counts per group, larger counts first, so the output is
  // already in listing order.
  auto rec = [&](auto&& self, std::size_t g) -> void {
    if (g == groups.size()) {
      emit();
      return;
    }
    for (int t = groups[g].count; t >= 0; --t) {
      plus_starts[g] = t;
      self(self, g + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace nilorb
