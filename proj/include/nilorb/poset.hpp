#pragma once

#include "nilorb/algebra.hpp"
#include "nilorb/orbit.hpp"

#include <string>
#include <utility>
#include <vector>

namespace nilorb {

namespace detail {

using Relation = std::vector<std::vector<bool>>;

inline void check_poset_axioms(const Relation& leq) {
  const std::size_t n = leq.size();
  for (const auto& row : leq) {
    if (row.size() != n)
      throw std::invalid_argument("FinitePoset: relation matrix must be square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq[i][i]) throw std::invalid_argument("FinitePoset: relation not reflexive");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && leq[i][j] && leq[j][i])
        throw std::invalid_argument("FinitePoset: relation not antisymmetric");
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (leq[k][j] && !leq[i][j])
          throw std::invalid_argument("FinitePoset: relation not transitive");
      }
    }
  }
}

/// Transitive reduction: covering pairs (upper, lower), sorted ascending.
inline std::vector<std::pair<int, int>> covering_pairs(const Relation& leq) {
  const int n = static_cast<int>(leq.size());
  std::vector<std::pair<int, int>> covers;
  for (int upper = 0; upper < n; ++upper) {
    for (int lower = 0; lower < n; ++lower) {
      if (upper == lower) continue;
      const auto u = static_cast<std::size_t>(upper);
      const auto l = static_cast<std::size_t>(lower);
      if (!leq[l][u]) continue;
      bool has_between = false;
      for (int k = 0; k < n && !has_between; ++k) {
        const auto m = static_cast<std::size_t>(k);
        if (k != upper && k != lower && leq[l][m] && leq[m][u]) has_between = true;
      }
      if (!has_between) covers.emplace_back(upper, lower);
    }
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

}  // namespace detail

/// Finite poset over orbit indices, with the order relation stored as a
/// boolean matrix. The axioms are validated eagerly on construction; after
/// that the value is read-only.
class FinitePoset {
public:
  FinitePoset(std::vector<OrbitIndex> elements, detail::Relation leq)
      : elements_(std::move(elements)), leq_(std::move(leq)) {
    if (leq_.size() != elements_.size())
      throw std::invalid_argument("FinitePoset: one relation row per element required");
    detail::check_poset_axioms(leq_);
  }

  int size() const { return static_cast<int>(elements_.size()); }

  const std::vector<OrbitIndex>& elements() const { return elements_; }

  const OrbitIndex& element(int i) const {
    return elements_.at(static_cast<std::size_t>(i));
  }

  bool leq(int i, int j) const {
    return leq_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j));
  }

  /// Covering edges (upper, lower) of the Hasse diagram, sorted ascending by
  /// element index.
  std::vector<std::pair<int, int>> hasse() const { return detail::covering_pairs(leq_); }

  /// True iff no two distinct members of the subset are comparable.
  bool is_antichain(const std::vector<int>& subset) const {
    for (int i : subset) {
      if (i < 0 || i >= size())
        throw std::invalid_argument("is_antichain: element index out of range");
    }
    for (std::size_t a = 0; a < subset.size(); ++a) {
      for (std::size_t b = a + 1; b < subset.size(); ++b) {
        const int i = subset[a];
        const int j = subset[b];
        if (i != j && (leq(i, j) || leq(j, i))) return false;
      }
    }
    return true;
  }

  bool is_antichain(const std::vector<OrbitIndex>& subset) const {
    std::vector<int> idx;
    idx.reserve(subset.size());
    for (const OrbitIndex& o : subset) idx.push_back(index_of(o));
    return is_antichain(idx);
  }

  int index_of(const OrbitIndex& o) const {
    for (int i = 0; i < size(); ++i) {
      if (elements_[static_cast<std::size_t>(i)] == o) return i;
    }
    throw std::invalid_argument("FinitePoset: unknown element " + o.to_string());
  }

  /// Deterministic DOT text. Nodes appear in element order (a linear
  /// extension, maxima first, for the posets built here), one edge per Hasse
  /// cover, directed from the covering element down to the covered one.
  std::string export_dot(const std::vector<std::string>& labels) const {
    if (static_cast<int>(labels.size()) != size())
      throw std::invalid_argument("export_dot: one label per element required");
    std::string out = "digraph poset {\n";
    for (int i = 0; i < size(); ++i) {
      std::string escaped;
      for (char c : labels[static_cast<std::size_t>(i)]) {
        if (c == '"' || c == '\\') escaped.push_back('\\');
        escaped.push_back(c);
      }
      out += "  n" + std::to_string(i) + " [label=\"" + escaped + "\"];\n";
    }
    for (const auto& [upper, lower] : hasse())
      out += "  n" + std::to_string(upper) + " -> n" + std::to_string(lower) + ";\n";
    out += "}\n";
    return out;
  }

private:
  std::vector<OrbitIndex> elements_;
  detail::Relation leq_;
};

/// Closure order on the nilpotent orbits of sl(n,C): elements are the
/// partitions of n in listing order, and the order is dominance.
inline FinitePoset closure_order_sl(int n) {
  if (n < 2) throw std::invalid_argument("closure_order_sl: requires n >= 2");
  const std::vector<Partition> partitions = enumerate_partitions(n);
  std::vector<OrbitIndex> elements;
  elements.reserve(partitions.size());
  for (const Partition& lam : partitions)
    elements.push_back(OrbitIndex(SimpleOrbit(lam, Decoration::none)));

  const std::size_t count = partitions.size();
  detail::Relation leq(count, std::vector<bool>(count, false));
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      leq[i][j] = dominates(partitions[j], partitions[i]);
    }
  }
  return FinitePoset(std::move(elements), std::move(leq));
}

/// Dominance on the underlying partitions of I(so(m,C)). This is only a
/// projection of the index set; it is NOT asserted to be the closure order,
/// and output produced from it is flagged accordingly.
struct DominanceProjection {
  std::vector<Partition> elements;
  std::vector<std::pair<int, int>> covers;  // (upper, lower)
};

inline DominanceProjection dominance_projection_so(int m) {
  if (m < 3) throw std::invalid_argument("dominance_projection_so: requires m >= 3");
  DominanceProjection proj;
  for (const Partition& lam : enumerate_partitions(m)) {
    if (detail::orthogonal_shape_valid(lam)) proj.elements.push_back(lam);
  }
  const std::size_t count = proj.elements.size();
  detail::Relation leq(count, std::vector<bool>(count, false));
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      leq[i][j] = dominates(proj.elements[j], proj.elements[i]);
    }
  }
  proj.covers = detail::covering_pairs(leq);
  return proj;
}

}  // namespace nilorb
