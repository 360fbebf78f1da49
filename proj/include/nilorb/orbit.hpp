#pragma once

#include "nilorb/algebra.hpp"
#include "nilorb/partition.hpp"
#include "nilorb/signed_diagram.hpp"

#include <string>
#include <variant>
#include <vector>

namespace nilorb {

/// Formal tags distinguishing orbits that share the same partition or
/// diagram. The tags are opaque labels: no matrix representative is ever
/// attached to a decorated real index.
enum class Decoration {
  none,
  plus,
  minus,
  plus_plus,
  plus_minus,
  minus_plus,
  minus_minus,
};

inline bool is_pair_decoration(Decoration d) {
  return d == Decoration::plus || d == Decoration::minus;
}

inline bool is_quad_decoration(Decoration d) {
  return d == Decoration::plus_plus || d == Decoration::plus_minus ||
         d == Decoration::minus_plus || d == Decoration::minus_minus;
}

inline std::string decoration_label(Decoration d) {
  switch (d) {
    case Decoration::none: return "";
    case Decoration::plus: return "+";
    case Decoration::minus: return "-";
    case Decoration::plus_plus: return "++";
    case Decoration::plus_minus: return "+-";
    case Decoration::minus_plus: return "-+";
    case Decoration::minus_minus: return "--";
  }
  return "";
}

/// Index of one nilpotent orbit of a simple summand: a partition or a signed
/// Young diagram, plus a decoration.
class SimpleOrbit {
public:
  SimpleOrbit(Partition base, Decoration dec)
      : base_(std::move(base)), dec_(dec) {}

  SimpleOrbit(SignedYoungDiagram base, Decoration dec)
      : base_(std::move(base)), dec_(dec) {}

  bool is_partition_based() const {
    return std::holds_alternative<Partition>(base_);
  }

  const Partition& partition() const {
    if (!is_partition_based())
      throw std::invalid_argument("SimpleOrbit: index is diagram-based");
    return std::get<Partition>(base_);
  }

  const SignedYoungDiagram& diagram() const {
    if (is_partition_based())
      throw std::invalid_argument("SimpleOrbit: index is partition-based");
    return std::get<SignedYoungDiagram>(base_);
  }

  Decoration decoration() const { return dec_; }

  Partition underlying_partition() const {
    return is_partition_based() ? std::get<Partition>(base_)
                                : std::get<SignedYoungDiagram>(base_).shape();
  }

  std::string to_string() const {
    std::string s;
    if (is_partition_based()) {
      s = partition().to_string();
    } else {
      s = "{";
      const auto& rows = diagram().rows();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) s += ",";
        s += rows[i].expanded();
      }
      s += "}";
    }
    const std::string label = decoration_label(dec_);
    if (!label.empty()) s += label;
    return s;
  }

  bool operator==(const SimpleOrbit&) const = default;

private:
  std::variant<Partition, SignedYoungDiagram> base_;
  Decoration dec_;
};

inline bool simple_orbit_listing_less(const SimpleOrbit& a, const SimpleOrbit& b) {
  const Partition pa = a.underlying_partition();
  const Partition pb = b.underlying_partition();
  if (!(pa == pb)) return listing_less(pa, pb);
  if (a.is_partition_based() != b.is_partition_based())
    return a.is_partition_based();
  if (!a.is_partition_based() && !(a.diagram() == b.diagram()))
    return diagram_listing_less(a.diagram(), b.diagram());
  return static_cast<int>(a.decoration()) < static_cast<int>(b.decoration());
}

/// Index of one nilpotent orbit of an AlgebraSpec: one SimpleOrbit per
/// summand. For simple algebras there is a single component.
class OrbitIndex {
public:
  OrbitIndex(SimpleOrbit o) : components_{std::move(o)} {}  // NOLINT(implicit)

  explicit OrbitIndex(std::vector<SimpleOrbit> components)
      : components_(std::move(components)) {
    if (components_.empty())
      throw std::invalid_argument("OrbitIndex: at least one component required");
  }

  const std::vector<SimpleOrbit>& components() const { return components_; }

  int component_count() const { return static_cast<int>(components_.size()); }

  bool is_simple() const { return components_.size() == 1; }

  const SimpleOrbit& simple() const {
    if (!is_simple())
      throw std::invalid_argument("OrbitIndex: not an index of a simple algebra");
    return components_.front();
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < components_.size(); ++i) {
      if (i) s += " x ";
      s += components_[i].to_string();
    }
    return s;
  }

  bool operator==(const OrbitIndex&) const = default;

private:
  std::vector<SimpleOrbit> components_;
};

inline bool orbit_listing_less(const OrbitIndex& a, const OrbitIndex& b) {
  if (a.component_count() != b.component_count())
    return a.component_count() < b.component_count();
  for (int i = 0; i < a.component_count(); ++i) {
    const SimpleOrbit& x = a.components()[static_cast<std::size_t>(i)];
    const SimpleOrbit& y = b.components()[static_cast<std::size_t>(i)];
    if (!(x == y)) return simple_orbit_listing_less(x, y);
  }
  return false;
}

struct OrbitListingLess {
  bool operator()(const OrbitIndex& a, const OrbitIndex& b) const {
    return orbit_listing_less(a, b);
  }
};

namespace detail {

/// Valid partition shapes for so(m,C) / so(p,q): every even part appears
/// with even multiplicity.
inline bool orthogonal_shape_valid(const Partition& lam) {
  for (const auto& [value, count] : lam.multiplicities()) {
    if (value % 2 == 0 && count % 2 != 0) return false;
  }
  return true;
}

/// Decoration class of a valid so(p,q) diagram:
///   4 = only even-length rows (four decorations),
///   2 = some odd row, and every odd row has an even number of + boxes or
///       every odd row has an even number of - boxes (two decorations),
///   1 = anything else (undecorated).
inline int orthogonal_decoration_arity(const SignedYoungDiagram& y) {
  if (y.all_rows_even()) return 4;
  bool all_plus_even = true;
  bool all_minus_even = true;
  for (const SignedRow& r : y.rows()) {
    if (r.even_length()) continue;
    if (r.plus_count() % 2 != 0) all_plus_even = false;
    if (r.minus_count() % 2 != 0) all_minus_even = false;
  }
  return (all_plus_even || all_minus_even) ? 2 : 1;
}

inline bool even_rows_start_plus(const SignedYoungDiagram& y) {
  return std::all_of(y.rows().begin(), y.rows().end(), [](const SignedRow& r) {
    return !r.even_length() || r.start == Sign::plus;
  });
}

inline void append_decorated(std::vector<SimpleOrbit>& out, const Partition& lam,
                             bool decorate_pair) {
  if (decorate_pair) {
    out.emplace_back(lam, Decoration::plus);
    out.emplace_back(lam, Decoration::minus);
  } else {
    out.emplace_back(lam, Decoration::none);
  }
}

inline std::vector<SimpleOrbit> enumerate_simple_orbits(const SimpleAlgebra& g) {
  std::vector<SimpleOrbit> out;
  switch (g.family) {
    case Family::sl_complex:
      for (const Partition& lam : enumerate_partitions(g.p))
        out.emplace_back(lam, Decoration::none);
      break;

    case Family::sl_real:
      for (const Partition& lam : enumerate_partitions(g.p))
        append_decorated(out, lam, lam.all_parts_even());
      break;

    case Family::su: {
      const Signature sig{g.p, g.q};
      for (const Partition& lam : enumerate_partitions(g.p + g.q))
        for (SignedYoungDiagram& y : enumerate_signed_fillings(lam, sig))
          out.emplace_back(std::move(y), Decoration::none);
      break;
    }

    case Family::so_complex:
      for (const Partition& lam : enumerate_partitions(g.p)) {
        if (!orthogonal_shape_valid(lam)) continue;
        append_decorated(out, lam, lam.all_parts_even());
      }
      break;

    case Family::so_real: {
      const Signature sig{g.p, g.q};
      for (const Partition& lam : enumerate_partitions(g.p + g.q)) {
        if (!orthogonal_shape_valid(lam)) continue;
        for (SignedYoungDiagram& y : enumerate_signed_fillings(lam, sig)) {
          if (!even_rows_start_plus(y)) continue;
          switch (orthogonal_decoration_arity(y)) {
            case 4:
              out.emplace_back(y, Decoration::plus_plus);
              out.emplace_back(y, Decoration::plus_minus);
              out.emplace_back(y, Decoration::minus_plus);
              out.emplace_back(std::move(y), Decoration::minus_minus);
              break;
            case 2:
              out.emplace_back(y, Decoration::plus);
              out.emplace_back(std::move(y), Decoration::minus);
              break;
            default:
              out.emplace_back(std::move(y), Decoration::none);
          }
        }
      }
      break;
    }
  }
  std::sort(out.begin(), out.end(), simple_orbit_listing_less);
  return out;
}

inline bool validate_simple_orbit(const SimpleAlgebra& g, const SimpleOrbit& o) {
  switch (g.family) {
    case Family::sl_complex:
      return o.is_partition_based() && o.partition().total() == g.p &&
             o.decoration() == Decoration::none;

    case Family::sl_real: {
      if (!o.is_partition_based() || o.partition().total() != g.p) return false;
      if (o.partition().all_parts_even()) return is_pair_decoration(o.decoration());
      return o.decoration() == Decoration::none;
    }

    case Family::su:
      return !o.is_partition_based() &&
             o.diagram().signature() == Signature{g.p, g.q} &&
             o.decoration() == Decoration::none;

    case Family::so_complex: {
      if (!o.is_partition_based() || o.partition().total() != g.p) return false;
      if (!orthogonal_shape_valid(o.partition())) return false;
      if (o.partition().all_parts_even()) return is_pair_decoration(o.decoration());
      return o.decoration() == Decoration::none;
    }

    case Family::so_real: {
      if (o.is_partition_based()) return false;
      const SignedYoungDiagram& y = o.diagram();
      if (!(y.signature() == Signature{g.p, g.q})) return false;
      if (!orthogonal_shape_valid(y.shape())) return false;
      if (!even_rows_start_plus(y)) return false;
      switch (orthogonal_decoration_arity(y)) {
        case 4: return is_quad_decoration(o.decoration());
        case 2: return is_pair_decoration(o.decoration());
        default: return o.decoration() == Decoration::none;
      }
    }
  }
  return false;
}

}  // namespace detail

/// The complete orbit index set I(g), each index exactly once, in listing
/// order. For direct sums this is the cartesian product of the summand index
/// sets, one SimpleOrbit component per summand.
inline std::vector<OrbitIndex> enumerate_orbits(const AlgebraSpec& g) {
  std::vector<std::vector<SimpleOrbit>> lists;
  lists.reserve(g.summands().size());
  for (const SimpleAlgebra& s : g.summands())
    lists.push_back(detail::enumerate_simple_orbits(s));

  std::vector<OrbitIndex> out;
  std::vector<std::size_t> idx(lists.size(), 0);
  for (;;) {
    std::vector<SimpleOrbit> components;
    components.reserve(lists.size());
    for (std::size_t i = 0; i < lists.size(); ++i)
      components.push_back(lists[i][idx[i]]);
    out.push_back(OrbitIndex(std::move(components)));

    // odometer, last component fastest
    std::size_t i = lists.size();
    while (i > 0) {
      --i;
      if (++idx[i] < lists[i].size()) break;
      idx[i] = 0;
      if (i == 0) {
        std::sort(out.begin(), out.end(), orbit_listing_less);
        return out;
      }
    }
  }
}

/// Membership test for I(g), by direct rule checking (not list search).
inline bool validate_orbit(const AlgebraSpec& g, const OrbitIndex& o) {
  if (o.component_count() != g.summand_count()) return false;
  for (int i = 0; i < g.summand_count(); ++i) {
    if (!detail::validate_simple_orbit(g.summands()[static_cast<std::size_t>(i)],
                                       o.components()[static_cast<std::size_t>(i)]))
      return false;
  }
  return true;
}

/// The underlying partition of a simple-algebra index (decoration stripped;
/// diagrams project to their shape). Sum indices have no single partition.
inline Partition underlying_partition(const OrbitIndex& o) {
  if (!o.is_simple())
    throw std::invalid_argument(
        "underlying_partition: defined per summand only; project first");
  return o.simple().underlying_partition();
}

/// The regular nilpotent orbit of a simple complex algebra: the unique
/// dominance maximum of the valid underlying-partition set.
inline OrbitIndex regular_orbit(const AlgebraSpec& g_complex) {
  const SimpleAlgebra& g = g_complex.simple();
  if (!g.is_complex())
    throw std::invalid_argument("regular_orbit: requires sl(n,C) or so(m,C)");

  std::vector<Partition> valid;
  for (const Partition& lam : enumerate_partitions(g.defining_size())) {
    if (g.family == Family::so_complex && !detail::orthogonal_shape_valid(lam))
      continue;
    valid.push_back(lam);
  }

  std::vector<const Partition*> maxima;
  for (const Partition& lam : valid) {
    const bool strictly_below = std::any_of(
        valid.begin(), valid.end(), [&](const Partition& mu) {
          return !(mu == lam) && dominates(mu, lam);
        });
    if (!strictly_below) maxima.push_back(&lam);
  }
  if (maxima.size() != 1)
    throw std::logic_error("regular_orbit: dominance maximum is not unique");
  if (g.family == Family::so_complex && maxima.front()->all_parts_even())
    throw std::logic_error("regular_orbit: maximum is a decorated pair");
  return OrbitIndex(SimpleOrbit(*maxima.front(), Decoration::none));
}

}  // namespace nilorb
