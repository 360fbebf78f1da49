#pragma once

#include "nilorb/algebra.hpp"
#include "nilorb/orbit.hpp"

#include <algorithm>
#include <vector>

namespace nilorb {

/// Whether a complex nilpotent orbit is fixed by conjugation with respect to
/// the real form. Unknown is returned only for non-quasi-split algebras on
/// decorated complex orbits, where the theory provides necessity only.
enum class SigmaStatus { fixed, not_fixed, unknown };

namespace detail {

inline SimpleOrbit complexify_component(const SimpleAlgebra& g, const SimpleOrbit& o) {
  switch (g.family) {
    case Family::sl_complex:
    case Family::so_complex:
      return o;
    case Family::sl_real:
      return SimpleOrbit(o.partition(), Decoration::none);
    case Family::su:
      return SimpleOrbit(o.diagram().shape(), Decoration::none);
    case Family::so_real: {
      const Partition shape = o.diagram().shape();
      if (is_quad_decoration(o.decoration())) {
        // All-even shape: the target is a decorated pair. First-tag
        // convention: ++ and +- map to the plus index, -+ and -- to minus.
        const bool first_plus = o.decoration() == Decoration::plus_plus ||
                                o.decoration() == Decoration::plus_minus;
        return SimpleOrbit(shape, first_plus ? Decoration::plus : Decoration::minus);
      }
      return SimpleOrbit(shape, Decoration::none);
    }
  }
  return o;
}

}  // namespace detail

/// The complexification map on orbit indices: the image index in I(g_C) with
/// the same underlying partition, component-wise for sums.
inline OrbitIndex complexify_orbit(const AlgebraSpec& g, const OrbitIndex& o) {
  if (!validate_orbit(g, o))
    throw std::invalid_argument("complexify_orbit: invalid source orbit for " +
                                g.to_string());
  std::vector<SimpleOrbit> components;
  components.reserve(o.components().size());
  for (int i = 0; i < g.summand_count(); ++i)
    components.push_back(detail::complexify_component(
        g.summands()[static_cast<std::size_t>(i)],
        o.components()[static_cast<std::size_t>(i)]));
  return OrbitIndex(std::move(components));
}

/// Image of the complexification map inside I(g_C), sorted, without
/// duplicates.
inline std::vector<OrbitIndex> image(const AlgebraSpec& g) {
  std::vector<OrbitIndex> out;
  for (const OrbitIndex& o : enumerate_orbits(g))
    out.push_back(complexify_orbit(g, o));
  std::sort(out.begin(), out.end(), orbit_listing_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool contains_orbit(const std::vector<OrbitIndex>& sorted,
                           const OrbitIndex& o) {
  return std::binary_search(sorted.begin(), sorted.end(), o, OrbitListingLess{});
}

/// All real indices mapping onto theta, possibly empty.
inline std::vector<OrbitIndex> fibre(const AlgebraSpec& g, const OrbitIndex& theta) {
  const AlgebraSpec g_complex = complexify_algebra(g);
  if (!validate_orbit(g_complex, theta))
    throw std::invalid_argument("fibre: invalid complex orbit for " +
                                g_complex.to_string());
  std::vector<OrbitIndex> out;
  for (const OrbitIndex& o : enumerate_orbits(g)) {
    if (complexify_orbit(g, o) == theta) out.push_back(o);
  }
  return out;
}

struct SurjectivityReport {
  bool surjective = false;
  std::vector<OrbitIndex> missed;  // complex orbits not in the image, sorted
};

/// Surjectivity decided by enumeration: the image is compared against the
/// full complex index set, and missed orbits are listed.
inline SurjectivityReport is_surjective(const AlgebraSpec& g) {
  const std::vector<OrbitIndex> img = image(g);
  SurjectivityReport report;
  for (const OrbitIndex& theta : enumerate_orbits(complexify_algebra(g))) {
    if (!contains_orbit(img, theta)) report.missed.push_back(theta);
  }
  report.surjective = report.missed.empty();
  return report;
}

/// Whether the regular complex nilpotent orbit is hit by the
/// complexification map. Equals is_quasi_split for every supported simple
/// algebra; the agreement is part of the verification sweep.
inline bool regular_in_image(const AlgebraSpec& g) {
  if (!g.is_simple())
    throw std::invalid_argument("regular_in_image: requires a simple algebra");
  return contains_orbit(image(g), regular_orbit(complexify_algebra(g)));
}

/// Conjugation status of a complex orbit with respect to the real form g.
/// An orbit that is the unique one with its partition is always fixed. For a
/// decorated pair the status is decided by image membership when g is
/// quasi-split, and is unknown otherwise. `precomputed_image`, when given,
/// must be image(g); it avoids re-enumeration in sweeps.
inline SigmaStatus sigma_fixed(const AlgebraSpec& g, const OrbitIndex& theta,
                               const std::vector<OrbitIndex>* precomputed_image = nullptr) {
  if (!g.is_simple())
    throw std::invalid_argument("sigma_fixed: requires a simple algebra");
  const AlgebraSpec g_complex = complexify_algebra(g);
  if (!validate_orbit(g_complex, theta))
    throw std::invalid_argument("sigma_fixed: invalid complex orbit for " +
                                g_complex.to_string());
  if (theta.simple().decoration() == Decoration::none) return SigmaStatus::fixed;
  if (!is_quasi_split(g)) return SigmaStatus::unknown;
  const bool hit = precomputed_image ? contains_orbit(*precomputed_image, theta)
                                     : contains_orbit(image(g), theta);
  return hit ? SigmaStatus::fixed : SigmaStatus::not_fixed;
}

}  // namespace nilorb
