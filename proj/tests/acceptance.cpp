// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion is exact (tolerance 0) and carries a wall-clock
// budget; both are enforced.

#include "nilorb/complexify.hpp"
#include "nilorb/oracle.hpp"
#include "nilorb/orbit.hpp"
#include "nilorb/poset.hpp"
#include "nilorb/reference.hpp"
#include "nilorb/sweep.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace {

using namespace nilorb;
using Clock = std::chrono::steady_clock;

struct Criterion {
  int number;
  std::string description;
  double budget_seconds;
  std::function<bool(std::string&)> body;  // fills a failure note
};

OrbitIndex PO(std::vector<int> parts, Decoration dec = Decoration::none) {
  return OrbitIndex(SimpleOrbit(Partition(std::move(parts)), dec));
}

bool criterion_orbit_counts(std::string& note) {
  const std::vector<std::pair<std::string, std::int64_t>> fixtures = {
      {"sl(2,R)", 3}, {"sl(3,R)", 3}, {"sl(4,R)", 7},  {"su(1,1)", 3},
      {"su(2,1)", 4}, {"su(2,2)", 10}, {"so(3,1)", 2}, {"so(2,2)", 9},
      {"so(4,C)", 4}};
  for (const auto& [name, expected] : fixtures) {
    const AlgebraSpec g = parse_algebra(name);
    const auto produced = static_cast<std::int64_t>(enumerate_orbits(g).size());
    const std::int64_t brute = reference::orbit_count(g);
    if (produced != expected || brute != expected) {
      note = name + ": produced " + std::to_string(produced) + ", brute " +
             std::to_string(brute) + ", expected " + std::to_string(expected);
      return false;
    }
  }
  return true;
}

bool criterion_theorem1_sweep(std::string& note) {
  SweepConfig config;
  config.max_n = 8;
  for (const SimpleAlgebra& g : sweep_simple_algebras(config)) {
    const AlgebraSpec spec(g);
    if (is_surjective(spec).surjective != theorem1_predicate(spec)) {
      note = spec.to_string() + ": enumeration disagrees with the predicate";
      return false;
    }
  }
  for (const AlgebraSpec& g : sweep_two_term_sums(config)) {
    if (is_surjective(g).surjective != theorem1_predicate(g)) {
      note = g.to_string() + ": enumeration disagrees with the predicate";
      return false;
    }
  }
  return true;
}

bool criterion_quasi_split_lemma(std::string& note) {
  SweepConfig config;
  config.max_n = 8;
  for (const SimpleAlgebra& g : sweep_simple_algebras(config)) {
    if (regular_in_image(AlgebraSpec(g)) != is_quasi_split(g)) {
      note = g.to_string() + ": regular-orbit membership disagrees";
      return false;
    }
  }
  return true;
}

bool criterion_failed_surjectivity_instances(std::string& note) {
  const auto so31 = is_surjective(parse_algebra("so(3,1)"));
  const std::vector<OrbitIndex> expected31 = {PO({2, 2}, Decoration::plus),
                                              PO({2, 2}, Decoration::minus)};
  if (so31.surjective || !(so31.missed == expected31)) {
    note = "so(3,1): wrong missed set";
    return false;
  }
  const auto so53 = is_surjective(parse_algebra("so(5,3)"));
  const std::vector<OrbitIndex> expected53 = {
      PO({4, 4}, Decoration::plus), PO({4, 4}, Decoration::minus),
      PO({2, 2, 2, 2}, Decoration::plus), PO({2, 2, 2, 2}, Decoration::minus)};
  if (so53.surjective || !(so53.missed == expected53)) {
    note = "so(5,3): wrong missed set";
    return false;
  }
  return true;
}

bool criterion_partition_preservation(std::string& note) {
  SweepConfig config;
  config.max_n = 8;
  for (const SimpleAlgebra& g : sweep_simple_algebras(config)) {
    const AlgebraSpec spec(g);
    for (const OrbitIndex& o : enumerate_orbits(spec)) {
      if (!(underlying_partition(complexify_orbit(spec, o)) ==
            underlying_partition(o))) {
        note = spec.to_string() + ": partition not preserved at " + o.to_string();
        return false;
      }
    }
  }
  return true;
}

bool criterion_dominance_poset(std::string& note) {
  for (int n = 2; n <= 10; ++n) {
    try {
      closure_order_sl(n);  // validates the axioms on construction
    } catch (const std::exception& e) {
      note = "closure_order_sl(" + std::to_string(n) + "): " + e.what();
      return false;
    }
  }
  for (int n = 2; n <= 5; ++n) {
    const FinitePoset poset = closure_order_sl(n);
    for (int i = 0; i < poset.size(); ++i) {
      for (int j = 0; j < poset.size(); ++j) {
        if (!poset.leq(i, j) && !poset.leq(j, i)) {
          note = "n=" + std::to_string(n) + " is not a chain";
          return false;
        }
      }
    }
  }
  const FinitePoset poset6 = closure_order_sl(6);
  if (poset6.size() != 11) {
    note = "n=6: expected 11 elements";
    return false;
  }
  if (!poset6.is_antichain(std::vector<OrbitIndex>{PO({4, 1, 1}), PO({3, 3})})) {
    note = "n=6: {(4,1,1),(3,3)} should be incomparable";
    return false;
  }
  return true;
}

bool criterion_oracle_agreement(std::string& note) {
  DimensionCache cache;
  for (int n = 2; n <= 7; ++n) {
    const SimpleAlgebra g = SimpleAlgebra::sl_complex_form(n);
    for (const Partition& lam : enumerate_partitions(n)) {
      const Partition transposed = lam.transposed();
      int closed_form = n * n;
      for (int col : transposed.parts()) closed_form -= col * col;
      if (orbit_partition_dimension(g, lam, &cache) != closed_form) {
        note = "sl(" + std::to_string(n) + ",C) " + lam.to_string() +
               ": oracle disagrees with the closed form";
        return false;
      }
    }
  }
  for (int m = 3; m <= 8; ++m) {
    const SimpleAlgebra g = SimpleAlgebra::so_complex_form(m);
    const RationalMatrix j = orthogonal_form(m);
    for (const Partition& lam : enumerate_partitions(m)) {
      if (!detail::orthogonal_shape_valid(lam)) continue;
      const RationalMatrix x = orthogonal_representative(lam, m);
      if (!(x.transposed() * j + j * x).is_zero()) {
        note = "so(" + std::to_string(m) + ",C) " + lam.to_string() +
               ": form compatibility fails";
        return false;
      }
      RationalMatrix power = x;
      for (int k = 1; k <= lam.part(0); ++k) {
        int expected = 0;
        for (int p : lam.parts()) expected += std::max(p - k, 0);
        if (power.rank() != expected) {
          note = "so(" + std::to_string(m) + ",C) " + lam.to_string() +
                 ": rank sequence fails at k=" + std::to_string(k);
          return false;
        }
        if (k < lam.part(0)) power = power * x;
      }
      if (orbit_partition_dimension(g, lam, &cache) % 2 != 0) {
        note = "so(" + std::to_string(m) + ",C) " + lam.to_string() +
               ": odd orbit dimension";
        return false;
      }
    }
  }
  return true;
}

bool criterion_fibre_equidimensionality(std::string& note) {
  DimensionCache cache;
  SweepConfig config;
  config.max_n = 6;
  for (const SimpleAlgebra& g : sweep_simple_algebras(config)) {
    const AlgebraSpec spec(g);
    const std::vector<OrbitIndex> real_orbits = enumerate_orbits(spec);
    for (const OrbitIndex& theta : enumerate_orbits(complexify_algebra(spec))) {
      const FibreDimensionReport report =
          verify_fibre_equidimensional(spec, theta, &cache, &real_orbits);
      if (!report.equidimensional) {
        note = spec.to_string() + ": fibre over " + theta.to_string() +
               " is not equidimensional";
        return false;
      }
    }
  }
  return true;
}

bool criterion_sigma_consistency(std::string& note) {
  SweepConfig config;
  config.max_n = 8;
  for (const SimpleAlgebra& g : sweep_simple_algebras(config)) {
    const AlgebraSpec spec(g);
    const std::vector<OrbitIndex> img = image(spec);
    for (const OrbitIndex& theta : enumerate_orbits(complexify_algebra(spec))) {
      const SigmaStatus status = sigma_fixed(spec, theta, &img);
      const bool hit = contains_orbit(img, theta);
      if (is_quasi_split(g)) {
        if ((status == SigmaStatus::fixed) != hit) {
          note = g.to_string() + ": fixed set differs from image at " +
                 theta.to_string();
          return false;
        }
      } else {
        const bool unique = theta.simple().decoration() == Decoration::none;
        if (unique && status != SigmaStatus::fixed) {
          note = g.to_string() + ": uniquely-partitioned orbit not fixed";
          return false;
        }
        if (!unique && status != SigmaStatus::unknown) {
          note = g.to_string() + ": decorated orbit should be unknown";
          return false;
        }
        if (hit && status != SigmaStatus::fixed) {
          note = g.to_string() + ": necessity direction violated at " +
                 theta.to_string();
          return false;
        }
      }
    }
  }
  return true;
}

bool criterion_product_laws(std::string& note) {
  SweepConfig config;
  config.max_n = 4;
  for (const AlgebraSpec& g : sweep_two_term_sums(config)) {
    const AlgebraSpec left(g.summands()[0]);
    const AlgebraSpec right(g.summands()[1]);
    if (enumerate_orbits(g).size() !=
        enumerate_orbits(left).size() * enumerate_orbits(right).size()) {
      note = g.to_string() + ": orbit counts do not multiply";
      return false;
    }
    if (image(g).size() != image(left).size() * image(right).size()) {
      note = g.to_string() + ": images do not multiply";
      return false;
    }
    if (is_surjective(g).surjective !=
        (is_surjective(left).surjective && is_surjective(right).surjective)) {
      note = g.to_string() + ": surjectivity does not conjoin";
      return false;
    }
  }
  const std::size_t so22 = enumerate_orbits(parse_algebra("so(2,2)")).size();
  const std::size_t product = enumerate_orbits(parse_algebra("sl(2,R)+sl(2,R)")).size();
  if (so22 != 9 || product != 9) {
    note = "so(2,2) and sl(2,R)+sl(2,R) should both have 9 orbits";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "orbit-count fixtures against independent brute force", 1.0,
       criterion_orbit_counts},
      {2, "surjectivity-by-enumeration equals the closed predicate", 30.0,
       criterion_theorem1_sweep},
      {3, "regular orbit is hit exactly for quasi-split forms", 10.0,
       criterion_quasi_split_lemma},
      {4, "missed orbits of so(3,1) and so(5,3)", 5.0,
       criterion_failed_surjectivity_instances},
      {5, "complexification preserves underlying partitions", 10.0,
       criterion_partition_preservation},
      {6, "dominance poset axioms, chains below n=6, incomparable pair", 5.0,
       criterion_dominance_poset},
      {7, "oracle dimensions: sl closed form, so postconditions", 60.0,
       criterion_oracle_agreement},
      {8, "fibres are equidimensional", 60.0, criterion_fibre_equidimensionality},
      {9, "sigma-fixed orbits match the image characterization", 10.0,
       criterion_sigma_consistency},
      {10, "counts, images and surjectivity respect direct sums", 5.0,
       criterion_product_laws},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    std::string note;
    bool pass = false;
    const auto start = Clock::now();
    try {
      pass = criterion.body(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(Clock::now() - start).count();
    if (pass && elapsed >= criterion.budget_seconds) {
      pass = false;
      note = "exceeded the " + std::to_string(criterion.budget_seconds) + "s budget";
    }
    if (!pass) ++failures;
    std::printf("criterion %2d %s (%.2fs): %s%s%s\n", criterion.number,
                pass ? "PASS" : "FAIL", elapsed, criterion.description.c_str(),
                note.empty() ? "" : " -- ", note.c_str());
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  else std::printf("all %zu criteria passed\n", criteria.size());
  return failures == 0 ? 0 : 1;
}
