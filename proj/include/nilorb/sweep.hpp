#pragma once

#include "nilorb/algebra.hpp"
#include "nilorb/complexify.hpp"
#include "nilorb/oracle.hpp"
#include "nilorb/orbit.hpp"
#include "nilorb/poset.hpp"
#include "nilorb/reference.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace nilorb {

/// Configuration of the verification sweep. max_n bounds the rank
/// parameters of the simple algebras; members of 2-term sums are always
/// bounded by min(max_n, 4), which keeps the product index sets small.
struct SweepConfig {
  int max_n = 8;
  bool family_sl_real = true;
  bool family_su = true;
  bool family_so_real = true;
  bool include_sums = true;
};

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;  // first failing case, empty when passing
};

inline std::vector<SimpleAlgebra> sweep_simple_algebras(const SweepConfig& config,
                                                        int bound) {
  std::vector<SimpleAlgebra> out;
  if (config.family_sl_real) {
    for (int n = 2; n <= bound; ++n) out.push_back(SimpleAlgebra::sl_real_form(n));
  }
  if (config.family_su) {
    for (int p = 1; p <= bound; ++p)
      for (int q = 1; q <= p; ++q) out.push_back(SimpleAlgebra::su_form(p, q));
  }
  if (config.family_so_real) {
    for (int p = 1; p <= bound; ++p) {
      for (int q = 1; q <= p; ++q) {
        if (p + q >= 3) out.push_back(SimpleAlgebra::so_real_form(p, q));
      }
    }
  }
  return out;
}

inline std::vector<SimpleAlgebra> sweep_simple_algebras(const SweepConfig& config) {
  return sweep_simple_algebras(config, config.max_n);
}

inline std::vector<AlgebraSpec> sweep_two_term_sums(const SweepConfig& config) {
  std::vector<AlgebraSpec> out;
  if (!config.include_sums) return out;
  const std::vector<SimpleAlgebra> members =
      sweep_simple_algebras(config, std::min(config.max_n, 4));
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i; j < members.size(); ++j) {
      out.push_back(AlgebraSpec(std::vector<SimpleAlgebra>{members[i], members[j]}));
    }
  }
  return out;
}

namespace detail {

class CheckRunner {
public:
  /// Runs `body`, which reports failures through the provided fail()
  /// callback; the first failure is recorded as the check detail.
  void run(const std::string& name,
           const std::function<void(const std::function<void(const std::string&)>&)>& body) {
    CheckResult result;
    result.name = name;
    const auto fail = [&result](const std::string& detail) {
      if (result.pass) result.detail = detail;
      result.pass = false;
    };
    try {
      body(fail);
    } catch (const std::exception& e) {
      fail(std::string("exception: ") + e.what());
    }
    results.push_back(std::move(result));
  }

  std::vector<CheckResult> results;
};

/// Deterministic xorshift-based Fisher-Yates shuffle; std::shuffle is not
/// byte-stable across standard libraries.
inline void deterministic_shuffle(std::vector<std::size_t>& values, std::uint64_t seed) {
  std::uint64_t state = seed * 2654435769u + 1;
  const auto next = [&state]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  for (std::size_t i = values.size(); i > 1; --i)
    std::swap(values[i - 1], values[next() % i]);
}

inline std::vector<OrbitIndex> product_of(const std::vector<OrbitIndex>& left,
                                          const std::vector<OrbitIndex>& right) {
  std::vector<OrbitIndex> out;
  out.reserve(left.size() * right.size());
  for (const OrbitIndex& a : left) {
    for (const OrbitIndex& b : right) {
      std::vector<SimpleOrbit> components = a.components();
      components.insert(components.end(), b.components().begin(), b.components().end());
      out.push_back(OrbitIndex(std::move(components)));
    }
  }
  std::sort(out.begin(), out.end(), orbit_listing_less);
  return out;
}

}  // namespace detail

/// The full property sweep behind `verify`: every module invariant, executed
/// at the configured bounds, in a fixed deterministic order.
inline std::vector<CheckResult> run_verification(const SweepConfig& config) {
  detail::CheckRunner runner;
  using Fail = std::function<void(const std::string&)>;

  const std::vector<SimpleAlgebra> simple_sweep = sweep_simple_algebras(config);
  const std::vector<AlgebraSpec> sum_sweep = sweep_two_term_sums(config);

  runner.run("partitions/count-matches-reference", [&](const Fail& fail) {
    for (int n = 0; n <= 20; ++n) {
      const auto enumerated = enumerate_partitions(n);
      if (static_cast<std::int64_t>(enumerated.size()) != reference::partition_count(n))
        fail("count mismatch at n=" + std::to_string(n));
      for (std::size_t i = 0; i + 1 < enumerated.size(); ++i) {
        if (!listing_less(enumerated[i], enumerated[i + 1]))
          fail("listing order violated at n=" + std::to_string(n));
      }
    }
  });

  runner.run("partitions/dominance-axioms", [&](const Fail& fail) {
    for (int n = 1; n <= 12; ++n) {
      const auto partitions = enumerate_partitions(n);
      for (const Partition& a : partitions) {
        if (!dominates(a, a)) fail("not reflexive at " + a.to_string());
        for (const Partition& b : partitions) {
          if (!(a == b) && dominates(a, b) && dominates(b, a))
            fail("not antisymmetric at " + a.to_string() + "," + b.to_string());
          for (const Partition& c : partitions) {
            if (dominates(a, b) && dominates(b, c) && !dominates(a, c))
              fail("not transitive at " + a.to_string());
          }
        }
      }
    }
  });

  runner.run("partitions/transpose-antiisomorphism", [&](const Fail& fail) {
    for (int n = 0; n <= 10; ++n) {
      for (const Partition& a : enumerate_partitions(n)) {
        if (!(a.transposed().transposed() == a))
          fail("transpose not involutive at " + a.to_string());
        for (const Partition& b : enumerate_partitions(n)) {
          if (dominates(a, b) != dominates(b.transposed(), a.transposed()))
            fail("anti-isomorphism fails at " + a.to_string() + "," + b.to_string());
        }
      }
    }
  });

  runner.run("partitions/dominance-extremes", [&](const Fail& fail) {
    for (int n = 1; n <= 12; ++n) {
      const Partition top(std::vector<int>{n});
      const Partition bottom(std::vector<int>(static_cast<std::size_t>(n), 1));
      for (const Partition& lam : enumerate_partitions(n)) {
        if (!dominates(top, lam)) fail("(n) not maximal at " + lam.to_string());
        if (!dominates(lam, bottom)) fail("(1^n) not minimal at " + lam.to_string());
      }
    }
  });

  runner.run("diagrams/fillings-roundtrip", [&](const Fail& fail) {
    for (int n = 1; n <= 10; ++n) {
      const auto reference_buckets = reference::fillings_by_plus(n);
      for (const Partition& lam : enumerate_partitions(n)) {
        std::int64_t across_signatures = 0;
        const auto& buckets = reference_buckets.at(lam.parts());
        for (int p = 0; p <= n; ++p) {
          const Signature sig{p, n - p};
          const auto fillings = enumerate_signed_fillings(lam, sig);
          for (const SignedYoungDiagram& y : fillings) {
            if (!(y.shape() == lam) || !(y.signature() == sig))
              fail("filling round-trip fails at " + lam.to_string());
          }
          for (std::size_t i = 0; i + 1 < fillings.size(); ++i) {
            if (!diagram_listing_less(fillings[i], fillings[i + 1]))
              fail("filling order violated at " + lam.to_string());
          }
          const auto it = buckets.find(p);
          const std::int64_t expected = it == buckets.end() ? 0 : it->second;
          if (static_cast<std::int64_t>(fillings.size()) != expected)
            fail("filling count mismatch at " + lam.to_string());
          across_signatures += static_cast<std::int64_t>(fillings.size());
        }
        std::int64_t raw_total = 0;
        for (const auto& [plus, count] : buckets) raw_total += count;
        if (across_signatures != raw_total)
          fail("signature totals do not add up at " + lam.to_string());
      }
    }
  });

  runner.run("diagrams/row-permutation-invariance", [&](const Fail& fail) {
    std::uint64_t seed = 1;
    for (int n = 1; n <= 8; ++n) {
      for (const Partition& lam : enumerate_partitions(n)) {
        for (int p = 0; p <= n; ++p) {
          for (const SignedYoungDiagram& y : enumerate_signed_fillings(lam, {p, n - p})) {
            std::vector<std::size_t> order(y.rows().size());
            for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
            detail::deterministic_shuffle(order, ++seed);
            std::vector<SignedRow> shuffled;
            for (std::size_t i : order) shuffled.push_back(y.rows()[i]);
            if (!(SignedYoungDiagram(std::move(shuffled)) == y))
              fail("row permutation changed diagram at " + lam.to_string());
          }
        }
      }
    }
  });

  runner.run("orbits/validate-and-distinct", [&](const Fail& fail) {
    for (const SimpleAlgebra& g : simple_sweep) {
      const AlgebraSpec spec(g);
      const auto orbits = enumerate_orbits(spec);
      for (const OrbitIndex& o : orbits) {
        if (!validate_orbit(spec, o))
          fail(g.to_string() + ": enumerated orbit fails validation");
      }
      for (std::size_t i = 0; i + 1 < orbits.size(); ++i) {
        if (!orbit_listing_less(orbits[i], orbits[i + 1]))
          fail(g.to_string() + ": duplicate or misordered orbits");
      }
    }
  });

  runner.run("orbits/count-matches-reference", [&](const Fail& fail) {
    for (const SimpleAlgebra& g : simple_sweep) {
      if (static_cast<std::int64_t>(enumerate_orbits(AlgebraSpec(g)).size()) !=
          reference::orbit_count(g))
        fail(g.to_string() + ": count disagrees with reference enumeration");
    }
  });

  runner.run("orbits/so-complex-partition-classes", [&](const Fail& fail) {
    for (int m = 3; m <= 2 * config.max_n; ++m) {
      const SimpleAlgebra g = SimpleAlgebra::so_complex_form(m);
      std::map<std::vector<int>, int> per_partition;
      for (const OrbitIndex& o : enumerate_orbits(AlgebraSpec(g)))
        ++per_partition[underlying_partition(o).parts()];
      for (const auto& [parts, count] : per_partition) {
        const int expected = reference::all_even(parts) ? 2 : 1;
        if (count != expected)
          fail("so(" + std::to_string(m) + ",C): wrong orbit count per partition");
      }
    }
  });

  runner.run("orbits/product-law-counts", [&](const Fail& fail) {
    for (const AlgebraSpec& g : sum_sweep) {
      const std::size_t product = enumerate_orbits(g).size();
      std::size_t expected = 1;
      for (const SimpleAlgebra& s : g.summands())
        expected *= enumerate_orbits(AlgebraSpec(s)).size();
      if (product != expected) fail(g.to_string() + ": product law fails");
    }
  });

  runner.run("complexify/partition-preservation", [&](const Fail& fail) {
    const auto check_spec = [&](const AlgebraSpec& spec) {
      for (const OrbitIndex& o : enumerate_orbits(spec)) {
        const OrbitIndex theta = complexify_orbit(spec, o);
        for (int i = 0; i < spec.summand_count(); ++i) {
          const auto idx = static_cast<std::size_t>(i);
          if (!(o.components()[idx].underlying_partition() ==
                theta.components()[idx].underlying_partition()))
            fail(spec.to_string() + ": partition not preserved");
        }
      }
    };
    for (const SimpleAlgebra& g : simple_sweep) check_spec(AlgebraSpec(g));
    for (const AlgebraSpec& g : sum_sweep) check_spec(g);
  });

  runner.run("complexify/fibres-partition-index-set", [&](const Fail& fail) {
    for (const SimpleAlgebra& g : simple_sweep) {
      const AlgebraSpec spec(g);
      const AlgebraSpec spec_complex = complexify_algebra(spec);
      const auto orbits = enumerate_orbits(spec);
      std::map<OrbitIndex, std::size_t, OrbitListingLess> fibre_sizes;
      for (const OrbitIndex& o : orbits) {
        const OrbitIndex theta = complexify_orbit(spec, o);
        if (!validate_orbit(spec_complex, theta))
          fail(g.to_string() + ": image leaves the complex index set");
        ++fibre_sizes[theta];
      }
      std::size_t total = 0;
      for (const auto& [theta, size] : fibre_sizes) total += size;
      if (total != orbits.size())
        fail(g.to_string() + ": fibres do not partition the index set");
      // spot-check the fibre operation against the grouped map
      if (g.defining_size() <= 6) {
        for (const OrbitIndex& theta : enumerate_orbits(spec_complex)) {
          const auto it = fibre_sizes.find(theta);
          const std::size_t expected = it == fibre_sizes.end() ? 0 : it->second;
          if (fibre(spec, theta).size() != expected)
            fail(g.to_string() + ": fibre() disagrees with grouping");
        }
      }
    }
  });

  runner.run("complexify/split-implies-surjective", [&](const Fail& fail) {
    const auto check_spec = [&](const AlgebraSpec& spec) {
      if (is_split(spec) && !is_surjective(spec).surjective)
        fail(spec.to_string() + ": split but not surjective");
    };
    for (const SimpleAlgebra& g : simple_sweep) check_spec(AlgebraSpec(g));
    for (const AlgebraSpec& g : sum_sweep) check_spec(g);
  });

  runner.run("complexify/theorem1-agreement", [&](const Fail& fail) {
    const auto check_spec = [&](const AlgebraSpec& spec) {
      if (is_surjective(spec).surjective != theorem1_predicate(spec))
        fail(spec.to_string() + ": enumeration disagrees with the predicate");
    };
    for (const SimpleAlgebra& g : simple_sweep) check_spec(AlgebraSpec(g));
    for (const AlgebraSpec& g : sum_sweep) check_spec(g);
  });

  runner.run("complexify/regular-in-image-iff-quasi-split", [&](const Fail& fail) {
    for (const SimpleAlgebra& g : simple_sweep) {
      if (regular_in_image(AlgebraSpec(g)) != is_quasi_split(g))
        fail(g.to_string() + ": regular orbit membership disagrees");
    }
  });

  runner.run("complexify/product-law-image", [&](const Fail& fail) {
    for (const AlgebraSpec& g : sum_sweep) {
      const AlgebraSpec left(g.summands()[0]);
      const AlgebraSpec right(g.summands()[1]);
      if (!(image(g) == detail::product_of(image(left), image(right))))
        fail(g.to_string() + ": image product law fails");
    }
  });

  runner.run("complexify/sigma-consistency", [&](const Fail& fail) {
    for (const SimpleAlgebra& g : simple_sweep) {
      const AlgebraSpec spec(g);
      const std::vector<OrbitIndex> img = image(spec);
      for (const OrbitIndex& theta : enumerate_orbits(complexify_algebra(spec))) {
        const SigmaStatus status = sigma_fixed(spec, theta, &img);
        const bool hit = contains_orbit(img, theta);
        if (is_quasi_split(g)) {
          if ((status == SigmaStatus::fixed) != hit || status == SigmaStatus::unknown)
            fail(g.to_string() + ": sigma status disagrees with image membership");
        } else {
          const bool unique = theta.simple().decoration() == Decoration::none;
          if (unique && status != SigmaStatus::fixed)
            fail(g.to_string() + ": uniquely-partitioned orbit not fixed");
          if (!unique && status != SigmaStatus::unknown)
            fail(g.to_string() + ": decorated orbit must be unknown here");
          if (hit && status != SigmaStatus::fixed)
            fail(g.to_string() + ": necessity direction violated");
        }
      }
    }
  });

  runner.run("poset/axioms-construction", [&](const Fail& fail) {
    for (int n = 2; n <= 10; ++n) {
      try {
        closure_order_sl(n);
      } catch (const std::exception& e) {
        fail("closure_order_sl(" + std::to_string(n) + "): " + e.what());
      }
    }
  });

  runner.run("poset/hasse-closure-roundtrip", [&](const Fail& fail) {
    for (int n = 2; n <= 10; ++n) {
      const FinitePoset poset = closure_order_sl(n);
      const int size = poset.size();
      std::vector<std::vector<bool>> closure(
          static_cast<std::size_t>(size), std::vector<bool>(static_cast<std::size_t>(size), false));
      for (int i = 0; i < size; ++i) closure[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
      for (const auto& [upper, lower] : poset.hasse())
        closure[static_cast<std::size_t>(lower)][static_cast<std::size_t>(upper)] = true;
      for (int k = 0; k < size; ++k) {
        for (int i = 0; i < size; ++i) {
          for (int j = 0; j < size; ++j) {
            const auto ii = static_cast<std::size_t>(i);
            const auto jj = static_cast<std::size_t>(j);
            const auto kk = static_cast<std::size_t>(k);
            if (closure[ii][kk] && closure[kk][jj]) closure[ii][jj] = true;
          }
        }
      }
      for (int i = 0; i < size; ++i) {
        for (int j = 0; j < size; ++j) {
          if (closure[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
              poset.leq(i, j))
            fail("n=" + std::to_string(n) + ": hasse closure differs from leq");
        }
      }
    }
  });

  runner.run("poset/unique-extremes", [&](const Fail& fail) {
    for (int n = 2; n <= 10; ++n) {
      const FinitePoset poset = closure_order_sl(n);
      int maxima = 0;
      int minima = 0;
      for (int i = 0; i < poset.size(); ++i) {
        bool is_max = true;
        bool is_min = true;
        for (int j = 0; j < poset.size(); ++j) {
          if (i == j) continue;
          if (poset.leq(i, j)) is_max = false;
          if (poset.leq(j, i)) is_min = false;
        }
        maxima += is_max;
        minima += is_min;
      }
      if (maxima != 1 || minima != 1)
        fail("n=" + std::to_string(n) + ": extremes are not unique");
      const Partition top(std::vector<int>{n});
      if (!(underlying_partition(poset.element(0)) == top))
        fail("n=" + std::to_string(n) + ": maximum is not (n)");
    }
  });

  DimensionCache cache;

  runner.run("oracle/sl-closed-form", [&](const Fail& fail) {
    for (int n = 2; n <= 7; ++n) {
      const SimpleAlgebra g = SimpleAlgebra::sl_complex_form(n);
      for (const Partition& lam : enumerate_partitions(n)) {
        const Partition transposed = lam.transposed();
        int closed_form = n * n;
        for (int col : transposed.parts()) closed_form -= col * col;
        if (orbit_partition_dimension(g, lam, &cache) != closed_form)
          fail("sl(" + std::to_string(n) + ",C) " + lam.to_string() +
               ": oracle disagrees with closed form");
      }
    }
  });

  runner.run("oracle/jordan-block-order-invariance", [&](const Fail& fail) {
    for (int n = 2; n <= 5; ++n) {
      for (const Partition& lam : enumerate_partitions(n)) {
        const CentralizerReport expected = centralizer_dimension(
            jordan_representative(lam), MatrixFamily::special_linear);
        std::vector<int> sizes = lam.parts();
        std::sort(sizes.begin(), sizes.end());
        do {
          const CentralizerReport got = centralizer_dimension(
              jordan_blocks_matrix(sizes), MatrixFamily::special_linear);
          if (!(got == expected))
            fail(lam.to_string() + ": block order changed the report");
        } while (std::next_permutation(sizes.begin(), sizes.end()));
      }
    }
  });

  runner.run("oracle/orthogonal-postconditions", [&](const Fail& fail) {
    for (int m = 3; m <= 10; ++m) {
      const SimpleAlgebra g = SimpleAlgebra::so_complex_form(m);
      const RationalMatrix j = orthogonal_form(m);
      for (const Partition& lam : enumerate_partitions(m)) {
        if (!detail::orthogonal_shape_valid(lam)) continue;
        const RationalMatrix x = orthogonal_representative(lam, m);
        if (!(x.transposed() * j + j * x).is_zero())
          fail("m=" + std::to_string(m) + " " + lam.to_string() + ": not in so(J)");
        RationalMatrix power = x;
        for (int k = 1; k <= lam.part(0); ++k) {
          int expected = 0;
          for (int p : lam.parts()) expected += std::max(p - k, 0);
          if (power.rank() != expected)
            fail("m=" + std::to_string(m) + " " + lam.to_string() + ": rank sequence");
          if (k < lam.part(0)) power = power * x;
        }
        if (orbit_partition_dimension(g, lam, &cache) % 2 != 0)
          fail("m=" + std::to_string(m) + " " + lam.to_string() + ": odd dimension");
      }
    }
  });

  runner.run("oracle/dominance-monotonicity", [&](const Fail& fail) {
    for (int n = 2; n <= 7; ++n) {
      const SimpleAlgebra g = SimpleAlgebra::sl_complex_form(n);
      for (const Partition& a : enumerate_partitions(n)) {
        for (const Partition& b : enumerate_partitions(n)) {
          if (a == b || !dominates(a, b)) continue;
          if (orbit_partition_dimension(g, a, &cache) <=
              orbit_partition_dimension(g, b, &cache))
            fail("sl(" + std::to_string(n) + ",C): dimension not strictly monotone");
        }
      }
    }
  });

  runner.run("oracle/sl-real-system-agreement", [&](const Fail& fail) {
    if (!config.family_sl_real) return;
    for (int n = 2; n <= config.max_n; ++n) {
      const AlgebraSpec g(SimpleAlgebra::sl_real_form(n));
      const SimpleAlgebra g_complex = SimpleAlgebra::sl_complex_form(n);
      for (const OrbitIndex& o : enumerate_orbits(g)) {
        // real_orbit_dimension re-solves the system as a real one internally
        // and throws on disagreement
        if (real_orbit_dimension(g, o, &cache) !=
            orbit_dimension(g_complex, complexify_orbit(g, o), &cache))
          fail("sl(" + std::to_string(n) + ",R): real dimension mismatch");
      }
    }
  });

  runner.run("oracle/fibre-equidimensionality", [&](const Fail& fail) {
    for (const SimpleAlgebra& g : simple_sweep) {
      const AlgebraSpec spec(g);
      std::map<OrbitIndex, std::vector<OrbitIndex>, OrbitListingLess> fibres;
      for (const OrbitIndex& o : enumerate_orbits(spec))
        fibres[complexify_orbit(spec, o)].push_back(o);
      static const std::vector<OrbitIndex> kEmpty;
      for (const OrbitIndex& theta : enumerate_orbits(complexify_algebra(spec))) {
        const auto it = fibres.find(theta);
        const std::vector<OrbitIndex>& members = it == fibres.end() ? kEmpty : it->second;
        const FibreDimensionReport report =
            verify_fibre_equidimensional(spec, theta, &cache, &members);
        if (!report.equidimensional)
          fail(g.to_string() + ": fibre over " + theta.to_string() +
               " is not equidimensional");
        if (report.fibre_size != static_cast<int>(members.size()))
          fail(g.to_string() + ": fibre size mismatch over " + theta.to_string());
      }
    }
  });

  return runner.results;
}

}  // namespace nilorb
