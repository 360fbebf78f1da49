#include "nilorb/oracle.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace nilorb;

namespace {

SimpleOrbit PO(std::vector<int> parts, Decoration dec = Decoration::none) {
  return SimpleOrbit(Partition(std::move(parts)), dec);
}

int closed_form_sl_dimension(int n, const Partition& lam) {
  const Partition transposed = lam.transposed();
  int dim = n * n;
  for (int col : transposed.parts()) dim -= col * col;
  return dim;
}

}  // namespace

TEST_CASE("jordan representatives") {
  const RationalMatrix two = jordan_representative(Partition({2}));
  CHECK(two.rows() == 2);
  CHECK(two.at(0, 1) == 1);
  CHECK(two.at(1, 0) == 0);
  CHECK(jordan_representative(Partition({1, 1, 1})).is_zero());
  const RationalMatrix mixed = jordan_representative(Partition({2, 1}));
  CHECK(mixed.rank() == 1);
  CHECK((mixed * mixed).rank() == 0);
  CHECK(mixed.trace() == 0);
  CHECK_THROWS_AS(jordan_representative(Partition({})), std::invalid_argument);
}

TEST_CASE("rational matrix basics") {
  RationalMatrix m(2, 2);
  m.at(0, 0) = Rational(1, 2);
  m.at(0, 1) = 1;
  m.at(1, 1) = 2;
  CHECK(m.rank() == 2);
  const RationalMatrix inv = m.inverse();
  CHECK(m * inv == RationalMatrix::identity(2));
  CHECK(nullity(m) == 0);
  RationalMatrix singular(2, 2);
  singular.at(0, 0) = 1;
  singular.at(1, 0) = 1;
  CHECK(singular.rank() == 1);
  CHECK_THROWS_AS(singular.inverse(), std::invalid_argument);
  CHECK(commutator(m, RationalMatrix::identity(2)).is_zero());
  CHECK(m.to_string() == "1/2 1\n0 2\n");
}

TEST_CASE("orthogonal representatives satisfy their postconditions") {
  CHECK(orthogonal_representative(Partition({1, 1, 1}), 3).is_zero());

  const RationalMatrix j4 = orthogonal_form(4);
  const RationalMatrix x31 = orthogonal_representative(Partition({3, 1}), 4);
  CHECK((x31.transposed() * j4 + j4 * x31).is_zero());
  CHECK(x31.rank() == 2);
  CHECK((x31 * x31).rank() == 1);
  CHECK((x31 * x31 * x31).is_zero());

  const RationalMatrix x22 = orthogonal_representative(Partition({2, 2}), 4);
  CHECK((x22.transposed() * j4 + j4 * x22).is_zero());
  CHECK(x22.rank() == 2);
  CHECK((x22 * x22).is_zero());

  CHECK_THROWS_AS(orthogonal_representative(Partition({2, 1, 1}), 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(orthogonal_representative(Partition({3, 1}), 5),
                  std::invalid_argument);
}

TEST_CASE("orthogonal representatives across all valid shapes up to m=9") {
  for (int m = 3; m <= 9; ++m) {
    const RationalMatrix j = orthogonal_form(m);
    for (const Partition& lam : enumerate_partitions(m)) {
      if (!detail::orthogonal_shape_valid(lam)) continue;
      const RationalMatrix x = orthogonal_representative(lam, m);
      CHECK((x.transposed() * j + j * x).is_zero());
      RationalMatrix power = x;
      for (int k = 1; k <= lam.part(0); ++k) {
        int expected = 0;
        for (int p : lam.parts()) expected += std::max(p - k, 0);
        CHECK(power.rank() == expected);
        if (k < lam.part(0)) power = power * x;
      }
    }
  }
}

TEST_CASE("centralizer dimension fixtures") {
  const CentralizerReport sl2 = centralizer_dimension(
      jordan_representative(Partition({2})), MatrixFamily::special_linear);
  CHECK(sl2 == CentralizerReport{3, 1, 2});

  const CentralizerReport sl3 = centralizer_dimension(
      jordan_representative(Partition({3})), MatrixFamily::special_linear);
  CHECK(sl3 == CentralizerReport{8, 2, 6});

  const CentralizerReport so4 = centralizer_dimension(
      orthogonal_representative(Partition({3, 1}), 4), MatrixFamily::special_orthogonal);
  CHECK(so4.algebra_dim == 6);
  CHECK(so4.orbit_dim == 4);

  RationalMatrix not_traceless = RationalMatrix::identity(2);
  CHECK_THROWS_AS(centralizer_dimension(not_traceless, MatrixFamily::special_linear),
                  std::invalid_argument);
  RationalMatrix not_orthogonal(2, 2);
  not_orthogonal.at(0, 1) = 1;
  CHECK_THROWS_AS(
      centralizer_dimension(not_orthogonal, MatrixFamily::special_orthogonal),
      std::invalid_argument);
}

TEST_CASE("closed form validated by hand cases before the mass cross-check") {
  // hand-checkable values for n <= 4
  const std::vector<std::pair<std::vector<int>, int>> hand = {
      {{2}, 2},       {{1, 1}, 0},    {{3}, 6},          {{2, 1}, 4},
      {{1, 1, 1}, 0}, {{4}, 12},      {{3, 1}, 10},      {{2, 2}, 8},
      {{2, 1, 1}, 6}, {{1, 1, 1, 1}, 0}};
  for (const auto& [parts, expected] : hand) {
    const Partition lam(parts);
    const int n = lam.total();
    CHECK(closed_form_sl_dimension(n, lam) == expected);
    CHECK(orbit_partition_dimension(SimpleAlgebra::sl_complex_form(n), lam) ==
          expected);
  }
  // mass cross-check n <= 7
  DimensionCache cache;
  for (int n = 2; n <= 7; ++n) {
    const SimpleAlgebra g = SimpleAlgebra::sl_complex_form(n);
    for (const Partition& lam : enumerate_partitions(n)) {
      CHECK(orbit_partition_dimension(g, lam, &cache) ==
            closed_form_sl_dimension(n, lam));
    }
  }
}

TEST_CASE("jordan block order does not change the report") {
  DimensionCache cache;
  for (int n = 2; n <= 5; ++n) {
    for (const Partition& lam : enumerate_partitions(n)) {
      const CentralizerReport expected = centralizer_dimension(
          jordan_representative(lam), MatrixFamily::special_linear);
      std::vector<int> sizes = lam.parts();
      std::sort(sizes.begin(), sizes.end());
      do {
        CHECK(centralizer_dimension(jordan_blocks_matrix(sizes),
                                    MatrixFamily::special_linear) == expected);
      } while (std::next_permutation(sizes.begin(), sizes.end()));
    }
  }
}

TEST_CASE("orbit_dimension fixtures") {
  CHECK(orbit_dimension(SimpleAlgebra::sl_complex_form(4), OrbitIndex(PO({2, 1, 1}))) == 6);
  CHECK(orbit_dimension(SimpleAlgebra::so_complex_form(4),
                        OrbitIndex(PO({2, 2}, Decoration::plus))) == 2);
  CHECK(orbit_dimension(SimpleAlgebra::so_complex_form(4),
                        OrbitIndex(PO({2, 2}, Decoration::minus))) == 2);
  CHECK(orbit_dimension(SimpleAlgebra::sl_complex_form(4),
                        OrbitIndex(PO({1, 1, 1, 1}))) == 0);
  CHECK(orbit_dimension(SimpleAlgebra::so_complex_form(5),
                        OrbitIndex(PO({1, 1, 1, 1, 1}))) == 0);
  CHECK_THROWS_AS(
      orbit_dimension(SimpleAlgebra::so_complex_form(4), OrbitIndex(PO({2, 2}))),
      std::invalid_argument);
}

TEST_CASE("real orbit dimensions flow through the complexification") {
  const AlgebraSpec sl2r = parse_algebra("sl(2,R)");
  CHECK(real_orbit_dimension(sl2r, OrbitIndex(PO({2}, Decoration::plus))) == 2);
  CHECK(real_orbit_dimension(sl2r, OrbitIndex(PO({2}, Decoration::minus))) == 2);

  const AlgebraSpec so31 = parse_algebra("so(3,1)");
  const OrbitIndex top = enumerate_orbits(so31).front();
  CHECK(underlying_partition(top) == Partition({3, 1}));
  CHECK(real_orbit_dimension(so31, top) == 4);

  CHECK_THROWS_AS(real_orbit_dimension(parse_algebra("sl(2,C)"), OrbitIndex(PO({2}))),
                  std::invalid_argument);
}

TEST_CASE("fibre equidimensionality reports") {
  DimensionCache cache;
  const auto sl2r = parse_algebra("sl(2,R)");
  const FibreDimensionReport two =
      verify_fibre_equidimensional(sl2r, OrbitIndex(PO({2})), &cache);
  CHECK(two.fibre_size == 2);
  CHECK(two.common_dim == 2);
  CHECK(two.equidimensional);

  const FibreDimensionReport su22 = verify_fibre_equidimensional(
      parse_algebra("su(2,2)"), OrbitIndex(PO({2, 2})), &cache);
  CHECK(su22.fibre_size == 3);
  CHECK(su22.common_dim == 8);
  CHECK(su22.equidimensional);

  const FibreDimensionReport vacuous = verify_fibre_equidimensional(
      parse_algebra("so(3,1)"), OrbitIndex(PO({2, 2}, Decoration::plus)), &cache);
  CHECK(vacuous.fibre_size == 0);
  CHECK(vacuous.common_dim == -1);
  CHECK(vacuous.equidimensional);
}
