#include "nilorb/reference.hpp"
#include "nilorb/signed_diagram.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace nilorb;

namespace {

SignedYoungDiagram Y(std::vector<int> shape, const std::string& starts) {
  std::vector<Sign> signs;
  for (char c : starts) signs.push_back(c == '+' ? Sign::plus : Sign::minus);
  return SignedYoungDiagram(Partition(std::move(shape)), signs);
}

}  // namespace

TEST_CASE("signature_of fixtures") {
  // "+-+" gives 2 plus / 1 minus, "+" gives 1 plus
  CHECK(Y({3, 1}, "++").signature() == Signature{3, 1});
  CHECK(Y({2, 2}, "++").signature() == Signature{2, 2});
  CHECK(Y({1, 1}, "+-").signature() == Signature{1, 1});
}

TEST_CASE("row_sign_counts fixtures") {
  CHECK(SignedRow{3, Sign::plus}.plus_count() == 2);
  CHECK(SignedRow{3, Sign::plus}.minus_count() == 1);
  CHECK(SignedRow{1, Sign::minus}.plus_count() == 0);
  CHECK(SignedRow{1, Sign::minus}.minus_count() == 1);
  CHECK(Y({3, 1}, "++").row_sign_counts() ==
        std::vector<std::pair<int, int>>{{2, 1}, {1, 0}});
  CHECK(SignedRow{3, Sign::plus}.expanded() == "+-+");
  CHECK(SignedRow{1, Sign::minus}.expanded() == "-");
}

TEST_CASE("diagram equality ignores row order among equal lengths") {
  CHECK(Y({1, 1}, "+-") == Y({1, 1}, "-+"));
  CHECK(Y({2, 2, 1}, "+-+") == Y({2, 2, 1}, "-++"));
  CHECK_FALSE(Y({2}, "+") == Y({2}, "-"));
}

TEST_CASE("constructor rejects mismatched start signs") {
  CHECK_THROWS_AS(SignedYoungDiagram(Partition({2, 1}), {Sign::plus}),
                  std::invalid_argument);
  CHECK_THROWS_AS(SignedYoungDiagram({SignedRow{0, Sign::plus}}),
                  std::invalid_argument);
}

TEST_CASE("enumerate_signed_fillings fixtures") {
  // exhaustive 2-case check
  const auto two = enumerate_signed_fillings(Partition({2}), {1, 1});
  REQUIRE(two.size() == 2);
  CHECK(two[0] == Y({2}, "+"));
  CHECK(two[1] == Y({2}, "-"));
  // multiset dedup of single-box rows
  CHECK(enumerate_signed_fillings(Partition({1, 1, 1, 1}), {2, 2}).size() == 1);
  // parity obstruction: even rows force signature (2,2)
  CHECK(enumerate_signed_fillings(Partition({2, 2}), {3, 1}).empty());
  CHECK_THROWS_AS(enumerate_signed_fillings(Partition({2}), {2, 1}),
                  std::invalid_argument);
}

TEST_CASE("fillings round-trip and match the raw reference enumeration") {
  for (int n = 1; n <= 9; ++n) {
    const auto reference_buckets = reference::fillings_by_plus(n);
    for (const Partition& lam : enumerate_partitions(n)) {
      const auto& buckets = reference_buckets.at(lam.parts());
      std::int64_t across = 0;
      for (int p = 0; p <= n; ++p) {
        const Signature sig{p, n - p};
        const auto fillings = enumerate_signed_fillings(lam, sig);
        for (const SignedYoungDiagram& y : fillings) {
          CHECK(y.shape() == lam);
          CHECK(y.signature() == sig);
        }
        for (std::size_t i = 0; i + 1 < fillings.size(); ++i)
          CHECK(diagram_listing_less(fillings[i], fillings[i + 1]));
        const auto it = buckets.find(p);
        const std::int64_t expected = it == buckets.end() ? 0 : it->second;
        CHECK(static_cast<std::int64_t>(fillings.size()) == expected);
        across += static_cast<std::int64_t>(fillings.size());
      }
      std::int64_t raw_total = 0;
      for (const auto& [plus, count] : buckets) raw_total += count;
      CHECK(across == raw_total);
    }
  }
}

TEST_CASE("row permutations leave the diagram unchanged") {
  const SignedYoungDiagram y = Y({3, 2, 2, 1, 1}, "+-+-+");
  std::vector<SignedRow> rows = y.rows();
  std::sort(rows.begin(), rows.end(), [](const SignedRow& a, const SignedRow& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.start == Sign::minus && b.start == Sign::plus;
  });
  CHECK(SignedYoungDiagram(rows) == y);
  std::rotate(rows.begin(), rows.begin() + 2, rows.end());
  CHECK(SignedYoungDiagram(rows) == y);
}
