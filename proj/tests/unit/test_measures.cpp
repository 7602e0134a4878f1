#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "gaw/measures.hpp"
#include "gaw/rng.hpp"

using namespace gaw;
using measures::Distribution;

namespace {

// independent summation oracle for entropy values asserted below
double entropy_oracle(const Distribution& p) {
  double h = 0.0;
  for (double pi : p)
    if (pi > 0.0) h -= pi * std::log2(pi);
  return h;
}

} // namespace

TEST_CASE("entropy of the symmetric two-symbol case is exactly 1 bit") {
  CHECK(measures::entropy({0.5, 0.5}) == 1.0);
}

TEST_CASE("entropy of certainty is 0") {
  CHECK(measures::entropy({1.0}) == 0.0);
  CHECK(measures::entropy({0.0, 1.0, 0.0}) == 0.0);
}

TEST_CASE("entropy of [0.5, 0.25, 0.25] matches the summation oracle (1.5 bits)") {
  const Distribution p{0.5, 0.25, 0.25};
  const double expected = entropy_oracle(p);
  CHECK(expected == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(measures::entropy(p) == doctest::Approx(expected).epsilon(1e-15));
}

TEST_CASE("invalid distributions are rejected") {
  CHECK_THROWS_AS(measures::entropy({0.5, 0.6}), Error);      // sums to 1.1
  CHECK_THROWS_AS(measures::entropy({-0.1, 1.1}), Error);     // negative entry
  CHECK_THROWS_AS(measures::entropy({}), Error);              // empty
}

TEST_CASE("redundancy extremes: uniform is chaos, degenerate is order") {
  CHECK(measures::redundancy({0.25, 0.25, 0.25, 0.25}) == 0.0);
  CHECK(measures::redundancy({1.0, 0.0, 0.0, 0.0}) == 1.0);
}

TEST_CASE("redundancy of [0.5, 0.25, 0.25] by direct evaluation") {
  const double expected = 1.0 - 1.5 / std::log2(3.0);
  CHECK(measures::redundancy({0.5, 0.25, 0.25}) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(expected == doctest::Approx(0.0536).epsilon(1e-2));
}

TEST_CASE("redundancy needs at least two symbols") {
  CHECK_THROWS_AS(measures::redundancy({1.0}), Error);
}

TEST_CASE("entropy and redundancy are permutation invariant") {
  rng::State rng = rng::seeded(2024);
  for (int trial = 0; trial < 50; ++trial) {
    Distribution p(5);
    double sum = 0.0;
    for (double& v : p) sum += (v = rng::next_unit(rng) + 1e-6);
    for (double& v : p) v /= sum;
    Distribution q = p;
    std::sort(q.begin(), q.end());
    CHECK(measures::entropy(p) == doctest::Approx(measures::entropy(q)).epsilon(1e-12));
    CHECK(measures::redundancy(p) == doctest::Approx(measures::redundancy(q)).epsilon(1e-12));
  }
}

TEST_CASE("grid symbol distribution counts cells") {
  measures::SymbolGrid g{2, 2, 2, {0, 0, 1, 1}};
  CHECK(measures::symbol_distribution(g) == Distribution{0.5, 0.5});

  measures::SymbolGrid g2{3, 1, 3, {2, 2, 2}};
  CHECK(measures::symbol_distribution(g2) == Distribution{0.0, 0.0, 1.0});
}

TEST_CASE("grid distribution matches a histogram oracle on a 4x4 grid") {
  // counts {0: 8, 1: 4, 2: 4}
  measures::SymbolGrid g{4, 4, 3, {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2}};
  std::vector<int> counts(3, 0);
  for (int c : g.cells) ++counts[static_cast<size_t>(c)];
  Distribution expected(3);
  for (size_t i = 0; i < 3; ++i) expected[i] = counts[i] / 16.0;
  CHECK(measures::symbol_distribution(g) == expected);
  CHECK(expected == Distribution{0.5, 0.25, 0.25});
}

TEST_CASE("grid validation rejects malformed grids") {
  CHECK_THROWS_AS(measures::symbol_distribution(measures::SymbolGrid{0, 0, 1, {}}), Error);
  CHECK_THROWS_AS(measures::validate_grid(measures::SymbolGrid{2, 2, 2, {0, 1, 2, 0}}), Error);
  CHECK_THROWS_AS(measures::validate_grid(measures::SymbolGrid{2, 2, 2, {0, 1}}), Error);
}

TEST_CASE("block entropy of a constant grid is 0") {
  measures::SymbolGrid g{4, 4, 2, std::vector<int>(16, 0)};
  CHECK(measures::block_entropy(g, 2, 2) == 0.0);
}

TEST_CASE("block entropy of a period-2 checkerboard with 2x2 blocks is 0") {
  // enumerate the four tiles by hand: all equal [0,1;1,0]
  measures::SymbolGrid g{4, 4, 2, {}};
  g.cells.resize(16);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) g.cells[static_cast<size_t>(r) * 4 + c] = (r + c) % 2;
  CHECK(measures::block_entropy(g, 2, 2) == 0.0);
}

TEST_CASE("1x1 block entropy equals plain symbol entropy") {
  measures::SymbolGrid g{2, 2, 4, {0, 1, 2, 3}};
  CHECK(measures::block_entropy(g, 1, 1) == 2.0);
  CHECK(measures::block_entropy(g, 1, 1) ==
        measures::entropy(measures::symbol_distribution(g)));
}

TEST_CASE("1x1 block entropy equals symbol entropy on a random grid") {
  rng::State rng = rng::seeded(99);
  measures::SymbolGrid g{8, 6, 3, {}};
  for (int i = 0; i < 48; ++i)
    g.cells.push_back(static_cast<int>(rng::next_int(rng, 0, 2)));
  CHECK(measures::block_entropy(g, 1, 1) ==
        doctest::Approx(measures::entropy(measures::symbol_distribution(g))).epsilon(1e-12));
}

TEST_CASE("entropy is invariant under spatial shuffles of the grid") {
  rng::State rng = rng::seeded(5);
  measures::SymbolGrid g{6, 6, 4, {}};
  for (int i = 0; i < 36; ++i)
    g.cells.push_back(static_cast<int>(rng::next_int(rng, 0, 3)));
  measures::SymbolGrid shuffled = g;
  // deterministic Fisher-Yates with our own rng
  for (size_t i = shuffled.cells.size(); i > 1; --i)
    std::swap(shuffled.cells[i - 1],
              shuffled.cells[static_cast<size_t>(rng::next_int(rng, 0, static_cast<std::int64_t>(i) - 1))]);
  CHECK(measures::entropy(measures::symbol_distribution(g)) ==
        doctest::Approx(measures::entropy(measures::symbol_distribution(shuffled))).epsilon(1e-12));
}

TEST_CASE("non-dividing block dims raise a tiling error") {
  measures::SymbolGrid g{4, 4, 2, std::vector<int>(16, 0)};
  CHECK_THROWS_AS(measures::block_entropy(g, 3, 2), Error);
}

TEST_CASE("semantic space of 3 properties has Q = 8") {
  const auto space = measures::enumerate_semantic_space(
      {{"red", "blue"}, {"sweet", "bitter"}, {"attainable", "unattainable"}});
  CHECK(space.q == 8);
  CHECK(space.conjunctions.size() == 8);
  CHECK(space.conjunctions.front() == "red and sweet and attainable");
  CHECK(space.conjunctions.back() == "blue and bitter and unattainable");
  // lexicographic order of (term=0, antonym=1) patterns
  CHECK(space.conjunctions[1] == "red and sweet and unattainable");
}

TEST_CASE("semantic space of 0 properties is the single empty conjunction") {
  const auto space = measures::enumerate_semantic_space({});
  CHECK(space.q == 1);
  REQUIRE(space.conjunctions.size() == 1);
  CHECK(space.conjunctions[0].empty());
}

TEST_CASE("semantic space of 4 properties: 16 distinct entries, one literal per property") {
  const auto space = measures::enumerate_semantic_space(
      {{"a", "A"}, {"b", "B"}, {"c", "C"}, {"d", "D"}});
  CHECK(space.q == 16);
  std::set<std::string> distinct(space.conjunctions.begin(), space.conjunctions.end());
  CHECK(distinct.size() == 16);
  // brute-force: every entry contributes exactly one literal per property
  for (const std::string& conj : space.conjunctions) {
    int literals = 1;
    for (size_t i = 0; (i = conj.find(" and ", i)) != std::string::npos; i += 5) ++literals;
    CHECK(literals == 4);
  }
}

TEST_CASE("semantic space enumeration bound is enforced") {
  std::vector<measures::PropertyPair> props(21, {"x", "y"});
  CHECK_THROWS_AS(measures::enumerate_semantic_space(props), Error);
}

TEST_CASE("measure report lists H, Hmax, R and dividing block entropies") {
  measures::SymbolGrid g{4, 4, 2, std::vector<int>(16, 0)};
  const std::string report = measures::report_csv(g, {1, 2, 3, 4});
  CHECK(report.find("metric,value\n") == 0);
  CHECK(report.find("h_bits,0.000000000") != std::string::npos);
  CHECK(report.find("redundancy,1.000000000") != std::string::npos);
  CHECK(report.find("block_h_2x2_bits,") != std::string::npos);
  CHECK(report.find("block_h_3x3_bits,") == std::string::npos); // 3 does not divide 4
}
