#include <krv/liealg.hpp>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

using namespace krv;

namespace {

const char* const kAllAlgebras[] = {"A1", "A2", "A3", "A5", "B2", "B3", "B5", "C2", "C3", "C4",
                                    "D4", "D5", "D6", "E6", "E7", "E8", "F4", "G2"};

}  // namespace

TEST_CASE("standard small Cartan matrices") {
  CHECK(cartan_matrix(Family::A, 1) == IntMatrix{{2}});
  CHECK(cartan_matrix(Family::A, 2) == IntMatrix{{2, -1}, {-1, 2}});
  CHECK(cartan_matrix(Family::G, 2) == IntMatrix{{2, -1}, {-3, 2}});
  CHECK(cartan_matrix(Family::B, 2) == IntMatrix{{2, -1}, {-2, 2}});
  CHECK(cartan_matrix(Family::C, 2) == IntMatrix{{2, -2}, {-1, 2}});
}

TEST_CASE("Cartan matrices are symmetrizable with the right shape") {
  for (const char* label : kAllAlgebras) {
    CAPTURE(label);
    const auto c = fx::algebra(label);
    const auto& d = c.symmetrizer();
    REQUIRE(static_cast<int>(d.size()) == c.rank());
    for (int a = 0; a < c.rank(); ++a) {
      CHECK(c(a, a) == 2);
      CHECK(d[a] > 0);
      for (int b = 0; b < c.rank(); ++b) {
        if (a == b) continue;
        CHECK(c(a, b) <= 0);
        CHECK(c(a, b) >= -3);
        CHECK((c(a, b) == 0) == (c(b, a) == 0));
        CHECK(d[a] * c(a, b) == d[b] * c(b, a));
      }
    }
  }
}

TEST_CASE("determinants and positive root counts") {
  struct Row {
    const char* label;
    long det;
    std::size_t roots;
  };
  const Row rows[] = {{"A1", 2, 1},   {"A3", 4, 6},   {"A5", 6, 15},  {"B3", 2, 9},   {"C4", 2, 16},
                      {"D4", 4, 12},  {"D5", 4, 20},  {"E6", 3, 36},  {"E7", 2, 63},  {"E8", 1, 120},
                      {"F4", 1, 24},  {"G2", 1, 6}};
  for (const auto& r : rows) {
    CAPTURE(r.label);
    const auto c = fx::algebra(r.label);
    CHECK(c.determinant() == r.det);
    CHECK(c.positive_roots().size() == r.roots);
  }
}

TEST_CASE("adjugate inverts the Cartan matrix") {
  for (const char* label : kAllAlgebras) {
    CAPTURE(label);
    const auto c = fx::algebra(label);
    for (int a = 0; a < c.rank(); ++a)
      for (int b = 0; b < c.rank(); ++b) {
        long s = 0;
        for (int k = 0; k < c.rank(); ++k) s += c(a, k) * c.adjugate(k, b);
        CHECK(s == (a == b ? c.determinant() : 0));
      }
  }
}

TEST_CASE("labels parse and round-trip") {
  CHECK(fx::algebra("a3").name() == "A3");
  CHECK(fx::algebra("E8").rank() == 8);
  CHECK_THROWS_AS(CartanData::parse("H3"), std::invalid_argument);
  CHECK_THROWS_AS(CartanData::parse("A"), std::invalid_argument);
  CHECK_THROWS(CartanData::parse("E9"));
  CHECK_THROWS(CartanData::parse("D3"));
  CHECK_THROWS(CartanData::parse("G3"));
}

TEST_CASE("B-matrix entries") {
  const auto a1 = fx::algebra("A1");
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) CHECK(b_entry(a1, 0, 0, i, j) == 2 * std::min(i, j));
  const auto a2 = fx::algebra("A2");
  CHECK(b_entry(a2, 0, 1, 3, 2) == -2);
  const auto a3 = fx::algebra("A3");
  CHECK(b_entry(a3, 0, 2, 4, 7) == 0);
}

TEST_CASE("B-matrix symmetry B^{ab}_{ij} = B^{ba}_{ji}") {
  for (const char* label : {"B3", "C3", "F4", "G2", "D4"}) {
    CAPTURE(label);
    const auto c = fx::algebra(label);
    for (int a = 0; a < c.rank(); ++a)
      for (int b = 0; b < c.rank(); ++b)
        for (int i = 1; i <= 4; ++i)
          for (int j = 1; j <= 4; ++j) CHECK(b_entry(c, a, b, i, j) == b_entry(c, b, a, j, i));
  }
}

TEST_CASE("Weyl dimension formula") {
  const auto a1 = fx::algebra("A1");
  for (int m = 0; m <= 9; ++m) CHECK(weyl_dim(a1, Weight({m})) == m + 1);
  const auto a2 = fx::algebra("A2");
  CHECK(weyl_dim(a2, Weight({1, 0})) == 3);
  CHECK(weyl_dim(a2, Weight({1, 1})) == 8);

  SUBCASE("fundamental dimensions of the exceptional and BC families") {
    auto fundamental = [](const char* label) {
      const auto c = fx::algebra(label);
      std::vector<Int> out;
      for (int a = 0; a < c.rank(); ++a) {
        auto w = Weight::zero(c.rank());
        w[a] = 1;
        out.push_back(weyl_dim(c, w));
      }
      return out;
    };
    CHECK(fundamental("G2") == std::vector<Int>{14, 7});
    CHECK(fundamental("F4") == std::vector<Int>{52, 1274, 273, 26});
    CHECK(fundamental("E6") == std::vector<Int>{27, 78, 351, 2925, 351, 27});
    CHECK(fundamental("E7").back() == 56);
    CHECK(fundamental("E8").back() == 248);
    CHECK(fundamental("B3") == std::vector<Int>{7, 21, 8});
    CHECK(fundamental("C3") == std::vector<Int>{6, 14, 14});
    CHECK(fundamental("D4") == std::vector<Int>{8, 28, 8, 8});
  }

  SUBCASE("type A agrees with the hook-content formula") {
    for (int r = 1; r <= 4; ++r) {
      const CartanData c(Family::A, r);
      std::vector<int> l(static_cast<std::size_t>(r), 0);
      while (true) {
        CAPTURE(Weight(l).to_string());
        CHECK(weyl_dim(c, Weight(l)) == oracle::hook_content_dim(oracle::partition_of(l), r + 1));
        std::size_t i = 0;
        for (; i < l.size(); ++i) {
          if (l[i] < 3) {
            ++l[i];
            break;
          }
          l[i] = 0;
        }
        if (i == l.size()) break;
      }
    }
  }
}

TEST_CASE("weights parse with rank checks") {
  const auto a2 = fx::algebra("A2");
  CHECK(fx::weight(a2, "1, 2") == Weight({1, 2}));
  CHECK(Weight({3, 0}).is_dominant());
  CHECK_FALSE(Weight({3, -1}).is_dominant());
  CHECK_THROWS_AS(Weight::parse("1", 2), std::invalid_argument);
  CHECK_THROWS_AS(Weight::parse("1,x", 2), std::invalid_argument);
}
