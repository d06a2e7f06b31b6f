#include <krv/charoracle.hpp>
#include <krv/sweep.hpp>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace krv;

namespace {

Int total_dimension(const CartanData& c, const std::map<Weight, Int>& decomposition) {
  Int s = 0;
  for (const auto& [lambda, mult] : decomposition) s += mult * weyl_dim(c, lambda);
  return s;
}

}  // namespace

TEST_CASE("irreducible characters") {
  const auto a1 = fx::algebra("A1");
  CHECK(irr_character(a1, Weight({2})) == CharacterMap{{Weight({-2}), 1}, {Weight({0}), 1}, {Weight({2}), 1}});

  const auto a2 = fx::algebra("A2");
  const auto adj = irr_character(a2, Weight({1, 1}));
  CHECK(adj.size() == 7);
  CHECK(adj.at(Weight({0, 0})) == 2);
  for (const auto& [w, m] : adj)
    if (w != Weight({0, 0})) CHECK(m == 1);
  const auto defining = irr_character(a2, Weight({1, 0}));
  CHECK(defining.size() == 3);
  for (const auto& [w, m] : defining) CHECK(m == 1);
}

TEST_CASE("characters are Weyl symmetric with the Weyl dimension as mass") {
  for (const char* label : {"A2", "A3", "B2", "C3", "G2", "D4", "B3"}) {
    const auto c = fx::algebra(label);
    for (int a = 0; a < c.rank(); ++a) {
      auto lambda = Weight::zero(c.rank());
      lambda[a] = 1;
      lambda[0] += 1;
      CAPTURE(label);
      CAPTURE(lambda.to_string());
      const auto chi = irr_character(c, lambda);
      CHECK(is_weyl_symmetric(c, chi));
      CHECK(character_mass(chi) == weyl_dim(c, lambda));
    }
  }
}

TEST_CASE("reflections and orbits") {
  const auto a2 = fx::algebra("A2");
  CHECK(simple_reflection(a2, Weight({1, 0}), 0) == Weight({-1, 1}));
  CHECK(dominant_representative(a2, Weight({-1, 1})) == Weight({1, 0}));
  CHECK(weyl_orbit(a2, Weight({1, 1})).size() == 6);
  CHECK(weyl_orbit(fx::algebra("B2"), Weight({1, 1})).size() == 8);
  CHECK(weyl_orbit(fx::algebra("G2"), Weight({1, 1})).size() == 12);
  CHECK(weyl_orbit(fx::algebra("G2"), Weight({0, 0})).size() == 1);
}

TEST_CASE("tensor product decompositions") {
  const auto a1 = fx::algebra("A1");
  CHECK(tensor_decompose(a1, {Weight({1}), Weight({1})}) == std::map<Weight, Int>{{Weight({0}), 1}, {Weight({2}), 1}});
  CHECK(tensor_decompose(a1, std::vector<Weight>(4, Weight({1}))) ==
        std::map<Weight, Int>{{Weight({0}), 2}, {Weight({2}), 3}, {Weight({4}), 1}});
  const auto a2 = fx::algebra("A2");
  CHECK(tensor_decompose(a2, {Weight({1, 0}), Weight({0, 1})}) ==
        std::map<Weight, Int>{{Weight({0, 0}), 1}, {Weight({1, 1}), 1}});

  SUBCASE("dimensions add up in every family") {
    for (const char* label : {"B2", "C2", "G2", "A3", "D4"}) {
      const auto c = fx::algebra(label);
      std::vector<Weight> factors;
      for (int a = 0; a < c.rank(); ++a) {
        auto w = Weight::zero(c.rank());
        w[a] = 1;
        factors.push_back(w);
      }
      Int product = 1;
      for (const auto& f : factors) product *= weyl_dim(c, f);
      CAPTURE(label);
      CHECK(total_dimension(c, tensor_decompose(c, factors)) == product);
    }
  }

  SUBCASE("G2 7 x 7 = 1 + 7 + 14 + 27") {
    const auto g2 = fx::algebra("G2");
    const auto d = tensor_decompose(g2, {Weight({0, 1}), Weight({0, 1})});
    CHECK(d == std::map<Weight, Int>{{Weight({0, 0}), 1}, {Weight({0, 1}), 1}, {Weight({1, 0}), 1}, {Weight({0, 2}), 1}});
  }
}

TEST_CASE("KR multiplicities in type A") {
  const auto a1 = fx::algebra("A1");
  const auto a2 = fx::algebra("A2");
  CHECK(kr_tensor_multiplicity_typeA(a1, fx::mult(a1, "1:1=4"), Weight({0})) == 2);
  CHECK(kr_tensor_multiplicity_typeA(a2, fx::mult(a2, "1:1=3"), Weight({0, 0})) == 1);
  CHECK(kr_tensor_multiplicity_typeA(a1, fx::mult(a1, "1:2=1"), Weight({2})) == 1);
  CHECK(kr_factors_typeA(a2, fx::mult(a2, "1:2=1;2:1=2")) == std::vector<Weight>{Weight({2, 0}), Weight({0, 1}), Weight({0, 1})});
  CHECK_THROWS(kr_tensor_multiplicity_typeA(fx::algebra("B2"), KrMultiplicities(2), Weight({0, 0})));

  SUBCASE("agrees with semistandard tableaux and the Weyl alternation") {
    for (const char* label : {"A1", "A2", "A3"}) {
      const auto c = fx::algebra(label);
      const int load = c.rank() == 1 ? 7 : c.rank() == 2 ? 5 : 4;
      for (const auto& n : multiplicities_up_to_load(c.rank(), load)) {
        const auto dec = kr_tensor_decomposition_typeA(c, n);
        for (const auto& lambda : reachable_weights(c, n)) {
          CAPTURE(n.to_string());
          CAPTURE(lambda.to_string());
          const auto it = dec.find(lambda);
          const Int ours = it == dec.end() ? Int(0) : it->second;
          CHECK(ours == oracle::rectangle_tensor_multiplicity(c.rank(), fx::factor_list(n), lambda.coeffs));
        }
      }
    }
  }
}

TEST_CASE("cost guards") {
  const auto a3 = fx::algebra("A3");
  OracleLimits tight;
  tight.max_support = 10;
  CHECK_THROWS_AS(irr_character(a3, Weight({3, 3, 3}), tight), CostGuardExceeded);
  OracleLimits low_rank;
  low_rank.max_rank = 2;
  CHECK_THROWS_AS(irr_character(a3, Weight({1, 0, 0}), low_rank), CostGuardExceeded);
}
