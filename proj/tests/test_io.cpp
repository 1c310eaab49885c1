#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lsa/io.hpp"
#include "support/gen.hpp"

using namespace lsa;

TEST_CASE("algebra json round trip is exact") {
  testgen::Rng rng(41);
  for (int rep = 0; rep < 30; ++rep) {
    int n = 2 + rep % 4;
    Algebra a = testgen::random_algebra(rng, n);
    CHECK(algebra_from_json(algebra_to_json(a)) == a);
  }
}

TEST_CASE("algebra reader rejects bad structure lists") {
  Json good = {{"dim", 2},
               {"structure", Json::array({Json::array({1, 1, 1, "2"})})}};
  CHECK(algebra_from_json(good).c(0, 0, 0) == Scalar(2));
  Json dup = good;
  dup["structure"].push_back(Json::array({1, 1, 1, "1/2"}));
  CHECK_THROWS_WITH_AS(algebra_from_json(dup),
                       "algebra: duplicate (i,j,k) entry", std::invalid_argument);
  Json range = good;
  range["structure"].push_back(Json::array({1, 3, 1, "1"}));
  CHECK_THROWS_WITH_AS(algebra_from_json(range), "algebra: index out of range",
                       std::invalid_argument);
  Json zero_dim = {{"dim", 0}, {"structure", Json::array()}};
  CHECK_THROWS(algebra_from_json(zero_dim));
}

TEST_CASE("scalar json forms") {
  CHECK(scalar_from_json(Json{{"re", "1/2"}, {"im", "-1/3"}}) ==
        Scalar(mpq_class(1, 2), mpq_class(-1, 3)));
  CHECK(scalar_from_json(Json("3/4")) == Scalar(3, 4));
  CHECK(scalar_from_json(Json("1/2+1/3i")) ==
        Scalar(mpq_class(1, 2), mpq_class(1, 3)));
  CHECK(scalar_from_json(Json(-5)) == Scalar(-5));
  CHECK_THROWS(scalar_from_json(Json{{"re", "1/0"}}));
  Scalar s(mpq_class(2, 7), mpq_class(-1, 2));
  CHECK(scalar_from_json(scalar_to_json(s)) == s);
}

TEST_CASE("spec json round trip") {
  testgen::Rng rng(43);
  for (int tag = 1; tag <= 7; ++tag) {
    ExtendedSpec s = testgen::sample_case(rng, tag, 3).spec;
    ExtendedSpec back = spec_from_json(spec_to_json(s));
    CHECK(back.f == s.f);
    CHECK(back.g == s.g);
    CHECK(back.h.gram() == s.h.gram());
    CHECK(back.c == s.c);
  }
}

TEST_CASE("pair and extended spec dispatch") {
  Json pair = {{"dim", 2},
               {"f", Json::array({"1", "0"})},
               {"g", Json::array({"0", "0"})}};
  CHECK(looks_like_pair_spec(pair));
  CHECK(!looks_like_spec(pair));
  PairSpec ps = pair_from_json(pair);
  CHECK(ps.f[0] == Scalar(1));
  CHECK(ps.g.is_zero());
}

TEST_CASE("lie json validates the bracket") {
  Algebra lie24 = generate(CatalogId::make(Family::Lie24), 3);
  CHECK_NOTHROW(lie_from_json(algebra_to_json(lie24)));
  Algebra not_lie = generate(CatalogId::make(Family::A2), 3);
  CHECK_THROWS(lie_from_json(algebra_to_json(not_lie)));
}

TEST_CASE("matrix json round trip") {
  testgen::Rng rng(47);
  Matrix m = testgen::random_matrix(rng, 3, 3);
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
}

TEST_CASE("initial condition parsing") {
  Json j = {{"components",
             Json::array(
                 {Json::array({Json{{"type", "sin"},
                                    {"amplitude", 1.0},
                                    {"wavenumber", 1.0}}}),
                  Json::array({Json{{"type", "const"}, {"amplitude", 0.5}}})})}};
  auto ic = ic_from_json(j);
  REQUIRE(ic.size() == 2);
  CHECK(ic[0][0].kind == WaveTerm::Kind::Sin);
  CHECK(ic[1][0].amplitude == 0.5);
  CHECK_THROWS(ic_from_json(Json{{"components", Json::array()}}));
  Json bad = j;
  bad["components"][0][0]["type"] = "square";
  CHECK_THROWS(ic_from_json(bad));
}
