#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lsa/scalar.hpp"
#include "support/gen.hpp"

using namespace lsa;

TEST_CASE("arithmetic stays canonical and exact") {
  Scalar a(3, 4), b(1, 6);
  CHECK((a + b).str() == "11/12");
  CHECK((a * b).str() == "1/8");
  CHECK((a - a).is_zero());
  Scalar z(mpq_class(1, 2), mpq_class(-1, 3));
  CHECK((z * z.conj()).str() == "13/36");
  CHECK(z.norm2() == mpq_class(13, 36));
}

TEST_CASE("complex division") {
  Scalar i = Scalar::i();
  CHECK(i * i == Scalar(-1));
  Scalar z(mpq_class(2), mpq_class(3));
  CHECK(z / z == Scalar(1));
  CHECK((Scalar(1) / i) == -i);
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);
}

TEST_CASE("parse round trips") {
  const char* cases[] = {"0",   "-3/2", "1/2+1/3i", "i",       "-i",
                         "2i",  "5",    "-2/7i",    "1/2-1/3i"};
  for (const char* c : cases) {
    Scalar s = Scalar::parse(c);
    CHECK(Scalar::parse(s.str()) == s);
  }
  CHECK(Scalar::parse("1/2 + 1/3 i") == Scalar(mpq_class(1, 2), mpq_class(1, 3)));
  CHECK(Scalar::parse("4/8") == Scalar(1, 2));
  CHECK_THROWS(Scalar::parse(""));
  CHECK_THROWS(Scalar::parse("1/0"));
  CHECK_THROWS(Scalar::parse("abc"));
}

TEST_CASE("field axioms on random values") {
  testgen::Rng rng(7);
  for (int rep = 0; rep < 200; ++rep) {
    Scalar a = testgen::small_scalar(rng), b = testgen::small_scalar(rng),
           c = testgen::small_scalar(rng);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    if (!a.is_zero()) CHECK(a * a.inv() == Scalar(1));
  }
}

TEST_CASE("exact square roots") {
  CHECK(*sqrt_exact(mpq_class(9, 4)) == mpq_class(3, 2));
  CHECK(!sqrt_exact(mpq_class(2)));
  CHECK(*sqrt_exact(Scalar(-4)) == Scalar(mpq_class(0), mpq_class(2)));
  // (1+i)^2 = 2i
  CHECK(*sqrt_exact(Scalar(mpq_class(0), mpq_class(2))) ==
        Scalar(mpq_class(1), mpq_class(1)));
  CHECK(!sqrt_exact(Scalar(mpq_class(0), mpq_class(1))));  // sqrt(i) irrational
  testgen::Rng rng(17);
  for (int rep = 0; rep < 100; ++rep) {
    Scalar w = testgen::small_scalar(rng);
    auto r = sqrt_exact(w * w);
    REQUIRE(r);
    CHECK(*r * *r == w * w);
  }
}

TEST_CASE("rational reconstruction from doubles") {
  CHECK(*rational_from_double(0.25) == mpq_class(1, 4));
  CHECK(*rational_from_double(-1.5) == mpq_class(-3, 2));
  CHECK(*rational_from_double(1.0 / 3.0) == mpq_class(1, 3));
  CHECK(*rational_from_double(0.0) == 0);
  auto sq2 = rational_from_double(std::sqrt(2.0), 50);
  CHECK(!sq2);  // no small-denominator rational matches to 1e-9
}
