#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lsa/catalog.hpp"
#include "support/gen.hpp"

using namespace lsa;

namespace {

Vector e(int n, int i) { return Vector::basis(n, i); }

const std::vector<Scalar> kLambdas{Scalar(-1), Scalar(3), Scalar(1, 2)};
const std::vector<Scalar> kAlphas{Scalar(1, 2), Scalar(1), Scalar(2)};

}  // namespace

TEST_CASE("basis products of the printed normal forms") {
  Algebra a31 = generate(CatalogId::make(Family::A3_1), 2);
  CHECK(multiply(a31, e(2, 1), e(2, 1)) == e(2, 0));  // e2 e2 = e1
  Algebra triv = generate(CatalogId::make(Family::Trivial), 3);
  testgen::Rng rng(3);
  CHECK(multiply(triv, testgen::random_vector(rng, 3),
                 testgen::random_vector(rng, 3))
            .is_zero());
  Algebra a6 = generate(CatalogId::make(Family::A6), 2);
  CHECK(multiply(a6, e(2, 1), e(2, 0)) == e(2, 1));  // e2 e1 = e2
}

TEST_CASE("multiply is bilinear") {
  testgen::Rng rng(5);
  for (int rep = 0; rep < 40; ++rep) {
    int n = 2 + rep % 3;
    Algebra a = testgen::random_algebra(rng, n);
    Vector x = testgen::random_vector(rng, n), xp = testgen::random_vector(rng, n),
           y = testgen::random_vector(rng, n);
    Scalar s = testgen::small_scalar(rng);
    CHECK(multiply(a, s * x + xp, y) ==
          s * multiply(a, x, y) + multiply(a, xp, y));
    CHECK(multiply(a, y, s * x + xp) ==
          s * multiply(a, y, x) + multiply(a, y, xp));
  }
}

TEST_CASE("associator values") {
  // one-sided associative algebra: associator vanishes everywhere
  Algebra assoc = generate(CatalogId::make(Family::AssocL), 3);
  testgen::Rng rng(9);
  for (int rep = 0; rep < 20; ++rep)
    CHECK(associator(assoc, testgen::random_vector(rng, 3),
                     testgen::random_vector(rng, 3),
                     testgen::random_vector(rng, 3))
              .is_zero());
  Algebra a31 = generate(CatalogId::make(Family::A3_1), 2);
  CHECK(associator(a31, e(2, 1), e(2, 1), e(2, 1)) == e(2, 1));
  Algebra triv = generate(CatalogId::make(Family::Trivial), 2);
  CHECK(associator(triv, e(2, 0), e(2, 1), e(2, 1)).is_zero());
}

TEST_CASE("left-symmetry detection") {
  for (int n = 2; n <= 4; ++n)
    for (const CatalogId& id : enumerate_lsa_catalog(n, kLambdas, kAlphas))
      CHECK(is_left_symmetric(generate(id, n)));
  // pair construction with both functionals nonzero fails
  LinearFunctional f(2), g(2);
  f[0] = Scalar(1);
  g[0] = Scalar(1);
  PairResult r = algebra_from_pair(PairSpec(f, g));
  CHECK(r.verdict == PairVerdict::NotLeftSymmetric);
  CHECK(!is_left_symmetric(r.algebra));
  CHECK(is_left_symmetric(generate(CatalogId::make(Family::Trivial), 2)));
}

TEST_CASE("left and right multiplication operators") {
  int n = 4;
  Algebra a4 = generate(CatalogId::a4(Scalar(3)), n);
  Matrix l = left_mult(a4, e(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Scalar want = i == j ? (i == 0 ? Scalar(3) : Scalar(1)) : Scalar(0);
      CHECK(l.at(i, j) == want);
    }
  Algebra triv = generate(CatalogId::make(Family::Trivial), 3);
  testgen::Rng rng(31);
  CHECK(left_mult(triv, testgen::random_vector(rng, 3)).is_zero());
  CHECK(right_mult(triv, testgen::random_vector(rng, 3)).is_zero());
  // R_{e2} of the dim-2 simple algebra swaps the basis
  Algebra a31 = generate(CatalogId::make(Family::A3_1), 2);
  Matrix r = right_mult(a31, e(2, 1));
  CHECK(r * e(2, 0) == e(2, 1));
  CHECK(r * e(2, 1) == e(2, 0));
}

TEST_CASE("L_x(y) = x*y = R_y(x)") {
  testgen::Rng rng(37);
  for (int rep = 0; rep < 30; ++rep) {
    int n = 2 + rep % 3;
    Algebra a = testgen::random_algebra(rng, n);
    Vector x = testgen::random_vector(rng, n), y = testgen::random_vector(rng, n);
    Vector p = multiply(a, x, y);
    CHECK(left_mult(a, x) * y == p);
    CHECK(right_mult(a, y) * x == p);
  }
}

TEST_CASE("sub-adjacent Lie algebra") {
  int n = 4;
  // L_{e1} = Id gives the bracket [e1, ei] = ei
  LieAlgebra l = sub_adjacent_lie(generate(CatalogId::make(Family::AssocL), n));
  Algebra lie24 = generate(CatalogId::make(Family::Lie24), n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      CHECK(l.basis_bracket(i, j) == lie24.basis_product(i, j));
  // commutative families give abelian brackets
  CHECK(sub_adjacent_lie(generate(CatalogId::with_k(Family::A1, 2), 4)).is_abelian());
  CHECK(sub_adjacent_lie(generate(CatalogId::make(Family::Trivial), 3)).is_abelian());
}

TEST_CASE("sub-adjacent brackets satisfy Jacobi across the catalog") {
  for (int n = 2; n <= 6; ++n)
    for (const CatalogId& id : enumerate_lsa_catalog(n, kLambdas, kAlphas))
      CHECK_NOTHROW(sub_adjacent_lie(generate(id, n)));
}

TEST_CASE("lie algebra construction validates") {
  int n = 3;
  std::vector<Scalar> b(27);
  auto at = [&](int i, int j, int k) -> Scalar& { return b[(i * 3 + j) * 3 + k]; };
  at(0, 0, 0) = Scalar(1);  // not antisymmetric
  CHECK_THROWS_AS(LieAlgebra(n, b), std::invalid_argument);
  // antisymmetric but violating Jacobi:
  // [e1,e2] = e2, [e1,e3] = e3, [e2,e3] = e1
  std::fill(b.begin(), b.end(), Scalar(0));
  at(0, 1, 1) = Scalar(1);
  at(1, 0, 1) = Scalar(-1);
  at(0, 2, 2) = Scalar(1);
  at(2, 0, 2) = Scalar(-1);
  at(1, 2, 0) = Scalar(1);
  at(2, 1, 0) = Scalar(-1);
  CHECK_THROWS_AS(LieAlgebra(n, b), std::invalid_argument);
}

TEST_CASE("dimension cap") {
  CHECK_THROWS_AS(Algebra(17), std::invalid_argument);
  CHECK_THROWS_AS(Algebra(0), std::invalid_argument);
}
