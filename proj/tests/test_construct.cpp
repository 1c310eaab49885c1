#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lsa/catalog.hpp"
#include "support/gen.hpp"

using namespace lsa;

namespace {

Vector e(int n, int i) { return Vector::basis(n, i); }

LinearFunctional functional(std::initializer_list<long> cs) {
  std::vector<Scalar> v;
  for (long c : cs) v.emplace_back(c);
  return LinearFunctional(std::move(v));
}

}  // namespace

TEST_CASE("pair construction and verdicts") {
  // f = 0, g = e1-dual: L_{e1} = Id shape, associative
  {
    LinearFunctional f(4), g = functional({1, 0, 0, 0});
    PairResult r = algebra_from_pair(PairSpec(f, g));
    CHECK(r.verdict == PairVerdict::LeftSymmetricAssociative);
    CHECK(r.algebra == generate(CatalogId::make(Family::AssocL), 4));
  }
  // both nonzero: not left-symmetric
  {
    PairResult r =
        algebra_from_pair(PairSpec(functional({1, 0}), functional({1, 0})));
    CHECK(r.verdict == PairVerdict::NotLeftSymmetric);
    CHECK(!is_left_symmetric(r.algebra));
  }
  // f = g = 0: trivial algebra
  {
    PairResult r = algebra_from_pair(PairSpec(LinearFunctional(3), LinearFunctional(3)));
    CHECK(r.verdict == PairVerdict::LeftSymmetricAssociative);
    CHECK(r.algebra == generate(CatalogId::make(Family::Trivial), 3));
  }
  // associator vanishes on all basis triples whenever the verdict says so
  testgen::Rng rng(53);
  for (int rep = 0; rep < 40; ++rep) {
    int n = 2 + rep % 3;
    LinearFunctional f(n), g(n);
    bool left = rep % 2 == 0;
    for (int i = 0; i < n; ++i)
      (left ? g : f)[i] = testgen::small_scalar(rng);
    PairResult r = algebra_from_pair(PairSpec(f, g));
    CHECK(r.verdict == PairVerdict::LeftSymmetricAssociative);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          CHECK(basis_associator(r.algebra, i, j, k).is_zero());
  }
}

TEST_CASE("normalized basis for a functional") {
  {
    Matrix t = normalized_basis_for_functional(functional({2, 0, 0}));
    CHECK(t.col(0) == Scalar(1, 2) * e(3, 0));
  }
  {
    Matrix t = normalized_basis_for_functional(functional({0, 1}));
    CHECK(t.col(0) == e(2, 1));
  }
  {
    LinearFunctional g = functional({1, 1});
    Matrix t = normalized_basis_for_functional(g);
    CHECK(g.value(t.col(0)) == Scalar(1));
    CHECK(g.value(t.col(1)).is_zero());
  }
  testgen::Rng rng(59);
  for (int rep = 0; rep < 50; ++rep) {
    int n = 2 + rep % 4;
    LinearFunctional g(n);
    while (g.is_zero())
      for (int i = 0; i < n; ++i) g[i] = testgen::small_scalar(rng);
    Matrix t = normalized_basis_for_functional(g);
    CHECK(rank(t) == n);
    CHECK(g.value(t.col(0)) == Scalar(1));
    for (int i = 1; i < n; ++i) CHECK(g.value(t.col(i)).is_zero());
  }
  CHECK_THROWS_AS(normalized_basis_for_functional(LinearFunctional(3)),
                  std::invalid_argument);
}

TEST_CASE("matrix units represent the one-sided algebras") {
  auto left = matrix_representation(2, Side::Left);
  CHECK(left[0] == Matrix::unit(2, 0, 0));
  CHECK(left[1] == Matrix::unit(2, 0, 1));
  CHECK(left[0] * left[1] == left[1]);  // e1 e2 = e2
  auto right = matrix_representation(2, Side::Right);
  CHECK(right[1] == Matrix::unit(2, 1, 0));
  CHECK(right[1] * right[0] == right[1]);  // e2 e1 = e2
  CHECK((right[1] * right[1]).is_zero());
  // products reproduce the structure constants for n = 2..8
  for (int n = 2; n <= 8; ++n)
    for (Side side : {Side::Left, Side::Right}) {
      auto ms = matrix_representation(n, side);
      Algebra cat = generate(
          CatalogId::make(side == Side::Left ? Family::AssocL : Family::AssocR),
          std::min(n, 16));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Matrix want(n, n);
          for (int k = 0; k < n; ++k) {
            const Scalar& c = cat.c(i, j, k);
            if (!c.is_zero()) want += c * ms[k];
          }
          CHECK(ms[i] * ms[j] == want);
        }
    }
  CHECK_THROWS_AS(matrix_representation(1, Side::Left), std::invalid_argument);
}

TEST_CASE("bracket from a functional pair") {
  {
    auto l = lie_bracket_from_pair(functional({1, 0}), functional({-1, 0}));
    REQUIRE(l);
    CHECK(l->basis_bracket(0, 1) == e(2, 1));  // [e1, e2] = e2
  }
  {
    auto l = lie_bracket_from_pair(LinearFunctional(3), LinearFunctional(3));
    REQUIRE(l);
    CHECK(l->is_abelian());
  }
  CHECK(!lie_bracket_from_pair(functional({1, 0}), functional({1, 0})));
  // succeeds exactly when f + g = 0
  testgen::Rng rng(61);
  for (int rep = 0; rep < 60; ++rep) {
    int n = 2 + rep % 3;
    LinearFunctional f(n), g(n);
    for (int i = 0; i < n; ++i) f[i] = testgen::small_scalar(rng);
    bool negate = rep % 2 == 0;
    for (int i = 0; i < n; ++i)
      g[i] = negate ? -f[i] : testgen::small_scalar(rng);
    bool is_neg = true;
    for (int i = 0; i < n; ++i)
      if (f[i] != -g[i]) is_neg = false;
    CHECK(lie_bracket_from_pair(f, g).has_value() == is_neg);
  }
}

TEST_CASE("extended construction") {
  // f = g = 0, h = diag(1,0), c = e2: only product e1 e1 = e2
  {
    Matrix gram(2, 2);
    gram.at(0, 0) = Scalar(1);
    ExtendedSpec s(LinearFunctional(2), LinearFunctional(2),
                   SymBilinearForm(gram), e(2, 1));
    Algebra a = algebra_from_extended(s);
    CHECK(a.basis_product(0, 0) == e(2, 1));
    CHECK(a.basis_product(0, 1).is_zero());
    CHECK(a.basis_product(1, 0).is_zero());
    CHECK(a.basis_product(1, 1).is_zero());
  }
  // h = 0 violates the type invariant
  CHECK_THROWS_AS(ExtendedSpec(LinearFunctional(2), LinearFunctional(2),
                               SymBilinearForm::zero(2), e(2, 0)),
                  std::invalid_argument);
  // c = 0 violates the type invariant
  {
    Matrix gram(2, 2);
    gram.at(0, 0) = Scalar(1);
    CHECK_THROWS_AS(ExtendedSpec(LinearFunctional(2), LinearFunctional(2),
                                 SymBilinearForm(gram), Vector(2)),
                    std::invalid_argument);
  }
  // f = (1,0), g = 2f, c = e1, h = -f(x)f(y)/f(c)
  {
    LinearFunctional f = functional({1, 0}), g = functional({2, 0});
    Matrix gram(2, 2);
    gram.at(0, 0) = Scalar(-1);
    ExtendedSpec s(f, g, SymBilinearForm(gram), e(2, 0));
    Algebra a = algebra_from_extended(s);
    CHECK(a.basis_product(0, 0) == Scalar(2) * e(2, 0));
    CHECK(a.basis_product(0, 1) == e(2, 1));
    CHECK(a.basis_product(1, 0) == Scalar(2) * e(2, 1));
    CHECK(a.basis_product(1, 1).is_zero());
    CaseVerdict v = classify_extended(s);
    CHECK(v.tag == ExtCase::Case7);
    CHECK(*v.alpha == Scalar(2));
  }
}

TEST_CASE("classifier case examples") {
  // f = g = 0, h = diag(1,0,...), c orthogonal to h: case 1
  {
    int n = 3;
    Matrix gram(n, n);
    gram.at(0, 0) = Scalar(1);
    ExtendedSpec s(LinearFunctional(n), LinearFunctional(n),
                   SymBilinearForm(gram), e(n, 2));
    CaseVerdict v = classify_extended(s);
    CHECK(v.tag == ExtCase::Case1);
    CHECK(*v.h_rank == 1);
  }
  // g = 0, f = h(.,c): case 3
  {
    int n = 3;
    Matrix gram = Matrix::identity(n);
    SymBilinearForm h(gram);
    Vector c = e(n, 0) + e(n, 1);
    LinearFunctional f(n);
    LinearFunctional hc = h.pair_with(c);
    for (int i = 0; i < n; ++i) f[i] = hc[i];
    ExtendedSpec s(f, LinearFunctional(n), h, c);
    CaseVerdict v = classify_extended(s);
    CHECK(v.tag == ExtCase::Case3);
    CHECK(*v.h_rank == n);
  }
  // case 4 parameters in the normalized basis
  {
    int n = 2;
    Matrix gram(n, n);
    gram.at(0, 0) = Scalar(1);
    Vector c(n);
    c[0] = Scalar(2);
    c[1] = Scalar(1);
    LinearFunctional f(n);
    f[0] = Scalar(2) - Scalar(1);  // a1 - alpha with alpha = 1
    ExtendedSpec s(f, LinearFunctional(n), SymBilinearForm(gram), c);
    CaseVerdict v = classify_extended(s);
    CHECK(v.tag == ExtCase::Case4);
    CHECK(*v.alpha == Scalar(1));
    CHECK(*v.a1 == Scalar(2));
  }
}

TEST_CASE("classifier agrees with left-symmetry on case templates") {
  testgen::Rng rng(67);
  for (int n = 2; n <= 4; ++n)
    for (int tag = 1; tag <= 7; ++tag)
      for (int rep = 0; rep < 25; ++rep) {
        auto s = testgen::sample_case(rng, tag, n);
        CaseVerdict v = classify_extended(s.spec);
        CHECK(static_cast<int>(v.tag) == tag);
        CHECK(is_left_symmetric(algebra_from_extended(s.spec)));
      }
}

TEST_CASE("identity violations are rejected") {
  testgen::Rng rng(71);
  for (int n = 2; n <= 4; ++n)
    for (int rep = 0; rep < 15; ++rep) {
      CHECK(classify_extended(testgen::mutate_fg_symmetric(rng, n)).tag ==
            ExtCase::NotLeftSymmetric);
      CHECK(classify_extended(testgen::mutate_fg_h_compat(rng, n)).tag ==
            ExtCase::NotLeftSymmetric);
      CHECK(classify_extended(testgen::mutate_h_alignment(rng, n)).tag ==
            ExtCase::NotLeftSymmetric);
    }
}

TEST_CASE("inner-product construction") {
  // a = e1, n = 2: the printed dim-2 products
  {
    Algebra a = algebra_from_inner_product(e(2, 0));
    CHECK(a.basis_product(0, 0) == Scalar(2) * e(2, 0));
    CHECK(a.basis_product(0, 1) == e(2, 1));
    CHECK(a.basis_product(1, 0).is_zero());
    CHECK(a.basis_product(1, 1) == e(2, 0));
    CHECK(a == generate(CatalogId::make(Family::A3_1), 2));
  }
  // always left-symmetric
  testgen::Rng rng(73);
  for (int rep = 0; rep < 30; ++rep) {
    int n = 2 + rep % 3;
    Vector a = testgen::nonzero_vector(rng, n);
    CHECK(is_left_symmetric(algebra_from_inner_product(a)));
  }
  // (a,a) != 0 identifies as the simple family
  {
    Vector a(2);
    a[0] = Scalar(1);
    a[1] = Scalar(1);
    auto m = match_catalog(algebra_from_inner_product(a));
    REQUIRE(m);
    CHECK(m->id == CatalogId::make(Family::A3_1));
    CHECK(identify(inner_product_spec(a)).id == CatalogId::make(Family::A3_1));
  }
  CHECK_THROWS_AS(algebra_from_inner_product(Vector(3)), std::invalid_argument);
}
