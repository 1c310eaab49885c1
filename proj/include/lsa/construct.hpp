#pragma once

#include <optional>

#include "lsa/algebra.hpp"

namespace lsa {

/// Data for the product x*y = f(y)x + g(x)y.
struct PairSpec {
  LinearFunctional f, g;
  PairSpec(LinearFunctional f_, LinearFunctional g_);
  int dim() const { return f.dim(); }
};

/// Data for the product x*y = f(x)y + g(y)x + h(x,y)c. Note that f
/// multiplies y here (role swap relative to the pair product). Invariants:
/// equal dims >= 2, c != 0, h != 0.
struct ExtendedSpec {
  LinearFunctional f, g;
  SymBilinearForm h;
  Vector c;
  ExtendedSpec(LinearFunctional f_, LinearFunctional g_, SymBilinearForm h_,
               Vector c_);
  int dim() const { return f.dim(); }
};

enum class PairVerdict { LeftSymmetricAssociative, NotLeftSymmetric };

enum class ExtCase {
  NotLeftSymmetric,
  Case1,  // f = g = 0, h(.,c) = 0
  Case2,  // f = g = 0, h rank 1, h(c,c) != 0
  Case3,  // g = 0, f = h(.,c) != 0
  Case4,  // g = 0, f != 0, h rank 1, f = h(., c - alpha e1)
  Case5,  // f = 0, g = -h(.,c) != 0, h(c,c) = 0
  Case6,  // f = 0, g != 0, h rank 1, h(.,c) = 0
  Case7,  // f,g != 0, g = alpha f, h = -f (x) f / f(c)
};

/// Classification outcome. alpha/a1 are exact; for cases (4) and (6) they
/// refer to the normalized basis vector of unit h-length when the pivot
/// value h(v,v) has an exact square root, and otherwise carry the common
/// (scale-covariant) factor sqrt(h(v,v)) — every downstream quantity
/// (lambda, the a1 = 0 and a1 = alpha tests) is invariant under that scale.
struct CaseVerdict {
  ExtCase tag = ExtCase::NotLeftSymmetric;
  std::optional<int> h_rank;          // cases 1, 3, 5
  std::optional<Scalar> alpha;        // cases 4, 7
  std::optional<Scalar> a1;           // case 4
  bool operator==(const CaseVerdict& o) const = default;
};

struct PairResult {
  Algebra algebra;
  PairVerdict verdict;
};

/// C[i][j][k] = f(e_j) delta_ik + g(e_i) delta_jk; left-symmetric
/// (and then associative) iff f = 0 or g = 0.
PairResult algebra_from_pair(const PairSpec& spec);

/// Invertible exact T with g(T e_1) = 1 and g(T e_i) = 0 for i >= 2.
Matrix normalized_basis_for_functional(const LinearFunctional& g);

enum class Side { Left, Right };

/// Matrix units representing the one-sided associative algebras:
/// M_i = E_{1i} (Left) or E_{i1} (Right); the representation property
/// M_i M_j = sum_k C[i][j][k] M_k is verified before returning.
std::vector<Matrix> matrix_representation(int n, Side side);

/// [x,y] = f(x)y + g(y)x is a Lie bracket iff f = -g; nullopt otherwise.
std::optional<LieAlgebra> lie_bracket_from_pair(const LinearFunctional& f,
                                                const LinearFunctional& g);

/// C[i][j][k] = f(e_i) delta_jk + g(e_j) delta_ik + h(e_i,e_j) c_k.
Algebra algebra_from_extended(const ExtendedSpec& spec);

/// Decides left-symmetry of the extended construction by the three
/// bilinear/trilinear identities it is equivalent to, then picks the unique
/// matching case. Order: the f/g vanishing flags, the identities, then the
/// case conditions in numeric order.
CaseVerdict classify_extended(const ExtendedSpec& spec);

/// u*v = (u,v)a + (u,a)v over the standard coordinate form (bilinear,
/// no conjugation). Always left-symmetric.
Algebra algebra_from_inner_product(const Vector& a);

/// The extended-spec presentation of the inner-product construction:
/// f = (.,a), g = 0, h = standard form, c = a.
ExtendedSpec inner_product_spec(const Vector& a);

}  // namespace lsa
