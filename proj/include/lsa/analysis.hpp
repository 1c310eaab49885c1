#pragma once

#include "lsa/construct.hpp"

namespace lsa {

struct IdentityFlags {
  bool commutative = false;
  bool associative = false;
};

/// Exact basis-pair / basis-triple checks.
IdentityFlags identity_flags(const Algebra& a);

/// Left-symmetric with pairwise commuting right multiplications.
bool is_novikov(const Algebra& a);

/// Left-symmetric with a right-symmetric associator, (x,y,z) = (x,z,y).
bool is_bisymmetric(const Algebra& a);

enum class TransitivityMode { ExactGrid, Randomized };

struct TransitivityReport {
  bool transitive = false;
  TransitivityMode mode = TransitivityMode::ExactGrid;
};

/// Every R_x nilpotent, decided via tr(R_x^m) = 0 for m = 1..n (Newton
/// identities, characteristic 0). Each trace polynomial is homogeneous of
/// degree m, so vanishing on the integer grid {0..m}^n decides it exactly
/// for n <= 6; larger n uses random integer points (one-sided error,
/// flagged in the mode). Requires a left-symmetric input.
TransitivityReport is_transitive(const Algebra& a);

/// Every L_x an interior derivation of the sub-adjacent Lie algebra:
/// L_{e_i} = ad(z_i) solvable for each i (exact elimination). Requires a
/// left-symmetric input.
bool is_interior_derivation(const Algebra& a);

/// Dimension of the unital associative envelope of {L_{e_i}, R_{e_i}}
/// inside gl(n) (exact span closure under matrix product).
int multiplication_envelope_dim(const Algebra& a);

/// Simple iff the envelope is all of gl(n): ideals are exactly the common
/// invariant subspaces of all L_x, R_x, and a subalgebra of gl(n) has no
/// nontrivial invariant subspace iff it is full (Burnside, over an
/// algebraically closed field).
bool is_simple(const Algebra& a);

struct HInvariance {
  bool product_symmetric = false;    // h(x*y,z) = h(y*x,z) = h(x*z,y)
  bool right_self_adjoint = false;   // h(x*y,z) = h(x,z*y)
  bool left_skew_adjoint = false;    // h(x*y,z) + h(y,x*z) = 0
};

/// Evaluates the three invariance identities of the form h on the algebra
/// built from the spec; exact, on basis triples. The case-to-identity
/// mapping is something tests check, not an assumption made here.
HInvariance h_invariance(const ExtendedSpec& spec);

struct PropertyReport {
  bool commutative = false;
  bool associative = false;
  bool left_symmetric = false;
  bool novikov = false;
  bool bisymmetric = false;
  bool transitive = false;
  TransitivityMode transitive_mode = TransitivityMode::ExactGrid;
  bool interior_derivation = false;
  bool simple = false;
};

/// All detectors; the left-symmetry-gated ones report false on a
/// non-left-symmetric input.
PropertyReport property_report(const Algebra& a);

/// [R(x), R(y)] = R([R(x),y] + [x,R(y)]) on basis pairs, exact.
bool is_r_matrix(const LieAlgebra& l, const Matrix& r);

/// x*y = [R(x), y]; requires is_r_matrix(l, r). The result is
/// left-symmetric; its own commutator bracket need not equal l.
Algebra lsa_from_r_matrix(const LieAlgebra& l, const Matrix& r);

}  // namespace lsa
