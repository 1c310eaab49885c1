#pragma once

#include <optional>
#include <string>

#include "lsa/analysis.hpp"
#include "lsa/construct.hpp"
#include "lsa/poly.hpp"

namespace lsa {

/// The normal-form families. Parameter ranges: A1 takes 0 <= k <= n-1,
/// A3_2 / A3_3 / A5 take 0 <= k <= n-2, A4Lambda excludes lambda in {1,2},
/// A7Alpha excludes alpha = 0.
enum class Family {
  A1,
  A2,
  A3_1,
  A3_2,
  A3_3,
  A4_1,
  A4Lambda,
  A5,
  A6,
  A7Alpha,
  AssocL,
  AssocR,
  Trivial,
  Lie24,
};

struct CatalogId {
  Family family = Family::Trivial;
  int k = 0;      // A1, A3_2, A3_3, A5
  Scalar lambda;  // A4Lambda
  Scalar alpha;   // A7Alpha

  static CatalogId make(Family f) { return {f, 0, {}, {}}; }
  static CatalogId with_k(Family f, int k) { return {f, k, {}, {}}; }
  static CatalogId a4(Scalar lambda) {
    return {Family::A4Lambda, 0, std::move(lambda), {}};
  }
  static CatalogId a7(Scalar alpha) {
    return {Family::A7Alpha, 0, {}, std::move(alpha)};
  }

  /// CLI naming: a1:k, a2, a3.1, a3.2:k, a3.3:k, a4.1, a4:lambda, a5:k,
  /// a6, a7:alpha, assocL, assocR, trivial, lie24.
  std::string str() const;
  static CatalogId parse(const std::string& name);

  friend bool operator==(const CatalogId& a, const CatalogId& b);
};

/// Structure constants exactly as the normal forms print them. Lie24 yields
/// the bracket tensor (validate with Jacobi, not left-symmetry).
Algebra generate(const CatalogId& id, int n);

/// Every left-symmetric catalog id at dimension n, one entry per distinct
/// algebra: Trivial once (A1 starts at k = 1), parameterized families at the
/// given sample values, Lie24 excluded.
std::vector<CatalogId> enumerate_lsa_catalog(int n,
                                             const std::vector<Scalar>& lambdas,
                                             const std::vector<Scalar>& alphas);

enum class TraceRelation { BothZero, SigmaZero, TauZero, Proportional, Independent };

/// Relation between the functionals sigma(x) = tr L_x and tau(x) = tr R_x;
/// both transform identically under isomorphism, so the relation kind and
/// the exact ratio (sigma = ratio * tau) are proven invariants.
struct TraceFunctionalRelation {
  TraceRelation kind = TraceRelation::BothZero;
  Scalar ratio;
  friend bool operator==(const TraceFunctionalRelation&,
                         const TraceFunctionalRelation&) = default;
};

using SpectrumPair = std::pair<std::vector<RootLabel>, std::vector<RootLabel>>;

/// Every field except idempotent_spectra is a proven isomorphism invariant.
/// idempotent_spectra is covariant for the idempotents the span heuristic
/// finds; completeness is not guaranteed, so it never backs a
/// NonIsomorphic verdict.
struct Fingerprint {
  int dim = 0;
  bool commutative = false, associative = false, novikov = false,
       bisymmetric = false, transitive = false, interior_derivation = false;
  int dim_product_span = 0;
  int dim_commutator_span = 0;
  int dim_left_annihilator = 0;
  int dim_right_annihilator = 0;
  int mult_algebra_dim = 0;
  int rank_ll = 0, rank_rr = 0, rank_lr = 0, rank_rprod = 0;
  TraceFunctionalRelation trace_relation;
  std::vector<SpectrumPair> idempotent_spectra;  // (spec L_e, spec R_e), sorted
};

Fingerprint fingerprint(const Algebra& a);

/// Name of the first differing proven field, or "" when all agree.
std::string fingerprint_difference(const Fingerprint& a, const Fingerprint& b);

/// T invertible with T(x *_A y) = T(x) *_B T(y); exact.
bool check_homomorphism(const Algebra& a, const Algebra& b, const Matrix& t);
/// Approximate variant: invertible and residual <= 1e-9.
bool check_homomorphism(const Algebra& a, const Algebra& b, const CMatrix& t);
/// max-norm defect of the homomorphism property over basis pairs.
double homomorphism_residual(const Algebra& a, const Algebra& b,
                             const CMatrix& t);

struct IsoVerdict {
  enum class Kind { Isomorphic, NonIsomorphic, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<Matrix> witness;  // exact, verified before return
  std::string invariant;          // differing field for NonIsomorphic
};

/// Three-valued: NonIsomorphic only with a differing proven invariant,
/// Isomorphic only with an exactly verified witness (identical tensors or
/// one of the two dimension-2 exceptional pairs), Unknown otherwise.
IsoVerdict are_isomorphic(const Algebra& a, const Algebra& b);

struct IdentifyResult {
  CatalogId id;
  CMatrix witness;  // input basis -> catalog basis
  double residual = 0.0;
  bool exact = false;  // witness verified exactly (residual identically 0)
};

/// Normalizes a left-symmetric extended spec to its catalog representative.
/// The id is exact (ranks and exact parameter arithmetic); the witness is
/// exact whenever no square-root scaling is forced.
/// Throws std::invalid_argument when the spec is not left-symmetric.
IdentifyResult identify(const ExtendedSpec& spec);

struct MatchResult {
  CatalogId id;
  CMatrix witness;  // input basis -> catalog basis
  double residual = 0.0;
};

/// Matches an arbitrary algebra against the catalog at its dimension by the
/// small linear-plus-idempotent problems the normal forms admit; returns an
/// id only with a verified witness, nullopt otherwise.
std::optional<MatchResult> match_catalog(const Algebra& a);

}  // namespace lsa
