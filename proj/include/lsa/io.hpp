#pragma once

#include <json.hpp>
#include <string>

#include "lsa/analysis.hpp"
#include "lsa/burgers.hpp"
#include "lsa/construct.hpp"

namespace lsa {

using Json = nlohmann::json;

// Scalars serialize as {"re": "p/q", "im": "p/q"}; readers also accept a
// bare "p/q+r/s i" string or a plain integer.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

// Algebra files: {"dim": n, "structure": [[i, j, k, scalar], ...]} listing
// only nonzero entries, indices 1-based. Duplicate (i,j,k) triples and
// out-of-range indices are rejected.
Json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const Json& j);
/// Same file format; validates antisymmetry and Jacobi on load.
LieAlgebra lie_from_json(const Json& j);

// Extended specs: {"dim": n, "f": [...], "g": [...], "h": [[...]...],
// "c": [...]}; a file without "h"/"c" is a pair spec.
Json spec_to_json(const ExtendedSpec& s);
ExtendedSpec spec_from_json(const Json& j);
PairSpec pair_from_json(const Json& j);
bool looks_like_pair_spec(const Json& j);
bool looks_like_spec(const Json& j);

// Square matrices (r-matrix input): {"dim": n, "entries": [[...]...]}.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

// Initial conditions: {"components": [[{"type": "sin"|"cos"|"const",
// "amplitude": a, "wavenumber": w, "phase": p}, ...], ...]}.
std::vector<std::vector<WaveTerm>> ic_from_json(const Json& j);

Json report_to_json(const PropertyReport& rep);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace lsa
