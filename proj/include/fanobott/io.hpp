// JSON and text formats shared by the CLI and the Python bindings.
//
//   matrix      {"dim": d, "entries": [[row 1], ..., [row d]]}  (a bare
//               [[...], ...] array is accepted on input)
//   rejection   {"row": p, "violation": "...", "column": j?}
//   forest      {"size": d, "parents": [...0 for root], "signs": ["+", "-", "" for root]}
//   witness     {"steps": [{"op":"p","perm":[...]}, {"op":"2","k":k},
//                          {"op":"3","k":k,"l":l}], "source_sha": ..., "target_sha": ...}
//   inventory   {"h": [...], "g": [...], "g_prime": [{"p":p,"q":q,"sign":s}],
//                "maximal_basis_number": m}

#pragma once

#include <string>

#include <json.hpp>

#include "fanobott/cohomology.hpp"
#include "fanobott/fan.hpp"
#include "fanobott/forest.hpp"
#include "fanobott/matrix.hpp"
#include "fanobott/ops.hpp"

namespace fanobott {

using json = nlohmann::json;

/// Malformed input (wrong shape, wrong types). Distinct from InvalidMatrix,
/// which reports a well-formed grid that is not in FB(d).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json to_json(const IntMatrix& m);
json to_json(const FanoBottMatrix& a);
json to_json(const Rejection& r);
json to_json(const SignedRootedForest& t);
json to_json(const OpSequence& seq);
json to_json(const SveInventory& inv);
json to_json(const DiffeoCertificate& cert);

/// Square grid from a matrix object or a bare array of rows.
IntMatrix grid_from_json(const json& j);
SignedRootedForest forest_from_json(const json& j);
OpSequence witness_from_json(const json& j);

/// SHA-256 (hex) of the compact matrix JSON.
std::string matrix_digest(const FanoBottMatrix& a);

}  // namespace fanobott
