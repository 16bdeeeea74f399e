#pragma once

#include <ccomp/ccomp.hpp>

#include <json.hpp>

#include <map>
#include <optional>
#include <string>

namespace ccomp::cli {

using Json = nlohmann::ordered_json;

/// Parsed input document:
///   {"ambient_dim": n, "subspaces": {"M": [[...], ...], "N": ..., "K": ..., "M1": ...},
///    "S": [[...]], "U_map": [[...]], "C": c, "epsilon": e, "tolerances": {...}}
struct PairInput {
  Index ambient_dim = 0;
  std::map<std::string, Subspace> subspaces;
  std::optional<Matrix> S;
  std::optional<Matrix> U_map;
  std::optional<double> C;
  std::optional<double> epsilon;
  TolerancePolicy tol;

  const Subspace& at(const std::string& name) const;
  const Subspace* find(const std::string& name) const;
};

/// Parses a document. Spanning rows are orthonormalized under the effective
/// tolerance (`base`, overridden by the document's "tolerances" object).
/// Throws ccomp::Error(ErrorKind::Input) on malformed input.
PairInput parse_pair_input(const Json& doc, const TolerancePolicy& base);

PairInput load_pair_input(const std::string& path, const TolerancePolicy& base);

/// Rows of a matrix as a JSON array of arrays.
Json matrix_to_json(const Matrix& a);

/// Basis vectors of a subspace as rows.
Json subspace_to_json(const Subspace& s);

Json vector_to_json(const std::vector<double>& v);

Json tolerances_to_json(const TolerancePolicy& tol);

/// Compact JSON with fixed key order, doubles printed with 17 significant
/// digits, non-finite doubles as null.
std::string dump_json(const Json& j, int indent = 2);

/// Line-oriented "key: value" rendering with dotted keys.
std::string dump_text(const Json& j);

}  // namespace ccomp::cli
