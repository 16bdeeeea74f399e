#include "json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ccomp::cli {

namespace {

Matrix parse_rows(const Json& rows, const std::string& what, std::optional<Index> width) {
  if (!rows.is_array()) fail(ErrorKind::Input, what + ": expected an array of rows");
  const auto count = static_cast<Index>(rows.size());
  Index cols = width.value_or(count == 0 ? 0 : static_cast<Index>(rows[0].size()));
  Matrix out(count, cols);
  for (Index i = 0; i < count; ++i) {
    const Json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      fail(ErrorKind::Input, what + ": row " + std::to_string(i) + " has length " +
                                 std::to_string(row.is_array() ? row.size() : 0) +
                                 ", expected " + std::to_string(cols));
    }
    for (Index j = 0; j < cols; ++j) {
      const Json& v = row[static_cast<std::size_t>(j)];
      if (!v.is_number()) fail(ErrorKind::Input, what + ": entries must be numbers");
      out(i, j) = v.get<double>();
    }
  }
  require_finite(out, what.c_str());
  return out;
}

double get_unit(const Json& obj, const char* key, double fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number()) {
    fail(ErrorKind::Input, std::string("tolerances.") + key + " must be a number");
  }
  return obj[key].get<double>();
}

void append_number(std::string& out, double x) {
  if (!std::isfinite(x)) {
    out += "null";
    return;
  }
  if (x == 0.0) x = 0.0;  // no "-0"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  out += buf;
}

void dump_impl(const Json& j, int indent, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad + Json(it.key()).dump() + ": ";
        dump_impl(it.value(), indent, depth + 1, out);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      const bool flat = std::all_of(j.begin(), j.end(),
                                    [](const Json& e) { return e.is_primitive(); });
      if (flat) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          dump_impl(j[i], indent, depth + 1, out);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        dump_impl(j[i], indent, depth + 1, out);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case Json::value_t::number_float:
      append_number(out, j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

std::string scalar_text(const Json& j) {
  if (j.is_number_float()) {
    std::string s;
    append_number(s, j.get<double>());
    return s;
  }
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void text_impl(const Json& j, const std::string& key, std::string& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      text_impl(it.value(), key.empty() ? it.key() : key + "." + it.key(), out);
    }
    return;
  }
  if (j.is_array()) {
    const bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) {
      return e.is_number() || e.is_boolean() || e.is_null();
    });
    if (flat) {
      out += key + ":";
      for (const auto& e : j) out += " " + scalar_text(e);
      out += "\n";
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) {
      text_impl(j[i], key + "[" + std::to_string(i) + "]", out);
    }
    return;
  }
  out += key + ": " + scalar_text(j) + "\n";
}

}  // namespace

const Subspace& PairInput::at(const std::string& name) const {
  const Subspace* s = find(name);
  if (!s) fail(ErrorKind::Input, "input is missing subspace \"" + name + "\"");
  return *s;
}

const Subspace* PairInput::find(const std::string& name) const {
  const auto it = subspaces.find(name);
  return it == subspaces.end() ? nullptr : &it->second;
}

PairInput parse_pair_input(const Json& doc, const TolerancePolicy& base) {
  if (!doc.is_object()) fail(ErrorKind::Input, "input must be a JSON object");
  if (!doc.contains("ambient_dim") || !doc["ambient_dim"].is_number_integer() ||
      doc["ambient_dim"].get<long long>() < 0) {
    fail(ErrorKind::Input, "input needs a nonnegative integer \"ambient_dim\"");
  }
  PairInput in;
  in.ambient_dim = static_cast<Index>(doc["ambient_dim"].get<long long>());
  in.tol = base;
  if (doc.contains("tolerances")) {
    const Json& t = doc["tolerances"];
    if (!t.is_object()) fail(ErrorKind::Input, "\"tolerances\" must be an object");
    in.tol.rank_rel = get_unit(t, "rank_rel", in.tol.rank_rel);
    in.tol.rank_abs = get_unit(t, "rank_abs", in.tol.rank_abs);
    in.tol.angle_tol = get_unit(t, "angle_tol", in.tol.angle_tol);
    in.tol.subspace_tol = get_unit(t, "subspace_tol", in.tol.subspace_tol);
  }
  in.tol.validate();

  if (!doc.contains("subspaces") || !doc["subspaces"].is_object()) {
    fail(ErrorKind::Input, "input needs a \"subspaces\" object");
  }
  for (auto it = doc["subspaces"].begin(); it != doc["subspaces"].end(); ++it) {
    const Matrix rows = parse_rows(it.value(), "subspaces." + it.key(), in.ambient_dim);
    in.subspaces.emplace(it.key(), Subspace::from_columns(rows.transpose(), in.tol));
  }
  if (!in.find("M") || !in.find("N")) {
    fail(ErrorKind::Input, "input must define at least subspaces M and N");
  }
  auto square = [&](const char* key) -> std::optional<Matrix> {
    if (!doc.contains(key)) return std::nullopt;
    Matrix a = parse_rows(doc[key], key, in.ambient_dim);
    if (a.rows() != in.ambient_dim) {
      fail(ErrorKind::Input, std::string(key) + " must be a square matrix of the ambient size");
    }
    return a;
  };
  in.S = square("S");
  in.U_map = square("U_map");
  if (doc.contains("C")) {
    if (!doc["C"].is_number()) fail(ErrorKind::Input, "\"C\" must be a number");
    in.C = doc["C"].get<double>();
  }
  if (doc.contains("epsilon") && !doc["epsilon"].is_null()) {
    if (!doc["epsilon"].is_number()) fail(ErrorKind::Input, "\"epsilon\" must be a number");
    in.epsilon = doc["epsilon"].get<double>();
  }
  return in;
}

PairInput load_pair_input(const std::string& path, const TolerancePolicy& base) {
  std::ifstream file(path);
  if (!file) fail(ErrorKind::Input, "cannot open input file '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(file);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Input, "malformed JSON in '" + path + "': " + e.what());
  }
  return parse_pair_input(doc, base);
}

Json matrix_to_json(const Matrix& a) {
  Json rows = Json::array();
  for (Index i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < a.cols(); ++j) row.push_back(a(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json subspace_to_json(const Subspace& s) { return matrix_to_json(s.basis().transpose()); }

Json vector_to_json(const std::vector<double>& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(x);
  return out;
}

Json tolerances_to_json(const TolerancePolicy& tol) {
  Json t = Json::object();
  t["rank_rel"] = tol.rank_rel;
  t["rank_abs"] = tol.rank_abs;
  t["angle_tol"] = tol.angle_tol;
  t["subspace_tol"] = tol.subspace_tol;
  return t;
}

std::string dump_json(const Json& j, int indent) {
  std::string out;
  dump_impl(j, indent, 0, out);
  out += "\n";
  return out;
}

std::string dump_text(const Json& j) {
  std::string out;
  text_impl(j, "", out);
  return out;
}

}  // namespace ccomp::cli
