#include "cdyn/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cdyn/error.hpp"

namespace cdyn {

namespace {

using json = nlohmann::json;

void only_keys(const json& j, const std::string& where, const std::set<std::string>& allowed) {
  if (!j.is_object()) throw ConfigError(where + ": expected an object");
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) throw ConfigError(where + ": unknown key \"" + k + "\"");
}

const json& require(const json& j, const std::string& where, const std::string& key) {
  if (!j.contains(key)) throw ConfigError(where + ": missing key \"" + key + "\"");
  return j.at(key);
}

int as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ConfigError(where + ": expected an integer");
  return j.get<int>();
}

double as_real(const json& j, const std::string& where) {
  if (!j.is_number()) throw ConfigError(where + ": expected a number");
  return j.get<double>();
}

Mat as_matrix(const json& j, Eigen::Index d, const std::string& where) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != d)
    throw ConfigError(where + ": expected " + std::to_string(d) + " rows");
  Mat m(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const json& row = j[i];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != d)
      throw ConfigError(where + ": row " + std::to_string(i) + " must have " + std::to_string(d) + " entries");
    for (Eigen::Index k = 0; k < d; ++k) {
      const json& e = row[k];
      if (!e.is_array() || e.size() != 2) throw ConfigError(where + ": entries are [re, im] pairs");
      m(i, k) = cplx(as_real(e[0], where), as_real(e[1], where));
    }
  }
  return m;
}

std::vector<Mat> as_matrices(const json& j, Eigen::Index d, const std::string& where) {
  if (!j.is_array()) throw ConfigError(where + ": expected an array of matrices");
  std::vector<Mat> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_matrix(j[i], d, where + "[" + std::to_string(i) + "]"));
  return out;
}

AlgebraKind algebra_kind(const std::string& s) {
  if (s == "full") return AlgebraKind::Full;
  if (s == "diagonal") return AlgebraKind::Diagonal;
  if (s == "explicit") return AlgebraKind::Explicit;
  throw ConfigError("algebra.kind: unknown kind \"" + s + "\"");
}

DynSystem build_system(const json& root) {
  const json& grp = require(root, "config", "group");
  only_keys(grp, "group", {"factors"});
  const json& fj = require(grp, "group", "factors");
  if (!fj.is_array() || fj.empty()) throw ConfigError("group.factors: expected a non-empty array");
  std::vector<int> factors;
  for (const json& f : fj) factors.push_back(as_int(f, "group.factors"));
  for (int f : factors)
    if (f < 1) throw ConfigError("group.factors: factors must be positive");
  const FiniteAbelianGroup g(factors);

  const int d = as_int(require(root, "config", "dim"), "dim");
  if (d < 1) throw ConfigError("dim: must be positive");

  const double tol = root.contains("tol") ? as_real(root.at("tol"), "tol") : 1e-9;

  const json& alg = require(root, "config", "algebra");
  only_keys(alg, "algebra", {"kind", "basis"});
  const json& kj = require(alg, "algebra", "kind");
  if (!kj.is_string()) throw ConfigError("algebra.kind: expected a string");
  const AlgebraKind kind = algebra_kind(kj.get<std::string>());
  std::vector<Mat> basis;
  if (alg.contains("basis")) {
    if (kind != AlgebraKind::Explicit) throw ConfigError("algebra.basis: only allowed with kind \"explicit\"");
    basis = as_matrices(alg.at("basis"), d, "algebra.basis");
  } else if (kind == AlgebraKind::Explicit) {
    throw ConfigError("algebra: kind \"explicit\" needs a basis");
  }

  const json& act = require(root, "config", "action");
  only_keys(act, "action", {"kind", "data"});
  const json& akj = require(act, "action", "kind");
  if (!akj.is_string()) throw ConfigError("action.kind: expected a string");
  const std::string ak = akj.get<std::string>();
  const bool has_data = act.contains("data") && !act.at("data").is_null();

  if (ak == "trivial" || ak == "cyclic-shift") {
    if (has_data) throw ConfigError("action.data: not used by kind \"" + ak + "\"");
    if (ak == "trivial") return trivial_system(g, d, kind, basis, tol);
    if (g.rank() != 1 || static_cast<std::size_t>(d) != g.order())
      throw ConfigError("cyclic-shift: needs a cyclic group with dim = |G|");
    return cyclic_shift_system(g, kind, basis, tol);
  }
  if (!has_data) throw ConfigError("action.data: required by kind \"" + ak + "\"");
  const json& data = act.at("data");
  if (ak == "diagonal-characters") {
    if (!data.is_array() || static_cast<int>(data.size()) != d)
      throw ConfigError("action.data: expected " + std::to_string(d) + " characters");
    std::vector<DualElement> chars;
    for (const json& c : data) {
      if (!c.is_array() || c.size() != g.rank()) throw ConfigError("action.data: character has wrong rank");
      DualElement x;
      for (std::size_t j = 0; j < g.rank(); ++j) {
        const int r = as_int(c[j], "action.data");
        if (r < 0 || r >= g.factors()[j]) throw ConfigError("action.data: residue out of range");
        x.residues.push_back(r);
      }
      chars.push_back(x);
    }
    return diagonal_character_system(g, chars, kind, basis, tol);
  }
  if (ak == "explicit") {
    const std::vector<Mat> gens = as_matrices(data, d, "action.data");
    if (gens.size() != g.rank()) throw ConfigError("action.data: expected one unitary per factor");
    std::vector<Mat> u;
    for (std::size_t t = 0; t < g.order(); ++t) {
      Mat m = Mat::Identity(d, d);
      const GroupElement e = g.element(t);
      for (std::size_t j = 0; j < g.rank(); ++j)
        for (int p = 0; p < e.residues[j]; ++p) m = gens[j] * m;
      u.push_back(m);
    }
    return DynSystem(g, u, make_algebra(d, kind, basis), tol);
  }
  throw ConfigError("action.kind: unknown kind \"" + ak + "\"");
}

}  // namespace

SystemConfig parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  only_keys(root, "config", {"group", "dim", "action", "algebra", "tol", "elements"});
  SystemConfig cfg{build_system(root), {}};
  if (root.contains("elements")) {
    const json& el = root.at("elements");
    if (!el.is_object()) throw ConfigError("elements: expected an object");
    for (const auto& [name, m] : el.items()) {
      Mat a = as_matrix(m, cfg.system.dim(), "elements." + name);
      if (cfg.system.algebra().residual(a) > cfg.system.tol() * (1.0 + op_norm(a)))
        throw ConfigError("elements." + name + ": not in the algebra");
      cfg.elements.emplace(name, std::move(a));
    }
  }
  return cfg;
}

SystemConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace cdyn
