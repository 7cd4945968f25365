#pragma once

// JSON schemas for the three input kinds:
//   matroid      {"n": 3, "bases": [[1,2],[1,3],[2,3]]}
//   set function {"n": 3, "z": {"1": 6, "1,2": 10, ...}}  (empty set omitted)
//   family       {"n": 2, "family": {"1,2": "x1^3", "2,1": "x2^3"}}
// plus helpers for subset flags like "2,3".

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qbrion/errors.hpp"
#include "qbrion/laurent.hpp"
#include "qbrion/matroid.hpp"
#include "qbrion/permutation.hpp"
#include "qbrion/plaur.hpp"
#include "qbrion/setfunction.hpp"

namespace qbrion {

using Json = nlohmann::ordered_json;

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return j;
}

// "2,3" -> bitmask {2,3}; elements must be within 1..n and distinct.
inline GroundSubset parse_subset(const std::string& text, int n) {
  GroundSubset s = 0;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw ParseError("empty element in subset '" + text + "'");
    int v;
    try {
      v = std::stoi(tok);
    } catch (...) {
      throw ParseError("bad element '" + tok + "' in subset '" + text + "'");
    }
    if (v < 1 || v > n)
      throw ParseError("element " + std::to_string(v) + " outside 1.." + std::to_string(n));
    if (s & element_mask(v)) throw ParseError("repeated element in subset '" + text + "'");
    s |= element_mask(v);
  }
  return s;
}

inline std::string subset_key(GroundSubset s) {
  std::string out;
  for (int e : subset_elements(s)) {
    if (!out.empty()) out += ",";
    out += std::to_string(e);
  }
  return out;
}

inline int parse_ground_size(const Json& j, const std::string& what) {
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw ParseError(what + ": missing integer field 'n'");
  int n = j["n"].get<int>();
  if (n < 1 || n > 12) throw ParseError(what + ": n must be between 1 and 12");
  return n;
}

inline Matroid parse_matroid(const Json& j) {
  int n = parse_ground_size(j, "matroid");
  if (!j.contains("bases") || !j["bases"].is_array())
    throw ParseError("matroid: missing array field 'bases'");
  std::vector<GroundSubset> bases;
  for (const auto& b : j["bases"]) {
    if (!b.is_array()) throw ParseError("matroid: each basis must be an array");
    GroundSubset mask = 0;
    for (const auto& e : b) {
      if (!e.is_number_integer()) throw ParseError("matroid: basis elements must be integers");
      int v = e.get<int>();
      if (v < 1 || v > n)
        throw ParseError("matroid: element " + std::to_string(v) + " outside ground set");
      mask |= element_mask(v);
    }
    bases.push_back(mask);
  }
  Matroid m(n, std::move(bases));
  m.validate();
  return m;
}

inline Json matroid_to_json(const Matroid& m) {
  Json j;
  j["n"] = m.size();
  Json arr = Json::array();
  for (GroundSubset b : m.bases()) arr.push_back(subset_elements(b));
  j["bases"] = arr;
  return j;
}

// `require_submodular` enforces the generalized-permutohedron reading;
// delta-coefficient data skips it.
inline SetFunction parse_set_function(const Json& j, bool require_submodular) {
  int n = parse_ground_size(j, "set function");
  if (!j.contains("z") || !j["z"].is_object())
    throw ParseError("set function: missing object field 'z'");
  SetFunction z(n);
  for (const auto& [key, val] : j["z"].items()) {
    GroundSubset s = parse_subset(key, n);
    if (s == 0) throw ParseError("set function: the empty set is implicit and must be 0");
    if (!val.is_number_integer()) throw ParseError("set function: values must be integers");
    z.set(s, val.get<long long>());
  }
  if (require_submodular) {
    if (auto witness = z.submodularity_violation()) {
      throw ValidationError("set function is not submodular: z(A)+z(B) < z(AuB)+z(AnB) for A=" +
                            subset_to_string(witness->first) + ", B=" +
                            subset_to_string(witness->second));
    }
  }
  return z;
}

inline Json set_function_to_json(const SetFunction& z) {
  Json j;
  j["n"] = z.size();
  Json zz = Json::object();
  for (GroundSubset s = 1; s <= full_set(z.size()); ++s) zz[subset_key(s)] = z.at(s);
  j["z"] = zz;
  return j;
}

inline PiecewiseLaurent parse_family(const Json& j) {
  int n = parse_ground_size(j, "family");
  if (!j.contains("family") || !j["family"].is_object())
    throw ParseError("family: missing object field 'family'");
  PiecewiseLaurent f(n, n);
  std::vector<bool> seen(factorial(n), false);
  for (const auto& [key, val] : j["family"].items()) {
    Permutation sigma;
    std::stringstream ss(key);
    std::string tok;
    while (std::getline(ss, tok, ',')) sigma.push_back(std::stoi(tok));
    if (!is_bijection_of(sigma, n))
      throw ParseError("family: key '" + key + "' is not a permutation of 1.." +
                       std::to_string(n));
    if (!val.is_string()) throw ParseError("family: values must be polynomial strings");
    std::uint64_t idx = perm_index(sigma);
    if (seen[idx]) throw ParseError("family: duplicate key '" + key + "'");
    seen[idx] = true;
    f.at_index(idx) = LaurentPoly::parse(val.get<std::string>(), n);
  }
  for (std::uint64_t i = 0; i < f.family_size(); ++i)
    if (!seen[i]) {
      Permutation sigma = perm_at(n, i);
      std::string key;
      for (int v : sigma) key += (key.empty() ? "" : ",") + std::to_string(v);
      throw ParseError("family: missing entry for permutation " + key);
    }
  f.validate();
  return f;
}

inline std::string perm_key(const Permutation& sigma) {
  std::string key;
  for (int v : sigma) key += (key.empty() ? "" : ",") + std::to_string(v);
  return key;
}

inline Json family_to_json(const PiecewiseLaurent& f) {
  Json j;
  j["n"] = f.ground();
  Json fam = Json::object();
  for (std::uint64_t i = 0; i < f.family_size(); ++i)
    fam[perm_key(perm_at(f.ground(), i))] = f.at_index(i).to_text();
  j["family"] = fam;
  return j;
}

}  // namespace qbrion
