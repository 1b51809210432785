// JSON, CSV and DOT serialization. JSON objects use nlohmann's default
// (alphabetically ordered) key storage so output bytes are stable for a
// fixed input.

#pragma once

#include "alcove/good_position.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace alcove {

using json = nlohmann::json;

inline json to_json(const RatVec& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(to_string(c));
  return a;
}

inline RatVec rat_vec_from_json(const json& a) {
  RatVec v;
  for (const auto& c : a)
    v.push_back(c.is_string() ? parse_rational(c.get<std::string>())
                              : Rat(c.get<Int>()));
  return v;
}

inline json to_json(const RootSystem& R) {
  json j;
  j["label"] = R.label;
  j["rank"] = R.rank;
  json roots = json::array();
  for (const auto& r : R.roots) roots.push_back(r.coords);
  j["roots"] = roots;
  j["simple_indices"] = R.simple_indices;
  return j;
}

// Parses the factor list out of a label like "A2" or "A1xB2".
inline RootSystemPtr root_system_from_label(const std::string& label) {
  std::vector<std::pair<char, int>> factors;
  size_t pos = 0;
  while (pos < label.size()) {
    size_t next = label.find('x', pos);
    if (next == std::string::npos) next = label.size();
    std::string tok = label.substr(pos, next - pos);
    if (tok.size() < 2) throw std::invalid_argument("bad type label: " + label);
    factors.push_back({tok[0], std::stoi(tok.substr(1))});
    pos = next + 1;
  }
  return build_root_system(factors);
}

inline RootSystemPtr root_system_from_json(const json& j) {
  auto rs = root_system_from_label(j.at("label").get<std::string>());
  if (j.contains("roots")) {
    json roots = json::array();
    for (const auto& r : rs->roots) roots.push_back(r.coords);
    if (j.at("roots") != roots)
      throw std::invalid_argument("root data does not match the label " + rs->label);
  }
  return rs;
}

inline json to_json(const AffineElement& e) {
  json j;
  j["linear"] = e.linear().perm;
  j["translation"] = to_json(e.translation());
  return j;
}

// Named linear parts: "id", "s<i>" (also plain "s" for rank one), "w0",
// "delta"; otherwise an explicit root permutation.
inline Automorphism linear_from_json(const RootSystem& R, const json& j) {
  if (j.is_string()) {
    std::string name = j.get<std::string>();
    if (name == "id") return identity_automorphism(R);
    if (name == "w0") return longest_element(R);
    if (name == "delta") return diagram_flip(R);
    if (name == "s") name = "s1";
    if (name.size() >= 2 && name[0] == 's') {
      int i = std::stoi(name.substr(1));
      if (i < 1 || i > R.rank) throw std::invalid_argument("no simple reflection " + name);
      return simple_reflection(R, i - 1);
    }
    throw std::invalid_argument("unknown linear part name: " + name);
  }
  std::vector<int> perm = j.get<std::vector<int>>();
  if (perm.size() != R.roots.size())
    throw std::invalid_argument("linear part permutation has wrong size");
  std::vector<int> images;
  for (int i : R.simple_indices) {
    if (perm[i] < 0 || perm[i] >= (int)R.roots.size())
      throw std::invalid_argument("permutation entry out of range");
    images.push_back(perm[i]);
  }
  auto a = automorphism_from_simple_images(R, images);
  if (!a || a->perm != perm)
    throw std::invalid_argument("permutation is not a root-system automorphism");
  return *a;
}

inline AffineElement element_from_json(RootSystemPtr rs, const json& j) {
  if (j.is_string())
    return linear_element(rs, linear_from_json(*rs, j));
  Automorphism lin = j.contains("linear") ? linear_from_json(*rs, j.at("linear"))
                                          : identity_automorphism(*rs);
  RatVec t = j.contains("translation") ? rat_vec_from_json(j.at("translation"))
                                       : RatVec(rs->rank, Rat(0));
  return AffineElement(std::move(rs), std::move(lin), std::move(t));
}

inline json to_json(const PositiveSubsystem& ps, const RootSystem& R) {
  json j;
  json pos = json::array();
  for (int i : ps.positives) pos.push_back(R.roots[i].coords);
  j["positive_roots"] = pos;
  json mem = json::array();
  for (int i : ps.members) mem.push_back(R.roots[i].coords);
  j["members"] = mem;
  return j;
}

inline json to_json(const GoodPositionReport& r, const RootSystem& R) {
  json j;
  j["chamber"] = to_json(r.chamber, R);
  j["alcove_floors"] = r.alcove_floors;
  j["w_c"] = to_json(r.w_c);
  j["len_t_lambda"] = r.len_t_lambda;
  j["len_t_lambda_theta"] = r.len_t_lambda_theta;
  j["len_theta"] = r.len_theta;
  j["good_position_holds"] = r.good_position_holds;
  j["length_additivity_holds"] = r.length_additivity_holds;
  j["bruhat_comparison_holds"] = r.bruhat_comparison_holds;
  j["weak_bruhat_holds"] = r.weak_bruhat_holds;
  return j;
}

inline json to_json(const WitnessCertificate& c) {
  json j;
  j["lambda"] = to_json(c.lambda);
  j["witness"] = to_json(c.witness);
  j["alcove_floors"] = c.alcove_floors;
  j["len_t_lambda"] = c.len_t_lambda;
  j["len_witness"] = c.len_witness;
  j["len_complement"] = c.len_complement;
  j["length_equality"] = c.length_equality;
  j["admissible"] = c.admissible;
  return j;
}

// One row per element: canonical form, length, kappa class, translation flag.
inline json admissible_rows_json(const AdmissibleSet& s, const Alcove& C) {
  json rows = json::array();
  for (const auto& e : s.elements) {
    json row;
    row["element"] = to_json(e);
    row["canonical"] = to_string(e);
    row["length"] = length(e, C);
    row["kappa"] = to_string(kappa(e, C));
    row["is_translation"] = e.is_translation();
    rows.push_back(row);
  }
  return rows;
}

inline std::string admissible_rows_csv(const AdmissibleSet& s, const Alcove& C) {
  std::ostringstream os;
  os << "canonical,length,kappa,is_translation\n";
  for (const auto& e : s.elements)
    os << "\"" << to_string(e) << "\"," << length(e, C) << ",\"" << to_string(kappa(e, C))
       << "\"," << (e.is_translation() ? 1 : 0) << "\n";
  return os.str();
}

// Hasse diagram of the Bruhat order restricted to the set; edges are
// covering relations, found among one-letter deletions.
inline std::string bruhat_dot(const std::vector<AffineElement>& elems, const Alcove& C) {
  std::vector<AffineElement> sorted = elems;
  std::sort(sorted.begin(), sorted.end(), [&](const AffineElement& a, const AffineElement& b) {
    Int la = length(a, C), lb = length(b, C);
    if (la != lb) return la < lb;
    return a < b;
  });
  auto node_id = [&](const AffineElement& e) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), e,
                               [&](const AffineElement& a, const AffineElement& b) {
                                 Int la = length(a, C), lb = length(b, C);
                                 if (la != lb) return la < lb;
                                 return a < b;
                               });
    return (int)(it - sorted.begin());
  };
  std::ostringstream os;
  os << "digraph bruhat {\n  rankdir=BT;\n";
  for (size_t i = 0; i < sorted.size(); ++i)
    os << "  n" << i << " [label=\"" << to_string(sorted[i]) << " (l=" << length(sorted[i], C)
       << ")\"];\n";
  for (size_t i = 0; i < sorted.size(); ++i) {
    Int li = length(sorted[i], C);
    for (const auto& d : one_letter_deletions(sorted[i], C)) {
      if (length(d, C) != li - 1) continue;
      if (!std::binary_search(sorted.begin(), sorted.end(), d,
                              [&](const AffineElement& a, const AffineElement& b) {
                                Int la = length(a, C), lb = length(b, C);
                                if (la != lb) return la < lb;
                                return a < b;
                              }))
        continue;
      os << "  n" << node_id(d) << " -> n" << i << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace alcove
