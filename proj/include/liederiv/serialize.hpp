#pragma once
// JSON schema for graded groups: one record per degree with fields
// degree, free_rank, torsion (list of "p^e" strings).

#include <json.hpp>

#include "liederiv/abelian.hpp"

namespace liederiv {

inline nlohmann::json graded_to_json(const GradedAbGroup& g) {
  nlohmann::json arr = nlohmann::json::array();
  for (auto& [d, comp] : g.components()) {
    nlohmann::json torsion = nlohmann::json::array();
    for (auto& [pp, c] : comp.torsion())
      for (long long i = 0; i < c; ++i)
        torsion.push_back(std::to_string(pp.p) + "^" + std::to_string(pp.e));
    arr.push_back({{"degree", d}, {"free_rank", comp.free_rank()}, {"torsion", torsion}});
  }
  return arr;
}

inline GradedAbGroup graded_from_json(const nlohmann::json& arr) {
  GradedAbGroup g;
  for (auto& rec : arr) {
    FgAbGroup comp = FgAbGroup::free_of_rank(rec.at("free_rank").get<long long>());
    for (auto& t : rec.at("torsion")) {
      std::string s = t.get<std::string>();
      auto caret = s.find('^');
      comp.add_block(std::stoll(s.substr(0, caret)), std::stoi(s.substr(caret + 1)));
    }
    g.add(rec.at("degree").get<int>(), comp);
  }
  return g;
}

}  // namespace liederiv
