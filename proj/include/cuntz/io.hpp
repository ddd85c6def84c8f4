#pragma once

#include <json.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cuntz/algebra.hpp"
#include "cuntz/cocycles.hpp"
#include "cuntz/volterra.hpp"
#include "cuntz/words.hpp"

namespace cuntz {

// Structured file formats.  Rationals travel as "p/q" strings so that no
// precision is lost in transit.

inline nlohmann::json word_to_json(const Word& w) {
  nlohmann::json j = nlohmann::json::array();
  for (int a : w.letters()) j.push_back(a);
  return j;
}

inline Word word_from_json(const nlohmann::json& j, int n) {
  std::vector<int> letters;
  for (const auto& v : j) letters.push_back(v.get<int>());
  Word w(std::move(letters));
  validate_letters(w, n);
  return w;
}

inline nlohmann::json element_to_json(const AlgebraElement& a) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [c, v] : a.terms()) {
    terms.push_back({{"alpha", word_to_json(c.alpha)},
                     {"beta", word_to_json(c.beta)},
                     {"re", rational_to_string(v.re)},
                     {"im", rational_to_string(v.im)}});
  }
  return {{"n", a.n()}, {"terms", std::move(terms)}};
}

inline AlgebraElement element_from_json(const nlohmann::json& j) {
  int n = j.at("n").get<int>();
  std::vector<std::pair<Cylinder, ComplexQ>> raw;
  for (const auto& t : j.at("terms")) {
    raw.emplace_back(
        Cylinder{word_from_json(t.at("alpha"), n), word_from_json(t.at("beta"), n)},
        ComplexQ(parse_rational(t.at("re").get<std::string>()),
                 parse_rational(t.at("im").get<std::string>())));
  }
  return AlgebraElement::from_terms(n, std::move(raw));
}

inline nlohmann::json depth_function_to_json(const DepthFunction& f) {
  nlohmann::json table = nlohmann::json::array();
  for (const auto& [w, v] : f.table())
    table.push_back({{"word", word_to_json(w)}, {"value", rational_to_string(v)}});
  return {{"n", f.n()}, {"depth", f.depth()}, {"table", std::move(table)}};
}

inline DepthFunction depth_function_from_json(const nlohmann::json& j) {
  int n = j.at("n").get<int>();
  std::size_t depth = j.at("depth").get<std::size_t>();
  std::map<Word, Rational> table;
  for (const auto& row : j.at("table"))
    table.emplace(word_from_json(row.at("word"), n),
                  parse_rational(row.at("value").get<std::string>()));
  return DepthFunction(n, depth, std::move(table));
}

inline nlohmann::json phi_to_json(const PhiValue& phi) {
  nlohmann::json poly = nlohmann::json::array();
  for (const auto& [k, v] : phi.poly)
    poly.push_back(
        {{"k", k}, {"re", rational_to_string(v.re)}, {"im", rational_to_string(v.im)}});
  std::string cls = phi.point_class == PointClass::GENERIC    ? "GENERIC"
                    : phi.point_class == PointClass::TAIL_ONE ? "TAIL_ONE"
                                                              : "TAIL_N";
  return {{"class", cls}, {"poly", std::move(poly)}};
}

}  // namespace cuntz
