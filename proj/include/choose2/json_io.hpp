#pragma once

#include "choose2/choose_two.hpp"
#include "choose2/combinatorics.hpp"
#include "choose2/divided_powers.hpp"
#include "choose2/report.hpp"

namespace choose2 {

inline json to_json(const Composition& c) {
  return json(std::vector<int>(c.parts().begin(), c.parts().end()));
}

inline json to_json(const BElement& e) {
  json j{{"arity", e.arity()}};
  j["pair"] = e.is_basepoint() ? json(nullptr) : json::array({e.first(), e.second()});
  return j;
}

inline json to_json(const WedgeElement& w) {
  if (w.is_basepoint()) return json{{"basepoint", true}};
  return json{{"slot", w.slot()}, {"element", to_json(w.element())}};
}

inline json to_json(const GammaBElement& e) {
  return json{{"m", e.rows()}, {"blocks", e.blocks()}, {"element", to_json(e.element())}};
}

}  // namespace choose2
