#pragma once

// JSON dumps of sampled objects for fixtures and inspection.

#include <string>

#include "choose2/configuration_ladder.hpp"
#include "choose2/cosimplicial.hpp"
#include "choose2/kontsevich.hpp"
#include "choose2/report.hpp"
#include "choose2/sampling.hpp"
#include "choose2/sphere_map.hpp"

namespace choose2 {

inline constexpr int kSampleSchemaVersion = 1;

inline json to_json(const Configuration& c) {
  json pts = json::array();
  for (int i = 1; i <= c.arity(); ++i) pts.push_back(to_json(c.point(i)));
  return {{"k", c.arity()}, {"n", c.dim()}, {"points", pts}};
}

// Pairs in ordinal order, each with its stored (i < j) vector.
inline json to_json(const SphereMap& f) {
  json pairs = json::array();
  for (int i = 1; i <= f.arity(); ++i)
    for (int j = i + 1; j <= f.arity(); ++j)
      pairs.push_back({{"i", i}, {"j", j}, {"value", to_json(f.stored(i, j))}});
  return {{"k", f.arity()}, {"n", f.dim()}, {"southPole", to_json(f.south_pole())}, {"pairs", pairs}};
}

inline json to_json(const DecoratedConfiguration& dc) {
  return {{"configuration", to_json(dc.config)}, {"map", to_json(dc.f)}};
}

inline json to_json(const BoundaryAnchors& a) {
  return {{"minus", to_json(a.minus)}, {"plus", to_json(a.plus)}, {"u", to_json(a.u)}};
}

inline json sample_envelope(const std::string& kind, json parameters, json payload) {
  return {{"schemaVersion", kSampleSchemaVersion},
          {"kind", kind},
          {"version", kVersion},
          {"parameters", std::move(parameters)},
          {"payload", std::move(payload)}};
}

// Each level's first corpus element with all its coface and codegeneracy images.
template <class T>
json dump_ladder(const CosimplicialLadder<T>& L) {
  json levels = json::array();
  for (int k = 0; k <= L.levels && k < static_cast<int>(L.corpus.size()); ++k) {
    if (L.corpus[k].empty()) continue;
    const T& x = L.corpus[k].front();
    json maps = json::array();
    if (k < L.levels)
      for (int i = 0; i <= k + 1; ++i)
        maps.push_back({{"map", "d^" + std::to_string(i)}, {"value", to_json(L.coface(k, i, x))}});
    for (int j = 0; j < k; ++j)
      maps.push_back({{"map", "s^" + std::to_string(j)}, {"value", to_json(L.codegeneracy(k, j, x))}});
    levels.push_back({{"level", k}, {"element", to_json(x)}, {"images", maps}});
  }
  return {{"flavor", L.flavor}, {"m", L.m}, {"levels", levels}};
}

}  // namespace choose2
