#pragma once

#include <json.hpp>

#include "stabrange/charpoly.hpp"
#include "stabrange/coinv.hpp"
#include "stabrange/config_spaces.hpp"
#include "stabrange/partition.hpp"
#include "stabrange/ranges.hpp"
#include "stabrange/symchar.hpp"
#include "stabrange/witness.hpp"

namespace stabrange {

// Insertion-ordered so emitted objects read in the documented key order.
using json = nlohmann::ordered_json;

inline json partition_to_json(const Partition& p) {
  return json(p.parts());
}

inline Partition partition_from_json(const json& j) {
  std::vector<int> parts = j.get<std::vector<int>>();
  return Partition(std::move(parts));
}

// All cycle types carry explicit values, in the canonical partition order.
inline json class_function_to_json(const ClassFunction& f) {
  json values = json::array();
  for (const auto& lambda : partitions_of(f.n()))
    values.push_back({{"cycle_type", partition_to_json(lambda)},
                      {"value", rat_to_string(f.value(lambda))}});
  return json{{"n", f.n()}, {"values", values}};
}

inline ClassFunction class_function_from_json(const json& j) {
  ClassFunction f(j.at("n").get<int>());
  for (const auto& entry : j.at("values"))
    f.set(partition_from_json(entry.at("cycle_type")),
          rat_from_string(entry.at("value").get<std::string>()));
  return f;
}

inline json charpoly_to_json(const CharPoly& p) {
  // Expanded monomial terms in display order.
  std::vector<std::pair<CharPoly::Exponents, Rat>> terms(p.terms().begin(),
                                                         p.terms().end());
  json out = json::array();
  for (const auto& [e, c] : terms)
    out.push_back({{"exponents", e}, {"coeff", rat_to_string(c)}});
  return out;
}

inline CharPoly charpoly_from_json(const json& j) {
  CharPoly p;
  for (const auto& term : j) {
    CharPoly::Exponents e = term.at("exponents").get<CharPoly::Exponents>();
    p.add_term(e, rat_from_string(term.at("coeff").get<std::string>()));
  }
  return p;
}

inline json stable_ranges_to_json(const StableRanges& r) {
  return json{{"t0", r.t0},   {"t1", r.t1},       {"A", r.A},
              {"hmax", r.hmax}, {"delta", r.delta}, {"M", r.M}};
}

inline json lit_ranges_to_json(const LitRanges& r) {
  json out{{"t0", r.t0},     {"t1", r.t1},       {"A", r.A},
           {"hmax", r.hmax}, {"delta", r.delta}};
  out["M"] = r.M.has_value() ? json(*r.M) : json(nullptr);
  return out;
}

inline json multidegree_dims_to_json(
    const std::map<MultiDegree, long long>& dims) {
  json out = json::array();
  for (const auto& [J, dim] : dims)
    out.push_back({{"J", J.degrees()}, {"dim", dim}});
  return out;
}

inline json witness_profile_to_json(const WitnessProfile& p) {
  json ti = json::array();
  for (int i = 0; i <= 6; ++i) ti.push_back(p.t(i));
  return json{{"t", ti},
              {"regularity", p.regularity},
              {"c", p.triple.c},
              {"g", p.triple.g},
              {"ranges", stable_ranges_to_json(p.ranges)},
              {"sharp", p.sharp}};
}

inline json sharpness_report_to_json(const SharpnessReport& r) {
  return json{{"family", witness_kind_name(r.family.kind)},
              {"param", r.family.param},
              {"poly_fit_ok", r.poly_fit_ok},
              {"below_threshold_ok", r.below_threshold_ok},
              {"specht_stable_ok", r.specht_stable_ok},
              {"specht_below_ok", r.specht_below_ok},
              {"negative_value_below", r.negative_value_below},
              {"passed", r.passed()},
              {"notes", r.notes}};
}

}  // namespace stabrange
