#pragma once

// Machine-readable report records. JSON objects carry a top-level
// "schema": 1 field, all big integers travel as decimal strings, and no
// timestamps are emitted, so equal inputs give byte-identical output.

#include <json.hpp>

#include <string>

#include "aperylike/prime_survey.hpp"

namespace aperylike {

using Json = nlohmann::json;

inline constexpr int k_report_schema = 1;

// generic verdict record: claim id, parameter range, pass/fail, witness
struct Verdict {
  std::string claim;
  Json range = Json::object();
  bool pass = false;
  Json witness;                 // null when pass
  Json info = Json::object();  // informational extras (sharpness, values...)

  bool operator==(const Verdict&) const = default;
};

inline Json to_json(const Verdict& v) {
  return Json{{"schema", k_report_schema},
              {"kind", "verdict"},
              {"claim", v.claim},
              {"range", v.range},
              {"pass", v.pass},
              {"witness", v.witness},
              {"info", v.info}};
}

inline Verdict verdict_from_json(const Json& j) {
  Verdict v;
  v.claim = j.at("claim").get<std::string>();
  v.range = j.at("range");
  v.pass = j.at("pass").get<bool>();
  v.witness = j.at("witness");
  v.info = j.at("info");
  return v;
}

inline Json to_json(const SurveyReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"prime", row.prime},
                        {"divides", row.divides},
                        {"first_zero_index",
                         row.divides ? Json(row.first_zero_index) : Json(nullptr)}});
  }
  Json curve = Json::array();
  for (const auto& pt : r.curve)
    curve.push_back(Json{{"prime", pt.prime},
                         {"non_dividing", pt.non_dividing},
                         {"primes_seen", pt.primes_seen}});
  return Json{{"schema", k_report_schema},
              {"kind", "survey"},
              {"id", r.id},
              {"bound", r.bound},
              {"total_primes", r.total_primes},
              {"non_dividing_primes", r.non_dividing_primes},
              {"proportion",
               Json{{"numerator", std::to_string(r.non_dividing_count())},
                    {"denominator", std::to_string(r.total_primes)},
                    {"decimal", r.proportion_decimal()}}},
              {"heuristic_limit", k_limit_non_dividing},
              {"rows", rows},
              {"curve", curve}};
}

inline SurveyReport survey_from_json(const Json& j) {
  SurveyReport r;
  r.id = j.at("id").get<std::string>();
  r.bound = j.at("bound").get<std::uint64_t>();
  r.total_primes = j.at("total_primes").get<long>();
  r.non_dividing_primes = j.at("non_dividing_primes").get<std::vector<std::uint64_t>>();
  for (const auto& row : j.at("rows")) {
    DivideVerdict d;
    d.prime = row.at("prime").get<std::uint64_t>();
    d.divides = row.at("divides").get<bool>();
    d.first_zero_index = row.at("first_zero_index").is_null()
                             ? -1
                             : row.at("first_zero_index").get<long>();
    r.rows.push_back(d);
  }
  for (const auto& pt : j.at("curve")) {
    r.curve.push_back({pt.at("prime").get<std::uint64_t>(),
                       pt.at("non_dividing").get<long>(),
                       pt.at("primes_seen").get<long>()});
  }
  return r;
}

// per-prime verdict rows, one line each
inline std::string survey_csv(const SurveyReport& r) {
  std::string out = "prime,divides,first_zero_index\n";
  for (const auto& row : r.rows) {
    out += std::to_string(row.prime);
    out += row.divides ? ",1," + std::to_string(row.first_zero_index) : ",0,";
    out += '\n';
  }
  return out;
}

// running proportion curve for external plotting
inline std::string curve_csv(const SurveyReport& r) {
  std::string out = "prime,cumulative_proportion\n";
  for (const auto& pt : r.curve) {
    out += std::to_string(pt.prime) + "," +
           decimal_ratio(pt.non_dividing, pt.primes_seen, 6) + '\n';
  }
  return out;
}

}  // namespace aperylike
