#pragma once

// Command dispatch behind the CLI front end. Everything is driven by a
// RunConfig so the whole surface is testable without a process boundary.
//
// Exit-code contract: 0 all requested verifications pass, 1 verification
// failure (report carries the witness), 2 usage/config error.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "aperylike/congruence_lab.hpp"
#include "aperylike/kernel.hpp"
#include "aperylike/laurent.hpp"
#include "aperylike/modular_engine.hpp"
#include "aperylike/prime_survey.hpp"
#include "aperylike/reporting.hpp"
#include "aperylike/sequences.hpp"

namespace aperylike {

struct RunConfig {
  std::string command;          // seq | verify | survey | period | ct | report
  std::string format = "text";  // text | json | csv
  std::string out_path;         // empty = stdout
  std::string id;               // sequence name where applicable

  long n = 8;                // seq / ct: values 0..n
  std::uint64_t modulus = 0; // seq --mod, period --mod, verify pattern --mod

  std::string claim;         // verify subject
  std::uint64_t p = 0;
  long n_max = 2000;
  int dwork_r = 2;
  long dwork_m_max = 3;

  std::string family;        // lucas on a family: apery | eta | power
  int family_r = 2, family_s = 2;
  int family_a = 2, family_eps = 1;
  int family_power = 4;

  std::string candidate;     // dlp/tlp: product:<r0,r1,...> | reflect2k | threefold | reflect3
  int eta_a = 3;             // eta-zero exponent

  std::uint64_t bound = 10000;      // survey / dlp bound
  std::uint64_t bound_cap = 1000000;
  long max_period = 16;
  std::string kernel = "apery3";
  std::string curve_out;     // survey: optional running-curve CSV path
  int workers = 1;
};

namespace detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline const SequenceDescriptor& required_sequence(const std::string& id) {
  const SequenceDescriptor* s = find_sequence(id);
  if (s == nullptr) throw UsageError("unknown sequence id \"" + id + "\"");
  return *s;
}

inline std::uint64_t required_prime(std::uint64_t p) {
  if (!is_prime(p)) throw UsageError("--p must be a prime (got " + std::to_string(p) + ")");
  return p;
}

inline FamilySpec family_from_config(const RunConfig& c) {
  if (c.family == "apery") return FamilySpec::apery_generalized(c.family_r, c.family_s);
  if (c.family == "eta") return FamilySpec::eta_family(c.family_a, c.family_eps);
  if (c.family == "power") return FamilySpec::power_sum(c.family_power);
  throw UsageError("unknown family \"" + c.family + "\" (expected apery|eta|power)");
}

inline BivariateCandidate dlp_candidate_from_name(const std::string& name,
                                                  std::shared_ptr<PascalCache> cache) {
  if (name.rfind("product:", 0) == 0) {
    std::vector<int> exps;
    std::stringstream ss(name.substr(8));
    for (std::string part; std::getline(ss, part, ',');) {
      try {
        exps.push_back(std::stoi(part));
      } catch (const std::exception&) {
        throw UsageError("bad exponent list in candidate \"" + name + "\"");
      }
    }
    if (exps.empty()) throw UsageError("empty exponent list in candidate \"" + name + "\"");
    return lucas_product_candidate(exps, std::move(cache));
  }
  if (name == "reflect2k") return reflected_pair_candidate(std::move(cache));
  if (name == "threefold") return threefold_candidate(std::move(cache));
  throw UsageError("unknown DLP candidate \"" + name + "\"");
}

inline void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out_path, std::ios::binary);
  if (!f) throw UsageError("cannot open output path \"" + c.out_path + "\"");
  f << text;
}

inline std::string render_verdict(const Verdict& v, const std::string& format) {
  if (format == "json") return to_json(v).dump(2) + "\n";
  std::string line = v.claim + ": " + (v.pass ? "pass" : "FAIL");
  if (!v.pass && !v.witness.is_null()) line += "  witness " + v.witness.dump();
  if (!v.info.empty()) line += "  " + v.info.dump();
  return line + "\n";
}

// ---------------------------------------------------------------------------
// verify

inline Verdict verify_lucas(const RunConfig& c) {
  Verdict v;
  v.claim = "lucas";
  required_prime(c.p);
  std::optional<long> w;
  std::string subject;
  if (c.family.empty()) {
    const auto& s = required_sequence(c.id);
    w = check_lucas(s, c.p, c.n_max);
    subject = s.name;
  } else {
    FamilySpec f = family_from_config(c);
    w = check_lucas(f, c.p, c.n_max);
    subject = f.name();
  }
  v.range = Json{{"id", subject}, {"p", c.p}, {"n_max", c.n_max}};
  v.pass = !w.has_value();
  if (w) v.witness = Json{{"n", *w}};
  return v;
}

inline Verdict verify_dwork(const RunConfig& c) {
  Verdict v;
  v.claim = "dwork";
  const auto& s = required_sequence(c.id);
  required_prime(c.p);
  auto w = check_dwork(s, c.p, c.dwork_r, c.dwork_m_max, c.n_max);
  v.range = Json{{"id", s.name},
                 {"p", c.p},
                 {"r", c.dwork_r},
                 {"m_max", c.dwork_m_max},
                 {"n_max", c.n_max}};
  v.pass = !w.has_value();
  if (w) v.witness = Json{{"m", w->m}, {"n", w->n}};
  return v;
}

inline Verdict verify_dlp(const RunConfig& c) {
  Verdict v;
  v.claim = "dlp";
  required_prime(c.p);
  auto cache = std::make_shared<PascalCache>();
  auto cand = dlp_candidate_from_name(c.candidate, cache);
  auto w = check_dlp(cand, c.p, static_cast<long>(c.bound));
  v.range = Json{{"candidate", cand.name}, {"p", c.p}, {"bound", c.bound}};
  v.pass = !w.has_value();
  if (w) {
    const char* kind = w->kind == DlpWitness::Kind::support ? "support"
                       : w->kind == DlpWitness::Kind::split ? "split"
                                                            : "digit_product";
    v.witness = Json{{"kind", kind}, {"n", w->n}, {"k", w->k}};
  }
  return v;
}

inline Verdict verify_tlp(const RunConfig& c) {
  Verdict v;
  v.claim = "tlp";
  required_prime(c.p);
  if (!c.candidate.empty() && c.candidate != "reflect3")
    throw UsageError("unknown TLP candidate \"" + c.candidate + "\"");
  auto cache = std::make_shared<PascalCache>();
  auto cand = reflected_triple_candidate(cache);
  auto w = check_tlp(cand, c.p, static_cast<long>(c.bound));
  v.range = Json{{"candidate", cand.name}, {"p", c.p}, {"bound", c.bound}};
  v.pass = !w.has_value();
  if (w) {
    const char* kind = w->kind == TlpWitness::Kind::support ? "support"
                       : w->kind == TlpWitness::Kind::split ? "split"
                                                            : "digit_product";
    v.witness = Json{{"kind", kind}, {"n", w->n}, {"k", w->k}, {"j", w->j}};
  }
  return v;
}

inline Verdict verify_pattern_claim(const RunConfig& c) {
  Verdict v;
  v.claim = "pattern";
  const auto& s = required_sequence(c.id);
  if (c.modulus < 2) throw UsageError("pattern verification needs --mod >= 2");
  const PatternClaim* claim = find_pattern_claim(s.id, c.modulus);
  if (claim == nullptr)
    throw UsageError("no registered residue pattern for " + s.name + " mod " +
                     std::to_string(c.modulus));
  auto w = verify_pattern(*claim, c.n_max);
  v.range = Json{{"claim", claim->label}, {"n_max", c.n_max}, {"start", claim->start}};
  v.pass = !w.has_value();
  if (w) v.witness = Json{{"n", *w}};
  return v;
}

inline Verdict verify_palindrome(const RunConfig& c) {
  Verdict v;
  v.claim = "palindrome";
  required_prime(c.p);
  auto w = palindrome_check(c.p);
  v.range = Json{{"p", c.p}};
  v.pass = !w.has_value();
  if (w) v.witness = Json{{"n", *w}};
  return v;
}

inline Verdict verify_half(const RunConfig& c) {
  Verdict v;
  v.claim = "half";
  required_prime(c.p);
  if (c.p == 2) throw UsageError("half-index congruence needs an odd prime");
  auto r = half_index_congruence(c.p);
  v.range = Json{{"p", c.p}};
  v.pass = r.pass;
  v.info = Json{{"lhs", r.lhs}, {"zero_branch", r.zero_branch}};
  if (!r.zero_branch) {
    v.info["expected"] = r.expected;
    v.info["two_squares_a"] = r.a;
    v.info["expected_two_squares"] = r.expected_two_squares;
  }
  if (!r.pass) v.witness = Json{{"index", c.p / 2}};
  return v;
}

inline Verdict verify_third(const RunConfig& c) {
  Verdict v;
  v.claim = "third";
  required_prime(c.p);
  if (c.p == 3) throw UsageError("third-index congruence needs a prime != 3");
  auto r = third_index_congruence(c.p);
  v.range = Json{{"p", c.p}};
  v.pass = r.pass;
  v.info = Json{{"lhs", r.lhs}, {"zero_branch", r.zero_branch}, {"expected", r.expected}};
  if (!r.pass) v.witness = Json{{"index", c.p / 3}};
  return v;
}

inline Verdict verify_eta_zero(const RunConfig& c) {
  Verdict v;
  v.claim = "eta-zero";
  required_prime(c.p);
  if (c.eta_a < 1 || c.eta_a > 3) throw UsageError("--a must be in {1,2,3}");
  v.range = Json{{"p", c.p}, {"a", c.eta_a}};
  v.pass = true;
  Json checked = Json::array();
  for (long n : eta_zero_sum_range(c.p)) {
    std::uint64_t s = eta_zero_sum(c.p, c.eta_a, n);
    checked.push_back(n);
    if (s != 0) {
      v.pass = false;
      v.witness = Json{{"n", n}, {"residue", s}};
      break;
    }
  }
  v.info = Json{{"indices", checked}};
  return v;
}

inline Json window_json(const WindowReport& w) {
  Json j{{"id", w.id}, {"j_max", w.j_max}, {"all_zero", w.all_zero}};
  j["sharp"] = w.next_j_divisible.has_value() ? Json(!*w.next_j_divisible) : Json(nullptr);
  if (w.first_nonzero_j) j["first_nonzero_j"] = *w.first_nonzero_j;
  return j;
}

inline Verdict verify_cooper(const RunConfig& c) {
  Verdict v;
  v.claim = "cooper";
  required_prime(c.p);
  auto r = cooper_divisibility(c.p);
  v.range = Json{{"p", c.p}};
  v.pass = r.pass;
  v.info = Json{{"s7", window_json(r.s7)},
                {"s18", window_json(r.s18)},
                {"s10", window_json(r.s10)},
                {"s18_mod3_exception", r.s18_mod3_exception}};
  if (!r.pass) {
    for (const auto* w : {&r.s7, &r.s18, &r.s10})
      if (!w->all_zero) {
        v.witness = Json{{"id", w->id}, {"j", *w->first_nonzero_j}};
        break;
      }
  }
  return v;
}

inline Verdict verify_gessel(const RunConfig& c) {
  Verdict v;
  v.claim = "gessel";
  const auto& s = required_sequence(c.id);
  required_prime(c.p);
  v.range = Json{{"id", s.name}, {"p", c.p}};
  v.pass = gessel_criterion(s, c.p);
  if (!v.pass) v.witness = Json{{"p", c.p}};
  return v;
}

inline Verdict run_verify(const RunConfig& c) {
  if (c.claim == "lucas") return verify_lucas(c);
  if (c.claim == "dwork") return verify_dwork(c);
  if (c.claim == "dlp") return verify_dlp(c);
  if (c.claim == "tlp") return verify_tlp(c);
  if (c.claim == "pattern") return verify_pattern_claim(c);
  if (c.claim == "palindrome") return verify_palindrome(c);
  if (c.claim == "half") return verify_half(c);
  if (c.claim == "third") return verify_third(c);
  if (c.claim == "eta-zero") return verify_eta_zero(c);
  if (c.claim == "cooper") return verify_cooper(c);
  if (c.claim == "gessel") return verify_gessel(c);
  throw UsageError("unknown claim \"" + c.claim + "\"");
}

// ---------------------------------------------------------------------------
// seq / survey / period / ct / report

inline int run_seq(const RunConfig& c, std::ostream& out) {
  const auto& s = required_sequence(c.id);
  if (c.n < 0) throw UsageError("--n must be nonnegative");
  std::vector<std::string> values;
  if (c.modulus >= 2) {
    for (std::uint64_t r : residue_stream(s, c.n, c.modulus)) values.push_back(std::to_string(r));
  } else if (c.modulus == 0) {
    for (const ExactInt& t : terms(s, c.n)) values.push_back(t.str());
  } else {
    throw UsageError("--mod must be >= 2");
  }
  if (c.format == "json") {
    Json j{{"schema", k_report_schema},
           {"kind", "sequence"},
           {"id", s.name},
           {"n_max", c.n},
           {"modulus", c.modulus ? Json(c.modulus) : Json(nullptr)},
           {"values", values}};
    emit(c, j.dump(2) + "\n", out);
  } else if (c.format == "csv") {
    std::string text = "n,value\n";
    for (std::size_t i = 0; i < values.size(); ++i)
      text += std::to_string(i) + "," + values[i] + "\n";
    emit(c, text, out);
  } else {
    std::string text;
    for (std::size_t i = 0; i < values.size(); ++i) text += (i ? ", " : "") + values[i];
    emit(c, text + "\n", out);
  }
  return 0;
}

inline int run_survey(const RunConfig& c, std::ostream& out) {
  const auto& s = required_sequence(c.id);
  if (c.bound < 2) throw UsageError("--bound must be >= 2");
  if (c.bound > c.bound_cap)
    throw UsageError("--bound exceeds the configured cap of " + std::to_string(c.bound_cap));
  if (c.workers < 1) throw UsageError("--workers must be >= 1");
  SurveyReport rep = survey(s, c.bound, c.workers);
  if (!c.curve_out.empty()) {
    std::ofstream f(c.curve_out, std::ios::binary);
    if (!f) throw UsageError("cannot open curve output path \"" + c.curve_out + "\"");
    f << curve_csv(rep);
  }
  if (c.format == "json") {
    emit(c, to_json(rep).dump(2) + "\n", out);
  } else if (c.format == "csv") {
    emit(c, survey_csv(rep), out);
  } else {
    std::string text = rep.id + ": " + std::to_string(rep.non_dividing_count()) + " of " +
                       std::to_string(rep.total_primes) + " primes <= " +
                       std::to_string(rep.bound) + " divide no term (proportion " +
                       rep.proportion_decimal() + ")\n";
    text += "non-dividing:";
    for (std::uint64_t p : rep.non_dividing_primes) text += " " + std::to_string(p);
    emit(c, text + "\n", out);
  }
  return 0;
}

inline int run_period(const RunConfig& c, std::ostream& out) {
  const auto& s = required_sequence(c.id);
  if (c.modulus < 2) throw UsageError("--mod must be >= 2");
  if (c.max_period < 1) throw UsageError("--max-period must be >= 1");
  auto r = detect_period(s, c.modulus, c.n_max, c.max_period);
  Json j{{"schema", k_report_schema},
         {"kind", "period"},
         {"id", s.name},
         {"modulus", c.modulus},
         {"n_max", c.n_max},
         {"max_period", c.max_period},
         {"found", r.has_value()}};
  if (r) {
    j["preperiod"] = r->preperiod;
    j["period"] = r->period;
  }
  if (c.format == "json") {
    emit(c, j.dump(2) + "\n", out);
  } else if (r) {
    emit(c,
         s.name + " mod " + std::to_string(c.modulus) + ": preperiod " +
             std::to_string(r->preperiod) + ", period " + std::to_string(r->period) + "\n",
         out);
  } else {
    emit(c,
         s.name + " mod " + std::to_string(c.modulus) + ": no period <= " +
             std::to_string(c.max_period) + " on [0, " + std::to_string(c.n_max) + "]\n",
         out);
  }
  return 0;
}

inline int run_ct(const RunConfig& c, std::ostream& out) {
  if (c.n < 0) throw UsageError("--n must be nonnegative");
  const LaurentPolynomial* kernel = nullptr;
  try {
    kernel = &kernel_polynomial(c.kernel);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::vector<std::string> values;
  for (long i = 0; i <= c.n; ++i) values.push_back(ct_power(*kernel, i).str());
  if (c.format == "json") {
    Json j{{"schema", k_report_schema},
           {"kind", "constant_terms"},
           {"kernel", c.kernel},
           {"n_max", c.n},
           {"values", values}};
    emit(c, j.dump(2) + "\n", out);
  } else {
    std::string text;
    for (std::size_t i = 0; i < values.size(); ++i) text += (i ? ", " : "") + values[i];
    emit(c, text + "\n", out);
  }
  return 0;
}

// fixed battery of claim verdicts at modest bounds, plus the periodicity data
// tables; exit reflects the assertive claims only
inline int run_report(const RunConfig& c, std::ostream& out) {
  std::vector<const SequenceDescriptor*> seqs;
  if (c.id.empty()) {
    for (const auto& s : registry()) seqs.push_back(&s);
  } else {
    seqs.push_back(&required_sequence(c.id));
  }
  const std::vector<std::uint64_t> small_primes{2, 3, 5, 7, 11, 13};
  std::vector<Verdict> claims;
  Json data = Json::object();

  for (const auto* s : seqs) {
    long n_max = std::min<long>(c.n_max, 500);
    auto table = terms(*s, n_max);
    for (std::uint64_t p : small_primes) {
      Verdict v;
      v.claim = "lucas";
      v.range = Json{{"id", s->name}, {"p", p}, {"n_max", n_max}};
      auto w = check_lucas(*s, p, n_max, &table);
      v.pass = !w.has_value();
      if (w) v.witness = Json{{"n", *w}};
      claims.push_back(std::move(v));
    }
    Json gessel = Json::object();
    for (std::uint64_t p : small_primes) gessel[std::to_string(p)] = gessel_criterion(*s, p);
    Json row{{"nonperiodicity_primes", nonperiodicity_primes(*s)}, {"gessel", gessel}};
    data[s->name] = row;
  }
  for (const auto& claim : pattern_claims()) {
    if (!c.id.empty() && descriptor(claim.id).name != c.id) continue;
    Verdict v;
    v.claim = "pattern";
    long n_max = std::min<long>(c.n_max, 2000);
    v.range = Json{{"claim", claim.label}, {"n_max", n_max}};
    auto w = verify_pattern(claim, n_max);
    v.pass = !w.has_value();
    if (w) v.witness = Json{{"n", *w}};
    claims.push_back(std::move(v));
  }
  if (c.id.empty()) {
    for (std::uint64_t p : sieve_primes(97)) {
      {
        RunConfig sub = c;
        sub.p = p;
        claims.push_back(verify_palindrome(sub));
        claims.push_back(verify_cooper(sub));
        if (p != 2) claims.push_back(verify_half(sub));
        if (p != 3) claims.push_back(verify_third(sub));
      }
      for (int a = 1; a <= 3; ++a) {
        RunConfig sub = c;
        sub.p = p;
        sub.eta_a = a;
        claims.push_back(verify_eta_zero(sub));
      }
    }
  }

  bool all_pass = true;
  Json claim_array = Json::array();
  for (const auto& v : claims) {
    all_pass = all_pass && v.pass;
    claim_array.push_back(to_json(v));
  }
  Json j{{"schema", k_report_schema},
         {"kind", "report"},
         {"pass", all_pass},
         {"claims", claim_array},
         {"data", data}};
  if (c.format == "json") {
    emit(c, j.dump(2) + "\n", out);
  } else {
    std::string text;
    for (const auto& v : claims) text += render_verdict(v, "text");
    text += all_pass ? "all claims pass\n" : "FAILURES present\n";
    emit(c, text, out);
  }
  return all_pass ? 0 : 1;
}

}  // namespace detail

inline int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.command == "seq") return detail::run_seq(c, out);
    if (c.command == "survey") return detail::run_survey(c, out);
    if (c.command == "period") return detail::run_period(c, out);
    if (c.command == "ct") return detail::run_ct(c, out);
    if (c.command == "report") return detail::run_report(c, out);
    if (c.command == "verify") {
      if (c.format == "csv") throw detail::UsageError("verify reports are text or json");
      Verdict v = detail::run_verify(c);
      detail::emit(c, detail::render_verdict(v, c.format), out);
      return v.pass ? 0 : 1;
    }
    throw detail::UsageError("unknown command \"" + c.command + "\"");
  } catch (const detail::UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace aperylike
