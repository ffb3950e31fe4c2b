#pragma once

// Divisibility census: which primes divide no term of a sequence, proportions
// up to a bound, and the (1 - 1/p)^{(p+1)/2} heuristic. By the Lucas
// congruences a prime divides some term iff it divides one of the first p
// terms, so each prime costs one modular-recurrence sweep.

#include <cmath>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "aperylike/exact.hpp"
#include "aperylike/modular_engine.hpp"
#include "aperylike/sequences.hpp"

namespace aperylike {

inline std::vector<std::uint64_t> sieve_primes(std::uint64_t bound) {
  std::vector<std::uint64_t> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

struct DivideVerdict {
  std::uint64_t prime = 0;
  bool divides = false;
  long first_zero_index = -1;  // smallest n < p with term(n) = 0 mod p, -1 if none

  bool operator==(const DivideVerdict&) const = default;
};

// Scan limit is (p-1)/2 for the Apery row (the palindrome halves the work);
// the full first p terms otherwise. The shortcut never changes the verdict or
// the smallest witness.
inline DivideVerdict divides_witness(const SequenceDescriptor& s, std::uint64_t p,
                                     bool palindrome_shortcut = true) {
  long scan = static_cast<long>(p - 1);
  if (palindrome_shortcut && s.id == SequenceId::gamma) scan = static_cast<long>((p - 1) / 2);
  auto table = residues_mod_prime(s, p, scan + 1);
  for (long n = 0; n <= scan; ++n)
    if (table.residues[n] == 0) return {p, true, n};
  return {p, false, -1};
}

inline bool divides_some_term(const SequenceDescriptor& s, std::uint64_t p) {
  return divides_witness(s, p).divides;
}

inline std::vector<std::uint64_t> primes_not_dividing(const SequenceDescriptor& s,
                                                      std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : sieve_primes(bound))
    if (!divides_some_term(s, p)) out.push_back(p);
  return out;
}

struct CurvePoint {
  std::uint64_t prime = 0;
  long non_dividing = 0;  // count of non-dividing primes up to this prime
  long primes_seen = 0;

  bool operator==(const CurvePoint&) const = default;
};

// decimal rendering of num/den with round-half-to-even at `places` digits
inline std::string decimal_ratio(long long num, long long den, int places) {
  long long scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  long long q = num * scale / den;
  long long r = num * scale % den;
  if (2 * r > den || (2 * r == den && q % 2 != 0)) ++q;
  std::string frac = std::to_string(q % scale);
  frac.insert(frac.begin(), places - frac.size(), '0');
  return std::to_string(q / scale) + "." + frac;
}

struct SurveyReport {
  std::string id;
  std::uint64_t bound = 2;
  long total_primes = 0;
  std::vector<DivideVerdict> rows;                // one per prime <= bound
  std::vector<std::uint64_t> non_dividing_primes;
  std::vector<CurvePoint> curve;

  long non_dividing_count() const { return static_cast<long>(non_dividing_primes.size()); }
  // exact proportion is non_dividing_count()/total_primes; this is its
  // 4-decimal rendering
  std::string proportion_decimal() const {
    return decimal_ratio(non_dividing_count(), total_primes, 4);
  }

  bool operator==(const SurveyReport&) const = default;
};

// Full census for one sequence. Primes partition into independent work
// units; the assembled report is identical for any worker count.
inline SurveyReport survey(const SequenceDescriptor& s, std::uint64_t bound, int workers = 1) {
  if (bound < 2) throw std::invalid_argument("survey: bound must be >= 2");
  if (workers < 1) throw std::invalid_argument("survey: worker count must be >= 1");
  auto primes = sieve_primes(bound);
  std::vector<DivideVerdict> rows(primes.size());
  if (workers == 1 || primes.size() < 2) {
    for (std::size_t i = 0; i < primes.size(); ++i) rows[i] = divides_witness(s, primes[i]);
  } else {
    std::vector<std::thread> pool;
    std::size_t n_workers = std::min<std::size_t>(workers, primes.size());
    for (std::size_t w = 0; w < n_workers; ++w) {
      pool.emplace_back([&, w]() {
        for (std::size_t i = w; i < primes.size(); i += n_workers)
          rows[i] = divides_witness(s, primes[i]);
      });
    }
    for (auto& t : pool) t.join();
  }
  SurveyReport rep;
  rep.id = s.name;
  rep.bound = bound;
  rep.total_primes = static_cast<long>(primes.size());
  rep.rows = std::move(rows);
  long nd = 0, seen = 0;
  for (const auto& row : rep.rows) {
    ++seen;
    if (!row.divides) {
      ++nd;
      rep.non_dividing_primes.push_back(row.prime);
    }
    rep.curve.push_back({row.prime, nd, seen});
  }
  return rep;
}

// exact value of (1 - 1/p)^{(p+1)/2}, the heuristic chance that p divides no
// term; tends to e^{-1/2} as p grows
struct HeuristicProportion {
  std::uint64_t p = 2;
  unsigned exponent = 0;  // (p+1)/2
  ExactInt numerator, denominator;
  // the exact ratio can dwarf a double, so go through logs
  double value() const { return std::exp(exponent * std::log1p(-1.0 / static_cast<double>(p))); }
};

inline constexpr double k_limit_non_dividing = 0.6065306597126334;  // e^{-1/2}

inline HeuristicProportion heuristic_proportion(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("heuristic_proportion: p must be prime");
  unsigned e = static_cast<unsigned>((p + 1) / 2);
  return {p, e, boost::multiprecision::pow(ExactInt(p - 1), e),
          boost::multiprecision::pow(ExactInt(p), e)};
}

}  // namespace aperylike
