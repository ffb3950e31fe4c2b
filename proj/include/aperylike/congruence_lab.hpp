#pragma once

// One verifier per named congruence statement: fixed residue patterns,
// the Gessel periodicity criterion, palindromic residues, half/third-index
// congruences, the eta zero-sum lemma, and the Cooper/Calkin divisibility
// windows for s7, s10, s18.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "aperylike/kernel.hpp"
#include "aperylike/modular_engine.hpp"
#include "aperylike/sequences.hpp"

namespace aperylike {

// ---------------------------------------------------------------------------
// fixed residue patterns

enum class PatternKind { constant, parity, geometric };

struct PatternClaim {
  std::string label;
  SequenceId id;
  std::uint64_t modulus = 2;
  PatternKind kind = PatternKind::constant;
  std::uint64_t even_value = 0;  // parity: value at even n; constant: the value
  std::uint64_t odd_value = 0;
  long long base = 0;  // geometric: base^n mod modulus
  long start = 0;      // first index where the claim applies

  std::uint64_t expected(long n) const {
    switch (kind) {
      case PatternKind::constant:
        return even_value;
      case PatternKind::parity:
        return (n & 1) ? odd_value : even_value;
      case PatternKind::geometric:
        return pow_mod(norm_mod(base, modulus), static_cast<std::uint64_t>(n), modulus);
    }
    return 0;
  }
};

// smallest n in [start, n_max] where the residue deviates, or nullopt
inline std::optional<long> verify_pattern(const PatternClaim& claim, long n_max) {
  if (n_max < claim.start) throw std::invalid_argument("verify_pattern: n_max below start");
  auto res = residue_stream(descriptor(claim.id), n_max, claim.modulus);
  for (long n = claim.start; n <= n_max; ++n)
    if (res[n] != claim.expected(n)) return n;
  return std::nullopt;
}

// The fixed residue patterns asserted in the source theorems: the mod-8
// alternations of the Apery and Almkvist-Zudilin numbers, the mod-3 signs,
// the mod-2 / mod-3 constants, b mod 5 geometric, and the zero tails of
// eta mod 5 and s18 mod 3.
inline const std::vector<PatternClaim>& pattern_claims() {
  static const std::vector<PatternClaim> claims = [] {
    std::vector<PatternClaim> v;
    auto parity = [&](SequenceId id, std::string label, std::uint64_t m, std::uint64_t ev,
                      std::uint64_t ov) {
      v.push_back({std::move(label), id, m, PatternKind::parity, ev, ov, 0, 0});
    };
    auto constant = [&](SequenceId id, std::string label, std::uint64_t m, std::uint64_t c,
                        long start) {
      v.push_back({std::move(label), id, m, PatternKind::constant, c, c, 0, start});
    };
    parity(SequenceId::gamma, "gamma-mod8", 8, 1, 5);
    parity(SequenceId::delta, "delta-mod8", 8, 1, 3);
    parity(SequenceId::gamma, "gamma-mod3", 3, 1, 2);
    parity(SequenceId::a, "a-mod3", 3, 1, 2);
    // every row is constant mod 2 from n = 1 on
    for (const auto& s : registry()) {
      std::uint64_t c1 = mod_reduce(term_by_recurrence(s, 1), 2);
      constant(s.id, s.name + "-mod2", 2, c1, 1);
    }
    for (SequenceId id : {SequenceId::c, SequenceId::f, SequenceId::g, SequenceId::delta,
                          SequenceId::alpha, SequenceId::epsilon, SequenceId::zeta,
                          SequenceId::s18}) {
      const auto& s = descriptor(id);
      std::uint64_t c1 = mod_reduce(term_by_recurrence(s, 1), 3);
      constant(id, s.name + "-mod3", 3, c1, 1);
    }
    v.push_back({"b-mod5", SequenceId::b, 5, PatternKind::geometric, 0, 0, 3, 0});
    constant(SequenceId::eta, "eta-mod5", 5, 0, 1);
    return v;
  }();
  return claims;
}

inline const PatternClaim* find_pattern_claim(SequenceId id, std::uint64_t modulus) {
  for (const auto& c : pattern_claims())
    if (c.id == id && c.modulus == modulus) return &c;
  return nullptr;
}

// ---------------------------------------------------------------------------
// periodicity

// Gessel's criterion: a Lucas sequence that is eventually periodic mod p has
// C(n) = C(1)^n mod p for n < p; failure refutes eventual periodicity.
inline bool gessel_criterion(const SequenceDescriptor& s, std::uint64_t p) {
  auto table = residues_mod_prime(s, p);
  std::uint64_t c1 = table.residues.size() > 1 ? table.residues[1] : 1 % p;
  for (std::uint64_t n = 0; n < table.residues.size(); ++n)
    if (table.residues[n] != pow_mod(c1, n, p)) return false;
  return true;
}

// primes dividing both C(2) - C(1)^2 and C(3) - C(1)^3
inline std::vector<std::uint64_t> nonperiodicity_primes(const SequenceDescriptor& s) {
  auto t = terms(s, 3);
  ExactInt x = t[2] - t[1] * t[1];
  ExactInt y = t[3] - t[1] * t[1] * t[1];
  ExactInt g = boost::multiprecision::gcd(boost::multiprecision::abs(x),
                                          boost::multiprecision::abs(y));
  if (g.is_zero()) throw std::logic_error("nonperiodicity_primes: both differences vanish");
  std::vector<std::uint64_t> primes;
  std::uint64_t v = g.convert_to<std::uint64_t>();
  for (std::uint64_t q = 2; q * q <= v; ++q) {
    if (v % q == 0) {
      primes.push_back(q);
      while (v % q == 0) v /= q;
    }
  }
  if (v > 1) primes.push_back(v);
  return primes;
}

struct PeriodResult {
  long preperiod = 0, period = 0;
};

// Smallest (preperiod, period), lexicographically, with period <= max_period
// such that residues mod m repeat on [preperiod, n_max]. The repeating window
// must cover at least four full periods; shorter tails match by chance and
// carry no evidence. A nullopt is bounded negative evidence, not proof.
inline std::optional<PeriodResult> detect_period(const SequenceDescriptor& s, std::uint64_t m,
                                                 long n_max, long max_period) {
  if (m < 2) throw std::invalid_argument("detect_period: modulus must be >= 2");
  auto res = residue_stream(s, n_max, m);
  std::optional<PeriodResult> best;
  for (long period = 1; period <= max_period; ++period) {
    long pre = 0;
    for (long n = n_max - period; n >= 0; --n) {
      if (res[n] != res[n + period]) {
        pre = n + 1;
        break;
      }
    }
    if (pre > n_max - 4 * period) continue;
    if (!best || pre < best->preperiod || (pre == best->preperiod && period < best->period))
      best = PeriodResult{pre, period};
  }
  return best;
}

// ---------------------------------------------------------------------------
// palindromic Apery residues: A(n) = A(p-1-n) mod p for 0 <= n < p

inline std::optional<long> palindrome_check(std::uint64_t p,
                                            long n_max_pairs = std::numeric_limits<long>::max()) {
  auto table = residues_mod_prime(descriptor(SequenceId::gamma), p);
  long half = static_cast<long>((p - 1) / 2);
  long cap = std::min(half, n_max_pairs);
  for (long n = 0; n <= cap; ++n)
    if (table.residues[n] != table.residues[p - 1 - n]) return n;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// half-index congruence for A_b (Stienstra-Beukers shape)

struct TwoSquares {
  long a = 0, b = 0;  // p = a^2 + b^2 with a odd
};

inline std::optional<TwoSquares> two_squares(std::uint64_t p) {
  for (long a = 1; static_cast<std::uint64_t>(a) * a <= p; a += 2) {
    std::uint64_t rest = p - static_cast<std::uint64_t>(a) * a;
    std::uint64_t b = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(rest)));
    for (std::uint64_t bb : {b, b + 1, b > 0 ? b - 1 : 0})
      if (bb * bb == rest) return TwoSquares{a, static_cast<long>(bb)};
  }
  return std::nullopt;
}

struct HalfIndexVerdict {
  std::uint64_t p = 0;
  bool pass = false;
  bool zero_branch = false;     // p = 3 (mod 4)
  std::uint64_t lhs = 0;        // A_b(floor(p/2)) mod p
  std::uint64_t expected = 0;   // central-binomial-square branch value
  long a = 0;                   // odd leg of p = a^2 + b^2 when applicable
  std::uint64_t expected_two_squares = 0;  // 4a^2 - 2p mod p
};

// A_b(floor(p/2)) is C(floor(p/2), floor(p/4))^2 mod p when p = 1 (mod 4)
// and 0 when p = 3 (mod 4); for p = 1 (mod 4) it also equals 4a^2 - 2p where
// p = a^2 + b^2 with a odd.
inline HalfIndexVerdict half_index_congruence(std::uint64_t p) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("half_index_congruence: need an odd prime");
  HalfIndexVerdict v;
  v.p = p;
  long idx = static_cast<long>(p / 2);
  v.lhs = residues_mod_prime(descriptor(SequenceId::b), p, idx + 1).residues[idx];
  if (p % 4 == 3) {
    v.zero_branch = true;
    v.pass = (v.lhs == 0);
    return v;
  }
  BinomModP t(p);
  std::uint64_t c = t.digit(p / 2, p / 4);
  v.expected = mul_mod(c, c, p);
  auto sq = two_squares(p);
  if (!sq) throw std::logic_error("half_index_congruence: no two-squares decomposition");
  v.a = sq->a;
  v.expected_two_squares = norm_mod(4 * static_cast<long long>(sq->a) * sq->a -
                                        2 * static_cast<long long>(p),
                                    p);
  v.pass = (v.lhs == v.expected) && (v.lhs == v.expected_two_squares);
  return v;
}

// ---------------------------------------------------------------------------
// third-index congruence for A_eta

struct ThirdIndexVerdict {
  std::uint64_t p = 0;
  bool pass = false;
  bool zero_branch = false;    // p not 1,2,4,8 (mod 15)
  std::uint64_t lhs = 0;       // A_eta(floor(p/3)) mod p
  std::uint64_t expected = 0;
};

// A_eta(floor(p/3)) is (-1)^{floor(p/5)} C(floor(p/3), floor(p/15))^3 mod p
// when p = 1, 2, 4, 8 (mod 15), and 0 otherwise; p != 3.
inline ThirdIndexVerdict third_index_congruence(std::uint64_t p) {
  if (p == 3 || !is_prime(p)) throw std::invalid_argument("third_index_congruence: need a prime != 3");
  ThirdIndexVerdict v;
  v.p = p;
  long idx = static_cast<long>(p / 3);
  v.lhs = residues_mod_prime(descriptor(SequenceId::eta), p, idx + 1).residues[idx];
  std::uint64_t r15 = p % 15;
  if (r15 == 1 || r15 == 2 || r15 == 4 || r15 == 8) {
    BinomModP t(p);
    std::uint64_t c = t.digit(p / 3, p / 15);
    std::uint64_t e = mul_mod(mul_mod(c, c, p), c, p);
    if ((p / 5) % 2 == 1 && e != 0) e = p - e;
    v.expected = e;
  } else {
    v.zero_branch = true;
  }
  v.pass = (v.lhs == v.expected);
  return v;
}

// ---------------------------------------------------------------------------
// eta zero-sum lemma

// sum_k (-1)^{a k} C(n,k)^a C(4n-5k, 3n-2p) mod p, for 2p/3 <= n < p and
// a in {1,2,3}; the statement is that this vanishes.
inline std::uint64_t eta_zero_sum(std::uint64_t p, int a, long n) {
  if (!is_prime(p)) throw std::invalid_argument("eta_zero_sum: p must be prime");
  if (a < 1 || a > 3) throw std::invalid_argument("eta_zero_sum: a must be in {1,2,3}");
  if (!(3 * n >= 2 * static_cast<long>(p) && n < static_cast<long>(p)))
    throw std::invalid_argument("eta_zero_sum: n outside [2p/3, p)");
  BinomModP t(p);
  const long m = 3 * n - 2 * static_cast<long>(p);  // in [0, p)
  std::uint64_t s = 0;
  for (long k = 0; k <= n; ++k) {
    std::uint64_t v = pow_mod(t.digit(n, k), a, p);
    v = mul_mod(v, t.binom_signed(4 * n - 5 * k, m), p);
    if ((static_cast<long long>(a) * k) % 2) v = (p - v) % p;
    s = (s + v) % p;
  }
  return s;
}

// admissible indices for the lemma at a given prime (may be empty)
inline std::vector<long> eta_zero_sum_range(std::uint64_t p) {
  std::vector<long> ns;
  for (long n = (2 * static_cast<long>(p) + 2) / 3; n < static_cast<long>(p); ++n) ns.push_back(n);
  return ns;
}

// ---------------------------------------------------------------------------
// Cooper / Calkin divisibility windows

struct WindowReport {
  std::string id;
  long j_max = 0;                         // window is 1 <= j <= j_max, index p - j
  bool all_zero = false;
  std::optional<long> first_nonzero_j;    // witness when all_zero is false
  std::optional<bool> next_j_divisible;   // sharpness probe at j_max + 1
};

struct CooperVerdict {
  std::uint64_t p = 0;
  bool pass = false;
  WindowReport s7, s18, s10;
  bool s18_mod3_exception = false;  // the p = 3 window extends past its bound
};

namespace detail {

inline WindowReport window_report(const SequenceDescriptor& s, std::uint64_t p, long j_max) {
  WindowReport w;
  w.id = s.name;
  w.j_max = j_max;
  auto table = residues_mod_prime(s, p);
  w.all_zero = true;
  for (long j = 1; j <= j_max; ++j) {
    if (table.residues[p - j] != 0) {
      w.all_zero = false;
      w.first_nonzero_j = j;
      break;
    }
  }
  long probe = j_max + 1;
  if (static_cast<std::uint64_t>(probe) <= p - 1)
    w.next_j_divisible = (table.residues[p - probe] == 0);
  else if (static_cast<std::uint64_t>(probe) == p)
    w.next_j_divisible = false;  // index 0 has residue 1
  return w;
}

}  // namespace detail

// s7(p-j) = 0 mod p for 1 <= j <= (p+1)/3; s18(p-j) = 0 for 1 <= j <= (p+2)/4;
// s10(n) = 0 for n < p < 4n/3 + 1 (the same window as s18, via Calkin).
// Sharpness of the windows is reported, never asserted.
inline CooperVerdict cooper_divisibility(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("cooper_divisibility: p must be prime");
  CooperVerdict v;
  v.p = p;
  long j7 = static_cast<long>((p + 1) / 3);
  long j18 = static_cast<long>((p + 2) / 4);
  // n < p < 4n/3 + 1 is n > 3(p-1)/4, i.e. j = p - n runs 1..(p+2)/4
  long j10 = static_cast<long>(p) - (3 * (static_cast<long>(p) - 1)) / 4 - 1;
  v.s7 = detail::window_report(descriptor(SequenceId::s7), p, j7);
  v.s18 = detail::window_report(descriptor(SequenceId::s18), p, j18);
  v.s10 = detail::window_report(descriptor(SequenceId::s10), p, j10);
  v.s18_mod3_exception = (p == 3) && v.s18.next_j_divisible.value_or(false);
  v.pass = v.s7.all_zero && v.s18.all_zero && v.s10.all_zero;
  return v;
}

// ---------------------------------------------------------------------------
// reflected divisibility scan (observation only, never asserted)

struct ReflectionFailure {
  std::string id;
  std::uint64_t p = 0;
  long n = 0;
};

// For p in (p_min, p_max]: whenever p | C(n) with 0 <= n < p, check that
// p | C(p-1-n) as well; returns the failures observed.
inline std::vector<ReflectionFailure> reflection_divisibility_scan(const SequenceDescriptor& s,
                                                                   std::uint64_t p_min,
                                                                   std::uint64_t p_max) {
  std::vector<ReflectionFailure> out;
  for (std::uint64_t p = p_min + 1; p <= p_max; ++p) {
    if (!is_prime(p)) continue;
    auto table = residues_mod_prime(s, p);
    for (std::uint64_t n = 0; n < p; ++n)
      if (table.residues[n] == 0 && table.residues[p - 1 - n] != 0)
        out.push_back({s.name, p, static_cast<long>(n)});
  }
  return out;
}

}  // namespace aperylike
