#pragma once

// Residue computation and congruence checking: the modular-recurrence fast
// path for the first p residues, Lucas evaluation and checking, Dwork
// checking mod p^r, and the double/triple Lucas property testers.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "aperylike/exact.hpp"
#include "aperylike/kernel.hpp"
#include "aperylike/sequences.hpp"

namespace aperylike {

struct ResidueSeq {
  std::string id;
  std::uint64_t modulus = 2;
  std::vector<std::uint64_t> residues;  // residues[n] = term(n) mod modulus
};

// ---------------------------------------------------------------------------
// modular-recurrence fast path

// First `count` residues mod prime p (count <= p; default p). Valid because
// every divided factor i+1 stays below p, so inverses exist.
inline ResidueSeq residues_mod_prime(const SequenceDescriptor& s, std::uint64_t p,
                                     long count = -1) {
  if (!is_prime(p)) throw std::invalid_argument("residues_mod_prime: modulus must be prime");
  if (p > 100000000) throw std::invalid_argument("residues_mod_prime: prime too large");
  if (count < 0 || count > static_cast<long>(p)) count = static_cast<long>(p);
  ResidueSeq out{s.name, p, {}};
  if (count == 0) return out;
  out.residues.reserve(count);

  // inverses of 1..count-1 by the usual recurrence
  std::vector<std::uint64_t> inv(std::max<long>(count, 2));
  inv[1] = 1 % p;
  for (long i = 2; i < count; ++i) inv[i] = mul_mod(p - p / i, inv[p % i], p);

  const auto& q = s.params;
  std::uint64_t prev = 0, cur = 1 % p;
  out.residues.push_back(cur);
  for (long n = 0; n < count - 1; ++n) {
    long long nn = static_cast<long long>(n) * n;
    std::uint64_t t;
    if (s.order == 2) {
      std::uint64_t lhs = mul_mod(norm_mod(q.a * nn + q.a * n + q.b, p), cur, p);
      std::uint64_t rhs = mul_mod(norm_mod(q.c * nn, p), prev, p);
      t = mul_mod(sub_mod(lhs, rhs, p), mul_mod(inv[n + 1], inv[n + 1], p), p);
    } else {
      std::uint64_t lhs = mul_mod(norm_mod(q.a * nn + q.a * n + q.b, p), cur, p);
      lhs = mul_mod(lhs, norm_mod(2 * static_cast<long long>(n) + 1, p), p);
      std::uint64_t rhs = mul_mod(norm_mod(q.c * nn + q.d, p), prev, p);
      rhs = mul_mod(rhs, n % p, p);
      std::uint64_t i3 = mul_mod(mul_mod(inv[n + 1], inv[n + 1], p), inv[n + 1], p);
      t = mul_mod(sub_mod(lhs, rhs, p), i3, p);
    }
    prev = cur;
    cur = t;
    out.residues.push_back(cur);
  }
  return out;
}

// term(n) mod m. Prime m with n < m takes the modular-recurrence fast path;
// everything else is exact computation followed by reduction.
inline std::uint64_t term_mod(const SequenceDescriptor& s, long n, std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("term_mod: modulus must be >= 2");
  if (n < 0) throw std::invalid_argument("term_mod: negative index");
  if (static_cast<std::uint64_t>(n) < m && is_prime(m))
    return residues_mod_prime(s, m, n + 1).residues.back();
  return mod_reduce(term_by_recurrence(s, n), m);
}

// ---------------------------------------------------------------------------
// Lucas evaluation and checking

// digit product over a table of the first p residues
inline std::uint64_t lucas_eval(const ResidueSeq& table, const ExactInt& n) {
  PAdicDigits d = to_digits(n, table.modulus);
  std::uint64_t acc = 1 % table.modulus;
  for (std::uint64_t dig : d.digits) acc = mul_mod(acc, table.residues.at(dig), table.modulus);
  return acc;
}

inline std::uint64_t lucas_eval(const SequenceDescriptor& s, const ExactInt& n, std::uint64_t p) {
  return lucas_eval(residues_mod_prime(s, p), n);
}

// Core Lucas check against a table of exact residues mod p: smallest n with
// res[n] != prod res[n_i], or nullopt. res[n] must be term(n) mod p.
inline std::optional<long> check_lucas_residues(const std::vector<std::uint64_t>& res,
                                                std::uint64_t p, long n_max) {
  if (n_max >= static_cast<long>(res.size()))
    throw std::invalid_argument("check_lucas_residues: table too short");
  for (long n = 0; n <= n_max; ++n) {
    std::uint64_t prod = 1 % p;
    for (long v = n;;) {
      prod = mul_mod(prod, res[v % p], p);
      v /= p;
      if (v == 0) break;
    }
    if (res[n] != prod) return n;
  }
  return std::nullopt;
}

inline std::optional<long> check_lucas(const SequenceDescriptor& s, std::uint64_t p, long n_max,
                                       const std::vector<ExactInt>* terms_hint = nullptr) {
  std::vector<std::uint64_t> res;
  res.reserve(n_max + 1);
  if (terms_hint != nullptr) {
    if (static_cast<long>(terms_hint->size()) <= n_max)
      throw std::invalid_argument("check_lucas: hint table too short");
    for (long n = 0; n <= n_max; ++n) res.push_back(mod_reduce((*terms_hint)[n], p));
  } else {
    res = residue_stream(s, n_max, p);
  }
  return check_lucas_residues(res, p, n_max);
}

inline std::optional<long> check_lucas(const FamilySpec& f, std::uint64_t p, long n_max) {
  return check_lucas_residues(family_residues(f, n_max, p), p, n_max);
}

// ---------------------------------------------------------------------------
// Dwork checking

struct DworkWitness {
  long m = 0, n = 0;
};

// C(p^r m + n) C(floor(n/p)) == C(p^{r-1} m + floor(n/p)) C(n) mod p^r for
// all m <= m_max, n <= n_max; exact terms reduced mod p^r (no modular
// recurrence: inverses can fail modulo prime powers).
inline std::optional<DworkWitness> check_dwork(const SequenceDescriptor& s, std::uint64_t p,
                                               int r, long m_max, long n_max) {
  if (!is_prime(p)) throw std::invalid_argument("check_dwork: p must be prime");
  if (r < 1) throw std::invalid_argument("check_dwork: r must be >= 1");
  std::uint64_t pr = 1;
  for (int i = 0; i < r; ++i) {
    if (pr > (1ull << 31) / p) throw std::invalid_argument("check_dwork: p^r too large");
    pr *= p;
  }
  const std::uint64_t prm1 = pr / p;
  const long top = static_cast<long>(pr) * m_max + n_max;
  auto all = terms(s, top);
  std::vector<std::uint64_t> res(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) res[i] = mod_reduce(all[i], pr);
  for (long m = 0; m <= m_max; ++m) {
    for (long n = 0; n <= n_max; ++n) {
      std::uint64_t lhs = mul_mod(res[pr * m + n], res[n / static_cast<long>(p)], pr);
      std::uint64_t rhs = mul_mod(res[prm1 * m + n / static_cast<long>(p)], res[n], pr);
      if (lhs != rhs) return DworkWitness{m, n};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// shared exact binomial cache for candidate evaluators

class PascalCache {
 public:
  const ExactInt& binom(long n, long k) {
    static const ExactInt zero = 0;
    if (k < 0 || k > n || n < 0) return zero;
    ensure(n);
    return rows_[n][k];
  }
  void ensure(long n) {
    while (static_cast<long>(rows_.size()) <= n) {
      std::size_t m = rows_.size();
      std::vector<ExactInt> row(m + 1);
      row[0] = 1;
      row[m] = 1;
      for (std::size_t j = 1; j < m; ++j) row[j] = rows_[m - 1][j - 1] + rows_[m - 1][j];
      rows_.push_back(std::move(row));
    }
  }

 private:
  std::vector<std::vector<ExactInt>> rows_{{ExactInt(1)}};
};

// ---------------------------------------------------------------------------
// DLP / TLP candidates and checks

struct BivariateCandidate {
  std::string name;
  std::function<ExactInt(long, long)> eval;
};

struct TrivariateCandidate {
  std::string name;
  std::function<ExactInt(long, long, long)> eval;
};

struct LpSequence {
  std::string name;
  std::function<ExactInt(long)> eval;
};

// product kernel C(n,k)^{r0} C(n+k,k)^{r1} ... C(n+mk,k)^{rm}
inline BivariateCandidate lucas_product_candidate(std::vector<int> exps,
                                                  std::shared_ptr<PascalCache> cache) {
  if (exps.empty()) throw std::invalid_argument("lucas_product_candidate: empty exponent vector");
  std::string name = "product[";
  for (std::size_t i = 0; i < exps.size(); ++i) name += (i ? "," : "") + std::to_string(exps[i]);
  name += "]";
  return {name, [exps, cache](long n, long k) -> ExactInt {
            if (k < 0 || n < 0) return 0;
            ExactInt r = 1;
            for (std::size_t i = 0; i < exps.size(); ++i) {
              const ExactInt& b = cache->binom(n + static_cast<long>(i) * k, k);
              if (b.is_zero()) return 0;
              for (int e = 0; e < exps[i]; ++e) r *= b;
            }
            return r;
          }};
}

// C(n,k) C(2k,n)
inline BivariateCandidate reflected_pair_candidate(std::shared_ptr<PascalCache> cache) {
  return {"reflect2k", [cache](long n, long k) -> ExactInt {
            return cache->binom(n, k) * cache->binom(2 * k, n);
          }};
}

// 3^{n-3k} C(n,3k) (3k)!/k!^3
inline BivariateCandidate threefold_candidate(std::shared_ptr<PascalCache> cache) {
  return {"threefold", [cache](long n, long k) -> ExactInt {
            if (k < 0 || 3 * k > n) return 0;
            ExactInt r = cache->binom(n, 3 * k) * cache->binom(3 * k, k) * cache->binom(2 * k, k);
            return r * boost::multiprecision::pow(ExactInt(3), static_cast<unsigned>(n - 3 * k));
          }};
}

// C(n,j) C(k+j,n)
inline TrivariateCandidate reflected_triple_candidate(std::shared_ptr<PascalCache> cache) {
  return {"reflect3", [cache](long n, long k, long j) -> ExactInt {
            return cache->binom(n, j) * cache->binom(k + j, n);
          }};
}

struct DlpWitness {
  enum class Kind { support, split, digit_product } kind = Kind::support;
  long n = 0, k = 0;          // combined arguments
  long n0 = 0, k0 = 0;        // low digits (split)
  long n1 = 0, k1 = 0;        // high parts (split)
};

// DLP check: (i) vanishing for k > n, (ii) the one-digit split congruence,
// (iii) deterministic random spot checks of the full digit product. The full
// multi-digit law follows from (ii) by induction.
inline std::optional<DlpWitness> check_dlp(const BivariateCandidate& L, std::uint64_t p,
                                           long bound, int samples = 100) {
  if (!is_prime(p)) throw std::invalid_argument("check_dlp: p must be prime");
  for (long n = 0; n <= bound; ++n)
    for (long k = n + 1; k <= bound; ++k)
      if (!L.eval(n, k).is_zero()) {
        DlpWitness w;
        w.kind = DlpWitness::Kind::support;
        w.n = n;
        w.k = k;
        return w;
      }
  const long hi = bound / static_cast<long>(p);
  for (long n0 = 0; n0 < static_cast<long>(p); ++n0)
    for (long k0 = 0; k0 < static_cast<long>(p); ++k0)
      for (long n1 = 0; n1 <= hi; ++n1)
        for (long k1 = 0; k1 <= hi; ++k1) {
          std::uint64_t lhs = mod_reduce(L.eval(n0 + n1 * p, k0 + k1 * p), p);
          std::uint64_t rhs = mul_mod(mod_reduce(L.eval(n0, k0), p), mod_reduce(L.eval(n1, k1), p), p);
          if (lhs != rhs) {
            DlpWitness w;
            w.kind = DlpWitness::Kind::split;
            w.n = n0 + n1 * p;
            w.k = k0 + k1 * p;
            w.n0 = n0;
            w.k0 = k0;
            w.n1 = n1;
            w.k1 = k1;
            return w;
          }
        }
  std::mt19937 rng(0x5eedu + static_cast<std::uint32_t>(p));
  std::uniform_int_distribution<long> dist(0, bound);
  for (int i = 0; i < samples; ++i) {
    long n = dist(rng), k = dist(rng);
    std::uint64_t prod = 1 % p;
    long vn = n, vk = k;
    do {
      prod = mul_mod(prod, mod_reduce(L.eval(vn % p, vk % p), p), p);
      vn /= p;
      vk /= p;
    } while (vn != 0 || vk != 0);
    if (mod_reduce(L.eval(n, k), p) != prod) {
      DlpWitness w;
      w.kind = DlpWitness::Kind::digit_product;
      w.n = n;
      w.k = k;
      return w;
    }
  }
  return std::nullopt;
}

struct TlpWitness {
  enum class Kind { support, split, digit_product } kind = Kind::support;
  long n = 0, k = 0, j = 0;
  long n0 = 0, k0 = 0, j0 = 0;
  long n1 = 0, k1 = 0, j1 = 0;
};

inline std::optional<TlpWitness> check_tlp(const TrivariateCandidate& M, std::uint64_t p,
                                           long bound, int samples = 100) {
  if (!is_prime(p)) throw std::invalid_argument("check_tlp: p must be prime");
  for (long n = 0; n <= bound; ++n)
    for (long j = n + 1; j <= bound; ++j)
      for (long k = 0; k <= bound; ++k)
        if (!M.eval(n, k, j).is_zero()) {
          TlpWitness w;
          w.kind = TlpWitness::Kind::support;
          w.n = n;
          w.k = k;
          w.j = j;
          return w;
        }
  const long hi = bound / static_cast<long>(p);
  for (long n0 = 0; n0 < static_cast<long>(p); ++n0)
    for (long k0 = 0; k0 < static_cast<long>(p); ++k0)
      for (long j0 = 0; j0 < static_cast<long>(p); ++j0)
        for (long n1 = 0; n1 <= hi; ++n1)
          for (long k1 = 0; k1 <= hi; ++k1)
            for (long j1 = 0; j1 <= hi; ++j1) {
              std::uint64_t lhs =
                  mod_reduce(M.eval(n0 + n1 * p, k0 + k1 * p, j0 + j1 * p), p);
              std::uint64_t rhs = mul_mod(mod_reduce(M.eval(n0, k0, j0), p),
                                          mod_reduce(M.eval(n1, k1, j1), p), p);
              if (lhs != rhs) {
                TlpWitness w;
                w.kind = TlpWitness::Kind::split;
                w.n = n0 + n1 * p;
                w.k = k0 + k1 * p;
                w.j = j0 + j1 * p;
                w.n0 = n0;
                w.k0 = k0;
                w.j0 = j0;
                w.n1 = n1;
                w.k1 = k1;
                w.j1 = j1;
                return w;
              }
            }
  std::mt19937 rng(0x7eedu + static_cast<std::uint32_t>(p));
  std::uniform_int_distribution<long> dist(0, bound);
  for (int i = 0; i < samples; ++i) {
    long n = dist(rng), k = dist(rng), j = dist(rng);
    std::uint64_t prod = 1 % p;
    long vn = n, vk = k, vj = j;
    do {
      prod = mul_mod(prod, mod_reduce(M.eval(vn % p, vk % p, vj % p), p), p);
      vn /= p;
      vk /= p;
      vj /= p;
    } while (vn != 0 || vk != 0 || vj != 0);
    if (mod_reduce(M.eval(n, k, j), p) != prod) {
      TlpWitness w;
      w.kind = TlpWitness::Kind::digit_product;
      w.n = n;
      w.k = k;
      w.j = j;
      return w;
    }
  }
  return std::nullopt;
}

// F(n) = sum_k L(n,k) G(k) H(n-k) must satisfy Lucas congruences mod p when
// L is DLP and G, H are LP; returns the smallest violating n.
inline std::optional<long> check_lp_convolution(const BivariateCandidate& L, const LpSequence& G,
                                                const LpSequence& H, std::uint64_t p, long bound) {
  std::vector<std::uint64_t> res;
  res.reserve(bound + 1);
  for (long n = 0; n <= bound; ++n) {
    ExactInt f = 0;
    for (long k = 0; k <= n; ++k) f += L.eval(n, k) * G.eval(k) * H.eval(n - k);
    res.push_back(mod_reduce(f, p));
  }
  return check_lucas_residues(res, p, bound);
}

inline LpSequence constant_one_sequence() {
  return {"1", [](long) -> ExactInt { return 1; }};
}

// a^n (an LP function by Fermat's little theorem)
inline LpSequence geometric_sequence(long long a) {
  return {std::to_string(a) + "^n", [a](long n) -> ExactInt {
            ExactInt r = 1;
            for (long i = 0; i < n; ++i) r *= a;
            return r;
          }};
}

}  // namespace aperylike
