#pragma once

// Exact integer primitives shared by every other header: generalized
// binomials (negative upper entry allowed), factorials, Pochhammer symbols,
// base-p digits, and Lucas-reduced binomials modulo a prime.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "aperylike/exact.hpp"

namespace aperylike {

// ---------------------------------------------------------------------------
// small modular arithmetic (residues normalized to [0, m) throughout)

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

// signed value into [0, m)
inline std::uint64_t norm_mod(long long v, std::uint64_t m) {
  long long r = v % static_cast<long long>(m);
  if (r < 0) r += static_cast<long long>(m);
  return static_cast<std::uint64_t>(r);
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a >= b ? a - b : a + m - b;
}

// inverse of a modulo m, gcd(a, m) = 1 required
inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
  long long t = 0, new_t = 1;
  long long r = static_cast<long long>(m), new_r = static_cast<long long>(a % m);
  while (new_r != 0) {
    long long q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw std::domain_error("inv_mod: argument not invertible");
  if (t < 0) t += static_cast<long long>(m);
  return static_cast<std::uint64_t>(t);
}

// deterministic Miller-Rabin, valid for all 64-bit inputs
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// exact combinatorial primitives

inline ExactInt factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  ExactInt r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

// C(x, m) = x (x-1) ... (x-m+1) / m! for any integer x and m >= 0.
// Returns 0 for m < 0 (annihilating convention: no summand support ever
// queries m < 0, so 0 is safe).
inline ExactInt binomial(long long x, long long m) {
  if (m < 0) return 0;
  if (m == 0) return 1;
  if (x >= 0) {
    if (x < m) return 0;
    if (x - m < m) m = x - m;  // symmetry, shorter product
    ExactInt r = 1;
    for (long long i = 1; i <= m; ++i) {
      r *= x - i + 1;
      exact_div_assign(r, ExactInt(i));  // prefix is C(x, i), division exact
    }
    return r;
  }
  // x < 0: every prefix C(x, i) is a nonzero integer
  ExactInt r = 1;
  for (long long i = 1; i <= m; ++i) {
    r *= x - i + 1;
    exact_div_assign(r, ExactInt(i));
  }
  return r;
}

// rising factorial (x)_k = x (x+1) ... (x+k-1), with (x)_0 = 1
inline ExactInt pochhammer(long long x, long long k) {
  if (k < 0) throw std::invalid_argument("pochhammer: negative length");
  ExactInt r = 1;
  for (long long i = 0; i < k; ++i) r *= x + i;
  return r;
}

// ---------------------------------------------------------------------------
// base-p expansions

struct PAdicDigits {
  std::uint64_t prime = 2;
  std::vector<std::uint64_t> digits;  // little-endian, each in [0, prime)

  ExactInt value() const {
    ExactInt v = 0;
    for (std::size_t i = digits.size(); i-- > 0;) v = v * prime + digits[i];
    return v;
  }
};

inline PAdicDigits to_digits(const ExactInt& n, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("to_digits: base must be prime");
  if (n < 0) throw std::invalid_argument("to_digits: negative index");
  PAdicDigits d{p, {}};
  if (n == 0) {
    d.digits = {0};
    return d;
  }
  ExactInt v = n;
  while (v > 0) {
    d.digits.push_back(mod_reduce(v, p));
    v /= p;
  }
  return d;
}

// ---------------------------------------------------------------------------
// binomials modulo a prime

// Factorial tables for one prime; gives O(digits) binomials via Lucas'
// theorem and the generalized (negative upper entry) reduction.
class BinomModP {
 public:
  explicit BinomModP(std::uint64_t p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("BinomModP: modulus must be prime");
    fact_.resize(p);
    inv_fact_.resize(p);
    fact_[0] = 1 % p;
    for (std::uint64_t i = 1; i < p; ++i) fact_[i] = mul_mod(fact_[i - 1], i, p);
    inv_fact_[p - 1] = inv_mod(fact_[p - 1], p);
    for (std::uint64_t i = p - 1; i > 0; --i) inv_fact_[i - 1] = mul_mod(inv_fact_[i], i, p);
  }

  std::uint64_t prime() const { return p_; }

  // C(a, b) mod p for single digits 0 <= a, b < p
  std::uint64_t digit(std::uint64_t a, std::uint64_t b) const {
    if (b > a) return 0;
    return mul_mod(fact_[a], mul_mod(inv_fact_[b], inv_fact_[a - b], p_), p_);
  }

  // C(n, k) mod p via the digitwise product; shorter expansion pads with 0
  std::uint64_t binom(std::uint64_t n, std::uint64_t k) const {
    std::uint64_t acc = 1 % p_;
    while (n != 0 || k != 0) {
      std::uint64_t a = n % p_, b = k % p_;
      if (b > a) return 0;
      acc = mul_mod(acc, digit(a, b), p_);
      n /= p_;
      k /= p_;
    }
    return acc;
  }

  // generalized C(x, m) mod p for integer x of either sign, m >= 0
  std::uint64_t binom_signed(long long x, long long m) const {
    if (m < 0) return 0;
    if (x >= 0) {
      if (x < m) return 0;
      return binom(static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(m));
    }
    std::uint64_t v = binom(static_cast<std::uint64_t>(-x + m - 1), static_cast<std::uint64_t>(m));
    if ((m & 1) && v != 0) v = p_ - v;  // (-1)^m
    return v;
  }

 private:
  std::uint64_t p_;
  std::vector<std::uint64_t> fact_, inv_fact_;
};

// C(n, k) mod p as the digitwise product of Lucas' theorem.
inline std::uint64_t binomial_mod_lucas(const ExactInt& n, const ExactInt& k, std::uint64_t p) {
  BinomModP table(p);
  PAdicDigits dn = to_digits(n, p), dk = to_digits(k, p);
  std::uint64_t acc = 1 % p;
  std::size_t len = std::max(dn.digits.size(), dk.digits.size());
  for (std::size_t i = 0; i < len; ++i) {
    std::uint64_t a = i < dn.digits.size() ? dn.digits[i] : 0;
    std::uint64_t b = i < dk.digits.size() ? dk.digits[i] : 0;
    acc = mul_mod(acc, table.digit(a, b), p);
  }
  return acc;
}

}  // namespace aperylike
