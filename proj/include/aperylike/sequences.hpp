#pragma once

// Registry and dual evaluators (binomial sum, three-term recurrence) for the
// fifteen sporadic sequences, plus the parameterized families
// A_{r,s}, the eta family with sign exponent, and even binomial power sums.
//
// Second-order rows solve   (n+1)^2 u_{n+1} = (a n^2 + a n + b) u_n - c n^2 u_{n-1},
// third-order rows solve    (n+1)^3 u_{n+1} = (2n+1)(a n^2 + a n + b) u_n - n (c n^2 + d) u_{n-1},
// both with u_{-1} = 0, u_0 = 1.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "aperylike/exact.hpp"
#include "aperylike/kernel.hpp"

namespace aperylike {

enum class SequenceId { a, b, c, d, f, g, delta, eta, alpha, epsilon, zeta, gamma, s7, s10, s18 };

struct RecurrenceParams {
  long long a = 0, b = 0, c = 0, d = 0;  // d only used by third-order rows
};

struct SequenceDescriptor {
  SequenceId id;
  std::string name;          // stable string used by the CLI and reports
  int order;                 // 2 or 3
  RecurrenceParams params;
  std::string search_label;  // Zagier's letter for second-order rows
  int level;                 // modular level for s7/s10/s18, 0 otherwise
  ExactInt (*term_sum)(long);         // canonical binomial-sum evaluator
  ExactInt (*term_sum_oracle)(long);  // bracketed original form where it differs
};

// thrown when a recurrence step fails to divide exactly (wrong parameters)
struct NonIntegralStep : std::runtime_error {
  long step;
  explicit NonIntegralStep(long n)
      : std::runtime_error("recurrence step " + std::to_string(n) + " is not integral"), step(n) {}
};

// ---------------------------------------------------------------------------
// binomial rows (each O(n) big-integer operations)

namespace rows {

// C(n, k) for k = 0..n
inline std::vector<ExactInt> binom(long n) {
  std::vector<ExactInt> r(n + 1);
  r[0] = 1;
  for (long k = 0; k < n; ++k) {
    r[k + 1] = r[k] * (n - k);
    exact_div_assign(r[k + 1], ExactInt(k + 1));
  }
  return r;
}

// C(n+k, k) for k = 0..n
inline std::vector<ExactInt> binom_shifted(long n) {
  std::vector<ExactInt> r(n + 1);
  r[0] = 1;
  for (long k = 0; k < n; ++k) {
    r[k + 1] = r[k] * (n + k + 1);
    exact_div_assign(r[k + 1], ExactInt(k + 1));
  }
  return r;
}

// C(2k, k) for k = 0..kmax
inline std::vector<ExactInt> central(long kmax) {
  std::vector<ExactInt> r(kmax + 1);
  r[0] = 1;
  for (long k = 0; k < kmax; ++k) {
    r[k + 1] = r[k] * (2 * (2 * k + 1));
    exact_div_assign(r[k + 1], ExactInt(k + 1));
  }
  return r;
}

// C(2k, n) for k = 0..n (zero while 2k < n)
inline std::vector<ExactInt> central_cross(long n) {
  std::vector<ExactInt> r(n + 1);
  long k0 = (n + 1) / 2;
  if (n >= 0) r[k0] = (2 * k0 == n) ? 1 : ExactInt(n + 1);
  for (long k = k0; k < n; ++k) {
    r[k + 1] = r[k] * (2 * k + 1) * (2 * k + 2);
    exact_div_assign(r[k + 1], ExactInt(2 * k + 1 - n) * (2 * k + 2 - n));
  }
  return r;
}

// (3k)!/k!^3 for k = 0..kmax
inline std::vector<ExactInt> central_multinomial(long kmax) {
  std::vector<ExactInt> r(kmax + 1);
  r[0] = 1;
  for (long k = 0; k < kmax; ++k) {
    r[k + 1] = r[k] * (3 * k + 1) * (3 * k + 2) * (3 * k + 3);
    exact_div_assign(r[k + 1], ExactInt(k + 1) * (k + 1) * (k + 1));
  }
  return r;
}

}  // namespace rows

// ---------------------------------------------------------------------------
// binomial-sum evaluators

namespace sums {

inline ExactInt seq_a(long n) {
  ExactInt s = 0;
  for (const ExactInt& v : rows::binom(n)) s += v * v * v;
  return s;
}

inline ExactInt seq_b(long n) {
  auto cn = rows::binom(n);
  auto sh = rows::binom_shifted(n);
  ExactInt s = 0;
  for (long k = 0; k <= n; ++k) s += cn[k] * cn[k] * sh[k];
  return s;
}

inline ExactInt seq_c(long n) {
  auto cn = rows::binom(n);
  auto ce = rows::central(n);
  ExactInt s = 0;
  for (long k = 0; k <= n; ++k) s += cn[k] * cn[k] * ce[k];
  return s;
}

inline ExactInt seq_d(long n) {
  auto cn = rows::binom(n);
  auto ce = rows::central(n);
  ExactInt s = 0;
  for (long k = 0; k <= n; ++k) s += cn[k] * ce[k] * ce[n - k];
  return s;
}

inline ExactInt seq_f(long n) {
  auto mu = rows::central_multinomial(n / 3);
  ExactInt s = 0, p3 = boost::multiprecision::pow(ExactInt(3), static_cast<unsigned>(n));
  for (long k = 0; 3 * k <= n; ++k) {
    ExactInt t = p3 * binomial(n, 3 * k) * mu[k];
    s += (k & 1) ? -t : t;
    if (3 * (k + 1) <= n) exact_div_assign(p3, ExactInt(27));
  }
  return s;
}

inline ExactInt seq_g(long n) {
  auto cn = rows::binom(n);
  ExactInt s = 0, p8 = boost::multiprecision::pow(ExactInt(8), static_cast<unsigned>(n));
  for (long k = 0; k <= n; ++k) {
    ExactInt t = p8 * cn[k] * seq_a(k);  // inner Franel sum
    s += (k & 1) ? -t : t;
    if (k < n) exact_div_assign(p8, ExactInt(8));
  }
  return s;
}

inline ExactInt seq_delta(long n) {
  auto mu = rows::central_multinomial(n / 3);
  auto sh = rows::binom_shifted(n);
  ExactInt s = 0, p3 = boost::multiprecision::pow(ExactInt(3), static_cast<unsigned>(n));
  for (long k = 0; 3 * k <= n; ++k) {
    ExactInt t = p3 * binomial(n, 3 * k) * sh[k] * mu[k];
    s += (k & 1) ? -t : t;
    if (3 * (k + 1) <= n) exact_div_assign(p3, ExactInt(27));
  }
  return s;
}

// canonical eta evaluator: the negative-entry form over the full range
inline ExactInt seq_eta(long n) {
  auto cn = rows::binom(n);
  ExactInt s = 0;
  for (long k = 0; k <= n; ++k) {
    ExactInt b = binomial(4 * n - 5 * k, 3 * n);
    if (b.is_zero()) continue;
    ExactInt t = cn[k] * cn[k] * cn[k] * b;
    s += (k & 1) ? -t : t;
  }
  return s;
}

// bracketed original form (pair of binomials, k <= n/5); the n = 0 bracket
// would give 2, so the value 1 is pinned there as for s18
inline ExactInt seq_eta_table(long n) {
  if (n == 0) return 1;
  auto cn = rows::binom(n);
  ExactInt s = 0;
  for (long k = 0; 5 * k <= n; ++k) {
    ExactInt t = cn[k] * cn[k] * cn[k] *
                 (binomial(4 * n - 5 * k - 1, 3 * n) + binomial(4 * n - 5 * k, 3 * n));
    s += (k & 1) ? -t : t;
  }
  return s;
}

inline ExactInt seq_alpha(long n) {
  auto cn = rows::binom(n);
  auto ce = rows::central(n);
  ExactInt s = 0;
  for (long k = 0; k <= n; ++k) s += cn[k] * cn[k] * ce[k] * ce[n - k];
  return s;
}

inline ExactInt seq_epsilon(long n) {
  auto cn = rows::binom(n);
  auto cc = rows::central_cross(n);
  ExactInt s = 0;
  for (long k = 0; k <= n; ++k) s += cn[k] * cn[k] * cc[k] * cc[k];
  return s;
}

// double sum over k, l; the inner sum is supported on n-k <= l <= k and is
// walked with exact ratio steps on P = C(n,l) C(k,l) C(k+l,n)
inline ExactInt seq_zeta(long n) {
  auto cn = rows::binom(n);
  ExactInt total = 0;
  for (long k = (n + 1) / 2; k <= n; ++k) {
    long l0 = n - k;
    ExactInt p = cn[l0] * binomial(k, l0);  // l = l0 term, C(k+l0, n) = 1
    ExactInt inner = p;
    for (long l = l0 + 1; l <= k; ++l) {
      p *= n - l + 1;
      exact_div_assign(p, ExactInt(l));
      p *= k - l + 1;
      exact_div_assign(p, ExactInt(l));
      p *= k + l;
      exact_div_assign(p, ExactInt(k + l - n));
      inner += p;
    }
    total += cn[k] * cn[k] * inner;
  }
  return total;
}

inline ExactInt seq_gamma(long n) {
  auto cn = rows::binom(n);
  auto sh = rows::binom_shifted(n);
  ExactInt s = 0;
  for (long k = 0; k <= n; ++k) s += cn[k] * cn[k] * sh[k] * sh[k];
  return s;
}

inline ExactInt seq_s7(long n) {
  auto cn = rows::binom(n);
  auto sh = rows::binom_shifted(n);
  auto cc = rows::central_cross(n);
  ExactInt s = 0;
  for (long k = 0; k <= n; ++k) s += cn[k] * cn[k] * sh[k] * cc[k];
  return s;
}

inline ExactInt seq_s10(long n) {
  ExactInt s = 0;
  for (const ExactInt& v : rows::binom(n)) s += v * v * v * v;
  return s;
}

// canonical s18 evaluator: the negative-entry form over the full range
inline ExactInt seq_s18(long n) {
  auto cn = rows::binom(n);
  auto ce = rows::central(n);
  ExactInt s = 0;
  for (long k = 0; k <= n; ++k) {
    ExactInt b = binomial(2 * n - 3 * k, n);
    if (b.is_zero()) continue;
    ExactInt t = cn[k] * ce[k] * ce[n - k] * b;
    s += (k & 1) ? -t : t;
  }
  return s;
}

// bracketed original form, defined for n >= 1 with s18(0) = 1
inline ExactInt seq_s18_table(long n) {
  if (n == 0) return 1;
  auto cn = rows::binom(n);
  auto ce = rows::central(n);
  ExactInt s = 0;
  for (long k = 0; 3 * k <= n; ++k) {
    ExactInt t = cn[k] * ce[k] * ce[n - k] *
                 (binomial(2 * n - 3 * k - 1, n) + binomial(2 * n - 3 * k, n));
    s += (k & 1) ? -t : t;
  }
  return s;
}

}  // namespace sums

// ---------------------------------------------------------------------------
// registry

inline const std::vector<SequenceDescriptor>& registry() {
  static const std::vector<SequenceDescriptor> table = {
      {SequenceId::a, "a", 2, {7, 2, -8, 0}, "A", 0, &sums::seq_a, nullptr},
      {SequenceId::b, "b", 2, {11, 3, -1, 0}, "D", 0, &sums::seq_b, nullptr},
      {SequenceId::c, "c", 2, {10, 3, 9, 0}, "C", 0, &sums::seq_c, nullptr},
      {SequenceId::d, "d", 2, {12, 4, 32, 0}, "E", 0, &sums::seq_d, nullptr},
      {SequenceId::f, "f", 2, {9, 3, 27, 0}, "B", 0, &sums::seq_f, nullptr},
      {SequenceId::g, "g", 2, {17, 6, 72, 0}, "F", 0, &sums::seq_g, nullptr},
      {SequenceId::delta, "delta", 3, {7, 3, 81, 0}, "", 0, &sums::seq_delta, nullptr},
      {SequenceId::eta, "eta", 3, {11, 5, 125, 0}, "", 0, &sums::seq_eta, &sums::seq_eta_table},
      {SequenceId::alpha, "alpha", 3, {10, 4, 64, 0}, "", 0, &sums::seq_alpha, nullptr},
      {SequenceId::epsilon, "epsilon", 3, {12, 4, 16, 0}, "", 0, &sums::seq_epsilon, nullptr},
      {SequenceId::zeta, "zeta", 3, {9, 3, -27, 0}, "", 0, &sums::seq_zeta, nullptr},
      {SequenceId::gamma, "gamma", 3, {17, 5, 1, 0}, "", 0, &sums::seq_gamma, nullptr},
      {SequenceId::s7, "s7", 3, {13, 4, -27, 3}, "", 7, &sums::seq_s7, nullptr},
      {SequenceId::s10, "s10", 3, {6, 2, -64, 4}, "", 10, &sums::seq_s10, nullptr},
      {SequenceId::s18, "s18", 3, {14, 6, 192, -12}, "", 18, &sums::seq_s18, &sums::seq_s18_table},
  };
  return table;
}

inline const SequenceDescriptor& descriptor(SequenceId id) {
  for (const auto& s : registry())
    if (s.id == id) return s;
  throw std::logic_error("descriptor: unregistered id");
}

inline const SequenceDescriptor* find_sequence(std::string_view name) {
  for (const auto& s : registry())
    if (s.name == name) return &s;
  return nullptr;
}

// ---------------------------------------------------------------------------
// recurrence evaluation

namespace detail {

// numerator of (n+1)^order u_{n+1}; the small coefficients are applied one at
// a time so no intermediate needs more than 64 bits
inline ExactInt recurrence_numerator(const SequenceDescriptor& s, long n, const ExactInt& u_n,
                                     const ExactInt& u_prev) {
  const auto& q = s.params;
  long long nn = static_cast<long long>(n) * n;
  if (s.order == 2) return u_n * (q.a * nn + q.a * n + q.b) - u_prev * (q.c * nn);
  ExactInt lhs = u_n * (q.a * nn + q.a * n + q.b);
  lhs *= 2 * static_cast<long long>(n) + 1;
  ExactInt rhs = u_prev * (q.c * nn + q.d);
  rhs *= n;
  return lhs - rhs;
}

inline ExactInt step_divisor(const SequenceDescriptor& s, long n) {
  ExactInt d = n + 1;
  ExactInt d2 = d * d;
  if (s.order == 2) return d2;
  return ExactInt(d2 * d);
}

}  // namespace detail

inline ExactInt term_by_recurrence(const SequenceDescriptor& s, long n) {
  if (n < 0) throw std::invalid_argument("term_by_recurrence: negative index");
  ExactInt prev = 0, cur = 1;
  for (long i = 0; i < n; ++i) {
    ExactInt num = detail::recurrence_numerator(s, i, cur, prev);
    ExactInt q, r;
    boost::multiprecision::divide_qr(num, detail::step_divisor(s, i), q, r);
    if (!r.is_zero()) throw NonIntegralStep(i + 1);
    prev.swap(cur);
    cur.swap(q);
  }
  return cur;
}

inline ExactInt term_by_sum(const SequenceDescriptor& s, long n) {
  if (n < 0) throw std::invalid_argument("term_by_sum: negative index");
  return s.term_sum(n);
}

// terms 0..n_max by the recurrence (the fast evaluator); the returned table
// is the memo, owned by the caller
inline std::vector<ExactInt> terms(const SequenceDescriptor& s, long n_max) {
  if (n_max < 0) throw std::invalid_argument("terms: negative bound");
  std::vector<ExactInt> out;
  out.reserve(n_max + 1);
  ExactInt prev = 0, cur = 1;
  out.push_back(cur);
  for (long i = 0; i < n_max; ++i) {
    ExactInt num = detail::recurrence_numerator(s, i, cur, prev);
    ExactInt q, r;
    boost::multiprecision::divide_qr(num, detail::step_divisor(s, i), q, r);
    if (!r.is_zero()) throw NonIntegralStep(i + 1);
    prev.swap(cur);
    cur.swap(q);
    out.push_back(cur);
  }
  return out;
}

// residues term(n) mod m for n = 0..n_max, by exact recurrence then reduction;
// only two big integers are live at a time
inline std::vector<std::uint64_t> residue_stream(const SequenceDescriptor& s, long n_max,
                                                 std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("residue_stream: modulus must be >= 2");
  std::vector<std::uint64_t> out;
  out.reserve(n_max + 1);
  ExactInt prev = 0, cur = 1;
  out.push_back(mod_reduce(cur, m));
  for (long i = 0; i < n_max; ++i) {
    ExactInt num = detail::recurrence_numerator(s, i, cur, prev);
    ExactInt q, r;
    boost::multiprecision::divide_qr(num, detail::step_divisor(s, i), q, r);
    if (!r.is_zero()) throw NonIntegralStep(i + 1);
    prev.swap(cur);
    cur.swap(q);
    out.push_back(mod_reduce(cur, m));
  }
  return out;
}

// ---------------------------------------------------------------------------
// parameterized families

struct FamilySpec {
  enum class Kind { apery_generalized, eta_family, power_sum };
  Kind kind;
  int r = 0, s = 0;    // apery_generalized(r, s): sum C(n,k)^r C(n+k,k)^s
  int a = 0, eps = 0;  // eta_family(a, eps): sum (-1)^{eps k} C(n,k)^a C(4n-5k, 3n)
  int power = 0;       // power_sum(2a): sum C(n,k)^{2a}

  static FamilySpec apery_generalized(int r, int s) {
    if (r < 1 || s < 1) throw std::invalid_argument("apery_generalized: exponents must be >= 1");
    FamilySpec f{Kind::apery_generalized};
    f.r = r;
    f.s = s;
    return f;
  }
  static FamilySpec eta_family(int a, int eps) {
    if (a < 1 || (eps != 0 && eps != 1))
      throw std::invalid_argument("eta_family: need a >= 1 and eps in {0,1}");
    FamilySpec f{Kind::eta_family};
    f.a = a;
    f.eps = eps;
    return f;
  }
  static FamilySpec power_sum(int two_a) {
    if (two_a < 2 || two_a % 2 != 0)
      throw std::invalid_argument("power_sum: exponent must be even and >= 2");
    FamilySpec f{Kind::power_sum};
    f.power = two_a;
    return f;
  }

  std::string name() const {
    switch (kind) {
      case Kind::apery_generalized:
        return "apery_generalized(" + std::to_string(r) + "," + std::to_string(s) + ")";
      case Kind::eta_family:
        return "eta_family(" + std::to_string(a) + "," + std::to_string(eps) + ")";
      case Kind::power_sum:
        return "power_sum(" + std::to_string(power) + ")";
    }
    return {};
  }
};

inline ExactInt family_term(const FamilySpec& f, long n) {
  if (n < 0) throw std::invalid_argument("family_term: negative index");
  auto cn = rows::binom(n);
  ExactInt s = 0;
  switch (f.kind) {
    case FamilySpec::Kind::apery_generalized: {
      auto sh = rows::binom_shifted(n);
      for (long k = 0; k <= n; ++k)
        s += boost::multiprecision::pow(cn[k], static_cast<unsigned>(f.r)) *
             boost::multiprecision::pow(sh[k], static_cast<unsigned>(f.s));
      return s;
    }
    case FamilySpec::Kind::eta_family: {
      for (long k = 0; k <= n; ++k) {
        ExactInt b = binomial(4 * n - 5 * k, 3 * n);
        if (b.is_zero()) continue;
        ExactInt t = boost::multiprecision::pow(cn[k], static_cast<unsigned>(f.a)) * b;
        s += (f.eps && (k & 1)) ? -t : t;
      }
      return s;
    }
    case FamilySpec::Kind::power_sum: {
      for (long k = 0; k <= n; ++k)
        s += boost::multiprecision::pow(cn[k], static_cast<unsigned>(f.power));
      return s;
    }
  }
  throw std::logic_error("family_term: bad kind");
}

// family term mod p, evaluated digitwise (classical Lucas for the binomial
// factors); exact value of the term modulo p at any index
inline std::uint64_t family_term_mod(const FamilySpec& f, long n, const BinomModP& t) {
  const std::uint64_t p = t.prime();
  std::uint64_t s = 0;
  switch (f.kind) {
    case FamilySpec::Kind::apery_generalized: {
      for (long k = 0; k <= n; ++k) {
        std::uint64_t v = pow_mod(t.binom(n, k), f.r, p);
        v = mul_mod(v, pow_mod(t.binom(n + k, k), f.s, p), p);
        s = (s + v) % p;
      }
      return s;
    }
    case FamilySpec::Kind::eta_family: {
      for (long k = 0; k <= n; ++k) {
        std::uint64_t v = pow_mod(t.binom(n, k), f.a, p);
        v = mul_mod(v, t.binom_signed(4 * n - 5 * k, 3 * n), p);
        if (f.eps && (k & 1)) v = (p - v) % p;
        s = (s + v) % p;
      }
      return s;
    }
    case FamilySpec::Kind::power_sum: {
      for (long k = 0; k <= n; ++k) s = (s + pow_mod(t.binom(n, k), f.power, p)) % p;
      return s;
    }
  }
  throw std::logic_error("family_term_mod: bad kind");
}

inline std::vector<std::uint64_t> family_residues(const FamilySpec& f, long n_max,
                                                  std::uint64_t p) {
  BinomModP t(p);
  std::vector<std::uint64_t> out;
  out.reserve(n_max + 1);
  for (long n = 0; n <= n_max; ++n) out.push_back(family_term_mod(f, n, t));
  return out;
}

}  // namespace aperylike
