#pragma once

// Sparse multivariate Laurent polynomials with exact coefficients, and the
// constant term of Lambda^n with degree-window pruning: a term of a partial
// product is kept only while every exponent coordinate can still be pulled
// back to zero by the remaining factors.

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "aperylike/exact.hpp"

namespace aperylike {

class LaurentPolynomial {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, ExactInt>;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static LaurentPolynomial constant(std::vector<std::string> vars, ExactInt c) {
    LaurentPolynomial p(std::move(vars));
    p.add_term(Exponents(p.vars_.size(), 0), std::move(c));
    return p;
  }

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // accumulate coeff on the given exponent vector; zero results are pruned
  void add_term(Exponents exps, ExactInt coeff) {
    if (exps.size() != vars_.size())
      throw std::invalid_argument("LaurentPolynomial: exponent vector has wrong length");
    if (coeff.is_zero()) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
      terms_.emplace(std::move(exps), std::move(coeff));
    } else {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  ExactInt coefficient(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? ExactInt(0) : it->second;
  }

  ExactInt constant_term() const { return coefficient(Exponents(vars_.size(), 0)); }

  // multiply by the monomial with the given exponent vector
  LaurentPolynomial shifted(const Exponents& delta) const {
    if (delta.size() != vars_.size())
      throw std::invalid_argument("LaurentPolynomial: shift vector has wrong length");
    LaurentPolynomial out(vars_);
    for (const auto& [e, c] : terms_) {
      Exponents shifted = e;
      for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += delta[i];
      out.terms_.emplace(std::move(shifted), c);
    }
    return out;
  }

  friend LaurentPolynomial multiply(const LaurentPolynomial& f, const LaurentPolynomial& g) {
    if (f.vars_ != g.vars_)
      throw std::invalid_argument("multiply: operands have different variable lists");
    LaurentPolynomial out(f.vars_);
    for (const auto& [ef, cf] : f.terms_) {
      for (const auto& [eg, cg] : g.terms_) {
        Exponents e = ef;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += eg[i];
        auto [it, inserted] = out.terms_.try_emplace(std::move(e), 0);
        it->second += cf * cg;
        if (it->second.is_zero()) out.terms_.erase(it);
      }
    }
    return out;
  }

  friend LaurentPolynomial operator*(const LaurentPolynomial& f, const LaurentPolynomial& g) {
    return multiply(f, g);
  }

  friend LaurentPolynomial operator+(const LaurentPolynomial& f, const LaurentPolynomial& g) {
    if (f.vars_ != g.vars_)
      throw std::invalid_argument("operator+: operands have different variable lists");
    LaurentPolynomial out = f;
    for (const auto& [e, c] : g.terms_) out.add_term(e, c);
    return out;
  }

  bool operator==(const LaurentPolynomial& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
  }

 private:
  std::vector<std::string> vars_;
  TermMap terms_;
};

namespace detail {

struct ExponentWindow {
  std::vector<int> min_exp, max_exp;  // per-variable extremes over the support
};

inline ExponentWindow exponent_window(const LaurentPolynomial& p) {
  std::size_t d = p.variables().size();
  ExponentWindow w{std::vector<int>(d, 0), std::vector<int>(d, 0)};
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < d; ++i) {
      if (first || e[i] < w.min_exp[i]) w.min_exp[i] = e[i];
      if (first || e[i] > w.max_exp[i]) w.max_exp[i] = e[i];
    }
    first = false;
  }
  return w;
}

// drop terms that cannot reach exponent zero within `remaining` factors
inline LaurentPolynomial pruned(const LaurentPolynomial& p, long remaining,
                                const ExponentWindow& w) {
  LaurentPolynomial out(p.variables());
  for (const auto& [e, c] : p.terms()) {
    bool keep = true;
    for (std::size_t i = 0; i < e.size() && keep; ++i) {
      long lo = e[i] + remaining * static_cast<long>(w.min_exp[i]);
      long hi = e[i] + remaining * static_cast<long>(w.max_exp[i]);
      keep = lo <= 0 && 0 <= hi;
    }
    if (keep) out.add_term(e, c);
  }
  return out;
}

}  // namespace detail

// constant term of lambda^n
inline ExactInt ct_power(const LaurentPolynomial& lambda, long n, bool prune = true) {
  if (n < 0) throw std::invalid_argument("ct_power: negative power");
  if (n == 0) return 1;
  auto window = detail::exponent_window(lambda);
  LaurentPolynomial acc = lambda;
  if (prune) acc = detail::pruned(acc, n - 1, window);
  for (long step = 2; step <= n; ++step) {
    acc = multiply(acc, lambda);
    if (prune) acc = detail::pruned(acc, n - step, window);
  }
  return acc.constant_term();
}

// Named kernels usable from the CLI. "apery3" is the three-variable kernel
// (x+y)(z+1)(x+y+z)(y+z+1)/(xyz) whose n-th constant-term power is the n-th
// Apery number.
inline const LaurentPolynomial& kernel_polynomial(std::string_view name) {
  static const LaurentPolynomial apery3 = [] {
    std::vector<std::string> vars{"x", "y", "z"};
    auto mono = [&vars](int ex, int ey, int ez, int c = 1) {
      LaurentPolynomial p(vars);
      p.add_term({ex, ey, ez}, c);
      return p;
    };
    LaurentPolynomial x_plus_y = mono(1, 0, 0) + mono(0, 1, 0);
    LaurentPolynomial z_plus_1 = mono(0, 0, 1) + mono(0, 0, 0);
    LaurentPolynomial x_y_z = mono(1, 0, 0) + mono(0, 1, 0) + mono(0, 0, 1);
    LaurentPolynomial y_z_1 = mono(0, 1, 0) + mono(0, 0, 1) + mono(0, 0, 0);
    return (x_plus_y * z_plus_1 * x_y_z * y_z_1).shifted({-1, -1, -1});
  }();
  if (name == "apery3") return apery3;
  throw std::invalid_argument("kernel_polynomial: unknown kernel \"" + std::string(name) + "\"");
}

inline std::vector<std::string> kernel_names() { return {"apery3"}; }

}  // namespace aperylike
