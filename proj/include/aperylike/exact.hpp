#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace aperylike {

// Value type of all sequence terms and intermediate products.
using ExactInt = boost::multiprecision::cpp_int;

// Quotient num/den when the division is exact; throws std::domain_error otherwise.
inline ExactInt exact_div(const ExactInt& num, const ExactInt& den) {
  ExactInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (!r.is_zero())
    throw std::domain_error("exact_div: " + den.str() + " does not divide " + num.str());
  return q;
}

// In-place variant for hot loops.
inline void exact_div_assign(ExactInt& num, const ExactInt& den) {
  ExactInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (!r.is_zero())
    throw std::domain_error("exact_div: " + den.str() + " does not divide " + num.str());
  num.swap(q);
}

// v reduced into [0, m).
inline std::uint64_t mod_reduce(const ExactInt& v, std::uint64_t m) {
  ExactInt r = v % m;
  if (r < 0) r += m;
  return r.convert_to<std::uint64_t>();
}

}  // namespace aperylike
