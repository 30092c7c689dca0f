#pragma once

#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace stacksort {

// All counting is exact. Rationals appear only transiently inside closed-form
// formulas; counting interfaces expose integers.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Integer division that must be exact. Closed forms like C_n = (1/(n+1))·C(2n,n)
// are evaluated this way so a transcription error surfaces as a loud failure
// instead of a silently truncated count.
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw std::domain_error("exact_div: division by zero");
  BigInt q = a / b;
  if (q * b != a) throw std::domain_error("exact_div: inexact division");
  return q;
}

}  // namespace stacksort
