#pragma once

#include <string>
#include <vector>

#include "stacksort/bigint.hpp"

namespace stacksort::series {

inline constexpr int kDefaultOrder = 32;

// Truncated power series c_0 + c_1 x + ... + c_N x^N with exact rational
// coefficients. Binary operations truncate to the smaller operand order, so
// results are always correct to their stated order.
class RationalSeries {
 public:
  explicit RationalSeries(int order);
  explicit RationalSeries(std::vector<BigRational> coeffs);

  static RationalSeries constant(const BigRational& c, int order);
  static RationalSeries x(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigRational& coeff(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  void set_coeff(int i, BigRational v) { coeffs_[static_cast<std::size_t>(i)] = std::move(v); }

  RationalSeries truncated(int new_order) const;

  friend RationalSeries operator+(const RationalSeries& a, const RationalSeries& b);
  friend RationalSeries operator-(const RationalSeries& a, const RationalSeries& b);
  friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);
  RationalSeries operator*(const BigRational& c) const;
  bool operator==(const RationalSeries&) const = default;

  // 1/f, requires f(0) != 0.
  RationalSeries inverse() const;
  // f/g, requires g(0) != 0.
  RationalSeries divided_by(const RationalSeries& g) const;
  // Multiply by x^k (order grows by k).
  RationalSeries shift_up(int k) const;
  // Divide by x^k; errors unless the k low-order coefficients vanish.
  RationalSeries shift_down(int k) const;

 private:
  std::vector<BigRational> coeffs_;
};

// g with g^2 = f to f's order and g(0) = 1. Newton iteration with per-step
// order doubling. Requires f(0) = 1.
RationalSeries series_sqrt(const RationalSeries& f);

// g(f(x)) truncated; requires f(0) = 0.
RationalSeries series_compose(const RationalSeries& g, const RationalSeries& f);

// Coefficients x^0..x^terms of a named generating function, exact integers.
// Names: catalan, schroeder, fine, conj2, conj5.
std::vector<BigInt> gf_coefficients(const std::string& name, int terms);

// Exact integer-coefficient polynomial, ascending order, trailing zeros
// stripped (the zero polynomial has an empty coefficient list).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const BigInt& coeff(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  const BigInt& leading() const { return coeffs_.back(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  IntPolynomial derivative() const;
  IntPolynomial primitive_part() const;  // divide by positive content, keep sign
  IntPolynomial negated() const;

  bool operator==(const IntPolynomial&) const = default;

 private:
  std::vector<BigInt> coeffs_;
};

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial squarefree_part(const IntPolynomial& p);

// Number of distinct real roots, exact, via a Sturm chain with primitive-part
// reduction. Input must be squarefree and nonzero.
int sturm_distinct_real_roots(const IntPolynomial& p);

// True iff every complex root of p is real. p must not be identically zero.
bool is_real_rooted(const IntPolynomial& p);

bool is_log_concave(const std::vector<BigInt>& a);
bool is_unimodal(const std::vector<BigInt>& a);

}  // namespace stacksort::series
