#include "stacksort/series.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace stacksort::series {

namespace {
const BigRational kZero(0);
}

RationalSeries::RationalSeries(int order) {
  if (order < 0) throw std::invalid_argument("series order must be >= 0");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, kZero);
}

RationalSeries::RationalSeries(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least the constant coefficient");
}

RationalSeries RationalSeries::constant(const BigRational& c, int order) {
  RationalSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

RationalSeries RationalSeries::x(int order) {
  RationalSeries s(order);
  if (order >= 1) s.coeffs_[1] = BigRational(1);
  return s;
}

RationalSeries RationalSeries::truncated(int new_order) const {
  if (new_order > order()) throw std::invalid_argument("truncated cannot extend a series");
  RationalSeries s(new_order);
  for (int i = 0; i <= new_order; ++i) s.coeffs_[static_cast<std::size_t>(i)] = coeff(i);
  return s;
}

RationalSeries operator+(const RationalSeries& a, const RationalSeries& b) {
  const int n = std::min(a.order(), b.order());
  RationalSeries s(n);
  for (int i = 0; i <= n; ++i) s.set_coeff(i, a.coeff(i) + b.coeff(i));
  return s;
}

RationalSeries operator-(const RationalSeries& a, const RationalSeries& b) {
  const int n = std::min(a.order(), b.order());
  RationalSeries s(n);
  for (int i = 0; i <= n; ++i) s.set_coeff(i, a.coeff(i) - b.coeff(i));
  return s;
}

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
  const int n = std::min(a.order(), b.order());
  RationalSeries s(n);
  for (int i = 0; i <= n; ++i) {
    BigRational acc(0);
    for (int j = 0; j <= i; ++j) acc += a.coeff(j) * b.coeff(i - j);
    s.set_coeff(i, std::move(acc));
  }
  return s;
}

RationalSeries RationalSeries::operator*(const BigRational& c) const {
  RationalSeries s(order());
  for (int i = 0; i <= order(); ++i) s.set_coeff(i, coeff(i) * c);
  return s;
}

RationalSeries RationalSeries::inverse() const {
  if (coeff(0) == 0) throw std::domain_error("series inverse needs nonzero constant term");
  const int n = order();
  RationalSeries h(n);
  h.set_coeff(0, BigRational(1) / coeff(0));
  for (int i = 1; i <= n; ++i) {
    BigRational acc(0);
    for (int j = 0; j < i; ++j) acc += h.coeff(j) * coeff(i - j);
    h.set_coeff(i, -acc / coeff(0));
  }
  return h;
}

RationalSeries RationalSeries::divided_by(const RationalSeries& g) const {
  if (g.coeff(0) == 0) throw std::domain_error("series division needs nonzero constant term");
  const int n = std::min(order(), g.order());
  RationalSeries h(n);
  for (int i = 0; i <= n; ++i) {
    BigRational acc = coeff(i);
    for (int j = 0; j < i; ++j) acc -= h.coeff(j) * g.coeff(i - j);
    h.set_coeff(i, acc / g.coeff(0));
  }
  return h;
}

RationalSeries RationalSeries::shift_up(int k) const {
  if (k < 0) throw std::invalid_argument("shift_up needs k >= 0");
  RationalSeries s(order() + k);
  for (int i = 0; i <= order(); ++i) s.set_coeff(i + k, coeff(i));
  return s;
}

RationalSeries RationalSeries::shift_down(int k) const {
  if (k < 0 || k > order()) throw std::invalid_argument("shift_down needs 0 <= k <= order");
  for (int i = 0; i < k; ++i)
    if (coeff(i) != 0) throw std::domain_error("shift_down: low-order coefficients are nonzero");
  RationalSeries s(order() - k);
  for (int i = k; i <= order(); ++i) s.set_coeff(i - k, coeff(i));
  return s;
}

RationalSeries series_sqrt(const RationalSeries& f) {
  if (f.coeff(0) != 1) throw std::domain_error("series_sqrt requires f(0) = 1");
  const int n = f.order();
  RationalSeries g = RationalSeries::constant(BigRational(1), n);
  // g <- (g + f/g)/2 doubles the number of correct coefficients per step.
  int correct = 0;
  const BigRational half(1, 2);
  while (correct < n) {
    correct = std::min(2 * correct + 1, n);
    RationalSeries next = (g + f.divided_by(g)) * half;
    g = next;
  }
  return g;
}

RationalSeries series_compose(const RationalSeries& g, const RationalSeries& f) {
  if (f.coeff(0) != 0) throw std::domain_error("series_compose requires f(0) = 0");
  const int n = std::min(g.order(), f.order());
  const RationalSeries ft = f.truncated(n);
  RationalSeries acc = RationalSeries::constant(g.coeff(n), n);
  for (int i = n - 1; i >= 0; --i) {
    acc = acc * ft;
    acc.set_coeff(0, acc.coeff(0) + g.coeff(i));
  }
  return acc;
}

namespace {

std::vector<BigInt> integer_coeffs(const RationalSeries& s, int terms) {
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(terms) + 1);
  for (int i = 0; i <= terms; ++i) {
    const BigRational& c = s.coeff(i);
    if (boost::multiprecision::denominator(c) != 1)
      throw std::domain_error("generating function coefficient is not an integer");
    out.push_back(boost::multiprecision::numerator(c));
  }
  return out;
}

RationalSeries poly(std::vector<long long> cs, int order) {
  RationalSeries s(order);
  for (std::size_t i = 0; i < cs.size() && static_cast<int>(i) <= order; ++i)
    s.set_coeff(static_cast<int>(i), BigRational(cs[i]));
  return s;
}

RationalSeries catalan_series(int order) {
  // C(x) = (1 - sqrt(1-4x)) / (2x)
  const RationalSeries s = series_sqrt(poly({1, -4}, order + 1));
  const RationalSeries one = RationalSeries::constant(BigRational(1), order + 1);
  return (one - s).shift_down(1) * BigRational(1, 2);
}

}  // namespace

std::vector<BigInt> gf_coefficients(const std::string& name, int terms) {
  if (terms < 0) throw std::invalid_argument("terms must be >= 0");
  const int m = terms + 2;
  if (name == "catalan") {
    return integer_coeffs(catalan_series(m), terms);
  }
  if (name == "schroeder") {
    // (1 - x - sqrt(1-6x+x^2)) / 2
    const RationalSeries s = series_sqrt(poly({1, -6, 1}, m));
    return integer_coeffs((poly({1, -1}, m) - s) * BigRational(1, 2), terms);
  }
  if (name == "fine") {
    // (1/x) (1 - sqrt(1-4x)) / (3 - sqrt(1-4x))
    const RationalSeries s = series_sqrt(poly({1, -4}, m));
    const RationalSeries q = (poly({1}, m) - s).divided_by(poly({3}, m) - s);
    return integer_coeffs(q.shift_down(1), terms);
  }
  if (name == "conj2") {
    // (1 - 2x - sqrt(1-4x-4x^2)) / (4x)
    const RationalSeries s = series_sqrt(poly({1, -4, -4}, m));
    return integer_coeffs((poly({1, -2}, m) - s).shift_down(1) * BigRational(1, 4), terms);
  }
  if (name == "conj5") {
    // 1 / (1 - x C(x C(x)))
    const RationalSeries c = catalan_series(m);
    const RationalSeries xc = c.shift_up(1);
    const RationalSeries inner = series_compose(c, xc);
    const RationalSeries den = poly({1}, m) - inner.shift_up(1);
    return integer_coeffs(den.inverse(), terms);
  }
  throw std::invalid_argument("unknown generating function: " + name);
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<BigInt> d;
  for (int i = 1; i <= degree(); ++i) d.push_back(coeff(i) * i);
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return *this;
  BigInt content(0);
  for (const BigInt& c : coeffs_) content = boost::multiprecision::gcd(content, c);
  std::vector<BigInt> out;
  out.reserve(coeffs_.size());
  for (const BigInt& c : coeffs_) out.push_back(c / content);
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::negated() const {
  std::vector<BigInt> out;
  out.reserve(coeffs_.size());
  for (const BigInt& c : coeffs_) out.push_back(-c);
  return IntPolynomial(std::move(out));
}

namespace {

// Pseudo-remainder scaled by a positive constant, so the sign pattern matches
// the true remainder of a/b (needed for Sturm chains). Computes
// lc(b)^s * a mod b for the number of scalings s actually performed, then
// negates if that multiplier is negative.
IntPolynomial positive_prem(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> r = a.coeffs();
  const int db = b.degree();
  const BigInt& lb = b.leading();
  int dr = a.degree();
  int scalings = 0;
  while (dr >= db) {
    const BigInt lead = r[static_cast<std::size_t>(dr)];
    for (BigInt& c : r) c *= lb;
    ++scalings;
    for (int i = 0; i <= db; ++i)
      r[static_cast<std::size_t>(dr - db + i)] -= lead * b.coeff(i);
    while (dr >= 0 && r[static_cast<std::size_t>(dr)] == 0) --dr;
    if (dr < 0) break;
  }
  r.resize(static_cast<std::size_t>(std::max(dr, -1) + 1));
  IntPolynomial rem{std::move(r)};
  const bool flip = lb < 0 && scalings % 2 == 1;
  return flip ? rem.negated() : rem;
}

int sign_of(const BigInt& v) { return v == 0 ? 0 : (v > 0 ? 1 : -1); }

int sign_variations(const std::vector<int>& signs) {
  int variations = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

}  // namespace

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial u = a.primitive_part();
  IntPolynomial v = b.primitive_part();
  if (u.is_zero()) return v.is_zero() || v.leading() > 0 ? v : v.negated();
  if (v.is_zero()) return u.leading() > 0 ? u : u.negated();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPolynomial r = positive_prem(u, v).primitive_part();
    u = std::move(v);
    v = std::move(r);
  }
  return u.leading() > 0 ? u : u.negated();
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("squarefree_part of zero polynomial");
  const IntPolynomial pp = p.primitive_part();
  if (pp.degree() == 0) return IntPolynomial({BigInt(1)});
  const IntPolynomial g = poly_gcd(pp, pp.derivative());
  // Exact division pp/g over the integers (Gauss: g primitive divides pp).
  std::vector<BigRational> rem;
  rem.reserve(pp.coeffs().size());
  for (const BigInt& c : pp.coeffs()) rem.emplace_back(c);
  const int dg = g.degree();
  const int dq = pp.degree() - dg;
  std::vector<BigInt> q(static_cast<std::size_t>(dq) + 1);
  for (int i = dq; i >= 0; --i) {
    BigRational lead = rem[static_cast<std::size_t>(i + dg)] / BigRational(g.leading());
    if (boost::multiprecision::denominator(lead) != 1)
      throw std::domain_error("squarefree_part: division not exact");
    q[static_cast<std::size_t>(i)] = boost::multiprecision::numerator(lead);
    for (int j = 0; j <= dg; ++j)
      rem[static_cast<std::size_t>(i + j)] -= lead * BigRational(g.coeff(j));
  }
  for (const BigRational& c : rem)
    if (c != 0) throw std::domain_error("squarefree_part: division not exact");
  return IntPolynomial(std::move(q));
}

int sturm_distinct_real_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("sturm on zero polynomial");
  if (p.degree() == 0) return 0;
  std::vector<IntPolynomial> chain;
  chain.push_back(p.primitive_part());
  chain.push_back(p.derivative().primitive_part());
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    IntPolynomial next = positive_prem(chain[chain.size() - 2], chain.back()).negated().primitive_part();
    if (next.is_zero()) break;
    chain.push_back(std::move(next));
  }
  std::vector<int> at_minus_inf;
  std::vector<int> at_plus_inf;
  for (const IntPolynomial& q : chain) {
    if (q.is_zero()) continue;
    const int lead = sign_of(q.leading());
    at_plus_inf.push_back(lead);
    at_minus_inf.push_back(q.degree() % 2 == 0 ? lead : -lead);
  }
  return sign_variations(at_minus_inf) - sign_variations(at_plus_inf);
}

bool is_real_rooted(const IntPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("is_real_rooted on zero polynomial");
  const IntPolynomial q = squarefree_part(p);
  if (q.degree() <= 0) return true;
  return sturm_distinct_real_roots(q) == q.degree();
}

bool is_log_concave(const std::vector<BigInt>& a) {
  for (std::size_t j = 1; j + 1 < a.size(); ++j)
    if (a[j] * a[j] < a[j - 1] * a[j + 1]) return false;
  return true;
}

bool is_unimodal(const std::vector<BigInt>& a) {
  bool decreasing = false;
  for (std::size_t j = 1; j < a.size(); ++j) {
    if (a[j] < a[j - 1]) decreasing = true;
    else if (a[j] > a[j - 1] && decreasing) return false;
  }
  return true;
}

}  // namespace stacksort::series
