#include "stacksort/numbers.hpp"

#include <mutex>
#include <stdexcept>

#include "stacksort/series.hpp"

namespace stacksort::numbers {

BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt power_of_two(long long e) {
  if (e < 0) throw std::invalid_argument("power_of_two needs e >= 0");
  return BigInt(1) << static_cast<unsigned>(e);
}

BigInt catalan(int n) {
  if (n < 0) return 0;
  static std::mutex mu;
  static std::vector<BigInt> cache;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= n) {
    const int m = static_cast<int>(cache.size());
    cache.push_back(exact_div(binomial(2LL * m, m), m + 1));
  }
  return cache[static_cast<std::size_t>(n)];
}

BigInt catalan_product(const Composition& q) {
  BigInt prod = 1;
  for (int part : q) prod *= catalan(part);
  return prod;
}

BigInt narayana(int i, int j) {
  if (i < 1 || j < 1 || j > i) return 0;
  return exact_div(binomial(i, j) * binomial(i, j - 1), i);
}

BigInt vee(int i, int j) {
  if (i < 1 || j < 1 || 2 * j - 2 > i - 1) return 0;
  return power_of_two(i - 2 * j + 1) * binomial(i - 1, 2 * j - 2) * catalan(j - 1);
}

BigInt gen_narayana(int k, int n, int r) {
  if (n < 1) return 0;
  return exact_div(BigInt(k + 1) * binomial(n, r + k) * binomial(n, r - 1), n);
}

BigInt w2(int n) {
  if (n < 0) return 0;
  if (n == 0) return 1;
  return exact_div(BigInt(2) * binomial(3LL * n, n), BigInt(n + 1) * (2 * n + 1));
}

BigInt baxter(int n) {
  if (n < 1) return n == 0 ? BigInt(1) : BigInt(0);
  BigInt sum = 0;
  for (int k = 1; k <= n; ++k)
    sum += binomial(n + 1, k - 1) * binomial(n + 1, k) * binomial(n + 1, k + 1);
  return exact_div(BigInt(2) * sum, BigInt(n) * (n + 1) * (n + 1));
}

BigInt fine(int n) {
  if (n < 0) return 0;
  static std::mutex mu;
  static std::vector<BigInt> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (static_cast<int>(cache.size()) <= n)
    cache = series::gf_coefficients("fine", std::max(n, series::kDefaultOrder));
  return cache[static_cast<std::size_t>(n)];
}

BigInt g_refined(int n, int m) {
  BigInt sum = 0;
  for (int k = 0; k <= (n - 1) / 2; ++k) sum += gen_narayana(k, n - k, m - k + 1);
  return sum;
}

BigInt h_refined(int n, int m) {
  if (m < 0 || n - 2 * m - 1 < 0) return 0;
  return exact_div(power_of_two(n - 2 * m - 1) * binomial(n + 2, m + 1) * binomial(n - m - 1, m),
                   n + 2);
}

BigInt av321_by_descents(int n, int k) {
  if (n < 0 || k < 0 || (n > 0 && k > n - 1)) return 0;
  // The closed form's k = 0 row would need the convention C(-1,-1) = 1; the
  // unique 0-descent 321-avoider is the identity, so handle it directly.
  if (k == 0) return 1;
  BigInt sum = 0;
  for (int j = 0; j <= n + 1 - 2 * k; ++j)
    sum += binomial(k + j - 1, k - 1) * binomial(n + 1 - k, n - 2 * k - j);
  return exact_div(binomial(n + 1, k) * sum, n + 1);
}

BigInt thm3_total(int n) {
  if (n < 2) throw std::invalid_argument("thm3_total needs n >= 2");
  return 2 * catalan(n) - 2 * catalan(n - 1);
}

BigInt thm3_descents(int n, int m) {
  BigInt sum = narayana(n, m + 1);
  for (int i = 1; i <= n - 2; ++i)
    for (int j = 1; j <= m; ++j) sum += narayana(n - i - 1, j) * narayana(i, m - j + 1);
  return sum;
}

BigInt thm3_peaks(int n, int m) {
  BigInt sum = vee(n, m + 1);
  for (int i = 1; i <= n - 2; ++i)
    for (int j = 1; j <= m; ++j) sum += vee(n - i - 1, j) * vee(i, m - j + 1);
  return sum;
}

BigInt thm9_total(int n) {
  BigInt sum = 0;
  for (int k = 0; k <= n - 1; ++k) sum += conj1_rhs(n, k);
  return sum;
}

BigInt thm10_fertility(int n, int k) {
  return exact_div(BigInt(2 * k + 2) * binomial(2LL * n - 2 * k - 1, n), n + 1);
}

BigInt thm10_descents(int n, int k, int m) { return gen_narayana(k, n - k, m - k + 1); }

BigInt thm16_total(int n) { return binomial(2LL * n - 2, n - 1); }

BigInt thm16_descents(int n, int m) {
  const BigInt b = binomial(n - 1, m);
  return b * b;
}

BigInt thm16_peaks(int n, int m) {
  // [x^n y^m] of x/sqrt(1-4x-4x^2(y-1)).
  if (m < 0 || 2 * m > n - 1) return 0;
  return power_of_two(n - 2 * m - 1) * binomial(n - 1, 2 * m) * binomial(2 * m, m);
}

BigInt thm_formula(const std::string& id, const std::vector<int>& params) {
  auto arg = [&](std::size_t i) -> int {
    if (i >= params.size()) throw std::invalid_argument("thm_formula: missing parameter for " + id);
    return params[i];
  };
  if (id == "thm3") return thm3_total(arg(0));
  if (id == "thm3_descents") return thm3_descents(arg(0), arg(1));
  if (id == "thm3_peaks") return thm3_peaks(arg(0), arg(1));
  if (id == "thm9") return thm9_total(arg(0));
  if (id == "thm10") return thm10_fertility(arg(0), arg(1));
  if (id == "thm10_descents") return thm10_descents(arg(0), arg(1), arg(2));
  if (id == "thm14_bound") return thm10_fertility(arg(0), arg(1));
  if (id == "thm14_bound_descents") return thm10_descents(arg(0), arg(1), arg(2));
  if (id == "thm16_total") return thm16_total(arg(0));
  if (id == "thm16_descents") return thm16_descents(arg(0), arg(1));
  if (id == "thm16_peaks") return thm16_peaks(arg(0), arg(1));
  if (id == "eq14") return av321_by_descents(arg(0), arg(1));
  if (id == "w2") return w2(arg(0));
  if (id == "baxter") return baxter(arg(0));
  if (id == "fine") return fine(arg(0));
  if (id == "catalan") return catalan(arg(0));
  if (id == "narayana") return narayana(arg(0), arg(1));
  if (id == "vee") return vee(arg(0), arg(1));
  if (id == "gen_narayana") return gen_narayana(arg(0), arg(1), arg(2));
  if (id == "g") return g_refined(arg(0), arg(1));
  if (id == "h") return h_refined(arg(0), arg(1));
  if (id == "conj1_lhs") return conj1_lhs(arg(0), arg(1));
  if (id == "conj1_rhs") return conj1_rhs(arg(0), arg(1));
  throw std::invalid_argument("thm_formula: unknown id " + id);
}

namespace {

void comp_rec(int parts_left, int remaining, Composition& cur, std::vector<Composition>& out) {
  if (parts_left == 0) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  // Each remaining part needs at least 1.
  for (int v = 1; v + (parts_left - 1) <= remaining; ++v) {
    cur.push_back(v);
    comp_rec(parts_left - 1, remaining - v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Composition> comp_set(int a, int b) {
  std::vector<Composition> out;
  if (a < 0 || b < 0) return out;
  if (a == 0) {
    if (b == 0) out.emplace_back();
    return out;
  }
  Composition cur;
  comp_rec(a, b, cur, out);
  return out;
}

bool comp_leq(const Composition& x, const Composition& y) {
  if (x.size() != y.size()) throw std::invalid_argument("comp_leq needs equal part counts");
  long long sx = 0;
  long long sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    if (sx > sy) return false;
  }
  return sx == sy;
}

Partition psi(const Composition& x) {
  const int a = static_cast<int>(x.size());
  Partition lambda;
  for (int i = 1; i <= a - 1; ++i)
    for (int rep = 0; rep < x[static_cast<std::size_t>(i - 1)] - 1; ++rep) lambda.push_back(a - i);
  return lambda;
}

Composition psi_inverse(const Partition& lambda, int a, int b) {
  Composition x(static_cast<std::size_t>(a), 1);
  int total = a;
  for (int part : lambda) {
    const int i = a - part;  // parts of length a-i came from x_i
    if (part < 1 || part > a - 1) throw std::invalid_argument("psi_inverse: part out of range");
    ++x[static_cast<std::size_t>(i - 1)];
    ++total;
  }
  if (total > b) throw std::invalid_argument("psi_inverse: partition too large for Comp_a(b)");
  x[static_cast<std::size_t>(a - 1)] += b - total;
  return x;
}

bool partition_leq(const Partition& lambda, const Partition& mu) {
  if (lambda.size() > mu.size()) return false;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    if (lambda[i] > mu[i]) return false;
  return true;
}

BigInt downset_count(const Composition& x) {
  const Partition lambda = psi(x);
  const int rows = static_cast<int>(lambda.size());
  if (rows == 0) return 1;
  // Count partitions mu <= lambda row by row: g(i,c) = number of choices for
  // rows i..r with mu_i <= min(c, lambda_i).
  const int width = lambda[0];
  std::vector<BigInt> next(static_cast<std::size_t>(width) + 1, BigInt(1));
  std::vector<BigInt> cur(static_cast<std::size_t>(width) + 1);
  for (int i = rows - 1; i >= 0; --i) {
    for (int c = 0; c <= width; ++c) {
      const int hi = std::min(c, lambda[static_cast<std::size_t>(i)]);
      BigInt acc = 0;
      for (int v = 0; v <= hi; ++v) acc += next[static_cast<std::size_t>(v)];
      cur[static_cast<std::size_t>(c)] = acc;
    }
    std::swap(cur, next);
  }
  return next[static_cast<std::size_t>(width)];
}

BigInt downset_count_bruteforce(const Composition& x) {
  const int a = static_cast<int>(x.size());
  int b = 0;
  for (int part : x) b += part;
  BigInt count = 0;
  for (const Composition& y : comp_set(a, b))
    if (comp_leq(y, x)) ++count;
  return count;
}

BigInt conj1_lhs(int n, int k) {
  BigInt sum = 0;
  for (const Composition& q : comp_set(k + 1, n - k)) sum += catalan_product(q) * downset_count(q);
  return sum;
}

BigInt conj1_rhs(int n, int k) {
  return exact_div(binomial(n - k - 1, k) * binomial(2LL * (n - k), n), n + 1);
}

}  // namespace stacksort::numbers
