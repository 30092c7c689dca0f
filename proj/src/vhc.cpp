#include "stacksort/vhc.hpp"

#include <algorithm>
#include <stdexcept>

#include "stacksort/patterns.hpp"

namespace stacksort::vhc {

bool point_above_hook(const Permutation& host, int x, const Hook& h) {
  return h.sw < x && x < h.ne && host.entry(x) > host.entry(h.ne);
}

bool hooks_conflict(const Permutation& host, const Hook& a, const Hook& b) {
  if (a.sw == b.sw || a.ne == b.ne) return true;
  // Vertical segment of a crossing the horizontal segment of b. The crossing
  // point is (a.sw, host[b.ne]); it is permitted only when it is simultaneously
  // b's ne endpoint and a's sw endpoint, i.e. a.sw == b.ne.
  if (b.sw <= a.sw && a.sw <= b.ne && host.entry(a.sw) <= host.entry(b.ne) &&
      host.entry(b.ne) <= host.entry(a.ne) && a.sw != b.ne)
    return true;
  if (a.sw <= b.sw && b.sw <= a.ne && host.entry(b.sw) <= host.entry(a.ne) &&
      host.entry(a.ne) <= host.entry(b.ne) && b.sw != a.ne)
    return true;
  return false;
}

namespace {

bool hook_shape_ok(const Permutation& host, const Hook& h) {
  return 1 <= h.sw && h.sw < h.ne && h.ne <= host.size() && host.entry(h.sw) < host.entry(h.ne);
}

bool no_point_above(const Permutation& host, const Hook& h) {
  for (int x = h.sw + 1; x < h.ne; ++x)
    if (host.entry(x) > host.entry(h.ne)) return false;
  return true;
}

}  // namespace

bool is_valid_config(const Permutation& host, const HookConfig& hooks) {
  const std::vector<int> d = descents(host);
  if (hooks.size() != d.size()) return false;
  for (std::size_t i = 0; i < hooks.size(); ++i) {
    if (hooks[i].sw != d[i]) return false;
    if (!hook_shape_ok(host, hooks[i])) return false;
    if (!no_point_above(host, hooks[i])) return false;
  }
  for (std::size_t i = 0; i < hooks.size(); ++i)
    for (std::size_t j = i + 1; j < hooks.size(); ++j)
      if (hooks_conflict(host, hooks[i], hooks[j])) return false;
  return true;
}

namespace {

// Backtracks over ne choices for the hooks in the order H_k, ..., H_1,
// matching the canonical construction order.
void search_configs(const Permutation& host, const std::vector<int>& d, int level,
                    HookConfig& partial, std::vector<HookConfig>& out) {
  if (level == 0) {
    out.emplace_back(partial.rbegin(), partial.rend());
    return;
  }
  const int sw = d[static_cast<std::size_t>(level - 1)];
  for (int j = sw + 1; j <= host.size(); ++j) {
    if (host.entry(j) <= host.entry(sw)) continue;
    const Hook h{sw, j};
    if (!no_point_above(host, h)) continue;
    bool clash = false;
    for (const Hook& placed : partial)
      if (hooks_conflict(host, h, placed)) {
        clash = true;
        break;
      }
    if (clash) continue;
    partial.push_back(h);
    search_configs(host, d, level - 1, partial, out);
    partial.pop_back();
  }
}

}  // namespace

std::vector<HookConfig> enumerate_vhcs(const Permutation& p) {
  const std::vector<int> d = descents(p);
  std::vector<HookConfig> out;
  HookConfig partial;
  search_configs(p, d, static_cast<int>(d.size()), partial, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> induced_coloring(const Permutation& p, const HookConfig& hooks) {
  const int n = p.size();
  std::vector<bool> is_ne(static_cast<std::size_t>(n) + 1, false);
  for (const Hook& h : hooks) is_ne[static_cast<std::size_t>(h.ne)] = true;
  std::vector<int> color(static_cast<std::size_t>(n), 0);
  for (int x = 1; x <= n; ++x) {
    if (is_ne[static_cast<std::size_t>(x)]) {
      color[static_cast<std::size_t>(x - 1)] = -1;
      continue;
    }
    // The point looks straight up (a sw endpoint peeks around the left side of
    // its own vertical, which the strict h.sw < x already encodes) and takes
    // the color of the lowest hook it sees.
    int best = 0;
    int best_height = n + 1;
    for (std::size_t i = 0; i < hooks.size(); ++i) {
      const Hook& h = hooks[i];
      const int height = p.entry(h.ne);
      if (h.sw < x && x <= h.ne && height > p.entry(x) && height < best_height) {
        best = static_cast<int>(i) + 1;
        best_height = height;
      }
    }
    color[static_cast<std::size_t>(x - 1)] = best;
  }
  return color;
}

Composition induced_composition(const Permutation& p, const HookConfig& hooks) {
  const std::vector<int> color = induced_coloring(p, hooks);
  Composition q(hooks.size() + 1, 0);
  for (int c : color)
    if (c >= 0) ++q[static_cast<std::size_t>(c)];
  return q;
}

std::optional<CanonicalData> canonical_vhc(const Permutation& p) {
  const std::vector<int> d = descents(p);
  const int k = static_cast<int>(d.size());
  const int n = p.size();
  HookConfig partial;
  partial.reserve(static_cast<std::size_t>(k));
  // Greedy leftmost choice, last hook first. Failure at any level means no
  // configuration exists at all.
  for (int level = k; level >= 1; --level) {
    const int sw = d[static_cast<std::size_t>(level - 1)];
    bool placed = false;
    for (int j = sw + 1; j <= n && !placed; ++j) {
      if (p.entry(j) <= p.entry(sw)) continue;
      const Hook h{sw, j};
      if (!no_point_above(p, h)) continue;
      bool clash = false;
      for (const Hook& other : partial)
        if (hooks_conflict(p, h, other)) {
          clash = true;
          break;
        }
      if (!clash) {
        partial.push_back(h);
        placed = true;
      }
    }
    if (!placed) return std::nullopt;
  }
  CanonicalData cd;
  cd.hooks.assign(partial.rbegin(), partial.rend());
  cd.d.push_back(0);
  for (int di : d) cd.d.push_back(di);
  cd.d.push_back(n);
  for (const Hook& h : cd.hooks) cd.b_star.push_back(h.ne);
  cd.q_star = induced_composition(p, cd.hooks);
  cd.e.assign(static_cast<std::size_t>(k) + 1, 0);
  cd.e[0] = k + 1;
  for (int i = 1; i <= k; ++i) {
    const int b = cd.b_star[static_cast<std::size_t>(i - 1)];
    for (int run = 1; run <= k + 1; ++run) {
      if (cd.d[static_cast<std::size_t>(run - 1)] < b && b <= cd.d[static_cast<std::size_t>(run)]) {
        cd.e[static_cast<std::size_t>(i)] = run;
        break;
      }
    }
  }
  cd.alpha.assign(static_cast<std::size_t>(k) + 1, 0);
  for (int i = 1; i <= k; ++i) ++cd.alpha[static_cast<std::size_t>(cd.e[static_cast<std::size_t>(i)] - 1)];
  return cd;
}

namespace {

struct IntervalBound {
  int m;       // interval starts at q_m
  int bound;   // required sum over q_m..q_i at completion index i
};

// Generates Comp_{k+1}(n-k) members satisfying the canonical-data constraints.
// Every constraint is an interval lower bound; it is tested the moment its
// interval is complete, pruning the subtree immediately.
void generate_valid(int k, int idx, int remaining, std::vector<int>& prefix_sums,
                    Composition& cur, const std::vector<std::vector<IntervalBound>>& at_index,
                    std::vector<Composition>& out) {
  if (idx == k + 1) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  const int parts_left = k + 1 - idx;
  for (int v = 1; v + (parts_left - 1) <= remaining; ++v) {
    cur.push_back(v);
    const int s = prefix_sums.back() + v;
    prefix_sums.push_back(s);
    bool ok = true;
    for (const IntervalBound& c : at_index[static_cast<std::size_t>(idx)]) {
      const int interval = s - prefix_sums[static_cast<std::size_t>(c.m)];
      if (interval < c.bound) {
        ok = false;
        break;
      }
    }
    if (ok) generate_valid(k, idx + 1, remaining - v, prefix_sums, cur, at_index, out);
    prefix_sums.pop_back();
    cur.pop_back();
  }
}

}  // namespace

std::vector<Composition> valid_compositions(const Permutation& p) {
  const auto cd = canonical_vhc(p);
  if (!cd) return {};
  const int n = p.size();
  const int k = static_cast<int>(cd->b_star.size());
  if (n == 0) return {Composition{}};
  // Interval constraints, grouped by the index at which they become testable.
  std::vector<std::vector<IntervalBound>> at_index(static_cast<std::size_t>(k) + 1);
  for (int m = 0; m <= k; ++m) {
    // (a): sum_{j=m}^{e_m-1} q_j >= same sum of q*.
    const int em = cd->e[static_cast<std::size_t>(m)];
    int bound = 0;
    for (int j = m; j <= em - 1; ++j) bound += cd->q_star[static_cast<std::size_t>(j)];
    at_index[static_cast<std::size_t>(em - 1)].push_back({m, bound});
    // (b): for m <= p <= e_m - 2, sum_{j=m}^p q_j >= d_{p+1} - d_m - sum alpha.
    int alpha_sum = 0;
    for (int pp = m; pp <= em - 2; ++pp) {
      alpha_sum += cd->alpha[static_cast<std::size_t>(pp)];  // alpha_{p+1}, stored 0-based
      const int rhs = cd->d[static_cast<std::size_t>(pp + 1)] - cd->d[static_cast<std::size_t>(m)] - alpha_sum;
      if (rhs > 0) at_index[static_cast<std::size_t>(pp)].push_back({m, rhs});
    }
  }
  std::vector<Composition> out;
  std::vector<int> prefix_sums{0};
  Composition cur;
  generate_valid(k, 0, n - k, prefix_sums, cur, at_index, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Composition> valid_compositions_by_enumeration(const Permutation& p) {
  if (p.size() == 0) return {Composition{}};
  std::vector<Composition> out;
  for (const HookConfig& config : enumerate_vhcs(p)) out.push_back(induced_composition(p, config));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BigInt fertility(const Permutation& p) {
  BigInt total = 0;
  for (const Composition& q : valid_compositions(p)) total += numbers::catalan_product(q);
  return total;
}

namespace {

std::vector<BigInt> refined_polynomial(const Permutation& p, bool peaks_mode) {
  const int n = p.size();
  if (n == 0) return {BigInt(1)};
  std::vector<BigInt> f(static_cast<std::size_t>(n), BigInt(0));
  for (const Composition& q : valid_compositions(p)) {
    // Product over parts of sum_j stat(q_t, j) z^j; the coefficient of
    // z^{m+1} counts preimages with m descents (resp. peaks).
    std::vector<BigInt> prod{BigInt(1)};  // coefficient of z^0
    for (int part : q) {
      std::vector<BigInt> factor(static_cast<std::size_t>(part) + 1, BigInt(0));
      for (int j = 1; j <= part; ++j)
        factor[static_cast<std::size_t>(j)] =
            peaks_mode ? numbers::vee(part, j) : numbers::narayana(part, j);
      std::vector<BigInt> next(prod.size() + static_cast<std::size_t>(part), BigInt(0));
      for (std::size_t a = 0; a < prod.size(); ++a) {
        if (prod[a] == 0) continue;
        for (int j = 1; j <= part; ++j)
          next[a + static_cast<std::size_t>(j)] += prod[a] * factor[static_cast<std::size_t>(j)];
      }
      prod = std::move(next);
    }
    for (std::size_t deg = 1; deg < prod.size(); ++deg) {
      const std::size_t m = deg - 1;
      if (m < f.size()) f[m] += prod[deg];
    }
  }
  return f;
}

}  // namespace

std::vector<BigInt> fertility_descent_polynomial(const Permutation& p) {
  return refined_polynomial(p, false);
}

std::vector<BigInt> fertility_peak_polynomial(const Permutation& p) {
  return refined_polynomial(p, true);
}

BigInt fertility_by_descents(const Permutation& p, int m) {
  const std::vector<BigInt> f = fertility_descent_polynomial(p);
  if (m < 0 || m >= static_cast<int>(f.size())) return 0;
  return f[static_cast<std::size_t>(m)];
}

BigInt fertility_by_peaks(const Permutation& p, int m) {
  const std::vector<BigInt> f = fertility_peak_polynomial(p);
  if (m < 0 || m >= static_cast<int>(f.size())) return 0;
  return f[static_cast<std::size_t>(m)];
}

Composition layered_min_composition(const Permutation& p) {
  static const patterns::PatternBasis basis = patterns::parse_basis("231,312,321");
  if (!patterns::avoids_all(p, basis))
    throw std::invalid_argument("layered_min_composition needs p in Av(231,312,321)");
  const int n = p.size();
  if (n == 0) return {};
  const std::vector<int> d = descents(p);
  const int k = static_cast<int>(d.size());
  Composition y;
  if (k == 0) {
    y.push_back(n);
    return y;
  }
  std::vector<int> u(static_cast<std::size_t>(k));
  for (int idx = 0; idx <= k - 1; ++idx) u[static_cast<std::size_t>(idx)] = d[static_cast<std::size_t>(idx)] - idx;
  y.push_back(u[0]);
  for (int i = 1; i <= k - 1; ++i) y.push_back(u[static_cast<std::size_t>(i)] - u[static_cast<std::size_t>(i - 1)]);
  y.push_back(n - k - u[static_cast<std::size_t>(k - 1)]);
  return y;
}

Permutation phi_layered(const Permutation& p) {
  static const patterns::PatternBasis basis = patterns::parse_basis("132,312");
  if (!patterns::avoids_all(p, basis))
    throw std::invalid_argument("phi_layered needs p in Av(132,312)");
  Permutation result;
  for (const auto& [lo, hi] : stats(p).descending_runs)
    result = direct_sum(result, families::decreasing(hi - lo + 1));
  return result;
}

std::string composition_str(const Composition& q) {
  std::string out = "(";
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(q[i]);
  }
  out += ')';
  return out;
}

}  // namespace stacksort::vhc
