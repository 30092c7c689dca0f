#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stacksort/numbers.hpp"
#include "stacksort/perm.hpp"

namespace stacksort::vhc {

using numbers::Composition;

// L-shaped path from a point up and right to a higher, later point. Both
// endpoints are 1-based indices into the host permutation; sw < ne and
// host[sw] < host[ne].
struct Hook {
  int sw = 0;
  int ne = 0;
  auto operator<=>(const Hook&) const = default;
};

// Hook i (in list order) has its southwest endpoint at the i-th descent top.
using HookConfig = std::vector<Hook>;

// Parameters read off the canonical configuration, the input to the
// valid-composition characterization.
struct CanonicalData {
  HookConfig hooks;
  std::vector<int> b_star;  // ne endpoint indices b_1*..b_k*
  Composition q_star;       // induced composition q_0*..q_k*
  std::vector<int> e;       // e_0..e_k with e_0 = k+1
  std::vector<int> alpha;   // alpha_1..alpha_{k+1}
  std::vector<int> d;       // d_0 = 0, descents, d_{k+1} = n
};

// Point (x, host[x]) lies strictly above the horizontal part of h. Endpoint
// columns are exempt.
bool point_above_hook(const Permutation& host, int x, const Hook& h);

// Exact integer segment-intersection test; the single shared point where the
// ne endpoint of one hook is the sw endpoint of the other is permitted.
bool hooks_conflict(const Permutation& host, const Hook& a, const Hook& b);

// Full check of the three validity conditions.
bool is_valid_config(const Permutation& host, const HookConfig& hooks);

// All valid hook configurations, sorted by their tuple of ne endpoints.
std::vector<HookConfig> enumerate_vhcs(const Permutation& p);

// Color per point: -1 for ne endpoints (uncolored), 0 for sky, i for hook i.
// Index 0 of the result corresponds to position 1.
std::vector<int> induced_coloring(const Permutation& p, const HookConfig& hooks);

// (q_0,...,q_k): q_0 sky points, q_i points colored like hook i.
Composition induced_composition(const Permutation& p, const HookConfig& hooks);

// Greedy construction choosing the leftmost feasible ne endpoint for the last
// hook backward. nullopt means the permutation has no valid hook
// configuration (fertility zero).
std::optional<CanonicalData> canonical_vhc(const Permutation& p);

// All valid compositions via the canonical-data characterization, generated
// with prefix-sum pruning. Sorted lexicographically.
std::vector<Composition> valid_compositions(const Permutation& p);

// Independent slow path: enumerate configurations and collect their induced
// compositions (deduplicated, sorted).
std::vector<Composition> valid_compositions_by_enumeration(const Permutation& p);

// |s^{-1}(p)| = sum of Catalan products over valid compositions.
BigInt fertility(const Permutation& p);

// Preimage counts refined by the preimage's descent / peak count. The
// polynomial forms return the whole vector indexed by m = 0..n-1.
std::vector<BigInt> fertility_descent_polynomial(const Permutation& p);
std::vector<BigInt> fertility_peak_polynomial(const Permutation& p);
BigInt fertility_by_descents(const Permutation& p, int m);
BigInt fertility_by_peaks(const Permutation& p, int m);

// Minimum tuple y for p in Av(231,312,321): the valid compositions of p are
// exactly the dominance upset of y. The last part is 0 exactly when p ends in
// a descent (no valid compositions).
Composition layered_min_composition(const Permutation& p);

// The descending-run-length-preserving bijection Av_n(132,312) ->
// Av_n(231,312); preserves valid-composition sets.
Permutation phi_layered(const Permutation& p);

std::string composition_str(const Composition& q);  // "(3,1,1)"

}  // namespace stacksort::vhc
