#include "stacksort/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace stacksort {

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  std::unordered_set<int> seen;
  for (int e : entries_) {
    if (e <= 0) throw std::invalid_argument("permutation entries must be positive");
    if (!seen.insert(e).second) throw std::invalid_argument("permutation entries must be distinct");
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<int> entries;
  const bool has_sep = text.find_first_of(" ,") != std::string::npos;
  if (has_sep) {
    std::string cur;
    for (char c : text) {
      if (c == ' ' || c == ',') {
        if (!cur.empty()) entries.push_back(std::stoi(cur));
        cur.clear();
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        cur += c;
      } else {
        throw std::invalid_argument("bad character in permutation: '" + std::string(1, c) + "'");
      }
    }
    if (!cur.empty()) entries.push_back(std::stoi(cur));
  } else {
    // Contiguous digit string: one entry per digit, only valid when all <= 9.
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("bad character in permutation: '" + std::string(1, c) + "'");
      entries.push_back(c - '0');
    }
  }
  return Permutation(std::move(entries));
}

std::string Permutation::str() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(entries_[i]);
  }
  return out;
}

bool Permutation::is_standard() const {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int e : entries_) {
    if (e > n) return false;
    seen[static_cast<std::size_t>(e)] = true;
  }
  for (int v = 1; v <= n; ++v)
    if (!seen[static_cast<std::size_t>(v)]) return false;
  return true;
}

std::vector<int> descents(const Permutation& p) {
  std::vector<int> d;
  for (int i = 1; i < p.size(); ++i)
    if (p.entry(i) > p.entry(i + 1)) d.push_back(i);
  return d;
}

std::vector<int> peaks(const Permutation& p) {
  std::vector<int> out;
  for (int i = 2; i < p.size(); ++i)
    if (p.entry(i - 1) < p.entry(i) && p.entry(i) > p.entry(i + 1)) out.push_back(i);
  return out;
}

PermStats stats(const Permutation& p) {
  PermStats st;
  st.descents = descents(p);
  st.peaks = peaks(p);
  const int n = p.size();
  if (n > 0) {
    int start = 1;
    for (int d : st.descents) {
      st.ascending_runs.emplace_back(start, d);
      start = d + 1;
    }
    st.ascending_runs.emplace_back(start, n);
    start = 1;
    for (int i = 1; i < n; ++i) {
      if (p.entry(i) < p.entry(i + 1)) {
        st.descending_runs.emplace_back(start, i);
        start = i + 1;
      }
    }
    st.descending_runs.emplace_back(start, n);
    int best = 0;
    for (int i = 1; i <= n; ++i) {
      if (p.entry(i) > best) {
        best = p.entry(i);
        st.ltr_maxima.push_back(i);
      }
    }
  }
  return st;
}

Permutation direct_sum(const Permutation& a, const Permutation& b) {
  if (!a.is_standard() || !b.is_standard())
    throw std::invalid_argument("direct_sum requires standard permutations");
  std::vector<int> v = a.entries();
  v.reserve(static_cast<std::size_t>(a.size() + b.size()));
  for (int e : b.entries()) v.push_back(e + a.size());
  return Permutation(std::move(v));
}

Permutation reverse_complement(const Permutation& p) {
  if (!p.is_standard()) throw std::invalid_argument("reverse_complement requires a standard permutation");
  const int n = p.size();
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) v[static_cast<std::size_t>(i - 1)] = n + 1 - p.entry(n + 1 - i);
  return Permutation(std::move(v));
}

Permutation standardize(const std::vector<int>& word) {
  std::vector<int> sorted = word;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("standardize requires distinct entries");
  std::vector<int> v;
  v.reserve(word.size());
  for (int e : word) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), e);
    v.push_back(static_cast<int>(it - sorted.begin()) + 1);
  }
  return Permutation(std::move(v));
}

Permutation standardize(const Permutation& p) { return standardize(p.entries()); }

namespace families {

Permutation sigma(int n, int l) {
  if (n < 1 || l < 1 || l > n) throw std::invalid_argument("sigma(n,l) needs 1 <= l <= n");
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(n));
  v.push_back(l);
  for (int e = 1; e <= n; ++e)
    if (e != l) v.push_back(e);
  return Permutation(std::move(v));
}

Permutation gamma(int n, int l) {
  if (n < 1 || l < 1 || l > n) throw std::invalid_argument("gamma(n,l) needs 1 <= l <= n");
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int e = 2; e <= l; ++e) v.push_back(e);
  v.push_back(1);
  for (int e = l + 1; e <= n; ++e) v.push_back(e);
  return Permutation(std::move(v));
}

Permutation theta(int n, int k) {
  if (n < 1 || k < 0 || k > n - 1) throw std::invalid_argument("theta(n,k) needs 0 <= k <= n-1");
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int e = k + 1; e >= 1; --e) v.push_back(e);
  for (int e = k + 2; e <= n; ++e) v.push_back(e);
  return Permutation(std::move(v));
}

Permutation delta(int h, int i, int t) {
  if (h < 1 || i < 1 || t < 1) throw std::invalid_argument("delta(h,i,t) needs h,i,t >= 1");
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(h + i + t));
  for (int e = h + 1; e <= h + i; ++e) v.push_back(e);
  for (int e = 1; e <= h; ++e) v.push_back(e);
  for (int e = h + i + 1; e <= h + i + t; ++e) v.push_back(e);
  return Permutation(std::move(v));
}

Permutation decreasing(int a) {
  if (a < 0) throw std::invalid_argument("decreasing(a) needs a >= 0");
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(a));
  for (int e = a; e >= 1; --e) v.push_back(e);
  return Permutation(std::move(v));
}

}  // namespace families

std::uint64_t lex_rank(const Permutation& p) {
  const int n = p.size();
  std::uint64_t rank = 0;
  std::uint64_t fact = 1;
  for (int i = 2; i <= n; ++i) fact *= static_cast<std::uint64_t>(i);
  for (int i = 1; i <= n; ++i) {
    fact /= static_cast<std::uint64_t>(n - i + 1);
    int smaller = 0;
    for (int j = i + 1; j <= n; ++j)
      if (p.entry(j) < p.entry(i)) ++smaller;
    rank += static_cast<std::uint64_t>(smaller) * fact;
  }
  return rank;
}

Permutation from_lex_rank(int n, std::uint64_t rank) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::uint64_t fact = 1;
  for (int i = 2; i <= n; ++i) fact *= static_cast<std::uint64_t>(i);
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int i = n; i >= 1; --i) {
    fact /= static_cast<std::uint64_t>(i);
    const auto idx = static_cast<std::size_t>(rank / fact);
    rank %= fact;
    v.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return Permutation(std::move(v));
}

}  // namespace stacksort
