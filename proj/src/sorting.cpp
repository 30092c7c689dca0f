#include "stacksort/sorting.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace stacksort {

namespace {

// Core pass over an arbitrary word of distinct values.
void sort_pass(const std::vector<int>& in, std::vector<int>& out, std::string* trace) {
  std::vector<int> stack;
  out.clear();
  out.reserve(in.size());
  for (int next : in) {
    while (!stack.empty() && next > stack.back()) {
      out.push_back(stack.back());
      stack.pop_back();
      if (trace) *trace += 'B';
    }
    stack.push_back(next);
    if (trace) *trace += 'A';
  }
  while (!stack.empty()) {
    out.push_back(stack.back());
    stack.pop_back();
    if (trace) *trace += 'B';
  }
}

void sort_rec(const std::vector<int>& word, std::vector<int>& out) {
  if (word.empty()) return;
  const auto max_it = std::max_element(word.begin(), word.end());
  std::vector<int> left(word.begin(), max_it);
  std::vector<int> right(max_it + 1, word.end());
  sort_rec(left, out);
  sort_rec(right, out);
  out.push_back(*max_it);
}

}  // namespace

Permutation sort_once(const Permutation& p) {
  std::vector<int> out;
  sort_pass(p.entries(), out, nullptr);
  return Permutation(std::move(out));
}

Permutation sort_once_recursive(const Permutation& p) {
  std::vector<int> out;
  out.reserve(p.entries().size());
  sort_rec(p.entries(), out);
  return Permutation(std::move(out));
}

Permutation sort_iter(const Permutation& p, int t) {
  if (t < 0) throw std::invalid_argument("sort_iter needs t >= 0");
  Permutation cur = p;
  for (int i = 0; i < t; ++i) cur = sort_once(cur);
  return cur;
}

bool is_t_sortable(const Permutation& p, int t) {
  return sort_iter(p, t) == Permutation::identity(p.size());
}

std::string pushpop_word(const Permutation& p) {
  std::string trace;
  trace.reserve(2 * static_cast<std::size_t>(p.size()));
  std::vector<int> out;
  sort_pass(p.entries(), out, &trace);
  return trace;
}

namespace {

std::uint64_t factorial_u64(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

ImageCounts::ImageCounts(int n, int jobs) : n_(n) {
  if (n < 0 || n > kImageCountsCap)
    throw std::invalid_argument("image_multiset cap exceeded (n <= " + std::to_string(kImageCountsCap) + ")");
  const std::uint64_t total = factorial_u64(n);
  counts_.assign(total, 0);
  jobs = std::max(1, jobs);
  if (n <= 1 || jobs == 1) {
    Permutation p = Permutation::identity(n);
    std::vector<int> word = p.entries();
    std::vector<int> out;
    do {
      sort_pass(word, out, nullptr);
      ++counts_[lex_rank(Permutation(out))];
    } while (std::next_permutation(word.begin(), word.end()));
    return;
  }
  // Partition S_n by rank range; workers bucket into the shared table with
  // relaxed atomic increments (pure counting, order-free).
  const int workers = static_cast<int>(std::min<std::uint64_t>(jobs, total));
  std::vector<std::thread> threads;
  for (int w = 0; w < workers; ++w) {
    const std::uint64_t lo = total * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(workers);
    const std::uint64_t hi = total * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(workers);
    threads.emplace_back([this, lo, hi] {
      std::vector<int> word = from_lex_rank(n_, lo).entries();
      std::vector<int> out;
      for (std::uint64_t r = lo; r < hi; ++r) {
        sort_pass(word, out, nullptr);
        std::atomic_ref<std::uint64_t>(counts_[lex_rank(Permutation(out))])
            .fetch_add(1, std::memory_order_relaxed);
        std::next_permutation(word.begin(), word.end());
      }
    });
  }
  for (auto& t : threads) t.join();
}

std::uint64_t ImageCounts::count(const Permutation& target) const {
  if (target.size() != n_ || !target.is_standard()) return 0;
  return counts_[lex_rank(target)];
}

ImageCounts image_multiset(int n, int jobs) { return ImageCounts(n, jobs); }

RefinedImageCounts::RefinedImageCounts(int n) : n_(n) {
  if (n < 1 || n > 8) throw std::invalid_argument("refined oracle supports 1 <= n <= 8");
  const std::uint64_t total = factorial_u64(n);
  desc_.assign(total * static_cast<std::uint64_t>(n), 0);
  peak_.assign(total * static_cast<std::uint64_t>(n), 0);
  std::vector<int> word = Permutation::identity(n).entries();
  std::vector<int> out;
  do {
    Permutation src(word);
    sort_pass(word, out, nullptr);
    const std::uint64_t r = lex_rank(Permutation(out));
    ++desc_[r * static_cast<std::uint64_t>(n) + descents(src).size()];
    ++peak_[r * static_cast<std::uint64_t>(n) + peaks(src).size()];
  } while (std::next_permutation(word.begin(), word.end()));
}

std::uint64_t RefinedImageCounts::by_descents(const Permutation& target, int m) const {
  if (target.size() != n_ || m < 0 || m >= n_) return 0;
  return desc_[lex_rank(target) * static_cast<std::uint64_t>(n_) + static_cast<std::uint64_t>(m)];
}

std::uint64_t RefinedImageCounts::by_peaks(const Permutation& target, int m) const {
  if (target.size() != n_ || m < 0 || m >= n_) return 0;
  return peak_[lex_rank(target) * static_cast<std::uint64_t>(n_) + static_cast<std::uint64_t>(m)];
}

std::vector<Permutation> preimages_bruteforce(const Permutation& p) {
  const int n = p.size();
  if (n > 8) throw std::invalid_argument("preimages_bruteforce supports n <= 8");
  std::vector<Permutation> fiber;
  if (n == 0) {
    fiber.emplace_back();
    return fiber;
  }
  std::vector<int> word = Permutation::identity(n).entries();
  std::vector<int> out;
  do {
    sort_pass(word, out, nullptr);
    if (out == p.entries()) fiber.emplace_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return fiber;
}

}  // namespace stacksort
