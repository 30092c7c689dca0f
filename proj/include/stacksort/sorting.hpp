#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stacksort/perm.hpp"

namespace stacksort {

// West's deterministic stack-sorting map. The stack is decreasing from bottom
// to top: the next input entry is pushed while it is smaller than the top,
// otherwise the top is popped to the output. Equivalent to the recursion
// s(LnR) = s(L)s(R)n, which sort_once_recursive implements as a cross-check.
Permutation sort_once(const Permutation& p);
Permutation sort_once_recursive(const Permutation& p);

// t-fold application; t = 0 is the identity map.
Permutation sort_iter(const Permutation& p, int t);

// s^t(p) == 1 2 ... n
bool is_t_sortable(const Permutation& p, int t);

// Push/pop trace of one pass: 'A' per push, 'B' per pop. Balanced, length 2n.
std::string pushpop_word(const Permutation& p);

// Single-pass brute-force oracle: sorts every element of S_n once and buckets
// the images. Stored by lexicographic rank so S_10 fits comfortably.
class ImageCounts {
 public:
  explicit ImageCounts(int n, int jobs = 1);

  int n() const { return n_; }
  std::uint64_t count(const Permutation& target) const;
  std::uint64_t count_at_rank(std::uint64_t rank) const { return counts_[rank]; }

 private:
  int n_;
  std::vector<std::uint64_t> counts_;
};

inline constexpr int kImageCountsCap = 10;

ImageCounts image_multiset(int n, int jobs = 1);

// Refined oracle: buckets preimages by image and by the preimage's descent and
// peak counts. Only needed at n <= 8.
class RefinedImageCounts {
 public:
  explicit RefinedImageCounts(int n);

  int n() const { return n_; }
  std::uint64_t by_descents(const Permutation& target, int m) const;
  std::uint64_t by_peaks(const Permutation& target, int m) const;

 private:
  int n_;
  std::vector<std::uint64_t> desc_;  // rank * n + m
  std::vector<std::uint64_t> peak_;
};

// Per-target filter form, kept as an independent cross-check of the bucketing
// oracle and for listing small fibers. Scans all of S_n.
std::vector<Permutation> preimages_bruteforce(const Permutation& p);

}  // namespace stacksort
