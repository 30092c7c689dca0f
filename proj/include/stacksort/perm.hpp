#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace stacksort {

// A permutation in one-line notation: a word of distinct positive integers.
// "Standard" means the entry set is exactly {1,...,n}. The empty permutation is
// a legal value. All index-valued interfaces are 1-based.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> entries);

  static Permutation identity(int n);

  // Accepts "3 1 4 2", "3,1,4,2", and (when every entry is a single digit)
  // the contiguous form "3142". Emission is always space-separated.
  static Permutation parse(const std::string& text);
  std::string str() const;

  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  int entry(int i) const { return entries_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& entries() const { return entries_; }
  bool is_standard() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> entries_;
};

struct PermStats {
  std::vector<int> descents;                        // subset of [n-1]
  std::vector<int> peaks;                           // subset of {2,...,n-1}
  std::vector<std::pair<int, int>> ascending_runs;  // closed 1-based intervals
  std::vector<std::pair<int, int>> descending_runs;
  std::vector<int> ltr_maxima;
};

std::vector<int> descents(const Permutation& p);
std::vector<int> peaks(const Permutation& p);
PermStats stats(const Permutation& p);

// Plot of b placed above and to the right of the plot of a. Both standard.
Permutation direct_sum(const Permutation& a, const Permutation& b);

// i-th entry becomes n+1-p_{n+1-i}. Standard input; an involution.
Permutation reverse_complement(const Permutation& p);

// Standard permutation with the same relative order as the given word.
Permutation standardize(const std::vector<int>& word);
Permutation standardize(const Permutation& p);

// The named one-parameter families used throughout.
namespace families {
Permutation sigma(int n, int l);             // l 1 2 ... (l-1) (l+1) ... n
Permutation gamma(int n, int l);             // 2 3 ... l 1 (l+1) ... n
Permutation theta(int n, int k);             // (k+1) k ... 1 (k+2) ... n
Permutation delta(int h, int i, int t);      // (h+1)...(h+i) 1...h (h+i+1)...(h+i+t)
Permutation decreasing(int a);               // a (a-1) ... 1
}  // namespace families

// Lexicographic rank of a standard permutation within S_n (0-based), and its
// inverse. Used to bucket whole symmetric groups compactly.
std::uint64_t lex_rank(const Permutation& p);
Permutation from_lex_rank(int n, std::uint64_t rank);

}  // namespace stacksort
