#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "stacksort/perm.hpp"

namespace stacksort::patterns {

enum class Kind { classical, barred, vincular };

// Classical, barred, or vincular permutation pattern. Text syntax: classical
// "1342"; a barred entry in square brackets "3[5]241"; a vincular (adjacent)
// block in parentheses "(32)41". Multi-digit entries are space-separated
// within the same bracket conventions. Only a single barred entry is
// supported; multi-bar patterns are rejected.
class Pattern {
 public:
  static Pattern classical(Permutation body);
  static Pattern barred(Permutation body, int barred_position);
  static Pattern vincular(Permutation body, std::vector<std::pair<int, int>> blocks);
  static Pattern parse(const std::string& text);

  Kind kind() const { return kind_; }
  const Permutation& body() const { return body_; }
  int barred_position() const { return barred_position_; }
  const std::vector<std::pair<int, int>>& vincular_blocks() const { return blocks_; }
  std::string str() const;

 private:
  Pattern(Kind kind, Permutation body, int barred_position,
          std::vector<std::pair<int, int>> blocks);

  Kind kind_ = Kind::classical;
  Permutation body_;
  int barred_position_ = 0;  // 1-based, barred patterns only
  std::vector<std::pair<int, int>> blocks_;
};

using PatternBasis = std::vector<Pattern>;

// Comma-separated list of patterns, e.g. "132,231,321".
PatternBasis parse_basis(const std::string& text);

bool contains(const Permutation& s, const Pattern& t);
bool avoids_all(const Permutation& s, const PatternBasis& basis);

// Av_n(basis) in lexicographic order. Classical bases are generated by
// extension (insert n into avoiders of length n-1); bases with barred or
// vincular members fall back to filtering S_n, since those notions of
// avoidance are not closed under pattern deletion.
std::vector<Permutation> av_n(const PatternBasis& basis, int n);

// Av_n(basis) restricted to permutations with exactly k descents.
std::vector<Permutation> av_nk(const PatternBasis& basis, int n, int k);

// Streams Av_n(basis) in lexicographic order without materializing the final
// level (the earlier levels of an extension run are still materialized).
void for_each_avoider(const PatternBasis& basis, int n,
                      const std::function<void(const Permutation&)>& fn);

}  // namespace stacksort::patterns
