#include "stacksort/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace stacksort::patterns {

Pattern::Pattern(Kind kind, Permutation body, int barred_position,
                 std::vector<std::pair<int, int>> blocks)
    : kind_(kind), body_(std::move(body)), barred_position_(barred_position),
      blocks_(std::move(blocks)) {
  if (body_.empty()) throw std::invalid_argument("pattern body must be nonempty");
  if (!body_.is_standard()) throw std::invalid_argument("pattern body must be a standard permutation");
  if (kind_ == Kind::barred) {
    if (barred_position_ < 1 || barred_position_ > body_.size())
      throw std::invalid_argument("barred position out of range");
    if (body_.size() < 2) throw std::invalid_argument("barred pattern needs an unbarred part");
  }
  if (kind_ == Kind::vincular) {
    if (blocks_.empty()) throw std::invalid_argument("vincular pattern needs a block");
    int prev_end = 0;
    for (const auto& [lo, hi] : blocks_) {
      if (lo <= prev_end || hi > body_.size() || hi - lo < 1)
        throw std::invalid_argument("vincular blocks must be disjoint intervals of length >= 2");
      prev_end = hi;
    }
  }
}

Pattern Pattern::classical(Permutation body) { return Pattern(Kind::classical, std::move(body), 0, {}); }

Pattern Pattern::barred(Permutation body, int barred_position) {
  return Pattern(Kind::barred, std::move(body), barred_position, {});
}

Pattern Pattern::vincular(Permutation body, std::vector<std::pair<int, int>> blocks) {
  return Pattern(Kind::vincular, std::move(body), 0, std::move(blocks));
}

Pattern Pattern::parse(const std::string& text) {
  const bool multi = text.find(' ') != std::string::npos;
  std::vector<int> entries;
  std::vector<int> barred_positions;
  std::vector<std::pair<int, int>> blocks;
  int region = 0;  // 0 plain, 1 inside [], 2 inside ()
  int block_start = 0;
  std::string token;
  auto flush_token = [&] {
    if (token.empty()) return;
    entries.push_back(std::stoi(token));
    token.clear();
    if (region == 1) barred_positions.push_back(static_cast<int>(entries.size()));
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      token += c;
      if (!multi) flush_token();
    } else if (c == ' ') {
      flush_token();
    } else if (c == '[') {
      flush_token();
      if (region != 0) throw std::invalid_argument("nested brackets in pattern: " + text);
      region = 1;
    } else if (c == ']') {
      flush_token();
      if (region != 1) throw std::invalid_argument("unmatched ']' in pattern: " + text);
      region = 0;
    } else if (c == '(') {
      flush_token();
      if (region != 0) throw std::invalid_argument("nested brackets in pattern: " + text);
      region = 2;
      block_start = static_cast<int>(entries.size()) + 1;
    } else if (c == ')') {
      flush_token();
      if (region != 2) throw std::invalid_argument("unmatched ')' in pattern: " + text);
      region = 0;
      blocks.emplace_back(block_start, static_cast<int>(entries.size()));
    } else {
      throw std::invalid_argument("bad character in pattern: '" + std::string(1, c) + "'");
    }
  }
  flush_token();
  if (region != 0) throw std::invalid_argument("unterminated bracket in pattern: " + text);
  Permutation body{entries};
  if (!barred_positions.empty() && !blocks.empty())
    throw std::invalid_argument("pattern cannot mix barred entries and vincular blocks: " + text);
  if (barred_positions.size() > 1)
    throw std::invalid_argument("multi-bar patterns are not supported: " + text);
  if (barred_positions.size() == 1) return barred(std::move(body), barred_positions[0]);
  if (!blocks.empty()) return vincular(std::move(body), std::move(blocks));
  return classical(std::move(body));
}

std::string Pattern::str() const {
  const bool multi = body_.size() > 9;
  std::string out;
  auto in_block = [&](int pos) {
    for (const auto& [lo, hi] : blocks_)
      if (pos >= lo && pos <= hi) return std::make_pair(lo, hi);
    return std::make_pair(0, 0);
  };
  for (int pos = 1; pos <= body_.size(); ++pos) {
    const auto [lo, hi] = in_block(pos);
    if (pos == lo) out += '(';
    if (kind_ == Kind::barred && pos == barred_position_) out += '[';
    out += std::to_string(body_.entry(pos));
    if (kind_ == Kind::barred && pos == barred_position_) out += ']';
    if (pos == hi) out += ')';
    if (multi && pos < body_.size()) out += ' ';
  }
  return out;
}

PatternBasis parse_basis(const std::string& text) {
  PatternBasis basis;
  std::string cur;
  auto flush = [&] {
    const auto first = cur.find_first_not_of(' ');
    if (first == std::string::npos) {
      cur.clear();
      return;
    }
    const auto last = cur.find_last_not_of(' ');
    basis.push_back(Pattern::parse(cur.substr(first, last - first + 1)));
    cur.clear();
  };
  for (char c : text) {
    if (c == ',') flush();
    else cur += c;
  }
  flush();
  if (basis.empty()) throw std::invalid_argument("empty pattern basis");
  return basis;
}

namespace {

bool is_increasing(const Permutation& p) {
  for (int i = 1; i < p.size(); ++i)
    if (p.entry(i) > p.entry(i + 1)) return false;
  return true;
}

bool is_decreasing(const Permutation& p) {
  for (int i = 1; i < p.size(); ++i)
    if (p.entry(i) < p.entry(i + 1)) return false;
  return true;
}

// Longest monotone subsequence at least m? Patience-style tails array.
bool has_monotone_subsequence(const Permutation& s, int m, bool increasing) {
  std::vector<int> tails;
  for (int i = 1; i <= s.size(); ++i) {
    const int v = increasing ? s.entry(i) : -s.entry(i);
    auto it = std::lower_bound(tails.begin(), tails.end(), v);
    if (it == tails.end()) {
      tails.push_back(v);
      if (static_cast<int>(tails.size()) >= m) return true;
    } else {
      *it = v;
    }
  }
  return static_cast<int>(tails.size()) >= m;
}

// Backtracking search for order-isomorphic embeddings of body into s.
// must_follow[p] forces index(p) = index(p-1) + 1 (vincular adjacency).
// visit receives the chosen 1-based indices and returns true to stop.
struct EmbedSearch {
  const Permutation& s;
  const Permutation& body;
  std::vector<bool> must_follow;
  const std::function<bool(const std::vector<int>&)>& visit;
  std::vector<int> idx;

  bool compatible(int p, int cand) const {
    const int v = s.entry(cand);
    for (int q = 0; q < p; ++q) {
      const bool pat_less = body.entry(q + 1) < body.entry(p + 1);
      if (pat_less != (s.entry(idx[static_cast<std::size_t>(q)]) < v)) return false;
    }
    return true;
  }

  bool rec(int p, int start) {
    const int m = body.size();
    if (p == m) return visit(idx);
    if (!must_follow.empty() && must_follow[static_cast<std::size_t>(p)]) {
      const int cand = idx[static_cast<std::size_t>(p - 1)] + 1;
      if (cand > s.size() - (m - p - 1)) return false;
      if (!compatible(p, cand)) return false;
      idx.push_back(cand);
      const bool stop = rec(p + 1, cand + 1);
      idx.pop_back();
      return stop;
    }
    for (int cand = start; cand <= s.size() - (m - p - 1); ++cand) {
      if (!compatible(p, cand)) continue;
      idx.push_back(cand);
      if (rec(p + 1, cand + 1)) {
        idx.pop_back();
        return true;
      }
      idx.pop_back();
    }
    return false;
  }

  bool run() {
    idx.clear();
    idx.reserve(static_cast<std::size_t>(body.size()));
    return rec(0, 1);
  }
};

bool find_embedding(const Permutation& s, const Permutation& body,
                    const std::vector<bool>& must_follow,
                    const std::function<bool(const std::vector<int>&)>& visit) {
  if (body.size() > s.size()) return false;
  EmbedSearch search{s, body, must_follow, visit, {}};
  return search.run();
}

bool contains_classical(const Permutation& s, const Permutation& body) {
  if (body.size() > s.size()) return false;
  if (is_increasing(body)) return has_monotone_subsequence(s, body.size(), true);
  if (is_decreasing(body)) return has_monotone_subsequence(s, body.size(), false);
  return find_embedding(s, body, {}, [](const std::vector<int>&) { return true; });
}

bool contains_vincular(const Permutation& s, const Pattern& t) {
  std::vector<bool> must_follow(static_cast<std::size_t>(t.body().size()), false);
  for (const auto& [lo, hi] : t.vincular_blocks())
    for (int pos = lo + 1; pos <= hi; ++pos) must_follow[static_cast<std::size_t>(pos - 1)] = true;
  return find_embedding(s, t.body(), must_follow,
                        [](const std::vector<int>&) { return true; });
}

bool contains_barred(const Permutation& s, const Pattern& t) {
  const Permutation& body = t.body();
  const int b = t.barred_position();
  const int m = body.size();
  std::vector<int> reduced_word;
  reduced_word.reserve(static_cast<std::size_t>(m - 1));
  for (int pos = 1; pos <= m; ++pos)
    if (pos != b) reduced_word.push_back(body.entry(pos));
  const Permutation reduction = standardize(reduced_word);

  // Occurrence indices occ are for the reduction; body position b sits between
  // reduction slots b-1 and b. The occurrence is "part of" the full pattern if
  // some entry strictly between those slots completes the relative order.
  auto extendable = [&](const std::vector<int>& occ) {
    const int lo = b >= 2 ? occ[static_cast<std::size_t>(b - 2)] : 0;
    const int hi = b <= m - 1 ? occ[static_cast<std::size_t>(b - 1)] : s.size() + 1;
    for (int j = lo + 1; j < hi; ++j) {
      bool ok = true;
      for (int r = 0; r < m - 1 && ok; ++r) {
        const int body_pos = r + 1 < b ? r + 1 : r + 2;
        const bool pat_less = body.entry(body_pos) < body.entry(b);
        if (pat_less != (s.entry(occ[static_cast<std::size_t>(r)]) < s.entry(j))) ok = false;
      }
      if (ok) return true;
    }
    return false;
  };
  return find_embedding(s, reduction, {}, [&](const std::vector<int>& occ) {
    return !extendable(occ);  // stop on the first witness occurrence
  });
}

}  // namespace

bool contains(const Permutation& s, const Pattern& t) {
  switch (t.kind()) {
    case Kind::classical: return contains_classical(s, t.body());
    case Kind::vincular: return contains_vincular(s, t);
    case Kind::barred: return contains_barred(s, t);
  }
  return false;
}

bool avoids_all(const Permutation& s, const PatternBasis& basis) {
  for (const Pattern& t : basis)
    if (contains(s, t)) return false;
  return true;
}

namespace {

bool all_classical(const PatternBasis& basis) {
  return std::all_of(basis.begin(), basis.end(),
                     [](const Pattern& t) { return t.kind() == Kind::classical; });
}

// Avoiders of length len built by inserting len into avoiders of length len-1.
// Any new occurrence must use the inserted maximum, so re-testing the basis on
// the extended word is a complete check.
std::vector<Permutation> extend_level(const std::vector<Permutation>& prev, int len,
                                      const PatternBasis& basis) {
  std::vector<Permutation> out;
  for (const Permutation& p : prev) {
    std::vector<int> word(static_cast<std::size_t>(len));
    for (int pos = 1; pos <= len; ++pos) {
      for (int i = 0; i < pos - 1; ++i) word[static_cast<std::size_t>(i)] = p.entry(i + 1);
      word[static_cast<std::size_t>(pos - 1)] = len;
      for (int i = pos; i < len; ++i) word[static_cast<std::size_t>(i)] = p.entry(i);
      Permutation cand(word);
      if (avoids_all(cand, basis)) out.push_back(std::move(cand));
    }
  }
  return out;
}

}  // namespace

void for_each_avoider(const PatternBasis& basis, int n,
                      const std::function<void(const Permutation&)>& fn) {
  if (n < 0) throw std::invalid_argument("for_each_avoider needs n >= 0");
  if (n == 0) {
    fn(Permutation());
    return;
  }
  if (all_classical(basis)) {
    std::vector<Permutation> level{Permutation()};
    for (int len = 1; len < n; ++len) level = extend_level(level, len, basis);
    for (const Permutation& p : level) {
      std::vector<int> word(static_cast<std::size_t>(n));
      for (int pos = 1; pos <= n; ++pos) {
        for (int i = 0; i < pos - 1; ++i) word[static_cast<std::size_t>(i)] = p.entry(i + 1);
        word[static_cast<std::size_t>(pos - 1)] = n;
        for (int i = pos; i < n; ++i) word[static_cast<std::size_t>(i)] = p.entry(i);
        Permutation cand(word);
        if (avoids_all(cand, basis)) fn(cand);
      }
    }
    return;
  }
  std::vector<int> word = Permutation::identity(n).entries();
  do {
    Permutation p(word);
    if (avoids_all(p, basis)) fn(p);
  } while (std::next_permutation(word.begin(), word.end()));
}

std::vector<Permutation> av_n(const PatternBasis& basis, int n) {
  std::vector<Permutation> out;
  for_each_avoider(basis, n, [&](const Permutation& p) { out.push_back(p); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> av_nk(const PatternBasis& basis, int n, int k) {
  if (n > 0 && (k < 0 || k > n - 1)) throw std::invalid_argument("av_nk needs 0 <= k <= n-1");
  std::vector<Permutation> out;
  for_each_avoider(basis, n, [&](const Permutation& p) {
    if (static_cast<int>(descents(p).size()) == k) out.push_back(p);
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace stacksort::patterns
