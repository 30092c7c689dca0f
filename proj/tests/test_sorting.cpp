#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "stacksort/sorting.hpp"

using namespace stacksort;

namespace {

template <typename F>
void for_each_sn(int n, F fn) {
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  do {
    fn(Permutation(word));
  } while (std::next_permutation(word.begin(), word.end()));
}

}  // namespace

TEST_CASE("single pass pins") {
  CHECK(sort_once(Permutation::parse("3142")) == Permutation::parse("1324"));
  CHECK(sort_once(Permutation::identity(6)) == Permutation::identity(6));
  CHECK(sort_once(Permutation::parse("231")) == Permutation::parse("213"));
  CHECK(sort_once(Permutation()) == Permutation());
  // arbitrary entry sets are legal inputs
  CHECK(sort_once(Permutation({9, 2, 7})).entries() == std::vector<int>{2, 7, 9});
}

TEST_CASE("iterative pass agrees with the recursion s(LnR)=s(L)s(R)n") {
  for (int n = 0; n <= 8; ++n)
    for_each_sn(n, [](const Permutation& p) { CHECK(sort_once(p) == sort_once_recursive(p)); });
}

TEST_CASE("iterates") {
  CHECK(sort_iter(Permutation::parse("3142"), 2) == Permutation::identity(4));
  const Permutation p = Permutation::parse("35142");
  CHECK(sort_iter(p, 0) == p);
  // s^(n-1) sorts everything
  for (int n = 1; n <= 7; ++n)
    for_each_sn(n, [&](const Permutation& q) { CHECK(is_t_sortable(q, n - 1)); });
}

TEST_CASE("1-sortable means 231-avoiding") {
  for (int n = 1; n <= 7; ++n)
    for_each_sn(n, [](const Permutation& p) {
      bool avoids231 = true;
      for (int i = 1; i <= p.size() && avoids231; ++i)
        for (int j = i + 1; j <= p.size() && avoids231; ++j)
          for (int k = j + 1; k <= p.size() && avoids231; ++k)
            if (p.entry(k) < p.entry(i) && p.entry(i) < p.entry(j)) avoids231 = false;
      CHECK(is_t_sortable(p, 1) == avoids231);
    });
}

TEST_CASE("push-pop words") {
  CHECK(pushpop_word(Permutation::parse("3142")) == "AABBAABB");
  CHECK(pushpop_word(Permutation::parse("12")) == "ABAB");
  // balanced prefix property
  for_each_sn(6, [](const Permutation& p) {
    const std::string w = pushpop_word(p);
    REQUIRE(w.size() == 12);
    int depth = 0;
    for (char c : w) {
      depth += c == 'A' ? 1 : -1;
      CHECK(depth >= 0);
    }
    CHECK(depth == 0);
  });
  // sigma -> w_sigma is injective on every fiber
  for (int n = 1; n <= 7; ++n) {
    std::set<std::pair<Permutation, std::string>> seen;
    for_each_sn(n, [&](const Permutation& p) {
      CHECK(seen.emplace(sort_once(p), pushpop_word(p)).second);
    });
  }
}

TEST_CASE("bucketing oracle at n=3") {
  const ImageCounts oracle(3);
  std::map<std::string, std::uint64_t> counts;
  for_each_sn(3, [&](const Permutation& p) {
    const std::uint64_t c = oracle.count(p);
    if (c) counts[p.str()] = c;
  });
  CHECK(counts == std::map<std::string, std::uint64_t>{{"1 2 3", 5}, {"2 1 3", 1}});
}

TEST_CASE("oracle trivia and caps") {
  const ImageCounts one(1);
  CHECK(one.count(Permutation::identity(1)) == 1);
  CHECK_THROWS(image_multiset(11));
  CHECK_THROWS(preimages_bruteforce(Permutation::identity(9)));
}

TEST_CASE("parallel oracle matches serial") {
  const ImageCounts serial(6, 1);
  const ImageCounts parallel(6, 4);
  for_each_sn(6, [&](const Permutation& p) { CHECK(serial.count(p) == parallel.count(p)); });
}

TEST_CASE("brute-force fiber matches bucket counts") {
  for (int n = 1; n <= 6; ++n) {
    const ImageCounts oracle(n);
    for_each_sn(n, [&](const Permutation& p) {
      CHECK(preimages_bruteforce(p).size() == oracle.count(p));
    });
  }
}

TEST_CASE("fertility bound 4^n") {
  for (int n = 1; n <= 8; ++n) {
    const ImageCounts oracle(n);
    std::uint64_t bound = 1;
    for (int i = 0; i < n; ++i) bound *= 4;
    for_each_sn(n, [&](const Permutation& p) { CHECK(oracle.count(p) <= bound); });
  }
}

TEST_CASE("refined oracle buckets sum to the plain oracle") {
  for (int n = 1; n <= 6; ++n) {
    const ImageCounts plain(n);
    const RefinedImageCounts refined(n);
    for_each_sn(n, [&](const Permutation& p) {
      std::uint64_t by_desc = 0;
      std::uint64_t by_peak = 0;
      for (int m = 0; m < n; ++m) {
        by_desc += refined.by_descents(p, m);
        by_peak += refined.by_peaks(p, m);
      }
      CHECK(by_desc == plain.count(p));
      CHECK(by_peak == plain.count(p));
    });
  }
}
