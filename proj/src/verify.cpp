#include "stacksort/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <deque>
#include <functional>
#include <future>
#include <map>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include <json.hpp>

#include "stacksort/numbers.hpp"
#include "stacksort/series.hpp"
#include "stacksort/sorting.hpp"
#include "stacksort/vhc.hpp"

namespace stacksort::verify {

namespace {

using patterns::PatternBasis;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

CheckReport finish(CheckReport r, const Timer& timer) {
  r.millis = timer.ms();
  return r;
}

void fail(CheckReport& r, std::string witness) {
  r.status = Status::fail;
  if (!r.witness) r.witness = std::move(witness);
}

// Streams Av_n(basis) through per_perm and accumulates the returned counts.
// With jobs > 1 the stream is cut into chunks evaluated concurrently; the
// accumulation is exact integer addition, so scheduling cannot change the sum.
BigInt chunked_class_sum(const PatternBasis& basis, int n, int jobs,
                         const std::function<BigInt(const Permutation&)>& per_perm) {
  if (jobs <= 1) {
    BigInt total = 0;
    patterns::for_each_avoider(basis, n, [&](const Permutation& p) { total += per_perm(p); });
    return total;
  }
  constexpr std::size_t kChunk = 2048;
  BigInt total = 0;
  std::deque<std::future<BigInt>> pending;
  std::vector<Permutation> buf;
  buf.reserve(kChunk);
  auto dispatch = [&] {
    if (buf.empty()) return;
    auto work = std::make_shared<std::vector<Permutation>>(std::move(buf));
    buf.clear();
    buf.reserve(kChunk);
    pending.push_back(std::async(std::launch::async, [work, &per_perm] {
      BigInt s = 0;
      for (const Permutation& p : *work) s += per_perm(p);
      return s;
    }));
    while (pending.size() > static_cast<std::size_t>(jobs) * 2) {
      total += pending.front().get();
      pending.pop_front();
    }
  };
  patterns::for_each_avoider(basis, n, [&](const Permutation& p) {
    buf.push_back(p);
    if (buf.size() == kChunk) dispatch();
  });
  dispatch();
  while (!pending.empty()) {
    total += pending.front().get();
    pending.pop_front();
  }
  return total;
}

std::vector<BigInt> add_vectors(std::vector<BigInt> a, const std::vector<BigInt>& b) {
  if (a.size() < b.size()) a.resize(b.size(), BigInt(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

std::string bigints_str(const std::vector<BigInt>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += v[i].str();
  }
  return out + "]";
}

}  // namespace

std::string status_str(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::partial: return "partial";
  }
  return "unknown";
}

std::string report_json(const CheckReport& r, bool with_timing) {
  nlohmann::json j;
  j["id"] = r.id;
  j["range"] = r.range;
  j["status"] = status_str(r.status);
  if (r.witness) j["witness"] = *r.witness;
  if (with_timing) j["millis"] = r.millis;
  return j.dump();
}

std::string report_text(const CheckReport& r, bool with_timing) {
  std::string out = "[" + status_str(r.status) + "] " + r.id + " (" + r.range + ")";
  if (with_timing) out += " " + std::to_string(r.millis) + "ms";
  if (r.witness) out += "\n  witness: " + *r.witness;
  return out;
}

std::string reports_json(const std::vector<CheckReport>& rs, bool with_timing) {
  nlohmann::json arr = nlohmann::json::array();
  for (const CheckReport& r : rs) arr.push_back(nlohmann::json::parse(report_json(r, with_timing)));
  return arr.dump();
}

BigInt class_preimage_count(const PatternBasis& basis, int n, int jobs, bool oracle_check) {
  const BigInt total =
      chunked_class_sum(basis, n, jobs, [](const Permutation& p) { return vhc::fertility(p); });
  if (oracle_check) {
    if (n > kImageCountsCap || n > 8)
      throw std::invalid_argument("oracle cross-check supports n <= 8");
    const ImageCounts oracle(n, jobs);
    BigInt oracle_total = 0;
    patterns::for_each_avoider(basis, n, [&](const Permutation& p) { oracle_total += oracle.count(p); });
    if (oracle_total != total)
      throw std::runtime_error("class preimage count disagrees with oracle: vhc=" + total.str() +
                               " oracle=" + oracle_total.str());
  }
  return total;
}

std::vector<BigInt> class_preimage_refined(const PatternBasis& basis, int n, Refine refine,
                                           int jobs) {
  if (refine == Refine::none) return {class_preimage_count(basis, n, jobs)};
  std::vector<BigInt> totals(static_cast<std::size_t>(std::max(n, 1)), BigInt(0));
  // Refined sweeps stay single-threaded: every class they are used on is tiny.
  (void)jobs;
  patterns::for_each_avoider(basis, n, [&](const Permutation& p) {
    const std::vector<BigInt> f = refine == Refine::descents
                                      ? vhc::fertility_descent_polynomial(p)
                                      : vhc::fertility_peak_polynomial(p);
    totals = add_vectors(std::move(totals), f);
  });
  return totals;
}

BigInt class_size(const PatternBasis& basis, int n) {
  BigInt count = 0;
  patterns::for_each_avoider(basis, n, [&](const Permutation&) { ++count; });
  return count;
}

const std::vector<SetIdentity>& preloaded_identities() {
  static const std::vector<SetIdentity> identities = [] {
    const std::vector<std::array<std::string, 3>> raw = {
        {"sets_av_21", "21", "231"},
        {"sets_av_132_231_312_321", "132,231,312,321", "1342,2341,3142,3241,3412,3421"},
        {"sets_av_132_231_321", "132,231,321", "1342,2341,3241,45231,3[5]142"},
        {"sets_av_132_312_321", "132,312,321", "1342,3142,3412,3421"},
        {"sets_av_231_312_321", "231,312,321", "2341,3241,3412,3421"},
        {"sets_av_132_231_312", "132,231,312", "2341,3412,1342,3142,34(21),(32)41"},
        {"sets_av_312_321", "312,321", "3412,3421"},
        {"sets_av_132_321", "132,321", "1342,34251,35241,45231,(31)42"},
        {"sets_av_132_312", "132,312", "1342,3142,3412,34(21)"},
        {"sets_av_231_312", "231,312", "2341,3412,34(21),3[5]241"},
    };
    std::vector<SetIdentity> out;
    for (const auto& [name, lhs, rhs] : raw)
      out.push_back({name, lhs, rhs, patterns::parse_basis(lhs), patterns::parse_basis(rhs)});
    return out;
  }();
  return identities;
}

CheckReport check_set_equality(const PatternBasis& lhs, const PatternBasis& rhs, int n_max,
                               const std::string& id) {
  Timer timer;
  CheckReport r{id, "n <= " + std::to_string(n_max)};
  for (int n = 1; n <= n_max && r.status == Status::pass; ++n) {
    std::unordered_set<std::uint64_t> lhs_ranks;
    patterns::for_each_avoider(lhs, n, [&](const Permutation& p) { lhs_ranks.insert(lex_rank(p)); });
    std::vector<int> word = Permutation::identity(n).entries();
    do {
      const Permutation sigma(word);
      const bool in_preimage = lhs_ranks.count(lex_rank(sort_once(sigma))) > 0;
      const bool in_rhs = patterns::avoids_all(sigma, rhs);
      if (in_preimage != in_rhs) {
        // Re-derive the preimage membership through the recursive route before
        // reporting, so a fast-path bug cannot produce a phantom witness.
        const Permutation image = sort_once_recursive(sigma);
        const bool recheck = patterns::avoids_all(image, lhs);
        if (recheck != in_preimage)
          throw std::logic_error("sort implementations disagree on " + sigma.str());
        fail(r, "n=" + std::to_string(n) + " sigma=" + sigma.str() + " s(sigma)=" + image.str() +
                    " in s^-1(Av(lhs))=" + (in_preimage ? "yes" : "no") +
                    " in Av(rhs)=" + (in_rhs ? "yes" : "no"));
        break;
      }
    } while (std::next_permutation(word.begin(), word.end()));
  }
  return finish(r, timer);
}

CheckReport check_all_set_identities(int n_max) {
  Timer timer;
  CheckReport r{"sets", "10 identities, n <= " + std::to_string(n_max)};
  for (const SetIdentity& ident : preloaded_identities()) {
    CheckReport sub = check_set_equality(ident.lhs, ident.rhs, n_max, ident.name);
    if (sub.status != Status::pass) {
      r.status = Status::fail;
      r.witness = ident.name + ": s^-1(Av(" + ident.lhs_text + ")) vs Av(" + ident.rhs_text +
                  "): " + sub.witness.value_or("");
      break;
    }
  }
  return finish(r, timer);
}

namespace {

struct TheoremSpec {
  std::string id;
  int default_max;
};

const std::vector<TheoremSpec>& theorem_table() {
  static const std::vector<TheoremSpec> table = {
      {"thm3", 10},         {"thm9", 10},          {"thm10", 10},
      {"thm11", 10},        {"thm12", 8},          {"thm15", 9},
      {"thm16", 10},        {"thm16_descents", 10}, {"thm16_peaks", 10},
      {"thm17", 9},         {"eq14", 9},           {"w2", 8},
      {"baxter", 8},        {"fine_refinements", 9}, {"thm14_bounds", 10},
      {"eq8", 20},
  };
  return table;
}

CheckReport theorem_thm3(int N, int jobs) {
  Timer timer;
  CheckReport r{"thm3", "2 <= n <= " + std::to_string(N)};
  const PatternBasis basis = patterns::parse_basis("132,231,312,321");
  for (int n = 2; n <= N && r.status == Status::pass; ++n) {
    const BigInt total = class_preimage_count(basis, n, jobs);
    if (total != numbers::thm3_total(n))
      fail(r, "n=" + std::to_string(n) + " sweep=" + total.str() +
                  " formula=" + numbers::thm3_total(n).str());
    const auto by_desc = class_preimage_refined(basis, n, Refine::descents);
    const auto by_peak = class_preimage_refined(basis, n, Refine::peaks);
    for (int m = 0; m < n; ++m) {
      if (by_desc[static_cast<std::size_t>(m)] != numbers::thm3_descents(n, m))
        fail(r, "descents n=" + std::to_string(n) + " m=" + std::to_string(m) + " sweep=" +
                    by_desc[static_cast<std::size_t>(m)].str() + " formula=" +
                    numbers::thm3_descents(n, m).str());
      if (by_peak[static_cast<std::size_t>(m)] != numbers::thm3_peaks(n, m))
        fail(r, "peaks n=" + std::to_string(n) + " m=" + std::to_string(m) + " sweep=" +
                    by_peak[static_cast<std::size_t>(m)].str() + " formula=" +
                    numbers::thm3_peaks(n, m).str());
    }
  }
  return finish(r, timer);
}

CheckReport theorem_thm9(int N, int jobs) {
  Timer timer;
  CheckReport r{"thm9", "1 <= n <= " + std::to_string(N)};
  const PatternBasis basis = patterns::parse_basis("231,312,321");
  for (int n = 1; n <= N && r.status == Status::pass; ++n) {
    const BigInt total = class_preimage_count(basis, n, jobs);
    if (total != numbers::thm9_total(n))
      fail(r, "n=" + std::to_string(n) + " sweep=" + total.str() +
                  " formula=" + numbers::thm9_total(n).str());
  }
  return finish(r, timer);
}

CheckReport theorem_thm10(int N, int jobs) {
  Timer timer;
  (void)jobs;
  CheckReport r{"thm10", "1 <= n <= " + std::to_string(N) + ", all k"};
  for (int n = 1; n <= N && r.status == Status::pass; ++n) {
    for (int k = 0; k <= n - 1 && r.status == Status::pass; ++k) {
      const Permutation theta = families::theta(n, k);
      const BigInt fert = vhc::fertility(theta);
      if (fert != numbers::thm10_fertility(n, k))
        fail(r, "n=" + std::to_string(n) + " k=" + std::to_string(k) + " fertility=" + fert.str() +
                    " formula=" + numbers::thm10_fertility(n, k).str());
      const std::vector<BigInt> f = vhc::fertility_descent_polynomial(theta);
      for (int m = 0; m < n; ++m)
        if (f[static_cast<std::size_t>(m)] != numbers::thm10_descents(n, k, m))
          fail(r, "n=" + std::to_string(n) + " k=" + std::to_string(k) + " m=" + std::to_string(m) +
                      " refined=" + f[static_cast<std::size_t>(m)].str() + " formula=" +
                      numbers::thm10_descents(n, k, m).str());
    }
  }
  return finish(r, timer);
}

CheckReport theorem_thm11(int N, int jobs) {
  Timer timer;
  CheckReport r{"thm11", "1 <= n <= " + std::to_string(N)};
  const PatternBasis basis = patterns::parse_basis("132,231,312");
  for (int n = 1; n <= N && r.status == Status::pass; ++n) {
    const BigInt total = class_preimage_count(basis, n, jobs);
    if (total != numbers::fine(n + 1))
      fail(r, "n=" + std::to_string(n) + " sweep=" + total.str() + " Fine(n+1)=" +
                  numbers::fine(n + 1).str());
  }
  return finish(r, timer);
}

CheckReport theorem_thm12(int N, int jobs) {
  Timer timer;
  (void)jobs;
  CheckReport r{"thm12", "1 <= n <= " + std::to_string(N)};
  const PatternBasis dom = patterns::parse_basis("132,312");
  const PatternBasis img = patterns::parse_basis("231,312");
  for (int n = 1; n <= N && r.status == Status::pass; ++n) {
    std::vector<Permutation> images;
    for (const Permutation& p : patterns::av_n(dom, n)) {
      const Permutation q = vhc::phi_layered(p);
      images.push_back(q);
      if (vhc::valid_compositions(p) != vhc::valid_compositions(q)) {
        fail(r, "n=" + std::to_string(n) + " p=" + p.str() + " phi(p)=" + q.str() +
                    " valid-composition sets differ");
        break;
      }
    }
    std::sort(images.begin(), images.end());
    if (r.status == Status::pass &&
        (std::adjacent_find(images.begin(), images.end()) != images.end() ||
         images != patterns::av_n(img, n)))
      fail(r, "n=" + std::to_string(n) + " phi is not a bijection onto Av_n(231,312)");
  }
  return finish(r, timer);
}

CheckReport theorem_thm15(int N, int jobs) {
  Timer timer;
  (void)jobs;
  CheckReport r{"thm15", "1 <= n <= " + std::to_string(N)};
  const PatternBasis sigma_basis = patterns::parse_basis("132,231,321");
  const PatternBasis gamma_basis = patterns::parse_basis("132,312,321");
  for (int n = 1; n <= N && r.status == Status::pass; ++n) {
    const auto sd = class_preimage_refined(sigma_basis, n, Refine::descents);
    const auto gd = class_preimage_refined(gamma_basis, n, Refine::descents);
    const auto sp = class_preimage_refined(sigma_basis, n, Refine::peaks);
    const auto gp = class_preimage_refined(gamma_basis, n, Refine::peaks);
    if (sd != gd)
      fail(r, "n=" + std::to_string(n) + " descent-refined " + bigints_str(sd) + " vs " +
                  bigints_str(gd));
    if (sp != gp)
      fail(r, "n=" + std::to_string(n) + " peak-refined " + bigints_str(sp) + " vs " +
                  bigints_str(gp));
  }
  return finish(r, timer);
}

CheckReport theorem_thm16(int N, int jobs, int which) {
  Timer timer;
  const std::string id =
      which == 0 ? "thm16" : (which == 1 ? "thm16_descents" : "thm16_peaks");
  CheckReport r{id, "1 <= n <= " + std::to_string(N)};
  const PatternBasis sigma_basis = patterns::parse_basis("132,231,321");
  const PatternBasis gamma_basis = patterns::parse_basis("132,312,321");
  for (int n = 1; n <= N && r.status == Status::pass; ++n) {
    if (which == 0) {
      const BigInt a = class_preimage_count(sigma_basis, n, jobs);
      const BigInt b = class_preimage_count(gamma_basis, n, jobs);
      if (a != numbers::thm16_total(n) || b != numbers::thm16_total(n))
        fail(r, "n=" + std::to_string(n) + " sweeps=" + a.str() + "," + b.str() + " formula=" +
                    numbers::thm16_total(n).str());
      continue;
    }
    const Refine refine = which == 1 ? Refine::descents : Refine::peaks;
    const auto sa = class_preimage_refined(sigma_basis, n, refine);
    const auto ga = class_preimage_refined(gamma_basis, n, refine);
    for (int m = 0; m < n; ++m) {
      const BigInt expect =
          which == 1 ? numbers::thm16_descents(n, m) : numbers::thm16_peaks(n, m);
      if (sa[static_cast<std::size_t>(m)] != expect || ga[static_cast<std::size_t>(m)] != expect)
        fail(r, "n=" + std::to_string(n) + " m=" + std::to_string(m) + " sweeps=" +
                    sa[static_cast<std::size_t>(m)].str() + "," +
                    ga[static_cast<std::size_t>(m)].str() + " formula=" + expect.str());
    }
  }
  return finish(r, timer);
}

CheckReport theorem_thm17(int N, int jobs) {
  Timer timer;
  CheckReport r{"thm17", "1 <= n <= " + std::to_string(N)};
  const PatternBasis basis = patterns::parse_basis("312,321");
  const std::vector<BigInt> schroeder = series::gf_coefficients("schroeder", N);
  for (int n = 1; n <= N && r.status == Status::pass; ++n) {
    const BigInt total = class_preimage_count(basis, n, jobs);
    if (total != schroeder[static_cast<std::size_t>(n)])
      fail(r, "n=" + std::to_string(n) + " sweep=" + total.str() + " coefficient=" +
                  schroeder[static_cast<std::size_t>(n)].str());
  }
  return finish(r, timer);
}

CheckReport theorem_eq14(int N, int jobs) {
  Timer timer;
  (void)jobs;
  CheckReport r{"eq14", "1 <= n <= " + std::to_string(N) + ", all k"};
  const PatternBasis basis = patterns::parse_basis("321");
  for (int n = 1; n <= N && r.status == Status::pass; ++n) {
    std::vector<BigInt> counts(static_cast<std::size_t>(n), BigInt(0));
    patterns::for_each_avoider(basis, n, [&](const Permutation& p) {
      ++counts[descents(p).size()];
    });
    for (int k = 0; k < n; ++k)
      if (counts[static_cast<std::size_t>(k)] != numbers::av321_by_descents(n, k))
        fail(r, "n=" + std::to_string(n) + " k=" + std::to_string(k) + " exhaustive=" +
                    counts[static_cast<std::size_t>(k)].str() + " formula=" +
                    numbers::av321_by_descents(n, k).str());
  }
  return finish(r, timer);
}

CheckReport theorem_w2(int N, int jobs) {
  Timer timer;
  CheckReport r{"w2", "1 <= n <= " + std::to_string(N)};
  const PatternBasis b231 = patterns::parse_basis("231");
  const PatternBasis b132 = patterns::parse_basis("132");
  for (int n = 1; n <= N && r.status == Status::pass; ++n) {
    BigInt count = 0;
    std::vector<int> word = Permutation::identity(n).entries();
    do {
      if (is_t_sortable(Permutation(word), 2)) ++count;
    } while (std::next_permutation(word.begin(), word.end()));
    if (count != numbers::w2(n))
      fail(r, "n=" + std::to_string(n) + " exhaustive=" + count.str() + " formula=" +
                  numbers::w2(n).str());
    // W_2(n) = |s^-1(Av_n(231))| by definition of 2-sortability;
    // |s^-1(Av_n(132))| matches it as well. Both checked via fertilities.
    const BigInt via231 = class_preimage_count(b231, n, jobs);
    const BigInt via132 = class_preimage_count(b132, n, jobs);
    if (via231 != numbers::w2(n) || via132 != numbers::w2(n))
      fail(r, "n=" + std::to_string(n) + " fertility sweeps " + via231.str() + "," +
                  via132.str() + " vs formula " + numbers::w2(n).str());
  }
  return finish(r, timer);
}

CheckReport theorem_baxter(int N, int jobs) {
  Timer timer;
  CheckReport r{"baxter", "1 <= n <= " + std::to_string(N)};
  const PatternBasis basis = patterns::parse_basis("312");
  for (int n = 1; n <= N && r.status == Status::pass; ++n) {
    const BigInt total = class_preimage_count(basis, n, jobs);
    if (total != numbers::baxter(n))
      fail(r, "n=" + std::to_string(n) + " sweep=" + total.str() + " Baxter=" +
                  numbers::baxter(n).str());
  }
  return finish(r, timer);
}

CheckReport theorem_fine_refinements(int N, int jobs) {
  Timer timer;
  (void)jobs;
  CheckReport r{"fine_refinements", "1 <= n <= " + std::to_string(N)};
  const PatternBasis basis = patterns::parse_basis("132,231,312");
  for (int n = 1; n <= N && r.status == Status::pass; ++n) {
    const auto by_desc = class_preimage_refined(basis, n, Refine::descents);
    const auto by_peak = class_preimage_refined(basis, n, Refine::peaks);
    for (int m = 0; m < n; ++m) {
      if (by_desc[static_cast<std::size_t>(m)] != numbers::g_refined(n, m))
        fail(r, "descents n=" + std::to_string(n) + " m=" + std::to_string(m) + " sweep=" +
                    by_desc[static_cast<std::size_t>(m)].str() + " g=" +
                    numbers::g_refined(n, m).str());
      if (by_peak[static_cast<std::size_t>(m)] != numbers::h_refined(n, m))
        fail(r, "peaks n=" + std::to_string(n) + " m=" + std::to_string(m) + " sweep=" +
                    by_peak[static_cast<std::size_t>(m)].str() + " h=" +
                    numbers::h_refined(n, m).str());
    }
  }
  return finish(r, timer);
}

CheckReport theorem_thm14_bounds(int N, int jobs) {
  Timer timer;
  (void)jobs;
  const int all_pi_max = std::min(N, 8);
  CheckReport r{"thm14_bounds", "all pi in S_n for n <= " + std::to_string(all_pi_max) +
                                    "; tight at theta for n <= " + std::to_string(N)};
  for (int n = 1; n <= all_pi_max && r.status == Status::pass; ++n) {
    std::vector<int> word = Permutation::identity(n).entries();
    do {
      const Permutation p(word);
      const int k = static_cast<int>(descents(p).size());
      const BigInt fert = vhc::fertility(p);
      if (fert > numbers::thm10_fertility(n, k)) {
        fail(r, "pi=" + p.str() + " fertility=" + fert.str() + " exceeds bound " +
                    numbers::thm10_fertility(n, k).str());
        break;
      }
      const std::vector<BigInt> f = vhc::fertility_descent_polynomial(p);
      for (int m = 0; m < n; ++m)
        if (f[static_cast<std::size_t>(m)] > numbers::thm10_descents(n, k, m)) {
          fail(r, "pi=" + p.str() + " m=" + std::to_string(m) + " refined count " +
                      f[static_cast<std::size_t>(m)].str() + " exceeds bound " +
                      numbers::thm10_descents(n, k, m).str());
          break;
        }
      if (r.status != Status::pass) break;
    } while (std::next_permutation(word.begin(), word.end()));
  }
  for (int n = 1; n <= N && r.status == Status::pass; ++n)
    for (int k = 0; k <= n - 1; ++k)
      if (vhc::fertility(families::theta(n, k)) != numbers::thm10_fertility(n, k)) {
        fail(r, "bound not tight at theta(" + std::to_string(n) + "," + std::to_string(k) + ")");
        break;
      }
  return finish(r, timer);
}

CheckReport theorem_eq8(int N, int jobs) {
  Timer timer;
  (void)jobs;
  CheckReport r{"eq8", "1 <= n <= " + std::to_string(N)};
  for (int n = 1; n <= N && r.status == Status::pass; ++n) {
    BigInt gsum = 0;
    BigInt hsum = 0;
    for (int m = 0; m <= n - 1; ++m) gsum += numbers::g_refined(n, m);
    for (int m = 0; m <= (n - 1) / 2; ++m) hsum += numbers::h_refined(n, m);
    const BigInt f = numbers::fine(n + 1);
    if (gsum != f || hsum != f)
      fail(r, "n=" + std::to_string(n) + " sum g=" + gsum.str() + " sum h=" + hsum.str() +
                  " Fine(n+1)=" + f.str());
  }
  return finish(r, timer);
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const TheoremSpec& spec : theorem_table()) out.push_back(spec.id);
    return out;
  }();
  return ids;
}

CheckReport verify_theorem(const std::string& id, int n_max, int jobs) {
  int N = n_max;
  if (N < 0) {
    for (const TheoremSpec& spec : theorem_table())
      if (spec.id == id) N = spec.default_max;
    if (N < 0) throw std::invalid_argument("unknown theorem id: " + id);
  }
  if (id == "thm3") return theorem_thm3(N, jobs);
  if (id == "thm9") return theorem_thm9(N, jobs);
  if (id == "thm10") return theorem_thm10(N, jobs);
  if (id == "thm11") return theorem_thm11(N, jobs);
  if (id == "thm12") return theorem_thm12(N, jobs);
  if (id == "thm15") return theorem_thm15(N, jobs);
  if (id == "thm16") return theorem_thm16(N, jobs, 0);
  if (id == "thm16_descents") return theorem_thm16(N, jobs, 1);
  if (id == "thm16_peaks") return theorem_thm16(N, jobs, 2);
  if (id == "thm17") return theorem_thm17(N, jobs);
  if (id == "eq14") return theorem_eq14(N, jobs);
  if (id == "w2") return theorem_w2(N, jobs);
  if (id == "baxter") return theorem_baxter(N, jobs);
  if (id == "fine_refinements") return theorem_fine_refinements(N, jobs);
  if (id == "thm14_bounds") return theorem_thm14_bounds(N, jobs);
  if (id == "eq8") return theorem_eq8(N, jobs);
  throw std::invalid_argument("unknown theorem id: " + id);
}

const std::vector<std::string>& conjecture_ids() {
  static const std::vector<std::string> ids = {"conj1", "conj2", "conj3", "conj4", "conj5"};
  return ids;
}

namespace {

CheckReport conjecture_conj1(int N) {
  Timer timer;
  CheckReport r{"conj1", "0 <= n <= " + std::to_string(N) + ", 0 <= k <= n"};
  for (int n = 0; n <= N && r.status == Status::pass; ++n)
    for (int k = 0; k <= n; ++k) {
      const BigInt lhs = numbers::conj1_lhs(n, k);
      const BigInt rhs = numbers::conj1_rhs(n, k);
      if (lhs != rhs) {
        fail(r, "n=" + std::to_string(n) + " k=" + std::to_string(k) + " lhs=" + lhs.str() +
                    " rhs=" + rhs.str());
        break;
      }
    }
  return finish(r, timer);
}

CheckReport conjecture_conj2(int N, int jobs) {
  Timer timer;
  CheckReport r{"conj2", "1 <= n <= " + std::to_string(N)};
  const PatternBasis a_basis = patterns::parse_basis("132,312");
  const PatternBasis b_basis = patterns::parse_basis("132,231");
  const std::vector<BigInt> coeffs = series::gf_coefficients("conj2", N);
  for (int n = 1; n <= N && r.status == Status::pass; ++n) {
    const BigInt a = class_preimage_count(a_basis, n, jobs);
    const BigInt b = class_preimage_count(b_basis, n, jobs);
    const BigInt& c = coeffs[static_cast<std::size_t>(n)];
    if (a != c || b != c)
      fail(r, "n=" + std::to_string(n) + " sweeps=" + a.str() + "," + b.str() +
                  " coefficient=" + c.str());
  }
  return finish(r, timer);
}

CheckReport conjecture_conj3(int N) {
  Timer timer;
  CheckReport r{"conj3", "all pi in S_n, n <= " + std::to_string(N)};
  for (int n = 1; n <= N && r.status == Status::pass; ++n) {
    std::vector<int> word = Permutation::identity(n).entries();
    do {
      const Permutation p(word);
      const std::vector<BigInt> f = vhc::fertility_descent_polynomial(p);
      if (std::all_of(f.begin(), f.end(), [](const BigInt& v) { return v == 0; }))
        continue;  // unsorted permutation, zero sequence
      if (!series::is_real_rooted(series::IntPolynomial(f))) {
        fail(r, "pi=" + p.str() + " descent polynomial " + bigints_str(f) + " is not real-rooted");
        break;
      }
    } while (std::next_permutation(word.begin(), word.end()));
  }
  return finish(r, timer);
}

CheckReport conjecture_conj4(int m5_budget, int jobs) {
  Timer timer;
  CheckReport r{"conj4", "m=4 full (n <= 7); m=5 for n <= " + std::to_string(m5_budget)};
  const PatternBasis m4 = patterns::parse_basis("1234");
  std::vector<BigInt> seq4;
  for (int n = 1; n <= 7; ++n) seq4.push_back(class_preimage_count(m4, n, jobs));
  if (!series::is_unimodal(seq4)) fail(r, "m=4 sequence " + bigints_str(seq4) + " is not unimodal");
  const PatternBasis m5 = patterns::parse_basis("12345");
  std::vector<BigInt> seq5;
  for (int n = 1; n <= std::min(m5_budget, 15); ++n)
    seq5.push_back(class_preimage_count(m5, n, jobs));
  if (!series::is_unimodal(seq5))
    fail(r, "m=5 sequence prefix " + bigints_str(seq5) + " is not unimodal");
  if (r.status == Status::pass && m5_budget < 15) {
    r.status = Status::partial;
    r.witness = "m=5 swept to n=" + std::to_string(m5_budget) + " of 15; prefix " +
                bigints_str(seq5) + " is unimodal so far";
  }
  return finish(r, timer);
}

CheckReport conjecture_conj5(int N, int jobs) {
  Timer timer;
  CheckReport r{"conj5", "0 <= n <= " + std::to_string(N)};
  const PatternBasis basis = patterns::parse_basis("231,321");
  const std::vector<BigInt> coeffs = series::gf_coefficients("conj5", N);
  for (int n = 0; n <= N && r.status == Status::pass; ++n) {
    const BigInt total = class_preimage_count(basis, n, jobs);
    if (total != coeffs[static_cast<std::size_t>(n)])
      fail(r, "n=" + std::to_string(n) + " sweep=" + total.str() + " coefficient=" +
                  coeffs[static_cast<std::size_t>(n)].str());
  }
  return finish(r, timer);
}

}  // namespace

CheckReport check_conjecture(const std::string& id, int budget, int jobs) {
  if (id == "conj1") return conjecture_conj1(budget < 0 ? 12 : budget);
  if (id == "conj2") return conjecture_conj2(budget < 0 ? 9 : budget, jobs);
  if (id == "conj3") return conjecture_conj3(budget < 0 ? 7 : budget);
  if (id == "conj4") return conjecture_conj4(budget < 0 ? 10 : budget, jobs);
  if (id == "conj5") return conjecture_conj5(budget < 0 ? 9 : budget, jobs);
  throw std::invalid_argument("unknown conjecture id: " + id);
}

CheckReport check_oracle_equivalence(int n_max, int jobs) {
  Timer timer;
  CheckReport r{"oracle", "all pi in S_n, n <= " + std::to_string(n_max)};
  if (vhc::fertility(Permutation()) != 1) fail(r, "fertility of the empty permutation is not 1");
  for (int n = 1; n <= n_max && r.status == Status::pass; ++n) {
    const ImageCounts oracle(n, jobs);
    std::vector<int> word = Permutation::identity(n).entries();
    do {
      const Permutation p(word);
      const BigInt fert = vhc::fertility(p);
      if (fert != oracle.count(p)) {
        fail(r, "pi=" + p.str() + " vhc=" + fert.str() + " oracle=" +
                    std::to_string(oracle.count(p)));
        break;
      }
    } while (std::next_permutation(word.begin(), word.end()));
  }
  return finish(r, timer);
}

CheckReport check_refined_oracle_equivalence(int n_max) {
  Timer timer;
  CheckReport r{"refined_oracle", "all pi in S_n, n <= " + std::to_string(n_max)};
  for (int n = 1; n <= n_max && r.status == Status::pass; ++n) {
    const RefinedImageCounts oracle(n);
    std::vector<int> word = Permutation::identity(n).entries();
    do {
      const Permutation p(word);
      const std::vector<BigInt> fd = vhc::fertility_descent_polynomial(p);
      const std::vector<BigInt> fp = vhc::fertility_peak_polynomial(p);
      for (int m = 0; m < n; ++m) {
        if (fd[static_cast<std::size_t>(m)] != oracle.by_descents(p, m)) {
          fail(r, "pi=" + p.str() + " m=" + std::to_string(m) + " descents vhc=" +
                      fd[static_cast<std::size_t>(m)].str() + " oracle=" +
                      std::to_string(oracle.by_descents(p, m)));
          break;
        }
        if (fp[static_cast<std::size_t>(m)] != oracle.by_peaks(p, m)) {
          fail(r, "pi=" + p.str() + " m=" + std::to_string(m) + " peaks vhc=" +
                      fp[static_cast<std::size_t>(m)].str() + " oracle=" +
                      std::to_string(oracle.by_peaks(p, m)));
          break;
        }
      }
      if (r.status != Status::pass) break;
    } while (std::next_permutation(word.begin(), word.end()));
  }
  return finish(r, timer);
}

CheckReport check_vhc_composition_consistency(int n_max) {
  Timer timer;
  CheckReport r{"vhc_consistency", "all pi in S_n, n <= " + std::to_string(n_max)};
  for (int n = 0; n <= n_max && r.status == Status::pass; ++n) {
    std::vector<int> word = Permutation::identity(n).entries();
    do {
      const Permutation p(word);
      std::vector<vhc::Composition> induced;
      for (const vhc::HookConfig& config : vhc::enumerate_vhcs(p))
        induced.push_back(vhc::induced_composition(p, config));
      std::sort(induced.begin(), induced.end());
      if (std::adjacent_find(induced.begin(), induced.end()) != induced.end()) {
        fail(r, "pi=" + p.str() + " two configurations induce the same composition");
        break;
      }
      if (n > 0 && induced != vhc::valid_compositions(p)) {
        fail(r, "pi=" + p.str() + " enumerated and characterized composition sets differ");
        break;
      }
    } while (n > 0 && std::next_permutation(word.begin(), word.end()));
  }
  return finish(r, timer);
}

namespace {

BigInt nth_root_floor(const BigInt& x, int n) {
  if (x < 0 || n < 1) throw std::invalid_argument("nth_root_floor needs x >= 0, n >= 1");
  if (x == 0) return 0;
  if (n == 1) return x;
  const unsigned bits = boost::multiprecision::msb(x) + 1;
  BigInt r = BigInt(1) << (bits / static_cast<unsigned>(n) + 1);
  while (true) {
    BigInt next = ((n - 1) * r + x / boost::multiprecision::pow(r, static_cast<unsigned>(n - 1))) / n;
    if (next >= r) break;
    r = next;
  }
  while (boost::multiprecision::pow(r, static_cast<unsigned>(n)) > x) --r;
  while (boost::multiprecision::pow(r + 1, static_cast<unsigned>(n)) <= x) ++r;
  return r;
}

std::string root_to_4_decimals(const BigInt& count, int n) {
  // floor((count * 10^{4n})^{1/n}) gives count^{1/n} scaled by 10^4.
  BigInt scaled = count;
  for (int i = 0; i < n; ++i) scaled *= 10000;
  std::string digits = nth_root_floor(scaled, n).str();
  while (digits.size() < 5) digits.insert(digits.begin(), '0');
  digits.insert(digits.size() - 4, ".");
  return digits;
}

}  // namespace

GrowthReport av321_growth_report(int n_max, int jobs) {
  Timer timer;
  GrowthReport g;
  g.report.id = "growth321";
  g.report.range = "n <= " + std::to_string(n_max);
  const PatternBasis basis = patterns::parse_basis("321");
  std::vector<BigInt> a(static_cast<std::size_t>(n_max) + 1, BigInt(0));
  for (int n = 1; n <= n_max; ++n) {
    a[static_cast<std::size_t>(n)] = class_preimage_count(basis, n, jobs);
    g.rows.push_back({n, a[static_cast<std::size_t>(n)],
                      root_to_4_decimals(a[static_cast<std::size_t>(n)], n)});
  }
  for (int m = 1; m <= n_max && g.report.status == Status::pass; ++m)
    for (int n = 1; m + n <= n_max; ++n)
      if (a[static_cast<std::size_t>(m)] * a[static_cast<std::size_t>(n)] >
          a[static_cast<std::size_t>(m + n)]) {
        fail(g.report, "supermultiplicativity fails at m=" + std::to_string(m) +
                           " n=" + std::to_string(n));
        break;
      }
  // Finite-n content of the trivial bounds 4 <= lim <= 16: the identity
  // permutation alone contributes C_n preimages, and no class of C_n
  // permutations can beat the 4^n per-permutation fertility cap. (The roots
  // themselves approach 4 from below at these sizes; the interval statement
  // only holds for the limit.)
  for (int n = 1; n <= n_max && g.report.status == Status::pass; ++n) {
    const BigInt lo = numbers::catalan(n);
    const BigInt hi = boost::multiprecision::pow(BigInt(16), static_cast<unsigned>(n));
    if (a[static_cast<std::size_t>(n)] < lo || a[static_cast<std::size_t>(n)] > hi)
      fail(g.report, "count at n=" + std::to_string(n) + " outside [C_n, 16^n]");
  }
  // s(a (+) b) = s(a) (+) s(b), exhaustively for |a| + |b| <= 8.
  for (int total = 0; total <= 8 && g.report.status == Status::pass; ++total) {
    for (int la = 0; la <= total && g.report.status == Status::pass; ++la) {
      const int lb = total - la;
      std::vector<int> wa = Permutation::identity(la).entries();
      do {
        const Permutation pa(wa);
        std::vector<int> wb = Permutation::identity(lb).entries();
        do {
          const Permutation pb(wb);
          if (sort_once(direct_sum(pa, pb)) != direct_sum(sort_once(pa), sort_once(pb))) {
            fail(g.report, "direct-sum identity fails at a=" + pa.str() + " b=" + pb.str());
            break;
          }
        } while (std::next_permutation(wb.begin(), wb.end()));
        if (g.report.status != Status::pass) break;
      } while (std::next_permutation(wa.begin(), wa.end()));
    }
  }
  g.report = finish(std::move(g.report), timer);
  return g;
}

std::vector<CheckReport> run_all(int jobs) {
  std::vector<std::function<CheckReport()>> checks;
  checks.emplace_back([] { return check_oracle_equivalence(8); });
  checks.emplace_back([] { return check_refined_oracle_equivalence(8); });
  checks.emplace_back([] { return check_vhc_composition_consistency(8); });
  for (const std::string& id : theorem_ids())
    checks.emplace_back([id] { return verify_theorem(id); });
  checks.emplace_back([] { return check_all_set_identities(8); });
  for (const std::string& id : conjecture_ids())
    checks.emplace_back([id] { return check_conjecture(id); });
  checks.emplace_back([] { return av321_growth_report(11).report; });

  std::vector<CheckReport> reports(checks.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < checks.size(); ++i) reports[i] = checks[i]();
    return reports;
  }
  std::vector<std::future<CheckReport>> futures;
  futures.reserve(checks.size());
  for (auto& check : checks) futures.push_back(std::async(std::launch::async, check));
  for (std::size_t i = 0; i < futures.size(); ++i) reports[i] = futures[i].get();
  return reports;
}

}  // namespace stacksort::verify
