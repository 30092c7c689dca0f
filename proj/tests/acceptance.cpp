// Acceptance suite: every criterion below prints one [acceptance] line and
// fails loudly when its exact comparison does not hold.

#include <doctest.h>

#include <algorithm>
#include <iostream>
#include <numeric>
#include <set>
#include <thread>

#include "stacksort/numbers.hpp"
#include "stacksort/patterns.hpp"
#include "stacksort/perm.hpp"
#include "stacksort/series.hpp"
#include "stacksort/sorting.hpp"
#include "stacksort/verify.hpp"
#include "stacksort/vhc.hpp"

using namespace stacksort;
using verify::CheckReport;
using verify::Status;

namespace {

int workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::min(hw == 0 ? 1u : hw, 8u));
}

void line(int criterion, const std::string& desc, bool ok) {
  std::cout << "[acceptance] criterion " << criterion << ": " << (ok ? "PASS" : "FAIL") << " - "
            << desc << std::endl;
}

bool report_ok(const CheckReport& r) { return r.status != Status::fail; }

}  // namespace

TEST_CASE("criterion 1: oracle equivalence for all of S_n, n <= 8") {
  const CheckReport r = verify::check_oracle_equivalence(8, workers());
  const bool ok = report_ok(r) && r.millis < 60000;
  line(1, "fertility == bucket oracle on S_n, n <= 8, in " + std::to_string(r.millis) + "ms", ok);
  if (r.witness) std::cout << "  " << *r.witness << "\n";
  CHECK(report_ok(r));
  CHECK(r.millis < 60000);
}

TEST_CASE("criterion 2: worked-example pin for 3142567") {
  const Permutation p = Permutation::parse("3142567");
  const bool fert_ok = vhc::fertility(p) == 27;
  const auto comps = vhc::valid_compositions(p);
  const std::set<vhc::Composition> expect{{3, 1, 1}, {2, 2, 1}, {1, 3, 1},
                                          {2, 1, 2}, {1, 2, 2}, {1, 1, 3}};
  const bool comp_ok =
      std::set<vhc::Composition>(comps.begin(), comps.end()) == expect && comps.size() == 6;
  line(2, "fertility(3142567) = 27 with the six listed compositions", fert_ok && comp_ok);
  CHECK(fert_ok);
  CHECK(comp_ok);
}

TEST_CASE("criterion 3: canonical parameter pin") {
  const auto cd = vhc::canonical_vhc(Permutation::parse("2 7 3 5 9 10 11 4 8 1 6 12 13 14 15 16"));
  REQUIRE(cd.has_value());
  const bool ok = cd->b_star == std::vector<int>{5, 13, 12} &&
                  cd->q_star == vhc::Composition{7, 2, 2, 2} &&
                  cd->e == std::vector<int>{4, 2, 4, 4} &&
                  cd->alpha == std::vector<int>{0, 1, 0, 2};
  line(3, "b*=(5,13,12) q*=(7,2,2,2) e=(4,2,4,4) alpha=(0,1,0,2)", ok);
  CHECK(ok);
}

TEST_CASE("criterion 4: composition uniqueness and characterization, n <= 8") {
  const CheckReport r = verify::check_vhc_composition_consistency(8);
  line(4, "induced compositions are distinct and match the characterization", report_ok(r));
  if (r.witness) std::cout << "  " << *r.witness << "\n";
  CHECK(report_ok(r));
}

TEST_CASE("criterion 5: refined counts match the bucketed oracle, n <= 8") {
  const CheckReport r = verify::check_refined_oracle_equivalence(8);
  line(5, "descent/peak-refined fertilities equal oracle buckets", report_ok(r));
  if (r.witness) std::cout << "  " << *r.witness << "\n";
  CHECK(report_ok(r));
}

TEST_CASE("criterion 6: closed-form sweeps") {
  const std::vector<std::pair<std::string, int>> sweeps = {
      {"thm3", 10},  {"thm16", 10},       {"thm16_descents", 10}, {"thm16_peaks", 10},
      {"thm9", 10},  {"thm10", 10},       {"thm14_bounds", 10},   {"thm11", 10},
      {"fine_refinements", 9}, {"eq8", 20}, {"thm17", 9},         {"eq14", 9},
      {"w2", 8},     {"baxter", 8},
  };
  bool all_ok = true;
  for (const auto& [id, cap] : sweeps) {
    const CheckReport r = verify::verify_theorem(id, cap);
    if (!report_ok(r)) {
      all_ok = false;
      std::cout << "  " << verify::report_text(r, false) << "\n";
    }
    CHECK(report_ok(r));
  }
  line(6, "thm3/9/10/11/16/17, thm14 bounds, eq8/eq14, w2, baxter, fine refinements", all_ok);
}

TEST_CASE("criterion 7: the ten set equalities hold for n <= 8") {
  const CheckReport r = verify::check_all_set_identities(8);
  line(7, "s^-1(Av(...)) = Av(...) for all ten displayed identities", report_ok(r));
  if (r.witness) std::cout << "  " << *r.witness << "\n";
  CHECK(report_ok(r));
}

TEST_CASE("criterion 8: the thm12 bijection and thm15 refined equalities") {
  const CheckReport r12 = verify::verify_theorem("thm12", 8);
  const CheckReport r15 = verify::verify_theorem("thm15", 9);
  const bool ok = report_ok(r12) && report_ok(r15);
  line(8, "phi preserves valid compositions (n <= 8); sigma/gamma refined counts agree (n <= 9)",
       ok);
  if (r12.witness) std::cout << "  " << *r12.witness << "\n";
  if (r15.witness) std::cout << "  " << *r15.witness << "\n";
  CHECK(report_ok(r12));
  CHECK(report_ok(r15));
}

TEST_CASE("criterion 9: conjecture suite passes up to budget") {
  const CheckReport c1 = verify::check_conjecture("conj1", 12);
  const CheckReport c2 = verify::check_conjecture("conj2", 9);
  const CheckReport c3 = verify::check_conjecture("conj3", 7);
  const CheckReport c4 = verify::check_conjecture("conj4", 10, workers());
  const CheckReport c5 = verify::check_conjecture("conj5", 9);
  // known value list for m = 4
  const auto m4 = patterns::parse_basis("1234");
  std::vector<BigInt> seq;
  for (int n = 1; n <= 7; ++n) seq.push_back(verify::class_preimage_count(m4, n));
  const bool m4_ok =
      seq == std::vector<BigInt>{1, 2, 6, 10, 13, 10, 3};
  const bool ok = report_ok(c1) && report_ok(c2) && report_ok(c3) && report_ok(c4) &&
                  report_ok(c5) && c4.status == Status::partial && m4_ok;
  line(9, "conj1 (n<=12), conj2/conj5 (n<=9), conj3 (n<=7), conj4 (m=4 full, m=5 partial)", ok);
  for (const CheckReport* r : {&c1, &c2, &c3, &c5})
    if (r->witness) std::cout << "  " << r->id << ": " << *r->witness << "\n";
  CHECK(report_ok(c1));
  CHECK(report_ok(c2));
  CHECK(report_ok(c3));
  CHECK(report_ok(c4));
  CHECK(c4.status == Status::partial);
  CHECK(report_ok(c5));
  CHECK(m4_ok);
}

TEST_CASE("criterion 10: growth report and the direct-sum identity") {
  const verify::GrowthReport g = verify::av321_growth_report(11, workers());
  bool rows_ok = g.rows.size() == 11 && g.rows[0].count == 1 && g.rows[1].count == 2 &&
                 g.rows[2].count == 6;
  // Trivial bounds at finite n: C_n <= count <= 16^n (so root <= 16; the
  // lower endpoint 4 only binds the Fekete limit - the n=1 row has root
  // 1.0000).
  for (const auto& row : g.rows) {
    rows_ok = rows_ok && row.count >= numbers::catalan(row.n) &&
              row.count <= boost::multiprecision::pow(BigInt(16), static_cast<unsigned>(row.n));
    rows_ok = rows_ok && std::stod(row.root) <= 16.0 + 1e-9;
  }
  const bool ok = report_ok(g.report) && rows_ok;
  line(10,
       "|s^-1(Av_n(321))| exact to n=11; supermultiplicative; trivial bounds; oplus identity",
       ok);
  if (g.report.witness) std::cout << "  " << *g.report.witness << "\n";
  CHECK(report_ok(g.report));
  CHECK(rows_ok);
}

TEST_CASE("criterion 11: determinism of the full suite") {
  const std::vector<CheckReport> first = verify::run_all(workers());
  const std::vector<CheckReport> second = verify::run_all(workers());
  const std::string a = verify::reports_json(first, false);
  const std::string b = verify::reports_json(second, false);
  bool none_failed = true;
  for (const CheckReport& r : first) {
    if (r.status == Status::fail) {
      none_failed = false;
      std::cout << "  " << verify::report_text(r, false) << "\n";
    }
  }
  const bool ok = a == b && none_failed;
  line(11, "two full runs emit byte-identical JSON and no check fails", ok);
  CHECK(a == b);
  CHECK(none_failed);
}
