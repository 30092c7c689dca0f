#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stacksort/bigint.hpp"
#include "stacksort/patterns.hpp"

namespace stacksort::verify {

enum class Status { pass, fail, partial };
std::string status_str(Status s);

// One verification job's result. A fail always carries a witness that can be
// re-checked independently. millis is wall time, reported separately from the
// data payload so output can be made byte-reproducible.
struct CheckReport {
  std::string id;
  std::string range;
  Status status = Status::pass;
  std::optional<std::string> witness;
  std::int64_t millis = 0;
};

std::string report_json(const CheckReport& r, bool with_timing);
std::string report_text(const CheckReport& r, bool with_timing);
std::string reports_json(const std::vector<CheckReport>& rs, bool with_timing);

enum class Refine { none, descents, peaks };

// Fertility of Av_n(basis) (the sum of member fertilities); the refined form
// buckets by the preimages' descent or peak count (index m = 0..n-1).
BigInt class_preimage_count(const patterns::PatternBasis& basis, int n, int jobs = 1,
                            bool oracle_check = false);
std::vector<BigInt> class_preimage_refined(const patterns::PatternBasis& basis, int n,
                                           Refine refine, int jobs = 1);

// |Av_n(basis)| without fertilities (streaming, no materialization).
BigInt class_size(const patterns::PatternBasis& basis, int n);

struct SetIdentity {
  std::string name;
  std::string lhs_text;
  std::string rhs_text;
  patterns::PatternBasis lhs;
  patterns::PatternBasis rhs;
};

// The ten built-in identities s^{-1}(Av(...)) = Av(...).
const std::vector<SetIdentity>& preloaded_identities();

// {sigma in S_n : s(sigma) in Av_n(lhs)} == Av_n(rhs) for every n <= n_max.
// A mismatch is re-verified through the recursive sorting route before the
// failure is emitted.
CheckReport check_set_equality(const patterns::PatternBasis& lhs,
                               const patterns::PatternBasis& rhs, int n_max,
                               const std::string& id = "set_equality");
CheckReport check_all_set_identities(int n_max = 8);

// Theorem checks. id in {thm3, thm9, thm10, thm11, thm12, thm15, thm16,
// thm16_descents, thm16_peaks, thm17, eq14, w2, baxter, fine_refinements,
// thm14_bounds, eq8}; n_max = -1 uses the id's default budget.
const std::vector<std::string>& theorem_ids();
CheckReport verify_theorem(const std::string& id, int n_max = -1, int jobs = 1);

// Conjecture checks, reported as pass-up-to-budget (partial when the sweep is
// genuinely incomplete). id in {conj1, conj2, conj3, conj4, conj5}.
const std::vector<std::string>& conjecture_ids();
CheckReport check_conjecture(const std::string& id, int budget = -1, int jobs = 1);

// Oracle equivalence and configuration/composition cross-validation (the
// enumerated compositions are duplicate-free and match the canonical-data
// characterization) over all of S_n.
CheckReport check_oracle_equivalence(int n_max = 8, int jobs = 1);
CheckReport check_refined_oracle_equivalence(int n_max = 8);
CheckReport check_vhc_composition_consistency(int n_max = 8);

struct GrowthRow {
  int n = 0;
  BigInt count;
  std::string root;  // count^(1/n) truncated to 4 decimals, display only
};

struct GrowthReport {
  std::vector<GrowthRow> rows;
  CheckReport report;
};

// Exact |s^{-1}(Av_n(321))| for n <= n_max, with the supermultiplicativity,
// trivial-bound (C_n <= count <= 16^n), and s(a (+) b) = s(a) (+) s(b)
// assertions.
GrowthReport av321_growth_report(int n_max = 11, int jobs = 1);

// Every check in declared order. jobs parallelizes across checks; the report
// order is fixed regardless of completion order.
std::vector<CheckReport> run_all(int jobs = 1);

}  // namespace stacksort::verify
