// Command-line frontend. All counts are emitted as decimal strings; output is
// byte-reproducible across runs except for the timing fields, which
// --no-timing suppresses.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stacksort/bigint.hpp"
#include "stacksort/patterns.hpp"
#include "stacksort/perm.hpp"
#include "stacksort/series.hpp"
#include "stacksort/sorting.hpp"
#include "stacksort/verify.hpp"
#include "stacksort/vhc.hpp"

namespace {

using nlohmann::json;
using namespace stacksort;

struct GlobalOpts {
  std::string format = "plain";
  int jobs = 1;
  bool no_timing = false;
};

void emit(const GlobalOpts& g, const std::string& cmd, const json& params, const json& result,
          const std::vector<std::string>& plain_lines) {
  if (g.format == "json") {
    json out;
    out["cmd"] = cmd;
    out["params"] = params;
    out["result"] = result;
    std::cout << out.dump() << "\n";
    return;
  }
  for (const std::string& line : plain_lines) std::cout << line << "\n";
}

void emit_table(const GlobalOpts& g, const std::string& cmd, const json& params,
                const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
  if (g.format == "json") {
    json result = json::array();
    for (const auto& row : rows) {
      json obj;
      for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i];
      result.push_back(obj);
    }
    json out;
    out["cmd"] = cmd;
    out["params"] = params;
    out["result"] = result;
    std::cout << out.dump() << "\n";
    return;
  }
  if (g.format == "csv") {
    for (std::size_t i = 0; i < header.size(); ++i)
      std::cout << header[i] << (i + 1 < header.size() ? "," : "\n");
    for (const auto& row : rows)
      for (std::size_t i = 0; i < row.size(); ++i)
        std::cout << row[i] << (i + 1 < row.size() ? "," : "\n");
    return;
  }
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) std::cout << row[i] << (i + 1 < row.size() ? " " : "");
    std::cout << "\n";
  }
}

int emit_report(const GlobalOpts& g, const std::string& cmd, const json& params,
                const verify::CheckReport& report) {
  if (g.format == "json") {
    json out;
    out["cmd"] = cmd;
    out["params"] = params;
    out["report"] = json::parse(verify::report_json(report, !g.no_timing));
    std::cout << out.dump() << "\n";
  } else {
    std::cout << verify::report_text(report, !g.no_timing) << "\n";
  }
  return report.status == verify::Status::fail ? 1 : 0;
}

int emit_reports(const GlobalOpts& g, const std::string& cmd, const json& params,
                 const std::vector<verify::CheckReport>& reports) {
  bool any_fail = false;
  for (const auto& r : reports) any_fail = any_fail || r.status == verify::Status::fail;
  if (g.format == "json") {
    json out;
    out["cmd"] = cmd;
    out["params"] = params;
    out["report"] = json::parse(verify::reports_json(reports, !g.no_timing));
    std::cout << out.dump() << "\n";
  } else {
    for (const auto& r : reports) std::cout << verify::report_text(r, !g.no_timing) << "\n";
  }
  return any_fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact stack-sorting, valid hook configurations, and fertility toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}));
  app.add_option("--jobs", g.jobs, "worker count for sweeps")->check(CLI::PositiveNumber);
  app.add_flag("--no-timing", g.no_timing, "suppress wall-time fields");

  int exit_code = 0;

  // sort
  std::string sort_perm;
  int sort_times = 1;
  auto* sort_cmd = app.add_subcommand("sort", "apply the stack-sorting map");
  sort_cmd->add_option("perm", sort_perm, "permutation")->required();
  sort_cmd->add_option("--times", sort_times, "number of applications")->check(CLI::NonNegativeNumber);
  sort_cmd->callback([&] {
    const Permutation p = Permutation::parse(sort_perm);
    const Permutation out = sort_iter(p, sort_times);
    emit(g, "sort", {{"perm", p.str()}, {"times", sort_times}}, out.str(), {out.str()});
  });

  // fertility
  std::string fert_perm;
  std::string fert_by;
  bool fert_oracle = false;
  auto* fert_cmd = app.add_subcommand("fertility", "number of stack-sorting preimages");
  fert_cmd->add_option("perm", fert_perm, "permutation")->required();
  fert_cmd->add_option("--by", fert_by, "refine by statistic")
      ->check(CLI::IsMember({"descents", "peaks"}));
  fert_cmd->add_flag("--oracle", fert_oracle, "cross-check against the brute-force oracle (n <= 8)");
  fert_cmd->callback([&] {
    const Permutation p = Permutation::parse(fert_perm);
    json params{{"perm", p.str()}, {"by", fert_by.empty() ? "none" : fert_by}, {"oracle", fert_oracle}};
    if (fert_oracle && p.size() > 8) throw CLI::ValidationError("--oracle supports n <= 8");
    if (fert_by.empty()) {
      const BigInt f = vhc::fertility(p);
      if (fert_oracle) {
        const ImageCounts oracle(p.size(), g.jobs);
        if (f != oracle.count(p)) {
          std::cerr << "oracle mismatch: vhc=" << f.str() << " oracle=" << oracle.count(p) << "\n";
          exit_code = 1;
          return;
        }
      }
      emit(g, "fertility", params, f.str(), {f.str()});
      return;
    }
    const std::vector<BigInt> f = fert_by == "descents" ? vhc::fertility_descent_polynomial(p)
                                                        : vhc::fertility_peak_polynomial(p);
    if (fert_oracle && p.size() >= 1) {
      const RefinedImageCounts oracle(p.size());
      for (int m = 0; m < p.size(); ++m) {
        const auto want = fert_by == "descents" ? oracle.by_descents(p, m) : oracle.by_peaks(p, m);
        if (f[static_cast<std::size_t>(m)] != want) {
          std::cerr << "oracle mismatch at m=" << m << "\n";
          exit_code = 1;
          return;
        }
      }
    }
    std::vector<std::vector<std::string>> rows;
    for (std::size_t m = 0; m < f.size(); ++m)
      rows.push_back({std::to_string(m), f[m].str()});
    emit_table(g, "fertility", params, {"m", "count"}, rows);
  });

  // preimages
  std::string pre_perm;
  auto* pre_cmd = app.add_subcommand("preimages", "list the fiber s^-1(perm) (n <= 8)");
  pre_cmd->add_option("perm", pre_perm, "permutation")->required();
  pre_cmd->callback([&] {
    const Permutation p = Permutation::parse(pre_perm);
    std::vector<std::string> lines;
    json arr = json::array();
    for (const Permutation& q : preimages_bruteforce(p)) {
      lines.push_back(q.str());
      arr.push_back(q.str());
    }
    emit(g, "preimages", {{"perm", p.str()}}, arr, lines);
  });

  // vhc
  std::string vhc_perm;
  bool vhc_canonical = false;
  bool vhc_comps = false;
  auto* vhc_cmd = app.add_subcommand("vhc", "valid hook configurations");
  vhc_cmd->add_option("perm", vhc_perm, "permutation")->required();
  vhc_cmd->add_flag("--canonical", vhc_canonical, "canonical configuration and its parameters");
  vhc_cmd->add_flag("--compositions", vhc_comps, "valid compositions");
  vhc_cmd->callback([&] {
    const Permutation p = Permutation::parse(vhc_perm);
    json params{{"perm", p.str()}, {"canonical", vhc_canonical}, {"compositions", vhc_comps}};
    auto hooks_str = [](const vhc::HookConfig& hooks) {
      std::string s;
      for (const vhc::Hook& h : hooks)
        s += "(" + std::to_string(h.sw) + "," + std::to_string(h.ne) + ")";
      return s.empty() ? std::string("()") : s;
    };
    auto ints_str = [](const std::vector<int>& v) {
      std::string s = "(";
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
      return s + ")";
    };
    if (vhc_canonical) {
      const auto cd = vhc::canonical_vhc(p);
      if (!cd) {
        emit(g, "vhc", params, json{{"canonical", nullptr}}, {"none (fertility 0)"});
        return;
      }
      json result{{"hooks", hooks_str(cd->hooks)},     {"b_star", ints_str(cd->b_star)},
                  {"q_star", ints_str(cd->q_star)},    {"e", ints_str(cd->e)},
                  {"alpha", ints_str(cd->alpha)},      {"d", ints_str(cd->d)}};
      emit(g, "vhc", params, result,
           {"hooks " + hooks_str(cd->hooks), "b* " + ints_str(cd->b_star),
            "q* " + ints_str(cd->q_star), "e " + ints_str(cd->e), "alpha " + ints_str(cd->alpha),
            "d " + ints_str(cd->d)});
      return;
    }
    if (vhc_comps) {
      std::vector<std::string> lines;
      json arr = json::array();
      for (const auto& q : vhc::valid_compositions(p)) {
        lines.push_back(vhc::composition_str(q));
        arr.push_back(vhc::composition_str(q));
      }
      emit(g, "vhc", params, arr, lines);
      return;
    }
    std::vector<std::string> lines;
    json arr = json::array();
    for (const auto& config : vhc::enumerate_vhcs(p)) {
      lines.push_back(hooks_str(config));
      arr.push_back(hooks_str(config));
    }
    emit(g, "vhc", params, arr, lines);
  });

  // class-count
  std::string cc_basis;
  int cc_n = 0;
  int cc_k = -1;
  std::string cc_by;
  bool cc_preimage = false;
  int cc_cap = 12;
  auto* cc_cmd = app.add_subcommand("class-count", "size or fertility of Av_n(basis)");
  cc_cmd->add_option("--basis", cc_basis, "comma-separated patterns")->required();
  cc_cmd->add_option("--n", cc_n, "length")->required()->check(CLI::NonNegativeNumber);
  cc_cmd->add_option("--k", cc_k, "restrict to k descents");
  cc_cmd->add_option("--by", cc_by, "refine preimage counts")->check(CLI::IsMember({"descents", "peaks"}));
  cc_cmd->add_flag("--preimage", cc_preimage, "count s^-1(Av_n(basis)) instead of Av_n(basis)");
  cc_cmd->add_option("--max-n", cc_cap, "safety cap on n");
  cc_cmd->callback([&] {
    if (cc_n > cc_cap) throw CLI::ValidationError("n exceeds --max-n safety cap");
    if (!cc_by.empty() && !cc_preimage)
      throw CLI::ValidationError("--by refines preimage counts; add --preimage");
    const auto basis = patterns::parse_basis(cc_basis);
    json params{{"basis", cc_basis}, {"n", cc_n}, {"k", cc_k},
                {"by", cc_by.empty() ? "none" : cc_by}, {"preimage", cc_preimage}};
    if (cc_k >= 0) {
      const auto members = patterns::av_nk(basis, cc_n, cc_k);
      BigInt value = 0;
      if (cc_preimage)
        for (const auto& p : members) value += vhc::fertility(p);
      else
        value = static_cast<int>(members.size());
      emit(g, "class-count", params, value.str(), {value.str()});
      return;
    }
    if (!cc_preimage) {
      const BigInt size = verify::class_size(basis, cc_n);
      emit(g, "class-count", params, size.str(), {size.str()});
      return;
    }
    if (cc_by.empty()) {
      const BigInt total = verify::class_preimage_count(basis, cc_n, g.jobs);
      emit(g, "class-count", params, total.str(), {total.str()});
      return;
    }
    const auto refined = verify::class_preimage_refined(
        basis, cc_n, cc_by == "descents" ? verify::Refine::descents : verify::Refine::peaks,
        g.jobs);
    std::vector<std::vector<std::string>> rows;
    for (std::size_t m = 0; m < refined.size(); ++m)
      rows.push_back({std::to_string(m), refined[m].str()});
    emit_table(g, "class-count", params, {"m", "count"}, rows);
  });

  // verify
  std::string verify_id;
  int verify_max_n = -1;
  auto* verify_cmd = app.add_subcommand("verify", "run a theorem verification sweep");
  verify_cmd->add_option("id", verify_id, "check id (see README) or 'all'")->required();
  verify_cmd->add_option("--max-n", verify_max_n, "sweep bound (default per id)");
  verify_cmd->callback([&] {
    json params{{"id", verify_id}, {"max_n", verify_max_n}};
    if (verify_id == "all") {
      exit_code = emit_reports(g, "verify", params, verify::run_all(g.jobs));
      return;
    }
    verify::CheckReport report;
    if (verify_id == "sets")
      report = verify::check_all_set_identities(verify_max_n < 0 ? 8 : verify_max_n);
    else if (verify_id == "oracle")
      report = verify::check_oracle_equivalence(verify_max_n < 0 ? 8 : verify_max_n, g.jobs);
    else if (verify_id == "refined_oracle")
      report = verify::check_refined_oracle_equivalence(verify_max_n < 0 ? 8 : verify_max_n);
    else if (verify_id == "vhc_consistency")
      report = verify::check_vhc_composition_consistency(verify_max_n < 0 ? 8 : verify_max_n);
    else
      report = verify::verify_theorem(verify_id, verify_max_n, g.jobs);
    exit_code = emit_report(g, "verify", params, report);
  });

  // conjecture
  std::string conj_id;
  int conj_max_n = -1;
  auto* conj_cmd = app.add_subcommand("conjecture", "run a conjecture check up to budget");
  conj_cmd->add_option("id", conj_id, "conj1..conj5 or 'all'")->required();
  conj_cmd->add_option("--max-n", conj_max_n, "sweep budget (default per id)");
  conj_cmd->callback([&] {
    json params{{"id", conj_id}, {"max_n", conj_max_n}};
    if (conj_id == "all") {
      std::vector<verify::CheckReport> reports;
      for (const std::string& id : verify::conjecture_ids())
        reports.push_back(verify::check_conjecture(id, conj_max_n, g.jobs));
      exit_code = emit_reports(g, "conjecture", params, reports);
      return;
    }
    exit_code = emit_report(g, "conjecture", params,
                            verify::check_conjecture(conj_id, conj_max_n, g.jobs));
  });

  // series
  std::string series_name;
  int series_terms = 10;
  auto* series_cmd = app.add_subcommand("series", "coefficients of a named generating function");
  series_cmd->add_option("name", series_name, "catalan|schroeder|fine|conj2|conj5")->required();
  series_cmd->add_option("--terms", series_terms, "last exponent to print")->check(CLI::NonNegativeNumber);
  series_cmd->callback([&] {
    const auto coeffs = series::gf_coefficients(series_name, series_terms);
    std::vector<std::vector<std::string>> rows;
    for (std::size_t n = 0; n < coeffs.size(); ++n)
      rows.push_back({std::to_string(n), coeffs[n].str()});
    emit_table(g, "series", {{"name", series_name}, {"terms", series_terms}}, {"n", "coefficient"},
               rows);
  });

  // growth321
  int growth_max_n = 11;
  auto* growth_cmd = app.add_subcommand("growth321", "exact |s^-1(Av_n(321))| growth table");
  growth_cmd->add_option("--max-n", growth_max_n, "largest n (<= 11 recommended)")->check(CLI::PositiveNumber);
  growth_cmd->callback([&] {
    const verify::GrowthReport report = verify::av321_growth_report(growth_max_n, g.jobs);
    json params{{"max_n", growth_max_n}};
    if (g.format == "json") {
      json rows = json::array();
      for (const auto& row : report.rows)
        rows.push_back({{"n", row.n}, {"count", row.count.str()}, {"root", row.root}});
      json out;
      out["cmd"] = "growth321";
      out["params"] = params;
      out["result"] = {{"rows", rows},
                       {"report", json::parse(verify::report_json(report.report, !g.no_timing))}};
      std::cout << out.dump() << "\n";
    } else {
      std::vector<std::vector<std::string>> rows;
      for (const auto& row : report.rows)
        rows.push_back({std::to_string(row.n), row.count.str(), row.root});
      emit_table(g, "growth321", params, {"n", "count", "root"}, rows);
      if (g.format == "plain") std::cout << verify::report_text(report.report, !g.no_timing) << "\n";
    }
    if (report.report.status == verify::Status::fail) exit_code = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
