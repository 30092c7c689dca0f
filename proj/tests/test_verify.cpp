#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "stacksort/numbers.hpp"
#include "stacksort/sorting.hpp"
#include "stacksort/verify.hpp"

using namespace stacksort;
using verify::CheckReport;
using verify::Status;

TEST_CASE("report rendering") {
  CheckReport r{"demo", "n <= 3", Status::pass, std::nullopt, 17};
  CHECK(verify::report_json(r, false) == R"({"id":"demo","range":"n <= 3","status":"pass"})");
  CHECK(verify::report_json(r, true) ==
        R"({"id":"demo","millis":17,"range":"n <= 3","status":"pass"})");
  r.status = Status::fail;
  r.witness = "w";
  CHECK(verify::report_json(r, false) ==
        R"({"id":"demo","range":"n <= 3","status":"fail","witness":"w"})");
  CHECK(verify::report_text(r, false).find("witness: w") != std::string::npos);
}

TEST_CASE("class preimage counts with oracle cross-check") {
  const auto basis = patterns::parse_basis("132,231,312,321");
  CHECK(verify::class_preimage_count(basis, 3, 1, true) == 6);
  CHECK(verify::class_preimage_count(basis, 3, 1) == numbers::thm3_total(3));
  const auto b213 = patterns::parse_basis("213");
  for (int n = 1; n <= 8; ++n)
    CHECK(verify::class_preimage_count(b213, n, 1, true) == numbers::catalan(n));
}

TEST_CASE("preimages of Av_n(12...m) vanish once n reaches 2^(m-1)") {
  const auto b123 = patterns::parse_basis("123");
  for (int n = 4; n <= 9; ++n) CHECK(verify::class_preimage_count(b123, n) == 0);
  const auto b1234 = patterns::parse_basis("1234");
  for (int n = 8; n <= 9; ++n) CHECK(verify::class_preimage_count(b1234, n) == 0);
}

TEST_CASE("2-stack-sortable means avoiding 2341 and the barred 3[5]241") {
  const auto basis = patterns::parse_basis("2341,3[5]241");
  for (int n = 1; n <= 7; ++n) {
    std::vector<int> word(static_cast<std::size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    do {
      const Permutation p(word);
      CHECK(is_t_sortable(p, 2) == patterns::avoids_all(p, basis));
    } while (std::next_permutation(word.begin(), word.end()));
  }
}

TEST_CASE("chunked parallel sweep matches serial") {
  const auto basis = patterns::parse_basis("321");
  for (int n = 6; n <= 8; ++n)
    CHECK(verify::class_preimage_count(basis, n, 4) == verify::class_preimage_count(basis, n, 1));
}

TEST_CASE("class sizes") {
  const auto layered = patterns::parse_basis("231,312");
  for (int n = 1; n <= 8; ++n)
    CHECK(verify::class_size(layered, n) == numbers::power_of_two(n - 1));
}

TEST_CASE("preloaded identities") {
  CHECK(verify::preloaded_identities().size() == 10);
  // the sortable-class identity on its own, small range
  const auto& thm1 = verify::preloaded_identities().front();
  const CheckReport r = verify::check_set_equality(thm1.lhs, thm1.rhs, 6, thm1.name);
  CHECK(r.status == Status::pass);
}

TEST_CASE("set-equality self-test: perturbed basis fails with a witness") {
  const auto lhs = patterns::parse_basis("21");
  const auto bad_rhs = patterns::parse_basis("312");  // s^-1(Av(21)) is Av(231)
  const CheckReport r = verify::check_set_equality(lhs, bad_rhs, 5, "selftest");
  CHECK(r.status == Status::fail);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->find("sigma=") != std::string::npos);
}

TEST_CASE("small theorem sweeps pass") {
  CHECK(verify::verify_theorem("thm3", 6).status == Status::pass);
  CHECK(verify::verify_theorem("thm9", 6).status == Status::pass);
  CHECK(verify::verify_theorem("thm10", 6).status == Status::pass);
  CHECK(verify::verify_theorem("thm12", 6).status == Status::pass);
  CHECK(verify::verify_theorem("thm16", 6).status == Status::pass);
  CHECK(verify::verify_theorem("eq8", 10).status == Status::pass);
  CHECK_THROWS(verify::verify_theorem("thm999"));
}

TEST_CASE("small conjecture sweeps") {
  CHECK(verify::check_conjecture("conj1", 8).status == Status::pass);
  CHECK(verify::check_conjecture("conj3", 5).status == Status::pass);
  const CheckReport c4 = verify::check_conjecture("conj4", 8);
  CHECK(c4.status == Status::partial);  // m=5 swept only to n=8
  REQUIRE(c4.witness.has_value());
  CHECK(c4.witness->find("unimodal so far") != std::string::npos);
  CHECK_THROWS(verify::check_conjecture("conj9"));
}

TEST_CASE("oracle checks at small n") {
  CHECK(verify::check_oracle_equivalence(6).status == Status::pass);
  CHECK(verify::check_refined_oracle_equivalence(5).status == Status::pass);
  CHECK(verify::check_vhc_composition_consistency(6).status == Status::pass);
}

TEST_CASE("growth report rows") {
  const verify::GrowthReport g = verify::av321_growth_report(6);
  CHECK(g.report.status == Status::pass);
  REQUIRE(g.rows.size() == 6);
  CHECK(g.rows[0].count == 1);
  CHECK(g.rows[0].root == "1.0000");
  CHECK(g.rows[2].count == 6);  // 5 + 0 + 1 + 0 + 0 over Av_3(321)
  for (const auto& row : g.rows) {
    const double root = std::stod(row.root);
    CHECK(root >= 1.0);
    CHECK(root <= 16.0);
  }
}

TEST_CASE("report list emission is stable") {
  std::vector<CheckReport> rs{{"a", "r", Status::pass, std::nullopt, 5},
                              {"b", "r", Status::partial, "note", 6}};
  const std::string once = verify::reports_json(rs, false);
  const std::string twice = verify::reports_json(rs, false);
  CHECK(once == twice);
  CHECK(once.find("millis") == std::string::npos);
}
