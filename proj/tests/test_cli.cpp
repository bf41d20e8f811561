#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "extremal01/commands.hpp"

using namespace extremal01;

namespace {

RunConfig csv_config() {
    RunConfig cfg;
    cfg.format = RunConfig::OutFormat::csv;
    return cfg;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string tok;
    std::istringstream ss(s);
    while (std::getline(ss, tok, sep)) out.push_back(tok);
    return out;
}

}  // namespace

TEST_CASE("fixed formatting rounds half to even") {
    CHECK(format_fixed(HPReal::of(1L, 128), 9) == "1.000000000");
    CHECK(format_fixed(HPReal::of(0.0625, 128), 9) == "0.062500000");
    // 0.1875 and 0.3125 are exact in binary, so three decimals is a true
    // tie; half-even sends one up and one down.
    CHECK(format_fixed(HPReal::of(0.1875, 128), 3) == "0.188");
    CHECK(format_fixed(HPReal::of(0.3125, 128), 3) == "0.312");
}

TEST_CASE("scientific formatting uses minimal exponent digits") {
    CHECK(format_sci(HPReal::of(make_rational(1, 1225043), 192), 6) == "8.16298e-7");
    CHECK(format_sci(HPReal::of(0.00123456, 128), 4) == "1.235e-3");
    CHECK(format_sci(HPReal::of(-1500.0, 128), 3) == "-1.50e3");
}

TEST_CASE("auto formatting switches to scientific below 1e-6") {
    CHECK(format_auto(HPReal::of(make_rational(1, 1225043), 192), 9) == "8.16298e-7");
    CHECK(format_auto(HPReal::of(2.0528e-5, 128), 9) == "0.000020528");
    CHECK(format_auto(HPReal::of(0L, 128), 9) == "0.000000000");
}

TEST_CASE("bound table rows keep their error-metric invariants") {
    RunConfig cfg;
    for (long n : {2L, 5L, 9L}) {
        BoundTableRow r = compute_bound_row(n, cfg);
        CHECK(r.n == n);
        HPReal tol = HPReal::pow2(-400, r.rel_err.precision());
        CHECK(abs(r.rel_err - r.abs_err / r.c_n.rounded_to(r.abs_err.precision())) <= tol);
        CHECK(r.rel_err > 0L);
        CHECK(r.sig_digits == floor_to_long(-log10(r.rel_err)));
        CHECK(r.theorem_main <= r.c_n.rounded_to(r.theorem_main.precision()));
    }
    // At n = 1 the bound is exact; agreement saturates (up to final rounding
    // of the golden-ratio expression, which may leave a few trailing ulps).
    BoundTableRow one = compute_bound_row(1, cfg);
    CHECK(one.sig_digits > 100);
}

TEST_CASE("table command reproduces the reference rows") {
    RunConfig cfg = csv_config();
    std::ostringstream out;
    REQUIRE(cmd_table1(cfg, out) == kExitOk);
    auto lines = split(out.str(), '\n');
    REQUIRE(lines.size() >= 11);
    CHECK(lines[0] == "n,c_n,bound_theorem,bound_altinisik,bound_mattila");
    CHECK(lines[1] == "1,1.000000000,1.000000000,1.000000000,1.000000000");
    CHECK(lines[6] == "6,0.014827585,0.014824986,0.009523810,0.000020528");
    auto row9 = split(lines[9], ',');
    REQUIRE(row9.size() == 5);
    CHECK(row9[4] == "3.63629e-10");
}

TEST_CASE("command output is reproducible byte for byte") {
    RunConfig cfg = csv_config();
    std::ostringstream a, b;
    cmd_table1(cfg, a);
    cmd_table1(cfg, b);
    CHECK(a.str() == b.str());

    RunConfig conj = csv_config();
    conj.from = 2;
    conj.to = 6;
    std::ostringstream c, d;
    cmd_conjecture(conj, c);
    cmd_conjecture(conj, d);
    CHECK(c.str() == d.str());
}

TEST_CASE("table output file round-trips through parsing") {
    RunConfig cfg = csv_config();
    cfg.out_path = "table1_test_output.csv";
    std::ostringstream console;
    cmd_table1(cfg, console);
    std::ifstream f(cfg.out_path);
    REQUIRE(f.good());
    std::stringstream file_content;
    file_content << f.rdbuf();
    CHECK(file_content.str() == console.str());
    auto lines = split(file_content.str(), '\n');
    // Values parse back to the printed precision.
    auto row2 = split(lines[2], ',');
    CHECK(std::stod(row2[1]) == Catch::Approx(0.381966011).epsilon(1e-12));
    std::remove(cfg.out_path.c_str());
}

TEST_CASE("errors command emits the expected columns") {
    RunConfig cfg = csv_config();
    cfg.from = 2;
    cfg.to = 5;
    std::ostringstream out;
    REQUIRE(cmd_errors(cfg, out) == kExitOk);
    auto lines = split(out.str(), '\n');
    REQUIRE(lines.size() >= 5);
    CHECK(lines[0] ==
          "n,abs_err_theorem,rel_err_theorem,abs_err_mattila,rel_err_mattila,abs_err_altinisik,"
          "rel_err_altinisik,sig_digits_theorem");
    auto row2 = split(lines[1], ',');
    REQUIRE(row2.size() == 8);
    CHECK(row2[0] == "2");
    CHECK(std::stod(row2[1]) == Catch::Approx(0.0040015382).epsilon(1e-6));

    // Exponential sharpening: by n = 30 the main bound carries 12+ digits.
    RunConfig deep = csv_config();
    deep.from = 30;
    deep.to = 30;
    std::ostringstream far_out;
    cmd_errors(deep, far_out);
    auto row30 = split(split(far_out.str(), '\n')[1], ',');
    CHECK(std::stod(row30[2]) < 1e-12);
    CHECK_THROWS_AS(cmd_errors([] {
                        RunConfig c;
                        c.from = 1;
                        c.to = 5;
                        return c;
                    }(),
                    std::cout),
                    std::invalid_argument);
}

TEST_CASE("verify command reports suites and exit status") {
    RunConfig cfg;
    cfg.max_n = 40;
    std::ostringstream out;
    CHECK(cmd_verify(cfg, "identities", out) == kExitOk);
    CHECK(out.str().find("PASS identity/sum_L2im2_L2im1") != std::string::npos);
    CHECK(out.str().find("FAIL") == std::string::npos);

    std::ostringstream m;
    CHECK(cmd_verify(cfg, "matrices", m) == kExitOk);
    CHECK(m.str().find("PASS matrices/frobenius_direct_equals_closed_form") != std::string::npos);

    RunConfig eig_cfg;
    eig_cfg.max_n = 12;
    std::ostringstream e;
    CHECK(cmd_verify(eig_cfg, "eigen", e) == kExitOk);
    CHECK(e.str().find("PASS eigen/B_spectrum_matches_closed_form") != std::string::npos);

    CHECK_THROWS_AS(cmd_verify(cfg, "nonsense", std::cout), std::invalid_argument);
}

TEST_CASE("brute command prints the record and deviations") {
    RunConfig cfg;
    cfg.n = 2;
    std::ostringstream out;
    REQUIRE(cmd_brute(cfg, out) == kExitOk);
    const std::string s = out.str();
    CHECK(s.find("enumerated 2") != std::string::npos);
    CHECK(s.find("argmax\n2\n1 0\n1 1\n") != std::string::npos);
    // Deviations are printed in scientific form and are tiny.
    auto dev_pos = s.find("deviation_from_c_n ");
    REQUIRE(dev_pos != std::string::npos);
}

TEST_CASE("brute command at n = 6 enumerates 32768 matrices") {
    RunConfig cfg;
    cfg.n = 6;
    std::ostringstream out;
    REQUIRE(cmd_brute(cfg, out) == kExitOk);
    CHECK(out.str().find("enumerated 32768") != std::string::npos);
}

TEST_CASE("conjecture command output") {
    RunConfig cfg = csv_config();
    cfg.from = 2;
    cfg.to = 2;
    std::ostringstream out;
    cmd_conjecture(cfg, out);
    auto lines = split(out.str(), '\n');
    auto row = split(lines[1], ',');
    REQUIRE(row.size() == 3);
    CHECK(std::stod(row[1]) == Catch::Approx(0.5236).epsilon(1e-3));
}

TEST_CASE("dump command emits the plain-text format") {
    RunConfig cfg;
    cfg.n = 3;
    std::ostringstream out;
    REQUIRE(cmd_dump(cfg, "Z", out) == kExitOk);
    CHECK(out.str() == "3\n3 -2 1\n-2 2 -1\n1 -1 1\n");
    std::ostringstream b;
    cmd_dump(cfg, "B", b);
    CHECK(b.str() == "3\n2 -1 0\n-1 2 -1\n0 -1 1\n");
    CHECK_THROWS_AS(cmd_dump(cfg, "Q", std::cout), std::invalid_argument);
}

TEST_CASE("bounds command lists every kind by name") {
    RunConfig cfg;
    cfg.n = 5;
    cfg.prec_bits = 128;
    std::ostringstream out;
    REQUIRE(cmd_bounds(cfg, out) == kExitOk);
    for (const char* key : {"exact_cn", "theorem_main", "corollary_odd_even", "frobenius_lemma",
                            "mattila", "altinisik", "exact_Cn", "ihm_old_upper"})
        CHECK(out.str().find(key) != std::string::npos);

    RunConfig one = cfg;
    one.bound_name = "mattila";
    std::ostringstream single;
    cmd_bounds(one, single);
    CHECK(single.str() == "mattila 0.000540833\n");
    one.bound_name = "bogus";
    CHECK_THROWS_AS(cmd_bounds(one, std::cout), std::invalid_argument);
}

TEST_CASE("gcd bounds command prints the sandwich verdicts") {
    RunConfig cfg;
    cfg.gcd_set = {1, 2};
    cfg.alpha = 1.0;
    std::ostringstream out;
    REQUIRE(cmd_gcd_bounds(cfg, out) == kExitOk);
    CHECK(out.str().find("lower_bound <= lambda_min: PASS") != std::string::npos);
    CHECK(out.str().find("lambda_max <= upper_bound: PASS") != std::string::npos);
}
