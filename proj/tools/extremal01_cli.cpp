// Command-line front end: tabulates the extremal eigenvalue constants c_n
// and C_n of nonsingular lower-triangular (0,1)-matrices, their closed-form
// bounds, and the verification suites behind them.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "extremal01/commands.hpp"

namespace {

using extremal01::RunConfig;

// --set accepts "1..8" or "1,2,4,8".
std::vector<long> parse_set(const std::string& text) {
    std::vector<long> out;
    auto range_pos = text.find("..");
    if (range_pos != std::string::npos) {
        long lo = std::stol(text.substr(0, range_pos));
        long hi = std::stol(text.substr(range_pos + 2));
        for (long v = lo; v <= hi; ++v) out.push_back(v);
        return out;
    }
    std::string tok;
    std::istringstream ss(text);
    while (std::getline(ss, tok, ',')) out.push_back(std::stol(tok));
    return out;
}

RunConfig::OutFormat parse_format(const std::string& name) {
    if (name == "csv") return RunConfig::OutFormat::csv;
    if (name == "tsv") return RunConfig::OutFormat::tsv;
    if (name == "pretty") return RunConfig::OutFormat::pretty;
    throw CLI::ValidationError("--format", "expected csv, tsv, or pretty");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Extremal eigenvalues of nonsingular lower-triangular (0,1)-matrices"};
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char* env = std::getenv("EXTREMAL_PREC_BITS")) {
        char* end = nullptr;
        long bits = std::strtol(env, &end, 10);
        if (end && *end == '\0' && bits >= 64) cfg.prec_bits = bits;
    }

    std::string format_name = "pretty";
    std::string suite = "all";
    std::string matrix_kind = "Z";
    std::string set_text = "1..8";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--digits", cfg.digits, "Target decimal digits")->check(CLI::PositiveNumber);
        cmd->add_option("--prec-bits", cfg.prec_bits, "Working precision in bits (>= 64)")
            ->check(CLI::Range(64L, 1L << 20));
        cmd->add_option("--format", format_name, "Output format: csv, tsv, pretty");
        cmd->add_option("--out", cfg.out_path, "Write machine-readable output to this file");
        cmd->add_option("--threads", cfg.threads, "Worker threads (0 = auto)");
    };

    CLI::App* cn = app.add_subcommand("cn", "Smallest extremal constant c_n");
    cn->add_option("--n", cfg.n, "Dimension")->required();
    add_common(cn);

    CLI::App* Cn = app.add_subcommand("Cn", "Largest extremal constant C_n (closed form)");
    Cn->add_option("--n", cfg.n, "Dimension")->required();
    add_common(Cn);

    CLI::App* bounds = app.add_subcommand("bounds", "Closed-form bounds for one n");
    bounds->add_option("--n", cfg.n, "Dimension")->required();
    bounds->add_option("--bound", cfg.bound_name,
                       "theorem-main|corollary|frobenius|mattila|altinisik|exact-cn|exact-Cn|ihm-upper|all");
    add_common(bounds);

    CLI::App* table1 = app.add_subcommand("table1", "c_n vs. all lower bounds, n = 1..10");
    add_common(table1);

    CLI::App* errors = app.add_subcommand("errors", "Bound errors against c_n over a range");
    errors->add_option("--from", cfg.from, "Range start (>= 2)");
    errors->add_option("--to", cfg.to, "Range end (<= 300)");
    add_common(errors);

    CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite, "identities|matrices|eigen|all");
    verify->add_option("--max-n", cfg.max_n, "Verify up to this index")->check(CLI::PositiveNumber);
    add_common(verify);

    CLI::App* brute = app.add_subcommand("brute", "Exhaustive scan of K_n");
    brute->add_option("--n", cfg.n, "Dimension")->required();
    brute->add_flag("--cap-override", cfg.cap_override, "Permit n up to 9 (costly)");
    add_common(brute);

    CLI::App* conjecture = app.add_subcommand("conjecture", "Ratio c_n phi^{2n}/5 over a range");
    conjecture->add_option("--from", cfg.from, "Range start");
    conjecture->add_option("--to", cfg.to, "Range end");
    add_common(conjecture);

    CLI::App* gcd = app.add_subcommand("gcd-bounds", "Eigenvalue sandwich for a power GCD matrix");
    gcd->add_option("--set", set_text, "Divisor-closed set, e.g. 1..8 or 1,2,4,8");
    gcd->add_option("--alpha", cfg.alpha, "Power exponent (> 0)");
    add_common(gcd);

    CLI::App* dump = app.add_subcommand("dump", "Plain-text dump of a named matrix");
    dump->add_option("--matrix", matrix_kind, "Z|W|B|A");
    dump->add_option("--n", cfg.n, "Dimension")->required();
    add_common(dump);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : extremal01::kExitUsageError;
    }

    try {
        cfg.format = parse_format(format_name);
        if (gcd->parsed()) cfg.gcd_set = parse_set(set_text);

        if (cn->parsed()) return extremal01::cmd_cn(cfg, std::cout);
        if (Cn->parsed()) return extremal01::cmd_Cn(cfg, std::cout);
        if (bounds->parsed()) return extremal01::cmd_bounds(cfg, std::cout);
        if (table1->parsed()) return extremal01::cmd_table1(cfg, std::cout);
        if (errors->parsed()) return extremal01::cmd_errors(cfg, std::cout);
        if (verify->parsed()) return extremal01::cmd_verify(cfg, suite, std::cout);
        if (brute->parsed()) return extremal01::cmd_brute(cfg, std::cout);
        if (conjecture->parsed()) return extremal01::cmd_conjecture(cfg, std::cout);
        if (gcd->parsed()) return extremal01::cmd_gcd_bounds(cfg, std::cout);
        if (dump->parsed()) return extremal01::cmd_dump(cfg, matrix_kind, std::cout);
    } catch (const extremal01::ConvergenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return extremal01::kExitNonConvergence;
    } catch (const extremal01::ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return extremal01::kExitUsageError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return extremal01::kExitUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return extremal01::kExitUsageError;
    }
    return extremal01::kExitUsageError;
}
