#pragma once

#include <atomic>
#include <climits>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "extremal01/bounds.hpp"
#include "extremal01/enumerate.hpp"
#include "extremal01/format.hpp"
#include "extremal01/gcd_matrix.hpp"
#include "extremal01/identities.hpp"
#include "extremal01/matrices.hpp"

namespace extremal01 {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerifyFailure = 1,
    kExitUsageError = 2,
    kExitNonConvergence = 3,
};

struct RunConfig {
    mpfr_prec_t prec_bits = 512;
    int digits = 9;
    long n = 0;
    long from = 0, to = 0;
    long max_n = 300;
    std::string out_path;
    enum class OutFormat { pretty, csv, tsv } format = OutFormat::pretty;
    int brute_cap = 7;
    bool cap_override = false;
    std::string bound_name = "all";
    std::vector<long> gcd_set;
    double alpha = 1.0;
    unsigned threads = 0;  // 0 = hardware concurrency
};

// One comparison row: c_n against the three lower bounds, with the error of
// the main bound. sig_digits is LONG_MAX when the bound matches c_n exactly
// at working precision.
struct BoundTableRow {
    long n;
    HPReal c_n, theorem_main, altinisik, mattila;
    HPReal abs_err, rel_err;
    long sig_digits;
};

namespace detail {

inline unsigned worker_count(const RunConfig& cfg) {
    return cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
}

// Runs fn(n) for n in [from, to] across workers; fn must only touch its own
// output slot, keeping assembly in index order.
template <class Fn>
void parallel_over_range(long from, long to, unsigned threads, Fn&& fn) {
    if (to < from) return;
    std::atomic<long> next(from);
    auto worker = [&] {
        for (long n = next.fetch_add(1); n <= to; n = next.fetch_add(1)) fn(n);
    };
    unsigned t = std::min<unsigned>(threads, static_cast<unsigned>(to - from + 1));
    if (t <= 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < t; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

inline const char* sep(RunConfig::OutFormat f) {
    return f == RunConfig::OutFormat::tsv ? "\t" : ",";
}

inline void emit_rows(std::ostream& os, RunConfig::OutFormat fmt,
                      const std::vector<std::vector<std::string>>& rows) {
    if (fmt == RunConfig::OutFormat::pretty) {
        std::vector<size_t> width;
        for (const auto& row : rows)
            for (size_t c = 0; c < row.size(); ++c) {
                if (width.size() <= c) width.resize(c + 1, 0);
                width[c] = std::max(width[c], row[c].size());
            }
        for (const auto& row : rows) {
            for (size_t c = 0; c < row.size(); ++c) {
                if (c) os << "  ";
                os << std::setw(static_cast<int>(width[c])) << row[c];
            }
            os << '\n';
        }
        return;
    }
    for (const auto& row : rows) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) os << sep(fmt);
            os << row[c];
        }
        os << '\n';
    }
}

// The optional output file always gets machine-readable rows, CSV unless TSV
// was chosen explicitly.
inline void write_output_file(const RunConfig& cfg,
                              const std::vector<std::vector<std::string>>& rows) {
    if (cfg.out_path.empty()) return;
    std::ofstream f(cfg.out_path);
    if (!f) throw std::runtime_error("cannot open output file: " + cfg.out_path);
    auto fmt = cfg.format == RunConfig::OutFormat::tsv ? RunConfig::OutFormat::tsv
                                                       : RunConfig::OutFormat::csv;
    emit_rows(f, fmt, rows);
}

inline std::string sig_digits_str(long sd) { return sd == LONG_MAX ? "inf" : std::to_string(sd); }

}  // namespace detail

// c_n and the three bounds at the table's working precision, with the error
// metrics of the main bound.
inline BoundTableRow compute_bound_row(long n, const RunConfig& cfg) {
    HPReal c = c_exact(n, cfg.digits, cfg.prec_bits);
    const mpfr_prec_t wp = std::max<mpfr_prec_t>(cfg.prec_bits, c.precision());
    HPReal thm = bound_theorem_main(n, wp);
    HPReal alt = bound_altinisik(n, wp);
    HPReal mat = bound_mattila(n, wp);
    HPReal c_wide = c.rounded_to(wp);
    HPReal abs_err = abs(c_wide - thm);
    HPReal rel_err = abs_err / c_wide;
    long sd = common_significant_digits(c_wide, thm);
    return BoundTableRow{n, c, thm, alt, mat, abs_err, rel_err, sd};
}

// The ten-row comparison table of c_n and all lower bounds at nine decimals.
inline int cmd_table1(const RunConfig& cfg, std::ostream& console) {
    std::vector<std::vector<std::string>> rows(11);
    rows[0] = {"n", "c_n", "bound_theorem", "bound_altinisik", "bound_mattila"};
    detail::parallel_over_range(1, 10, detail::worker_count(cfg), [&](long n) {
        BoundTableRow r = compute_bound_row(n, cfg);
        rows[static_cast<size_t>(n)] = {std::to_string(n), format_auto(r.c_n, cfg.digits),
                                        format_auto(r.theorem_main, cfg.digits),
                                        format_auto(r.altinisik, cfg.digits),
                                        format_auto(r.mattila, cfg.digits)};
    });
    detail::emit_rows(console, cfg.format, rows);
    detail::write_output_file(cfg, rows);
    return kExitOk;
}

namespace detail {

// Error columns need the working precision to outrun the cancellation in
// c_n - bound, which sharpens at roughly 0.84 decimal digits per step of n.
inline mpfr_prec_t error_precision(long n, const RunConfig& cfg) {
    auto needed = static_cast<mpfr_prec_t>(3.33 * (0.9 * static_cast<double>(n) + cfg.digits + 24));
    return std::max(cfg.prec_bits, needed);
}

}  // namespace detail

// Per-n errors of the three bounds against c_n over [from, to]: the data
// behind the decay curves.
inline int cmd_errors(const RunConfig& cfg, std::ostream& console) {
    long from = cfg.from ? cfg.from : 2;
    long to = cfg.to ? cfg.to : 100;
    if (from < 2 || to > 300 || to < from)
        throw std::invalid_argument("errors: range must lie within 2..300");

    std::vector<std::vector<std::string>> rows(static_cast<size_t>(to - from + 2));
    rows[0] = {"n",
               "abs_err_theorem",
               "rel_err_theorem",
               "abs_err_mattila",
               "rel_err_mattila",
               "abs_err_altinisik",
               "rel_err_altinisik",
               "sig_digits_theorem"};
    detail::parallel_over_range(from, to, detail::worker_count(cfg), [&](long n) {
        const mpfr_prec_t wp = detail::error_precision(n, cfg);
        HPReal c = 1L / lambda_max_sym(build_Z(n), wp);
        HPReal thm = bound_theorem_main(n, wp);
        HPReal alt = bound_altinisik(n, wp);
        HPReal mat = bound_mattila(n, wp);
        auto abs_rel = [&c](const HPReal& b) {
            HPReal a = abs(c - b);
            return std::pair<HPReal, HPReal>(a, a / c);
        };
        auto [a_thm, r_thm] = abs_rel(thm);
        auto [a_mat, r_mat] = abs_rel(mat);
        auto [a_alt, r_alt] = abs_rel(alt);
        rows[static_cast<size_t>(n - from + 1)] = {
            std::to_string(n),          format_sci(a_thm, 12), format_sci(r_thm, 12),
            format_sci(a_mat, 12),      format_sci(r_mat, 12), format_sci(a_alt, 12),
            format_sci(r_alt, 12),      detail::sig_digits_str(common_significant_digits(c, thm))};
    });
    detail::emit_rows(console, cfg.format, rows);
    detail::write_output_file(cfg, rows);
    return kExitOk;
}

namespace detail {

struct CheckLine {
    std::string name;
    bool pass;
    std::string note;
};

inline void print_checks(std::ostream& os, const std::vector<CheckLine>& checks, bool& all_ok) {
    for (const auto& c : checks) {
        all_ok = all_ok && c.pass;
        os << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.note.empty()) os << "  (" << c.note << ")";
        os << '\n';
    }
}

inline std::vector<CheckLine> verify_identities_suite(long max_n) {
    std::vector<CheckLine> out;
    IdentityReport sums = verify_identity_suite(max_n);
    for (const auto& c : sums.checks)
        out.push_back({"identity/" + c.name, c.pass,
                       c.pass ? "" : "first failure at " + std::to_string(c.first_failure)});
    IdentityReport reductions = verify_row_simplifications_up_to(max_n);
    for (const auto& c : reductions.checks)
        out.push_back({"identity/" + c.name, c.pass,
                       c.pass ? "" : "first failure at " + std::to_string(c.first_failure)});
    IdentityCheck inner = verify_inner_sum_range(std::min<long>(max_n, 300));
    out.push_back({"identity/" + inner.name, inner.pass,
                   inner.pass ? "" : "first failure at i=" + std::to_string(inner.first_failure)});
    return out;
}

inline std::vector<CheckLine> verify_matrices_suite(long max_n) {
    std::vector<CheckLine> out;

    bool frob_ok = true;
    long frob_fail = -1;
    for (long n = 1; n <= max_n && frob_ok; ++n) {
        ExactRational closed = frobenius_sq_closed_form(n);
        if (closed.get_den() != 1 || ExactRational(frobenius_sq_direct(n)) != closed) {
            frob_ok = false;
            frob_fail = n;
        }
    }
    out.push_back({"matrices/frobenius_direct_equals_closed_form", frob_ok,
                   frob_ok ? "n=1.." + std::to_string(max_n) : "first failure at " + std::to_string(frob_fail)});

    bool rec_ok = true;
    long rec_fail = -1;
    for (long n = 2; n <= max_n && rec_ok; ++n)
        if (frob_decomposition(n).frob_sq != frobenius_sq_direct(n)) {
            rec_ok = false;
            rec_fail = n;
        }
    out.push_back({"matrices/corner_recurrence_matches_direct", rec_ok,
                   rec_ok ? "" : "first failure at " + std::to_string(rec_fail)});

    bool inv_ok = true;
    long inv_fail = -1;
    long inv_max = std::min<long>(max_n, 100);
    for (long n = 1; n <= inv_max && inv_ok; ++n)
        if (!product_is_identity(build_B(n), build_W(n))) {
            inv_ok = false;
            inv_fail = n;
        }
    out.push_back({"matrices/B_times_W_is_identity", inv_ok,
                   inv_ok ? "n=1.." + std::to_string(inv_max) : "first failure at " + std::to_string(inv_fail)});

    bool a_ok = true;
    for (long n = 1; n <= std::min<long>(max_n, 50) && a_ok; ++n) {
        IntSymMatrix A = build_A(n);
        IntSymMatrix B = build_B(n);
        B.set(n, n, B.at(n, n) + 1);
        a_ok = (A == B);
    }
    out.push_back({"matrices/A_is_B_plus_corner_unit", a_ok, ""});

    return out;
}

inline std::vector<CheckLine> verify_eigen_suite(long max_n) {
    std::vector<CheckLine> out;
    const long lim = std::min<long>(max_n, 50);
    const mpfr_prec_t prec = 256;
    const HPReal tol = HPReal::of(1e-30, prec);

    bool spec_ok = true, inv_ok = true;
    long spec_fail = -1, inv_fail = -1;
    for (long n = 1; n <= lim && spec_ok && inv_ok; ++n) {
        auto jac = eigenvalues_sym(build_B(n), prec);
        auto closed = B_eigenvalues_closed_form(n, prec);
        for (long k = 0; k < n; ++k)
            if (abs(jac.eigenvalues[static_cast<size_t>(k)] - closed[static_cast<size_t>(k)]) > tol) {
                spec_ok = false;
                spec_fail = n;
                break;
            }
        HPReal prod = lambda_max_sym(build_W(n), prec) * jac.eigenvalues.front();
        if (abs(prod - 1L) > tol) {
            inv_ok = false;
            inv_fail = n;
        }
    }
    out.push_back({"eigen/B_spectrum_matches_closed_form", spec_ok,
                   spec_ok ? "n=1.." + std::to_string(lim) + " at 256 bits"
                           : "first failure at " + std::to_string(spec_fail)});
    out.push_back({"eigen/lambda_max_W_times_lambda_min_B_is_1", inv_ok,
                   inv_ok ? "" : "first failure at " + std::to_string(inv_fail)});

    // Tridiagonal Toeplitz spectrum 2 - 2 cos(k pi / (n+1)).
    bool toeplitz_ok = true;
    for (long n = 1; n <= std::min<long>(max_n, 30) && toeplitz_ok; ++n) {
        auto jac = eigenvalues_sym(build_A(n), prec);
        const HPReal pi = HPReal::pi(prec + 32);
        for (long k = 1; k <= n; ++k) {
            HPReal mu = (2L - 2L * cos(pi * k / (n + 1))).rounded_to(prec);
            if (abs(jac.eigenvalues[static_cast<size_t>(k - 1)] - mu) > tol) {
                toeplitz_ok = false;
                break;
            }
        }
    }
    out.push_back({"eigen/A_spectrum_matches_cosine_form", toeplitz_ok, ""});

    return out;
}

}  // namespace detail

// Named verification suites; any failure yields a nonzero exit.
inline int cmd_verify(const RunConfig& cfg, const std::string& suite, std::ostream& console) {
    std::vector<detail::CheckLine> checks;
    if (suite == "identities" || suite == "all") {
        auto c = detail::verify_identities_suite(cfg.max_n);
        checks.insert(checks.end(), c.begin(), c.end());
    }
    if (suite == "matrices" || suite == "all") {
        auto c = detail::verify_matrices_suite(cfg.max_n);
        checks.insert(checks.end(), c.begin(), c.end());
    }
    if (suite == "eigen" || suite == "all") {
        auto c = detail::verify_eigen_suite(cfg.max_n);
        checks.insert(checks.end(), c.begin(), c.end());
    }
    if (checks.empty()) throw std::invalid_argument("verify: unknown suite '" + suite + "'");
    bool ok = true;
    detail::print_checks(console, checks, ok);
    console << (ok ? "verify: all checks passed\n" : "verify: FAILURES present\n");
    return ok ? kExitOk : kExitVerifyFailure;
}

namespace detail {

inline void write_bit_matrix(std::ostream& os, const TriBitMatrix& X) {
    os << X.size() << '\n';
    for (long i = 1; i <= X.size(); ++i) {
        for (long j = 1; j <= X.size(); ++j) {
            if (j > 1) os << ' ';
            os << (X.at(i, j) ? 1 : 0);
        }
        os << '\n';
    }
}

}  // namespace detail

// Exhaustive scan of K_n with deviations from the closed-form predictions.
inline int cmd_brute(const RunConfig& cfg, std::ostream& console) {
    ScanConfig scan;
    scan.cap = cfg.brute_cap;
    scan.cap_override = cfg.cap_override;
    scan.threads = cfg.threads;
    ExtremalRecord rec = gram_extremal_scan(static_cast<int>(cfg.n), scan);

    HPReal c_ref = c_exact(cfg.n, cfg.digits + 4, scan.verify_prec);
    HPReal C_ref = C_exact_closed_form(cfg.n, scan.verify_prec);
    HPReal dev_min = abs(rec.min_value / c_ref - 1L);
    HPReal dev_max = abs(rec.max_value / C_ref - 1L);

    console << "n " << rec.n << '\n';
    console << "enumerated " << rec.count_enumerated << '\n';
    console << "reverified " << rec.reverified_candidates << '\n';
    console << "min_eigenvalue " << format_auto(rec.min_value, cfg.digits) << '\n';
    console << "max_eigenvalue " << format_auto(rec.max_value, cfg.digits) << '\n';
    console << "deviation_from_c_n " << format_sci(dev_min, 3) << '\n';
    console << "deviation_from_C_n " << format_sci(dev_max, 3) << '\n';
    console << "argmin\n";
    detail::write_bit_matrix(console, rec.argmin);
    console << "argmax\n";
    detail::write_bit_matrix(console, rec.argmax);
    return kExitOk;
}

// Ratio c_n phi^{2n} / 5 over a range, with the distance from 1.
inline int cmd_conjecture(const RunConfig& cfg, std::ostream& console) {
    long from = cfg.from ? cfg.from : 2;
    long to = cfg.to ? cfg.to : 40;
    if (from < 1 || to < from) throw std::invalid_argument("conjecture: bad range");
    std::vector<std::vector<std::string>> rows(static_cast<size_t>(to - from + 2));
    rows[0] = {"n", "ratio", "distance_from_1"};
    detail::parallel_over_range(from, to, detail::worker_count(cfg), [&](long n) {
        HPReal ratio = conjecture_ratio(n, cfg.digits);
        rows[static_cast<size_t>(n - from + 1)] = {std::to_string(n),
                                                   format_fixed(ratio, cfg.digits),
                                                   format_sci(abs(ratio - 1L), 6)};
    });
    detail::emit_rows(console, cfg.format, rows);
    detail::write_output_file(cfg, rows);
    return kExitOk;
}

// Eigenvalue sandwich for a power GCD matrix on a divisor-closed set.
inline int cmd_gcd_bounds(const RunConfig& cfg, std::ostream& console) {
    GcdBoundsResult r = gcd_matrix_bounds(cfg.gcd_set, cfg.alpha, cfg.digits);
    console << "lower_bound " << format_auto(r.lower_bound, cfg.digits) << '\n';
    console << "lambda_min " << format_auto(r.lambda_min, cfg.digits) << '\n';
    console << "lambda_max " << format_auto(r.lambda_max, cfg.digits) << '\n';
    console << "upper_bound " << format_auto(r.upper_bound, cfg.digits) << '\n';
    console << "lower_bound <= lambda_min: " << (r.lower_ok ? "PASS" : "FAIL") << '\n';
    console << "lambda_max <= upper_bound: " << (r.upper_ok ? "PASS" : "FAIL") << '\n';
    return (r.lower_ok && r.upper_ok) ? kExitOk : kExitVerifyFailure;
}

// Single values.
inline int cmd_cn(const RunConfig& cfg, std::ostream& console) {
    if (cfg.n < 1) throw std::invalid_argument("cn: need --n >= 1");
    console << format_auto(c_exact(cfg.n, cfg.digits, cfg.prec_bits), cfg.digits) << '\n';
    return kExitOk;
}

inline int cmd_Cn(const RunConfig& cfg, std::ostream& console) {
    if (cfg.n < 1) throw std::invalid_argument("Cn: need --n >= 1");
    console << format_auto(C_exact_closed_form(cfg.n, cfg.prec_bits), cfg.digits) << '\n';
    return kExitOk;
}

namespace detail {

struct BoundNames {
    BoundKind kind;
    const char* cli_name;  // spelling accepted by --bound
    const char* label;     // printed row key
};

inline constexpr BoundNames kBoundNames[] = {
    {BoundKind::exact_cn, "exact-cn", "exact_cn"},
    {BoundKind::theorem_main, "theorem-main", "theorem_main"},
    {BoundKind::corollary_odd_even, "corollary", "corollary_odd_even"},
    {BoundKind::frobenius_lemma, "frobenius", "frobenius_lemma"},
    {BoundKind::mattila, "mattila", "mattila"},
    {BoundKind::altinisik, "altinisik", "altinisik"},
    {BoundKind::exact_Cn, "exact-Cn", "exact_Cn"},
    {BoundKind::ihm_old_upper, "ihm-upper", "ihm_old_upper"},
};

}  // namespace detail

inline HPReal evaluate_bound(BoundKind kind, long n, const RunConfig& cfg) {
    switch (kind) {
        case BoundKind::exact_cn: return c_exact(n, cfg.digits, cfg.prec_bits);
        case BoundKind::frobenius_lemma: return bound_frobenius_lemma(n, cfg.prec_bits);
        case BoundKind::theorem_main: return bound_theorem_main(n, cfg.prec_bits);
        case BoundKind::corollary_odd_even: return bound_corollary(n, cfg.prec_bits);
        case BoundKind::mattila: return bound_mattila(n, cfg.prec_bits);
        case BoundKind::altinisik: return bound_altinisik(n, cfg.prec_bits);
        case BoundKind::exact_Cn: return C_exact_closed_form(n, cfg.prec_bits);
        case BoundKind::ihm_old_upper: return ihm_old_upper(n, cfg.prec_bits);
    }
    throw std::invalid_argument("evaluate_bound: unknown kind");
}

// All bounds for one n, selectable by name.
inline int cmd_bounds(const RunConfig& cfg, std::ostream& console) {
    if (cfg.n < 1) throw std::invalid_argument("bounds: need --n >= 1");
    const std::string& which = cfg.bound_name;
    bool matched = false;
    for (const auto& b : detail::kBoundNames) {
        if (which != "all" && which != b.cli_name) continue;
        console << b.label << ' ' << format_auto(evaluate_bound(b.kind, cfg.n, cfg), cfg.digits)
                << '\n';
        matched = true;
    }
    if (!matched) throw std::invalid_argument("bounds: unknown bound '" + which + "'");
    return kExitOk;
}

// Plain-text dump of one of the named matrices.
inline int cmd_dump(const RunConfig& cfg, const std::string& kind, std::ostream& console) {
    if (cfg.n < 1) throw std::invalid_argument("dump: need --n >= 1");
    IntSymMatrix M = [&] {
        if (kind == "Z") return build_Z(cfg.n);
        if (kind == "W") return build_W(cfg.n);
        if (kind == "B") return build_B(cfg.n);
        if (kind == "A") return build_A(cfg.n);
        throw std::invalid_argument("dump: unknown matrix kind '" + kind + "'");
    }();
    if (!cfg.out_path.empty()) {
        std::ofstream f(cfg.out_path);
        if (!f) throw std::runtime_error("cannot open output file: " + cfg.out_path);
        write_matrix(f, M);
    } else {
        write_matrix(console, M);
    }
    return kExitOk;
}

}  // namespace extremal01
