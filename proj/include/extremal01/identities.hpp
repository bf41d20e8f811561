#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "extremal01/exact.hpp"

namespace extremal01 {

struct IdentityCheck {
    std::string name;
    bool pass = true;
    long first_failure = -1;  // smallest failing index, -1 if none
    long checked_up_to = 0;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    size_t failure_count() const {
        size_t k = 0;
        for (const auto& c : checks)
            if (!c.pass) ++k;
        return k;
    }
};

namespace detail {

// F_k extended one step below zero: F_{-1} = 1. The Lucas-product row
// reduction references F_{n-2} at n = 1, which the public fib() rejects.
inline ExactInt fib_ext(long k) {
    if (k == -1) return ExactInt(1);
    return fib(k);
}

inline ExactRational rat(ExactInt v) {
    return ExactRational(std::move(v));
}

}  // namespace detail

// Checks F_{j-1} + sum_{k=j+1}^i F_{k-1} F_{k-j}
//        = (1/5) (L_{2i-j} + (5/2) F_{j-1} - (1/2) (-1)^{i-j} L_{j-1})
// exactly, for 2 <= j <= i. The sum is empty (zero) when j = i.
inline bool verify_inner_sum_identity(long i, long j) {
    if (j < 2 || i < j) throw std::invalid_argument("verify_inner_sum_identity: need 2 <= j <= i");
    ExactInt sum = 0;
    for (long k = j + 1; k <= i; ++k) sum += fib(k - 1) * fib(k - j);
    ExactRational lhs = detail::rat(fib(j - 1) + sum);
    ExactRational rhs = make_rational(1, 5) *
                        (detail::rat(lucas(2 * i - j)) +
                         make_rational(5, 2) * detail::rat(fib(j - 1)) -
                         make_rational(neg_one_pow(i - j), 2) * detail::rat(lucas(j - 1)));
    return lhs == rhs;
}

namespace detail {

struct NamedIdentity {
    std::string name;
    long min_index;
    std::function<bool(long)> holds_at;
};

// The closed-form summation identities used to collapse the triple sum in
// the Frobenius norm of Z_n. The first six run their sum over j at a fixed
// outer index i; the rest run over i up to the outer index n. All are
// evaluated in exact rational arithmetic.
inline std::vector<NamedIdentity> summation_identities() {
    using R = ExactRational;
    auto r = [](ExactInt v) { return rat(std::move(v)); };

    std::vector<NamedIdentity> ids;

    // --- sums over j = 2..i ---
    ids.push_back({"sum_L2imj_sq", 2, [](long i) {
        ExactInt s = 0;
        for (long j = 2; j <= i; ++j) s += lucas(2 * i - j) * lucas(2 * i - j);
        return s == lucas(2 * i - 2) * lucas(2 * i - 1) - lucas(i) * lucas(i - 1);
    }});
    ids.push_back({"sum_Fjm1_L2imj", 2, [r](long i) {
        ExactInt s = 0;
        for (long j = 2; j <= i; ++j) s += fib(j - 1) * lucas(2 * i - j);
        R rhs = r((i - 1) * fib(2 * i - 1)) + make_rational(ExactInt(lucas(2 * i - 2)), ExactInt(5)) +
                make_rational(2 * neg_one_pow(i), 5);
        return r(s) == rhs;
    }});
    ids.push_back({"sum_altj_Ljm1_L2imj", 2, [r](long i) {
        ExactInt s = 0;
        for (long j = 2; j <= i; ++j) s += neg_one_pow(j) * lucas(j - 1) * lucas(2 * i - j);
        R rhs = r(2) + make_rational(1 + neg_one_pow(i), 2) * r(lucas(2 * i - 1)) - r(lucas(2 * i - 2));
        return r(s) == rhs;
    }});
    ids.push_back({"sum_Fjm1_sq", 2, [](long i) {
        ExactInt s = 0;
        for (long j = 2; j <= i; ++j) s += fib(j - 1) * fib(j - 1);
        return s == fib(i - 1) * fib(i);
    }});
    ids.push_back({"sum_altj_Fjm1_Ljm1", 2, [r](long i) {
        ExactInt s = 0;
        for (long j = 2; j <= i; ++j) s += neg_one_pow(j) * fib(j - 1) * lucas(j - 1);
        R rhs = make_rational(neg_one_pow(i), 4) * r(fib(i + 1) * fib(i + 1) - fib(i - 2) * fib(i - 2));
        return r(s) == rhs;
    }});
    ids.push_back({"sum_Ljm1_sq", 2, [](long i) {
        ExactInt s = 0;
        for (long j = 2; j <= i; ++j) s += lucas(j - 1) * lucas(j - 1);
        return s == lucas(i - 1) * lucas(i) - 2;
    }});

    // --- sums over i = 2..n ---
    ids.push_back({"sum_L2im2_L2im1", 2, [](long n) {
        ExactInt s = 0;
        for (long i = 2; i <= n; ++i) s += lucas(2 * i - 2) * lucas(2 * i - 1);
        return s == n - 3 + fib(4 * n - 1);
    }});
    ids.push_back({"sum_Li_Lim1", 2, [r](long n) {
        ExactInt s = 0;
        for (long i = 2; i <= n; ++i) s += lucas(i) * lucas(i - 1);
        return r(s) == r(lucas(2 * n)) - make_rational(7 + neg_one_pow(n), 2);
    }});
    ids.push_back({"sum_i_F2im1", 2, [](long n) {
        ExactInt s = 0;
        for (long i = 2; i <= n; ++i) s += i * fib(2 * i - 1);
        return s == n * fib(2 * n + 1) - (n + 1) * fib(2 * n - 1);
    }});
    ids.push_back({"sum_F2im1", 2, [](long n) {
        ExactInt s = 0;
        for (long i = 2; i <= n; ++i) s += fib(2 * i - 1);
        return s == fib(2 * n) - 1;
    }});
    ids.push_back({"sum_L2im2", 2, [](long n) {
        ExactInt s = 0;
        for (long i = 2; i <= n; ++i) s += lucas(2 * i - 2);
        return s == lucas(2 * n - 1) - 1;
    }});
    ids.push_back({"sum_alti_L2im2", 2, [](long n) {
        ExactInt s = 0;
        for (long i = 2; i <= n; ++i) s += neg_one_pow(i) * lucas(2 * i - 2);
        return s == neg_one_pow(n) * fib(n - 1) * lucas(n);
    }});
    ids.push_back({"sum_L2im1", 2, [](long n) {
        ExactInt s = 0;
        for (long i = 2; i <= n; ++i) s += lucas(2 * i - 1);
        return s == lucas(2 * n) - 3;
    }});
    ids.push_back({"sum_alti_L2im1", 2, [](long n) {
        ExactInt s = 0;
        for (long i = 2; i <= n; ++i) s += neg_one_pow(i) * lucas(2 * i - 1);
        return s == neg_one_pow(n) * fib(n - 1) * lucas(n + 1);
    }});
    ids.push_back({"sum_Fi_Fim1", 2, [r](long n) {
        ExactInt s = 0;
        for (long i = 2; i <= n; ++i) s += fib(i) * fib(i - 1);
        return r(s) == r(fib(n) * fib(n)) + make_rational(neg_one_pow(n) - 1, 2);
    }});
    ids.push_back({"sum_Fim2_sq", 2, [](long n) {
        ExactInt s = 0;
        for (long i = 2; i <= n; ++i) s += fib(i - 2) * fib(i - 2);
        return s == fib(n - 1) * fib(n - 2);
    }});
    ids.push_back({"sum_Fip1_sq", 2, [](long n) {
        ExactInt s = 0;
        for (long i = 2; i <= n; ++i) s += fib(i + 1) * fib(i + 1);
        return s == fib(n + 1) * fib(n + 2) - 2;
    }});
    ids.push_back({"sum_Fi2_Fim12", 2, [r](long n) {
        ExactInt s = 0;
        for (long i = 2; i <= n; ++i) {
            ExactInt p = fib(i) * fib(i - 1);
            s += p * p;
        }
        R rhs = make_rational(ExactInt(-n), ExactInt(25)) +
                make_rational(ExactInt(fib(4 * n)), ExactInt(25)) +
                make_rational(2 * neg_one_pow(n), 25) * r(fib(n) * lucas(n));
        return r(s) == rhs;
    }});

    return ids;
}

// The four reductions that collapse the assembled Frobenius norm expression
// into its final Lucas form. All hold for every n >= 1.
inline std::vector<NamedIdentity> row_reduction_identities() {
    using R = ExactRational;
    auto r = [](ExactInt v) { return rat(std::move(v)); };

    std::vector<NamedIdentity> ids;

    ids.push_back({"reduce_F4n_to_L4n", 1, [r](long n) {
        R lhs = make_rational(1, 25) * r(fib(4 * n)) + make_rational(2, 25) * r(fib(4 * n - 1));
        return lhs == make_rational(1, 25) * r(lucas(4 * n));
    }});
    ids.push_back({"reduce_nF2np1_split", 1, [r](long n) {
        R lhs = make_rational(2, 5) * r(n * fib(2 * n + 1));
        R rhs = make_rational(2, 5) * r(n * (fib(2 * n) + fib(2 * n - 1)));
        return lhs == rhs;
    }});
    ids.push_back({"reduce_alt_FL_products", 1, [r](long n) {
        int sg = neg_one_pow(n);
        R lhs = make_rational(-7, 10) + make_rational(2 * sg, 25) * r(fib(n - 1) * lucas(n)) +
                make_rational(2 * sg, 25) * r(fib(n) * lucas(n)) -
                make_rational(sg, 25) * r(fib(n - 1) * lucas(n + 1));
        R rhs = make_rational(sg, 25) * r(lucas(2 * n)) - make_rational(33, 50);
        return lhs == rhs;
    }});
    ids.push_back({"reduce_fib_mix_to_L2n", 1, [r](long n) {
        int sg = neg_one_pow(n);
        R lhs = make_rational(32 * sg, 25) + make_rational(1, 20) * r(fib_ext(n - 2) * fib(n - 1)) +
                make_rational(5, 2) * r(fib(n) * fib(n)) - make_rational(2, 5) * r(fib(2 * n)) -
                make_rational(1, 20) * r(fib(n + 1) * fib(n + 2)) -
                make_rational(2, 5) * r(fib(2 * n - 1)) - make_rational(1, 10) * r(lucas(2 * n)) +
                make_rational(2, 25) * r(lucas(2 * n - 1));
        R rhs = make_rational(3, 25) * r(lucas(2 * n)) + make_rational(13 * sg, 50);
        return lhs == rhs;
    }});

    return ids;
}

inline IdentityCheck run_identity(const NamedIdentity& id, long lo, long hi) {
    IdentityCheck c{id.name, true, -1, hi};
    for (long k = std::max(lo, id.min_index); k <= hi; ++k) {
        if (!id.holds_at(k)) {
            c.pass = false;
            c.first_failure = k;
            break;
        }
    }
    return c;
}

}  // namespace detail

// Exactly verifies every summation identity at every admissible index up to
// n_max. Failures are reported, never thrown.
inline IdentityReport verify_identity_suite(long n_max) {
    if (n_max < 2) throw std::invalid_argument("verify_identity_suite: need n_max >= 2");
    detail::shared_fib_cache().extend(4 * n_max + 2);
    IdentityReport rep;
    for (const auto& id : detail::summation_identities())
        rep.checks.push_back(detail::run_identity(id, 2, n_max));
    return rep;
}

// Verifies the four row reductions at the single index n.
inline IdentityReport verify_row_simplifications(long n) {
    if (n < 1) throw std::invalid_argument("verify_row_simplifications: need n >= 1");
    detail::shared_fib_cache().extend(4 * n + 2);
    IdentityReport rep;
    for (const auto& id : detail::row_reduction_identities())
        rep.checks.push_back(detail::run_identity(id, n, n));
    return rep;
}

// Row reductions swept over 1..n_max, one report entry per identity.
inline IdentityReport verify_row_simplifications_up_to(long n_max) {
    if (n_max < 1) throw std::invalid_argument("verify_row_simplifications_up_to: need n_max >= 1");
    detail::shared_fib_cache().extend(4 * n_max + 2);
    IdentityReport rep;
    for (const auto& id : detail::row_reduction_identities())
        rep.checks.push_back(detail::run_identity(id, 1, n_max));
    return rep;
}

// The inner-sum closed form over all pairs 2 <= j <= i <= i_max.
inline IdentityCheck verify_inner_sum_range(long i_max) {
    if (i_max < 2) throw std::invalid_argument("verify_inner_sum_range: need i_max >= 2");
    detail::shared_fib_cache().extend(2 * i_max);
    IdentityCheck c{"inner_sum_closed_form", true, -1, i_max};
    for (long i = 2; i <= i_max && c.pass; ++i)
        for (long j = 2; j <= i; ++j)
            if (!verify_inner_sum_identity(i, j)) {
                c.pass = false;
                c.first_failure = i;
                break;
            }
    return c;
}

}  // namespace extremal01
