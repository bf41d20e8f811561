#include <catch2/catch_amalgamated.hpp>

#include "extremal01/gcd_matrix.hpp"
#include "oracles.hpp"

using namespace extremal01;

TEST_CASE("Jordan totient small values") {
    const mpfr_prec_t prec = 128;
    CHECK(jordan_totient(1, 1.0, prec) == 1L);
    CHECK(jordan_totient(6, 1.0, prec) == 2L);   // Euler's totient of 6
    CHECK(jordan_totient(4, 2.0, prec) == 12L);  // 16 (1 - 1/4)
    CHECK(jordan_totient_exact(6, 1) == 2);
    CHECK(jordan_totient_exact(4, 2) == 12);
}

TEST_CASE("Jordan totient equals the divisor Moebius sum for integer exponents") {
    for (long alpha : {1L, 2L, 3L}) {
        for (long m = 1; m <= 200; ++m) {
            ExactRational v = jordan_totient_exact(m, alpha);
            REQUIRE(v.get_den() == 1);
            REQUIRE(v.get_num() == oracles::jordan_divisor_sum(m, alpha));
        }
    }
}

TEST_CASE("product form matches the exact form at working precision") {
    const mpfr_prec_t prec = 192;
    HPReal tol = HPReal::pow2(-150, prec);
    for (long m : {2L, 12L, 30L, 97L, 180L}) {
        HPReal hp = jordan_totient(m, 2.0, prec);
        HPReal ex = HPReal::of(jordan_totient_exact(m, 2), prec);
        REQUIRE(abs(hp - ex) <= tol * ex);
    }
}

TEST_CASE("Jordan totient preconditions") {
    CHECK_THROWS_AS(jordan_totient(0, 1.0, 128), std::invalid_argument);
    CHECK_THROWS_AS(jordan_totient(5, 0.0, 128), std::invalid_argument);
    CHECK_THROWS_AS(jordan_totient_exact(5, 0), std::invalid_argument);
}

TEST_CASE("divisor closure") {
    CHECK(is_divisor_closed({1}));
    CHECK(is_divisor_closed({1, 2, 4}));
    CHECK(is_divisor_closed({1, 3}));
    CHECK(is_divisor_closed({1, 2, 3, 6}));
    CHECK_FALSE(is_divisor_closed({2, 4}));      // 1 missing
    CHECK_FALSE(is_divisor_closed({1, 6}));      // 2 and 3 missing
    CHECK_FALSE(is_divisor_closed({1, 4, 2}));   // not increasing
    CHECK_FALSE(is_divisor_closed({}));
}

TEST_CASE("power GCD matrix entries") {
    PowerGcdMatrix A({1, 2, 4}, 2.0);
    auto D = A.to_dense(128);
    CHECK(D.at(0, 0) == 1L);
    CHECK(D.at(1, 1) == 4L);   // diagonal is x_i^alpha
    CHECK(D.at(2, 2) == 16L);
    CHECK(D.at(2, 1) == 4L);   // gcd(4,2)^2
    CHECK(D.at(0, 2) == 1L);
    // Fractional exponent: entry (2,2) of S={1,2} at alpha = 1/2 is sqrt 2.
    PowerGcdMatrix H({1, 2}, 0.5);
    auto Dh = H.to_dense(192);
    CHECK(abs(Dh.at(1, 1) - sqrt(HPReal::of(2L, 192))) < HPReal::pow2(-150, 192));
    CHECK_THROWS_AS(PowerGcdMatrix({2, 1}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(PowerGcdMatrix({1, 2}, -1.0), std::invalid_argument);
}

TEST_CASE("power GCD matrices on initial segments are positive definite") {
    for (double alpha : {1.0, 2.0, 0.5}) {
        for (long n : {2L, 5L, 8L}) {
            std::vector<long> S;
            for (long v = 1; v <= n; ++v) S.push_back(v);
            auto eig = jacobi_eigenvalues(PowerGcdMatrix(S, alpha).to_dense(192),
                                          default_rel_tol(192));
            REQUIRE(eig.eigenvalues.front() > 0L);
        }
    }
}

TEST_CASE("sandwich on the singleton set is trivially tight") {
    GcdBoundsResult r = gcd_matrix_bounds({1}, 1.0, 12);
    CHECK(r.lower_ok);
    CHECK(r.upper_ok);
    CHECK(abs(r.lambda_min - 1L) < HPReal::of(1e-20, 64));
    CHECK(abs(r.lower_bound - 1L) < HPReal::of(1e-20, 64));
    CHECK(abs(r.upper_bound - 1L) < HPReal::of(1e-20, 64));
}

TEST_CASE("sandwich is an equality for S = {1,2} at alpha = 1") {
    GcdBoundsResult r = gcd_matrix_bounds({1, 2}, 1.0, 12);
    CHECK(r.lower_ok);
    CHECK(r.upper_ok);
    CHECK(abs(r.lower_bound / r.lambda_min - 1L) < HPReal::of(1e-20, 64));
    CHECK(abs(r.upper_bound / r.lambda_max - 1L) < HPReal::of(1e-20, 64));
}

TEST_CASE("sandwich is strict on the initial segment of length 8") {
    GcdBoundsResult r = gcd_matrix_bounds({1, 2, 3, 4, 5, 6, 7, 8}, 1.0, 12);
    CHECK(r.lower_ok);
    CHECK(r.upper_ok);
    CHECK(r.lower_bound < r.lambda_min);
    CHECK(r.lambda_max < r.upper_bound);
}

TEST_CASE("bad sets are rejected") {
    CHECK_THROWS_AS(gcd_matrix_bounds({1, 4}, 1.0, 12), std::invalid_argument);
    std::vector<long> big;
    for (long v = 1; v <= 13; ++v) big.push_back(v);
    CHECK_THROWS_AS(gcd_matrix_bounds(big, 1.0, 12), ResourceLimitError);
}
