#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "extremal01/bounds.hpp"
#include "extremal01/eigen.hpp"
#include "extremal01/exact.hpp"
#include "extremal01/hpreal.hpp"

namespace extremal01 {

namespace detail {

inline std::vector<long> prime_factors(long m) {
    std::vector<long> ps;
    for (long p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            ps.push_back(p);
            while (m % p == 0) m /= p;
        }
    if (m > 1) ps.push_back(m);
    return ps;
}

inline bool is_integral(double a) { return a == static_cast<double>(static_cast<long>(a)); }

}  // namespace detail

// Jordan totient J_alpha(m) = m^alpha * prod_{p | m} (1 - p^{-alpha}).
// J_1 is Euler's totient.
inline HPReal jordan_totient(long m, double alpha, mpfr_prec_t prec) {
    if (m < 1) throw std::invalid_argument("jordan_totient: m must be >= 1");
    if (!(alpha > 0)) throw std::invalid_argument("jordan_totient: alpha must be positive");
    const mpfr_prec_t wp = prec + 32;
    HPReal a = HPReal::of(alpha, wp);
    HPReal v = pow(HPReal::of(m, wp), a);
    for (long p : detail::prime_factors(m))
        v *= 1L - 1L / pow(HPReal::of(p, wp), a);
    return v.rounded_to(prec);
}

// Exact value for integer alpha: m^a * prod (p^a - 1) / p^a stays rational.
inline ExactRational jordan_totient_exact(long m, long alpha) {
    if (m < 1) throw std::invalid_argument("jordan_totient_exact: m must be >= 1");
    if (alpha < 1) throw std::invalid_argument("jordan_totient_exact: alpha must be >= 1");
    ExactRational v(pow_exact(ExactInt(m), alpha));
    for (long p : detail::prime_factors(m)) {
        ExactInt pa = pow_exact(ExactInt(p), alpha);
        v *= make_rational(pa - 1, pa);
    }
    return v;
}

// Every divisor of every element must itself be in S (lower closure in the
// divisor lattice). S must be strictly increasing.
inline bool is_divisor_closed(const std::vector<long>& S) {
    if (S.empty()) return false;
    for (size_t k = 0; k < S.size(); ++k) {
        if (S[k] < 1) return false;
        if (k > 0 && S[k] <= S[k - 1]) return false;
    }
    for (long x : S)
        for (long d = 1; d <= x; ++d)
            if (x % d == 0 && !std::binary_search(S.begin(), S.end(), d)) return false;
    return true;
}

// Power GCD matrix on a set of positive integers: entries gcd(x_i, x_j)^alpha.
class PowerGcdMatrix {
public:
    PowerGcdMatrix(std::vector<long> elements, double alpha)
        : elements_(std::move(elements)), alpha_(alpha) {
        if (elements_.empty()) throw std::invalid_argument("PowerGcdMatrix: empty set");
        if (!(alpha_ > 0)) throw std::invalid_argument("PowerGcdMatrix: alpha must be positive");
        for (size_t k = 0; k < elements_.size(); ++k) {
            if (elements_[k] < 1 || (k > 0 && elements_[k] <= elements_[k - 1]))
                throw std::invalid_argument("PowerGcdMatrix: set must be strictly increasing positive");
        }
    }

    long size() const { return static_cast<long>(elements_.size()); }
    const std::vector<long>& elements() const { return elements_; }
    double alpha() const { return alpha_; }

    DenseSym<HPReal> to_dense(mpfr_prec_t prec) const {
        const long n = size();
        DenseSym<HPReal> A(n, HPReal(prec));
        const bool exact = detail::is_integral(alpha_);
        const HPReal a = HPReal::of(alpha_, prec);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j <= i; ++j) {
                long g = std::gcd(elements_[i], elements_[j]);
                HPReal v = exact
                               ? HPReal::of(pow_exact(ExactInt(g), static_cast<long>(alpha_)), prec)
                               : pow(HPReal::of(g, prec), a);
                A.at(i, j) = v;
                A.at(j, i) = std::move(v);
            }
        return A;
    }

private:
    std::vector<long> elements_;
    double alpha_;
};

struct GcdBoundsResult {
    HPReal lambda_min, lambda_max;   // spectrum edges of the power GCD matrix
    HPReal lower_bound, upper_bound; // c_n * min J and C_n * max J
    bool lower_ok, upper_ok;
};

// The eigenvalue sandwich for a power GCD matrix on a divisor-closed set:
//   c_n * min_x J_alpha(x) <= lambda_min(A),  lambda_max(A) <= C_n * max_x J_alpha(x).
inline GcdBoundsResult gcd_matrix_bounds(const std::vector<long>& S, double alpha,
                                         int target_digits, long size_cap = 12) {
    if (!is_divisor_closed(S))
        throw std::invalid_argument("gcd_matrix_bounds: set is not divisor-closed");
    const long n = static_cast<long>(S.size());
    if (n > size_cap) throw ResourceLimitError("gcd_matrix_bounds: set larger than the size cap");

    const mpfr_prec_t prec =
        std::max<mpfr_prec_t>(128, static_cast<mpfr_prec_t>((target_digits + 16) * 3.33));
    PowerGcdMatrix A(S, alpha);
    auto eig = jacobi_eigenvalues(A.to_dense(prec), default_rel_tol(prec));

    HPReal j_min = jordan_totient(S.front(), alpha, prec);
    HPReal j_max = j_min;
    for (long x : S) {
        HPReal j = jordan_totient(x, alpha, prec);
        if (j < j_min) j_min = j;
        if (j > j_max) j_max = j;
    }

    HPReal cn = c_exact(n, target_digits + 4, prec);
    HPReal Cn = C_exact_closed_form(n, prec);
    HPReal lower = cn * j_min;
    HPReal upper = Cn * j_max;

    // Slack for ties: the bound is attained exactly for some sets, and both
    // sides carry rounding of order 2^-prec.
    HPReal slack = HPReal::pow2(-static_cast<long>(prec / 2), prec);
    bool lower_ok = lower <= eig.eigenvalues.front() * (1L + slack);
    bool upper_ok = eig.eigenvalues.back() <= upper * (1L + slack);
    return GcdBoundsResult{eig.eigenvalues.front(), eig.eigenvalues.back(), lower, upper,
                           lower_ok, upper_ok};
}

}  // namespace extremal01
