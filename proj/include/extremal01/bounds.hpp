#pragma once

#include <stdexcept>
#include <vector>

#include "extremal01/eigen.hpp"
#include "extremal01/exact.hpp"
#include "extremal01/hpreal.hpp"
#include "extremal01/matrices.hpp"

namespace extremal01 {

enum class BoundKind {
    exact_cn,
    frobenius_lemma,
    theorem_main,
    corollary_odd_even,
    mattila,
    altinisik,
    exact_Cn,
    ihm_old_upper,
};

namespace detail {
// Guard bits for closed-form evaluations; results are rounded back to the
// caller's precision at the end.
constexpr mpfr_prec_t kGuardBits = 32;
}  // namespace detail

// c_n itself: the reciprocal of the largest eigenvalue of Z_n, evaluated at
// doubling precision until target_digits significant digits are stable.
inline HPReal c_exact(long n, int target_digits, mpfr_prec_t start_prec = 0) {
    if (n < 1) throw std::invalid_argument("c_exact: n must be >= 1");
    const IntSymMatrix Z = build_Z(n);
    return adaptive_eval(
        [&Z](mpfr_prec_t prec) { return 1L / lambda_max_sym(Z, prec); },
        target_digits, start_prec);
}

// The simplified lower bound on c_n:
//   1 / sqrt( phi^{-4n}/25 + (3+(-1)^n)/25 phi^{-2n} - 2n/(5 sqrt5) phi^{-2n}
//             + (13(-1)^n - 33)/50 + n
//             + (3+(-1)^n)/25 phi^{2n} + 2n/(5 sqrt5) phi^{2n} + phi^{4n}/25 ).
inline HPReal bound_theorem_main(long n, mpfr_prec_t prec) {
    if (n < 1) throw std::invalid_argument("bound_theorem_main: n must be >= 1");
    const mpfr_prec_t wp = prec + detail::kGuardBits;
    const HPReal phi = HPReal::phi(wp);
    const HPReal phi2n = pow_si(phi, 2 * n);
    const HPReal phi4n = phi2n * phi2n;
    const HPReal sqrt5 = sqrt(HPReal::of(5L, wp));
    const long even_coeff = 3 + neg_one_pow(n);
    const HPReal n_term = HPReal::of(2 * n, wp) / (sqrt5 * 5);

    HPReal s = 1L / (phi4n * 25);
    s += HPReal::of(even_coeff, wp) / (phi2n * 25);
    s -= n_term / phi2n;
    s += HPReal::of(make_rational(13 * neg_one_pow(n) - 33, 50), wp);
    s += HPReal::of(n, wp);
    s += phi2n * even_coeff / 25;
    s += n_term * phi2n;
    s += phi4n / 25;
    return (1L / sqrt(s)).rounded_to(prec);
}

// The same bound with the parity substituted through: coefficient 2/25 and
// constant -23/25 for odd n, 4/25 and -2/5 for even n.
inline HPReal bound_corollary(long n, mpfr_prec_t prec) {
    if (n < 1) throw std::invalid_argument("bound_corollary: n must be >= 1");
    const mpfr_prec_t wp = prec + detail::kGuardBits;
    const HPReal phi = HPReal::phi(wp);
    const HPReal phi2n = pow_si(phi, 2 * n);
    const HPReal phi4n = phi2n * phi2n;
    const HPReal sqrt5 = sqrt(HPReal::of(5L, wp));
    const HPReal n_term = HPReal::of(2 * n, wp) / (sqrt5 * 5);
    const bool odd = (n % 2 != 0);
    const long num = odd ? 2 : 4;
    const ExactRational constant = odd ? make_rational(-23, 25) : make_rational(-2, 5);

    HPReal s = 1L / (phi4n * 25);
    s += HPReal::of(num, wp) / (phi2n * 25);
    s -= n_term / phi2n;
    s += HPReal::of(constant, wp);
    s += HPReal::of(n, wp);
    s += phi2n * num / 25;
    s += n_term * phi2n;
    s += phi4n / 25;
    return (1L / sqrt(s)).rounded_to(prec);
}

// 1 / ||Z_n||_F with the squared norm summed entry by entry -- the bound in
// its unsimplified form, kept as an independent route to the same value.
inline HPReal bound_frobenius_lemma(long n, mpfr_prec_t prec) {
    if (n < 1) throw std::invalid_argument("bound_frobenius_lemma: n must be >= 1");
    const mpfr_prec_t wp = prec + detail::kGuardBits;
    HPReal frob_sq = HPReal::of(frobenius_sq_direct(n), wp);
    return (1L / sqrt(frob_sq)).rounded_to(prec);
}

// Parity-dispatched lower bounds
//   (48 / (n^4 + 56n^2 + 48n))^{(n-1)/2}          n even
//   (48 / (n^4 + 50n^2 + 48n - 51))^{(n-1)/2}     n odd
// evaluated as exact rational powers, with one square root for even n.
inline HPReal bound_mattila(long n, mpfr_prec_t prec) {
    if (n < 1) throw std::invalid_argument("bound_mattila: n must be >= 1");
    const ExactInt nn(n);
    const bool even = (n % 2 == 0);
    ExactInt den;
    if (even)
        den = nn * nn * nn * nn + 56 * nn * nn + 48 * nn;
    else
        den = nn * nn * nn * nn + 50 * nn * nn + 48 * nn - 51;
    if (even) {
        ExactRational p = make_rational(pow_exact(ExactInt(48), n - 1), pow_exact(den, n - 1));
        const mpfr_prec_t wp = prec + detail::kGuardBits;
        return sqrt(HPReal::of(p, wp)).rounded_to(prec);
    }
    long e = (n - 1) / 2;
    ExactRational p = make_rational(pow_exact(ExactInt(48), e), pow_exact(den, e));
    return HPReal::of(p, prec);
}

// 2 / (2 F_n F_{n+1} + (-1)^n + 1), exact until the final rendering.
inline HPReal bound_altinisik(long n, mpfr_prec_t prec) {
    if (n < 1) throw std::invalid_argument("bound_altinisik: n must be >= 1");
    ExactInt den = 2 * fib(n) * fib(n + 1) + neg_one_pow(n) + 1;
    return HPReal::of(make_rational(ExactInt(2), den), prec);
}

// C_n = (1/4) csc^2(pi / (4n + 2)).
inline HPReal C_exact_closed_form(long n, mpfr_prec_t prec) {
    if (n < 1) throw std::invalid_argument("C_exact_closed_form: n must be >= 1");
    const mpfr_prec_t wp = prec + detail::kGuardBits;
    HPReal a = HPReal::pi(wp) / (4 * n + 2);
    HPReal c = csc(a);
    return (c * c / 4).rounded_to(prec);
}

// Three-term expansion 4n^2/pi^2 + 4n/pi^2 + 1/12 + 1/pi^2; the remainder
// is O(1/n^2).
inline HPReal C_asymptotic(long n, mpfr_prec_t prec = 256) {
    if (n < 1) throw std::invalid_argument("C_asymptotic: n must be >= 1");
    const mpfr_prec_t wp = prec + detail::kGuardBits;
    const HPReal pi = HPReal::pi(wp);
    const HPReal pi_sq = pi * pi;
    HPReal s = HPReal::of(4 * n * n, wp) / pi_sq;
    s += HPReal::of(4 * n, wp) / pi_sq;
    s += HPReal::of(make_rational(1, 12), wp);
    s += 1L / pi_sq;
    return s.rounded_to(prec);
}

// The older upper bound sqrt((2n-1) + 4(2n-3) + 9(2n-5) + ... + n^2), i.e.
// sqrt(sum_k k^2 (2n - 2k + 1)).
inline HPReal ihm_old_upper(long n, mpfr_prec_t prec) {
    if (n < 1) throw std::invalid_argument("ihm_old_upper: n must be >= 1");
    ExactInt s = 0;
    for (long k = 1; k <= n; ++k) s += ExactInt(k) * k * (2 * n - 2 * k + 1);
    const mpfr_prec_t wp = prec + detail::kGuardBits;
    return sqrt(HPReal::of(s, wp)).rounded_to(prec);
}

// Chebyshev polynomial of the second kind by the three-term recurrence
// U_0 = 1, U_1 = 2x, U_k = 2x U_{k-1} - U_{k-2}.
inline HPReal chebyshev_U(long k, const HPReal& x) {
    if (k < 0) throw std::invalid_argument("chebyshev_U: degree must be >= 0");
    HPReal u_prev = one_like(x);
    if (k == 0) return u_prev;
    HPReal u = x + x;
    for (long i = 2; i <= k; ++i) {
        HPReal next = (x + x) * u - u_prev;
        u_prev = std::move(u);
        u = std::move(next);
    }
    return u;
}

// Spectrum of B_n in closed form: 4 cos^2(j pi / (2n+1)), j = 1..n,
// ascending (j = n gives the smallest value).
inline std::vector<HPReal> B_eigenvalues_closed_form(long n, mpfr_prec_t prec) {
    if (n < 1) throw std::invalid_argument("B_eigenvalues_closed_form: n must be >= 1");
    const mpfr_prec_t wp = prec + detail::kGuardBits;
    const HPReal pi = HPReal::pi(wp);
    std::vector<HPReal> vals;
    vals.reserve(n);
    for (long j = n; j >= 1; --j) {
        HPReal c = cos(pi * j / (2 * n + 1));
        vals.push_back((c * c * 4).rounded_to(prec));
    }
    return vals;
}

// Diagnostic for the asymptotic guess c_n ~ 5 phi^{-2n}: the ratio
// c_n phi^{2n} / 5, which should drift toward 1.
inline HPReal conjecture_ratio(long n, int target_digits) {
    HPReal c = c_exact(n, target_digits + 2);
    HPReal phi = HPReal::phi(c.precision());
    return c * pow_si(phi, 2 * n) / 5;
}

}  // namespace extremal01
