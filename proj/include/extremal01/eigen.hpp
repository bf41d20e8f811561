#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "extremal01/exact.hpp"
#include "extremal01/hpreal.hpp"
#include "extremal01/matrices.hpp"

namespace extremal01 {

// Thrown when a request exceeds a configured enumeration or size cap.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown when an iteration exhausts its budget without meeting tolerance.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double residual)
        : std::runtime_error(what + " (residual " + std::to_string(residual) + ")"),
          residual_(residual) {}

    double residual() const { return residual_; }

private:
    double residual_;
};

// Dense symmetric matrix over an arbitrary real scalar, full row-major
// storage. The Jacobi kernel below runs on this at any precision.
template <class Real>
class DenseSym {
public:
    DenseSym(long n, const Real& fill) : n_(n), a_(static_cast<size_t>(n) * n, fill) {
        if (n < 1) throw std::invalid_argument("DenseSym: dimension must be >= 1");
    }

    long size() const { return n_; }
    Real& at(long i, long j) { return a_[static_cast<size_t>(i) * n_ + j]; }  // 0-based
    const Real& at(long i, long j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    Real frobenius_norm() const {
        Real s = zero_like(a_[0]);
        for (const Real& v : a_) s += v * v;
        using std::sqrt;
        return sqrt(s);
    }

    Real offdiag_norm() const {
        Real s = zero_like(a_[0]);
        for (long i = 0; i < n_; ++i)
            for (long j = i + 1; j < n_; ++j) s += at(i, j) * at(i, j);
        using std::sqrt;
        return sqrt(s + s);
    }

private:
    long n_;
    std::vector<Real> a_;
};

inline DenseSym<HPReal> to_dense(const IntSymMatrix& M, mpfr_prec_t prec) {
    DenseSym<HPReal> D(M.size(), HPReal(prec));
    for (long i = 1; i <= M.size(); ++i)
        for (long j = 1; j <= M.size(); ++j) D.at(i - 1, j - 1) = HPReal::of(M.at(i, j), prec);
    return D;
}

inline DenseSym<double> to_dense_double(const IntSymMatrix& M) {
    DenseSym<double> D(M.size(), 0.0);
    for (long i = 1; i <= M.size(); ++i)
        for (long j = 1; j <= M.size(); ++j) D.at(i - 1, j - 1) = M.at(i, j).get_d();
    return D;
}

template <class Real>
struct EigenResult {
    std::vector<Real> eigenvalues;  // ascending
    Real achieved_offdiag_norm;     // relative to ||M||_F at entry
    mpfr_prec_t precision_bits;
    int sweeps = 0;
};

namespace detail {
inline mpfr_prec_t precision_of(const HPReal& x) { return x.precision(); }
inline mpfr_prec_t precision_of(double) { return 53; }
inline double as_double(const HPReal& x) { return x.to_double(); }
inline double as_double(double x) { return x; }
}  // namespace detail

// Cyclic Jacobi rotations, sweeping until the off-diagonal Frobenius norm
// drops below rel_tol * ||M||_F. Rotations whose pivot cannot affect the
// target norm are skipped; the convergence test always measures the true
// residual, so skipping can only cost sweeps, not accuracy.
template <class Real>
EigenResult<Real> jacobi_eigenvalues(DenseSym<Real> A, const Real& rel_tol, int max_sweeps = 60) {
    using std::abs;
    using std::sqrt;

    const long n = A.size();
    const Real fro = A.frobenius_norm();
    const Real threshold = rel_tol * fro;
    const Real skip_below = threshold / (2 * std::max<long>(n, 2));
    const Real one = one_like(fro);

    int sweep = 0;
    Real off = A.offdiag_norm();
    while (!(off <= threshold)) {
        if (sweep >= max_sweeps)
            throw ConvergenceError("jacobi_eigenvalues: sweep budget exhausted",
                                   detail::as_double(fro > zero_like(fro) ? off / fro : off));
        ++sweep;
        for (long p = 0; p < n - 1; ++p) {
            for (long q = p + 1; q < n; ++q) {
                const Real apq = A.at(p, q);
                if (abs(apq) <= skip_below) continue;
                const Real theta = (A.at(q, q) - A.at(p, p)) / (apq + apq);
                Real t = one / (abs(theta) + sqrt(theta * theta + one));
                if (theta < zero_like(theta)) t = -t;
                const Real c = one / sqrt(t * t + one);
                const Real s = t * c;

                const Real app = A.at(p, p);
                const Real aqq = A.at(q, q);
                A.at(p, p) = app - t * apq;
                A.at(q, q) = aqq + t * apq;
                A.at(p, q) = A.at(q, p) = zero_like(apq);
                for (long k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const Real akp = A.at(k, p);
                    const Real akq = A.at(k, q);
                    A.at(k, p) = A.at(p, k) = c * akp - s * akq;
                    A.at(k, q) = A.at(q, k) = s * akp + c * akq;
                }
            }
        }
        off = A.offdiag_norm();
    }

    EigenResult<Real> res{{}, fro > 0 ? off / fro : off, detail::precision_of(fro), sweep};
    res.eigenvalues.reserve(n);
    for (long i = 0; i < n; ++i) res.eigenvalues.push_back(A.at(i, i));
    std::sort(res.eigenvalues.begin(), res.eigenvalues.end());
    return res;
}

inline HPReal default_rel_tol(mpfr_prec_t prec) {
    return HPReal::pow2(-static_cast<long>(prec > 48 ? prec - 32 : 16), prec);
}

// All eigenvalues of an exact symmetric matrix at the given precision.
// Entries are rounded to the working precision on conversion; each returned
// eigenvalue lies within tol * ||M||_F of a true one.
inline EigenResult<HPReal> eigenvalues_sym(const IntSymMatrix& M, mpfr_prec_t prec,
                                           const HPReal& rel_tol) {
    if (prec < 64) throw std::invalid_argument("eigenvalues_sym: precision must be >= 64 bits");
    if (!(rel_tol > 0)) throw std::invalid_argument("eigenvalues_sym: tolerance must be positive");
    return jacobi_eigenvalues(to_dense(M, prec), rel_tol);
}

inline EigenResult<HPReal> eigenvalues_sym(const IntSymMatrix& M, mpfr_prec_t prec) {
    return eigenvalues_sym(M, prec, default_rel_tol(prec));
}

namespace detail {

// Deterministic start vector; splitmix64 keeps runs reproducible.
inline std::vector<HPReal> seed_vector(long n, mpfr_prec_t prec) {
    std::vector<HPReal> v;
    v.reserve(n);
    std::uint64_t state = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(n);
    for (long i = 0; i < n; ++i) {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        z = z ^ (z >> 31);
        // Component in [0.5, 1.5); strictly positive keeps the overlap with
        // the dominant eigenvector of the matrices used here away from zero.
        v.push_back(HPReal::of(0.5 + static_cast<double>(z >> 11) * 0x1.0p-53, prec));
    }
    return v;
}

inline std::vector<HPReal> matvec(const DenseSym<HPReal>& A, const std::vector<HPReal>& v) {
    long n = A.size();
    std::vector<HPReal> w;
    w.reserve(n);
    for (long i = 0; i < n; ++i) {
        HPReal s = zero_like(v[0]);
        for (long j = 0; j < n; ++j) s += A.at(i, j) * v[j];
        w.push_back(std::move(s));
    }
    return w;
}

inline HPReal dot(const std::vector<HPReal>& a, const std::vector<HPReal>& b) {
    HPReal s = zero_like(a[0]);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace detail

// Largest eigenvalue of a symmetric positive semidefinite matrix: power
// iteration with a Rayleigh-quotient stopping test, falling back to the full
// Jacobi solve when convergence is slow.
inline HPReal lambda_max_sym(const IntSymMatrix& M, mpfr_prec_t prec, const HPReal& rel_tol) {
    const long n = M.size();
    if (n == 1) return HPReal::of(M.at(1, 1), prec);

    const DenseSym<HPReal> A = to_dense(M, prec);
    std::vector<HPReal> v = detail::seed_vector(n, prec);
    {
        HPReal nv = sqrt(detail::dot(v, v));
        for (auto& x : v) x /= nv;
    }

    // The Rayleigh value converges geometrically; its remaining error is
    // about delta * rho / (1 - rho) for the observed contraction rho of the
    // successive changes. Stop once that estimate sits under rel_tol twice
    // in a row, or once the change hits the precision floor.
    const HPReal stop = rel_tol / 4;
    const HPReal rho_cap = HPReal::of(0.9, prec);
    HPReal lambda = HPReal::of(0L, prec);
    HPReal prev_delta = HPReal::of(-1L, prec);
    int quiet = 0;
    const long max_iters = 2000 + 8L * static_cast<long>(prec);
    for (long it = 0; it < max_iters; ++it) {
        std::vector<HPReal> w = detail::matvec(A, v);
        HPReal next = detail::dot(v, w);
        HPReal nw = sqrt(detail::dot(w, w));
        if (nw.is_zero()) break;  // v in the nullspace; Jacobi handles it
        for (size_t i = 0; i < w.size(); ++i) v[i] = w[i] / nw;
        if (it > 0) {
            HPReal delta = abs(next - lambda);
            HPReal floor_abs = HPReal::pow2(-static_cast<long>(prec - 8), prec) * abs(next);
            bool settled = false;
            if (delta <= floor_abs) {
                settled = true;
            } else if (prev_delta > 0 && delta < prev_delta * rho_cap) {
                HPReal rho = delta / prev_delta;
                settled = delta * rho / (1L - rho) <= stop * abs(next);
            }
            quiet = settled ? quiet + 1 : 0;
            if (quiet >= 2) return next;
            prev_delta = delta;
        }
        lambda = next;
    }

    auto full = jacobi_eigenvalues(A, rel_tol);
    return full.eigenvalues.back();
}

inline HPReal lambda_max_sym(const IntSymMatrix& M, mpfr_prec_t prec) {
    return lambda_max_sym(M, prec, default_rel_tol(prec));
}

// Runs a precision-parameterized computation at doubling precision until two
// successive results agree to target_digits significant decimal digits, then
// returns the finer one.
template <class F>
HPReal adaptive_eval(F&& f, int target_digits, mpfr_prec_t start_prec = 0,
                     mpfr_prec_t max_prec = 1L << 16) {
    if (target_digits < 1) throw std::invalid_argument("adaptive_eval: target_digits must be >= 1");
    mpfr_prec_t p = std::max<mpfr_prec_t>(
        {start_prec, 64, static_cast<mpfr_prec_t>((target_digits + 8) * 3.33) + 1});
    HPReal prev = f(p);
    while (p <= max_prec / 2) {
        p *= 2;
        HPReal cur = f(p);
        if (common_significant_digits(cur, prev) >= target_digits) return cur;
        prev = std::move(cur);
    }
    throw ConvergenceError("adaptive_eval: precision ceiling reached without digit agreement",
                           static_cast<double>(target_digits));
}

// Exact determinant by fraction-free (Bareiss) elimination.
inline ExactInt bareiss_det(const IntSymMatrix& M) {
    const long n = M.size();
    std::vector<std::vector<ExactInt>> a(n, std::vector<ExactInt>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) a[i][j] = M.at(i + 1, j + 1);

    int sign = 1;
    ExactInt prev = 1;
    for (long k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            long piv = -1;
            for (long r = k + 1; r < n; ++r)
                if (a[r][k] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) return ExactInt(0);
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (long i = k + 1; i < n; ++i)
            for (long j = k + 1; j < n; ++j) {
                ExactInt num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : ExactInt(-a[n - 1][n - 1]);
}

}  // namespace extremal01
