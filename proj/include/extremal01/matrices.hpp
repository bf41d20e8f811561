#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "extremal01/exact.hpp"

namespace extremal01 {

// Dense symmetric matrix with exact integer entries. Indices are 1-based,
// matching the conventions of the quantities it stores; storage is the
// packed lower triangle.
class IntSymMatrix {
public:
    explicit IntSymMatrix(long n) : n_(n), tri_(static_cast<size_t>(n) * (n + 1) / 2) {
        if (n < 1) throw std::invalid_argument("IntSymMatrix: dimension must be >= 1");
    }

    long size() const { return n_; }

    const ExactInt& at(long i, long j) const { return tri_[idx(i, j)]; }

    void set(long i, long j, ExactInt v) { tri_[idx(i, j)] = std::move(v); }

    ExactInt trace() const {
        ExactInt t = 0;
        for (long i = 1; i <= n_; ++i) t += at(i, i);
        return t;
    }

    // Sum of the squares of all n^2 entries.
    ExactInt sum_squared_entries() const {
        ExactInt s = 0;
        for (long i = 1; i <= n_; ++i)
            for (long j = 1; j <= i; ++j) {
                ExactInt sq = at(i, j) * at(i, j);
                s += (i == j) ? sq : 2 * sq;
            }
        return s;
    }

    bool operator==(const IntSymMatrix& o) const { return n_ == o.n_ && tri_ == o.tri_; }

private:
    size_t idx(long i, long j) const {
        if (i < 1 || j < 1 || i > n_ || j > n_)
            throw std::out_of_range("IntSymMatrix: index out of range");
        if (i < j) std::swap(i, j);
        return static_cast<size_t>(i - 1) * i / 2 + static_cast<size_t>(j - 1);
    }

    long n_;
    std::vector<ExactInt> tri_;
};

namespace detail {

// Running sums T(m, d) = sum_{k=1}^{m} F_{k+d} F_k, memoized per offset d.
// Every entry of Z_n is 1 + T or +-(F_d + T), so one table serves all
// dimensions at once.
class FibProductSums {
public:
    const ExactInt& value(long m, long d) {
        if (m < 0 || d < 0) throw std::invalid_argument("FibProductSums: negative index");
        if (static_cast<size_t>(d) >= rows_.size()) rows_.resize(d + 1);
        auto& row = rows_[static_cast<size_t>(d)];
        if (row.empty()) row.push_back(ExactInt(0));  // T(0, d) = 0
        shared_fib_cache().extend(m + d);
        while (static_cast<long>(row.size()) <= m) {
            long k = static_cast<long>(row.size());
            row.push_back(row.back() + fib(k + d) * fib(k));
        }
        return row[static_cast<size_t>(m)];
    }

private:
    std::vector<std::vector<ExactInt>> rows_;
};

inline FibProductSums& shared_fib_product_sums() {
    thread_local FibProductSums sums;
    return sums;
}

}  // namespace detail

// Z_n, defined elementwise by
//   (Z_n)_{i,i} = 1 + sum_{k=i+1}^n F_{k-i}^2
//   (Z_n)_{i,j} = (-1)^{|i-j|} (F_{|i-j|} + sum_{k=max(i,j)+1}^n F_{k-i} F_{k-j})
// The reciprocal of its largest eigenvalue is c_n.
inline IntSymMatrix build_Z(long n) {
    if (n < 1) throw std::invalid_argument("build_Z: dimension must be >= 1");
    auto& T = detail::shared_fib_product_sums();
    IntSymMatrix Z(n);
    for (long i = 1; i <= n; ++i)
        for (long j = i; j <= n; ++j) {
            long d = j - i;
            const ExactInt& tail = T.value(n - j, d);
            if (d == 0)
                Z.set(i, i, 1 + tail);
            else
                Z.set(i, j, neg_one_pow(d) * (fib(d) + tail));
        }
    return Z;
}

// The min matrix: (W_n)_{i,j} = min(i, j). Its largest eigenvalue is C_n.
inline IntSymMatrix build_W(long n) {
    if (n < 1) throw std::invalid_argument("build_W: dimension must be >= 1");
    IntSymMatrix W(n);
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= i; ++j) W.set(i, j, ExactInt(j));
    return W;
}

// Inverse of W_n: tridiagonal with diagonal (2, ..., 2, 1) and -1 off it.
inline IntSymMatrix build_B(long n) {
    if (n < 1) throw std::invalid_argument("build_B: dimension must be >= 1");
    IntSymMatrix B(n);
    for (long i = 1; i <= n; ++i) B.set(i, i, ExactInt(i == n ? 1 : 2));
    for (long i = 2; i <= n; ++i) B.set(i, i - 1, ExactInt(-1));
    return B;
}

// B_n with the last diagonal entry bumped back to 2: the tridiagonal
// Toeplitz matrix whose spectrum is 2 - 2 cos(k pi / (n+1)).
inline IntSymMatrix build_A(long n) {
    if (n < 1) throw std::invalid_argument("build_A: dimension must be >= 1");
    IntSymMatrix A = build_B(n);
    A.set(n, n, ExactInt(2));
    return A;
}

// Exact check that L * R is the identity, without materializing the product.
inline bool product_is_identity(const IntSymMatrix& L, const IntSymMatrix& R) {
    if (L.size() != R.size()) return false;
    long n = L.size();
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= n; ++j) {
            ExactInt s = 0;
            for (long k = 1; k <= n; ++k) s += L.at(i, k) * R.at(k, j);
            if (s != (i == j ? 1 : 0)) return false;
        }
    return true;
}

// ||Z_n||_F^2 by summing squared entries.
inline ExactInt frobenius_sq_direct(long n) {
    if (n < 1) throw std::invalid_argument("frobenius_sq_direct: dimension must be >= 1");
    return build_Z(n).sum_squared_entries();
}

// One step of the corner decomposition Z_n = [[a_n, b_n^T], [b_n, Z_{n-1}]]:
//   ||Z_n||_F^2 = ||Z_{n-1}||_F^2 + a_n^2 + 2 ||b_n||^2,   ||Z_1||_F^2 = 1.
struct FrobDecomposition {
    long n = 1;
    ExactInt a_n = 1;        // (Z_n)_{1,1} = 1 + F_n F_{n-1}
    ExactInt b_norm_sq = 0;  // squared norm of column 1 below the corner
    ExactInt frob_sq = 1;
};

// Decomposition terms taken from column 1 of the actual matrix, with the
// squared norm accumulated through the recurrence.
inline FrobDecomposition frob_decomposition(long n) {
    if (n < 1) throw std::invalid_argument("frob_decomposition: dimension must be >= 1");
    auto& T = detail::shared_fib_product_sums();
    FrobDecomposition d;
    for (long m = 2; m <= n; ++m) {
        // Column 1 of Z_m: corner 1 + T(m-1, 0), below it
        // (Z_m)_{j,1} = (-1)^{j-1} (F_{j-1} + T(m-j, j-1)) for j = 2..m.
        d.n = m;
        d.a_n = 1 + T.value(m - 1, 0);
        d.b_norm_sq = 0;
        for (long j = 2; j <= m; ++j) {
            ExactInt e = fib(j - 1) + T.value(m - j, j - 1);
            d.b_norm_sq += e * e;
        }
        d.frob_sq += d.a_n * d.a_n + 2 * d.b_norm_sq;
    }
    return d;
}

// ||Z_n||_F^2 in closed form:
//   L_{4n}/25 + (3 + (-1)^n)/25 L_{2n} + (2/5) n F_{2n} + (13 (-1)^n - 33)/50 + n.
// Always reduces to an integer.
inline ExactRational frobenius_sq_closed_form(long n) {
    if (n < 1) throw std::invalid_argument("frobenius_sq_closed_form: dimension must be >= 1");
    ExactRational v = make_rational(ExactInt(lucas(4 * n)), ExactInt(25));
    v += make_rational(3 + neg_one_pow(n), 25) * ExactRational(lucas(2 * n));
    v += make_rational(2, 5) * ExactRational(n * fib(2 * n));
    v += make_rational(13 * neg_one_pow(n) - 33, 50);
    v += n;
    return v;
}

// Plain-text matrix format: first line n, then n rows of n integers.
inline void write_matrix(std::ostream& os, const IntSymMatrix& M) {
    long n = M.size();
    os << n << '\n';
    for (long i = 1; i <= n; ++i) {
        for (long j = 1; j <= n; ++j) {
            if (j > 1) os << ' ';
            os << M.at(i, j).get_str();
        }
        os << '\n';
    }
}

inline IntSymMatrix read_matrix(std::istream& is) {
    long n = 0;
    if (!(is >> n) || n < 1) throw std::runtime_error("read_matrix: bad dimension line");
    IntSymMatrix M(n);
    std::vector<std::vector<ExactInt>> rows(n, std::vector<ExactInt>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            std::string tok;
            if (!(is >> tok)) throw std::runtime_error("read_matrix: truncated input");
            rows[i][j] = ExactInt(tok);
        }
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= i; ++j) {
            if (rows[i - 1][j - 1] != rows[j - 1][i - 1])
                throw std::runtime_error("read_matrix: matrix is not symmetric");
            M.set(i, j, rows[i - 1][j - 1]);
        }
    return M;
}

}  // namespace extremal01
