#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace extremal01 {

// Exact arbitrary-size integer and rational arithmetic, backed by GMP.
// ExactRational values are always canonical: lowest terms, denominator > 0.
using ExactInt = mpz_class;
using ExactRational = mpq_class;

inline ExactRational make_rational(ExactInt num, ExactInt den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    ExactRational q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

inline ExactRational make_rational(long num, long den) {
    return make_rational(ExactInt(num), ExactInt(den));
}

inline ExactInt pow_exact(const ExactInt& base, unsigned long exp) {
    ExactInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

// (-1)^k without materializing a power.
inline int neg_one_pow(long k) { return (k % 2 == 0) ? 1 : -1; }

// Memoized Fibonacci and Lucas sequences.
//
//   F_0 = 0, F_1 = 1, F_k = F_{k-1} + F_{k-2}
//   L_0 = 2, L_1 = 1, L_k = L_{k-1} + L_{k-2}
//
// Extension appends only; existing entries are never rewritten. Returned
// references stay valid until the next extension.
class FibCache {
public:
    FibCache() : fib_{0, 1}, lucas_{2, 1} {}

    void extend(long k) {
        if (k < 0) return;
        while (static_cast<long>(fib_.size()) <= k)
            fib_.push_back(fib_[fib_.size() - 1] + fib_[fib_.size() - 2]);
        while (static_cast<long>(lucas_.size()) <= k)
            lucas_.push_back(lucas_[lucas_.size() - 1] + lucas_[lucas_.size() - 2]);
    }

    const ExactInt& fib(long k) {
        if (k < 0) throw std::invalid_argument("fib: negative index");
        extend(k);
        return fib_[static_cast<size_t>(k)];
    }

    const ExactInt& lucas(long k) {
        if (k < 0) throw std::invalid_argument("lucas: negative index");
        extend(k);
        return lucas_[static_cast<size_t>(k)];
    }

    long known_up_to() const { return static_cast<long>(fib_.size()) - 1; }

private:
    std::vector<ExactInt> fib_;
    std::vector<ExactInt> lucas_;
};

namespace detail {
inline FibCache& shared_fib_cache() {
    thread_local FibCache cache;
    return cache;
}
}  // namespace detail

// F_k for k >= 0. Thread-local cache; values are returned by copy so they
// survive later cache growth.
inline ExactInt fib(long k) { return detail::shared_fib_cache().fib(k); }

// L_k for k >= 0.
inline ExactInt lucas(long k) { return detail::shared_fib_cache().lucas(k); }

}  // namespace extremal01
