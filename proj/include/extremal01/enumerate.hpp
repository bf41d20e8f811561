#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "extremal01/eigen.hpp"
#include "extremal01/hpreal.hpp"
#include "extremal01/matrices.hpp"

namespace extremal01 {

// Nonsingular lower-triangular (0,1)-matrix, bit-packed. The unit diagonal
// is implicit; the strictly-lower entries live in one machine word, lowest
// bit at (2,1), proceeding row-major: (2,1), (3,1), (3,2), (4,1), ...
// Words 0 .. 2^{n(n-1)/2}-1 enumerate K_n exactly once.
class TriBitMatrix {
public:
    TriBitMatrix(int n, std::uint64_t word) : n_(n), word_(word) {
        if (n < 1 || n > 11) throw std::invalid_argument("TriBitMatrix: dimension out of range");
        if (word >= (std::uint64_t{1} << strict_lower_bits(n)))
            throw std::invalid_argument("TriBitMatrix: word out of range");
    }

    int size() const { return n_; }
    std::uint64_t word() const { return word_; }

    static int strict_lower_bits(int n) { return n * (n - 1) / 2; }
    static std::uint64_t count(int n) { return std::uint64_t{1} << strict_lower_bits(n); }

    static TriBitMatrix all_ones(int n) { return TriBitMatrix(n, count(n) - 1); }

    // 1-based entry accessor over the full matrix.
    bool at(long i, long j) const {
        if (i < 1 || j < 1 || i > n_ || j > n_) throw std::out_of_range("TriBitMatrix::at");
        if (i == j) return true;
        if (i < j) return false;
        return (word_ >> bit_index(i, j)) & 1;
    }

    // Row i as a column bitmask (bit j-1 set iff entry (i,j) is 1).
    std::uint32_t row_mask(long i) const {
        std::uint32_t m = std::uint32_t{1} << (i - 1);
        for (long j = 1; j < i; ++j)
            if ((word_ >> bit_index(i, j)) & 1) m |= std::uint32_t{1} << (j - 1);
        return m;
    }

    // X X^T exactly: Gram entry (i,j) counts the shared ones of rows i, j.
    IntSymMatrix gram() const {
        IntSymMatrix G(n_);
        std::vector<std::uint32_t> rows(n_);
        for (long i = 1; i <= n_; ++i) rows[i - 1] = row_mask(i);
        for (long i = 1; i <= n_; ++i)
            for (long j = 1; j <= i; ++j)
                G.set(i, j, ExactInt(std::popcount(rows[i - 1] & rows[j - 1])));
        return G;
    }

private:
    static int bit_index(long i, long j) {
        return static_cast<int>((i - 2) * (i - 1) / 2 + (j - 1));
    }

    int n_;
    std::uint64_t word_;
};

struct ScanConfig {
    int cap = 7;                  // refuse larger n unless overridden
    bool cap_override = false;    // permits up to n = 9 at acknowledged cost
    unsigned threads = 0;         // 0 = hardware concurrency
    mpfr_prec_t verify_prec = 256;
    double band = 1e-9;           // relative width of the re-verification band
};

namespace detail {

inline void check_enumeration_size(int n, const ScanConfig& cfg) {
    if (n < 1) throw std::invalid_argument("enumeration: n must be >= 1");
    const int hard_cap = cfg.cap_override ? 9 : cfg.cap;
    if (n > hard_cap)
        throw ResourceLimitError("enumeration: n exceeds the configured cap of " +
                                 std::to_string(hard_cap) +
                                 (cfg.cap_override ? "" : " (pass the override to go higher)"));
}

}  // namespace detail

// Iterable over all of K_n in word order.
class KnRange {
public:
    explicit KnRange(int n, const ScanConfig& cfg = {}) : n_(n) {
        detail::check_enumeration_size(n, cfg);
        total_ = TriBitMatrix::count(n);
    }

    class iterator {
    public:
        iterator(int n, std::uint64_t w) : n_(n), w_(w) {}
        TriBitMatrix operator*() const { return TriBitMatrix(n_, w_); }
        iterator& operator++() {
            ++w_;
            return *this;
        }
        bool operator!=(const iterator& o) const { return w_ != o.w_; }
        bool operator==(const iterator& o) const { return w_ == o.w_; }

    private:
        int n_;
        std::uint64_t w_;
    };

    iterator begin() const { return iterator(n_, 0); }
    iterator end() const { return iterator(n_, total_); }
    std::uint64_t size() const { return total_; }

private:
    int n_;
    std::uint64_t total_;
};

inline KnRange enumerate_Kn(int n, const ScanConfig& cfg = {}) { return KnRange(n, cfg); }

struct ExtremalRecord {
    int n;
    HPReal min_value;   // smallest Gram eigenvalue over K_n, re-verified
    HPReal max_value;   // largest Gram eigenvalue over K_n, re-verified
    TriBitMatrix argmin;
    TriBitMatrix argmax;
    std::uint64_t count_enumerated = 0;
    std::uint64_t reverified_candidates = 0;
};

namespace detail {

struct PartialScan {
    double min_value = 0;
    double max_value = 0;
    std::uint64_t argmin_word = 0;
    std::uint64_t argmax_word = 0;
    std::uint64_t count = 0;
};

// Min/max merge; earlier words win ties, so any chunking yields the same
// result once partials are folded in chunk order.
inline PartialScan merge(const PartialScan& a, const PartialScan& b) {
    if (a.count == 0) return b;
    if (b.count == 0) return a;
    PartialScan m = a;
    m.count += b.count;
    if (b.min_value < m.min_value ||
        (b.min_value == m.min_value && b.argmin_word < m.argmin_word)) {
        m.min_value = b.min_value;
        m.argmin_word = b.argmin_word;
    }
    if (b.max_value > m.max_value ||
        (b.max_value == m.max_value && b.argmax_word < m.argmax_word)) {
        m.max_value = b.max_value;
        m.argmax_word = b.argmax_word;
    }
    return m;
}

inline void gram_double(int n, std::uint64_t word, DenseSym<double>& G,
                        std::vector<std::uint32_t>& rows) {
    TriBitMatrix X(n, word);
    for (long i = 1; i <= n; ++i) rows[i - 1] = X.row_mask(i);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j <= i; ++j)
            G.at(i, j) = G.at(j, i) = static_cast<double>(std::popcount(rows[i] & rows[j]));
}

inline PartialScan scan_chunk(int n, std::uint64_t lo, std::uint64_t hi) {
    PartialScan p;
    DenseSym<double> G(n, 0.0);
    std::vector<std::uint32_t> rows(n);
    for (std::uint64_t w = lo; w < hi; ++w) {
        gram_double(n, w, G, rows);
        auto eig = jacobi_eigenvalues(G, 1e-13, 60);
        const double mn = eig.eigenvalues.front();
        const double mx = eig.eigenvalues.back();
        if (p.count == 0 || mn < p.min_value) {
            p.min_value = mn;
            p.argmin_word = w;
        }
        if (p.count == 0 || mx > p.max_value) {
            p.max_value = mx;
            p.argmax_word = w;
        }
        ++p.count;
    }
    return p;
}

inline std::vector<std::pair<std::uint64_t, std::uint64_t>> chunk_ranges(std::uint64_t total,
                                                                         unsigned threads) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::uint64_t per = std::max<std::uint64_t>(1, total / threads);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t lo = 0; lo < total; lo += per) out.emplace_back(lo, std::min(lo + per, total));
    return out;
}

}  // namespace detail

// Exhaustive scan of K_n: a hardware-precision sweep locates the extremal
// Gram eigenvalues, then every candidate within a small relative band of the
// extremes is re-solved at high precision before the winners are declared.
// The Jacobi kernel is the same at both precisions.
inline ExtremalRecord gram_extremal_scan(int n, const ScanConfig& cfg = {}) {
    detail::check_enumeration_size(n, cfg);
    const std::uint64_t total = TriBitMatrix::count(n);

    // Phase 1: hardware sweep, chunked across workers.
    auto ranges = detail::chunk_ranges(total, cfg.threads);
    std::vector<detail::PartialScan> partials(ranges.size());
    {
        std::vector<std::thread> pool;
        for (size_t c = 0; c < ranges.size(); ++c)
            pool.emplace_back([&, c] { partials[c] = detail::scan_chunk(n, ranges[c].first, ranges[c].second); });
        for (auto& t : pool) t.join();
    }
    detail::PartialScan sweep;
    for (const auto& p : partials) sweep = detail::merge(sweep, p);

    // Phase 2: gather near-extremal candidates. Chunk outputs are
    // concatenated in chunk order, so the candidate list stays word-ordered.
    const double min_cut = sweep.min_value * (1 + cfg.band);
    const double max_cut = sweep.max_value * (1 - cfg.band);
    std::vector<std::uint64_t> min_cands, max_cands;
    {
        std::vector<std::vector<std::uint64_t>> mins(ranges.size()), maxs(ranges.size());
        std::vector<std::thread> pool;
        for (size_t c = 0; c < ranges.size(); ++c)
            pool.emplace_back([&, c] {
                DenseSym<double> G(n, 0.0);
                std::vector<std::uint32_t> rows(n);
                for (std::uint64_t w = ranges[c].first; w < ranges[c].second; ++w) {
                    detail::gram_double(n, w, G, rows);
                    auto eig = jacobi_eigenvalues(G, 1e-13, 60);
                    if (eig.eigenvalues.front() <= min_cut) mins[c].push_back(w);
                    if (eig.eigenvalues.back() >= max_cut) maxs[c].push_back(w);
                }
            });
        for (auto& t : pool) t.join();
        for (size_t c = 0; c < ranges.size(); ++c) {
            min_cands.insert(min_cands.end(), mins[c].begin(), mins[c].end());
            max_cands.insert(max_cands.end(), maxs[c].begin(), maxs[c].end());
        }
    }

    // Phase 3: high-precision re-verification of the candidates.
    const HPReal tol = default_rel_tol(cfg.verify_prec);
    HPReal best_min(cfg.verify_prec), best_max(cfg.verify_prec);
    std::uint64_t argmin_w = 0, argmax_w = 0;
    bool have_min = false, have_max = false;
    for (std::uint64_t w : min_cands) {
        auto eig = eigenvalues_sym(TriBitMatrix(n, w).gram(), cfg.verify_prec, tol);
        if (!have_min || eig.eigenvalues.front() < best_min) {
            best_min = eig.eigenvalues.front();
            argmin_w = w;
            have_min = true;
        }
    }
    for (std::uint64_t w : max_cands) {
        auto eig = eigenvalues_sym(TriBitMatrix(n, w).gram(), cfg.verify_prec, tol);
        if (!have_max || eig.eigenvalues.back() > best_max) {
            best_max = eig.eigenvalues.back();
            argmax_w = w;
            have_max = true;
        }
    }

    return ExtremalRecord{n,
                          best_min,
                          best_max,
                          TriBitMatrix(n, argmin_w),
                          TriBitMatrix(n, argmax_w),
                          total,
                          min_cands.size() + max_cands.size()};
}

// Internal consistency of the singular-value view: the extremal Gram
// eigenvalues must equal the squares of the extremal singular values.
inline bool singular_value_relation_check(int n, const ScanConfig& cfg = {}) {
    ExtremalRecord rec = gram_extremal_scan(n, cfg);
    HPReal sigma_min = sqrt(rec.min_value);
    HPReal sigma_max = sqrt(rec.max_value);
    HPReal rel_lo = abs(sigma_min * sigma_min / rec.min_value - 1L);
    HPReal rel_hi = abs(sigma_max * sigma_max / rec.max_value - 1L);
    HPReal lim = HPReal::of(1e-12, cfg.verify_prec);
    return rel_lo < lim && rel_hi < lim;
}

}  // namespace extremal01
