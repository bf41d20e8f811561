#pragma once

#include <mpfr.h>

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

#include "extremal01/exact.hpp"

namespace extremal01 {

// Binary floating-point value with explicit precision in bits. Arithmetic is
// correctly rounded (round to nearest, ties to even) at the precision of the
// result, which is the larger of the operand precisions; nothing narrows
// silently.
class HPReal {
public:
    explicit HPReal(mpfr_prec_t prec) { mpfr_init2(x_, check_prec(prec)); }

    HPReal(const HPReal& o) {
        mpfr_init2(x_, mpfr_get_prec(o.x_));
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }

    HPReal(HPReal&& o) noexcept {
        mpfr_init2(x_, MPFR_PREC_MIN);
        mpfr_swap(x_, o.x_);
    }

    HPReal& operator=(const HPReal& o) {
        if (this != &o) {
            mpfr_set_prec(x_, mpfr_get_prec(o.x_));
            mpfr_set(x_, o.x_, MPFR_RNDN);
        }
        return *this;
    }

    HPReal& operator=(HPReal&& o) noexcept {
        mpfr_swap(x_, o.x_);
        return *this;
    }

    ~HPReal() { mpfr_clear(x_); }

    static HPReal of(long v, mpfr_prec_t prec) {
        HPReal r(prec);
        mpfr_set_si(r.x_, v, MPFR_RNDN);
        return r;
    }

    static HPReal of(double v, mpfr_prec_t prec) {
        HPReal r(prec);
        mpfr_set_d(r.x_, v, MPFR_RNDN);
        return r;
    }

    static HPReal of(const ExactInt& v, mpfr_prec_t prec) {
        HPReal r(prec);
        mpfr_set_z(r.x_, v.get_mpz_t(), MPFR_RNDN);
        return r;
    }

    static HPReal of(const ExactRational& v, mpfr_prec_t prec) {
        HPReal r(prec);
        mpfr_set_q(r.x_, v.get_mpq_t(), MPFR_RNDN);
        return r;
    }

    static HPReal pi(mpfr_prec_t prec) {
        HPReal r(prec);
        mpfr_const_pi(r.x_, MPFR_RNDN);
        return r;
    }

    // Golden ratio (1 + sqrt 5) / 2.
    static HPReal phi(mpfr_prec_t prec) {
        HPReal r(prec);
        mpfr_sqrt_ui(r.x_, 5, MPFR_RNDN);
        mpfr_add_ui(r.x_, r.x_, 1, MPFR_RNDN);
        mpfr_div_ui(r.x_, r.x_, 2, MPFR_RNDN);
        return r;
    }

    // Exact power of two, e.g. a tolerance 2^-200.
    static HPReal pow2(long e, mpfr_prec_t prec) {
        HPReal r(prec);
        mpfr_set_si_2exp(r.x_, 1, e, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t precision() const { return mpfr_get_prec(x_); }

    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

    bool is_nan() const { return mpfr_nan_p(x_) != 0; }
    bool is_zero() const { return mpfr_zero_p(x_) != 0; }
    int sign() const { return mpfr_sgn(x_); }

    std::string to_string(int sig_digits = 17) const {
        char* s = nullptr;
        if (mpfr_asprintf(&s, "%.*Rg", sig_digits, x_) < 0)
            throw std::runtime_error("HPReal::to_string: mpfr_asprintf failed");
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    mpfr_ptr get() { return x_; }
    mpfr_srcptr get() const { return x_; }

    // Raises the stored precision, preserving the value exactly.
    void widen_to(mpfr_prec_t prec) {
        if (prec > precision()) mpfr_prec_round(x_, prec, MPFR_RNDN);
    }

    // Copy of this value rounded to the given precision. Used to return a
    // result at a caller's precision after computing with guard bits.
    HPReal rounded_to(mpfr_prec_t prec) const {
        HPReal r(prec);
        mpfr_set(r.x_, x_, MPFR_RNDN);
        return r;
    }

    friend HPReal operator+(const HPReal& a, const HPReal& b) {
        HPReal r(join(a, b));
        mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend HPReal operator-(const HPReal& a, const HPReal& b) {
        HPReal r(join(a, b));
        mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend HPReal operator*(const HPReal& a, const HPReal& b) {
        HPReal r(join(a, b));
        mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend HPReal operator/(const HPReal& a, const HPReal& b) {
        HPReal r(join(a, b));
        mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend HPReal operator-(const HPReal& a) {
        HPReal r(a.precision());
        mpfr_neg(r.x_, a.x_, MPFR_RNDN);
        return r;
    }

    friend HPReal operator+(const HPReal& a, long b) {
        HPReal r(a.precision());
        mpfr_add_si(r.x_, a.x_, b, MPFR_RNDN);
        return r;
    }
    friend HPReal operator-(const HPReal& a, long b) {
        HPReal r(a.precision());
        mpfr_sub_si(r.x_, a.x_, b, MPFR_RNDN);
        return r;
    }
    friend HPReal operator*(const HPReal& a, long b) {
        HPReal r(a.precision());
        mpfr_mul_si(r.x_, a.x_, b, MPFR_RNDN);
        return r;
    }
    friend HPReal operator/(const HPReal& a, long b) {
        HPReal r(a.precision());
        mpfr_div_si(r.x_, a.x_, b, MPFR_RNDN);
        return r;
    }
    friend HPReal operator*(long a, const HPReal& b) { return b * a; }
    friend HPReal operator+(long a, const HPReal& b) { return b + a; }
    friend HPReal operator-(long a, const HPReal& b) {
        HPReal r(b.precision());
        mpfr_si_sub(r.x_, a, b.x_, MPFR_RNDN);
        return r;
    }
    friend HPReal operator/(long a, const HPReal& b) {
        HPReal r(b.precision());
        mpfr_si_div(r.x_, a, b.x_, MPFR_RNDN);
        return r;
    }

    HPReal& operator+=(const HPReal& b) {
        widen_to(b.precision());
        mpfr_add(x_, x_, b.x_, MPFR_RNDN);
        return *this;
    }
    HPReal& operator-=(const HPReal& b) {
        widen_to(b.precision());
        mpfr_sub(x_, x_, b.x_, MPFR_RNDN);
        return *this;
    }
    HPReal& operator*=(const HPReal& b) {
        widen_to(b.precision());
        mpfr_mul(x_, x_, b.x_, MPFR_RNDN);
        return *this;
    }
    HPReal& operator/=(const HPReal& b) {
        widen_to(b.precision());
        mpfr_div(x_, x_, b.x_, MPFR_RNDN);
        return *this;
    }

    friend bool operator<(const HPReal& a, const HPReal& b) { return mpfr_less_p(a.x_, b.x_) != 0; }
    friend bool operator>(const HPReal& a, const HPReal& b) { return mpfr_greater_p(a.x_, b.x_) != 0; }
    friend bool operator<=(const HPReal& a, const HPReal& b) { return mpfr_lessequal_p(a.x_, b.x_) != 0; }
    friend bool operator>=(const HPReal& a, const HPReal& b) { return mpfr_greaterequal_p(a.x_, b.x_) != 0; }
    friend bool operator==(const HPReal& a, const HPReal& b) { return mpfr_equal_p(a.x_, b.x_) != 0; }
    friend bool operator!=(const HPReal& a, const HPReal& b) { return !(a == b); }

    friend bool operator<(const HPReal& a, long b) { return mpfr_cmp_si(a.x_, b) < 0; }
    friend bool operator>(const HPReal& a, long b) { return mpfr_cmp_si(a.x_, b) > 0; }
    friend bool operator<=(const HPReal& a, long b) { return mpfr_cmp_si(a.x_, b) <= 0; }
    friend bool operator>=(const HPReal& a, long b) { return mpfr_cmp_si(a.x_, b) >= 0; }
    friend bool operator==(const HPReal& a, long b) { return !a.is_nan() && mpfr_cmp_si(a.x_, b) == 0; }
    friend bool operator!=(const HPReal& a, long b) { return !(a == b); }

    friend HPReal sqrt(const HPReal& a) {
        HPReal r(a.precision());
        mpfr_sqrt(r.x_, a.x_, MPFR_RNDN);
        return r;
    }
    friend HPReal abs(const HPReal& a) {
        HPReal r(a.precision());
        mpfr_abs(r.x_, a.x_, MPFR_RNDN);
        return r;
    }
    friend HPReal sin(const HPReal& a) {
        HPReal r(a.precision());
        mpfr_sin(r.x_, a.x_, MPFR_RNDN);
        return r;
    }
    friend HPReal cos(const HPReal& a) {
        HPReal r(a.precision());
        mpfr_cos(r.x_, a.x_, MPFR_RNDN);
        return r;
    }
    friend HPReal csc(const HPReal& a) {
        HPReal r(a.precision());
        mpfr_csc(r.x_, a.x_, MPFR_RNDN);
        return r;
    }
    friend HPReal acos(const HPReal& a) {
        HPReal r(a.precision());
        mpfr_acos(r.x_, a.x_, MPFR_RNDN);
        return r;
    }
    friend HPReal log(const HPReal& a) {
        HPReal r(a.precision());
        mpfr_log(r.x_, a.x_, MPFR_RNDN);
        return r;
    }
    friend HPReal log10(const HPReal& a) {
        HPReal r(a.precision());
        mpfr_log10(r.x_, a.x_, MPFR_RNDN);
        return r;
    }
    friend HPReal exp(const HPReal& a) {
        HPReal r(a.precision());
        mpfr_exp(r.x_, a.x_, MPFR_RNDN);
        return r;
    }
    // a^e for integer e, correctly rounded.
    friend HPReal pow_si(const HPReal& a, long e) {
        HPReal r(a.precision());
        mpfr_pow_si(r.x_, a.x_, e, MPFR_RNDN);
        return r;
    }
    friend HPReal pow(const HPReal& a, const HPReal& b) {
        HPReal r(join(a, b));
        mpfr_pow(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend HPReal floor(const HPReal& a) {
        HPReal r(a.precision());
        mpfr_floor(r.x_, a.x_);
        return r;
    }

    friend long floor_to_long(const HPReal& a) {
        HPReal f = floor(a);
        return mpfr_get_si(f.x_, MPFR_RNDZ);
    }

private:
    static mpfr_prec_t check_prec(mpfr_prec_t prec) {
        if (prec < MPFR_PREC_MIN) throw std::invalid_argument("HPReal: precision too small");
        return prec;
    }
    static mpfr_prec_t join(const HPReal& a, const HPReal& b) {
        return std::max(a.precision(), b.precision());
    }

    mpfr_t x_;
};

inline HPReal zero_like(const HPReal& x) { return HPReal::of(0L, x.precision()); }
inline HPReal one_like(const HPReal& x) { return HPReal::of(1L, x.precision()); }
inline double zero_like(double) { return 0.0; }
inline double one_like(double) { return 1.0; }

// Number of significant decimal digits shared by a and b, measured relative
// to a: floor(-log10(|a - b| / |a|)). Exact equality yields LONG_MAX; a
// disagreement at or above the leading digit yields a value <= 0.
inline long common_significant_digits(const HPReal& a, const HPReal& b) {
    if (a == b) return LONG_MAX;
    HPReal diff = abs(a - b);
    if (a.is_zero()) return 0;
    HPReal rel = diff / abs(a);
    return floor_to_long(-log10(rel));
}

}  // namespace extremal01
