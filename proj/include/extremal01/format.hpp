#pragma once

#include <mpfr.h>

#include <stdexcept>
#include <string>

#include "extremal01/hpreal.hpp"

namespace extremal01 {

// Fixed-point rendering with the given number of decimals, round half to
// even at the cut.
inline std::string format_fixed(const HPReal& x, int decimals) {
    char* s = nullptr;
    if (mpfr_asprintf(&s, "%.*R*f", decimals, MPFR_RNDN, x.get()) < 0)
        throw std::runtime_error("format_fixed: mpfr_asprintf failed");
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

// Scientific rendering with sig_digits significant digits and a minimal
// exponent field: 8.16298e-7, not 8.16298e-07.
inline std::string format_sci(const HPReal& x, int sig_digits) {
    if (sig_digits < 1) throw std::invalid_argument("format_sci: need at least one digit");
    if (x.is_zero()) return "0e0";
    mpfr_exp_t exp = 0;
    char* raw = mpfr_get_str(nullptr, &exp, 10, static_cast<size_t>(sig_digits), x.get(), MPFR_RNDN);
    if (raw == nullptr) throw std::runtime_error("format_sci: mpfr_get_str failed");
    std::string digits(raw);
    mpfr_free_str(raw);

    std::string sign;
    if (!digits.empty() && digits[0] == '-') {
        sign = "-";
        digits.erase(0, 1);
    }
    std::string mant = digits.substr(0, 1);
    if (digits.size() > 1) mant += "." + digits.substr(1);
    return sign + mant + "e" + std::to_string(static_cast<long>(exp) - 1);
}

// Table rendering rule: fixed decimals for magnitudes at or above 1e-6,
// scientific with six significant digits below.
inline std::string format_auto(const HPReal& x, int decimals) {
    if (!x.is_zero() && abs(x) < HPReal::of(1e-6, 64)) return format_sci(x, 6);
    return format_fixed(x, decimals);
}

}  // namespace extremal01
