#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace c235 {

// Exact rational scalar. mpq_class keeps values canonical (reduced,
// positive denominator, 0 stored as 0/1) as long as arithmetic goes
// through its operators; raw constructions are canonicalized here.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat_from_string(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + text + "'");
    r.canonicalize();
    if (r.get_den() <= 0) throw std::invalid_argument("bad rational literal: '" + text + "'");
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational rat_pow(const Rational& base, unsigned exp) {
    Rational out = 1;
    Rational b = base;
    unsigned e = exp;
    while (e) {
        if (e & 1u) out *= b;
        b *= b;
        e >>= 1u;
    }
    return out;
}

// Nearest rational with denominator 2^bits; exact in binary, used where
// float data has to re-enter exact computations.
inline Rational rat_round(double x, unsigned bits = 40) {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, bits);
    const double scaled = std::ldexp(x, static_cast<int>(bits));
    mpz_class num;
    mpz_set_d(num.get_mpz_t(), scaled >= 0 ? scaled + 0.5 : scaled - 0.5);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

using RationalVector = std::vector<Rational>;

}  // namespace c235
