#pragma once

// Explicit order-bound functions, exact where possible and in log space
// where the magnitudes exceed any fixed-width integer: c2, c3, g, the
// alternating bound, the exceptional-case bound h, the exponent-variant
// bound, the two numeric inequality checks, and the final assembled f.

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "ppbound/numtheory.hpp"

#include <compare>
#include <optional>

namespace ppbound {

// 50 significant decimal digits; every log-space contract here needs >= 30.
using Real = boost::multiprecision::cpp_dec_float_50;

/// A possibly astronomically large positive quantity held as its natural
/// logarithm, with the exact integer kept when representable.
struct LogMagnitude {
    Real ln_value;
    std::optional<cpp_int> exact;

    static LogMagnitude from_exact(cpp_int v) {
        if (v <= 0) throw std::invalid_argument("LogMagnitude: value must be positive");
        LogMagnitude m;
        m.ln_value = log(Real(v));
        m.exact = std::move(v);
        return m;
    }
    static LogMagnitude from_ln(Real ln) {
        LogMagnitude m;
        m.ln_value = std::move(ln);
        return m;
    }

    // exact comparison when both sides carry exact values, else by ln
    friend bool operator<(const LogMagnitude& a, const LogMagnitude& b) {
        if (a.exact && b.exact) return *a.exact < *b.exact;
        return a.ln_value < b.ln_value;
    }
    friend bool operator==(const LogMagnitude& a, const LogMagnitude& b) {
        if (a.exact && b.exact) return *a.exact == *b.exact;
        return a.ln_value == b.ln_value;
    }
    friend bool operator<=(const LogMagnitude& a, const LogMagnitude& b) {
        return a < b || a == b;
    }
    friend bool operator>(const LogMagnitude& a, const LogMagnitude& b) { return b < a; }
    friend bool operator>=(const LogMagnitude& a, const LogMagnitude& b) { return b <= a; }
};

inline cpp_int factorial(unsigned n) {
    cpp_int r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

/// c2(n) = (2n)! * n!
inline cpp_int c2(unsigned n) {
    if (n == 0) throw std::invalid_argument("c2: n must be positive");
    return factorial(2 * n) * factorial(n);
}

/// log of c3(n) = 2 * c2(n)^(2 sqrt(c2(n))); exact form irrational, so ln only.
inline LogMagnitude c3_log(unsigned n) {
    Real c(c2(n));
    return LogMagnitude::from_ln(log(Real(2)) + 2 * sqrt(c) * log(c));
}

/// Classical-family bound in log space: n^2 * 2 sqrt(c2(n)) * log(2 c2(n)).
inline LogMagnitude g_log(unsigned n) {
    if (n == 0) throw std::invalid_argument("g_log: n must be positive");
    Real c(c2(n));
    return LogMagnitude::from_ln(Real(n) * n * 2 * sqrt(c) * log(2 * c));
}

/// Alternating-group bound: (3n+2)!/2, exact.
inline cpp_int f_alt(unsigned n) {
    if (n == 0) throw std::invalid_argument("f_alt: n must be positive");
    return factorial(3 * n + 2) / 2;
}

/// Exponent-variant alternating bound: (3 mexp^2)!/2, exact.
inline cpp_int alt_exp_bound(unsigned mexp) {
    if (mexp == 0) throw std::invalid_argument("alt_exp_bound: mexp must be positive");
    return factorial(3 * mexp * mexp) / 2;
}

/// Exceptional-groups bound in log space. Each case chain bounds q, and
/// every exceptional group satisfies |T| <= q^248, so log|T| <= 248 log(q_max).
/// Case i:  q/a^{3/2} <= 480 n sqrt(360 n!)  and q/a^{3/2} >= C q^{1/4}
///          with C = (log2 / 2)^{3/2}.
/// Case ii: (q-1)/a^{3/2} <= 64 n sqrt(4 n!), same elimination, +1 for q-1 -> q.
/// Case iii: q <= 2 sqrt(12 a n!) (24 a n), i.e. q/a^{3/2} <= 48 sqrt(12) n sqrt(n!).
inline LogMagnitude h_exceptional_log(unsigned n) {
    if (n == 0) throw std::invalid_argument("h_exceptional_log: n must be positive");
    Real nf(factorial(n));
    Real lnC = Real(1.5) * log(log(Real(2)) / 2);

    Real b1 = log(Real(480) * n) + log(Real(360) * nf) / 2;
    Real logq1 = 4 * (b1 - lnC);

    Real b2 = log(Real(64) * n) + log(Real(4) * nf) / 2;
    Real logq2 = 4 * (b2 - lnC);
    logq2 = logq2 + log1p(exp(-logq2));  // q <= (B2/C)^4 + 1

    Real b3 = log(Real(48) * n * sqrt(Real(12))) + log(nf) / 2;
    Real logq3 = 4 * (b3 - lnC);

    Real m = std::max({logq1, logq2, logq3});
    return LogMagnitude::from_ln(248 * m);
}

/// Order of the Monster sporadic group, exact.
inline cpp_int monster_order() {
    static const std::pair<unsigned, unsigned> fac[] = {
        {2, 46}, {3, 20}, {5, 9}, {7, 6}, {11, 2}, {13, 3}, {17, 1}, {19, 1},
        {23, 1}, {29, 1}, {31, 1}, {41, 1}, {47, 1}, {59, 1}, {71, 1}};
    cpp_int m = 1;
    for (auto [p, e] : fac)
        for (unsigned i = 0; i < e; ++i) m *= p;
    return m;
}

/// f(n) = max{ (3n+2)!/2, g(n), h(n) } + |M|, assembled in log space via
/// log(x+y) = log x + log1p(e^{log y - log x}).
inline LogMagnitude f_final_log(unsigned n) {
    if (n == 0) throw std::invalid_argument("f_final_log: n must be positive");
    Real branches[] = {log(Real(f_alt(n))), g_log(n).ln_value,
                       h_exceptional_log(n).ln_value};
    Real m = std::max({branches[0], branches[1], branches[2]});
    Real lnM = log(Real(monster_order()));
    Real hi = std::max(m, lnM), lo = std::min(m, lnM);
    return LogMagnitude::from_ln(hi + log1p(exp(lo - hi)));
}

/// a^{1/4}/4 < sqrt(a)/log(a) for a >= 1 (a = 1 is the limit case: true).
inline bool check_lemma24(const Real& a) {
    if (a < 1) throw std::invalid_argument("check_lemma24: a must be >= 1");
    if (a == 1) return true;
    return pow(a, Real(0.25)) / 4 < sqrt(a) / log(a);
}

/// Margin sqrt(a)/log(a) - a^{1/4}/4 (unbounded at a = 1).
inline Real lemma24_margin(const Real& a) {
    return sqrt(a) / log(a) - pow(a, Real(0.25)) / 4;
}

/// log(2) sqrt(q) / 2 <= q / a for q = p^a.
inline bool check_lemma25(std::uint64_t p, unsigned a) {
    if (p < 2 || a < 1) throw std::invalid_argument("check_lemma25: need p >= 2, a >= 1");
    Real q(pow_int(p, a));
    return log(Real(2)) * sqrt(q) / 2 <= q / a;
}

inline Real lemma25_margin(std::uint64_t p, unsigned a) {
    Real q(pow_int(p, a));
    return q / a - log(Real(2)) * sqrt(q) / 2;
}

}  // namespace ppbound
