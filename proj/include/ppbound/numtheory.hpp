#pragma once

// Exact integer arithmetic: factorization, s-parts, Euler phi, divisor
// counts, the strengthened primitive-prime-divisor sets S(m) with
// Prod(m,q), and prime sieving / interval-prime search.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ppbound {

using boost::multiprecision::cpp_int;

// factorize() input cap. Covers q^m - 1 for q <= 64, m <= 22 (132 bits).
inline const cpp_int kFactorizeCap = cpp_int(1) << 192;

// Hard ceiling for the prime sieve; prime_pi rejects larger arguments.
inline constexpr std::uint64_t kSieveCeiling = 100'000'000;

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, b, m);
        b = mulmod_u64(b, b, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit inputs (this base set is proven
// sufficient well beyond 2^64).
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

inline cpp_int powmod_big(cpp_int b, cpp_int e, const cpp_int& m) {
    cpp_int r = 1;
    b %= m;
    while (e > 0) {
        if ((e & 1) != 0) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

inline bool miller_rabin_big(const cpp_int& n, const cpp_int& a) {
    cpp_int d = n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    cpp_int x = powmod_big(a % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < r; ++i) {
        x = x * x % n;
        if (x == n - 1) return true;
    }
    return false;
}

// Strong Lucas test with Selfridge parameters (the Lucas half of BPSW).
inline bool strong_lucas_big(const cpp_int& n) {
    using boost::multiprecision::gcd;
    auto jacobi = [](cpp_int a, cpp_int m) {
        a %= m;
        if (a < 0) a += m;
        int t = 1;
        while (a != 0) {
            while ((a & 1) == 0) {
                a >>= 1;
                cpp_int r = m % 8;
                if (r == 3 || r == 5) t = -t;
            }
            std::swap(a, m);
            if ((a % 4) == 3 && (m % 4) == 3) t = -t;
            a %= m;
        }
        return m == 1 ? t : 0;
    };
    // find D = 5, -7, 9, ... with jacobi(D, n) == -1
    cpp_int d = 5;
    while (true) {
        int j = jacobi(d, n);
        if (j == 0) return n == abs(d);
        if (j == -1) break;
        d = d > 0 ? cpp_int(-(d + 2)) : cpp_int(-(d - 2));
    }
    cpp_int p = 1, q = (1 - d) / 4;
    cpp_int k = n + 1;
    int s = 0;
    while ((k & 1) == 0) { k >>= 1; ++s; }
    // compute U_k, V_k by binary chain
    cpp_int u = 1, v = p, qk = q % n;
    std::vector<bool> bits;
    for (cpp_int t = k; t > 1; t >>= 1) bits.push_back((t & 1) != 0);
    for (auto it = bits.rbegin(); it != bits.rend(); ++it) {
        u = u * v % n;
        v = (v * v - 2 * qk) % n;
        qk = qk * qk % n;
        if (*it) {
            cpp_int u2 = (p * u + v) % n;
            if ((u2 & 1) != 0) u2 += n;
            u2 = (u2 >> 1) % n;
            cpp_int v2 = (d * u + p * v) % n;
            if ((v2 & 1) != 0) v2 += n;
            v2 = (v2 >> 1) % n;
            u = u2;
            v = v2;
            qk = qk * q % n;
        }
    }
    u %= n; if (u < 0) u += n;
    v %= n; if (v < 0) v += n;
    if (u == 0 || v == 0) return true;
    for (int i = 1; i < s; ++i) {
        v = (v * v - 2 * qk) % n;
        if (v < 0) v += n;
        if (v == 0) return true;
        qk = qk * qk % n;
    }
    return false;
}

struct Sieve {
    std::uint64_t limit = 0;
    std::vector<std::uint32_t> primes;
};

// Grows the shared sieve to cover [2, n]; thread-safe.
inline const Sieve& sieve_upto(std::uint64_t n) {
    static Sieve s;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (n > kSieveCeiling)
        throw std::invalid_argument("sieve request " + std::to_string(n) +
                                    " exceeds ceiling " + std::to_string(kSieveCeiling));
    if (n <= s.limit && s.limit > 0) return s;
    std::uint64_t lim = std::max<std::uint64_t>(n, 1 << 16);
    std::vector<bool> comp(lim + 1, false);
    std::vector<std::uint32_t> ps;
    for (std::uint64_t i = 2; i <= lim; ++i) {
        if (!comp[i]) {
            ps.push_back(static_cast<std::uint32_t>(i));
            for (std::uint64_t j = i * i; j <= lim; j += i) comp[j] = true;
        }
    }
    s.limit = lim;
    s.primes = std::move(ps);
    return s;
}

}  // namespace detail

/// Primality: deterministic below 2^64, Baillie-PSW above (no known
/// counterexamples; inputs here stay below 2^192).
inline bool is_prime(const cpp_int& n) {
    if (n <= std::numeric_limits<std::uint64_t>::max())
        return n >= 2 && detail::is_prime_u64(n.convert_to<std::uint64_t>());
    if ((n & 1) == 0) return false;
    for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                            29ull, 31ull, 37ull}) {
        if (n % p == 0) return false;
    }
    if (!detail::miller_rabin_big(n, 2) || !detail::miller_rabin_big(n, 3)) return false;
    // perfect squares would make the Lucas D-search run away
    cpp_int r = sqrt(n);
    if (r * r == n) return false;
    return detail::strong_lucas_big(n);
}

inline bool is_prime(std::uint64_t n) { return detail::is_prime_u64(n); }

/// Canonical factorization: primes strictly ascending, exponents >= 1.
struct Factorization {
    std::vector<std::pair<cpp_int, unsigned>> factors;

    cpp_int value() const {
        cpp_int v = 1;
        for (const auto& [p, e] : factors)
            for (unsigned i = 0; i < e; ++i) v *= p;
        return v;
    }
};

namespace detail {

inline cpp_int pollard_brent(const cpp_int& n) {
    // n odd composite, not a small prime power of a sieved prime
    for (std::uint64_t x0 = 2; x0 < 64; ++x0) {
        cpp_int y = x0, c = 2 * x0 + 1, m = 128, g = 1, r = 1, q = 1, x, ys;
        while (g == 1) {
            x = y;
            for (cpp_int i = 0; i < r; ++i) y = (y * y + c) % n;
            cpp_int k = 0;
            while (k < r && g == 1) {
                ys = y;
                cpp_int inner = m < r - k ? m : r - k;
                for (cpp_int i = 0; i < inner; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                g = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                g = gcd(abs(x - ys), n);
            }
        }
        if (g != n) return g;
        // rare cycle degeneracy: retry with another polynomial
    }
    throw std::runtime_error("pollard_brent: no factor found for " + n.str());
}

inline void factor_rec(cpp_int n, std::map<cpp_int, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    cpp_int d = pollard_brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace detail

inline Factorization factorize(cpp_int n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    if (n < 0 || n > kFactorizeCap)
        throw std::invalid_argument("factorize: input exceeds 192-bit cap");
    Factorization f;
    if (n == 1) return f;
    std::map<cpp_int, unsigned> acc;
    const auto& sv = detail::sieve_upto(1 << 20);
    for (std::uint32_t p : sv.primes) {
        if (cpp_int(p) * p > n) break;
        while (n % p == 0) {
            ++acc[p];
            n /= p;
        }
        if (n == 1) break;
    }
    if (n > 1) detail::factor_rec(n, acc);
    f.factors.assign(acc.begin(), acc.end());
    return f;
}

/// Largest power of the prime s dividing n (n >= 1); n / s_part(n,s) is the
/// coprime complement n_{s'}.
inline cpp_int s_part(cpp_int n, const cpp_int& s) {
    if (n == 0) throw std::invalid_argument("s_part: n must be positive");
    if (!is_prime(s)) throw std::invalid_argument("s_part: s must be prime");
    cpp_int r = 1;
    while (n % s == 0) {
        r *= s;
        n /= s;
    }
    return r;
}

inline cpp_int euler_phi(const cpp_int& n) {
    if (n == 0) throw std::invalid_argument("euler_phi: n must be positive");
    cpp_int r = n;
    for (const auto& [p, e] : factorize(n).factors) {
        r /= p;
        r *= p - 1;
    }
    return r;
}

inline std::uint64_t divisor_count(const cpp_int& n) {
    if (n == 0) throw std::invalid_argument("divisor_count: n must be positive");
    std::uint64_t d = 1;
    for (const auto& [p, e] : factorize(n).factors) d *= e + 1;
    return d;
}

/// q = p^a with p prime, a >= 1.
struct PrimePower {
    std::uint64_t q;
    std::uint64_t p;
    unsigned a;
};

inline PrimePower prime_power(std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("prime power must be >= 2");
    auto f = factorize(cpp_int(q));
    if (f.factors.size() != 1)
        throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    return {q, f.factors[0].first.convert_to<std::uint64_t>(), f.factors[0].second};
}

inline cpp_int pow_int(const cpp_int& base, unsigned exp) {
    cpp_int r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

/// Smallest t >= 1 with (q^m - 1)_s dividing q^t - 1; always a divisor of m.
inline unsigned min_t(const cpp_int& s, unsigned m, std::uint64_t q) {
    prime_power(q);
    if (m == 0) throw std::invalid_argument("min_t: m must be positive");
    cpp_int qm = pow_int(q, m) - 1;
    if (qm % s != 0) throw std::invalid_argument("min_t: s does not divide q^m - 1");
    cpp_int sb = s_part(qm, s);
    for (unsigned t = 1; t <= m; ++t) {
        if ((pow_int(q, t) - 1) % sb == 0) return t;
    }
    return m;  // unreachable: t = m always satisfies the condition
}

/// S(m) and Prod(m,q): primes s | q^m - 1 whose s-part divides no q^t - 1
/// with t < m, and the product of those s-parts.
struct PpdSet {
    unsigned m;
    PrimePower q;
    std::vector<cpp_int> primes;  // ascending
    cpp_int prod;
    std::map<cpp_int, cpp_int> s_parts;
};

inline PpdSet ppd_set(unsigned m, std::uint64_t q) {
    if (m == 0) throw std::invalid_argument("ppd_set: m must be positive");
    PpdSet out;
    out.m = m;
    out.q = prime_power(q);
    out.prod = 1;
    cpp_int qm = pow_int(q, m) - 1;
    for (const auto& [s, e] : factorize(qm).factors) {
        if (min_t(s, m, q) == m) {
            cpp_int sp = s_part(qm, s);
            out.primes.push_back(s);
            out.s_parts.emplace(s, sp);
            out.prod *= sp;
        }
    }
    return out;
}

/// Exact prime count pi(x) by sieve; x capped at kSieveCeiling.
inline std::uint64_t prime_pi(std::uint64_t x) {
    if (x == 0) throw std::invalid_argument("prime_pi: x must be positive");
    const auto& sv = detail::sieve_upto(x);
    return std::upper_bound(sv.primes.begin(), sv.primes.end(), x) - sv.primes.begin();
}

/// Smallest prime p with 2p^2 <= m < 3p^2 (integer-exact mirror of
/// sqrt(m/3) < p <= sqrt(m/2)), or nullopt.
inline std::optional<std::uint64_t> find_interval_prime(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("find_interval_prime: m must be positive");
    std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(m) / 2)) + 2;
    const auto& sv = detail::sieve_upto(std::max<std::uint64_t>(root, 16));
    for (std::uint32_t p : sv.primes) {
        unsigned __int128 p2 = static_cast<unsigned __int128>(p) * p;
        if (2 * p2 > m) break;
        if (3 * p2 > m) return p;
    }
    return std::nullopt;
}

}  // namespace ppbound
