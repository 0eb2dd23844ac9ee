#pragma once

// Small finite fields GF(p^a) with full lookup tables. Elements are coded
// as integers 0..q-1, the base-p digits being polynomial coefficients
// (lowest degree first). Sized for the oracle's group constructions
// (q <= a few hundred), not for general field work.

#include "ppbound/numtheory.hpp"

#include <cstdint>
#include <vector>

namespace ppbound {

class Gf {
  public:
    explicit Gf(std::uint64_t q) {
        PrimePower pp = prime_power(q);
        p_ = static_cast<unsigned>(pp.p);
        a_ = pp.a;
        q_ = static_cast<unsigned>(q);
        if (q > 4096) throw std::invalid_argument("Gf: field too large for table form");
        reduction_ = find_irreducible();
        build_tables();
    }

    unsigned p() const { return p_; }
    unsigned a() const { return a_; }
    unsigned q() const { return q_; }
    unsigned generator() const { return gen_; }

    unsigned add(unsigned x, unsigned y) const { return add_[x * q_ + y]; }
    unsigned mul(unsigned x, unsigned y) const { return mul_[x * q_ + y]; }
    unsigned neg(unsigned x) const { return neg_[x]; }
    unsigned sub(unsigned x, unsigned y) const { return add(x, neg(y)); }
    unsigned inv(unsigned x) const {
        if (x == 0) throw std::domain_error("Gf: inverse of zero");
        return inv_[x];
    }
    unsigned frobenius(unsigned x) const { return frob_[x]; }  // x -> x^p

    unsigned pow(unsigned x, std::uint64_t e) const {
        unsigned r = 1;
        while (e) {
            if (e & 1) r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    }

    std::uint64_t element_order(unsigned x) const {
        if (x == 0) return 0;
        std::uint64_t o = 1;
        unsigned y = x;
        while (y != 1) {
            y = mul(y, x);
            ++o;
        }
        return o;
    }

  private:
    unsigned p_, a_, q_, gen_ = 0;
    std::vector<unsigned> reduction_;  // x^a = -(reduction), coefficients low-first
    std::vector<unsigned> add_, mul_, neg_, inv_, frob_;

    std::vector<unsigned> digits(unsigned x) const {
        std::vector<unsigned> d(a_);
        for (unsigned i = 0; i < a_; ++i) {
            d[i] = x % p_;
            x /= p_;
        }
        return d;
    }
    unsigned undigits(const std::vector<unsigned>& d) const {
        unsigned v = 0;
        for (unsigned i = a_; i-- > 0;) v = v * p_ + d[i];
        return v;
    }

    unsigned raw_add(unsigned x, unsigned y) const {
        auto dx = digits(x), dy = digits(y);
        for (unsigned i = 0; i < a_; ++i) dx[i] = (dx[i] + dy[i]) % p_;
        return undigits(dx);
    }

    unsigned raw_mul(unsigned x, unsigned y, const std::vector<unsigned>& red) const {
        auto dx = digits(x), dy = digits(y);
        std::vector<unsigned> prod(2 * a_ - 1, 0);
        for (unsigned i = 0; i < a_; ++i)
            if (dx[i])
                for (unsigned j = 0; j < a_; ++j)
                    prod[i + j] = (prod[i + j] + dx[i] * dy[j]) % p_;
        for (unsigned k = 2 * a_ - 2; k + 1 > a_; --k) {
            unsigned c = prod[k];
            if (c) {
                prod[k] = 0;
                for (unsigned j = 0; j < a_; ++j)
                    prod[k - a_ + j] = (prod[k - a_ + j] + (p_ - 1) * c % p_ * red[j]) % p_;
            }
        }
        prod.resize(a_);
        return undigits(prod);
    }

    // monic x^a + tail irreducible over F_p, found by exhausting tails and
    // rejecting any with a nontrivial monic divisor of degree <= a/2
    std::vector<unsigned> find_irreducible() const {
        if (a_ == 1) return {0};
        std::vector<unsigned> tail(a_, 0);
        while (true) {
            // increment tail as base-p counter
            for (unsigned i = 0;; ++i) {
                if (++tail[i] < p_) break;
                tail[i] = 0;
            }
            if (irreducible(tail)) return tail;
        }
    }

    bool irreducible(const std::vector<unsigned>& tail) const {
        // poly f = x^a + tail; trial divide by all monic polys of degree 1..a/2
        for (unsigned deg = 1; deg <= a_ / 2; ++deg) {
            unsigned count = 1;
            for (unsigned i = 0; i < deg; ++i) count *= p_;
            for (unsigned code = 0; code < count; ++code) {
                std::vector<unsigned> g(deg + 1, 1);  // monic
                unsigned c = code;
                for (unsigned i = 0; i < deg; ++i) {
                    g[i] = c % p_;
                    c /= p_;
                }
                // synthetic division of x^a + tail by g
                std::vector<unsigned> r(a_ + 1, 0);
                r[a_] = 1;
                for (unsigned i = 0; i < a_; ++i) r[i] = tail[i];
                for (unsigned k = a_; k >= deg; --k) {
                    unsigned lead = r[k];
                    if (lead) {
                        r[k] = 0;
                        for (unsigned j = 0; j < deg; ++j)
                            r[k - deg + j] = (r[k - deg + j] + (p_ - 1) * lead % p_ * g[j]) % p_;
                    }
                    if (k == 0) break;
                }
                bool zero = true;
                for (unsigned j = 0; j < deg; ++j)
                    if (r[j]) { zero = false; break; }
                if (zero) return false;
            }
        }
        return true;
    }

    void build_tables() {
        add_.resize(std::size_t(q_) * q_);
        mul_.resize(std::size_t(q_) * q_);
        neg_.resize(q_);
        inv_.assign(q_, 0);
        frob_.resize(q_);
        for (unsigned x = 0; x < q_; ++x)
            for (unsigned y = 0; y < q_; ++y) {
                add_[x * q_ + y] = raw_add(x, y);
                mul_[x * q_ + y] = raw_mul(x, y, reduction_);
            }
        for (unsigned x = 0; x < q_; ++x) {
            auto d = digits(x);
            for (auto& c : d) c = (p_ - c) % p_;
            neg_[x] = undigits(d);
            unsigned f = x;
            for (unsigned i = 1; i < p_; ++i) f = mul(f, x);
            frob_[x] = f;
        }
        for (unsigned x = 1; x < q_; ++x)
            for (unsigned y = 1; y < q_; ++y)
                if (mul(x, y) == 1) { inv_[x] = y; break; }
        for (unsigned g = 2; g < q_; ++g)
            if (element_order(g) == q_ - 1) { gen_ = g; break; }
        if (q_ == 2) gen_ = 1;
    }
};

}  // namespace ppbound
