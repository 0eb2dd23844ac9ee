#pragma once

// Concrete permutation realizations of the oracle-supported groups, each
// packaged with a supergroup realizing the full modelled automorphism
// action on the same domain:
//   Alt(m) inside Sym(m);
//   PSL(2,q) on the projective line inside PGammaL(2,q);
//   PSL(3,q), q in {2,3}, on points + hyperplanes with the graph
//   automorphism swapping the two blocks;
//   the Suzuki group on its 65-point ovoid with the field automorphism.

#include "ppbound/catalog.hpp"
#include "ppbound/gf.hpp"
#include "ppbound/perm.hpp"

#include <array>

namespace ppbound {

/// T with the modelled Aut(T) = <T, outer_gens> acting on the same points.
struct Realization {
    PermGroup t;
    std::vector<Permutation> outer_gens;

    PermGroup aut() const {
        auto gens = t.generators();
        gens.insert(gens.end(), outer_gens.begin(), outer_gens.end());
        return PermGroup(t.degree(), gens);
    }
};

inline Permutation cycle(unsigned degree, const std::vector<std::uint8_t>& pts) {
    Permutation p = Permutation::identity(degree);
    for (std::size_t i = 0; i < pts.size(); ++i)
        p.images[pts[i]] = pts[(i + 1) % pts.size()];
    return p;
}

inline std::vector<Permutation> alt_generators(unsigned m) {
    std::vector<std::uint8_t> all(m);
    std::iota(all.begin(), all.end(), 0);
    if (m % 2 == 0) all.erase(all.begin());
    return {cycle(m, {0, 1, 2}), cycle(m, all)};
}

inline Realization realize_alt(unsigned m) {
    if (m < 4 || m > 254) throw std::invalid_argument("realize_alt: unsupported degree");
    return {PermGroup(m, alt_generators(m)), {cycle(m, {0, 1})}};
}

namespace detail {

// Moebius action of an invertible 2x2 matrix on the projective line
// {0..q-1, infinity = q}.
inline Permutation moebius(const Gf& F, std::array<unsigned, 4> m) {
    unsigned q = F.q();
    auto [a, b, c, d] = m;
    Permutation p;
    p.images.resize(q + 1);
    for (unsigned x = 0; x <= q; ++x) {
        unsigned y;
        if (x == q) {
            y = c == 0 ? q : F.mul(a, F.inv(c));
        } else {
            unsigned num = F.add(F.mul(a, x), b);
            unsigned den = F.add(F.mul(c, x), d);
            y = den == 0 ? q : F.mul(num, F.inv(den));
        }
        p.images[x] = static_cast<std::uint8_t>(y);
    }
    return p;
}

}  // namespace detail

inline Realization realize_psl2(std::uint64_t qv) {
    GroupId id = GroupId::classical(Family::PSL, 2, qv);
    validate(id);
    Gf F(qv);
    unsigned q = F.q(), g = F.generator();
    std::vector<Permutation> tg = {
        detail::moebius(F, {1, 1, 0, 1}),
        detail::moebius(F, {1, g, 0, 1}),
        detail::moebius(F, {1, 0, 1, 1}),
        detail::moebius(F, {1, 0, g, 1}),
    };
    Permutation diag = detail::moebius(F, {g, 0, 0, 1});
    Permutation frob;
    frob.images.resize(q + 1);
    for (unsigned x = 0; x <= q; ++x)
        frob.images[x] = static_cast<std::uint8_t>(x == q ? q : F.frobenius(x));
    return {PermGroup(q + 1, tg), {diag, frob}};
}

namespace detail {

using Vec3 = std::array<unsigned, 3>;
using Mat3 = std::array<std::array<unsigned, 3>, 3>;

inline Vec3 normalize3(const Gf& F, Vec3 v) {
    for (unsigned c : v) {
        if (c != 0) {
            unsigned ic = F.inv(c);
            return {F.mul(ic, v[0]), F.mul(ic, v[1]), F.mul(ic, v[2])};
        }
    }
    throw std::logic_error("zero vector");
}

inline Mat3 inverse3(const Gf& F, const Mat3& m) {
    auto det2 = [&](unsigned a, unsigned b, unsigned c, unsigned d) {
        return F.sub(F.mul(a, d), F.mul(b, c));
    };
    Mat3 adj;
    adj[0] = {det2(m[1][1], m[1][2], m[2][1], m[2][2]),
              F.neg(det2(m[0][1], m[0][2], m[2][1], m[2][2])),
              det2(m[0][1], m[0][2], m[1][1], m[1][2])};
    adj[1] = {F.neg(det2(m[1][0], m[1][2], m[2][0], m[2][2])),
              det2(m[0][0], m[0][2], m[2][0], m[2][2]),
              F.neg(det2(m[0][0], m[0][2], m[1][0], m[1][2]))};
    adj[2] = {det2(m[1][0], m[1][1], m[2][0], m[2][1]),
              F.neg(det2(m[0][0], m[0][1], m[2][0], m[2][1])),
              det2(m[0][0], m[0][1], m[1][0], m[1][1])};
    unsigned det = F.add(F.sub(F.mul(m[0][0], adj[0][0]), 0),
                         F.add(F.mul(m[1][0], adj[0][1]), F.mul(m[2][0], adj[0][2])));
    unsigned di = F.inv(det);
    for (auto& row : adj)
        for (auto& x : row) x = F.mul(di, x);
    return adj;
}

}  // namespace detail

/// Points then hyperplanes; the graph automorphism swaps the blocks.
inline Realization realize_psl3(std::uint64_t qv) {
    GroupId id = GroupId::classical(Family::PSL, 3, qv);
    validate(id);
    if (qv > 3) throw std::invalid_argument("realize_psl3: only q = 2, 3 supported");
    Gf F(qv);
    unsigned q = F.q();
    using detail::Vec3;
    std::vector<Vec3> pts;
    for (unsigned x = 0; x < q; ++x)
        for (unsigned y = 0; y < q; ++y) pts.push_back({1, x, y});
    for (unsigned y = 0; y < q; ++y) pts.push_back({0, 1, y});
    pts.push_back({0, 0, 1});
    std::map<Vec3, unsigned> idx;
    unsigned n = static_cast<unsigned>(pts.size());
    for (unsigned i = 0; i < n; ++i) idx[pts[i]] = i;

    auto perm_of = [&](const detail::Mat3& m) {
        detail::Mat3 mi = detail::inverse3(F, m);
        Permutation p;
        p.images.resize(2 * n);
        for (unsigned i = 0; i < n; ++i) {
            Vec3 v = pts[i];
            Vec3 mv{}, wm{};
            for (unsigned r = 0; r < 3; ++r) {
                unsigned acc = 0, acc2 = 0;
                for (unsigned c = 0; c < 3; ++c) {
                    acc = F.add(acc, F.mul(m[r][c], v[c]));
                    acc2 = F.add(acc2, F.mul(v[c], mi[c][r]));
                }
                mv[r] = acc;
                wm[r] = acc2;
            }
            p.images[i] = static_cast<std::uint8_t>(idx.at(detail::normalize3(F, mv)));
            p.images[n + i] = static_cast<std::uint8_t>(n + idx.at(detail::normalize3(F, wm)));
        }
        return p;
    };

    unsigned g = F.generator();
    std::vector<detail::Mat3> mats = {
        {{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}},
        {{{1, g, 0}, {0, 1, 0}, {0, 0, 1}}},
        {{{1, 0, 0}, {1, 1, 0}, {0, 0, 1}}},
        {{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}},
    };
    std::vector<Permutation> tg;
    for (const auto& m : mats) tg.push_back(perm_of(m));

    Permutation tau;
    tau.images.resize(2 * n);
    for (unsigned i = 0; i < n; ++i) {
        tau.images[i] = static_cast<std::uint8_t>(n + i);
        tau.images[n + i] = static_cast<std::uint8_t>(i);
    }
    return {PermGroup(2 * n, tg), {tau}};
}

/// Suzuki group on the 65-point ovoid of PG(3,8): unitriangular maps
/// S(c,d), the diagonal torus, and the antidiagonal involution, with the
/// field automorphism as the outer generator.
inline Realization realize_suzuki8() {
    Gf F(8);
    const unsigned q = 8;
    auto theta = [&](unsigned x) { return F.frobenius(F.frobenius(x)); };  // x^4
    auto fval = [&](unsigned a, unsigned b) {
        // a^6 + a b + b^4
        return F.add(F.add(F.mul(theta(a), F.mul(a, a)), F.mul(a, b)), theta(b));
    };
    using V4 = std::array<unsigned, 4>;
    auto norm = [&](V4 v) -> V4 {
        for (unsigned c : v)
            if (c) {
                unsigned ic = F.inv(c);
                return {F.mul(ic, v[0]), F.mul(ic, v[1]), F.mul(ic, v[2]), F.mul(ic, v[3])};
            }
        throw std::logic_error("zero vector");
    };
    std::vector<V4> pts;
    pts.push_back({0, 0, 0, 1});
    for (unsigned a = 0; a < q; ++a)
        for (unsigned b = 0; b < q; ++b) pts.push_back(norm({1, a, b, fval(a, b)}));
    std::sort(pts.begin(), pts.end());
    std::map<V4, unsigned> idx;
    for (unsigned i = 0; i < pts.size(); ++i) idx[pts[i]] = i;

    using M4 = std::array<V4, 4>;
    auto perm_of = [&](const M4& m) {
        Permutation p;
        p.images.resize(pts.size());
        for (unsigned i = 0; i < pts.size(); ++i) {
            V4 out{};
            for (unsigned r = 0; r < 4; ++r) {
                unsigned acc = 0;
                for (unsigned c = 0; c < 4; ++c) acc = F.add(acc, F.mul(m[r][c], pts[i][c]));
                out[r] = acc;
            }
            auto it = idx.find(norm(out));
            if (it == idx.end()) throw std::logic_error("matrix does not preserve the ovoid");
            p.images[i] = static_cast<std::uint8_t>(it->second);
        }
        return p;
    };
    auto smat = [&](unsigned c, unsigned d) -> M4 {
        // lower unitriangular; first column (1, c, d, f(c,d)), [3][1] = c^5 + d
        unsigned c5 = F.mul(theta(c), c);  // c^5
        return {V4{1, 0, 0, 0}, V4{c, 1, 0, 0}, V4{d, theta(c), 1, 0},
                V4{fval(c, d), F.add(c5, d), c, 1}};
    };
    unsigned g = F.generator();
    M4 diag = {V4{F.pow(g, 3), 0, 0, 0}, V4{0, F.pow(g, 2), 0, 0},
               V4{0, 0, F.inv(F.pow(g, 2)), 0}, V4{0, 0, 0, F.inv(F.pow(g, 3))}};
    M4 omega = {V4{0, 0, 0, 1}, V4{0, 0, 1, 0}, V4{0, 1, 0, 0}, V4{1, 0, 0, 0}};
    std::vector<Permutation> tg = {perm_of(smat(1, 0)), perm_of(smat(0, 1)),
                                   perm_of(diag), perm_of(omega)};
    Permutation frob;
    frob.images.resize(pts.size());
    for (unsigned i = 0; i < pts.size(); ++i) {
        V4 v = pts[i];
        for (auto& c : v) c = F.frobenius(c);
        frob.images[i] = static_cast<std::uint8_t>(idx.at(norm(v)));
    }
    return {PermGroup(static_cast<unsigned>(pts.size()), tg), {frob}};
}

/// Realizations exist for Alt(m) with m <= 10 (larger degrees exceed the
/// enumeration cap), PSL(2,q) with q <= 32, PSL(3,2), PSL(3,3) and 2B2(8).
inline Realization realize(const GroupId& id) {
    validate(id);
    if (id.family == Family::Alt) {
        if (id.m_alt == 6)  // exceptional outer automorphism: use PSL(2,9)
            return realize_psl2(9);
        if (id.m_alt > 10)
            throw std::invalid_argument("realize: Alt degree beyond enumeration reach");
        return realize_alt(id.m_alt);
    }
    if (id.family == Family::PSL && id.d == 2 && id.q <= 32) return realize_psl2(id.q);
    if (id.family == Family::PSL && id.d == 3 && id.q <= 3) return realize_psl3(id.q);
    if (id.family == Family::TwoB2 && id.q == 8) return realize_suzuki8();
    throw std::invalid_argument("realize: no permutation model for " + to_string(id));
}

}  // namespace ppbound
