#pragma once

// Brute-force ground truth at desk scale: Aut-class counts of p-elements
// m_p(T) and m(T) from explicit permutation models, partition fast paths
// for alternating groups, the cyclic-subgroup class-count law, and
// unipotent class counts for the tiny classical groups.

#include "ppbound/bounds.hpp"
#include "ppbound/groups.hpp"

#include <functional>

namespace ppbound {

inline bool is_power_of(std::uint64_t n, std::uint64_t p) {
    if (n < 2) return false;
    while (n % p == 0) n /= p;
    return n == 1;
}

/// Oracle support: exact Aut-fusion is computable for these ids.
inline bool oracle_supported(const GroupId& id) {
    if (id.family == Family::Alt) return id.m_alt >= 5 && id.m_alt <= 12;
    if (id.family == Family::PSL && id.d == 2) return id.q <= 32;
    if (id.family == Family::PSL && id.d == 3) return id.q <= 3;
    if (id.family == Family::TwoB2) return id.q == 8;
    return false;
}

/// Cycle types on m points with every part a power of p (1 allowed), the
/// permutation even; these classify the Sym(m)-classes of p-elements of
/// Alt(m), which are exactly the Aut-classes when m != 6.
struct AltPartitionCount {
    std::uint64_t count;
    std::vector<std::vector<unsigned>> types;  // parts descending; empty for m = 6
};

std::uint64_t aut_class_count(const GroupId& id, std::uint64_t p, bool include_identity);

inline AltPartitionCount alt_p_classes(unsigned m, std::uint64_t p, bool include_identity) {
    if (m < 5) throw std::invalid_argument("alt_p_classes: m >= 5 required");
    if (m == 6)  // cycle types misjudge the exceptional fusion; delegate
        return {aut_class_count(GroupId::alt(6), p, include_identity), {}};
    std::vector<unsigned> parts;  // powers of p <= m, descending, then 1
    for (std::uint64_t pk = p; pk <= m; pk *= p) parts.push_back(static_cast<unsigned>(pk));
    std::sort(parts.rbegin(), parts.rend());
    AltPartitionCount out{0, {}};
    std::vector<unsigned> cur;
    std::function<void(unsigned, std::size_t, unsigned)> rec =
        [&](unsigned rem, std::size_t idx, unsigned even_parts) {
            if (idx == parts.size()) {
                // remainder filled with fixed points
                if (p == 2 && even_parts % 2 != 0) return;
                if (cur.empty() && !include_identity) return;
                ++out.count;
                std::vector<unsigned> t = cur;
                t.insert(t.end(), rem, 1u);
                out.types.push_back(std::move(t));
                return;
            }
            unsigned part = parts[idx];
            std::size_t base = cur.size();
            for (unsigned k = 0; k * part <= rem; ++k) {
                if (k) cur.push_back(part);
                rec(rem - k * part, idx + 1, even_parts + (part % 2 == 0 ? k : 0));
            }
            cur.resize(base);
        };
    rec(m, 0, 0);
    return out;
}

/// Number of even cycle types on m points with all parts powers of p and
/// largest part exactly p^k. The two smallest part sizes (p and 1) are
/// counted in closed form, so the cost is O((m/p^2)^{k-1}).
inline std::uint64_t alt_order_pk_classes(unsigned m, std::uint64_t p, unsigned k) {
    if (m < 5 || m == 6) throw std::invalid_argument("alt_order_pk_classes: m >= 5, m != 6");
    if (k == 0) throw std::invalid_argument("alt_order_pk_classes: k >= 1");
    cpp_int pk_big = pow_int(p, k);
    if (pk_big > m) return 0;
    std::vector<std::uint64_t> big_parts;  // p^k down to p^2
    for (unsigned e = k; e >= 2; --e) big_parts.push_back(pow_int(p, e).convert_to<std::uint64_t>());
    // tail: i cycles of length p plus fixed points, counted in closed form;
    // for p = 2 the total number of even-length parts must be even
    auto tail_count = [&](std::uint64_t rem, std::uint64_t even_parts) -> std::uint64_t {
        std::uint64_t imax = rem / p;
        if (p != 2) return imax + 1;
        std::uint64_t first = even_parts % 2;  // required parity of i
        if (first > imax) return 0;
        return (imax - first) / 2 + 1;
    };
    std::uint64_t total = 0;
    std::function<void(std::uint64_t, std::size_t, std::uint64_t)> rec =
        [&](std::uint64_t rem, std::size_t idx, std::uint64_t even_parts) {
            if (idx == big_parts.size()) {
                total += tail_count(rem, even_parts);
                return;
            }
            std::uint64_t part = big_parts[idx];
            for (std::uint64_t c = idx == 0 ? 1 : 0; c * part <= rem; ++c)
                rec(rem - c * part, idx + 1, even_parts + (part % 2 == 0 ? c : 0));
        };
    if (k == 1) {
        // largest part exactly p: at least one p-cycle
        std::uint64_t imax = m / p;
        if (imax == 0) return 0;
        if (p != 2) return imax;
        return imax / 2;  // i in [1, imax], i even (pairs of 2-cycles)
    }
    rec(m, 0, 0);
    return total;
}

/// Number of Aut(T)-orbits on conjugacy classes of p-power-order elements;
/// the identity class counts only when include_identity.
inline std::uint64_t aut_class_count(const GroupId& id, std::uint64_t p, bool include_identity) {
    validate(id);
    if (!is_prime(p)) throw std::invalid_argument("aut_class_count: p must be prime");
    if (!oracle_supported(id))
        throw std::invalid_argument("aut_class_count: " + to_string(id) +
                                    " is not oracle-supported; use census data");
    if (id.family == Family::Alt && id.m_alt != 6)
        return alt_p_classes(id.m_alt, p, include_identity).count;
    Realization r = realize(id);
    FusionMap fm = fuse_classes(r.t, r.outer_gens);
    std::uint64_t count = 0;
    for (const auto& orbit : fm.aut_orbits) {
        std::uint64_t o = fm.t_classes[orbit.front()].element_order;
        if (o == 1 ? include_identity : is_power_of(o, p)) ++count;
    }
    return count;
}

/// m(T) = max over primes p | |T| of m_p(T), with the smallest witnessing
/// prime on ties.
struct MofResult {
    std::uint64_t n;
    std::uint64_t witness_prime;
};

inline MofResult m_of(const GroupId& id) {
    cpp_int order = group_order(id);
    MofResult best{0, 0};
    for (const auto& [p, e] : factorize(order).factors) {
        std::uint64_t pv = p.convert_to<std::uint64_t>();
        std::uint64_t c = aut_class_count(id, pv, false);
        if (c > best.n) best = {c, pv};
    }
    return best;
}

/// Measured data for the cyclic-subgroup class-count law: with S the Sylow
/// s-subgroup of the torus H, the number of Aut-classes of elements of
/// order |S| meeting S equals phi(|S|)/r, r = |N_Aut(S) : C_Aut(S)|.
struct Lemma23Record {
    cpp_int s_order;       // |S|
    cpp_int phi;           // phi(|S|)
    std::uint64_t measured_classes;
    std::uint64_t measured_r;
    bool law_holds;        // measured_classes * measured_r == phi
};

inline Lemma23Record verify_lemma23(const GroupId& id, const TorusSpec& torus,
                                    std::uint64_t s) {
    if (!oracle_supported(id))
        throw std::invalid_argument("verify_lemma23: unsupported id");
    if (torus.order % s != 0)
        throw std::invalid_argument("verify_lemma23: s does not divide the torus order");
    Realization r = realize(id);
    const auto& elems = r.t.elements();
    std::uint64_t h_order = torus.order.convert_to<std::uint64_t>();
    const Permutation* h = nullptr;
    for (const auto& x : elems)
        if (x.order() == h_order) { h = &x; break; }
    if (!h)
        throw std::invalid_argument("verify_lemma23: no element of the torus order " +
                                    std::to_string(h_order) + " in " + to_string(id));
    cpp_int sb_big = s_part(torus.order, s);
    std::uint64_t sb = sb_big.convert_to<std::uint64_t>();
    // S = the Sylow s-subgroup of <h>
    Permutation s0 = Permutation::identity(r.t.degree());
    for (std::uint64_t i = 0; i < h_order / sb; ++i) s0 = s0 * *h;
    std::vector<Permutation> s_elems;
    Permutation cur = Permutation::identity(r.t.degree());
    for (std::uint64_t i = 0; i < sb; ++i) {
        s_elems.push_back(cur);
        cur = cur * s0;
    }
    std::unordered_set<Permutation, PermHash> s_set(s_elems.begin(), s_elems.end());
    PermGroup aut = r.aut();
    std::uint64_t n_count = 0, c_count = 0;
    for (const auto& a : aut.elements()) {
        Permutation conj = a * s0 * a.inverse();
        if (conj == s0) {
            ++n_count;
            ++c_count;
        } else if (s_set.count(conj)) {
            ++n_count;
        }
    }
    Lemma23Record rec;
    rec.s_order = sb;
    rec.phi = euler_phi(cpp_int(sb));
    rec.measured_r = n_count / c_count;
    FusionMap fm = fuse_classes(r.t, r.outer_gens);
    std::unordered_set<std::uint32_t> orbits;
    for (const auto& x : s_elems)
        if (x.order() == sb) orbits.insert(fm.orbit_of(r.t, x));
    rec.measured_classes = orbits.size();
    rec.law_holds = cpp_int(rec.measured_classes) * rec.measured_r == rec.phi;
    return rec;
}

/// Aut-classes of elements of p-power order for p the defining
/// characteristic, identity included (the unipotent-count convention).
struct UnipotentRecord {
    std::uint64_t count;
    unsigned d;
    bool at_least_d;
};

inline UnipotentRecord unipotent_class_count(const GroupId& id) {
    if (!is_classical(id.family))
        throw std::invalid_argument("unipotent_class_count: classical ids only");
    std::uint64_t p = characteristic(id).p;
    std::uint64_t c = aut_class_count(id, p, true);
    return {c, id.d, c >= id.d};
}

/// Oracle-backed census rows for every supported id.
inline Census oracle_census() {
    std::vector<GroupId> ids;
    for (unsigned m = 5; m <= 12; ++m) ids.push_back(GroupId::alt(m));
    for (std::uint64_t q = 4; q <= 32; ++q) {
        GroupId id = GroupId::classical(Family::PSL, 2, q);
        try {
            validate(id);
        } catch (const std::invalid_argument&) {
            continue;
        }
        ids.push_back(id);
    }
    ids.push_back(GroupId::classical(Family::PSL, 3, 2));
    ids.push_back(GroupId::classical(Family::PSL, 3, 3));
    ids.push_back(GroupId::exceptional(Family::TwoB2, 8));
    Census out;
    for (const auto& id : ids) {
        for (const auto& [p, e] : factorize(group_order(id)).factors) {
            std::uint64_t pv = p.convert_to<std::uint64_t>();
            out.emplace(std::make_pair(id, pv),
                        CensusEntry{aut_class_count(id, pv, false), "oracle"});
        }
    }
    return out;
}

}  // namespace ppbound
