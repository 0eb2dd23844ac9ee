#pragma once

// Machine-readable group-family data: identifiers with validity
// constraints, exact order formulas, the choose-m rule, the cyclic-torus
// catalog for classical and exceptional families, the case split for the
// exceptional normalizer case splits, and the class-count census loader.

#include "ppbound/numtheory.hpp"

#include <compare>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace ppbound {

enum class Family {
    Alt, PSL, PSU, PSp, OmegaOdd, OmegaPlus, OmegaMinus,
    TwoB2, TwoG2, TwoF4, ThreeD4, G2, F4, E6, TwoE6, E7, E8
};

inline bool is_classical(Family f) {
    return f == Family::PSL || f == Family::PSU || f == Family::PSp ||
           f == Family::OmegaOdd || f == Family::OmegaPlus || f == Family::OmegaMinus;
}
inline bool is_exceptional(Family f) {
    return f != Family::Alt && !is_classical(f);
}

inline const char* family_tag(Family f) {
    switch (f) {
        case Family::Alt: return "Alt";
        case Family::PSL: return "PSL";
        case Family::PSU: return "PSU";
        case Family::PSp: return "PSp";
        case Family::OmegaOdd: return "OmegaOdd";
        case Family::OmegaPlus: return "OmegaPlus";
        case Family::OmegaMinus: return "OmegaMinus";
        case Family::TwoB2: return "2B2";
        case Family::TwoG2: return "2G2";
        case Family::TwoF4: return "2F4";
        case Family::ThreeD4: return "3D4";
        case Family::G2: return "G2";
        case Family::F4: return "F4";
        case Family::E6: return "E6";
        case Family::TwoE6: return "2E6";
        case Family::E7: return "E7";
        case Family::E8: return "E8";
    }
    return "?";
}

inline std::optional<Family> family_from_tag(const std::string& s) {
    static const std::map<std::string, Family> m = {
        {"Alt", Family::Alt}, {"PSL", Family::PSL}, {"PSU", Family::PSU},
        {"PSp", Family::PSp}, {"OmegaOdd", Family::OmegaOdd},
        {"OmegaPlus", Family::OmegaPlus}, {"OmegaMinus", Family::OmegaMinus},
        {"2B2", Family::TwoB2}, {"2G2", Family::TwoG2}, {"2F4", Family::TwoF4},
        {"3D4", Family::ThreeD4}, {"G2", Family::G2}, {"F4", Family::F4},
        {"E6", Family::E6}, {"2E6", Family::TwoE6}, {"E7", Family::E7},
        {"E8", Family::E8}};
    auto it = m.find(s);
    if (it == m.end()) return std::nullopt;
    return it->second;
}

/// Identifier of a simple group. d is the dimension parameter in the
/// conventions of the classical-family table (so PSp(2d,q) carries d,
/// OmegaOdd(2d+1,q) carries d); exceptional families carry only q; Alt
/// carries only the degree m_alt.
struct GroupId {
    Family family = Family::Alt;
    unsigned d = 0;
    std::uint64_t q = 0;
    unsigned m_alt = 0;

    auto operator<=>(const GroupId&) const = default;

    static GroupId alt(unsigned m) { return {Family::Alt, 0, 0, m}; }
    static GroupId classical(Family f, unsigned d, std::uint64_t q) {
        return {f, d, q, 0};
    }
    static GroupId exceptional(Family f, std::uint64_t q) { return {f, 0, q, 0}; }
};

/// Throws unless the parameters describe a simple group of the family
/// (constraints of the classical table; the q = 2^{2t+1} / 3^{2t+1}
/// Suzuki/Ree forms; small non-simple cases excluded).
inline void validate(const GroupId& id) {
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument(std::string(family_tag(id.family)) + ": " + why);
    };
    if (id.family == Family::Alt) {
        if (id.q != 0 || id.d != 0) fail("degree-only family");
        if (id.m_alt < 5) fail("degree must be >= 5");
        return;
    }
    if (id.m_alt != 0) fail("m_alt only applies to Alt");
    PrimePower pp = prime_power(id.q);  // throws if not a prime power
    if (is_exceptional(id.family) && id.d != 0) fail("no dimension parameter");
    switch (id.family) {
        case Family::PSL:
            if (id.d < 2) fail("d >= 2 required");
            if (id.d == 2 && (id.q == 2 || id.q == 3)) fail("PSL(2,2), PSL(2,3) not simple");
            break;
        case Family::PSU:
            if (id.d < 3) fail("d >= 3 required");
            if (id.d == 3 && id.q == 2) fail("PSU(3,2) not simple");
            break;
        case Family::PSp:
            if (id.d < 2) fail("d >= 2 required");
            if (id.d == 2 && id.q == 2) fail("PSp(4,2) not simple");
            break;
        case Family::OmegaOdd:
            if (id.d < 3) fail("d >= 3 required");
            if (pp.p == 2) fail("q must be odd");
            break;
        case Family::OmegaPlus:
        case Family::OmegaMinus:
            if (id.d < 4) fail("d >= 4 required");
            break;
        case Family::TwoB2:
        case Family::TwoF4:
            if (pp.p != 2 || pp.a % 2 == 0 || pp.a < 3) fail("q = 2^(2t+1), t >= 1 required");
            break;
        case Family::TwoG2:
            if (pp.p != 3 || pp.a % 2 == 0 || pp.a < 3) fail("q = 3^(2t+1), t >= 1 required");
            break;
        case Family::G2:
            if (id.q == 2) fail("G2(2) not simple");
            break;
        default:
            break;
    }
}

inline PrimePower characteristic(const GroupId& id) {
    if (id.family == Family::Alt)
        throw std::invalid_argument("alternating groups have no defining characteristic");
    return prime_power(id.q);
}

inline std::string to_string(const GroupId& id) {
    std::ostringstream os;
    switch (id.family) {
        case Family::Alt: os << "Alt(" << id.m_alt << ")"; break;
        case Family::PSp: os << "PSp(" << 2 * id.d << "," << id.q << ")"; break;
        case Family::OmegaOdd: os << "OmegaOdd(" << 2 * id.d + 1 << "," << id.q << ")"; break;
        case Family::OmegaPlus: os << "OmegaPlus(" << 2 * id.d << "," << id.q << ")"; break;
        case Family::OmegaMinus: os << "OmegaMinus(" << 2 * id.d << "," << id.q << ")"; break;
        case Family::PSL: os << "PSL(" << id.d << "," << id.q << ")"; break;
        case Family::PSU: os << "PSU(" << id.d << "," << id.q << ")"; break;
        default: os << family_tag(id.family) << "(" << id.q << ")"; break;
    }
    return os.str();
}

/// Exact order of the simple group (centre quotients included).
inline cpp_int group_order(const GroupId& id) {
    validate(id);
    const cpp_int q = id.q;
    auto qp = [&](unsigned e) { return pow_int(q, e); };
    switch (id.family) {
        case Family::Alt: {
            cpp_int r = 1;
            for (unsigned i = 3; i <= id.m_alt; ++i) r *= i;
            return r;  // m!/2
        }
        case Family::PSL: {
            cpp_int r = qp(id.d * (id.d - 1) / 2);
            for (unsigned i = 2; i <= id.d; ++i) r *= qp(i) - 1;
            return r / gcd(cpp_int(id.d), q - 1);
        }
        case Family::PSU: {
            cpp_int r = qp(id.d * (id.d - 1) / 2);
            for (unsigned i = 2; i <= id.d; ++i)
                r *= qp(i) - (i % 2 == 0 ? 1 : -1);
            return r / gcd(cpp_int(id.d), q + 1);
        }
        case Family::PSp:
        case Family::OmegaOdd: {
            cpp_int r = qp(id.d * id.d);
            for (unsigned i = 1; i <= id.d; ++i) r *= qp(2 * i) - 1;
            return r / gcd(cpp_int(2), q - 1);
        }
        case Family::OmegaPlus:
        case Family::OmegaMinus: {
            int eps = id.family == Family::OmegaPlus ? 1 : -1;
            cpp_int r = qp(id.d * (id.d - 1)) * (qp(id.d) - eps);
            for (unsigned i = 1; i < id.d; ++i) r *= qp(2 * i) - 1;
            return r / gcd(cpp_int(4), qp(id.d) - eps);
        }
        case Family::TwoB2: return qp(2) * (qp(2) + 1) * (q - 1);
        case Family::TwoG2: return qp(3) * (qp(3) + 1) * (q - 1);
        case Family::TwoF4:
            return qp(12) * (qp(6) + 1) * (qp(4) - 1) * (qp(3) + 1) * (q - 1);
        case Family::ThreeD4:
            return qp(12) * (qp(8) + qp(4) + 1) * (qp(6) - 1) * (qp(2) - 1);
        case Family::G2: return qp(6) * (qp(6) - 1) * (qp(2) - 1);
        case Family::F4:
            return qp(24) * (qp(12) - 1) * (qp(8) - 1) * (qp(6) - 1) * (qp(2) - 1);
        case Family::E6:
            return qp(36) * (qp(12) - 1) * (qp(9) - 1) * (qp(8) - 1) * (qp(6) - 1) *
                   (qp(5) - 1) * (qp(2) - 1) / gcd(cpp_int(3), q - 1);
        case Family::TwoE6:
            return qp(36) * (qp(12) - 1) * (qp(9) + 1) * (qp(8) - 1) * (qp(6) - 1) *
                   (qp(5) + 1) * (qp(2) - 1) / gcd(cpp_int(3), q + 1);
        case Family::E7:
            return qp(63) * (qp(18) - 1) * (qp(14) - 1) * (qp(12) - 1) * (qp(10) - 1) *
                   (qp(8) - 1) * (qp(6) - 1) * (qp(2) - 1) / gcd(cpp_int(2), q - 1);
        case Family::E8:
            return qp(120) * (qp(30) - 1) * (qp(24) - 1) * (qp(20) - 1) * (qp(18) - 1) *
                   (qp(14) - 1) * (qp(12) - 1) * (qp(8) - 1) * (qp(2) - 1);
    }
    throw std::logic_error("unreachable");
}

/// |Out(T)|. Exceptional families carry the torus-table column values
/// verbatim (that is what the r | z|Out| bound consumes); classical and
/// alternating use the standard order formulas.
inline std::uint64_t out_order(const GroupId& id) {
    validate(id);
    if (id.family == Family::Alt) return id.m_alt == 6 ? 4 : 2;
    PrimePower pp = characteristic(id);
    std::uint64_t a = pp.a;
    auto g = [](std::uint64_t x, std::uint64_t y) { return std::gcd(x, y); };
    std::uint64_t q = id.q;
    switch (id.family) {
        case Family::PSL:
            return id.d == 2 ? g(2, q - 1) * a : 2 * g(id.d, q - 1) * a;
        case Family::PSU: return 2 * a * g(id.d, q + 1);
        case Family::PSp: return id.d == 2 ? 2 * a : g(2, q - 1) * a;
        case Family::OmegaOdd: return 2 * a;
        case Family::OmegaPlus: {
            cpp_int c = gcd(cpp_int(4), pow_int(q, id.d) - 1);
            return c.convert_to<std::uint64_t>() * a * (id.d == 4 ? 6 : 2);
        }
        case Family::OmegaMinus: {
            cpp_int c = gcd(cpp_int(4), pow_int(q, id.d) + 1);
            return c.convert_to<std::uint64_t>() * a * 2;
        }
        case Family::TwoB2:
        case Family::TwoG2:
        case Family::TwoF4:
        case Family::ThreeD4:
        case Family::E8: return a;
        case Family::F4: return pp.p == 2 ? 2 * a : a;
        case Family::G2: return 2 * a;  // column bound; attained when p = 3
        case Family::E6: return 2 * a * g(3, q - 1);
        case Family::TwoE6: return a * g(3, q + 1);
        case Family::E7: return a * g(2, q - 1);
        case Family::Alt: break;
    }
    throw std::logic_error("unreachable");
}

struct GroupInfo {
    GroupId id;
    cpp_int order;
    std::uint64_t out;
};

inline GroupInfo group_info(const GroupId& id) {
    return {id, group_order(id), out_order(id)};
}

/// Smallest prime m with d/2 < m <= d, except m = 3 at d = 3.
inline unsigned choose_m(unsigned d) {
    if (d < 2) throw std::invalid_argument("choose_m: d >= 2 required");
    if (d == 3) return 3;
    for (unsigned m = d / 2 + 1; m <= d; ++m)
        if (is_prime(static_cast<std::uint64_t>(m))) return m;
    throw std::logic_error("no prime in (d/2, d]");  // impossible by Bertrand
}

/// A cyclic subgroup H of T whose normalizer drives the class-count bound.
/// z is the torus-table normalizer index factor (absent for classical rows,
/// which carry r bounds directly); r_divides is the asserted divisor bound
/// for r = |N_Aut(T)(H) : C_Aut(T)(H)|.
struct TorusSpec {
    GroupId owner;
    cpp_int order;
    std::optional<unsigned> z;
    cpp_int r_divides;
    std::string normalizer_shape;
    std::string source;
    std::string condition;
};

inline TorusSpec classical_torus(const GroupId& id) {
    validate(id);
    if (!is_classical(id.family))
        throw std::invalid_argument("classical_torus: " + to_string(id) + " is not classical");
    PrimePower pp = characteristic(id);
    const cpp_int q = id.q;
    const unsigned d = id.d;
    const unsigned m = choose_m(d);
    const std::uint64_t a = pp.a;
    auto exact_div = [](const cpp_int& num, const cpp_int& den) {
        if (num % den != 0)
            throw std::logic_error("torus order division is not exact: " + num.str() +
                                   " / " + den.str());
        return num / den;
    };
    TorusSpec t;
    t.owner = id;

    if (id.family == Family::PSL) {
        if (d == 2 && pp.p != 2) {
            // odd member of (q±1)/2
            cpp_int plus = (q + 1) / 2, minus = (q - 1) / 2;
            t.order = plus % 2 == 1 ? plus : minus;
            t.r_divides = 2 * a;
            t.normalizer_shape = "dihedral in T, extended by field";
            t.source = "classical-psl2-odd-half";
            t.condition = "q odd";
            return t;
        }
        // m < d: the preimage contains no scalars, so H carries the full
        // Singer-quotient order; at m = d the centre divides out.
        cpp_int centre = m == d ? gcd(cpp_int(m), q - 1) : cpp_int(1);
        t.order = exact_div(pow_int(q, m) - 1, (q - 1) * centre);
        // inverse-transpose acts on H only for d > 2
        t.r_divides = d == 2 ? cpp_int(2 * a) : cpp_int(2 * a * m);
        t.normalizer_shape = "Singer normalizer, index m, extended by field/graph";
        t.source = m == d ? "classical-m-eq-d" : "classical-singer";
        return t;
    }
    if (m == d) {
        // the four remaining m = d rows
        switch (id.family) {
            case Family::PSp:
                if (d == 2) {
                    t.order = exact_div(pow_int(q, 2) + 1, gcd(cpp_int(2), q - 1));
                    t.r_divides = cpp_int(4 * a) * gcd(cpp_int(2), q);
                    t.source = "classical-m-eq-d";
                    t.normalizer_shape = "torus normalizer in PSp(4,q)";
                    return t;
                }
                if (d == 3) {
                    t.order = exact_div(pow_int(q, 3) + 1, gcd(cpp_int(2), q + 1));
                    t.r_divides = 6 * a;
                    t.source = "classical-m-eq-d";
                    t.normalizer_shape = "torus normalizer in PSp(6,q)";
                    return t;
                }
                break;
            case Family::PSU:
                if (d == 3) {
                    t.order = exact_div(pow_int(q, 2) - q + 1, gcd(cpp_int(3), q + 1));
                    t.r_divides = 6 * a;
                    t.source = "classical-m-eq-d";
                    t.normalizer_shape = "torus normalizer in PSU(3,q)";
                    return t;
                }
                break;
            case Family::OmegaOdd:
                if (d == 3) {
                    cpp_int v = pow_int(q, 3) + 1;
                    t.order = v / s_part(v, 2);
                    t.r_divides = 6 * a;
                    t.source = "classical-m-eq-d";
                    t.normalizer_shape = "torus normalizer in OmegaOdd(7,q)";
                    t.condition = "q odd";
                    return t;
                }
                break;
            default:
                break;
        }
        throw std::logic_error("unhandled m = d case for " + to_string(id));
    }
    // generic m < d rows: m is an odd prime here and H has the full
    // preimage order (no scalars fixed a nontrivial subspace pointwise)
    switch (id.family) {
        case Family::PSU:
            t.order = exact_div(pow_int(q, m) + 1, q + 1);
            break;
        case Family::PSp:
            t.order = pow_int(q, m) + 1;
            break;
        case Family::OmegaOdd:
        case Family::OmegaPlus:
        case Family::OmegaMinus: {
            cpp_int v = pow_int(q, m) + 1;
            t.order = v / s_part(v, 2);  // odd part
            break;
        }
        default:
            throw std::logic_error("unreachable");
    }
    t.r_divides = cpp_int(12) * m * a;
    t.normalizer_shape = "minus-type 2m-dimensional stabilizer torus";
    t.source = "classical-singer";
    return t;
}

/// All applicable exceptional torus rows for id (the Suzuki/Ree families
/// yield the two sign variants).
inline std::vector<TorusSpec> exceptional_torus(const GroupId& id) {
    validate(id);
    if (!is_exceptional(id.family))
        throw std::invalid_argument("exceptional_torus: " + to_string(id) + " is not exceptional");
    PrimePower pp = characteristic(id);
    const cpp_int q = id.q;
    const std::uint64_t out = out_order(id);
    auto exact_div = [](const cpp_int& num, const cpp_int& den) {
        if (num % den != 0)
            throw std::logic_error("torus order division is not exact: " + num.str() +
                                   " / " + den.str());
        return num / den;
    };
    std::vector<TorusSpec> rows;
    auto add = [&](cpp_int order, unsigned z, std::string shape, std::string cond,
                   const char* source = "exceptional-maximal-normalizer") {
        TorusSpec t;
        t.owner = id;
        t.order = std::move(order);
        t.z = z;
        t.r_divides = cpp_int(z) * out;
        t.normalizer_shape = std::move(shape);
        t.source = source;
        t.condition = std::move(cond);
        rows.push_back(std::move(t));
    };
    switch (id.family) {
        case Family::TwoB2: {
            cpp_int root = pow_int(2, (pp.a + 1) / 2);  // sqrt(2q)
            add(q + root + 1, 4, "H.4", "q = 2^(2t+1)");
            add(q - root + 1, 4, "H.4", "q = 2^(2t+1)");
            break;
        }
        case Family::TwoG2: {
            cpp_int root = pow_int(3, (pp.a + 1) / 2);  // sqrt(3q)
            add(q + root + 1, 6, "H.6", "q = 3^(2t+1)");
            add(q - root + 1, 6, "H.6", "q = 3^(2t+1)");
            break;
        }
        case Family::TwoF4: {
            cpp_int root = pow_int(2, (pp.a + 1) / 2);
            add(q * q + q + 1 + root * (q + 1), 12, "H.12", "q = 2^(2t+1)");
            add(q * q + q + 1 - root * (q + 1), 12, "H.12", "q = 2^(2t+1)");
            break;
        }
        case Family::ThreeD4:
            add(pow_int(q, 4) - q * q + 1, 4, "H.4", "");
            break;
        case Family::F4:
            if (pp.p == 2) {
                if (id.q == 2)
                    throw std::invalid_argument("F4 torus row requires q > 2");
                add(pow_int(q, 4) - q * q + 1, 12, "H.12", "q even, q > 2");
            } else {
                add(pow_int(q, 4) + 1, 4, "H.4 inside 2.Omega9(q)", "q odd",
                    "exceptional-nonmaximal-normalizer");
            }
            break;
        case Family::E6:
            add(exact_div(q * q + q + 1, gcd(cpp_int(3), q - 1)), 3, "(3D4(q) x H).3", "");
            break;
        case Family::TwoE6:
            if (id.q == 2) throw std::invalid_argument("2E6 torus row requires q > 2");
            add(exact_div(q * q - q + 1, gcd(cpp_int(3), q + 1)), 3, "(3D4(q) x H).3",
                "q > 2");
            break;
        case Family::E7:
            if (id.q == 2) throw std::invalid_argument("E7 torus row is trivial at q = 2");
            if (id.q % 3 == 2)
                add(exact_div(q - 1, gcd(cpp_int(2), q - 1)), 2, "(E6(q) x H).2",
                    "q = 2 (mod 3)");
            else
                add(exact_div(q + 1, gcd(cpp_int(2), q - 1)), 2, "(2E6(q) x H).2",
                    "q != 2 (mod 3)");
            break;
        case Family::E8:
            add((pow_int(q, 4) - 1) * (pow_int(q, 4) - pow_int(q, 3) + q) + 1, 30, "H.30", "");
            break;
        case Family::G2:
            add(q * q + q + 1, 6, "H:6 inside SL(3,q):2", "",
                "exceptional-nonmaximal-normalizer");
            break;
        default:
            throw std::logic_error("unreachable");
    }
    return rows;
}

/// Case split for tori whose normalizer is maximal: the Sylow s-subgroup of H
/// is characteristic in N_T(H) except for E7 in odd characteristic at s=2,
/// where either a cyclic Y2 of order >= |H|_2/2 takes over or |H|_2 <= 2.
struct Lemma51Result {
    enum class Tag { Characteristic, E7Y2, E7Small2 } tag;
    cpp_int y2_order_at_least;  // nonzero only for E7Y2
};

inline Lemma51Result lemma51_case(const GroupId& id, const cpp_int& s) {
    validate(id);
    bool in_table = is_exceptional(id.family) && id.family != Family::G2 &&
                    !(id.family == Family::F4 && id.q % 2 == 1);
    if (!in_table)
        throw std::invalid_argument("lemma51_case: " + to_string(id) +
                                    " has no maximal-normalizer torus row");
    auto rows = exceptional_torus(id);
    const TorusSpec* row = nullptr;
    for (const auto& r : rows)
        if (r.order % s == 0) { row = &r; break; }
    if (!row) throw std::invalid_argument("lemma51_case: s does not divide any torus order");
    if (id.family == Family::E7 && id.q % 2 == 1 && s == 2) {
        cpp_int h2 = s_part(row->order, 2);
        if (h2 > 2) return {Lemma51Result::Tag::E7Y2, h2 / 2};
        return {Lemma51Result::Tag::E7Small2, 0};
    }
    return {Lemma51Result::Tag::Characteristic, 0};
}

/// Case split for tori with non-maximal normalizer (G2 and odd-q F4).
enum class Lemma52Case { Characteristic, G2_3, F4_2 };

inline Lemma52Case lemma52_case(const GroupId& id, const cpp_int& s) {
    validate(id);
    bool in_table = id.family == Family::G2 ||
                    (id.family == Family::F4 && id.q % 2 == 1);
    if (!in_table)
        throw std::invalid_argument("lemma52_case: " + to_string(id) +
                                    " has no non-maximal torus row");
    auto rows = exceptional_torus(id);
    const cpp_int& h = rows.at(0).order;
    if (h % s != 0)
        throw std::invalid_argument("lemma52_case: s does not divide |H|");
    if (id.family == Family::G2 && s == 3 && id.q % 3 == 1) {
        if (s_part(h, 3) != 3) throw std::logic_error("(q^2+q+1)_3 != 3 at q = 1 (mod 3)");
        return Lemma52Case::G2_3;
    }
    if (id.family == Family::F4 && s == 2) {
        if (s_part(h, 2) != 2) throw std::logic_error("(q^4+1)_2 != 2 at odd q");
        return Lemma52Case::F4_2;
    }
    return Lemma52Case::Characteristic;
}

// ---------------------------------------------------------------------------
// Census: per-(group, prime) Aut-class counts with provenance, for groups
// beyond enumeration reach. CSV columns:
//   family,d_or_degree,q,p,count,provenance
// Blank d/q where the family takes no such parameter; '#' starts a comment.

struct CensusEntry {
    std::uint64_t count;
    std::string provenance;  // oracle | paper | literature
};

using Census = std::map<std::pair<GroupId, std::uint64_t>, CensusEntry>;

inline Census load_class_census(std::istream& in) {
    Census out;
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("census line " + std::to_string(lineno) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cols;
        std::stringstream ss(line);
        std::string col;
        while (std::getline(ss, col, ',')) cols.push_back(col);
        while (cols.size() < 6) cols.emplace_back();
        if (cols.size() != 6) fail("expected 6 columns");
        auto fam = family_from_tag(cols[0]);
        if (!fam) fail("unknown family tag '" + cols[0] + "'");
        auto num = [&](const std::string& s) -> std::uint64_t {
            try {
                std::size_t pos = 0;
                std::uint64_t v = std::stoull(s, &pos);
                if (pos != s.size()) fail("malformed number '" + s + "'");
                return v;
            } catch (const std::invalid_argument&) {
                fail("malformed number '" + s + "'");
            } catch (const std::out_of_range&) {
                fail("number out of range '" + s + "'");
            }
            return 0;
        };
        GroupId id;
        if (*fam == Family::Alt) {
            if (cols[2].size()) fail("Alt rows take no q");
            if (cols[1].empty()) fail("Alt rows need a degree");
            id = GroupId::alt(static_cast<unsigned>(num(cols[1])));
        } else if (is_exceptional(*fam)) {
            if (cols[1].size()) fail("exceptional rows take no d");
            if (cols[2].empty()) fail("exceptional rows need q");
            id = GroupId::exceptional(*fam, num(cols[2]));
        } else {
            if (cols[1].empty() || cols[2].empty()) fail("classical rows need d and q");
            id = GroupId::classical(*fam, static_cast<unsigned>(num(cols[1])), num(cols[2]));
        }
        try {
            validate(id);
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
        std::uint64_t p = num(cols[3]);
        if (!is_prime(p)) fail("p must be prime");
        std::uint64_t count = num(cols[4]);
        if (count < 1) fail("count must be >= 1");
        const std::string& prov = cols[5];
        if (prov != "oracle" && prov != "paper" && prov != "literature")
            fail("provenance must be oracle|paper|literature");
        auto key = std::make_pair(id, p);
        if (out.count(key)) fail("duplicate row for " + to_string(id));
        out.emplace(key, CensusEntry{count, prov});
    }
    return out;
}

inline Census load_class_census(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open census file: " + path);
    return load_class_census(f);
}

}  // namespace ppbound
