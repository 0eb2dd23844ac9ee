#include <catch2/catch_amalgamated.hpp>

#include "ppbound/oracle.hpp"

#include <map>
#include <set>

using namespace ppbound;

namespace {

// independent recursive enumerator of even cycle types with all parts
// powers of p and largest part exactly p^k
std::uint64_t pk_types_brute(unsigned m, unsigned p, unsigned k) {
    std::vector<unsigned> parts;
    for (std::uint64_t v = 1; v <= m; v *= p) parts.push_back(static_cast<unsigned>(v));
    std::sort(parts.rbegin(), parts.rend());
    std::uint64_t target = 1;
    for (unsigned i = 0; i < k; ++i) target *= p;
    std::uint64_t count = 0;
    std::function<void(unsigned, std::size_t, unsigned, unsigned)> rec =
        [&](unsigned rem, std::size_t idx, unsigned evens, unsigned largest) {
            if (rem == 0 || idx == parts.size()) {
                if (rem == 0 && largest == target && evens % 2 == 0) ++count;
                return;
            }
            unsigned part = parts[idx];
            for (unsigned c = 0; c * part <= rem; ++c)
                rec(rem - c * part, idx + 1, evens + (part % 2 == 0 ? c : 0),
                    c > 0 ? std::max(largest, part) : largest);
        };
    rec(m, 0, 0, 1);
    return count;
}

std::map<std::uint64_t, std::uint64_t> mp_table(const GroupId& id) {
    std::map<std::uint64_t, std::uint64_t> out;
    for (const auto& [p, e] : factorize(group_order(id)).factors)
        out[p.convert_to<std::uint64_t>()] =
            aut_class_count(id, p.convert_to<std::uint64_t>(), false);
    return out;
}

}  // namespace

TEST_CASE("enumeration ground truths") {
    auto a5 = realize_alt(5);
    CHECK(a5.t.order() == 60);
    auto l7 = realize_psl2(7);
    CHECK(l7.t.degree() == 8);
    CHECK(l7.t.order() == 168);
    auto sz = realize_suzuki8();
    CHECK(sz.t.degree() == 65);
    CHECK(sz.t.order() == 29120);
    CHECK(sz.aut().order() == 3 * 29120);
    auto l33 = realize_psl3(3);
    CHECK(l33.t.order() == 5616);
    CHECK(l33.t.degree() == 26);
}

TEST_CASE("enumeration cap refusal") {
    PermGroup capped(7, alt_generators(7), 100);
    CHECK_THROWS_MATCHES(capped.elements(), capacity_error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("100")));
}

TEST_CASE("conjugacy classes") {
    auto a5 = realize_alt(5);
    auto cls = conjugacy_classes(a5.t);
    REQUIRE(cls.size() == 5);
    std::multiset<std::uint64_t> sizes;
    std::uint64_t total = 0;
    for (auto& c : cls) {
        sizes.insert(c.size);
        total += c.size;
    }
    CHECK(total == 60);
    CHECK(sizes == std::multiset<std::uint64_t>{1, 15, 20, 12, 12});

    auto l7 = realize_psl2(7);
    auto cls7 = conjugacy_classes(l7.t);
    REQUIRE(cls7.size() == 6);
    std::multiset<std::uint64_t> orders;
    for (auto& c : cls7) orders.insert(c.element_order);
    CHECK(orders == std::multiset<std::uint64_t>{1, 2, 3, 4, 7, 7});

    // cyclic group of order 4: abelian, singleton classes
    Permutation c4 = cycle(4, {0, 1, 2, 3});
    PermGroup cyc4(4, {c4});
    auto cls4 = conjugacy_classes(cyc4);
    REQUIRE(cls4.size() == 4);
    for (auto& c : cls4) CHECK(c.size == 1);
}

TEST_CASE("conjugacy output is deterministic") {
    auto one = conjugacy_classes(realize_psl2(11).t);
    auto two = conjugacy_classes(realize_psl2(11).t);
    REQUIRE(one.size() == two.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].representative == two[i].representative);
        CHECK(one[i].size == two[i].size);
    }
}

TEST_CASE("fusion invariants") {
    for (auto id : {GroupId::classical(Family::PSL, 2, 9),
                    GroupId::classical(Family::PSL, 3, 2),
                    GroupId::exceptional(Family::TwoB2, 8)}) {
        auto r = realize(id);
        auto fm = fuse_classes(r.t, r.outer_gens);
        std::uint64_t total = 0;
        for (auto& c : fm.t_classes) total += c.size;
        CHECK(total == r.t.order());
        for (auto& orbit : fm.aut_orbits) {
            std::uint64_t o = fm.t_classes[orbit.front()].element_order;
            for (auto c : orbit) CHECK(fm.t_classes[c].element_order == o);
        }
    }
}

TEST_CASE("aut class counts") {
    CHECK(aut_class_count(GroupId::alt(6), 2, false) == 2);
    CHECK(aut_class_count(GroupId::classical(Family::PSL, 2, 7), 7, false) == 1);
    CHECK(aut_class_count(GroupId::classical(Family::PSL, 2, 7), 2, false) == 2);
    CHECK_THROWS_AS(aut_class_count(GroupId::exceptional(Family::E8, 2), 2, false),
                    std::invalid_argument);

    // Alt(6) realized as PSL(2,9): same table for every prime dividing 360
    CHECK(mp_table(GroupId::alt(6)) ==
          mp_table(GroupId::classical(Family::PSL, 2, 9)));

    // fused tables measured independently by a second implementation
    using T = std::map<std::uint64_t, std::uint64_t>;
    CHECK(mp_table(GroupId::classical(Family::PSL, 2, 7)) == T{{2, 2}, {3, 1}, {7, 1}});
    CHECK(mp_table(GroupId::classical(Family::PSL, 2, 8)) == T{{2, 1}, {3, 2}, {7, 1}});
    CHECK(mp_table(GroupId::classical(Family::PSL, 2, 11)) ==
          T{{2, 1}, {3, 1}, {5, 2}, {11, 1}});
    CHECK(mp_table(GroupId::classical(Family::PSL, 2, 13)) ==
          T{{2, 1}, {3, 1}, {7, 3}, {13, 1}});
    CHECK(mp_table(GroupId::classical(Family::PSL, 3, 3)) == T{{2, 3}, {3, 2}, {13, 2}});
    CHECK(mp_table(GroupId::exceptional(Family::TwoB2, 8)) ==
          T{{2, 3}, {5, 1}, {7, 1}, {13, 1}});
}

TEST_CASE("m_of") {
    auto a5 = m_of(GroupId::alt(5));
    CHECK(a5.n == 1);
    CHECK(a5.witness_prime == 2);
    auto l7 = m_of(GroupId::classical(Family::PSL, 2, 7));
    CHECK(l7.n == 2);
    CHECK(l7.witness_prime == 2);
    auto a7 = m_of(GroupId::alt(7));
    CHECK(a7.n == 2);
    CHECK(a7.witness_prime == 2);
    auto l13 = m_of(GroupId::classical(Family::PSL, 2, 13));
    CHECK(l13.n == 3);
    CHECK(l13.witness_prime == 7);
    auto sz = m_of(GroupId::exceptional(Family::TwoB2, 8));
    CHECK(sz.n == 3);
    CHECK(sz.witness_prime == 2);
}

TEST_CASE("alt_p_classes") {
    auto r73 = alt_p_classes(7, 3, false);
    CHECK(r73.count == 2);
    REQUIRE(r73.types.size() == 2);
    CHECK(r73.types[0] == std::vector<unsigned>{3, 1, 1, 1, 1});
    CHECK(r73.types[1] == std::vector<unsigned>{3, 3, 1});

    auto r93 = alt_p_classes(9, 3, false);
    CHECK(r93.count == 4);

    auto r72 = alt_p_classes(7, 2, false);
    CHECK(r72.count == 2);  // 2+2+1^3 and 4+2+1 survive the parity filter

    CHECK(alt_p_classes(7, 3, true).count == 3);  // identity included
    CHECK(alt_p_classes(7, 3, false).count == 7 / 3);
    CHECK_THROWS_AS(alt_p_classes(4, 2, false), std::invalid_argument);
}

TEST_CASE("alt partition counts match exhaustive fusion") {
    for (unsigned m : {5u, 7u, 8u, 9u}) {
        auto real = realize_alt(m);
        auto fm = fuse_classes(real.t, real.outer_gens);
        for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
            if (p > m) continue;
            std::uint64_t brute = 0;
            for (auto& orbit : fm.aut_orbits) {
                std::uint64_t o = fm.t_classes[orbit.front()].element_order;
                if (o > 1 && is_power_of(o, p)) ++brute;
            }
            CHECK(alt_p_classes(m, p, false).count == brute);
            CHECK(alt_p_classes(m, p, true).count == brute + 1);  // identity orbit
        }
    }
}

TEST_CASE("alt_order_pk_classes") {
    CHECK(alt_order_pk_classes(50, 5, 2) == 7);
    CHECK(alt_order_pk_classes(18, 3, 2) == 5);
    CHECK(alt_order_pk_classes(12, 2, 2) == 4);
    CHECK(alt_order_pk_classes(5, 7, 1) == 0);   // p^k > m
    CHECK(alt_order_pk_classes(10, 3, 3) == 0);  // 27 > 10
    CHECK_THROWS_AS(alt_order_pk_classes(6, 2, 1), std::invalid_argument);
    for (unsigned m : {5u, 8u, 12u, 20u, 30u, 50u}) {
        for (unsigned p : {2u, 3u, 5u, 7u}) {
            for (unsigned k = 1; k <= 3; ++k) {
                CHECK(alt_order_pk_classes(m, p, k) == pk_types_brute(m, p, k));
            }
        }
    }
    // the guarantee used downstream: >= p when 2p^2 <= m < 3p^2, p > 3
    for (std::uint64_t m : {50u, 60u, 98u, 128u}) {
        auto p = find_interval_prime(m);
        if (p) CHECK(alt_order_pk_classes(static_cast<unsigned>(m), *p, 2) >= *p);
    }
}

TEST_CASE("verify_lemma23") {
    auto l7 = GroupId::classical(Family::PSL, 2, 7);
    auto rec = verify_lemma23(l7, classical_torus(l7), 3);
    CHECK(rec.s_order == 3);
    CHECK(rec.phi == 2);
    CHECK(rec.measured_r == 2);
    CHECK(rec.measured_classes == 1);
    CHECK(rec.law_holds);

    auto l9 = GroupId::classical(Family::PSL, 2, 9);
    auto rec9 = verify_lemma23(l9, classical_torus(l9), 5);
    CHECK(rec9.phi == 4);
    CHECK(rec9.measured_r == 4);
    CHECK(rec9.measured_classes == 1);
    CHECK(rec9.law_holds);

    auto l4 = GroupId::classical(Family::PSL, 2, 4);
    auto rec4 = verify_lemma23(l4, classical_torus(l4), 5);
    CHECK(rec4.measured_classes == 1);
    CHECK(rec4.law_holds);

    CHECK_THROWS_AS(verify_lemma23(l7, classical_torus(l7), 5), std::invalid_argument);
}

TEST_CASE("measured r divides the catalog bound") {
    for (std::uint64_t q : {5ull, 7ull, 8ull, 9ull, 11ull, 13ull}) {
        GroupId id = GroupId::classical(Family::PSL, 2, q);
        auto torus = classical_torus(id);
        for (const auto& [s, e] : factorize(torus.order).factors) {
            auto rec = verify_lemma23(id, torus, s.convert_to<std::uint64_t>());
            CHECK(rec.law_holds);
            CHECK(torus.r_divides % rec.measured_r == 0);
        }
    }
}

TEST_CASE("unipotent class counts") {
    auto p32 = unipotent_class_count(GroupId::classical(Family::PSL, 3, 2));
    CHECK(p32.count == 3);
    CHECK(p32.d == 3);
    CHECK(p32.at_least_d);
    auto p25 = unipotent_class_count(GroupId::classical(Family::PSL, 2, 5));
    CHECK(p25.count == 2);
    auto p24 = unipotent_class_count(GroupId::classical(Family::PSL, 2, 4));
    CHECK(p24.count == 2);
    for (std::uint64_t q : {4ull, 5ull, 7ull, 8ull, 9ull, 11ull, 13ull, 16ull, 25ull, 27ull}) {
        CHECK(unipotent_class_count(GroupId::classical(Family::PSL, 2, q)).at_least_d);
    }
    CHECK(unipotent_class_count(GroupId::classical(Family::PSL, 3, 3)).at_least_d);
    CHECK_THROWS_AS(unipotent_class_count(GroupId::alt(5)), std::invalid_argument);
}

TEST_CASE("oracle census") {
    auto census = oracle_census();
    CHECK(census.at({GroupId::alt(6), 2}).count == 2);
    CHECK(census.at({GroupId::classical(Family::PSL, 2, 7), 2}).count == 2);
    CHECK(census.at({GroupId::exceptional(Family::TwoB2, 8), 2}).count == 3);
    CHECK(census.at({GroupId::alt(12), 2}).count == 9);
    for (auto& [key, entry] : census) {
        CHECK(entry.count >= 1);
        CHECK(entry.provenance == "oracle");
        CHECK(group_order(key.first) % key.second == 0);
    }
}
