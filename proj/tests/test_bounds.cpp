#include <catch2/catch_amalgamated.hpp>

#include "ppbound/bounds.hpp"

using namespace ppbound;

namespace {
// naive factorial oracle, repeated multiplication
cpp_int fact_oracle(unsigned n) {
    cpp_int r = 1;
    while (n > 1) r *= n--;
    return r;
}
double as_d(const Real& r) { return r.convert_to<double>(); }
}  // namespace

TEST_CASE("c2 exact values and oracle") {
    CHECK(c2(1) == 2);
    CHECK(c2(2) == 48);
    CHECK(c2(3) == 4320);
    for (unsigned n = 1; n <= 10; ++n)
        CHECK(c2(n) == fact_oracle(2 * n) * fact_oracle(n));
    CHECK_THROWS_AS(c2(0), std::invalid_argument);
}

TEST_CASE("c3_log values") {
    // log 2 + 2 sqrt(c2) log(c2), evaluated independently at 40 digits
    CHECK(as_d(c3_log(1).ln_value) == Catch::Approx(2.6536634674970397).epsilon(1e-12));
    CHECK(as_d(c3_log(2).ln_value) == Catch::Approx(54.334081878195678).epsilon(1e-12));
    CHECK(c3_log(3).ln_value > c3_log(2).ln_value);
    CHECK_FALSE(c3_log(2).exact.has_value());
}

TEST_CASE("g_log values") {
    CHECK(as_d(g_log(1).ln_value) == Catch::Approx(3.9210325738741888).epsilon(1e-12));
    CHECK(as_d(g_log(2).ln_value) == Catch::Approx(252.98185507383713).epsilon(1e-12));
    for (unsigned n = 2; n <= 12; ++n) CHECK(g_log(n).ln_value >= log(Real(60)));
}

TEST_CASE("f_alt exact") {
    CHECK(f_alt(1) == 60);
    CHECK(f_alt(2) == 20160);
    CHECK(f_alt(3) == 19958400);
    for (unsigned n = 1; n <= 10; ++n) CHECK(f_alt(n) == fact_oracle(3 * n + 2) / 2);
}

TEST_CASE("alt_exp_bound exact") {
    CHECK(alt_exp_bound(1) == 3);
    CHECK(alt_exp_bound(2) == 239500800);
    CHECK(alt_exp_bound(3) == fact_oracle(27) / 2);
    for (unsigned m = 1; m <= 5; ++m) CHECK(alt_exp_bound(m) == fact_oracle(3 * m * m) / 2);
}

TEST_CASE("monster order") {
    cpp_int m = monster_order();
    // independent reconstruction from the factor list
    cpp_int check = pow_int(2, 46) * pow_int(3, 20) * pow_int(5, 9) * pow_int(7, 6) *
                    pow_int(11, 2) * pow_int(13, 3);
    for (unsigned p : {17u, 19u, 23u, 29u, 31u, 41u, 47u, 59u, 71u}) check *= p;
    CHECK(m == check);
    CHECK(m == cpp_int("808017424794512875886459904961710757005754368000000000"));
    // trailing zeros: min(v2, v5) = min(46, 9) = 9
    cpp_int t = m;
    int zeros = 0;
    while (t % 10 == 0) { t /= 10; ++zeros; }
    CHECK(zeros == 9);
    CHECK(m > f_alt(3));
}

TEST_CASE("h_exceptional_log") {
    for (unsigned n = 1; n < 20; ++n)
        CHECK(h_exceptional_log(n + 1).ln_value > h_exceptional_log(n).ln_value);
    CHECK(h_exceptional_log(2).ln_value >= log(Real(29120)));
    // case-i component at n=1: 4 (log(480 sqrt 360) - log C), independently evaluated
    Real C = pow(log(Real(2)) / 2, Real(1.5));
    Real expected = 4 * (log(Real(480) * sqrt(Real(360))) - log(C));
    CHECK(as_d(expected) == Catch::Approx(42.825313085357716).epsilon(1e-12));
    CHECK(h_exceptional_log(1).ln_value >= 248 * expected);
}

TEST_CASE("f_final_log") {
    Real lnM = log(Real(monster_order()));
    for (unsigned n = 1; n <= 30; ++n) CHECK(f_final_log(n).ln_value >= lnM);
    CHECK(f_final_log(1).ln_value >= log(Real(60)));
    for (unsigned n = 1; n < 30; ++n) {
        CHECK(f_final_log(n + 1).ln_value > f_final_log(n).ln_value);
        // branches individually non-decreasing
        CHECK(f_alt(n + 1) > f_alt(n));
        CHECK(g_log(n + 1).ln_value >= g_log(n).ln_value);
        CHECK(h_exceptional_log(n + 1).ln_value >= h_exceptional_log(n).ln_value);
    }
    CHECK(f_final_log(5).ln_value > f_final_log(4).ln_value);
}

TEST_CASE("LogMagnitude exact-vs-ln comparison and precision") {
    auto a = LogMagnitude::from_exact(100);
    auto b = LogMagnitude::from_exact(101);
    CHECK(a < b);
    CHECK(a <= a);
    CHECK(b > a);
    // relative log error <= 1e-25 when exact is present
    for (cpp_int v : {cpp_int(2), cpp_int(29120), factorial(50), monster_order()}) {
        auto m = LogMagnitude::from_exact(v);
        Real ref = log(Real(v));
        CHECK(abs(m.ln_value - ref) / m.ln_value <= Real("1e-25"));
    }
    CHECK_THROWS_AS(LogMagnitude::from_exact(0), std::invalid_argument);
}

TEST_CASE("lemma24 inequality") {
    CHECK(check_lemma24(Real(1)));
    CHECK(check_lemma24(Real(2)));
    CHECK(lemma24_margin(Real(2)) > 0);
    CHECK(as_d(lemma24_margin(Real(2))) == Catch::Approx(1.7429771144428987).epsilon(1e-12));
    CHECK(check_lemma24(Real(1000000)));
    CHECK_THROWS_AS(check_lemma24(Real(0.5)), std::invalid_argument);
}

TEST_CASE("lemma25 inequality") {
    CHECK(check_lemma25(2, 1));
    CHECK(check_lemma25(2, 10));
    CHECK(check_lemma25(3, 1));
    CHECK(as_d(lemma25_margin(2, 10)) == Catch::Approx(91.309645111040875).epsilon(1e-12));
    CHECK_THROWS_AS(check_lemma25(1, 1), std::invalid_argument);
}
