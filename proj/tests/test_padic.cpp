#include "doctest.h"
#include "support.hpp"
#include "tokuyama/padic.hpp"
#include "tokuyama/rootdata.hpp"

#include <functional>
#include <set>

using namespace tokuyama::padic;
using tokuyama::exactalg::HalfInt;

namespace {

LaurentPoly one() { return LaurentPoly(0, 1); }
LaurentPoly q(std::int64_t e, std::int64_t c = 1) { return LaurentPoly::q(0, e, c); }
LaurentPoly q_half(int twice) { return LaurentPoly::q(0, HalfInt::from_twice(twice)); }

// Every mu with entries in [1, hi] and rank r.
std::vector<IntVec> all_mu(int r, std::int64_t hi) {
    std::vector<IntVec> out;
    IntVec mu(static_cast<std::size_t>(r), 1);
    std::function<void(int)> rec = [&](int i) {
        if (i == r) {
            out.push_back(mu);
            return;
        }
        for (std::int64_t v = 1; v <= hi; ++v) {
            mu[static_cast<std::size_t>(i)] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

std::int64_t total(const IntVec& v) {
    std::int64_t s = 0;
    for (auto x : v) s += x;
    return s;
}

std::int64_t top_weight(const IntVec& mu) { return mu.back() + 2 * (total(mu) - mu.back()); }

DecoratedArray array_of(Flavor f, IntVec entries, std::vector<bool> boxed, std::vector<bool> circled) {
    DecoratedArray a;
    a.flavor = f;
    a.entries = std::move(entries);
    a.boxed = std::move(boxed);
    a.circled = std::move(circled);
    return a;
}

}  // namespace

TEST_CASE("l_vector follows the three-case formula") {
    CHECK(l_vector({1, 1, 1}, 2) == IntVec{1, 3, 3});
    CHECK(l_vector({0, 0, 0}, 2) == IntVec{0, 0, 0});
    CHECK(l_vector({0, 0, 0, 0, 0}, 3) == IntVec{0, 0, 0, 0, 0});
    // L_1 = d_1, L_2 = d_1+d_2, L_3 = d_3+2(d_1+d_2), L_4 = d_3-d_0+(d_1+d_2)+d_4, L_5 = d_3-d_1+(d_1+d_2)+d_4+d_5.
    CHECK(l_vector({1, 0, 2, 0, 1}, 3) == IntVec{1, 1, 4, 3, 3});
}

TEST_CASE("brute force reproduces the small worked values") {
    CHECK(std::abs(brute_force_G({0, 0, 0}, {1, 1}, 3) - std::complex<double>(1, 0)) < 1e-12);
    CHECK(std::abs(brute_force_G({1, 1, 0}, {2, 2}, 3) - std::complex<double>(4.0 / 9, 0)) < 1e-9);
    for (std::int64_t mu1 : {1, 2, 3})
        CHECK(std::abs(brute_force_G({0, 2, 0}, {mu1, 1}, 3) - std::complex<double>(2.0 / 9, 0)) < 1e-9);
    CHECK(std::abs(brute_force_G({1, 2, 1}, {1, 1}, 3) - std::complex<double>(-2.0 / 27, 0)) < 1e-9);
    CHECK(std::abs(brute_force_G({1, 3, 1}, {2, 2}, 3) - std::complex<double>(4.0 / 27, 0)) < 1e-9);
}

TEST_CASE("chain elimination, nested loops and the literal range agree") {
    int literal_cases = 0;
    for (std::int64_t p : {2, 3}) {
        for (auto& mu : all_mu(2, 2)) {
            for (std::int64_t a = 0; a <= 2; ++a)
                for (std::int64_t b = 0; b <= 3; ++b)
                    for (std::int64_t c = 0; c <= 2; ++c) {
                        IntVec d{a, b, c};
                        if (!brute_preconditions(d, mu)) continue;
                        BruteOptions naive;
                        naive.naive = true;
                        BruteOptions literal;
                        literal.literal = true;
                        auto g = brute_force_G(d, mu, p);
                        CHECK(std::abs(g - brute_force_G(d, mu, p, naive)) < 1e-9);
                        if (brute_force_terms(d, mu, p, literal) > 2'000'000) continue;
                        ++literal_cases;
                        CHECK(std::abs(g - brute_force_G(d, mu, p, literal)) < 1e-9);
                    }
        }
    }
    CHECK(literal_cases > 100);
    BruteOptions naive;
    naive.naive = true;
    IntVec d{1, 1, 2, 1, 1}, mu{2, 2, 2};
    REQUIRE(brute_preconditions(d, mu));
    CHECK(std::abs(brute_force_G(d, mu, 3) - brute_force_G(d, mu, 3, naive)) < 1e-9);
}

TEST_CASE("brute force errors") {
    CHECK_THROWS_AS(brute_force_G({0, 0, 3}, {1, 1}, 3), PreconditionError);
    BruteOptions tiny;
    tiny.budget = 10;
    CHECK_THROWS_AS(brute_force_G({2, 2, 2}, {3, 3}, 5, tiny), BudgetExceeded);
    CHECK_THROWS_AS(brute_force_G({0}, {1}, 3), std::invalid_argument);
    CHECK_THROWS_AS(brute_force_G({0, 0, 0}, {1, 1}, 4), std::invalid_argument);
    BruteOptions loose;
    loose.ignore_preconditions = true;
    CHECK_NOTHROW(brute_force_G({0, 0, 3}, {1, 1}, 3, loose));
}

TEST_CASE("flavor B decorations") {
    // c_{r+1} also meets its upper bound: d_r = mu_r + 2(d_{r-1} - d_{r+1}).
    auto a = decorate_B({0, 1, 0}, {1, 1});
    CHECK(a.entries == IntVec{1, 1, 0});
    CHECK(a.circled == std::vector<bool>{true, false, true});
    CHECK(a.boxed == std::vector<bool>{false, true, true});
    CHECK(g_delta(a).is_zero());
    CHECK(std::abs(brute_force_G({0, 1, 0}, {1, 1}, 3)) < 1e-12);
    CHECK(std::abs(brute_force_G({0, 1, 0}, {1, 1}, 5)) < 1e-12);

    auto top = decorate_B({2, 1, 2}, {2, 1});
    CHECK(top.boxed[0]);
    CHECK(top.boxed[1]);
    auto zero = decorate_B({0, 0, 0, 0, 0}, {1, 2, 1});
    CHECK(zero.circled == std::vector<bool>(5, true));
    CHECK(g_delta_B({0, 0, 0, 0, 0}, {1, 2, 1}) == one());
}

TEST_CASE("gamma products") {
    CHECK(g_delta(array_of(Flavor::B, {0, 0, 0}, {false, false, false}, {true, true, true})) == one());
    CHECK(g_delta(array_of(Flavor::B, {1, 0, 0}, {true, false, false}, {false, true, true})) == q(-1, -1));
    CHECK(g_delta(array_of(Flavor::B, {1, 0, 0}, {true, false, false}, {true, true, true})).is_zero());
    auto all_even = array_of(Flavor::C, {4, 2, 2}, {false, false, false}, {false, false, false});
    auto base = one() - q(-1);
    CHECK(g_delta(all_even) == base * base * base);
    CHECK(gamma_tilde(true, false, 3) == q_half(-1));
    CHECK(gamma_tilde(true, false, 2) == q(-1, -1));
    CHECK(gamma_tilde(false, false, 3).is_zero());
    CHECK(gamma_tilde(false, true, 3) == one());
}

TEST_CASE("closed form cases") {
    // Outside CQ_1.
    CHECK(closed_form_G({2, 0, 0}, {1, 1}) == LaurentPoly(0));
    // Inside CQ_1 with the middle inequality.
    IntVec d{1, 1, 0}, mu{2, 2};
    REQUIRE(in_cq1_le(d, mu));
    CHECK(closed_form_G(d, mu) == g_delta_B(d, mu));
    CHECK(closed_form_G(d, mu) == (one() - q(-1)) * (one() - q(-1)));
    // d_r - mu_r = 1 with d_{r-1} = d_{r+1}.
    for (std::int64_t mu1 : {1, 2, 3}) CHECK(closed_form_G({0, 2, 0}, {mu1, 1}) == (one() - q(-1)) * q(-1));
    CHECK(closed_form_G({0, 3, 0}, {1, 1}) == LaurentPoly(0));
    // The gap has no closed form.
    CHECK_FALSE(closed_form_G({1, 3, 0}, {1, 1}).has_value());
}

TEST_CASE("brute force matches the closed form at r = 2") {
    for (std::int64_t p : {2, 3}) {
        for (auto& mu : all_mu(2, 3)) {
            auto rep = prop4_check(mu, p, 3, 1e-9);
            INFO(rep.to_json().dump());
            CHECK(rep.pass());
            CHECK(rep.notes["gap_max_abs"].get<double>() < 1e-12);
        }
    }
}

TEST_CASE("brute force is independent of the inverse representatives") {
    for (auto& mu : all_mu(2, 2)) CHECK(perturbation_check(mu, 3, 2, 1e-9).pass());
    CHECK(perturbation_check({1, 2, 1}, 2, 1, 1e-9).pass());
}

TEST_CASE("flavor C decorations") {
    // Rank one under the single-count reading of the middle entry.
    for (std::int64_t m : {1, 2, 3}) {
        for (std::int64_t d1 = 0; d1 <= m; ++d1) {
            auto a = decorate_C_from_short_gt({d1}, {m}, MiddleEntry::single);
            CHECK(a.entries == IntVec{d1});
            CHECK(a.boxed[0] == (d1 == m));
            CHECK(a.circled[0] == (d1 == 0));
            CHECK(decorate_C_from_short_gt({d1}, {m}).entries == IntVec{2 * d1});
        }
    }
    // The all-maximal short pattern for mu' = (2,1).
    IntVec d{2, 1, 2};
    REQUIRE(in_cq_c(d, {2, 1}));
    auto p1 = short_gt_from_d(d, {2, 1});
    CHECK(p1.b1 == p1.a0);
    auto a = decorate_C_from_short_gt(d, {2, 1});
    CHECK(a.boxed == std::vector<bool>(3, true));
    CHECK_THROWS_AS(decorate_C_from_short_gt({3, 0, 0}, {2, 1}), PreconditionError);
    for (IntVec mp : {IntVec{2, 1}, IntVec{4, 3}, IntVec{2, 2, 1}, IntVec{4, 2, 3}}) {
        auto rep = decoration_check(mp);
        INFO(rep.to_json().dump());
        CHECK(rep.pass());
    }
}

TEST_CASE("totally resonant flavor C values") {
    CHECK(g_delta_C_resonant({0, 1}, {2, 1}).is_zero());
    CHECK(g_delta_C_resonant({1, 0}, {2, 1}).is_zero());
    CHECK(g_delta_C_resonant({0, 0}, {2, 1}) == one());
}

TEST_CASE("omega sets") {
    CHECK(omega({1, 1}, Rel::any, 2, Weighting::B, 1) == std::vector<IntVec>{{0, 1}});
    auto le = omega(tokuyama::rootdata::upsilon({1, 1}), Rel::le, 2, Weighting::A, 1);
    CHECK(std::set<IntVec>(le.begin(), le.end()) == std::set<IntVec>{{0, 1}, {1, 0}});
    CHECK(i_box({2, 1}, {2, 2}) == 2);
    CHECK(i_box({2, 2}, {2, 2}) == 0);
}

TEST_CASE("lemma 3 closed form") {
    for (std::int64_t m : {1, 2, 3}) {
        CHECK(lemma3_direct({m}, {m}).is_zero());
        CHECK(lemma3_closed({m}, {m}).is_zero());
        for (std::int64_t b = 0; b < m; ++b) {
            CHECK(lemma3_direct({b}, {m}) == q(b));
            CHECK(lemma3_closed({b}, {m}) == q(b));
        }
    }
    for (int r = 2; r <= 3; ++r)
        for (auto& mu : all_mu(r, 2)) CHECK(lemma3_check(mu).pass());
}

TEST_CASE("proposition 5 on small weights") {
    auto small = prop5_check({1, 1}, 1);
    CHECK(small.pass());
    CHECK(small.lhs == "0");
    for (int r = 2; r <= 3; ++r) {
        for (auto& mu : all_mu(r, 2)) {
            auto top = top_weight(mu);
            for (std::int64_t k = 0; k <= top + 2; ++k) {
                auto rep = prop5_check(mu, k);
                INFO(rep.to_json().dump());
                CHECK(rep.pass());
                if (k > top) CHECK(rep.lhs == "0");
            }
            auto at_top = prop5_check(mu, top);
            CHECK(at_top.rhs == q(1 - 2 * r, -1).pretty());
        }
    }
}

TEST_CASE("lemma 4 parity support") {
    // All mu' = upsilon(mu) with |mu'| <= 8.
    for (int r = 2; r <= 3; ++r) {
        for (auto& mu : all_mu(r, 3)) {
            if (total(tokuyama::rootdata::upsilon(mu)) > 8) continue;
            for (std::int64_t k = 0; k <= total(tokuyama::rootdata::upsilon(mu)) + 1; ++k) {
                auto rep = lemma4_check(mu, k);
                INFO(rep.to_json().dump());
                CHECK(rep.pass());
            }
        }
    }
}

TEST_CASE("lemmas 5 and 6 and the rho maps") {
    for (int r = 2; r <= 3; ++r) {
        for (auto& mu : all_mu(r, 2)) {
            auto top = top_weight(mu);
            for (std::int64_t k = 0; k <= top + 1; ++k) {
                auto a = lemma5_6_check(mu, k);
                INFO(a.to_json().dump());
                CHECK(a.pass());
                auto b = rho_check(mu, k);
                INFO(b.to_json().dump());
                CHECK(b.pass());
            }
        }
    }
}

TEST_CASE("component decomposition") {
    auto comps = component_decomposition({5, 5, 2}, {3, 3, 3});
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].l == 1);
    CHECK(comps[0].r == 2);
    CHECK(comps[0].b == 3);
    CHECK(comps[1].l == 3);
    CHECK(comps[1].a == 3);
    CHECK(component_decomposition({2, 2, 2}, {1, 1, 1}).size() == 1);
    CHECK(component_decomposition({4, 2, 1}, {1, 1, 1}).size() == 3);
}

TEST_CASE("psi is a bijection onto the disjoint union over xi") {
    for (int r = 2; r <= 3; ++r) {
        for (auto& mu : all_mu(r, 2)) {
            IntVec k(static_cast<std::size_t>(r), 0);
            std::function<void(int)> rec = [&](int i) {
                if (i == r) {
                    auto rep = psi_check(mu, k);
                    INFO(rep.to_json().dump());
                    CHECK(rep.pass());
                    return;
                }
                for (std::int64_t v = 0; v <= 3; ++v) {
                    k[static_cast<std::size_t>(i)] = v;
                    rec(i + 1);
                }
            };
            rec(0);
        }
    }
}

TEST_CASE("proposition 6 holds for constant and zero weights") {
    for (int r = 2; r <= 3; ++r) {
        for (auto& mu : all_mu(r, 2)) {
            auto zero = prop6_check(mu, IntVec(static_cast<std::size_t>(r), 0), 3, 1e-9);
            CHECK(zero.pass());
            CHECK(zero.rhs == "1");
            for (std::int64_t k = 1; k <= 3; ++k) {
                IntVec kv(static_cast<std::size_t>(r), k);
                auto six = prop6_check(mu, kv, 3, 1e-9);
                auto five = prop5_check(mu, k);
                INFO(six.to_json().dump());
                CHECK(six.pass());
                CHECK(six.rhs == five.rhs);
            }
        }
    }
}

TEST_CASE("proposition 6 counterexamples") {
    auto a = prop6_check({1, 1, 1}, {2, 2, 1}, 3, 1e-6);
    CHECK_FALSE(a.pass());
    CHECK(a.rhs == (q(-1) - q(-2)).pretty());
    auto b = prop6_check({1, 1, 1}, {2, 3, 3}, 5, 1e-6);
    CHECK_FALSE(b.pass());
    auto c = prop6_check({1, 1}, {1, 2}, 3, 1e-6);
    CHECK(c.verdict() == "error");
}

TEST_CASE("support lemmas for general weights have counterexamples") {
    auto k_even = general_parity_check({1, 1}, {1, 1});
    CHECK_FALSE(k_even.pass());
    CHECK(g_delta_C({0, 0, 1}, {2, 1}) == q_half(-1));
    auto odd = general_parity_check({1, 2}, {4, 3});
    CHECK_FALSE(odd.pass());
    CHECK_FALSE(g_delta_C({1, 0, 3}, tokuyama::rootdata::upsilon({1, 2})).is_zero());
}
