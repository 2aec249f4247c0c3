#include "doctest.h"
#include "support.hpp"
#include "tokuyama/rootdata.hpp"

using namespace tokuyama::rootdata;
using tokuyama::exactalg::HalfInt;
using tokuyama::exactalg::LaurentPoly;
using tokuyama::exactalg::Var;

namespace {
WeightVector wv(std::initializer_list<int> twice) {
    WeightVector w;
    for (int x : twice) w.coords.push_back(HalfInt::from_twice(x));
    return w;
}
LaurentPoly zz(int r, int i, int twice) { return LaurentPoly::z(r, i, HalfInt::from_twice(twice)); }
}  // namespace

TEST_CASE("lambda_to_evee") {
    CHECK(lambda_to_evee({3, 2}, 2) == wv({8, 2}));
    CHECK(lambda_to_evee({4, 3}, 2) == wv({11, 3}));
    CHECK(lambda_to_evee({0, 0, 0}, 3) == wv({0, 0, 0}));
}

TEST_CASE("rho and upsilon") {
    CHECK(rho(1) == wv({1}));
    CHECK(rho(2) == wv({3, 1}));
    CHECK(rho(3) == wv({5, 3, 1}));
    CHECK(upsilon({4, 3}) == IntVec{8, 3});
    CHECK(upsilon({5}) == IntVec{5});
    CHECK(upsilon({0, 0, 0}) == IntVec{0, 0, 0});
    CHECK(upsilon_inverse({8, 3}) == IntVec{4, 3});
}

TEST_CASE("signed permutations form a group with a sign character") {
    for (int r = 1; r <= 3; ++r) {
        auto all = signed_permutations(r);
        CHECK(all.size() == static_cast<std::size_t>((1 << r) * (r == 1 ? 1 : r == 2 ? 2 : 6)));
        for (const auto& a : all)
            for (const auto& b : all) CHECK(a.compose(b).sign() == a.sign() * b.sign());
        WeightVector v = rho(r);
        for (const auto& a : all)
            for (const auto& b : all) CHECK(a.apply(b.apply(v)) == a.compose(b).apply(v));
    }
}

TEST_CASE("deformed denominator") {
    auto t = LaurentPoly::t(1);
    CHECK(deformed_denominator(1) == zz(1, 1, -1) + t * zz(1, 1, 1));
    auto one = LaurentPoly(2, 1);
    auto t2 = LaurentPoly::t(2);
    auto expect = zz(2, 1, -3) * zz(2, 2, -1) * (one + t2 * zz(2, 1, 2)) * (one + t2 * zz(2, 1, 2) * zz(2, 2, -2)) *
                  (one + t2 * zz(2, 1, 2) * zz(2, 2, 2)) * (one + t2 * zz(2, 2, 2));
    CHECK(deformed_denominator(2) == expect);
    for (int r = 1; r <= 3; ++r) {
        auto at0 = substitute(deformed_denominator(r), {{Var::t(), mpq_class(0)}});
        WeightVector neg = rho(r);
        for (auto& c : neg.coords) c = -c;
        CHECK(at0 == z_power(neg));
    }
}

TEST_CASE("weyl numerator") {
    CHECK(weyl_numerator(wv({1})) == zz(1, 1, 1) - zz(1, 1, -1));
    auto col = [](int i, int twice) { return zz(2, i, twice) - zz(2, i, -twice); };
    CHECK(weyl_numerator(wv({3, 1})) == col(1, 3) * col(2, 1) - col(2, 3) * col(1, 1));
    CHECK(weyl_numerator(wv({11, 3})) == col(1, 11) * col(2, 3) - col(2, 11) * col(1, 3));
    CHECK_THROWS(weyl_numerator(wv({3, 3})));
    CHECK_THROWS(weyl_numerator(wv({1, 0})));
}

TEST_CASE("weyl numerator is antisymmetric under simple reflections") {
    for (int r = 1; r <= 3; ++r) {
        WeightVector nu = rho(r) + lambda_to_evee(IntVec(static_cast<std::size_t>(r), 1), r);
        auto n = weyl_numerator(nu);
        std::vector<SignedPermutation> simple;
        for (int i = 0; i + 1 < r; ++i) {
            auto s = SignedPermutation::identity(r);
            std::swap(s.perm[static_cast<std::size_t>(i)], s.perm[static_cast<std::size_t>(i + 1)]);
            simple.push_back(s);
        }
        auto s = SignedPermutation::identity(r);
        s.signs.back() = -1;
        simple.push_back(s);
        for (const auto& w : simple) {
            LaurentPoly moved(r);
            for (const auto& [m, c] : n.terms()) {
                auto mm = m;
                mm.zexp = w.apply(WeightVector{m.zexp}).coords;
                moved.add_term(mm, c);
            }
            CHECK(moved == -n);
        }
    }
}

TEST_CASE("characters") {
    for (int m = 0; m <= 6; ++m) {
        LaurentPoly expect(1);
        for (int j = 0; j <= m; ++j) expect += zz(1, 1, m - 2 * j);
        CHECK(character({m}, 1) == expect);
    }
    CHECK(character({0, 0}, 2) == LaurentPoly(2, 1));
    auto spin = character({0, 1}, 2);
    CHECK(tokuyama::exactalg::evaluate_rational(spin, {1, 1}, 0, 1) == 4);
}

TEST_CASE("character dimension, exact division and Weyl invariance") {
    for (int r = 1; r <= 3; ++r) {
        int bound = r == 3 ? 2 : 3;
        std::vector<std::int64_t> lam(static_cast<std::size_t>(r), 0);
        while (true) {
            auto chi = character(lam, r);  // throws on non-exact division
            std::vector<mpq_class> ones(static_cast<std::size_t>(r), 1);
            mpq_class dim = tokuyama::exactalg::evaluate_rational(chi, ones, 0, 1);
            bool small = true;
            for (auto x : lam) small = small && x <= 2;
            if (small) CHECK(dim == mpq_class(weyl_dimension(lam, r)));
            LaurentPoly inv(r);
            for (const auto& [m, c] : chi.terms()) {
                auto mm = m;
                for (auto& e : mm.zexp) e = -e;
                inv.add_term(mm, c);
            }
            CHECK(inv == chi);
            std::size_t i = 0;
            while (i < lam.size() && lam[i] == bound) lam[i++] = 0;
            if (i == lam.size()) break;
            ++lam[i];
        }
    }
}
