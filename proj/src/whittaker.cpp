#include "tokuyama/whittaker.hpp"

#include "tokuyama/gtpatterns.hpp"
#include "tokuyama/padic.hpp"
#include "tokuyama/rootdata.hpp"

#include <functional>
#include <numeric>
#include <set>

namespace tokuyama::whittaker {

namespace {

using exactalg::HalfInt;
using nlohmann::ordered_json;

LaurentPoly qpoly(HalfInt e, const exactalg::Coeff& c = 1) { return LaurentPoly::q(0, e, c); }
LaurentPoly one() { return LaurentPoly(0, 1); }

std::int64_t sum(const IntVec& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }

void check_args(const IntVec& k, const IntVec& lambda) {
    if (lambda.empty() || k.size() != lambda.size()) throw std::invalid_argument("k and lambda must have equal positive length");
    for (auto x : k)
        if (x < 0) throw std::invalid_argument("k must be nonnegative");
}

bool has_half_power(const LaurentPoly& p) {
    for (auto& [m, c] : p.terms())
        if (!m.qexp.is_integer()) return true;
    return false;
}

// Visits every vector with 0 <= v_i <= bound_i.
void for_each_in_box(const IntVec& bound, const std::function<void(const IntVec&)>& visit) {
    IntVec v(bound.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == bound.size()) {
            visit(v);
            return;
        }
        for (std::int64_t x = 0; x <= bound[i]; ++x) {
            v[i] = x;
            rec(i + 1);
        }
    };
    rec(0);
}

}  // namespace

LaurentPoly h_base(std::int64_t k, std::int64_t m) {
    if (k < 0 || m < 0) throw std::invalid_argument("h_base needs k, m >= 0");
    if (k == 0) return one();
    if (k <= m) return qpoly(k) - qpoly(k - 1);
    if (k == m + 1) return qpoly(m, -1);
    return LaurentPoly(0);
}

IntVec nu_of(const IntVec& lambda, const IntVec& kprime) {
    int r = static_cast<int>(lambda.size());
    auto L = [&](int i) { return lambda[static_cast<std::size_t>(i - 1)]; };
    auto K = [&](int i) { return kprime[static_cast<std::size_t>(i - 1)]; };
    IntVec nu;
    for (int j = 1; j <= r - 3; ++j) nu.push_back(L(j + 1) + K(j) / 2 + K(j + 2) / 2 - K(j + 1));
    if (r >= 3) nu.push_back(L(r - 1) + K(r - 2) / 2 + K(r) - K(r - 1));
    if (r >= 2) nu.push_back(L(r) + K(r - 1) - 2 * K(r));
    return nu;
}

IntVec mu_second(const IntVec& lambda, const IntVec& kprime) {
    int r = static_cast<int>(lambda.size());
    auto M = [&](int i) { return lambda[static_cast<std::size_t>(i - 1)] + 1; };
    auto K = [&](int i) { return kprime[static_cast<std::size_t>(i - 1)]; };
    IntVec mu;
    for (int j = 1; j <= r - 3; ++j) mu.push_back(2 * M(j + 1) + K(j) + K(j + 2) - 2 * K(j + 1));
    if (r >= 3) mu.push_back(2 * M(r - 1) + K(r - 2) + 2 * K(r) - 2 * K(r - 1));
    if (r >= 2) mu.push_back(M(r) + K(r - 1) - 2 * K(r));
    return mu;
}

LaurentPoly Coefficients::g_sum(const IntVec& muprime, const IntVec& kprime) {
    {
        std::shared_lock lock(mutex_);
        auto it = g_cache_.find({muprime, kprime});
        if (it != g_cache_.end()) return it->second;
        // A cached muprime with no entry for kprime has an empty sum.
        auto marker = g_cache_.find({muprime, IntVec{}});
        if (marker != g_cache_.end()) return LaurentPoly(0);
    }
    std::map<IntVec, LaurentPoly> sums;
    for (auto& t : padic::cq_c(muprime)) {
        auto g = padic::g_delta_C(t, muprime);
        if (g.is_zero()) continue;
        auto [it, fresh] = sums.try_emplace(padic::weighting_C(t), LaurentPoly(0));
        it->second += g;
    }
    std::unique_lock lock(mutex_);
    for (auto& [kv, g] : sums) g_cache_.try_emplace({muprime, kv}, g);
    g_cache_.try_emplace({muprime, IntVec{}}, LaurentPoly(0));
    auto it = g_cache_.find({muprime, kprime});
    return it == g_cache_.end() ? LaurentPoly(0) : it->second;
}

LaurentPoly Coefficients::h(const IntVec& k, const IntVec& lambda) {
    check_args(k, lambda);
    {
        std::shared_lock lock(mutex_);
        auto it = h_cache_.find({k, lambda});
        if (it != h_cache_.end()) return it->second;
    }
    LaurentPoly value = compute(k, lambda);
    std::unique_lock lock(mutex_);
    h_cache_.try_emplace({k, lambda}, value);
    return value;
}

LaurentPoly Coefficients::h_flat(const IntVec& k, const IntVec& lambda) { return h(k, lambda) * qpoly(-sum(k)); }

RecursionStats Coefficients::stats() const {
    std::shared_lock lock(mutex_);
    return stats_;
}

LaurentPoly Coefficients::compute(const IntVec& k, const IntVec& lambda) {
    int r = static_cast<int>(lambda.size());
    if (r == 1) return h_base(k[0], lambda[0]);
    auto muprime = rootdata::upsilon(rootdata::shift_rho(lambda));
    auto K = rootdata::upsilon(k);
    RecursionStats local;
    LaurentPoly total(0);
    // k'_1 = K_1; k'_i + k''_{i-1} = K_i for i >= 2.
    IntVec kprime(static_cast<std::size_t>(r), 0);
    kprime[0] = K[0];
    std::function<void(int)> rec = [&](int i) {
        if (i > r) {
            ++local.steps;
            IntVec ksecond;
            for (int j = 2; j <= r; ++j)
                ksecond.push_back(K[static_cast<std::size_t>(j - 1)] - kprime[static_cast<std::size_t>(j - 1)]);
            bool even = true;
            for (int j = 1; j < r; ++j) even = even && kprime[static_cast<std::size_t>(j - 1)] % 2 == 0;
            LaurentPoly g = g_sum(muprime, kprime);
            if (!even) {
                ++local.odd_kprime;
                if (!g.is_zero()) ++local.odd_kprime_nonzero_g;
                return;
            }
            auto nu = nu_of(lambda, kprime);
            IntVec nu_rho = nu;
            for (auto& x : nu_rho) x += 1;
            if (mu_second(lambda, kprime) != rootdata::upsilon(nu_rho)) ++local.mu_identity_failures;
            bool negative = false;
            for (auto x : nu) negative = negative || x < 0;
            if (negative) {
                ++local.negative_nu;
                if (!g.is_zero()) ++local.negative_nu_nonzero_g;
                return;
            }
            if (g.is_zero()) return;
            std::int64_t half = 0;
            for (int j = 1; j < r; ++j) half += kprime[static_cast<std::size_t>(j - 1)];
            auto inner = h(rootdata::upsilon_inverse(ksecond), nu);
            if (inner.is_zero()) return;
            total += qpoly(kprime.back() + half / 2) * g * inner;
            return;
        }
        auto cap = K[static_cast<std::size_t>(i - 1)];
        for (std::int64_t x = 0; x <= cap; ++x) {
            kprime[static_cast<std::size_t>(i - 1)] = x;
            rec(i + 1);
        }
    };
    rec(2);
    std::unique_lock lock(mutex_);
    stats_.steps += local.steps;
    stats_.negative_nu += local.negative_nu;
    stats_.negative_nu_nonzero_g += local.negative_nu_nonzero_g;
    stats_.odd_kprime += local.odd_kprime;
    stats_.odd_kprime_nonzero_g += local.odd_kprime_nonzero_g;
    stats_.mu_identity_failures += local.mu_identity_failures;
    return total;
}

Coefficients& shared_table() {
    static Coefficients table;
    return table;
}

LaurentPoly h_recursive(const IntVec& k, const IntVec& lambda) { return shared_table().h(k, lambda); }
LaurentPoly h_flat(const IntVec& k, const IntVec& lambda) { return shared_table().h_flat(k, lambda); }

IntVec support_box(const IntVec& lambda) {
    auto top = gtpatterns::top_row(rootdata::upsilon(rootdata::shift_rho(lambda)));
    IntVec box;
    std::int64_t acc = 0;
    for (auto a : top) box.push_back(acc += a);
    return box;
}

namespace {

void check_rank(const IntVec& lambda, int r) {
    if (r < 1 || lambda.size() != static_cast<std::size_t>(r)) throw std::invalid_argument("lambda must have r entries, r >= 1");
    for (auto x : lambda)
        if (x < 0) throw std::invalid_argument("lambda must be dominant");
}

// k from the z-exponents e_i = k_i - k_{i-1} - a_{0,i}/2, given as twice their value.
IntVec k_from_twice_exponents(const IntVec& twice_e, const IntVec& top) {
    IntVec k;
    std::int64_t prev = 0;
    for (std::size_t i = 0; i < top.size(); ++i) {
        std::int64_t twice_k = twice_e[i] + top[i] + 2 * prev;
        if (twice_k % 2 != 0) return {};
        prev = twice_k / 2;
        k.push_back(prev);
    }
    return k;
}

void record_stats(cli::Report& rep, const RecursionStats& before, const RecursionStats& after) {
    rep.notes["recursion_steps"] = after.steps - before.steps;
    rep.notes["negative_nu"] = after.negative_nu - before.negative_nu;
    rep.notes["negative_nu_nonzero_g"] = after.negative_nu_nonzero_g - before.negative_nu_nonzero_g;
    rep.notes["odd_kprime"] = after.odd_kprime - before.odd_kprime;
    rep.notes["odd_kprime_nonzero_g"] = after.odd_kprime_nonzero_g - before.odd_kprime_nonzero_g;
    rep.notes["mu_identity_failures"] = after.mu_identity_failures - before.mu_identity_failures;
    if (after.mu_identity_failures != before.mu_identity_failures)
        rep.mismatches.push_back({{"mu_identity_failures", after.mu_identity_failures - before.mu_identity_failures}});
}

}  // namespace

cli::Report gh_check(const IntVec& lambda, int r) {
    cli::Report rep;
    cli::Stopwatch sw(rep);
    rep.claim = "gh";
    rep.params = {{"lambda", lambda}, {"rank", r}};
    check_rank(lambda, r);
    Coefficients table;
    auto muprime = rootdata::upsilon(rootdata::shift_rho(lambda));
    auto top = gtpatterns::top_row(muprime);
    auto minus_inv_q = qpoly(-1, -1);

    // GT° side grouped by k.
    std::map<IntVec, LaurentPoly> pattern_side;
    std::int64_t patterns = 0;
    gtpatterns::for_each_strict(muprime, [&](const gtpatterns::GTPattern& p) {
        if (!gtpatterns::in_gt_circle(p, muprime.back())) return;
        ++patterns;
        IntVec twice_e = gtpatterns::wt(p);
        for (auto& x : twice_e) x = -x;
        auto k = k_from_twice_exponents(twice_e, top);
        if (k.empty()) {
            rep.mismatches.push_back({{"pattern", p.str()}, {"weight_parity", "odd"}});
            return;
        }
        auto g = exactalg::substitute(gtpatterns::g_weight(p, 0), {{exactalg::Var::t(), minus_inv_q}});
        auto [it, fresh] = pattern_side.try_emplace(k, LaurentPoly(0));
        it->second += g;
    });

    auto box = support_box(lambda);
    std::int64_t compared = 0, nonzero = 0, half_powers = 0;
    std::set<IntVec> seen;
    auto compare = [&](const IntVec& k) {
        ++compared;
        auto lhs = table.h_flat(k, lambda);
        if (has_half_power(lhs)) ++half_powers;
        auto it = pattern_side.find(k);
        LaurentPoly rhs = it == pattern_side.end() ? LaurentPoly(0) : it->second;
        if (!lhs.is_zero()) ++nonzero;
        if (!(lhs == rhs) && rep.mismatches.size() < 50)
            rep.mismatches.push_back({{"k", k}, {"h_flat", lhs.is_zero() ? "0" : lhs.pretty()},
                                      {"gt_sum", rhs.is_zero() ? "0" : rhs.pretty()}});
    };
    for_each_in_box(box, [&](const IntVec& k) {
        seen.insert(k);
        compare(k);
    });
    for (auto& [k, g] : pattern_side)
        if (!seen.count(k)) {
            rep.mismatches.push_back({{"k", k}, {"outside_box", true}});
            compare(k);
        }
    if (half_powers > 0) rep.mismatches.push_back({{"half_powers", half_powers}});
    rep.lhs = "H-flat";
    rep.rhs = "GT° sum at t=-q^-1";
    rep.notes = {{"patterns", patterns}, {"k_compared", compared}, {"k_nonzero", nonzero}};
    record_stats(rep, RecursionStats{}, table.stats());
    return rep;
}

cli::Report prop3_check(const IntVec& lambda, int r) {
    cli::Report rep;
    cli::Stopwatch sw(rep);
    rep.claim = "prop3";
    rep.params = {{"lambda", lambda}, {"rank", r}};
    check_rank(lambda, r);
    Coefficients table;
    auto muprime = rootdata::upsilon(rootdata::shift_rho(lambda));
    auto top = gtpatterns::top_row(muprime);

    auto product = rootdata::deformed_denominator(r) * rootdata::character(lambda, r);
    auto lhs = exactalg::substitute(product, {{exactalg::Var::t(), LaurentPoly::q(r, -1, -1)}});

    LaurentPoly rhs(r);
    std::int64_t nonzero = 0;
    for_each_in_box(support_box(lambda), [&](const IntVec& k) {
        auto h = table.h_flat(k, lambda);
        if (h.is_zero()) return;
        ++nonzero;
        exactalg::Monomial m(r);
        std::int64_t prev = 0;
        for (int i = 0; i < r; ++i) {
            auto ki = k[static_cast<std::size_t>(i)];
            m.zexp[static_cast<std::size_t>(i)] = HalfInt::from_twice(2 * (ki - prev) - top[static_cast<std::size_t>(i)]);
            prev = ki;
        }
        for (auto& [qm, c] : h.terms()) {
            exactalg::Monomial term = m;
            term.qexp = qm.qexp;
            rhs.add_term(term, c);
        }
    });
    // Monomials of the left side whose k falls outside the box.
    for (auto& [m, c] : lhs.terms()) {
        IntVec twice_e;
        for (auto& e : m.zexp) twice_e.push_back(e.twice());
        auto k = k_from_twice_exponents(twice_e, top);
        auto box = support_box(lambda);
        bool inside = !k.empty();
        for (std::size_t i = 0; inside && i < k.size(); ++i) inside = k[i] >= 0 && k[i] <= box[i];
        if (!inside && rep.mismatches.size() < 50) rep.mismatches.push_back({{"outside_box", twice_e}});
    }
    auto diff = lhs - rhs;
    std::int64_t shown = 0;
    for (auto& [m, c] : diff.terms()) {
        if (shown++ >= 20) break;
        IntVec twice_e;
        for (auto& e : m.zexp) twice_e.push_back(e.twice());
        rep.mismatches.push_back({{"twice_z_exponent", twice_e}, {"q_exponent", m.qexp.str()},
                                  {"lhs", lhs.coeff(m).get_str()}, {"rhs", rhs.coeff(m).get_str()}});
    }
    rep.lhs = "D_B(z;-q^-1) chi_lambda";
    rep.rhs = "sum_k H-flat z^...";
    rep.notes = {{"lhs_terms", lhs.size()}, {"rhs_terms", rhs.size()}, {"k_nonzero", nonzero},
                 {"difference_terms", diff.size()}};
    record_stats(rep, RecursionStats{}, table.stats());
    return rep;
}

}  // namespace tokuyama::whittaker
