#include "tokuyama/padic.hpp"

#include "tokuyama/rootdata.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace tokuyama::padic {

namespace {

using nlohmann::ordered_json;

double at(const LaurentPoly& g, std::int64_t p) { return exactalg::evaluate_q(g, static_cast<double>(p)); }

std::string num(std::complex<double> z) {
    std::ostringstream os;
    os.precision(15);
    os << z.real();
    if (std::abs(z.imag()) > 0) os << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return os.str();
}

std::string poly_text(const LaurentPoly& g) { return g.is_zero() ? "0" : g.pretty(); }

void for_each_box(int n, std::int64_t hi, const std::function<void(const IntVec&)>& visit) {
    IntVec cur(static_cast<std::size_t>(n), 0);
    std::function<void(int)> rec = [&](int j) {
        if (j == n) {
            visit(cur);
            return;
        }
        for (std::int64_t x = 0; x <= hi; ++x) {
            cur[static_cast<std::size_t>(j)] = x;
            rec(j + 1);
        }
    };
    rec(0);
}

IntVec mu_t(const IntVec& mu) { return IntVec(mu.begin(), mu.end() - 1); }

}  // namespace

cli::Report prop4_check(const IntVec& mu, std::int64_t p, std::int64_t dmax, double tol, std::uint64_t budget) {
    cli::Report rep;
    cli::Stopwatch sw(rep);
    rep.claim = "prop4";
    rep.params = {{"mu", mu}, {"p", p}, {"dmax", dmax}, {"tol", tol}, {"budget", budget}};
    int r = static_cast<int>(mu.size());
    std::int64_t instances = 0, compared = 0, gap = 0, skipped = 0;
    double max_err = 0, gap_max = 0;
    std::vector<ordered_json> gap_nonzero;
    BruteOptions opt;
    opt.budget = budget;
    for_each_box(2 * r - 1, dmax, [&](const IntVec& d) {
        if (!brute_preconditions(d, mu)) return;
        ++instances;
        std::complex<double> g;
        try {
            g = brute_force_G(d, mu, p, opt);
        } catch (const BudgetExceeded&) {
            ++skipped;
            return;
        }
        auto closed = closed_form_G(d, mu);
        if (!closed) {
            ++gap;
            gap_max = std::max(gap_max, std::abs(g));
            if (std::abs(g) > tol && gap_nonzero.size() < 20) gap_nonzero.push_back({{"d", d}, {"G", num(g)}});
            return;
        }
        ++compared;
        double expect = at(*closed, p);
        double err = std::abs(g - std::complex<double>(expect, 0));
        max_err = std::max(max_err, err);
        if (err > tol && rep.mismatches.size() < 50)
            rep.mismatches.push_back({{"d", d}, {"brute", num(g)}, {"closed", poly_text(*closed)}, {"abs_err", err}});
    });
    rep.lhs = "brute force";
    rep.rhs = "closed form";
    rep.notes = {{"instances", instances}, {"compared", compared}, {"abs_err", max_err},
                 {"gap_instances", gap},   {"gap_max_abs", gap_max}, {"gap_nonzero", gap_nonzero},
                 {"skipped_budget", skipped}};
    if (skipped > 0) rep.error = std::to_string(skipped) + " instances exceeded the budget";
    return rep;
}

cli::Report perturbation_check(const IntVec& mu, std::int64_t p, std::int64_t dmax, double tol, std::uint64_t budget) {
    cli::Report rep;
    cli::Stopwatch sw(rep);
    rep.claim = "perturbation";
    rep.params = {{"mu", mu}, {"p", p}, {"dmax", dmax}, {"tol", tol}};
    int r = static_cast<int>(mu.size());
    std::int64_t instances = 0, skipped = 0;
    double max_err = 0;
    for_each_box(2 * r - 1, dmax, [&](const IntVec& d) {
        if (!brute_preconditions(d, mu)) return;
        BruteOptions opt;
        opt.budget = budget;
        try {
            auto base = brute_force_G(d, mu, p, opt);
            for (int w : {1, 2}) {
                opt.perturb = w;
                auto moved = brute_force_G(d, mu, p, opt);
                double err = std::abs(moved - base);
                max_err = std::max(max_err, err);
                if (err > tol && rep.mismatches.size() < 50)
                    rep.mismatches.push_back({{"d", d}, {"w", w}, {"base", num(base)}, {"perturbed", num(moved)}});
            }
            ++instances;
        } catch (const BudgetExceeded&) {
            ++skipped;
        }
    });
    rep.notes = {{"instances", instances}, {"abs_err", max_err}, {"skipped_budget", skipped}};
    if (skipped > 0) rep.error = std::to_string(skipped) + " instances exceeded the budget";
    return rep;
}

cli::Report lemma3_check(const IntVec& mu) {
    cli::Report rep;
    cli::Stopwatch sw(rep);
    rep.claim = "lemma3";
    rep.params = {{"mu", mu}};
    int r = static_cast<int>(mu.size());
    std::int64_t n = 0;
    for (auto& s : omega(mu, Rel::le, r)) {
        ++n;
        auto direct = lemma3_direct(s, mu);
        auto closed = lemma3_closed(s, mu);
        if (!(direct == closed))
            rep.mismatches.push_back({{"s", s}, {"direct", poly_text(direct)}, {"closed", poly_text(closed)}});
    }
    rep.notes = {{"patterns", n}};
    return rep;
}

cli::Report prop5_check(const IntVec& mu, std::int64_t k_r) {
    cli::Report rep;
    cli::Stopwatch sw(rep);
    rep.claim = "prop5";
    rep.params = {{"mu", mu}, {"k_r", k_r}};
    int r = static_cast<int>(mu.size());
    auto muprime = rootdata::upsilon(mu);
    LaurentPoly lhs(0), rhs(0);
    std::int64_t nl = 0, nr = 0;
    for (auto& t : omega(mu, Rel::any, r, Weighting::B, k_r)) {
        auto g = closed_form_G(totally_resonant(t), mu);
        if (!g) {
            rep.error = "closed form undefined on a totally resonant pattern";
            return rep;
        }
        lhs += *g;
        ++nl;
    }
    for (auto& s : omega(muprime, Rel::le, r, Weighting::A, k_r)) {
        rhs += g_delta_C_resonant(s, muprime);
        ++nr;
    }
    rep.lhs = poly_text(lhs);
    rep.rhs = poly_text(rhs);
    if (!(lhs == rhs)) rep.mismatches.push_back({{"lhs", rep.lhs}, {"rhs", rep.rhs}});
    std::int64_t top = mu.back();
    for (int i = 0; i + 1 < r; ++i) top += 2 * mu[static_cast<std::size_t>(i)];
    rep.notes = {{"lhs_terms", nl}, {"rhs_terms", nr}, {"top", top},
                 {"regime", k_r > top ? "above" : (k_r == top ? "top" : ((k_r - top) % 2 == 0 ? "even" : "odd"))}};
    return rep;
}

cli::Report prop6_check(const IntVec& mu, const IntVec& k, std::int64_t p, double tol, std::uint64_t budget) {
    cli::Report rep;
    cli::Stopwatch sw(rep);
    rep.claim = "prop6";
    rep.params = {{"mu", mu}, {"k", k}, {"p", p}, {"tol", tol}};
    auto muprime = rootdata::upsilon(mu);
    auto kprime = rootdata::upsilon(k);
    std::complex<double> lhs = 0;
    std::int64_t nl = 0, gap_terms = 0;
    BruteOptions opt;
    opt.budget = budget;
    for (auto& t : cq1_with_weighting(mu, k)) {
        ++nl;
        auto g = closed_form_G(t, mu);
        if (g) {
            lhs += at(*g, p);
            continue;
        }
        ++gap_terms;
        try {
            lhs += brute_force_G(t, mu, p, opt);
        } catch (const BudgetExceeded& e) {
            rep.error = std::string("gap pattern exceeded the budget: ") + e.what();
            rep.notes = {{"pattern", t}, {"budget_exceeded", true}};
            return rep;
        } catch (const std::exception& e) {
            rep.error = std::string("gap pattern could not be summed: ") + e.what();
            rep.notes = {{"pattern", t}};
            return rep;
        }
    }
    LaurentPoly rhs(0);
    std::int64_t nr = 0;
    for (auto& t : cq_c_with_weighting(muprime, kprime)) {
        rhs += g_delta_C(t, muprime);
        ++nr;
    }
    double rv = at(rhs, p);
    double err = std::abs(lhs - std::complex<double>(rv, 0));
    rep.lhs = num(lhs);
    rep.rhs = poly_text(rhs);
    if (err > tol) rep.mismatches.push_back({{"lhs", num(lhs)}, {"rhs", rv}, {"abs_err", err}});
    rep.notes = {{"lhs_terms", nl}, {"gap_terms", gap_terms}, {"rhs_terms", nr}, {"rhs_value", rv}, {"abs_err", err}};
    return rep;
}

cli::Report lemma4_check(const IntVec& mu, std::int64_t k) {
    cli::Report rep;
    cli::Stopwatch sw(rep);
    rep.claim = "lemma4";
    rep.params = {{"mu", mu}, {"k", k}};
    int r = static_cast<int>(mu.size());
    auto muprime = rootdata::upsilon(mu);
    std::int64_t mu_r = mu.back(), n = 0, nonzero = 0;
    for (auto& s : omega(muprime, Rel::any, r, Weighting::A, k)) {
        ++n;
        if (g_delta_C_resonant(s, muprime).is_zero()) continue;
        ++nonzero;
        auto b_r = s.back();
        bool ok = true;
        if (b_r < mu_r) {
            for (int i = 0; i + 1 < r; ++i) ok = ok && s[static_cast<std::size_t>(i)] % 2 == 0;
        } else if (b_r == mu_r) {
            int ib = i_box(s, muprime);
            for (int i = 1; i < r; ++i) {
                auto b = s[static_cast<std::size_t>(i - 1)];
                if (i == ib)
                    ok = ok && ((b - (k - mu_r)) % 2 == 0);
                else
                    ok = ok && b % 2 == 0;
            }
        }
        if (!ok) rep.mismatches.push_back({{"s", s}});
    }
    rep.notes = {{"patterns", n}, {"nonzero", nonzero}};
    return rep;
}

cli::Report lemma5_6_check(const IntVec& mu, std::int64_t k_r) {
    cli::Report rep;
    cli::Stopwatch sw(rep);
    rep.claim = "lemma5_6";
    rep.params = {{"mu", mu}, {"k_r", k_r}};
    int r = static_cast<int>(mu.size());

    // Pairwise disjointness over Omega^<=_A(mu, k_r).
    auto level = omega(mu, Rel::le, r, Weighting::A, k_r);
    std::map<IntVec, IntVec> owner;
    for (auto& s : level)
        for (auto& x : omega_of(s, mu)) {
            auto [it, fresh] = owner.emplace(x, s);
            if (!fresh) rep.mismatches.push_back({{"lemma", "disjoint"}, {"x", x}, {"s", it->second}, {"t", s}});
        }

    std::int64_t top = mu.back();
    for (int i = 0; i + 1 < r; ++i) top += 2 * mu[static_cast<std::size_t>(i)];
    std::int64_t blocks = 0;
    bool applies = r >= 2 && k_r < top && (k_r - mu.back()) % 2 != 0 && k_r > mu.back();
    if (applies) {
        auto muT = mu_t(mu);
        std::int64_t kcirc = (k_r - mu.back() - 1) / 2;
        auto muprime = rootdata::upsilon(mu);
        std::set<IntVec> covered;
        for (auto& s : omega(muT, Rel::le, r - 1, Weighting::A, kcirc)) {
            ++blocks;
            LaurentPoly block_sum(0);
            for (auto& sp : omega_of(s, muT)) {
                IntVec t = sp;
                t.push_back(k_r - 2 * k_A(sp));
                if (t.back() <= mu.back()) continue;
                if (!covered.insert(t).second) rep.mismatches.push_back({{"lemma", "partition"}, {"repeated", t}});
                auto g = closed_form_G(totally_resonant(t), mu);
                block_sum += g ? *g : LaurentPoly(0);
            }
            // The block sum equals G_{Delta_C} at the preimage of s.
            IntVec pre;
            int ib = i_box(s, muT);
            for (int i = 1; i < r; ++i) pre.push_back(2 * s[static_cast<std::size_t>(i - 1)] + (i == ib ? 1 : 0));
            pre.push_back(mu.back());
            auto gc = g_delta_C_resonant(pre, muprime);
            if (!(gc == block_sum))
                rep.mismatches.push_back({{"lemma", "block"}, {"s", s}, {"block", poly_text(block_sum)},
                                          {"g_delta_c", poly_text(gc)}});
        }
        std::set<IntVec> target;
        for (auto& t : omega(mu, Rel::gt, r, Weighting::B, k_r)) target.insert(t);
        if (target != covered)
            rep.mismatches.push_back({{"lemma", "partition"}, {"target", target.size()}, {"covered", covered.size()}});
    }
    rep.notes = {{"level_size", level.size()}, {"partition_applies", applies}, {"blocks", blocks}};
    return rep;
}

cli::Report rho_check(const IntVec& mu, std::int64_t k_r) {
    cli::Report rep;
    cli::Stopwatch sw(rep);
    rep.claim = "rho";
    rep.params = {{"mu", mu}, {"k_r", k_r}};
    int r = static_cast<int>(mu.size());
    auto muprime = rootdata::upsilon(mu);
    std::int64_t mu_r = mu.back();
    std::int64_t top = mu_r;
    for (int i = 0; i + 1 < r; ++i) top += 2 * mu[static_cast<std::size_t>(i)];
    bool odd = (k_r - mu_r) % 2 != 0;
    auto even_below_r = [&](const IntVec& s, int skip) {
        for (int i = 1; i < r; ++i)
            if (i != skip && s[static_cast<std::size_t>(i - 1)] % 2 != 0) return false;
        return true;
    };
    auto check_bijection = [&](const std::string& name, const std::vector<IntVec>& domain,
                               const std::function<IntVec(const IntVec&)>& map, const std::vector<IntVec>& codomain,
                               bool compare_g) {
        std::set<IntVec> image, target(codomain.begin(), codomain.end());
        for (auto& s : domain) {
            auto t = map(s);
            if (!target.count(t)) rep.mismatches.push_back({{"map", name}, {"outside", s}});
            if (!image.insert(t).second) rep.mismatches.push_back({{"map", name}, {"not_injective", s}});
            if (compare_g) {
                auto gc = g_delta_C_resonant(s, muprime);
                auto gb = g_delta_B(totally_resonant(t), mu);
                if (!(gc == gb))
                    rep.mismatches.push_back({{"map", name}, {"s", s}, {"g_c", poly_text(gc)}, {"g_b", poly_text(gb)}});
            }
        }
        if (image != target)
            rep.mismatches.push_back({{"map", name}, {"image", image.size()}, {"target", target.size()}});
    };
    auto le_level = omega(muprime, Rel::le, r, Weighting::A, k_r);
    std::vector<IntVec> eq_box, lt_box, le_even;
    for (auto& s : le_level) {
        int ib = i_box(s, muprime);
        if (s.back() == mu_r && ib > 0 && ib < r &&
            (s[static_cast<std::size_t>(ib - 1)] + k_r - mu_r) % 2 == 0 && even_below_r(s, ib))
            eq_box.push_back(s);
        if (s.back() < mu_r && (k_r - s.back()) % 2 == 0 && even_below_r(s, 0)) lt_box.push_back(s);
        if (even_below_r(s, 0)) le_even.push_back(s);
    }
    auto halve = [&](const IntVec& s) {
        IntVec t = s;
        for (int i = 0; i + 1 < r; ++i) t[static_cast<std::size_t>(i)] /= 2;
        return t;
    };
    std::string regime = "none";
    if (k_r < top && odd && r >= 2) {
        regime = "odd";
        std::int64_t kcirc = (k_r - mu_r - 1) / 2;
        auto rho_eq = [&](const IntVec& s) {
            int ib = i_box(s, muprime);
            IntVec t;
            for (int i = 1; i < r; ++i) {
                auto b = s[static_cast<std::size_t>(i - 1)];
                t.push_back(i == ib ? (b - 1) / 2 : b / 2);
            }
            return t;
        };
        check_bijection("rho_eq", eq_box, rho_eq, omega(mu_t(mu), Rel::le, r - 1, Weighting::A, kcirc), false);
        check_bijection("rho_lt", lt_box, halve, omega(mu, Rel::lt, r, Weighting::B, k_r), true);
        // Outside the two boxed sets G_{Delta_C} vanishes.
        std::set<IntVec> boxed(eq_box.begin(), eq_box.end());
        boxed.insert(lt_box.begin(), lt_box.end());
        for (auto& s : le_level)
            if (!boxed.count(s) && !g_delta_C_resonant(s, muprime).is_zero())
                rep.mismatches.push_back({{"support", s}});
    } else if (k_r <= top && !odd) {
        regime = "even";
        check_bijection("rho_prime", le_even, halve, omega(mu, Rel::le, r, Weighting::B, k_r), true);
    }
    rep.notes = {{"regime", regime}, {"eq_box", eq_box.size()}, {"lt_box", lt_box.size()}, {"le_even", le_even.size()}};
    return rep;
}

cli::Report general_parity_check(const IntVec& mu, const IntVec& kprime) {
    cli::Report rep;
    cli::Stopwatch sw(rep);
    rep.claim = "general_parity";
    rep.params = {{"mu", mu}, {"kprime", kprime}};
    int r = static_cast<int>(mu.size());
    auto muprime = rootdata::upsilon(mu);
    bool leading_even = true;
    for (int i = 0; i + 1 < r; ++i) leading_even = leading_even && kprime[static_cast<std::size_t>(i)] % 2 == 0;
    int l_h = 1;
    if (leading_even) {
        auto comps = component_decomposition(rootdata::upsilon_inverse(kprime), mu);
        l_h = comps.back().l;
    }
    std::int64_t n = 0, nonzero = 0;
    for (auto& t : cq_c_with_weighting(muprime, kprime)) {
        ++n;
        if (g_delta_C(t, muprime).is_zero()) continue;
        ++nonzero;
        if (!leading_even) {
            rep.mismatches.push_back({{"lemma", "k_even"}, {"t", t}});
            continue;
        }
        for (int i = 1; i < l_h; ++i)
            if (t[static_cast<std::size_t>(i - 1)] % 2 != 0 || t[static_cast<std::size_t>(2 * r - i - 1)] % 2 != 0)
                rep.mismatches.push_back({{"lemma", "odd_parity"}, {"t", t}, {"i", i}});
    }
    rep.notes = {{"patterns", n}, {"nonzero", nonzero}, {"l_h", l_h}};
    return rep;
}

cli::Report psi_check(const IntVec& mu, const IntVec& k) {
    cli::Report rep;
    cli::Stopwatch sw(rep);
    rep.claim = "psi";
    rep.params = {{"mu", mu}, {"k", k}};
    auto comps = component_decomposition(k, mu);
    std::size_t h = comps.size();
    auto xis = xi_set(k, mu);
    std::set<IntVec> xi_lookup(xis.begin(), xis.end());

    auto le = [](const IntVec& a, const IntVec& b, std::size_t n) {
        for (std::size_t i = 0; i < n; ++i)
            if (a[i] < 0 || a[i] > b[i]) return false;
        return true;
    };
    auto in_target = [&](const std::vector<IntVec>& parts, bool restricted) {
        for (std::size_t i = 0; i < h; ++i) {
            const auto& m = comps[i].mu;
            bool last = i + 1 == h;
            std::size_t n = last && !restricted ? m.size() - 1 : m.size();
            if (!le(parts[i], m, n)) return false;
            if (last && parts[i].back() < 0) return false;
        }
        return true;
    };

    std::set<std::vector<IntVec>> image;
    std::int64_t domain = 0, domain_le = 0;
    for (auto& t : cq1_with_weighting(mu, k)) {
        ++domain;
        bool le_member = in_cq1_le(t, mu);
        domain_le += le_member ? 1 : 0;
        auto parts = psi_k(t, comps);
        IntVec x;
        for (std::size_t i = 0; i + 1 < h; ++i) x.push_back(k_A(parts[i]));
        x.push_back(k_B(parts.back()));
        if (!xi_lookup.count(x)) rep.mismatches.push_back({{"t", t}, {"x_outside_xi", x}});
        if (!in_target(parts, false)) rep.mismatches.push_back({{"t", t}, {"outside_target", true}});
        if (in_target(parts, true) != le_member) rep.mismatches.push_back({{"t", t}, {"restriction", le_member}});
        if (!image.insert(parts).second) rep.mismatches.push_back({{"t", t}, {"not_injective", true}});
    }

    // Size of the disjoint union over Xi_k.
    std::int64_t target = 0, target_le = 0;
    for (auto& x : xis) {
        std::int64_t prod = 1, prod_le = 1;
        for (std::size_t i = 0; i + 1 < h; ++i) {
            auto n = static_cast<std::int64_t>(
                omega(comps[i].mu, Rel::le, static_cast<int>(comps[i].mu.size()), Weighting::A, x[i]).size());
            prod *= n;
            prod_le *= n;
        }
        const auto& mh = comps.back().mu;
        int m = static_cast<int>(mh.size());
        bool valid = std::all_of(mh.begin(), mh.end() - 1, [](std::int64_t v) { return v >= 0; });
        prod *= valid ? static_cast<std::int64_t>(omega(mh, Rel::any, m, Weighting::B, x.back()).size()) : 0;
        prod_le *= valid && mh.back() >= 0 ? static_cast<std::int64_t>(omega(mh, Rel::le, m, Weighting::B, x.back()).size()) : 0;
        target += prod;
        target_le += prod_le;
    }
    if (target != domain) rep.mismatches.push_back({{"domain", domain}, {"target", target}});
    if (target_le != domain_le) rep.mismatches.push_back({{"domain_le", domain_le}, {"target_le", target_le}});
    ordered_json cj = ordered_json::array();
    for (auto& c : comps) cj.push_back({{"l", c.l}, {"r", c.r}, {"a", c.a}, {"b", c.b}, {"mu", c.mu}});
    rep.notes = {{"components", cj}, {"xi", xis.size()}, {"domain", domain}, {"target", target},
                 {"domain_le", domain_le}, {"target_le", target_le}};
    return rep;
}

cli::Report decoration_check(const IntVec& muprime) {
    cli::Report rep;
    cli::Stopwatch sw(rep);
    rep.claim = "decorations";
    rep.params = {{"muprime", muprime}};
    int r = static_cast<int>(muprime.size());
    std::int64_t n = 0, weights = 0, non_strict = 0, non_strict_nonzero = 0;
    auto minus_inv_q = LaurentPoly::q(0, -1, -1);
    for (auto& t : cq_c(muprime)) {
        ++n;
        auto lit = decorate_C(t, muprime);
        auto pulled = decorate_C_from_short_gt(t, muprime);
        if (!(lit == pulled)) rep.mismatches.push_back({{"t", t}, {"decorations", "differ"}});
        auto p1 = short_gt_from_d(t, muprime);
        if (d_from_short_gt(p1) != t) rep.mismatches.push_back({{"t", t}, {"round_trip", false}});
        auto view = p1.as_rows();
        bool generic_even = true;
        int max1 = 0;
        auto visit = [&](std::size_t at, const gtpatterns::Entry& e) {
            auto c = gtpatterns::c_stat(view, e);
            if ((c - lit.entries[at]) % 2 != 0) rep.mismatches.push_back({{"t", t}, {"parity", e.name()}});
            auto cls = gtpatterns::classify(view, e);
            if (cls == gtpatterns::EntryClass::generic && c % 2 != 0) generic_even = false;
            if (cls == gtpatterns::EntryClass::maximal && c % 2 != 0) ++max1;
        };
        for (int j = 1; j <= r; ++j) visit(static_cast<std::size_t>(j - 1), {true, 1, j});
        for (int j = 1; j < r; ++j) visit(static_cast<std::size_t>(2 * r - j - 1), {false, 1, j + 1});
        auto gc = g_delta(lit);
        if (!p1.is_valid()) {
            ++non_strict;
            if (!gc.is_zero()) ++non_strict_nonzero;
            continue;
        }
        if (!generic_even) {
            if (!gc.is_zero()) rep.mismatches.push_back({{"t", t}, {"odd_generic_nonzero", poly_text(gc)}});
        } else if (max1 % 2 == 0) {
            ++weights;
            auto w = exactalg::substitute(gtpatterns::short_g_weight(p1, 0), {{exactalg::Var::t(), minus_inv_q}});
            if (!(w == gc)) rep.mismatches.push_back({{"t", t}, {"g_weight", poly_text(w)}, {"g_delta_c", poly_text(gc)}});
        }
    }
    rep.notes = {{"patterns", n}, {"weights_compared", weights}, {"non_strict", non_strict},
                 {"non_strict_nonzero", non_strict_nonzero}};
    return rep;
}

}  // namespace tokuyama::padic
