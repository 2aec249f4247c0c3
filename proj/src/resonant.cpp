#include "tokuyama/padic.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace tokuyama::padic {

namespace {

LaurentPoly qpoly(std::int64_t e) { return LaurentPoly::q(0, e); }
LaurentPoly one() { return LaurentPoly(0, 1); }

std::int64_t sum(const IntVec& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }

}  // namespace

IntVec totally_resonant(const IntVec& b) {
    IntVec d = b;
    for (auto it = b.rbegin() + 1; it != b.rend(); ++it) d.push_back(*it);
    return d;
}

std::int64_t k_A(const IntVec& s) { return sum(s); }

std::int64_t k_B(const IntVec& s) {
    if (s.empty()) return 0;
    return s.back() + 2 * (sum(s) - s.back());
}

namespace {

std::vector<IntVec> omega_impl(const IntVec& mu, Rel rel, int i, std::optional<std::pair<Weighting, std::int64_t>> filter) {
    int r = static_cast<int>(mu.size());
    if (i < 1 || i > r) throw std::invalid_argument("index out of range");
    std::int64_t lo = 0, hi = 0;
    auto mi = mu[static_cast<std::size_t>(i - 1)];
    bool bounded = rel == Rel::le || rel == Rel::lt || rel == Rel::eq;
    if (!bounded && !filter) throw std::invalid_argument("unbounded set needs a weighting value");
    std::int64_t cap = filter ? filter->second : 0;
    switch (rel) {
        case Rel::le: lo = 0; hi = mi; break;
        case Rel::lt: lo = 0; hi = mi - 1; break;
        case Rel::eq: lo = mi; hi = mi; break;
        case Rel::ge: lo = mi; hi = cap; break;
        case Rel::gt: lo = mi + 1; hi = cap; break;
        case Rel::any: lo = 0; hi = cap; break;
    }
    std::vector<IntVec> out;
    if (filter && filter->second < 0) return out;
    IntVec cur(static_cast<std::size_t>(r), 0);
    for (int j = i + 1; j <= r; ++j) cur[static_cast<std::size_t>(j - 1)] = mu[static_cast<std::size_t>(j - 1)];
    std::function<void(int)> rec = [&](int j) {
        if (j > i) {
            if (filter) {
                auto k = filter->first == Weighting::A ? k_A(cur) : k_B(cur);
                if (k != filter->second) return;
            }
            out.push_back(cur);
            return;
        }
        std::int64_t a = j == i ? lo : 0;
        std::int64_t b = j == i ? hi : mu[static_cast<std::size_t>(j - 1)];
        if (filter) b = std::min(b, filter->second);
        for (std::int64_t x = std::max<std::int64_t>(a, 0); x <= b; ++x) {
            cur[static_cast<std::size_t>(j - 1)] = x;
            rec(j + 1);
        }
    };
    rec(1);
    return out;
}

}  // namespace

std::vector<IntVec> omega(const IntVec& mu, Rel rel, int i, Weighting w, std::int64_t k) {
    return omega_impl(mu, rel, i, std::make_pair(w, k));
}

std::vector<IntVec> omega(const IntVec& mu, Rel rel, int i) { return omega_impl(mu, rel, i, std::nullopt); }

int i_box(const IntVec& s, const IntVec& mu) {
    for (int i = static_cast<int>(s.size()); i >= 1; --i)
        if (s[static_cast<std::size_t>(i - 1)] < mu[static_cast<std::size_t>(i - 1)]) return i;
    return 0;
}

std::vector<IntVec> omega_of(const IntVec& s, const IntVec& mu) {
    int r = static_cast<int>(mu.size());
    int ib = i_box(s, mu);
    if (ib == 0) return omega(mu, Rel::le, r);
    std::vector<IntVec> out;
    IntVec cur = s;
    std::function<void(int)> rec = [&](int j) {
        if (j > r) {
            out.push_back(cur);
            return;
        }
        for (std::int64_t x = 0; x <= s[static_cast<std::size_t>(j - 1)]; ++x) {
            cur[static_cast<std::size_t>(j - 1)] = x;
            rec(j + 1);
        }
    };
    rec(ib);
    return out;
}

LaurentPoly lemma3_direct(const IntVec& s, const IntVec& mu) {
    LaurentPoly total(0);
    for (auto& t : omega_of(s, mu)) total += g_delta_B(totally_resonant(t), mu) * qpoly(k_A(t));
    return total;
}

LaurentPoly lemma3_closed(const IntVec& s, const IntVec& mu) {
    int r = static_cast<int>(mu.size());
    int ib = i_box(s, mu);
    if (ib == 0) return LaurentPoly(0);
    IntVec prefix(s.begin(), s.begin() + ib);
    IntVec mu_prefix(mu.begin(), mu.begin() + ib);
    LaurentPoly g = g_delta_B(totally_resonant(prefix), mu_prefix) * qpoly(k_A(s) - (r - ib));
    if (s[static_cast<std::size_t>(ib - 1)] > 0) g = exactalg::div_exact(g, one() - qpoly(-1));
    return g;
}

LaurentPoly g_delta_C_resonant(const IntVec& s, const IntVec& muprime) {
    return g_delta_C(totally_resonant(s), muprime);
}

// ---- components of a weighting vector --------------------------------------

std::vector<Component> component_decomposition(const IntVec& k, const IntVec& mu) {
    int r = static_cast<int>(k.size());
    if (mu.size() != k.size() || r == 0) throw std::invalid_argument("k and mu must have equal positive length");
    auto K = [&](int i) { return k[static_cast<std::size_t>(i - 1)]; };
    auto M = [&](int i) { return mu[static_cast<std::size_t>(i - 1)]; };
    std::vector<Component> comps;
    int start = 1;
    for (int i = 1; i <= r; ++i) {
        if (i < r && K(i) == K(i + 1)) continue;
        Component c;
        c.l = start;
        c.r = i;
        c.a = c.l == 1 ? 0 : std::abs(K(c.l - 1) - K(c.l));
        c.b = c.r == r ? 0 : std::abs(K(c.r) - K(c.r + 1));
        comps.push_back(c);
        start = i + 1;
    }
    for (auto& c : comps) {
        int m = c.r - c.l + 1;
        bool rises_in = c.l > 1 && K(c.l - 1) < K(c.l);
        bool falls_out = c.r < r && K(c.r) > K(c.r + 1);
        c.mu.assign(static_cast<std::size_t>(m), 0);
        if (m >= 2) {
            c.mu[0] = rises_in ? M(c.l) - c.a : M(c.l);
            for (int i = 2; i < m; ++i) c.mu[static_cast<std::size_t>(i - 1)] = M(c.l + i - 1);
            c.mu[static_cast<std::size_t>(m - 1)] = falls_out ? M(c.r) - c.b : M(c.r);
        } else if (c.r != r) {
            c.mu[0] = M(c.r) - (falls_out ? c.b : 0) - (rises_in ? c.a : 0);
        } else {
            c.mu[0] = rises_in ? M(r) - 2 * c.a : M(r);
        }
    }
    return comps;
}

std::vector<IntVec> xi_set(const IntVec& k, const IntVec& mu) {
    auto comps = component_decomposition(k, mu);
    std::size_t h = comps.size();
    std::vector<IntVec> out;
    IntVec x(h, 0);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
        if (i + 1 == h) {
            if (left >= 0) {
                x[i] = left;
                out.push_back(x);
            }
            return;
        }
        left -= comps[i].b;
        std::int64_t cap = sum(comps[i].mu);
        for (std::int64_t xi = 0; xi <= cap && 2 * xi <= left; ++xi) {
            x[i] = xi;
            rec(i + 1, left - 2 * xi);
        }
    };
    rec(0, k[0]);
    return out;
}

std::vector<IntVec> psi_k(const IntVec& d, const std::vector<Component>& comps) {
    int r = static_cast<int>((d.size() + 1) / 2);
    auto D = [&](int i) { return d[static_cast<std::size_t>(i - 1)]; };
    std::vector<IntVec> out;
    for (auto& c : comps) {
        IntVec part;
        for (int i = c.l; i < c.r; ++i) part.push_back(D(i));
        part.push_back(std::min(D(c.r), D(2 * r - c.r)));
        out.push_back(part);
    }
    return out;
}

}  // namespace tokuyama::padic
