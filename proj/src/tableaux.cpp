#include "tokuyama/tableaux.hpp"

#include "tokuyama/rootdata.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace tokuyama::tableaux {

using exactalg::HalfInt;

std::string letter_name(int letter) {
    return std::to_string(letter_index(letter)) + (is_barred(letter) ? "'" : "");
}

Tableau::Tableau(int r, std::vector<std::vector<int>> rows) : r_(r), rows_(std::move(rows)) {
    if (r < 1) throw std::invalid_argument("Tableau: rank must be positive");
    if (rows_.size() != static_cast<std::size_t>(r)) throw std::invalid_argument("Tableau: expected r rows");
}

IntVec Tableau::row_lengths() const {
    IntVec out;
    for (const auto& row : rows_) out.push_back(static_cast<std::int64_t>(row.size()));
    return out;
}

int Tableau::at(int k, int c) const {
    if (k < 1 || k > r_) return 0;
    const auto& row = rows_[static_cast<std::size_t>(k - 1)];
    int idx = c - k;
    if (idx < 0 || idx >= static_cast<int>(row.size())) return 0;
    return row[static_cast<std::size_t>(idx)];
}

bool Tableau::is_valid() const {
    for (int k = 1; k <= r_; ++k) {
        const auto& row = rows_[static_cast<std::size_t>(k - 1)];
        if (k > 1) {
            std::size_t above = rows_[static_cast<std::size_t>(k - 2)].size();
            if (!row.empty() && row.size() >= above) return false;
        }
        for (std::size_t idx = 0; idx < row.size(); ++idx) {
            int v = row[idx];
            int c = k + static_cast<int>(idx);
            if (v < barred(k) || v > unbarred(r_)) return false;
            if (idx > 0 && row[idx - 1] > v) return false;
            if (k > 1) {
                int up = at(k - 1, c), diag = at(k - 1, c - 1);
                if (up == 0 || diag == 0) return false;
                if (up > v || diag >= v) return false;
            }
        }
    }
    return true;
}

std::string Tableau::str() const {
    std::ostringstream os;
    for (int k = 1; k <= r_; ++k) {
        if (k > 1) os << " / ";
        const auto& row = rows_[static_cast<std::size_t>(k - 1)];
        for (std::size_t idx = 0; idx < row.size(); ++idx) os << (idx ? " " : "") << letter_name(row[idx]);
    }
    return os.str();
}

namespace {

// Rows 2(r-m) and 2(r-m)+1 of a pattern hold the counts of entries <= m and <= m-bar.
std::int64_t count_le(const GTPattern& p, int letter, int k) {
    int r = p.rank();
    int m = letter_index(letter);
    if (k > m || letter == 0) return 0;
    std::size_t row = static_cast<std::size_t>(2 * (r - m) + (is_barred(letter) ? 1 : 0));
    return p.rows()[row][static_cast<std::size_t>(k - 1)];
}

}  // namespace

Tableau from_gt(const GTPattern& p) {
    int r = p.rank();
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(r));
    for (int k = 1; k <= r; ++k) {
        auto& row = rows[static_cast<std::size_t>(k - 1)];
        std::int64_t prev = 0;
        for (int letter = 1; letter <= 2 * r; ++letter) {
            std::int64_t c = count_le(p, letter, k);
            if (c < prev) throw std::invalid_argument("from_gt: pattern does not interleave");
            row.insert(row.end(), static_cast<std::size_t>(c - prev), letter);
            prev = c;
        }
    }
    return Tableau(r, std::move(rows));
}

GTPattern to_gt(const Tableau& s) {
    int r = s.rank();
    auto le = [&](int letter, int k) {
        std::int64_t n = 0;
        for (int v : s.rows()[static_cast<std::size_t>(k - 1)]) n += v <= letter ? 1 : 0;
        return n;
    };
    std::vector<IntVec> rows;
    for (int m = r; m >= 1; --m) {
        IntVec a, b;
        for (int k = 1; k <= m; ++k) {
            a.push_back(le(unbarred(m), k));
            b.push_back(le(barred(m), k));
        }
        for (int k = m + 1; k <= r; ++k)
            if (le(unbarred(m), k) != 0) throw std::invalid_argument("to_gt: row " + std::to_string(k) + " holds a small entry");
        rows.push_back(std::move(a));
        rows.push_back(std::move(b));
    }
    GTPattern p(r, std::move(rows));
    if (!p.is_valid()) throw std::invalid_argument("to_gt: counts do not form a strict pattern");
    return p;
}

std::vector<Tableau> enumerate_tableaux(const IntVec& shape, int r) {
    if (shape.size() != static_cast<std::size_t>(r)) throw std::invalid_argument("enumerate_tableaux: shape length must be r");
    for (std::size_t k = 0; k + 1 < shape.size(); ++k)
        if (shape[k + 1] != 0 && shape[k + 1] >= shape[k]) return {};
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(r));
    for (int k = 0; k < r; ++k) rows[static_cast<std::size_t>(k)].assign(static_cast<std::size_t>(shape[static_cast<std::size_t>(k)]), 0);
    std::vector<Tableau> out;
    std::function<void(int, int)> fill = [&](int k, int idx) {
        if (k > r) {
            out.emplace_back(r, rows);
            return;
        }
        auto& row = rows[static_cast<std::size_t>(k - 1)];
        if (idx == static_cast<int>(row.size())) {
            fill(k + 1, 0);
            return;
        }
        int c = k + idx;
        int lo = barred(k);
        if (idx > 0) lo = std::max(lo, row[static_cast<std::size_t>(idx - 1)]);
        if (k > 1) {
            const auto& up = rows[static_cast<std::size_t>(k - 2)];
            lo = std::max(lo, up[static_cast<std::size_t>(c - (k - 1))]);
            lo = std::max(lo, up[static_cast<std::size_t>(c - 1 - (k - 1))] + 1);
        }
        for (int v = lo; v <= unbarred(r); ++v) {
            row[static_cast<std::size_t>(idx)] = v;
            fill(k, idx + 1);
        }
        row[static_cast<std::size_t>(idx)] = 0;
    };
    fill(1, 0);
    return out;
}

namespace {

// Edge-connected components among the cells whose letter satisfies pred.
template <class Pred>
int components(const Tableau& s, Pred pred) {
    int r = s.rank();
    std::vector<std::vector<char>> seen(static_cast<std::size_t>(r));
    for (int k = 1; k <= r; ++k) seen[static_cast<std::size_t>(k - 1)].assign(s.rows()[static_cast<std::size_t>(k - 1)].size(), 0);
    int count = 0;
    for (int k = 1; k <= r; ++k)
        for (std::size_t idx = 0; idx < s.rows()[static_cast<std::size_t>(k - 1)].size(); ++idx) {
            int v = s.rows()[static_cast<std::size_t>(k - 1)][idx];
            if (!pred(k, v) || seen[static_cast<std::size_t>(k - 1)][idx]) continue;
            ++count;
            std::vector<std::pair<int, int>> stack{{k, k + static_cast<int>(idx)}};
            seen[static_cast<std::size_t>(k - 1)][idx] = 1;
            while (!stack.empty()) {
                auto [ck, cc] = stack.back();
                stack.pop_back();
                const std::pair<int, int> nbrs[] = {{ck, cc - 1}, {ck, cc + 1}, {ck - 1, cc}, {ck + 1, cc}};
                for (auto [nk, nc] : nbrs) {
                    int w = s.at(nk, nc);
                    if (w != v || !pred(nk, w)) continue;
                    auto& flag = seen[static_cast<std::size_t>(nk - 1)][static_cast<std::size_t>(nc - nk)];
                    if (flag) continue;
                    flag = 1;
                    stack.emplace_back(nk, nc);
                }
            }
        }
    return count;
}

int count_in_row(const Tableau& s, int k, int letter) {
    int n = 0;
    for (int v : s.rows()[static_cast<std::size_t>(k - 1)]) n += v == letter ? 1 : 0;
    return n;
}

}  // namespace

bool is_degenerate(const Tableau& s) {
    for (int m = 1; m <= s.rank(); ++m) {
        const auto& row = s.rows()[static_cast<std::size_t>(m - 1)];
        if (row.empty() || row.front() > unbarred(m)) return true;
    }
    return false;
}

bool st_conditions(const Tableau& s) {
    int r = s.rank();
    for (int m = 2; m <= r; ++m)
        for (int k = 1; k <= r; ++k)
            if (k != m && (count_in_row(s, k, unbarred(m)) + count_in_row(s, k, barred(m))) % 2 != 0) return false;
    for (int m = 1; m <= r; ++m) {
        int k0 = 0;
        for (int k = 1; k <= r; ++k)
            if (count_in_row(s, k, unbarred(m)) % 2 != 0) {
                if (k0) return false;
                k0 = k;
            }
        if (!k0 || k0 == m) continue;
        for (int k = k0 + 1; k <= r; ++k)
            if (count_in_row(s, k, unbarred(m)) != 0) return false;
        int bar = barred(m);
        if (components(s, [&](int k, int v) { return k >= k0 && v == bar; }) > 1) return false;
    }
    return true;
}

bool in_st_circle(const Tableau& s) { return !is_degenerate(s) && st_conditions(s); }

TableauStats statistics(const Tableau& s) {
    int r = s.rank();
    TableauStats st;
    st.x.assign(static_cast<std::size_t>(2 * r + 1), 0);
    st.row.assign(static_cast<std::size_t>(2 * r + 1), 0);
    st.con_bar.assign(static_cast<std::size_t>(r + 1), 0);
    st.l.assign(static_cast<std::size_t>(r + 1), 0);
    for (int k = 1; k <= r; ++k) {
        std::vector<char> present(static_cast<std::size_t>(2 * r + 1), 0);
        for (int v : s.rows()[static_cast<std::size_t>(k - 1)]) {
            ++st.x[static_cast<std::size_t>(v)];
            present[static_cast<std::size_t>(v)] = 1;
        }
        for (int v = 1; v <= 2 * r; ++v) st.row[static_cast<std::size_t>(v)] += present[static_cast<std::size_t>(v)];
    }
    st.str = components(s, [](int, int) { return true; });
    for (int m = 1; m <= r; ++m) {
        int bar = barred(m);
        st.con_bar[static_cast<std::size_t>(m)] = components(s, [bar](int, int v) { return v == bar; });
        st.hgtbar += st.row[static_cast<std::size_t>(bar)] - st.con_bar[static_cast<std::size_t>(m)] -
                     st.row[static_cast<std::size_t>(unbarred(m))];
        int l = m;
        for (int k = 1; k <= r; ++k)
            if (count_in_row(s, k, unbarred(m)) % 2 != 0) l = k;
        st.l[static_cast<std::size_t>(m)] = l;
        st.l_sum += l;
    }
    for (int i = 1; i <= r; ++i) {
        int m = r - i + 1;
        st.wt.push_back(st.x[static_cast<std::size_t>(unbarred(m))] - st.x[static_cast<std::size_t>(barred(m))]);
    }
    return st;
}

LaurentPoly corollary_term(const Tableau& s) {
    int r = s.rank();
    auto st = statistics(s);
    int texp = st.hgtbar + st.l_sum;
    int gen = st.str - r;
    if (gen < 0 || texp < 0) throw std::domain_error("corollary_term: negative exponent on " + s.str());
    exactalg::Monomial mono(r);
    for (int i = 0; i < r; ++i) mono.zexp[static_cast<std::size_t>(i)] = HalfInt::from_twice(-st.wt[static_cast<std::size_t>(i)]);
    mono.texp = texp;
    LaurentPoly term = LaurentPoly::monomial(mono) * (LaurentPoly(r, 1) + LaurentPoly::t(r)).pow(gen);
    return (r * (r + 1) / 2 - st.l_sum) % 2 == 0 ? term : -term;
}

LaurentPoly corollary_rhs(const IntVec& lambda, int r) {
    if (r < 1 || lambda.size() != static_cast<std::size_t>(r)) throw std::invalid_argument("corollary_rhs: bad rank");
    auto mu = rootdata::upsilon(rootdata::shift_rho(lambda));
    LaurentPoly sum(r);
    for (const auto& s : enumerate_tableaux(gtpatterns::top_row(mu), r))
        if (in_st_circle(s)) sum += corollary_term(s);
    return sum;
}

cli::Report corollary2_check(const IntVec& lambda, int r) {
    cli::Report rep;
    rep.claim = "corollary2";
    rep.params = {{"rank", r}, {"lambda", lambda}};
    cli::Stopwatch sw(rep);
    auto lhs = gtpatterns::tokuyama_rhs(lambda, r);
    auto rhs = corollary_rhs(lambda, r);
    rep.lhs = lhs.serialize();
    rep.rhs = rhs.serialize();
    if (lhs != rhs) rep.mismatches.push_back({{"difference", (lhs - rhs).serialize()}});
    auto mu = rootdata::upsilon(rootdata::shift_rho(lambda));
    std::size_t checked = 0;
    gtpatterns::for_each_strict(mu, [&](const GTPattern& p) {
        auto s = from_gt(p);
        bool gt_in = gtpatterns::in_gt_circle(p, mu.back());
        bool st_in = in_st_circle(s);
        if (gt_in != st_in) {
            rep.mismatches.push_back({{"pattern", p.str()}, {"gt_circle", gt_in}, {"st_circle", st_in}});
            return;
        }
        if (!gt_in) return;
        ++checked;
        LaurentPoly g = gtpatterns::g_weight(p, r);
        auto w = gtpatterns::wt(p);
        exactalg::Monomial mono(r);
        for (int i = 0; i < r; ++i) mono.zexp[static_cast<std::size_t>(i)] = HalfInt::from_twice(-w[static_cast<std::size_t>(i)]);
        if (g * LaurentPoly::monomial(mono) != corollary_term(s) && rep.mismatches.size() < 20)
            rep.mismatches.push_back({{"pattern", p.str()}, {"tableau", s.str()}});
    });
    rep.notes["terms_compared"] = checked;
    return rep;
}

}  // namespace tokuyama::tableaux
