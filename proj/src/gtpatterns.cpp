#include "tokuyama/gtpatterns.hpp"

#include "tokuyama/rootdata.hpp"

#include <sstream>
#include <utility>
#include <stdexcept>

namespace tokuyama::gtpatterns {

using exactalg::HalfInt;

std::string to_string(EntryClass c) {
    switch (c) {
        case EntryClass::maximal: return "maximal";
        case EntryClass::minimal: return "minimal";
        case EntryClass::generic: return "generic";
        case EntryClass::degenerate: return "degenerate";
    }
    return "?";
}

std::string Entry::name() const {
    return std::string(is_b ? "b" : "a") + "_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

namespace {

std::size_t a_row(int i) { return static_cast<std::size_t>(2 * i); }
std::size_t b_row(int i) { return static_cast<std::size_t>(2 * i - 1); }

// Row k is a_{k/2} for even k and b_{(k+1)/2} for odd k.
std::size_t row_length(int r, int k) {
    return static_cast<std::size_t>(k % 2 == 0 ? r - k / 2 : r - (k + 1) / 2 + 1);
}

bool strict_row(const IntVec& v) {
    for (std::size_t k = 0; k + 1 < v.size(); ++k)
        if (!(v[k] > v[k + 1] || (v[k] == 0 && v[k + 1] == 0))) return false;
    return true;
}

}  // namespace

GTPattern::GTPattern(int r, std::vector<IntVec> rows) : r_(r), rows_(std::move(rows)) {
    if (r < 1) throw std::invalid_argument("GTPattern: rank must be positive");
    if (rows_.size() != static_cast<std::size_t>(2 * r)) throw std::invalid_argument("GTPattern: expected 2r rows");
    for (int k = 0; k < 2 * r; ++k) {
        if (rows_[static_cast<std::size_t>(k)].size() != row_length(r, k))
            throw std::invalid_argument("GTPattern: row " + std::to_string(k) + " has wrong length");
    }
}

bool GTPattern::has_a(int i, int j) const { return i >= 0 && i < r_ && j >= (i == 0 ? 1 : i + 1) && j <= r_; }
bool GTPattern::has_b(int i, int j) const { return i >= 1 && i <= r_ && j >= i && j <= r_; }

std::int64_t GTPattern::a(int i, int j) const {
    if (!has_a(i, j)) throw std::out_of_range("GTPattern: no entry a_{" + std::to_string(i) + "," + std::to_string(j) + "}");
    return rows_[a_row(i)][static_cast<std::size_t>(i == 0 ? j - 1 : j - i - 1)];
}

std::int64_t GTPattern::b(int i, int j) const {
    if (!has_b(i, j)) throw std::out_of_range("GTPattern: no entry b_{" + std::to_string(i) + "," + std::to_string(j) + "}");
    return rows_[b_row(i)][static_cast<std::size_t>(j - i)];
}

std::vector<Entry> GTPattern::entries() const {
    std::vector<Entry> out;
    for (int i = 1; i <= r_; ++i) {
        for (int j = i; j <= r_; ++j) out.push_back({true, i, j});
        if (i < r_)
            for (int j = i + 1; j <= r_; ++j) out.push_back({false, i, j});
    }
    return out;
}

bool GTPattern::is_valid() const {
    for (const auto& row : rows_) {
        for (auto x : row)
            if (x < 0) return false;
        if (!strict_row(row)) return false;
    }
    for (int i = 1; i <= r_; ++i)
        for (int j = i; j <= r_; ++j) {
            std::int64_t v = b(i, j);
            if (v > a(i - 1, j)) return false;
            if (has_a(i - 1, j + 1) && v < a(i - 1, j + 1)) return false;
            if (has_a(i, j) && v > a(i, j)) return false;
            if (has_a(i, j + 1) && v < a(i, j + 1)) return false;
        }
    return true;
}

std::string GTPattern::str() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (k) os << " / ";
        for (std::size_t m = 0; m < rows_[k].size(); ++m) os << (m ? " " : "") << rows_[k][m];
    }
    return os.str();
}

GTPattern ShortGTPattern::as_rows() const {
    int r = rank();
    std::vector<IntVec> rows;
    rows.push_back(a0);
    rows.push_back(b1);
    if (r >= 2) rows.push_back(a1);
    for (int k = 3; k < 2 * r; ++k) rows.emplace_back(row_length(r, k), 0);
    return GTPattern(r, std::move(rows));
}

bool ShortGTPattern::is_valid() const {
    int r = rank();
    if (r < 1 || b1.size() != a0.size() || a1.size() != a0.size() - 1) return false;
    for (const auto* row : {&a0, &b1, &a1}) {
        for (auto x : *row)
            if (x < 0) return false;
        if (!strict_row(*row)) return false;
    }
    for (int j = 1; j <= r; ++j) {
        auto b = b1[static_cast<std::size_t>(j - 1)];
        if (b > a0[static_cast<std::size_t>(j - 1)]) return false;
        if (j < r && b < a0[static_cast<std::size_t>(j)]) return false;
        if (j >= 2 && b > a1[static_cast<std::size_t>(j - 2)]) return false;
        if (j < r && b < a1[static_cast<std::size_t>(j - 1)]) return false;
    }
    return true;
}

IntVec top_row(const IntVec& mu) {
    IntVec out(mu.size(), 0);
    std::int64_t s = 0;
    for (std::size_t k = mu.size(); k-- > 0;) {
        s += mu[k];
        out[k] = s;
    }
    return out;
}

// Row-major depth-first filling of a mutable pattern.
class PatternBuilder {
public:
    using RowCheck = std::function<bool(const GTPattern&, int)>;

    /// row_ok(p, k) is called once rows 0..k are filled; false prunes the branch.
    PatternBuilder(const IntVec& top, const std::function<void(const GTPattern&)>& visit, int max_rows,
                   RowCheck row_ok = {})
        : visit_(visit), max_rows_(max_rows), row_ok_(std::move(row_ok)) {
        int r = static_cast<int>(top.size());
        p_.r_ = r;
        p_.rows_.push_back(top);
        for (int k = 1; k < 2 * r; ++k)
            p_.rows_.emplace_back(row_length(r, k), 0);
    }

    void run() { fill(1, 0); }

private:
    void fill(int k, std::size_t m) {
        auto& row = p_.rows_[static_cast<std::size_t>(k)];
        if (m == row.size()) {
            if (row_ok_ && !row_ok_(p_, k)) return;
            if (k + 1 >= max_rows_) {
                visit_(p_);
                return;
            }
            fill(k + 1, 0);
            return;
        }
        const auto& above = p_.rows_[static_cast<std::size_t>(k - 1)];
        std::int64_t hi, lo;
        if (k % 2 == 1) {  // b row: b_{i,j} between a_{i-1,j} and a_{i-1,j+1}
            hi = above[m];
            lo = m + 1 < above.size() ? above[m + 1] : 0;
        } else {  // a row: a_{i,j} between b_{i,j} and b_{i,j-1}
            hi = above[m];
            lo = above[m + 1];
        }
        if (m > 0 && row[m - 1] > 0) hi = std::min(hi, row[m - 1] - 1);
        if (m > 0 && row[m - 1] == 0) hi = 0;
        for (std::int64_t v = hi; v >= lo; --v) {
            row[m] = v;
            fill(k, m + 1);
        }
        row[m] = 0;
    }

    GTPattern p_;
    const std::function<void(const GTPattern&)>& visit_;
    int max_rows_;
    RowCheck row_ok_;
};

void for_each_with_top(const IntVec& top, const std::function<void(const GTPattern&)>& visit) {
    if (top.empty()) throw std::invalid_argument("enumerate: empty top row");
    if (!strict_row(top)) return;
    for (auto x : top)
        if (x < 0) throw std::invalid_argument("enumerate: negative top row entry");
    PatternBuilder(top, visit, 2 * static_cast<int>(top.size())).run();
}

void for_each_strict(const IntVec& mu, const std::function<void(const GTPattern&)>& visit) {
    for (auto x : mu)
        if (x < 0) throw std::invalid_argument("enumerate: mu must be nonnegative");
    for_each_with_top(top_row(mu), visit);
}

void for_each_filtered(const IntVec& mu, const PatternFilter& filter,
                       const std::function<void(const GTPattern&)>& visit) {
    for (auto x : mu)
        if (x < 0) throw std::invalid_argument("enumerate: mu must be nonnegative");
    auto top = top_row(mu);
    if (top.empty()) throw std::invalid_argument("enumerate: empty top row");
    int r = static_cast<int>(top.size());
    if (filter.prefix.size() > static_cast<std::size_t>(2 * r - 1))
        throw std::invalid_argument("enumerate: prefix has more rows than the pattern");
    for (std::size_t k = 0; k < filter.prefix.size(); ++k)
        if (filter.prefix[k].size() != row_length(r, static_cast<int>(k) + 1))
            throw std::invalid_argument("enumerate: prefix row " + std::to_string(k + 1) + " has the wrong length");
    if (!strict_row(top)) return;
    auto entry_ok = [](const GTPattern& p, const Entry& e) {
        auto cls = classify(p, e);
        return cls != EntryClass::degenerate && (cls != EntryClass::generic || c_stat(p, e) % 2 == 0);
    };
    // Entries of b_i and a_i are classified and carry c once row a_i (or b_r) is filled.
    auto row_ok = [&, r](const GTPattern& p, int k) {
        if (static_cast<std::size_t>(k) <= filter.prefix.size() &&
            p.rows()[static_cast<std::size_t>(k)] != filter.prefix[static_cast<std::size_t>(k - 1)])
            return false;
        if (!filter.circle_only) return true;
        int i;
        if (k % 2 == 0) i = k / 2;
        else if (k == 2 * r - 1) i = r;
        else return true;
        for (int j = i; j <= r; ++j)
            if (!entry_ok(p, {true, i, j})) return false;
        if (i < r)
            for (int j = i + 1; j <= r; ++j)
                if (!entry_ok(p, {false, i, j})) return false;
        return true;
    };
    PatternBuilder(top, visit, 2 * r, row_ok).run();
}

void for_each_circle(const IntVec& mu, const std::function<void(const GTPattern&)>& visit) {
    for_each_filtered(mu, {{}, true}, visit);
}

std::vector<GTPattern> enumerate_strict(const IntVec& mu) {
    std::vector<GTPattern> out;
    for_each_strict(mu, [&](const GTPattern& p) { out.push_back(p); });
    return out;
}

std::vector<ShortGTPattern> enumerate_short(const IntVec& mu) {
    std::vector<ShortGTPattern> out;
    auto top = top_row(mu);
    int r = static_cast<int>(mu.size());
    if (r == 0) throw std::invalid_argument("enumerate_short: empty mu");
    if (!strict_row(top)) return out;
    int rows = r == 1 ? 2 : 3;
    std::function<void(const GTPattern&)> visit = [&](const GTPattern& p) {
        ShortGTPattern s{p.rows()[0], p.rows()[1], r >= 2 ? p.rows()[2] : IntVec{}};
        out.push_back(std::move(s));
    };
    PatternBuilder(top, visit, rows).run();
    return out;
}

EntryClass classify(const GTPattern& p, const Entry& e) {
    bool mx, mn;
    if (e.is_b) {
        std::int64_t v = p.b(e.i, e.j);
        mx = v == p.a(e.i - 1, e.j);
        mn = e.j < p.rank() ? v == p.a(e.i - 1, e.j + 1) : v == 0;
    } else {
        if (e.i == 0) throw std::invalid_argument("classify: top row entries carry no class");
        std::int64_t v = p.a(e.i, e.j);
        mx = v == p.b(e.i, e.j);
        mn = v == p.b(e.i, e.j - 1);
    }
    if (mx && mn) return EntryClass::degenerate;
    if (mx) return EntryClass::maximal;
    if (mn) return EntryClass::minimal;
    return EntryClass::generic;
}

std::int64_t c_stat(const GTPattern& p, const Entry& e) {
    int i = e.i, j = e.j, r = p.rank();
    if (e.is_b ? !p.has_b(i, j) : (!p.has_a(i, j) || i == 0)) throw std::out_of_range("c_stat: no such entry");
    std::int64_t c = 0;
    for (int m = i; m <= j - 1; ++m) c += p.b(i, m) - p.a(i, m + 1);
    if (e.is_b)
        for (int k = j + 1; k <= r; ++k) c += p.a(i - 1, k) + (p.has_a(i, k) ? p.a(i, k) : 0);
    return c;
}

Stats stats(const GTPattern& p) {
    Stats s;
    for (const auto& e : p.entries()) {
        switch (classify(p, e)) {
            case EntryClass::generic: ++s.gen; break;
            case EntryClass::maximal:
                ++s.max;
                if (c_stat(p, e) % 2 != 0) ++s.max1;
                else ++s.max0;
                break;
            case EntryClass::degenerate: ++s.degenerate; break;
            case EntryClass::minimal: break;
        }
    }
    return s;
}

namespace {
std::vector<Entry> short_entries(int r) {
    std::vector<Entry> out;
    for (int j = 1; j <= r; ++j) out.push_back({true, 1, j});
    for (int j = 2; j <= r; ++j) out.push_back({false, 1, j});
    return out;
}
}  // namespace

Stats short_stats(const ShortGTPattern& p1) {
    auto p = p1.as_rows();
    Stats s;
    for (const auto& e : short_entries(p1.rank())) {
        switch (classify(p, e)) {
            case EntryClass::generic: ++s.gen; break;
            case EntryClass::maximal:
                ++s.max;
                if (c_stat(p, e) % 2 != 0) ++s.max1;
                else ++s.max0;
                break;
            case EntryClass::degenerate: ++s.degenerate; break;
            case EntryClass::minimal: break;
        }
    }
    return s;
}

bool has_degenerate_entry(const GTPattern& p) {
    for (const auto& e : p.entries())
        if (classify(p, e) == EntryClass::degenerate) return true;
    return false;
}

bool c_parity_condition(const GTPattern& p) {
    for (const auto& e : p.entries())
        if (classify(p, e) == EntryClass::generic && c_stat(p, e) % 2 != 0) return false;
    return true;
}

bool lemma10_condition(const GTPattern& p, std::int64_t mu_r) {
    int r = p.rank();
    auto odd = [mu_r](std::int64_t x) { return ((x - mu_r) % 2 + 2) % 2 != 0; };
    for (int i = 0; i < r; ++i)
        for (int j = (i == 0 ? 1 : i + 1); j <= r; ++j)
            if (odd(p.a(i, j))) return false;
    for (int i = 1; i <= r; ++i) {
        int j0 = 0;
        for (int j = i; j <= r; ++j)
            if (odd(p.b(i, j))) {
                if (j0) return false;
                j0 = j;
            }
        if (!j0) continue;
        for (int j = j0 + 1; j <= r; ++j)
            if (!(p.b(i, j) == p.a(i, j) && p.a(i, j) == p.a(i - 1, j))) return false;
    }
    return true;
}

bool in_gt_circle(const GTPattern& p, std::int64_t mu_r) {
    bool nondeg = !has_degenerate_entry(p);
    bool by_c = nondeg && c_parity_condition(p);
    bool by_parity = nondeg && lemma10_condition(p, mu_r);
    if (by_c != by_parity)
        throw std::logic_error("in_gt_circle: parity characterizations disagree on " + p.str());
    return by_c;
}

LaurentPoly g_weight_from_stats(const Stats& s, int poly_rank) {
    if (s.degenerate > 0) return LaurentPoly(poly_rank);
    if (s.max1 % 2 != 0) throw std::domain_error("g_weight: max_1 is odd");
    LaurentPoly one_plus_t = LaurentPoly(poly_rank, 1) + LaurentPoly::t(poly_rank);
    LaurentPoly g = LaurentPoly::t(poly_rank, s.max - s.max1 / 2) * one_plus_t.pow(s.gen);
    return (s.max1 / 2) % 2 == 0 ? g : -g;
}

LaurentPoly g_weight(const GTPattern& p, int poly_rank) { return g_weight_from_stats(stats(p), poly_rank); }

LaurentPoly short_g_weight(const ShortGTPattern& p1, int poly_rank) {
    return g_weight_from_stats(short_stats(p1), poly_rank);
}

IntVec wt(const GTPattern& p) {
    int r = p.rank();
    IntVec out(static_cast<std::size_t>(r), 0);
    for (int i = 1; i <= r; ++i) {
        std::int64_t w = 0;
        for (auto x : p.rows()[a_row(i - 1)]) w += x;
        for (auto x : p.rows()[b_row(i)]) w -= 2 * x;
        if (i < r)
            for (auto x : p.rows()[a_row(i)]) w += x;
        out[static_cast<std::size_t>(i - 1)] = w;
    }
    return out;
}

LaurentPoly tokuyama_rhs(const IntVec& lambda, int r) {
    if (r < 1 || lambda.size() != static_cast<std::size_t>(r)) throw std::invalid_argument("tokuyama_rhs: bad rank");
    for (auto x : lambda)
        if (x < 0) throw std::invalid_argument("tokuyama_rhs: lambda must be dominant");
    auto mu = rootdata::upsilon(rootdata::shift_rho(lambda));
    LaurentPoly sum(r);
    for_each_strict(mu, [&](const GTPattern& p) {
        if (!in_gt_circle(p, mu.back())) return;
        auto w = wt(p);
        exactalg::Monomial m;
        m.zexp.resize(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) m.zexp[static_cast<std::size_t>(i)] = HalfInt::from_twice(-w[static_cast<std::size_t>(i)]);
        sum += g_weight(p, r) * LaurentPoly::monomial(m);
    });
    return sum;
}

std::pair<ShortGTPattern, GTPattern> split(const GTPattern& p) {
    if (p.rank() < 2) throw std::invalid_argument("split: rank must be at least 2");
    const auto& rows = p.rows();
    ShortGTPattern p1{rows[0], rows[1], rows[2]};
    std::vector<IntVec> tail(rows.begin() + 2, rows.end());
    return {p1, GTPattern(p.rank() - 1, std::move(tail))};
}

GTPattern join(const ShortGTPattern& p1, const GTPattern& q) {
    if (q.rank() != p1.rank() - 1 || q.rows()[0] != p1.a1) throw std::invalid_argument("join: rows do not match");
    std::vector<IntVec> rows{p1.a0, p1.b1};
    rows.insert(rows.end(), q.rows().begin(), q.rows().end());
    return GTPattern(p1.rank(), std::move(rows));
}

namespace {
nlohmann::ordered_json vec_json(const IntVec& v) { return nlohmann::ordered_json(v); }
}  // namespace

cli::Report theorem1_check(const IntVec& lambda, int r) {
    cli::Report rep;
    rep.claim = "theorem1";
    rep.params = {{"rank", r}, {"lambda", vec_json(lambda)}};
    cli::Stopwatch sw(rep);
    auto rho = rootdata::rho(r);
    auto lam = rootdata::lambda_to_evee(lambda, r);
    auto rhs = tokuyama_rhs(lambda, r);
    auto left = rootdata::deformed_denominator(r) * rootdata::weyl_numerator(lam + rho);
    auto right = rhs * rootdata::weyl_numerator(rho);
    rep.lhs = left.serialize();
    rep.rhs = right.serialize();
    rep.notes["rhs_terms"] = rhs.terms().size();
    auto diff = left - right;
    for (const auto& [m, c] : diff.terms()) {
        rep.mismatches.push_back({{"monomial", LaurentPoly::monomial(m).serialize()}, {"difference", c.get_str()}});
        if (rep.mismatches.size() >= 20) break;
    }
    return rep;
}

cli::Report t0_check(const IntVec& lambda, int r) {
    cli::Report rep;
    rep.claim = "theorem1-t0";
    rep.params = {{"rank", r}, {"lambda", vec_json(lambda)}};
    cli::Stopwatch sw(rep);
    auto rho = rootdata::rho(r);
    auto neg = rho;
    for (auto& c : neg.coords) c = -c;
    auto at0 = exactalg::substitute(tokuyama_rhs(lambda, r), {{exactalg::Var::t(), mpq_class(0)}});
    auto left = at0 * rootdata::weyl_numerator(rho);
    auto right = rootdata::z_power(neg) * rootdata::weyl_numerator(rootdata::lambda_to_evee(lambda, r) + rho);
    rep.lhs = left.serialize();
    rep.rhs = right.serialize();
    auto diff = left - right;
    for (const auto& [m, c] : diff.terms()) {
        rep.mismatches.push_back({{"monomial", LaurentPoly::monomial(m).serialize()}, {"difference", c.get_str()}});
        if (rep.mismatches.size() >= 20) break;
    }
    return rep;
}

cli::Report lemma10_equiv_check(const IntVec& mu) {
    cli::Report rep;
    rep.claim = "lemma10-equiv";
    rep.params = {{"mu", vec_json(mu)}};
    cli::Stopwatch sw(rep);
    for (std::size_t k = 0; k + 1 < mu.size(); ++k)
        if (mu[k] % 2 != 0) {
            rep.error = "mu is not in the image of upsilon";
            return rep;
        }
    std::size_t total = 0, inside = 0;
    for_each_strict(mu, [&](const GTPattern& p) {
        ++total;
        bool nondeg = !has_degenerate_entry(p);
        bool by_c = nondeg && c_parity_condition(p);
        bool by_parity = nondeg && lemma10_condition(p, mu.back());
        if (by_c) ++inside;
        if (by_c != by_parity && rep.mismatches.size() < 20)
            rep.mismatches.push_back({{"pattern", p.str()}, {"c_parity", by_c}, {"parity_rule", by_parity}});
    });
    rep.lhs = std::to_string(inside);
    rep.rhs = std::to_string(inside);
    rep.notes["patterns"] = total;
    rep.notes["in_gt_circle"] = inside;
    return rep;
}

}  // namespace tokuyama::gtpatterns
