#pragma once

// Strict Gelfand-Tsetlin patterns of type C, their decorations, statistics,
// the subset GT° and the deformed-denominator sum over it.

#include "tokuyama/exactalg.hpp"
#include "tokuyama/report.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace tokuyama::gtpatterns {

using exactalg::LaurentPoly;
using IntVec = std::vector<std::int64_t>;

/// Maximal, minimal, generic, or degenerate when both bounds are attained.
enum class EntryClass { maximal, minimal, generic, degenerate };
std::string to_string(EntryClass c);

/// a_{i,j} (kind a, 0 <= i < r, i < j <= r) or b_{i,j} (kind b, 1 <= i <= r, i <= j <= r).
struct Entry {
    bool is_b = false;
    int i = 0;
    int j = 0;
    std::string name() const;
    bool operator==(const Entry&) const = default;
};

/// Rows a_0, b_1, a_1, ..., a_{r-1}, b_r of lengths r, r, r-1, r-1, ..., 1, 1.
class GTPattern {
public:
    GTPattern() = default;
    GTPattern(int r, std::vector<IntVec> rows);

    int rank() const { return r_; }
    const std::vector<IntVec>& rows() const { return rows_; }
    std::int64_t a(int i, int j) const;
    std::int64_t b(int i, int j) const;
    std::int64_t value(const Entry& e) const { return e.is_b ? b(e.i, e.j) : a(e.i, e.j); }
    bool has_a(int i, int j) const;
    bool has_b(int i, int j) const;
    /// Every entry below the top row in row-major order.
    std::vector<Entry> entries() const;
    /// Interleaving, nonnegativity and strictness (zeros may repeat).
    bool is_valid() const;
    std::string str() const;
    bool operator==(const GTPattern&) const = default;

private:
    int r_ = 0;
    std::vector<IntVec> rows_;
    friend class PatternBuilder;
};

/// Three-row array a_0 (length r), b_1 (length r), a_1 (length r-1).
struct ShortGTPattern {
    IntVec a0, b1, a1;
    int rank() const { return static_cast<int>(a0.size()); }
    GTPattern as_rows() const;  // rank-r view with only the top three rows populated
    bool is_valid() const;
    bool operator==(const ShortGTPattern&) const = default;
};

/// Partial sums from the right.
IntVec top_row(const IntVec& mu);

/// Visits every strict pattern with top row top_row(mu) in lexicographic
/// row-major order, each entry running from its largest value down.
void for_each_strict(const IntVec& mu, const std::function<void(const GTPattern&)>& visit);
void for_each_with_top(const IntVec& top, const std::function<void(const GTPattern&)>& visit);
struct PatternFilter {
    /// Rows b_1, a_1, ... fixed to these values.
    std::vector<IntVec> prefix;
    /// Only patterns in GT°.
    bool circle_only = false;
};
/// Same order as for_each_strict, pruning row by row.
void for_each_filtered(const IntVec& mu, const PatternFilter& filter, const std::function<void(const GTPattern&)>& visit);
/// Visits the patterns of GT°(mu) in the same order, pruning row by row.
void for_each_circle(const IntVec& mu, const std::function<void(const GTPattern&)>& visit);
std::vector<GTPattern> enumerate_strict(const IntVec& mu);
/// Short patterns (top three rows) with top row top_row(mu).
std::vector<ShortGTPattern> enumerate_short(const IntVec& mu);

EntryClass classify(const GTPattern& p, const Entry& e);
std::int64_t c_stat(const GTPattern& p, const Entry& e);

struct Stats {
    int gen = 0;
    int max = 0;
    int max0 = 0;  // maximal entries with even c
    int max1 = 0;  // maximal entries with odd c
    int degenerate = 0;
    bool operator==(const Stats&) const = default;
};
Stats stats(const GTPattern& p);
Stats short_stats(const ShortGTPattern& p1);

bool has_degenerate_entry(const GTPattern& p);
/// Every generic entry has even c.
bool c_parity_condition(const GTPattern& p);
/// The parity characterization with reference parity mu_r.
bool lemma10_condition(const GTPattern& p, std::int64_t mu_r);
/// Membership in GT°; cross-checks both characterizations and throws
/// std::logic_error if they disagree.
bool in_gt_circle(const GTPattern& p, std::int64_t mu_r);

/// (-1)^{max1/2} t^{max - max1/2} (1+t)^{gen} as a rank-`poly_rank` polynomial;
/// zero when a degenerate entry is present; throws on odd max1.
LaurentPoly g_weight(const GTPattern& p, int poly_rank = 0);
LaurentPoly short_g_weight(const ShortGTPattern& p1, int poly_rank = 0);
LaurentPoly g_weight_from_stats(const Stats& s, int poly_rank);

IntVec wt(const GTPattern& p);

/// Sum over GT°(upsilon(lambda+rho)) of G(P) z^{-wt(P)/2}.
LaurentPoly tokuyama_rhs(const IntVec& lambda, int r);

std::pair<ShortGTPattern, GTPattern> split(const GTPattern& p);
GTPattern join(const ShortGTPattern& p1, const GTPattern& q);

/// D_B * N_{lambda+rho} == RHS * N_rho, exactly.
cli::Report theorem1_check(const IntVec& lambda, int r);
/// RHS at t=0 times N_rho == z^{-rho} N_{lambda+rho}.
cli::Report t0_check(const IntVec& lambda, int r);
/// Compares c-parity and the parity characterization on every pattern of GT(mu).
/// mu must lie in the image of upsilon (all but the last coordinate even).
cli::Report lemma10_equiv_check(const IntVec& mu);

}  // namespace tokuyama::gtpatterns
