#pragma once

// Symplectic shifted tableaux, the bijection with strict GT patterns,
// ribbon-strip statistics and the tableau form of the deformed-denominator sum.

#include "tokuyama/gtpatterns.hpp"

#include <string>
#include <vector>

namespace tokuyama::tableaux {

using gtpatterns::GTPattern;
using gtpatterns::IntVec;
using exactalg::LaurentPoly;

/// Letters are encoded as 2m-1 for m-bar and 2m for m, so the alphabet order
/// 1bar < 1 < 2bar < ... < r is the integer order.
inline int barred(int m) { return 2 * m - 1; }
inline int unbarred(int m) { return 2 * m; }
inline int letter_index(int letter) { return (letter + 1) / 2; }
inline bool is_barred(int letter) { return letter % 2 != 0; }
/// "3" or "3'" for 3-bar.
std::string letter_name(int letter);

/// Row k (1-based) is left-justified at column k. Rows may be empty.
class Tableau {
public:
    Tableau() = default;
    Tableau(int r, std::vector<std::vector<int>> rows);

    int rank() const { return r_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    IntVec row_lengths() const;
    /// Letter at row k, absolute column c (both 1-based); 0 if no cell.
    int at(int k, int c) const;
    /// Row and column weak increase, diagonal strict increase, strict shape,
    /// letters in range, and row k starts at or above k-bar.
    bool is_valid() const;
    std::string str() const;
    bool operator==(const Tableau&) const = default;

private:
    int r_ = 0;
    std::vector<std::vector<int>> rows_;
};

Tableau from_gt(const GTPattern& p);
/// Inverse of from_gt; throws std::invalid_argument if the counts do not form a strict pattern.
GTPattern to_gt(const Tableau& s);

/// Every valid tableau of the given shape, filled directly cell by cell.
std::vector<Tableau> enumerate_tableaux(const IntVec& shape, int r);

/// Some row m holds no entry <= m; such tableaux are the images of patterns
/// with a degenerate entry.
bool is_degenerate(const Tableau& s);
/// The two parity and connectivity conditions, applied literally.
bool st_conditions(const Tableau& s);
/// st_conditions and not degenerate.
bool in_st_circle(const Tableau& s);

struct TableauStats {
    int str = 0;
    std::vector<int> x;        // x[letter], letters 1..2r
    IntVec wt;                 // (x_r - x_rbar, ..., x_1 - x_1bar)
    std::vector<int> row;      // row[letter]: rows containing the letter
    std::vector<int> con_bar;  // con_bar[m]: components made of m-bar
    int hgtbar = 0;
    std::vector<int> l;  // l[m], 1-based
    int l_sum = 0;
};
TableauStats statistics(const Tableau& s);

/// The single summand attached to a tableau.
LaurentPoly corollary_term(const Tableau& s);
/// Sum over the tableau side, enumerated independently of the GT patterns.
LaurentPoly corollary_rhs(const IntVec& lambda, int r);

/// corollary_rhs equals tokuyama_rhs, and every pattern in GT° matches its tableau term.
cli::Report corollary2_check(const IntVec& lambda, int r);

}  // namespace tokuyama::tableaux
