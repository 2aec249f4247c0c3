#pragma once

// The exponential sum G(t) at a prime p, decorated arrays of flavors B and C,
// and the totally resonant and general-case identities between them.

#include "tokuyama/exactalg.hpp"
#include "tokuyama/gtpatterns.hpp"
#include "tokuyama/report.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace tokuyama::padic {

using exactalg::LaurentPoly;
using IntVec = std::vector<std::int64_t>;

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// ---- short patterns of flavor B -------------------------------------------
// d has 2r-1 entries (d[0] = d_1), mu has r positive entries.

IntVec l_vector(const IntVec& d, int r);
bool in_cq1(const IntVec& d, const IntVec& mu);
bool in_cq1_le(const IntVec& d, const IntVec& mu);
/// The divisibility conditions under which the exponential sum is taken.
bool brute_preconditions(const IntVec& d, const IntVec& mu);
/// Flavor-B weighting vector k(t).
IntVec weighting_B(const IntVec& d);
/// Flavor-C weighting vector k_C(t).
IntVec weighting_C(const IntVec& d);

struct BruteOptions {
    std::uint64_t budget = 10'000'000;
    /// Sum every c_j over its full range mod p^{L_j} instead of one period.
    bool literal = false;
    /// Replace each inverse u_j by u_j + w p^{d_j}.
    int perturb = 0;
    /// 0 means: hardware concurrency, capped by TOKUYAMA_THREADS.
    unsigned threads = 0;
    /// Evaluate even when the divisibility conditions fail.
    bool ignore_preconditions = false;
    /// Visit every residue tuple instead of eliminating variables along the
    /// coupling chain; the budget then counts tuples.
    bool naive = false;
};

/// Work the evaluation performs: residue tuples (naive) or chain steps.
std::uint64_t brute_force_terms(const IntVec& d, const IntVec& mu, std::int64_t p, const BruteOptions& opt = {});
std::complex<double> brute_force_G(const IntVec& d, const IntVec& mu, std::int64_t p, const BruteOptions& opt = {});

// ---- decorated arrays ------------------------------------------------------

enum class Flavor { B, C };

/// Entries c_1..c_{2r-1}; for flavor C the entry at position 2r-j is c-bar_j.
struct DecoratedArray {
    Flavor flavor = Flavor::B;
    IntVec entries;
    std::vector<bool> boxed;
    std::vector<bool> circled;
    std::size_t size() const { return entries.size(); }
    bool operator==(const DecoratedArray&) const = default;
};

/// gamma: 1-q^-1, -q^-1, 1 or 0 by decoration.
LaurentPoly gamma(bool boxed, bool circled);
/// gamma-tilde; odd entries that are neither boxed nor circled give 0.
LaurentPoly gamma_tilde(bool boxed, bool circled, std::int64_t value);

DecoratedArray decorate_B(const IntVec& d, const IntVec& mu);
/// Product of gamma (flavor B) or gamma-tilde (flavor C) over the entries.
LaurentPoly g_delta(const DecoratedArray& arr);
LaurentPoly g_delta_B(const IntVec& d, const IntVec& mu);

/// The closed form of G(t) where it is stated; nullopt in the remaining gap
/// (t in CQ_1, middle inequality fails, d_{r-1} != d_{r+1}).
std::optional<LaurentPoly> closed_form_G(const IntVec& d, const IntVec& mu);

bool in_cq_c(const IntVec& d, const IntVec& muprime);
/// The middle flavor-C entry: c_r = c-bar_{r-1} + 2 d_r (doubled) or + d_r (single).
enum class MiddleEntry { doubled, single };
/// Entries and decorations from the defining inequalities of CQ_C.
DecoratedArray decorate_C(const IntVec& d, const IntVec& muprime, MiddleEntry middle = MiddleEntry::doubled);
/// Decorations pulled back from the maximal/minimal classes of the short GT
/// pattern that corresponds to t; throws PreconditionError outside CQ_C.
DecoratedArray decorate_C_from_short_gt(const IntVec& d, const IntVec& muprime,
                                        MiddleEntry middle = MiddleEntry::doubled);
LaurentPoly g_delta_C(const IntVec& d, const IntVec& muprime, MiddleEntry middle = MiddleEntry::doubled);

/// t -> P_1 with a_0 = top_row(muprime), b_{1,r} = d_r, b_{1,j} = d_j + a_{0,j+1},
/// a_{1,j+1} = b_{1,j} - d_{2r-j}.
gtpatterns::ShortGTPattern short_gt_from_d(const IntVec& d, const IntVec& muprime);
IntVec d_from_short_gt(const gtpatterns::ShortGTPattern& p1);

/// Every t in CQ_1(mu) with flavor-B weighting vector k.
std::vector<IntVec> cq1_with_weighting(const IntVec& mu, const IntVec& k);
/// Every t in CQ_C(muprime) with flavor-C weighting vector kprime.
std::vector<IntVec> cq_c_with_weighting(const IntVec& muprime, const IntVec& kprime);
/// Every t in CQ_C(muprime) (finite: all entries are bounded).
std::vector<IntVec> cq_c(const IntVec& muprime);

// ---- totally resonant patterns ---------------------------------------------

/// (b_1, ..., b_r) -> (b_1, ..., b_r, b_{r-1}, ..., b_1).
IntVec totally_resonant(const IntVec& b);

enum class Rel { le, lt, eq, ge, gt, any };
enum class Weighting { A, B };
std::int64_t k_A(const IntVec& s);
std::int64_t k_B(const IntVec& s);

/// Omega^rel_i(mu) restricted to the given weighting value (1 <= i <= r).
std::vector<IntVec> omega(const IntVec& mu, Rel rel, int i, Weighting w, std::int64_t k);
/// Omega^rel_i(mu) without a weighting filter; rel must bound d_i.
std::vector<IntVec> omega(const IntVec& mu, Rel rel, int i);
/// max{i : s_i < mu_i}, or 0 when s is maximal.
int i_box(const IntVec& s, const IntVec& mu);
/// Omega(s) inside Omega^<=(mu).
std::vector<IntVec> omega_of(const IntVec& s, const IntVec& mu);

/// Sum over Omega(s) of G_Delta(t) q^{k_A(t)}, summed directly.
LaurentPoly lemma3_direct(const IntVec& s, const IntVec& mu);
/// The closed form of the same sum.
LaurentPoly lemma3_closed(const IntVec& s, const IntVec& mu);

/// G_{Delta_C} of the totally resonant array of s with respect to muprime.
LaurentPoly g_delta_C_resonant(const IntVec& s, const IntVec& muprime);

// ---- components of a weighting vector --------------------------------------

struct Component {
    int l = 0;  // first index (1-based)
    int r = 0;  // last index
    std::int64_t a = 0;
    std::int64_t b = 0;
    IntVec mu;  // mu(E)
};
std::vector<Component> component_decomposition(const IntVec& k, const IntVec& mu);
/// Xi_k: vectors x with x_i <= |mu(E_i)| (i < h) and sum_{i<h}(2x_i + b_i) + x_h = k_1.
std::vector<IntVec> xi_set(const IntVec& k, const IntVec& mu);
/// Psi_k(t) = (t(E_1), ..., t(E_h)) with the last entry of each block replaced by min(d_i, d_{2r-i}).
std::vector<IntVec> psi_k(const IntVec& d, const std::vector<Component>& comps);

// ---- checks ----------------------------------------------------------------

/// Brute force against the closed form for every d with entries <= dmax that
/// meets the divisibility conditions; gap cases are reported against the
/// hypothesis G = 0 without counting as mismatches.
cli::Report prop4_check(const IntVec& mu, std::int64_t p, std::int64_t dmax, double tol,
                        std::uint64_t budget = 10'000'000);
/// Brute force is unchanged when every u_j moves to u_j + w p^{d_j}, w = 1, 2.
cli::Report perturbation_check(const IntVec& mu, std::int64_t p, std::int64_t dmax, double tol,
                               std::uint64_t budget = 10'000'000);
cli::Report lemma3_check(const IntVec& mu);
cli::Report prop5_check(const IntVec& mu, std::int64_t k_r);
cli::Report prop6_check(const IntVec& mu, const IntVec& k, std::int64_t p, double tol,
                        std::uint64_t budget = 10'000'000);
/// Decoration parity support of totally resonant arrays over Omega_A(muprime, k).
cli::Report lemma4_check(const IntVec& mu, std::int64_t k);
/// Pairwise disjointness of Omega(s) and the partition of Omega^>_B(mu, k_r).
cli::Report lemma5_6_check(const IntVec& mu, std::int64_t k_r);
/// The maps rho and rho' are bijections onto the stated sets.
cli::Report rho_check(const IntVec& mu, std::int64_t k_r);
/// Support of G_{Delta_C} over CQ_C(mu') by weighting vector: k_i even for
/// i < r and d_i, d_{2r-i} even below the last component.
cli::Report general_parity_check(const IntVec& mu, const IntVec& kprime);
/// Psi_k is a bijection from CQ_1(mu, k) onto the disjoint union over Xi_k.
cli::Report psi_check(const IntVec& mu, const IntVec& k);
/// Literal and pulled-back flavor-C decorations agree on CQ_C(muprime), and
/// short GT weights match G_{Delta_C} at t = -q^-1.
cli::Report decoration_check(const IntVec& muprime);


}  // namespace tokuyama::padic
