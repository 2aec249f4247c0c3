#pragma once

// Prime-power Whittaker coefficients H(p^k; p^lambda): the rank-one Ramanujan
// sum, the recursion through flavor-C short patterns, and the comparisons with
// the deformed character and with sums over GT°.

#include "tokuyama/exactalg.hpp"
#include "tokuyama/report.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>
#include <vector>

namespace tokuyama::whittaker {

using exactalg::LaurentPoly;
using IntVec = std::vector<std::int64_t>;

/// Rank one: sum over c mod p^k, (c,p)=1, of e(p^m c / p^k), as a polynomial in q.
LaurentPoly h_base(std::int64_t k, std::int64_t m);

/// Counters gathered while the recursion runs.
struct RecursionStats {
    std::int64_t steps = 0;                  // (k', k'') splits visited
    std::int64_t negative_nu = 0;            // splits with a negative coordinate of nu
    std::int64_t negative_nu_nonzero_g = 0;  // ... whose G_{Delta_C} sum is nonzero
    std::int64_t odd_kprime = 0;             // splits removed by the evenness filter
    std::int64_t odd_kprime_nonzero_g = 0;   // ... whose G_{Delta_C} sum is nonzero
    std::int64_t mu_identity_failures = 0;   // mu'' != upsilon(nu + rho)
};

/// nu for one recursion step; empty when r = 1.
IntVec nu_of(const IntVec& lambda, const IntVec& kprime);
/// mu'' = (2 mu_2 + k'_1 + k'_3 - 2 k'_2, ..., mu_r + k'_{r-1} - 2 k'_r) with mu = lambda + rho.
IntVec mu_second(const IntVec& lambda, const IntVec& kprime);

/// Memoized coefficients; lookups may run concurrently, insertions take a
/// writer lock.
class Coefficients {
public:
    /// H(p^k; p^lambda), exact in q^{1/2}.
    LaurentPoly h(const IntVec& k, const IntVec& lambda);
    /// q^{-sum k} H(p^k; p^lambda).
    LaurentPoly h_flat(const IntVec& k, const IntVec& lambda);
    /// Sum of G_{Delta_C}(t) over t in CQ_C(muprime) with k_C(t) = kprime.
    LaurentPoly g_sum(const IntVec& muprime, const IntVec& kprime);
    RecursionStats stats() const;

private:
    LaurentPoly compute(const IntVec& k, const IntVec& lambda);

    mutable std::shared_mutex mutex_;
    std::map<std::pair<IntVec, IntVec>, LaurentPoly> h_cache_;
    std::map<std::pair<IntVec, IntVec>, LaurentPoly> g_cache_;
    RecursionStats stats_;
};

/// Process-wide table used by the free functions below.
Coefficients& shared_table();
LaurentPoly h_recursive(const IntVec& k, const IntVec& lambda);
LaurentPoly h_flat(const IntVec& k, const IntVec& lambda);

/// Coordinates of k with nonzero coefficient are bounded by the partial sums
/// of the top row of upsilon(lambda + rho).
IntVec support_box(const IntVec& lambda);

/// H-flat against the sum of G(P) at t = -q^-1 over P in GT° with
/// wt(P) = -(2k_i - 2k_{i-1} - a_{0,i}), for every k in the support box.
cli::Report gh_check(const IntVec& lambda, int r);
/// D_B(z; -q^-1) chi_lambda(z) against sum_k H-flat z_1^{k_1 - a_{0,1}/2} ...
cli::Report prop3_check(const IntVec& lambda, int r);

}  // namespace tokuyama::whittaker
