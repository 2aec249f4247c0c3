#pragma once

// Weights of B_r/C_r in e-check coordinates, the upsilon map, the deformed
// Weyl denominator and Spin(2r+1) characters via signed Weyl-group sums.

#include "tokuyama/exactalg.hpp"

#include <cstdint>
#include <vector>

namespace tokuyama::rootdata {

using exactalg::HalfInt;
using exactalg::LaurentPoly;
using IntVec = std::vector<std::int64_t>;

struct WeightVector {
    std::vector<HalfInt> coords;

    int rank() const { return static_cast<int>(coords.size()); }
    /// True if all coordinates are integers or all are proper half-integers.
    bool is_spin_weight() const;
    WeightVector operator+(const WeightVector& o) const;
    bool operator==(const WeightVector&) const = default;
};

/// A signed permutation acting by w(v)_{perm[i]} = signs[i] * v_i (0-based).
struct SignedPermutation {
    std::vector<int> perm;
    std::vector<int> signs;

    int sign() const;
    WeightVector apply(const WeightVector& v) const;
    SignedPermutation compose(const SignedPermutation& o) const;  // this after o
    static SignedPermutation identity(int r);
};

/// All 2^r r! elements, deterministic order.
std::vector<SignedPermutation> signed_permutations(int r);

/// Sum of lambda_i * epsilon_i: coordinate j is sum_{j<=i<r} lambda_i + lambda_r/2.
WeightVector lambda_to_evee(const IntVec& lambda, int r);
WeightVector rho(int r);
IntVec upsilon(const IntVec& mu);
/// Inverse of upsilon; throws if a leading coordinate is odd.
IntVec upsilon_inverse(const IntVec& v);

/// z^{w} = prod z_i^{w_i} as a LaurentPoly of the given rank.
LaurentPoly z_power(const WeightVector& w, const exactalg::Coeff& c = 1);

LaurentPoly deformed_denominator(int r);
/// sum_w sgn(w) z^{w(nu)}; requires nu_1 > ... > nu_r > 0.
LaurentPoly weyl_numerator(const WeightVector& nu);
LaurentPoly character(const IntVec& lambda, int r);

/// Weyl dimension formula for the Spin(2r+1) module of highest weight lambda.
mpz_class weyl_dimension(const IntVec& lambda, int r);
/// lambda + (1,...,1).
IntVec shift_rho(const IntVec& lambda);

}  // namespace tokuyama::rootdata
