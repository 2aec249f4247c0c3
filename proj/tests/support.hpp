#pragma once

#include "tokuyama/exactalg.hpp"

#include <random>

namespace testsupport {

using tokuyama::exactalg::HalfInt;
using tokuyama::exactalg::LaurentPoly;
using tokuyama::exactalg::Monomial;

inline LaurentPoly P(const std::string& s, int rank) { return tokuyama::exactalg::parse(s, rank); }

/// Random polynomial with at most max_terms terms and coefficients in [-9, 9].
inline LaurentPoly random_poly(std::mt19937& rng, int rank, int max_terms = 12) {
    std::uniform_int_distribution<int> nterms(0, max_terms), coef(-9, 9), ze(-4, 4), te(0, 3), qe(-3, 3);
    LaurentPoly p(rank);
    int n = nterms(rng);
    for (int k = 0; k < n; ++k) {
        Monomial m(rank);
        for (auto& z : m.zexp) z = HalfInt::from_twice(ze(rng));
        m.texp = te(rng);
        m.qexp = HalfInt::from_twice(qe(rng));
        p.add_term(m, coef(rng));
    }
    return p;
}

}  // namespace testsupport
