#include "tokuyama/rootdata.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tokuyama::rootdata {

using exactalg::Monomial;

bool WeightVector::is_spin_weight() const {
    if (coords.empty()) return true;
    bool first = coords.front().is_integer();
    return std::all_of(coords.begin(), coords.end(), [&](HalfInt h) { return h.is_integer() == first; });
}

WeightVector WeightVector::operator+(const WeightVector& o) const {
    if (o.rank() != rank()) throw exactalg::RankMismatch(rank(), o.rank());
    WeightVector w = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) w.coords[i] += o.coords[i];
    return w;
}

int SignedPermutation::sign() const {
    int s = 1;
    for (int x : signs) s *= x;
    std::vector<int> p = perm;
    for (std::size_t i = 0; i < p.size(); ++i) {
        while (p[i] != static_cast<int>(i)) {
            std::swap(p[i], p[static_cast<std::size_t>(p[i])]);
            s = -s;
        }
    }
    return s;
}

WeightVector SignedPermutation::apply(const WeightVector& v) const {
    WeightVector w{std::vector<HalfInt>(v.coords.size())};
    for (std::size_t i = 0; i < perm.size(); ++i)
        w.coords[static_cast<std::size_t>(perm[i])] = v.coords[i] * signs[i];
    return w;
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& o) const {
    SignedPermutation c;
    std::size_t r = perm.size();
    c.perm.resize(r);
    c.signs.resize(r);
    for (std::size_t i = 0; i < r; ++i) {
        auto j = static_cast<std::size_t>(o.perm[i]);
        c.perm[i] = perm[j];
        c.signs[i] = o.signs[i] * signs[j];
    }
    return c;
}

SignedPermutation SignedPermutation::identity(int r) {
    SignedPermutation s;
    s.perm.resize(static_cast<std::size_t>(r));
    std::iota(s.perm.begin(), s.perm.end(), 0);
    s.signs.assign(static_cast<std::size_t>(r), 1);
    return s;
}

std::vector<SignedPermutation> signed_permutations(int r) {
    std::vector<SignedPermutation> out;
    std::vector<int> perm(static_cast<std::size_t>(r));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (unsigned mask = 0; mask < (1u << r); ++mask) {
            SignedPermutation s;
            s.perm = perm;
            for (int i = 0; i < r; ++i) s.signs.push_back((mask >> i) & 1u ? -1 : 1);
            out.push_back(std::move(s));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

WeightVector lambda_to_evee(const IntVec& lambda, int r) {
    if (static_cast<int>(lambda.size()) != r) throw std::invalid_argument("lambda must have length r");
    WeightVector w{std::vector<HalfInt>(static_cast<std::size_t>(r))};
    for (int j = 0; j < r; ++j) {
        std::int64_t twice = lambda[static_cast<std::size_t>(r - 1)];
        for (int i = j; i < r - 1; ++i) twice += 2 * lambda[static_cast<std::size_t>(i)];
        w.coords[static_cast<std::size_t>(j)] = HalfInt::from_twice(twice);
    }
    return w;
}

WeightVector rho(int r) {
    if (r < 1) throw std::invalid_argument("rank must be positive");
    WeightVector w;
    for (int j = 1; j <= r; ++j) w.coords.push_back(HalfInt::from_twice(2 * (r - j) + 1));
    return w;
}

IntVec upsilon(const IntVec& mu) {
    IntVec v = mu;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) v[i] *= 2;
    return v;
}

IntVec upsilon_inverse(const IntVec& v) {
    IntVec mu = v;
    for (std::size_t i = 0; i + 1 < mu.size(); ++i) {
        if (mu[i] % 2 != 0) throw std::invalid_argument("upsilon_inverse: odd leading coordinate");
        mu[i] /= 2;
    }
    return mu;
}

IntVec shift_rho(const IntVec& lambda) {
    IntVec mu = lambda;
    for (auto& x : mu) x += 1;
    return mu;
}

LaurentPoly z_power(const WeightVector& w, const exactalg::Coeff& c) {
    Monomial m(w.rank());
    m.zexp = w.coords;
    return LaurentPoly::monomial(m, c);
}

LaurentPoly deformed_denominator(int r) {
    if (r < 1) throw std::invalid_argument("rank must be positive");
    Monomial pre(r);
    for (int i = 1; i <= r; ++i) pre.zexp[static_cast<std::size_t>(i - 1)] = HalfInt::from_twice(-(2 * (r - i) + 1));
    LaurentPoly d = LaurentPoly::monomial(pre);
    auto factor = [&](std::vector<HalfInt> e) {
        Monomial m(r);
        m.zexp = std::move(e);
        m.texp = 1;
        return LaurentPoly(r, 1) + LaurentPoly::monomial(m);
    };
    for (int i = 0; i < r; ++i) {
        std::vector<HalfInt> e(static_cast<std::size_t>(r));
        e[static_cast<std::size_t>(i)] = 1;
        d *= factor(e);
    }
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
            std::vector<HalfInt> e(static_cast<std::size_t>(r));
            e[static_cast<std::size_t>(i)] = 1;
            e[static_cast<std::size_t>(j)] = -1;
            d *= factor(e);
            e[static_cast<std::size_t>(j)] = 1;
            d *= factor(e);
        }
    }
    return d;
}

LaurentPoly weyl_numerator(const WeightVector& nu) {
    int r = nu.rank();
    for (int i = 0; i < r; ++i) {
        HalfInt next = i + 1 < r ? nu.coords[static_cast<std::size_t>(i + 1)] : HalfInt(0);
        if (!(nu.coords[static_cast<std::size_t>(i)] > next))
            throw std::invalid_argument("weyl_numerator: weight is not strictly dominant");
    }
    LaurentPoly n(r);
    for (const auto& w : signed_permutations(r)) {
        Monomial m(r);
        m.zexp = w.apply(nu).coords;
        n.add_term(m, w.sign());
    }
    return n;
}

LaurentPoly character(const IntVec& lambda, int r) {
    for (auto x : lambda)
        if (x < 0) throw std::invalid_argument("character: lambda must be dominant");
    WeightVector lr = lambda_to_evee(shift_rho(lambda), r);
    return exactalg::div_exact(weyl_numerator(lr), weyl_numerator(rho(r)));
}

mpz_class weyl_dimension(const IntVec& lambda, int r) {
    WeightVector nu = lambda_to_evee(shift_rho(lambda), r), rh = rho(r);
    // Positive roots of B_r: e_i - e_j, e_i + e_j (i<j), e_i; coordinates doubled.
    mpz_class num = 1, den = 1;
    for (int i = 0; i < r; ++i) {
        auto a = nu.coords[static_cast<std::size_t>(i)].twice(), b = rh.coords[static_cast<std::size_t>(i)].twice();
        num *= a;
        den *= b;
        for (int j = i + 1; j < r; ++j) {
            auto c = nu.coords[static_cast<std::size_t>(j)].twice(), d = rh.coords[static_cast<std::size_t>(j)].twice();
            num *= (a - c) * (a + c);
            den *= (b - d) * (b + d);
        }
    }
    if (num % den != 0) throw std::logic_error("weyl_dimension: non-integral quotient");
    return num / den;
}

}  // namespace tokuyama::rootdata
