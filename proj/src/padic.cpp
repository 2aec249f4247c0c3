#include "tokuyama/padic.hpp"

#include "tokuyama/rootdata.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <numbers>
#include <numeric>
#include <string>
#include <thread>

namespace tokuyama::padic {

namespace {

using exactalg::HalfInt;

int rank_of(const IntVec& d, const IntVec& mu) {
    int r = static_cast<int>(mu.size());
    if (r < 1) throw std::invalid_argument("mu must be nonempty");
    if (d.size() != static_cast<std::size_t>(2 * r - 1))
        throw std::invalid_argument("d must have 2r-1 entries");
    for (auto x : d)
        if (x < 0) throw std::invalid_argument("d must be nonnegative");
    return r;
}

std::int64_t ipow(std::int64_t p, std::int64_t e) {
    std::int64_t v = 1;
    for (std::int64_t i = 0; i < e; ++i) v *= p;
    return v;
}

LaurentPoly qpoly(HalfInt e, const exactalg::Coeff& c = 1) { return LaurentPoly::q(0, e, c); }
LaurentPoly one() { return LaurentPoly(0, 1); }

}  // namespace

// ---- short patterns of flavor B -------------------------------------------

IntVec l_vector(const IntVec& d, int r) {
    auto D = [&](int i) -> std::int64_t { return i == 0 ? 0 : d[static_cast<std::size_t>(i - 1)]; };
    std::int64_t below_r = 0;
    for (int j = 1; j < r; ++j) below_r += D(j);
    IntVec L;
    std::int64_t prefix = 0;
    for (int i = 1; i <= 2 * r - 1; ++i) {
        if (i < r) {
            prefix += D(i);
            L.push_back(prefix);
        } else if (i == r) {
            L.push_back(D(r) + 2 * below_r);
        } else {
            int ip = i - r;
            std::int64_t s = D(r) - D(ip - 1) + below_r;
            for (int j = 1; j <= ip; ++j) s += D(r + j);
            L.push_back(s);
        }
    }
    return L;
}

bool in_cq1(const IntVec& d, const IntVec& mu) {
    int r = rank_of(d, mu);
    auto D = [&](int i) { return d[static_cast<std::size_t>(i - 1)]; };
    auto M = [&](int i) { return mu[static_cast<std::size_t>(i - 1)]; };
    for (int i = 1; i < r; ++i)
        if (D(i) > M(i)) return false;
    for (int i = 1; i <= r - 2; ++i)
        if (D(2 * r - i) > M(i + 1) + D(i) - D(i + 1)) return false;
    return true;
}

bool in_cq1_le(const IntVec& d, const IntVec& mu) {
    int r = rank_of(d, mu);
    if (!in_cq1(d, mu)) return false;
    auto D = [&](int i) { return d[static_cast<std::size_t>(i - 1)]; };
    auto M = [&](int i) { return mu[static_cast<std::size_t>(i - 1)]; };
    if (D(r) > M(r)) return false;
    if (r >= 2 && D(r) > M(r) + 2 * (D(r - 1) - D(r + 1))) return false;
    return true;
}

bool brute_preconditions(const IntVec& d, const IntVec& mu) {
    int r = rank_of(d, mu);
    if (r < 2) return false;
    auto D = [&](int i) { return d[static_cast<std::size_t>(i - 1)]; };
    auto m = [&](int i) { return mu[static_cast<std::size_t>(i - 1)] - 1; };
    for (auto x : mu)
        if (x < 1) return false;
    for (int j = 1; j <= r - 2; ++j)
        if (D(j + 1) > m(j + 1) + D(j)) return false;
    for (int j = 1; j <= r - 2; ++j)
        if (D(j + 1) + D(2 * r - j) > m(j + 1) + D(j) + D(2 * r - j - 1)) return false;
    if (2 * D(r + 1) > m(r) + 2 * D(r - 1)) return false;
    return true;
}

IntVec weighting_B(const IntVec& d) {
    int r = static_cast<int>((d.size() + 1) / 2);
    auto D = [&](int i) { return d[static_cast<std::size_t>(i - 1)]; };
    IntVec k(static_cast<std::size_t>(r), 0);
    for (int i = 1; i <= r; ++i) {
        std::int64_t s = 0;
        for (int j = i; j <= 2 * r - 1; ++j) s += D(j);
        for (int j = 1; j < i; ++j) s += D(2 * r - j);
        k[static_cast<std::size_t>(i - 1)] = s;
    }
    return k;
}

IntVec weighting_C(const IntVec& d) {
    int r = static_cast<int>((d.size() + 1) / 2);
    auto D = [&](int i) { return d[static_cast<std::size_t>(i - 1)]; };
    IntVec k(static_cast<std::size_t>(r), 0);
    for (int i = 1; i < r; ++i) {
        std::int64_t s = D(r);
        for (int j = i; j <= 2 * r - 1; ++j) s += D(j);
        for (int j = 1; j < i; ++j) s += D(2 * r - j);
        k[static_cast<std::size_t>(i - 1)] = s;
    }
    std::int64_t s = 0;
    for (int j = 1; j <= r; ++j) s += D(2 * r - j);
    k[static_cast<std::size_t>(r - 1)] = s;
    return k;
}

// ---- brute force -----------------------------------------------------------

namespace {

struct Factor {
    int var;  // 1-based
    bool inverse;
    int power;
};

struct Term {
    std::int64_t coef;
    std::vector<Factor> factors;
    std::int64_t e;  // net exponent of p
    int level = 0;   // deepest variable
    std::int64_t scale = 0;
};

struct Plan {
    int r = 0;
    int nvars = 0;
    std::int64_t modulus = 1;  // p^N
    std::vector<std::vector<std::int64_t>> values;  // residues of c_j
    std::vector<std::vector<std::int64_t>> inverses;
    std::vector<std::vector<const Term*>> by_level;
    std::vector<Term> terms;
    std::int64_t exponent_sum = 0;  // sum of the exponents of the ranges
    std::uint64_t tuples = 1;
    std::uint64_t chain_work = 0;
};

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    if (m == 1) return 0;
    std::int64_t g = m, x = 0, x1 = 1, aa = ((a % m) + m) % m;
    while (aa != 0) {
        std::int64_t qt = g / aa;
        std::tie(g, aa) = std::make_pair(aa, g - qt * aa);
        std::tie(x, x1) = std::make_pair(x1, x - qt * x1);
    }
    return ((x % m) + m) % m;
}

Plan make_plan(const IntVec& d, const IntVec& mu, std::int64_t p, const BruteOptions& opt) {
    int r = rank_of(d, mu);
    if (r < 2) throw std::invalid_argument("the exponential sum needs rank at least 2");
    if (p < 2) throw std::invalid_argument("p must be a prime");
    for (std::int64_t f = 2; f * f <= p; ++f)
        if (p % f == 0) throw std::invalid_argument("p must be a prime");
    if (!opt.ignore_preconditions && !brute_preconditions(d, mu))
        throw PreconditionError("divisibility conditions fail for this pattern");

    auto D = [&](int i) -> std::int64_t { return i == 0 ? 0 : d[static_cast<std::size_t>(i - 1)]; };
    auto m = [&](int i) { return mu[static_cast<std::size_t>(i - 1)] - 1; };

    Plan plan;
    plan.r = r;
    plan.nvars = 2 * r - 1;
    auto add = [&](std::int64_t coef, std::vector<Factor> f, std::int64_t e) {
        if (e >= 0) return;
        Term t{coef, std::move(f), e};
        for (auto& x : t.factors) t.level = std::max(t.level, x.var);
        plan.terms.push_back(std::move(t));
    };
    add(1, {{1, false, 1}}, m(1) - D(1));
    for (int i = 1; i <= r - 2; ++i) {
        add(1, {{i, true, 1}, {i + 1, false, 1}}, m(i + 1) - D(i + 1));
        add(-1, {{2 * r - i, false, 1}, {2 * r - i - 1, true, 1}}, m(i + 1) + D(i) - D(i + 1) - D(2 * r - i));
    }
    add(1, {{r - 1, true, 2}, {r, false, 1}}, m(r) - D(r));
    add(2, {{r - 1, true, 1}, {r + 1, false, 1}}, m(r) + D(r - 1) - D(r + 1) - D(r));
    add(1, {{r + 1, false, 2}, {r, true, 1}}, m(r) + 2 * D(r - 1) - 2 * D(r + 1) - D(r));

    std::int64_t N = 0;
    for (auto& t : plan.terms) N = std::max(N, -t.e);
    if (N > 40) throw BudgetExceeded("phase denominator too large");
    plan.modulus = ipow(p, N);
    if (plan.modulus > (std::int64_t{1} << 40)) throw BudgetExceeded("phase denominator too large");

    IntVec L = l_vector(d, r);
    // Exponent of the range of c_j: one period of the phase in c_j, or L_j.
    IntVec R(static_cast<std::size_t>(plan.nvars), 0);
    for (int j = 1; j <= plan.nvars; ++j) {
        std::int64_t need = D(j);
        for (auto& t : plan.terms)
            for (auto& f : t.factors)
                if (f.var == j && !f.inverse) need = std::max(need, -t.e);
        auto Lj = L[static_cast<std::size_t>(j - 1)];
        R[static_cast<std::size_t>(j - 1)] = (opt.literal || need > Lj) ? Lj : need;
    }

    plan.values.resize(static_cast<std::size_t>(plan.nvars));
    plan.inverses.resize(static_cast<std::size_t>(plan.nvars));
    long double tuples = 1;
    std::vector<long double> sizes;
    for (int j = 1; j <= plan.nvars; ++j) {
        auto Rj = R[static_cast<std::size_t>(j - 1)];
        auto Lj = L[static_cast<std::size_t>(j - 1)];
        if (Lj < D(j)) throw std::logic_error("L_j < d_j");
        std::int64_t size = ipow(p, Rj);
        std::int64_t count = D(j) > 0 ? size - size / p : size;
        tuples *= static_cast<long double>(count);
        sizes.push_back(static_cast<long double>(count));
        plan.exponent_sum += Rj;
    }
    // Chain elimination visits each adjacent pair once and the triple (c_{r-1}, c_r, c_{r+1}) once.
    long double work = sizes[0] + sizes[static_cast<std::size_t>(2 * r - 2)];
    for (int j = 1; j <= r - 2; ++j) {
        work += sizes[static_cast<std::size_t>(j - 1)] * sizes[static_cast<std::size_t>(j)];
        work += sizes[static_cast<std::size_t>(2 * r - j - 1)] * sizes[static_cast<std::size_t>(2 * r - j - 2)];
    }
    work += sizes[static_cast<std::size_t>(r - 2)] * sizes[static_cast<std::size_t>(r - 1)] * sizes[static_cast<std::size_t>(r)];
    long double cost = opt.naive ? tuples : work;
    if (cost > static_cast<long double>(opt.budget))
        throw BudgetExceeded("brute force needs " + std::to_string(static_cast<double>(cost)) +
                             " terms, budget " + std::to_string(opt.budget));
    plan.tuples = static_cast<std::uint64_t>(tuples);
    plan.chain_work = static_cast<std::uint64_t>(work);

    for (int j = 1; j <= plan.nvars; ++j) {
        auto Rj = R[static_cast<std::size_t>(j - 1)];
        std::int64_t size = ipow(p, Rj);
        std::int64_t pd = ipow(p, D(j));
        auto& vals = plan.values[static_cast<std::size_t>(j - 1)];
        auto& invs = plan.inverses[static_cast<std::size_t>(j - 1)];
        for (std::int64_t c = 0; c < size; ++c) {
            if (D(j) > 0 && c % p == 0) continue;
            vals.push_back(c % plan.modulus);
            std::int64_t u = D(j) > 0 ? mod_inverse(c, pd) : 0;
            u += static_cast<std::int64_t>(opt.perturb) * pd;
            invs.push_back(u % plan.modulus);
        }
    }

    for (auto& t : plan.terms) {
        std::int64_t s = ipow(p, N + t.e) * t.coef;
        t.scale = ((s % plan.modulus) + plan.modulus) % plan.modulus;
    }
    plan.by_level.resize(static_cast<std::size_t>(plan.nvars + 1));
    for (auto& t : plan.terms) plan.by_level[static_cast<std::size_t>(t.level)].push_back(&t);
    return plan;
}

unsigned thread_count(const BruteOptions& opt) {
    unsigned n = opt.threads;
    if (n == 0) {
        n = std::max(1u, std::thread::hardware_concurrency());
        if (const char* env = std::getenv("TOKUYAMA_THREADS")) {
            long v = std::strtol(env, nullptr, 10);
            if (v > 0) n = std::min(n, static_cast<unsigned>(v));
        }
    }
    return std::max(1u, n);
}

// Kahan-compensated sum of exp(2 pi i x / M) weighted by counts.
struct KahanComplex {
    long double re = 0, im = 0, cre = 0, cim = 0;
    void add(long double a, long double b) {
        long double y = a - cre;
        long double t = re + y;
        cre = (t - re) - y;
        re = t;
        y = b - cim;
        t = im + y;
        cim = (t - im) - y;
        im = t;
    }
};

std::int64_t term_value(const Plan& plan, const Term& t, const std::vector<std::size_t>& idx) {
    const std::int64_t M = plan.modulus;
    __int128 v = t.scale;
    for (auto& f : t.factors) {
        auto k = idx[static_cast<std::size_t>(f.var - 1)];
        std::int64_t x = f.inverse ? plan.inverses[static_cast<std::size_t>(f.var - 1)][k]
                                   : plan.values[static_cast<std::size_t>(f.var - 1)][k];
        for (int e = 0; e < f.power; ++e) v = (v * x) % M;
    }
    return static_cast<std::int64_t>(v);
}

using CLD = std::complex<long double>;

// e(x / M), tabulated when M is small.
class Phase {
public:
    explicit Phase(std::int64_t M) : M_(M) {
        if (M_ <= (std::int64_t{1} << 22)) {
            table_.resize(static_cast<std::size_t>(M_));
            for (std::int64_t x = 0; x < M_; ++x) table_[static_cast<std::size_t>(x)] = direct(x);
        }
    }
    CLD operator()(std::int64_t x) const {
        return table_.empty() ? direct(x) : table_[static_cast<std::size_t>(x)];
    }

private:
    CLD direct(std::int64_t x) const {
        long double a = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(x) /
                        static_cast<long double>(M_);
        return {std::cos(a), std::sin(a)};
    }
    std::int64_t M_;
    std::vector<CLD> table_;
};

CLD naive_sum(const Plan& plan, const BruteOptions& opt) {
    const std::int64_t M = plan.modulus;
    const int n = plan.nvars;
    const bool use_histogram = M <= (std::int64_t{1} << 22);
    const auto& first = plan.values[0];
    const std::size_t outer = first.size();
    std::vector<std::vector<std::uint64_t>> hist_parts;
    std::vector<KahanComplex> outer_sums(outer);
    const Phase phase(M);

    // Leaves reached from a fixed outer index, accumulated into a histogram or directly.
    auto run_outer = [&](std::size_t o, std::vector<std::uint64_t>* hist) {
        std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
        std::vector<std::int64_t> partial(static_cast<std::size_t>(n + 1), 0);
        KahanComplex acc;
        std::function<void(int)> rec = [&](int level) {
            const auto& vals = plan.values[static_cast<std::size_t>(level - 1)];
            for (std::size_t k = 0; k < vals.size(); ++k) {
                if (level == 1 && k != o) continue;
                idx[static_cast<std::size_t>(level - 1)] = k;
                std::int64_t ph = partial[static_cast<std::size_t>(level - 1)];
                for (const Term* t : plan.by_level[static_cast<std::size_t>(level)])
                    ph = (ph + term_value(plan, *t, idx)) % M;
                if (level == n) {
                    if (hist) {
                        ++(*hist)[static_cast<std::size_t>(ph)];
                    } else {
                        CLD z = phase(ph);
                        acc.add(z.real(), z.imag());
                    }
                } else {
                    partial[static_cast<std::size_t>(level)] = ph;
                    rec(level + 1);
                }
            }
        };
        rec(1);
        outer_sums[o] = acc;
    };

    unsigned nthreads = std::min<unsigned>(thread_count(opt), static_cast<unsigned>(std::max<std::size_t>(1, outer)));
    if (use_histogram) hist_parts.assign(nthreads, std::vector<std::uint64_t>(static_cast<std::size_t>(M), 0));
    auto worker = [&](unsigned w) {
        for (std::size_t o = w; o < outer; o += nthreads) run_outer(o, use_histogram ? &hist_parts[w] : nullptr);
    };
    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < nthreads; ++w) pool.emplace_back(worker, w);
        for (auto& th : pool) th.join();
    }

    KahanComplex total;
    if (use_histogram) {
        for (std::int64_t x = 0; x < M; ++x) {
            std::uint64_t c = 0;
            for (auto& h : hist_parts) c += h[static_cast<std::size_t>(x)];
            if (c == 0) continue;
            CLD z = phase(x);
            total.add(static_cast<long double>(c) * z.real(), static_cast<long double>(c) * z.imag());
        }
    } else {
        for (auto& s : outer_sums) total.add(s.re, s.im);
    }
    return {total.re, total.im};
}

// Variable elimination: the phase couples c_j only to its neighbours on the
// paths c_1..c_{r-1} and c_{r+1}..c_{2r-1}, which meet c_r in one triangle.
CLD chain_sum(const Plan& plan, const BruteOptions& opt) {
    const int r = plan.r;
    const int n = plan.nvars;
    const std::int64_t M = plan.modulus;
    const Phase phase(M);
    auto size_of = [&](int j) { return plan.values[static_cast<std::size_t>(j - 1)].size(); };

    std::vector<std::vector<const Term*>> left(static_cast<std::size_t>(n + 1)), right(static_cast<std::size_t>(n + 1));
    std::vector<const Term*> middle;
    for (auto& t : plan.terms) {
        int lo = n, hi = 1;
        for (auto& f : t.factors) {
            lo = std::min(lo, f.var);
            hi = std::max(hi, f.var);
        }
        if (hi <= r - 1) {
            if (lo < hi - 1) throw std::logic_error("term couples distant variables");
            left[static_cast<std::size_t>(hi)].push_back(&t);
        } else if (lo >= r + 1) {
            if (hi > lo + 1) throw std::logic_error("term couples distant variables");
            right[static_cast<std::size_t>(lo)].push_back(&t);
        } else {
            if (lo < r - 1 || hi > r + 1) throw std::logic_error("term couples distant variables");
            middle.push_back(&t);
        }
    }

    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    auto phase_of = [&](const std::vector<const Term*>& ts) {
        std::int64_t ph = 0;
        for (const Term* t : ts) ph = (ph + term_value(plan, *t, idx)) % M;
        return ph;
    };

    // Left path: F_j(c_j) = sum over c_1..c_{j-1}.
    std::vector<CLD> F(size_of(1));
    for (std::size_t a = 0; a < F.size(); ++a) {
        idx[0] = a;
        F[a] = phase(phase_of(left[1]));
    }
    for (int j = 2; j <= r - 1; ++j) {
        std::vector<CLD> G(size_of(j), CLD(0));
        for (std::size_t b = 0; b < G.size(); ++b) {
            idx[static_cast<std::size_t>(j - 1)] = b;
            for (std::size_t a = 0; a < F.size(); ++a) {
                idx[static_cast<std::size_t>(j - 2)] = a;
                G[b] += F[a] * phase(phase_of(left[static_cast<std::size_t>(j)]));
            }
        }
        F = std::move(G);
    }

    // Right path: H_j(c_j) = sum over c_{j+1}..c_{2r-1}.
    std::vector<CLD> H(size_of(n));
    for (std::size_t a = 0; a < H.size(); ++a) {
        idx[static_cast<std::size_t>(n - 1)] = a;
        H[a] = phase(phase_of(right[static_cast<std::size_t>(n)]));
    }
    for (int j = n - 1; j >= r + 1; --j) {
        std::vector<CLD> G(size_of(j), CLD(0));
        for (std::size_t b = 0; b < G.size(); ++b) {
            idx[static_cast<std::size_t>(j - 1)] = b;
            for (std::size_t a = 0; a < H.size(); ++a) {
                idx[static_cast<std::size_t>(j)] = a;
                G[b] += H[a] * phase(phase_of(right[static_cast<std::size_t>(j)]));
            }
        }
        H = std::move(G);
    }

    // Triangle on (c_{r-1}, c_r, c_{r+1}), split over c_{r-1} between workers.
    const std::size_t na = size_of(r - 1), nb = size_of(r), nc = size_of(r + 1);
    unsigned nthreads = std::min<unsigned>(thread_count(opt), static_cast<unsigned>(std::max<std::size_t>(1, na)));
    std::vector<CLD> parts(nthreads, CLD(0));
    auto worker = [&](unsigned w) {
        std::vector<std::size_t> loc = idx;
        CLD acc(0);
        for (std::size_t a = w; a < na; a += nthreads) {
            loc[static_cast<std::size_t>(r - 2)] = a;
            CLD inner(0);
            for (std::size_t b = 0; b < nb; ++b) {
                loc[static_cast<std::size_t>(r - 1)] = b;
                for (std::size_t c = 0; c < nc; ++c) {
                    loc[static_cast<std::size_t>(r)] = c;
                    std::int64_t ph = 0;
                    for (const Term* t : middle) ph = (ph + term_value(plan, *t, loc)) % M;
                    inner += H[c] * phase(ph);
                }
            }
            acc += F[a] * inner;
        }
        parts[w] = acc;
    };
    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < nthreads; ++w) pool.emplace_back(worker, w);
        for (auto& th : pool) th.join();
    }
    CLD total(0);
    for (auto& s : parts) total += s;
    return total;
}

}  // namespace

std::uint64_t brute_force_terms(const IntVec& d, const IntVec& mu, std::int64_t p, const BruteOptions& opt) {
    BruteOptions o = opt;
    o.budget = UINT64_MAX;
    Plan plan = make_plan(d, mu, p, o);
    return opt.naive ? plan.tuples : plan.chain_work;
}

std::complex<double> brute_force_G(const IntVec& d, const IntVec& mu, std::int64_t p, const BruteOptions& opt) {
    const Plan plan = make_plan(d, mu, p, opt);
    CLD total = opt.naive ? naive_sum(plan, opt) : chain_sum(plan, opt);
    long double norm = std::pow(static_cast<long double>(p), static_cast<long double>(plan.exponent_sum));
    return {static_cast<double>(total.real() / norm), static_cast<double>(total.imag() / norm)};
}

// ---- decorated arrays ------------------------------------------------------

LaurentPoly gamma(bool boxed, bool circled) {
    if (boxed && circled) return LaurentPoly(0);
    if (boxed) return qpoly(-1, -1);
    if (circled) return one();
    return one() - qpoly(-1);
}

LaurentPoly gamma_tilde(bool boxed, bool circled, std::int64_t value) {
    bool even = value % 2 == 0;
    if (boxed && circled) return LaurentPoly(0);
    if (circled) return one();
    if (boxed) return even ? qpoly(-1, -1) : qpoly(HalfInt::from_twice(-1));
    return even ? one() - qpoly(-1) : LaurentPoly(0);
}

DecoratedArray decorate_B(const IntVec& d, const IntVec& mu) {
    int r = rank_of(d, mu);
    auto D = [&](int i) { return d[static_cast<std::size_t>(i - 1)]; };
    auto M = [&](int i) { return mu[static_cast<std::size_t>(i - 1)]; };
    DecoratedArray a;
    a.flavor = Flavor::B;
    std::size_t n = d.size();
    a.entries.assign(n, 0);
    a.boxed.assign(n, false);
    a.circled.assign(n, false);
    std::int64_t tail = 0;
    for (int i = 2 * r - 1; i >= 1; --i) {
        tail += D(i);
        a.entries[static_cast<std::size_t>(i - 1)] = tail;
        a.circled[static_cast<std::size_t>(i - 1)] = D(i) == 0;
    }
    for (int i = 1; i <= r; ++i) a.boxed[static_cast<std::size_t>(i - 1)] = D(i) == M(i);
    if (r >= 2) a.boxed[static_cast<std::size_t>(r)] = D(r) == M(r) + 2 * (D(r - 1) - D(r + 1));
    for (int i = 1; i <= r - 2; ++i)
        a.boxed[static_cast<std::size_t>(2 * r - i - 1)] = D(2 * r - i) == M(i + 1) + D(i) - D(i + 1);
    return a;
}

LaurentPoly g_delta(const DecoratedArray& arr) {
    LaurentPoly g = one();
    for (std::size_t i = 0; i < arr.size(); ++i) {
        g *= arr.flavor == Flavor::B ? gamma(arr.boxed[i], arr.circled[i])
                                     : gamma_tilde(arr.boxed[i], arr.circled[i], arr.entries[i]);
        if (g.is_zero()) break;
    }
    return g;
}

LaurentPoly g_delta_B(const IntVec& d, const IntVec& mu) { return g_delta(decorate_B(d, mu)); }

std::optional<LaurentPoly> closed_form_G(const IntVec& d, const IntVec& mu) {
    int r = rank_of(d, mu);
    if (r < 2) throw std::invalid_argument("closed form needs rank at least 2");
    if (!in_cq1(d, mu)) return LaurentPoly(0);
    if (in_cq1_le(d, mu)) return g_delta_B(d, mu);
    auto D = [&](int i) { return d[static_cast<std::size_t>(i - 1)]; };
    std::int64_t excess = D(r) - mu[static_cast<std::size_t>(r - 1)];
    if (D(r - 1) != D(r + 1) || excess <= 0) return std::nullopt;
    if (excess % 2 == 0) return LaurentPoly(0);
    auto arr = decorate_B(d, mu);
    LaurentPoly g = (one() - qpoly(-1)) * qpoly(-(excess + 1) / 2);
    for (int i = 1; i <= 2 * r - 1; ++i) {
        if (i == r || i == r + 1) continue;
        g *= gamma(arr.boxed[static_cast<std::size_t>(i - 1)], arr.circled[static_cast<std::size_t>(i - 1)]);
    }
    return g;
}

bool in_cq_c(const IntVec& d, const IntVec& muprime) {
    int r = rank_of(d, muprime);
    auto D = [&](int i) { return d[static_cast<std::size_t>(i - 1)]; };
    auto M = [&](int i) { return muprime[static_cast<std::size_t>(i - 1)]; };
    for (int j = 1; j <= r; ++j)
        if (D(j) > M(j)) return false;
    for (int j = 1; j <= r - 1; ++j)
        if (D(j + 1) + D(2 * r - j) > M(j + 1) + D(j)) return false;
    return true;
}

DecoratedArray decorate_C(const IntVec& d, const IntVec& muprime, MiddleEntry middle) {
    int r = rank_of(d, muprime);
    auto D = [&](int i) { return d[static_cast<std::size_t>(i - 1)]; };
    auto M = [&](int i) { return muprime[static_cast<std::size_t>(i - 1)]; };
    DecoratedArray a;
    a.flavor = Flavor::C;
    std::size_t n = d.size();
    a.entries.assign(n, 0);
    a.boxed.assign(n, false);
    a.circled.assign(n, false);
    std::int64_t bar = 0;
    for (int j = 1; j <= r - 1; ++j) {
        bar += D(2 * r - j);
        auto at = static_cast<std::size_t>(2 * r - j - 1);
        a.entries[at] = bar;
        a.circled[at] = D(2 * r - j) == 0;
        a.boxed[at] = D(j + 1) == M(j + 1) + D(j) - D(2 * r - j);
    }
    std::int64_t c = bar + (middle == MiddleEntry::doubled ? 2 : 1) * D(r);
    a.entries[static_cast<std::size_t>(r - 1)] = c;
    for (int j = r - 1; j >= 1; --j) {
        c += D(j);
        a.entries[static_cast<std::size_t>(j - 1)] = c;
    }
    for (int j = 1; j <= r; ++j) {
        a.circled[static_cast<std::size_t>(j - 1)] = D(j) == 0;
        a.boxed[static_cast<std::size_t>(j - 1)] = D(j) == M(j);
    }
    return a;
}

gtpatterns::ShortGTPattern short_gt_from_d(const IntVec& d, const IntVec& muprime) {
    int r = rank_of(d, muprime);
    auto D = [&](int i) { return d[static_cast<std::size_t>(i - 1)]; };
    gtpatterns::ShortGTPattern p;
    p.a0 = gtpatterns::top_row(muprime);
    p.b1.assign(static_cast<std::size_t>(r), 0);
    p.a1.assign(static_cast<std::size_t>(r - 1), 0);
    p.b1[static_cast<std::size_t>(r - 1)] = D(r);
    for (int j = 1; j < r; ++j) {
        p.b1[static_cast<std::size_t>(j - 1)] = D(j) + p.a0[static_cast<std::size_t>(j)];
        p.a1[static_cast<std::size_t>(j - 1)] = p.b1[static_cast<std::size_t>(j - 1)] - D(2 * r - j);
    }
    return p;
}

IntVec d_from_short_gt(const gtpatterns::ShortGTPattern& p1) {
    int r = p1.rank();
    IntVec d(static_cast<std::size_t>(2 * r - 1), 0);
    d[static_cast<std::size_t>(r - 1)] = p1.b1[static_cast<std::size_t>(r - 1)];
    for (int j = 1; j < r; ++j) {
        d[static_cast<std::size_t>(j - 1)] = p1.b1[static_cast<std::size_t>(j - 1)] - p1.a0[static_cast<std::size_t>(j)];
        d[static_cast<std::size_t>(2 * r - j - 1)] =
            p1.b1[static_cast<std::size_t>(j - 1)] - p1.a1[static_cast<std::size_t>(j - 1)];
    }
    return d;
}

DecoratedArray decorate_C_from_short_gt(const IntVec& d, const IntVec& muprime, MiddleEntry middle) {
    if (!in_cq_c(d, muprime)) throw PreconditionError("pattern is not in CQ_C");
    int r = static_cast<int>(muprime.size());
    auto p1 = short_gt_from_d(d, muprime);
    auto view = p1.as_rows();
    DecoratedArray a = decorate_C(d, muprime, middle);  // entries only; decorations replaced below
    auto mark = [&](std::size_t at, gtpatterns::EntryClass c) {
        using gtpatterns::EntryClass;
        a.boxed[at] = c == EntryClass::maximal || c == EntryClass::degenerate;
        a.circled[at] = c == EntryClass::minimal || c == EntryClass::degenerate;
    };
    for (int j = 1; j <= r; ++j)
        mark(static_cast<std::size_t>(j - 1), gtpatterns::classify(view, {true, 1, j}));
    for (int j = 1; j < r; ++j)
        mark(static_cast<std::size_t>(2 * r - j - 1), gtpatterns::classify(view, {false, 1, j + 1}));
    return a;
}

LaurentPoly g_delta_C(const IntVec& d, const IntVec& muprime, MiddleEntry middle) {
    return g_delta(decorate_C(d, muprime, middle));
}

namespace {

// Nonnegative vectors of length n with entry j at most bound[j] and total at most cap.
void for_each_bounded(const IntVec& bound, std::int64_t cap, const std::function<void(const IntVec&)>& visit) {
    IntVec cur(bound.size(), 0);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t j, std::int64_t left) {
        if (j == bound.size()) {
            visit(cur);
            return;
        }
        for (std::int64_t x = 0; x <= std::min(bound[j], left); ++x) {
            cur[j] = x;
            rec(j + 1, left - x);
        }
        cur[j] = 0;
    };
    rec(0, cap);
}

}  // namespace

std::vector<IntVec> cq1_with_weighting(const IntVec& mu, const IntVec& k) {
    int r = static_cast<int>(mu.size());
    if (k.size() != mu.size()) throw std::invalid_argument("k and mu must have equal length");
    std::int64_t total = k[0];
    std::vector<IntVec> out;
    if (total < 0) return out;
    IntVec bound(static_cast<std::size_t>(2 * r - 1), total);
    for (int i = 1; i < r; ++i) bound[static_cast<std::size_t>(i - 1)] = std::min(total, mu[static_cast<std::size_t>(i - 1)]);
    for_each_bounded(bound, total, [&](const IntVec& d) {
        if (std::accumulate(d.begin(), d.end(), std::int64_t{0}) != total) return;
        if (in_cq1(d, mu) && weighting_B(d) == k) out.push_back(d);
    });
    return out;
}

std::vector<IntVec> cq_c(const IntVec& muprime) {
    int r = static_cast<int>(muprime.size());
    IntVec bound(static_cast<std::size_t>(2 * r - 1), 0);
    std::int64_t cap = 0;
    for (int j = 1; j <= r; ++j) bound[static_cast<std::size_t>(j - 1)] = muprime[static_cast<std::size_t>(j - 1)];
    for (int j = 1; j < r; ++j) {
        auto b = muprime[static_cast<std::size_t>(j)] + muprime[static_cast<std::size_t>(j - 1)];
        bound[static_cast<std::size_t>(2 * r - j - 1)] = b;
    }
    for (auto b : bound) cap += b;
    std::vector<IntVec> out;
    for_each_bounded(bound, cap, [&](const IntVec& d) {
        if (in_cq_c(d, muprime)) out.push_back(d);
    });
    return out;
}

std::vector<IntVec> cq_c_with_weighting(const IntVec& muprime, const IntVec& kprime) {
    if (kprime.size() != muprime.size()) throw std::invalid_argument("k and mu must have equal length");
    std::vector<IntVec> out;
    for (auto& d : cq_c(muprime))
        if (weighting_C(d) == kprime) out.push_back(d);
    return out;
}

}  // namespace tokuyama::padic
