#include "tokuyama/exactalg.hpp"

#include <cmath>
#include <regex>
#include <sstream>

namespace tokuyama::exactalg {

std::int64_t HalfInt::to_integer() const {
    if (!is_integer()) throw std::domain_error("half-integer " + str() + " is not an integer");
    return twice_ / 2;
}

std::string HalfInt::str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

bool Monomial::is_one() const {
    if (texp != 0 || qexp.twice() != 0) return false;
    for (auto e : zexp)
        if (e.twice() != 0) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial m = *this;
    for (std::size_t i = 0; i < zexp.size(); ++i) m.zexp[i] += o.zexp[i];
    m.texp += o.texp;
    m.qexp += o.qexp;
    return m;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial m = *this;
    for (std::size_t i = 0; i < zexp.size(); ++i) m.zexp[i] -= o.zexp[i];
    m.texp -= o.texp;
    m.qexp -= o.qexp;
    return m;
}

std::string Var::name() const {
    switch (kind) {
        case Kind::Z: return "z" + std::to_string(index);
        case Kind::T: return "t";
        case Kind::Q: return "q";
    }
    return "?";
}

HalfInt exponent_of(const Monomial& m, Var v) {
    switch (v.kind) {
        case Var::Kind::Z:
            if (v.index < 1 || v.index > m.rank()) throw std::out_of_range("no variable " + v.name());
            return m.zexp[static_cast<std::size_t>(v.index - 1)];
        case Var::Kind::T: return HalfInt(m.texp);
        case Var::Kind::Q: return m.qexp;
    }
    return {};
}

void set_exponent(Monomial& m, Var v, HalfInt e) {
    switch (v.kind) {
        case Var::Kind::Z:
            if (v.index < 1 || v.index > m.rank()) throw std::out_of_range("no variable " + v.name());
            m.zexp[static_cast<std::size_t>(v.index - 1)] = e;
            break;
        case Var::Kind::T: m.texp = e.to_integer(); break;
        case Var::Kind::Q: m.qexp = e; break;
    }
}

RankMismatch::RankMismatch(int a, int b)
    : std::invalid_argument("rank mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}

NonExactDivision::NonExactDivision(std::string remainder_text)
    : std::runtime_error("non-exact division, remainder: " + remainder_text), remainder_(std::move(remainder_text)) {}

LaurentPoly::LaurentPoly(int rank) : rank_(rank) {
    if (rank < 0) throw std::invalid_argument("rank must be nonnegative");
}

LaurentPoly::LaurentPoly(int rank, const Coeff& c) : LaurentPoly(rank) {
    if (c != 0) terms_.emplace(Monomial(rank), c);
}

LaurentPoly LaurentPoly::monomial(const Monomial& m, const Coeff& c) {
    LaurentPoly p(m.rank());
    p.add_term(m, c);
    return p;
}

LaurentPoly LaurentPoly::z(int rank, int i, HalfInt e, const Coeff& c) {
    Monomial m(rank);
    set_exponent(m, Var::z(i), e);
    return monomial(m, c);
}

LaurentPoly LaurentPoly::t(int rank, std::int64_t e, const Coeff& c) {
    Monomial m(rank);
    m.texp = e;
    return monomial(m, c);
}

LaurentPoly LaurentPoly::q(int rank, HalfInt e, const Coeff& c) {
    Monomial m(rank);
    m.qexp = e;
    return monomial(m, c);
}

Coeff LaurentPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff(0) : it->second;
}

void LaurentPoly::add_term(const Monomial& m, const Coeff& c) {
    if (m.rank() != rank_) throw RankMismatch(rank_, m.rank());
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.rank_ != rank_) throw RankMismatch(rank_, o.rank_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (o.rank_ != rank_) throw RankMismatch(rank_, o.rank_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.rank_ != b.rank_) throw RankMismatch(a.rank_, b.rank_);
    LaurentPoly r(a.rank_);
    Coeff prod;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            prod = ca * cb;
            auto [it, inserted] = r.terms_.try_emplace(ma * mb, prod);
            if (!inserted) it->second += prod;
        }
    }
    std::erase_if(r.terms_, [](const auto& kv) { return kv.second == 0; });
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Coeff& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
    LaurentPoly result(rank_, 1);
    LaurentPoly base = *this;
    while (n > 0) {
        if (n & 1u) result *= base;
        n >>= 1u;
        if (n > 0) base *= base;
    }
    return result;
}

LaurentPoly LaurentPoly::shifted(const Monomial& m) const {
    if (m.rank() != rank_) throw RankMismatch(rank_, m.rank());
    LaurentPoly r(rank_);
    for (const auto& [mm, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), mm * m, c);
    return r;
}

std::string LaurentPoly::serialize() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        out += c.get_str();
        std::vector<std::string> factors;
        for (int i = 0; i < rank_; ++i) {
            auto e = m.zexp[static_cast<std::size_t>(i)];
            if (e.twice() != 0) factors.push_back("z" + std::to_string(i + 1) + "^{" + std::to_string(e.twice()) + "/2}");
        }
        if (m.texp != 0) factors.push_back("t^{" + std::to_string(m.texp) + "}");
        if (m.qexp.twice() != 0) factors.push_back("q^{" + std::to_string(m.qexp.twice()) + "/2}");
        if (!factors.empty()) {
            out += " *";
            for (const auto& f : factors) out += " " + f;
        }
    }
    return out;
}

namespace {

std::string pretty_power(const std::string& var, HalfInt e) {
    if (e == HalfInt(1)) return var;
    if (e.is_integer()) return var + "^" + std::to_string(e.twice() / 2);
    return var + "^(" + e.str() + ")";
}

}  // namespace

std::string LaurentPoly::pretty() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::vector<std::string> factors;
        for (int i = 0; i < rank_; ++i) {
            auto e = m.zexp[static_cast<std::size_t>(i)];
            if (e.twice() != 0) factors.push_back(pretty_power("z" + std::to_string(i + 1), e));
        }
        if (m.texp != 0) factors.push_back(pretty_power("t", HalfInt(m.texp)));
        if (m.qexp.twice() != 0) factors.push_back(pretty_power("q", m.qexp));
        Coeff mag = abs(c);
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        std::string body;
        if (mag != 1 || factors.empty()) body = mag.get_str();
        for (const auto& f : factors) body += (body.empty() ? "" : "*") + f;
        out += body;
    }
    return out;
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.rank() != b.rank()) throw RankMismatch(a.rank(), b.rank());
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    LaurentPoly quotient(a.rank());
    if (a.is_zero()) return quotient;

    // Lexicographic order on exponents is a group order, so the quotient of an
    // exact division has all monomials between trail(a)/trail(b) and lead(a)/lead(b).
    const auto& [lead_m, lead_c] = *b.terms().rbegin();
    const Monomial floor = a.terms().begin()->first / b.terms().begin()->first;

    LaurentPoly rem = a;
    Coeff qc;
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.terms().rbegin();
        Monomial qm = rm / lead_m;
        if (qm < floor || qm.texp < 0 || !mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t()))
            throw NonExactDivision(rem.serialize());
        qc = rc / lead_c;
        quotient.add_term(qm, qc);
        for (const auto& [bm, bc] : b.terms()) rem.add_term(qm * bm, -qc * bc);
    }
    return quotient;
}

namespace {

mpq_class rational_pow(const mpq_class& base, std::int64_t n) {
    if (n < 0) {
        if (base == 0) throw SubstitutionError("negative power of zero");
        return rational_pow(mpq_class(base.get_den(), base.get_num()), -n);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(n));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(n));
    mpq_class r(num, den);
    r.canonicalize();
    return r;
}

mpq_class rational_half_pow(const mpq_class& base, HalfInt e, const std::string& var) {
    if (e.is_integer()) return rational_pow(base, e.twice() / 2);
    if (base < 0 || !mpz_perfect_square_p(base.get_num_mpz_t()) || !mpz_perfect_square_p(base.get_den_mpz_t()))
        throw SubstitutionError("half-integer power of " + var + " needs a square binding, got " + base.get_str());
    mpz_class sn = sqrt(base.get_num()), sd = sqrt(base.get_den());
    return rational_pow(mpq_class(sn, sd), e.twice());
}

// Power of a polynomial binding, possibly negative or half-integer.
LaurentPoly poly_half_pow(const LaurentPoly& value, HalfInt e, const std::string& var) {
    if (e.is_integer() && e.twice() >= 0) return value.pow(static_cast<unsigned>(e.twice() / 2));
    if (value.size() != 1)
        throw SubstitutionError("power " + e.str() + " of " + var + " needs a monomial binding");
    const auto& [m, c] = *value.terms().begin();
    if (e.is_integer()) {
        if (c != 1 && c != -1) throw SubstitutionError("negative power of " + var + " needs a unit coefficient");
        Monomial inv = Monomial(m.rank()) / m;
        return LaurentPoly::monomial(inv, c).pow(static_cast<unsigned>(-e.twice() / 2));
    }
    if (c < 0 || !mpz_perfect_square_p(c.get_mpz_t()) || m.texp % 2 != 0 || m.qexp.twice() % 2 != 0)
        throw SubstitutionError("half-integer power of " + var + " needs a square binding");
    Monomial root(m.rank());
    for (int i = 0; i < m.rank(); ++i) {
        auto z = m.zexp[static_cast<std::size_t>(i)];
        if (z.twice() % 2 != 0) throw SubstitutionError("half-integer power of " + var + " needs a square binding");
        root.zexp[static_cast<std::size_t>(i)] = HalfInt::from_twice(z.twice() / 2);
    }
    root.texp = m.texp / 2;
    root.qexp = HalfInt::from_twice(m.qexp.twice() / 2);
    Coeff rc = sqrt(c);
    if (e.twice() >= 0) return LaurentPoly::monomial(root, rc).pow(static_cast<unsigned>(e.twice()));
    if (rc != 1) throw SubstitutionError("negative power of " + var + " needs a unit coefficient");
    return LaurentPoly::monomial(Monomial(m.rank()) / root, 1).pow(static_cast<unsigned>(-e.twice()));
}

}  // namespace

LaurentPoly substitute(const LaurentPoly& p, const std::vector<std::pair<Var, Binding>>& bindings) {
    for (const auto& [v, b] : bindings) {
        if (v.kind == Var::Kind::Z && (v.index < 1 || v.index > p.rank()))
            throw SubstitutionError("no variable " + v.name() + " in rank " + std::to_string(p.rank()));
        if (const auto* lp = std::get_if<LaurentPoly>(&b); lp && lp->rank() != p.rank())
            throw RankMismatch(p.rank(), lp->rank());
    }
    std::map<Monomial, mpq_class> acc;
    for (const auto& [m, c] : p.terms()) {
        Monomial rest = m;
        mpq_class scalar(c);
        LaurentPoly factor(p.rank(), 1);
        bool has_poly = false;
        for (const auto& [v, b] : bindings) {
            HalfInt e = exponent_of(m, v);
            set_exponent(rest, v, HalfInt(0));
            if (e.twice() == 0) continue;
            if (const auto* r = std::get_if<mpq_class>(&b)) {
                scalar *= rational_half_pow(*r, e, v.name());
            } else {
                factor *= poly_half_pow(std::get<LaurentPoly>(b), e, v.name());
                has_poly = true;
            }
        }
        if (scalar == 0) continue;
        if (!has_poly) {
            acc[rest] += scalar;
            continue;
        }
        for (const auto& [fm, fc] : factor.terms()) acc[rest * fm] += scalar * mpq_class(fc);
    }
    LaurentPoly out(p.rank());
    for (auto& [m, v] : acc) {
        v.canonicalize();
        if (v == 0) continue;
        if (v.get_den() != 1) throw SubstitutionError("substitution produced non-integral coefficient " + v.get_str());
        if (m.texp < 0) throw SubstitutionError("substitution produced a negative power of t");
        out.add_term(m, v.get_num());
    }
    return out;
}

LaurentPoly coefficient_of(const LaurentPoly& p, const std::vector<std::pair<Var, HalfInt>>& constraints) {
    LaurentPoly out(p.rank());
    for (const auto& [m, c] : p.terms()) {
        bool match = true;
        Monomial rest = m;
        for (const auto& [v, e] : constraints) {
            if (exponent_of(m, v) != e) {
                match = false;
                break;
            }
            set_exponent(rest, v, HalfInt(0));
        }
        if (match) out.add_term(rest, c);
    }
    return out;
}

mpq_class evaluate_rational(const LaurentPoly& p, const std::vector<mpq_class>& z, const mpq_class& t,
                            const mpq_class& q) {
    if (static_cast<int>(z.size()) != p.rank()) throw RankMismatch(p.rank(), static_cast<int>(z.size()));
    mpq_class sum = 0;
    for (const auto& [m, c] : p.terms()) {
        mpq_class v(c);
        for (int i = 0; i < p.rank(); ++i)
            v *= rational_half_pow(z[static_cast<std::size_t>(i)], m.zexp[static_cast<std::size_t>(i)],
                                   "z" + std::to_string(i + 1));
        v *= rational_pow(t, m.texp);
        v *= rational_half_pow(q, m.qexp, "q");
        sum += v;
    }
    sum.canonicalize();
    return sum;
}

double evaluate_q(const LaurentPoly& p, double q) {
    double sum = 0.0, comp = 0.0;
    for (const auto& [m, c] : p.terms()) {
        if (m.texp != 0) throw std::invalid_argument("evaluate_q: polynomial depends on t");
        for (auto e : m.zexp)
            if (e.twice() != 0) throw std::invalid_argument("evaluate_q: polynomial depends on z");
        double term = c.get_d() * std::pow(q, m.qexp.to_double());
        double y = term - comp;
        double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    return sum;
}

LaurentPoly parse(const std::string& text, int rank) {
    LaurentPoly out(rank);
    std::string s = text;
    auto trim = [](std::string x) {
        auto b = x.find_first_not_of(" \t\r\n");
        if (b == std::string::npos) return std::string();
        auto e = x.find_last_not_of(" \t\r\n");
        return x.substr(b, e - b + 1);
    };
    s = trim(s);
    if (s == "0") return out;
    if (s.empty()) throw ParseError("empty polynomial text");

    static const std::regex factor_re(R"(^(z([0-9]+)|t|q)\^\{(-?[0-9]+)(/2)?\}$)");
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find(" + ", pos);
        std::string term = trim(s.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
        pos = next == std::string::npos ? s.size() + 1 : next + 3;

        std::string coef_text = term, rest;
        if (auto star = term.find(" * "); star != std::string::npos) {
            coef_text = term.substr(0, star);
            rest = term.substr(star + 3);
        }
        Coeff c;
        if (c.set_str(trim(coef_text), 10) != 0) throw ParseError("bad coefficient '" + coef_text + "'");
        Monomial m(rank);
        std::istringstream fs(rest);
        std::string f;
        while (fs >> f) {
            std::smatch mt;
            if (!std::regex_match(f, mt, factor_re)) throw ParseError("bad factor '" + f + "'");
            std::int64_t num = std::stoll(mt[3].str());
            bool halved = mt[4].matched;
            if (mt[1].str() == "t") {
                if (halved) throw ParseError("t exponents are integers: '" + f + "'");
                m.texp = num;
            } else {
                if (!halved) throw ParseError("z and q exponents are written over 2: '" + f + "'");
                if (mt[1].str() == "q") {
                    m.qexp = HalfInt::from_twice(num);
                } else {
                    int idx = std::stoi(mt[2].str());
                    if (idx < 1 || idx > rank) throw ParseError("variable out of range: '" + f + "'");
                    m.zexp[static_cast<std::size_t>(idx - 1)] = HalfInt::from_twice(num);
                }
            }
        }
        out.add_term(m, c);
    }
    return out;
}

}  // namespace tokuyama::exactalg
