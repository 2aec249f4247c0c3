#pragma once

// Exact sparse Laurent polynomials in z_1^{1/2},...,z_r^{1/2}, t, q^{1/2}
// with arbitrary-precision integer coefficients.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace tokuyama::exactalg {

using Coeff = mpz_class;

/// A value in (1/2)Z stored as twice its value.
class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr HalfInt(std::int64_t integer) : twice_(2 * integer) {}
    static constexpr HalfInt from_twice(std::int64_t twice) {
        HalfInt h;
        h.twice_ = twice;
        return h;
    }

    constexpr std::int64_t twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    /// Integer value; throws if the value is a proper half-integer.
    std::int64_t to_integer() const;
    double to_double() const { return static_cast<double>(twice_) / 2.0; }
    std::string str() const;

    constexpr HalfInt operator-() const { return from_twice(-twice_); }
    constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
    constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }
    constexpr HalfInt operator*(std::int64_t k) const { return from_twice(twice_ * k); }
    constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
    constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }
    constexpr auto operator<=>(const HalfInt&) const = default;

private:
    std::int64_t twice_ = 0;
};

/// Exponent vector z^{zexp} t^{texp} q^{qexp}.
struct Monomial {
    std::vector<HalfInt> zexp;
    std::int64_t texp = 0;
    HalfInt qexp;

    Monomial() = default;
    explicit Monomial(int rank) : zexp(static_cast<std::size_t>(rank)) {}

    int rank() const { return static_cast<int>(zexp.size()); }
    bool is_one() const;
    Monomial operator*(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const;
    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;
};

/// Identifies one variable: z_i (1-based index), t or q.
struct Var {
    enum class Kind { Z, T, Q };
    Kind kind = Kind::T;
    int index = 0;

    static Var z(int i) { return {Kind::Z, i}; }
    static Var t() { return {Kind::T, 0}; }
    static Var q() { return {Kind::Q, 0}; }
    std::string name() const;
};

class LaurentPoly;

class RankMismatch : public std::invalid_argument {
public:
    RankMismatch(int a, int b);
};

class NonExactDivision : public std::runtime_error {
public:
    explicit NonExactDivision(std::string remainder_text);
    const std::string& remainder() const { return remainder_; }

private:
    std::string remainder_;
};

class SubstitutionError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class LaurentPoly {
public:
    using TermMap = std::map<Monomial, Coeff>;

    explicit LaurentPoly(int rank = 1);
    LaurentPoly(int rank, const Coeff& c);

    static LaurentPoly monomial(const Monomial& m, const Coeff& c = 1);
    static LaurentPoly z(int rank, int i, HalfInt e = 1, const Coeff& c = 1);
    static LaurentPoly t(int rank, std::int64_t e = 1, const Coeff& c = 1);
    static LaurentPoly q(int rank, HalfInt e = 1, const Coeff& c = 1);

    int rank() const { return rank_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    /// Coefficient of an exact monomial (zero if absent).
    Coeff coeff(const Monomial& m) const;
    /// Adds c*m in place, keeping canonical form.
    void add_term(const Monomial& m, const Coeff& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Coeff& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Coeff& c) { return a *= c; }
    bool operator==(const LaurentPoly& o) const { return rank_ == o.rank_ && terms_ == o.terms_; }

    LaurentPoly pow(unsigned n) const;
    /// Multiply every term by a monomial.
    LaurentPoly shifted(const Monomial& m) const;

    /// Canonical text: terms in ascending monomial order joined by " + ",
    /// each as `coef * z1^{a/2} ... t^{c} q^{d/2}` (see README for grammar).
    std::string serialize() const;
    /// Human-oriented rendering, e.g. `-z1^(3/2)*t^3 + 2*q^-1`.
    std::string pretty() const;

private:
    int rank_;
    TermMap terms_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);

/// Exact quotient a / b in the Laurent ring; throws NonExactDivision otherwise.
LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b);

using Binding = std::variant<mpq_class, LaurentPoly>;

/// Replaces each bound variable by a rational number or a polynomial.
/// Half-integer exponents need a square binding; negative exponents of a
/// polynomial binding need a monomial binding.
LaurentPoly substitute(const LaurentPoly& p, const std::vector<std::pair<Var, Binding>>& bindings);

/// The sub-polynomial multiplying the constrained exponents.
LaurentPoly coefficient_of(const LaurentPoly& p, const std::vector<std::pair<Var, HalfInt>>& constraints);

/// Full numeric evaluation at rational points; q-values must be squares when
/// half-integer q-exponents occur (likewise for z).
mpq_class evaluate_rational(const LaurentPoly& p, const std::vector<mpq_class>& z, const mpq_class& t,
                            const mpq_class& q);

/// Floating-point evaluation of a polynomial with no z or t dependence at q.
double evaluate_q(const LaurentPoly& p, double q);

LaurentPoly parse(const std::string& text, int rank);

/// Exponent of a variable in a monomial.
HalfInt exponent_of(const Monomial& m, Var v);
void set_exponent(Monomial& m, Var v, HalfInt e);

}  // namespace tokuyama::exactalg
