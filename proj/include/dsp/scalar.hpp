#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dsp/errors.hpp"

namespace dsp {

using Rational = mpq_class;

/// Interned variable symbols. Ordering used everywhere is by name, so that
/// printed output does not depend on interning order.
using VarId = std::uint32_t;
VarId var_id(std::string_view name);
const std::string& var_name(VarId id);
bool var_less(VarId a, VarId b);

/// Sparse monomial: (variable, exponent) pairs, exponents >= 1, sorted by
/// variable name.
struct Monomial {
    std::vector<std::pair<VarId, std::uint32_t>> factors;

    static Monomial one() { return {}; }
    bool is_one() const { return factors.empty(); }
    std::uint64_t total_degree() const;

    Monomial operator*(const Monomial& other) const;
    /// Quotient this/other if other divides this, else nullopt.
    std::optional<Monomial> divide_by(const Monomial& other) const;
    static Monomial gcd(const Monomial& a, const Monomial& b);

    /// Graded lexicographic order: total degree first, then lex with
    /// name-earlier variables dominating. Returns <0, 0, >0.
    static int cmp(const Monomial& a, const Monomial& b);
    bool operator==(const Monomial& other) const { return factors == other.factors; }
};

struct Term {
    Monomial mono;
    Rational coeff;
};

/// Multivariate polynomial over Q. Terms sorted descending in grlex order,
/// no zero coefficients.
class Poly {
public:
    Poly() = default;
    Poly(long v);
    Poly(const Rational& v);
    static Poly variable(std::string_view name);
    static Poly from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value of a constant polynomial (0 for the zero polynomial).
    Rational constant_value() const;
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading_term() const { return terms_.front(); }
    std::uint64_t degree() const;
    std::vector<VarId> variables() const;

    Poly operator+(const Poly&) const;
    Poly operator-(const Poly&) const;
    Poly operator*(const Poly&) const;
    Poly operator-() const;
    Poly operator*(const Rational&) const;
    Poly operator/(const Rational&) const;
    bool operator==(const Poly&) const;

    /// Exact quotient a such that a*divisor == *this, or nullopt.
    static std::optional<Poly> divide_exact(const Poly& dividend, const Poly& divisor);

    /// Content c (carrying the sign of the leading coefficient) such that
    /// *this / c has coprime integer coefficients and positive leading
    /// coefficient. Content of 0 is 1.
    Rational content() const;
    /// Common monomial factor of all terms. Pre: not zero.
    Monomial monomial_gcd() const;

private:
    std::vector<Term> terms_;
};

/// Univariate gcd (both args non-constant in a single shared variable);
/// result primitive with positive leading coefficient.
Poly gcd_univariate(const Poly& a, const Poly& b);

/// Element of the rational function field Q(t1,...,tm), kept as a fraction
/// of polynomials. Equality is decided by cross-multiplication, so full
/// normal forms are not required for correctness; normalization (content,
/// monomial and exact-division cancellation, univariate gcd) keeps the
/// representation small and printing deterministic.
class Scalar {
public:
    Scalar() : num_(0L), den_(1L) {}
    Scalar(long v) : num_(v), den_(1L) {}
    Scalar(const Rational& v) : num_(v), den_(1L) {}
    Scalar(Poly num) : num_(std::move(num)), den_(1L) { normalize(); }
    Scalar(Poly num, Poly den);
    static Scalar variable(std::string_view name) { return Scalar(Poly::variable(name)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_rational_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational rational_value() const;

    bool equals(const Scalar& other) const;
    bool operator==(const Scalar& other) const { return equals(other); }

    Scalar operator+(const Scalar&) const;
    Scalar operator-(const Scalar&) const;
    Scalar operator*(const Scalar&) const;
    Scalar operator/(const Scalar&) const;  // throws DivisionByZero
    Scalar operator-() const;
    Scalar inverse() const;  // throws DivisionByZero
    Scalar pow(long e) const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

private:
    Poly num_, den_;
    void normalize();
};

std::string to_string(const Poly& p);
std::string to_string(const Scalar& s);
std::string to_string(const Rational& r);

/// Parse an expression over rationals and symbols:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := rational | symbol | '(' expr ')' | '-' factor
///   rational := integer ('/' positive-integer)?
///   symbol := letter (letter|digit|'_')*
/// Whitespace is ignored. Throws SyntaxError / DivisionByZero.
Scalar parse_scalar(std::string_view src);

}  // namespace dsp
