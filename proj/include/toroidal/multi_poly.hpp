#ifndef TOROIDAL_MULTI_POLY_HPP
#define TOROIDAL_MULTI_POLY_HPP

#include "toroidal/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace toroidal {

using Exponent = std::vector<std::uint32_t>;

struct Term {
    Exponent exp;
    Rational coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

// Graded-lexicographic comparison: total degree first, then lexicographic
// with x_0 > x_1 > ... .
bool grlex_less(const Exponent& a, const Exponent& b);

struct GrlexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const { return grlex_less(b, a); }
};

struct ExponentHash {
    std::size_t operator()(const Exponent& e) const noexcept;
};

// Sparse polynomial in a fixed number of variables with rational
// coefficients. Terms are stored in descending graded-lex order with no zero
// coefficients, so two equal polynomials have identical term vectors.
class MultiPoly {
public:
    explicit MultiPoly(std::size_t nvars = 1);

    // Merges duplicate exponents, drops zeros and sorts.
    static MultiPoly from_terms(std::size_t nvars, std::vector<Term> terms);
    static MultiPoly constant(std::size_t nvars, const Rational& c);
    static MultiPoly variable(std::size_t nvars, std::size_t index);
    static MultiPoly monomial(std::size_t nvars, Exponent exp, const Rational& c);

    std::size_t nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;

    // Total degree; -1 for the zero polynomial.
    int degree() const;
    // Degree in one variable; -1 for the zero polynomial.
    int degree_in(std::size_t var) const;
    bool is_homogeneous() const;
    Rational coefficient(const Exponent& exp) const;
    Rational constant_term() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    MultiPoly& operator*=(const MultiPoly& other);
    MultiPoly& operator*=(const Rational& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b)
    {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    MultiPoly pow(unsigned exponent) const;
    MultiPoly partial(std::size_t var) const;
    Rational eval(std::span<const Rational> point) const;

    // Relabels variables: variable i of this polynomial becomes variable
    // mapping[i] of a polynomial in new_nvars variables.
    MultiPoly remap(std::size_t new_nvars, std::span<const std::size_t> mapping) const;

    std::string to_string() const;

private:
    std::size_t nvars_;
    std::vector<Term> terms_;
};

enum class ArithOp { add, sub, mul };

MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, ArithOp op);
MultiPoly poly_partial(const MultiPoly& p, std::size_t var);
Rational poly_eval(const MultiPoly& p, std::span<const Rational> point);

struct LeadingCoefficient {
    unsigned degree;
    MultiPoly coeff;
};

// Coefficient of var^deg where deg = deg_var(p). The coefficient keeps the
// same variable count and does not involve var.
LeadingCoefficient leading_coeff(const MultiPoly& p, std::size_t var);

// Quotient p / q; throws DomainError if q does not divide p exactly.
MultiPoly divide_exact(const MultiPoly& p, const MultiPoly& q);

} // namespace toroidal

#endif
