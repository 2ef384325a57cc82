#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "c235/rational.hpp"

namespace c235 {

// Exponent vector; length always equals the owning polynomial's variable count.
using Monomial = std::vector<std::uint32_t>;

// Graded lexicographic order: total degree first, then lex on exponents.
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse exact multivariate polynomial over Rational with a fixed, ordered
// variable list. No zero coefficients are stored. Two polynomials interoperate
// only when their variable lists agree; align_to() extends/reorders explicitly.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GradedLexLess>;

    Polynomial() = default;
    explicit Polynomial(std::vector<std::string> variables);

    static Polynomial zero(std::vector<std::string> variables);
    static Polynomial constant(std::vector<std::string> variables, const Rational& c);
    static Polynomial variable(std::vector<std::string> variables, const std::string& name);

    const std::vector<std::string>& variables() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t index_of(const std::string& var) const;  // throws if unknown
    bool has_variable(const std::string& var) const;
    // true iff var occurs with positive exponent in some term
    bool depends_on(const std::string& var) const;
    unsigned total_degree() const;
    unsigned degree_in(const std::string& var) const;

    void add_term(const Monomial& exps, const Rational& coeff);  // accumulate, drop zeros

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(const Rational& c) const;
    bool operator==(const Polynomial& rhs) const;

    Polynomial partial(const std::string& var) const;
    Rational eval(const std::map<std::string, Rational>& point) const;
    Rational eval(const RationalVector& point) const;  // positional, full binding
    // substitute one variable by an exact value; result keeps the remaining variables
    Polynomial substitute(const std::string& var, const Rational& value) const;
    // reinterpret over a superset/reordering of the current variables (matched by name)
    Polynomial align_to(const std::vector<std::string>& variables) const;
    // drop variables the polynomial does not depend on; throws if it does
    Polynomial restrict_to(const std::vector<std::string>& variables) const;

    // canonical form: graded-lex descending, parseable by parse_expr
    std::string str() const;

private:
    std::vector<std::string> vars_;
    TermMap terms_;
};

Polynomial operator*(const Rational& c, const Polynomial& p);
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

// Compiled copy for fast float evaluation inside integrators.
class FloatPoly {
public:
    FloatPoly() = default;
    explicit FloatPoly(const Polynomial& p);
    double eval(std::span<const double> point) const;

private:
    struct Term {
        double coeff;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> powers;  // (var index, exponent)
    };
    std::vector<Term> terms_;
};

}  // namespace c235
