#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rene/rational.hpp"
#include "rene/vartable.hpp"

namespace rene {

/// Exponent vector with one entry per indeterminate of the owning table.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

    static Monomial unit(std::size_t arity) {
        return Monomial(std::vector<std::uint32_t>(arity, 0));
    }
    static Monomial var(std::size_t arity, std::size_t index, std::uint32_t power = 1);

    std::size_t arity() const { return exps_.size(); }
    std::uint32_t exp(std::size_t i) const { return exps_[i]; }
    unsigned total_degree() const;
    bool is_unit() const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    /// Componentwise difference o/this. Precondition: divides(o).
    Monomial quotient_of(const Monomial& o) const;
    static Monomial componentwise_min(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) = default;

    /// Graded lexicographic order: lower total degree sorts first; on ties the
    /// first differing exponent decides, so higher powers of earlier
    /// indeterminates sort later (and print first).
    friend bool operator<(const Monomial& a, const Monomial& b);

private:
    std::vector<std::uint32_t> exps_;
};

/// Sparse multivariate polynomial over Rational. Stored canonically: no zero
/// coefficients, term map ordered by the graded lex monomial order, so
/// representational equality is mathematical equality.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    static Polynomial zero(VarTablePtr table);
    static Polynomial constant(VarTablePtr table, Rational c);
    static Polynomial one(VarTablePtr table) { return constant(std::move(table), 1); }
    static Polynomial variable(VarTablePtr table, std::size_t index);
    static Polynomial variable(VarTablePtr table, std::string_view name);
    /// Builds from raw terms; zero coefficients are dropped. Throws on an
    /// exponent vector whose arity differs from the table's.
    static Polynomial from_terms(VarTablePtr table, TermMap terms);

    const VarTablePtr& table() const { return table_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    /// Zero polynomial yields 0; otherwise requires is_constant().
    Rational constant_value() const;

    unsigned total_degree() const; // zero polynomial reports 0
    unsigned degree_in(std::size_t var) const;
    bool contains_var(std::size_t var) const;

    const Monomial& leading_monomial() const; // precondition: !is_zero()
    const Rational& leading_coeff() const;    // precondition: !is_zero()

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial pow(unsigned k) const;

    Polynomial scaled(const Rational& c) const;
    Polynomial times_monomial(const Monomial& m, const Rational& c) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return same_table(a.table_, b.table_) && a.terms_ == b.terms_;
    }

    /// Exact value at a point. The substitution must bind every indeterminate
    /// that actually occurs; otherwise MissingBinding. Extra bindings and
    /// names outside the table are ignored.
    Rational eval(const std::map<std::string, Rational>& subst) const;

    /// Splits p into (signed content, integer-primitive part): the second
    /// component has coprime integer coefficients and a positive leading
    /// coefficient, and p == content * primitive. Zero splits as (0, 0).
    std::pair<Rational, Polynomial> content_split() const;
    Polynomial primitive_normalized() const { return content_split().second; }

    /// Canonical rendering, terms in descending graded lex order. With
    /// factor_content, the integer-normalized content is factored out front:
    /// "2*(m + n)" instead of "2*m + 2*n".
    std::string str(bool factor_content = false) const;

private:
    friend Polynomial divexact(const Polynomial& a, const Polynomial& b);

    Polynomial(VarTablePtr table, TermMap terms)
        : table_(std::move(table)), terms_(std::move(terms)) {}

    void add_term(const Monomial& m, const Rational& c);

    VarTablePtr table_;
    TermMap terms_;
};

/// Greatest common divisor, normalized to the integer-primitive associate
/// with positive leading coefficient; gcd(0, b) is normalized b. Primitive
/// pseudo-remainder-sequence recursion on the highest occurring variable.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Exact quotient. Throws DivisionByZero on zero divisor and InexactDivision
/// when the division leaves a remainder.
Polynomial divexact(const Polynomial& a, const Polynomial& b);

/// Least common multiple, normalized like gcd; lcm(0, b) == 0.
Polynomial lcm(const Polynomial& a, const Polynomial& b);

} // namespace rene
