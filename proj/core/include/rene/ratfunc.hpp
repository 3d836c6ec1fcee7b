#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "rene/polynomial.hpp"

namespace rene {

/// Element of the rational-function field over the table's indeterminates.
/// Canonical storage: numerator and denominator are coprime polynomials with
/// integer coefficients that are jointly primitive, the denominator's leading
/// coefficient is positive, and zero is 0/1.
class RatFunc {
public:
    static RatFunc zero(VarTablePtr table);
    static RatFunc one(VarTablePtr table);
    static RatFunc constant(VarTablePtr table, Rational c);
    static RatFunc variable(VarTablePtr table, std::size_t index);
    static RatFunc variable(VarTablePtr table, std::string_view name);

    explicit RatFunc(Polynomial num);
    /// Reduces num/den to canonical form. Throws ZeroDenominator.
    RatFunc(Polynomial num, Polynomial den);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    const VarTablePtr& table() const { return num_.table(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    std::optional<Rational> as_constant() const;

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b); // DivisionByZero
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    RatFunc pow(long long k) const; // k == 0 yields 1; negative k inverts

    /// Exact equality as field elements, decided by cross-multiplication;
    /// does not rely on the stored reduced form.
    friend bool operator==(const RatFunc& a, const RatFunc& b);

    /// Exact value at a point; PoleAtPoint if the denominator vanishes there.
    Rational eval(const std::map<std::string, Rational>& subst) const;

    /// "(num)/(den)" with "/(den)" omitted when den == 1.
    std::string str() const;

private:
    struct reduced_tag {};
    RatFunc(Polynomial num, Polynomial den, reduced_tag);

    void reduce_full();
    void canonicalize_content();

    Polynomial num_;
    Polynomial den_;
};

/// Schwartz–Zippel style probabilistic equality: evaluates both sides at
/// `trials` pseudo-random rational points (numerators uniform in
/// [-bound, bound], denominators in [1, bound], resampling the whole tuple on
/// any pole) and reports false at the first disagreement. Deterministic for a
/// fixed seed.
bool prob_equal(const RatFunc& a, const RatFunc& b, unsigned trials,
                std::uint64_t seed, std::int64_t bound = 65536);

} // namespace rene
