#include "rene/ratfunc.hpp"

#include <random>
#include <utility>

namespace rene {

RatFunc RatFunc::zero(VarTablePtr table) {
    return RatFunc(Polynomial::zero(std::move(table)));
}

RatFunc RatFunc::one(VarTablePtr table) {
    return RatFunc(Polynomial::one(std::move(table)));
}

RatFunc RatFunc::constant(VarTablePtr table, Rational c) {
    return RatFunc(Polynomial::constant(std::move(table), std::move(c)));
}

RatFunc RatFunc::variable(VarTablePtr table, std::size_t index) {
    return RatFunc(Polynomial::variable(std::move(table), index));
}

RatFunc RatFunc::variable(VarTablePtr table, std::string_view name) {
    return RatFunc(Polynomial::variable(std::move(table), name));
}

RatFunc::RatFunc(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::one(num_.table())) {
    canonicalize_content();
}

RatFunc::RatFunc(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    require_same_table(num_.table(), den_.table());
    if (den_.is_zero()) throw ZeroDenominator("rational function denominator is zero");
    reduce_full();
}

RatFunc::RatFunc(Polynomial num, Polynomial den, reduced_tag)
    : num_(std::move(num)), den_(std::move(den)) {
    canonicalize_content();
}

void RatFunc::reduce_full() {
    if (num_.is_zero()) {
        den_ = Polynomial::one(num_.table());
        return;
    }
    Polynomial g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = divexact(num_, g);
        den_ = divexact(den_, g);
    }
    canonicalize_content();
}

// Scale the coprime pair so both polynomials carry integer coefficients that
// are jointly primitive and the denominator's leading coefficient is
// positive. This makes the stored representation unique per field element.
void RatFunc::canonicalize_content() {
    if (num_.is_zero()) {
        den_ = Polynomial::one(num_.table());
        return;
    }
    auto [cn, pn] = num_.content_split();
    auto [cd, pd] = den_.content_split();
    Rational ratio = cn / cd; // reduced, positive denominator
    num_ = pn.scaled(Rational(ratio.num()));
    den_ = pd.scaled(Rational(ratio.den()));
}

std::optional<Rational> RatFunc::as_constant() const {
    if (!num_.is_constant() || !den_.is_constant()) return std::nullopt;
    return num_.constant_value() / den_.constant_value();
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

// The arithmetic below keeps results reduced without a full gcd of the final
// pair: with reduced operands, gcd splitting of the denominators (addition)
// or cross gcds (multiplication, division) already yield a coprime result.
RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Polynomial g = gcd(a.den_, b.den_);
    if (g.is_one()) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_,
                       RatFunc::reduced_tag{});
    }
    Polynomial da = divexact(a.den_, g);
    Polynomial db = divexact(b.den_, g);
    Polynomial t = a.num_ * db + b.num_ * da;
    if (t.is_zero()) return RatFunc::zero(a.table());
    Polynomial h = gcd(t, g);
    if (!h.is_one()) {
        t = divexact(t, h);
        g = divexact(g, h);
    }
    return RatFunc(std::move(t), g * da * db, RatFunc::reduced_tag{});
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc::zero(a.table());
    Polynomial g1 = gcd(a.num_, b.den_);
    Polynomial g2 = gcd(b.num_, a.den_);
    Polynomial num = (g1.is_one() ? a.num_ : divexact(a.num_, g1)) *
                     (g2.is_one() ? b.num_ : divexact(b.num_, g2));
    Polynomial den = (g2.is_one() ? a.den_ : divexact(a.den_, g2)) *
                     (g1.is_one() ? b.den_ : divexact(b.den_, g1));
    return RatFunc(std::move(num), std::move(den), RatFunc::reduced_tag{});
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZero("rational function division by zero");
    if (a.is_zero()) return a;
    Polynomial g1 = gcd(a.num_, b.num_);
    Polynomial g2 = gcd(b.den_, a.den_);
    Polynomial num = (g1.is_one() ? a.num_ : divexact(a.num_, g1)) *
                     (g2.is_one() ? b.den_ : divexact(b.den_, g2));
    Polynomial den = (g2.is_one() ? a.den_ : divexact(a.den_, g2)) *
                     (g1.is_one() ? b.num_ : divexact(b.num_, g1));
    return RatFunc(std::move(num), std::move(den), RatFunc::reduced_tag{});
}

RatFunc RatFunc::pow(long long k) const {
    if (k == 0) return one(table());
    if (k < 0) {
        if (is_zero()) throw DivisionByZero("negative power of zero");
        RatFunc inv(den_, num_);
        return inv.pow(-k);
    }
    const auto e = static_cast<unsigned>(k);
    return RatFunc(num_.pow(e), den_.pow(e), reduced_tag{});
}

bool operator==(const RatFunc& a, const RatFunc& b) {
    require_same_table(a.table(), b.table());
    return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
}

Rational RatFunc::eval(const std::map<std::string, Rational>& subst) const {
    Rational d = den_.eval(subst);
    if (d.is_zero()) throw PoleAtPoint("denominator vanishes at the evaluation point");
    return num_.eval(subst) / d;
}

std::string RatFunc::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

bool prob_equal(const RatFunc& a, const RatFunc& b, unsigned trials,
                std::uint64_t seed, std::int64_t bound) {
    require_same_table(a.table(), b.table());
    const VarTablePtr& table = a.table();
    if (bound < 1) bound = 1;
    std::mt19937_64 rng(seed);
    // mt19937_64 output is standardized; reducing it modulo the range keeps
    // runs reproducible across standard libraries.
    auto uniform = [&rng](std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<std::int64_t>(rng() % span);
    };

    for (unsigned t = 0; t < trials; ++t) {
        std::map<std::string, Rational> point;
        bool pole = true;
        while (pole) {
            point.clear();
            for (std::size_t v = 0; v < table->arity(); ++v) {
                point[table->name(v)] =
                    Rational(BigInt(uniform(-bound, bound)), BigInt(uniform(1, bound)));
            }
            pole = a.den().eval(point).is_zero() || b.den().eval(point).is_zero();
        }
        if (a.num().eval(point) * b.den().eval(point) !=
            b.num().eval(point) * a.den().eval(point)) {
            return false;
        }
    }
    return true;
}

} // namespace rene
