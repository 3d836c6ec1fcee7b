#include "rene/polynomial.hpp"

#include <optional>
#include <utility>

// Multivariate gcd. The workhorse is the heuristic evaluate-reconstruct-verify
// scheme: map both operands to integers by evaluating the variables at a
// point well beyond the coefficient range, take an integer gcd there, lift it
// back through balanced base-xi digits, and accept the candidate only after
// exact trial division by both inputs (a verified candidate is a true gcd).
// When the heuristic runs out of retries or the evaluation bounds explode, a
// subresultant pseudo-remainder sequence on the highest occurring variable
// decides the answer unconditionally.

namespace rene {

namespace {

// Highest-index indeterminate occurring in either polynomial, or -1.
int top_var(const Polynomial& a, const Polynomial& b) {
    for (int v = static_cast<int>(a.table()->arity()) - 1; v >= 0; --v) {
        const auto sv = static_cast<std::size_t>(v);
        if (a.contains_var(sv) || b.contains_var(sv)) return v;
    }
    return -1;
}

// Coefficient of x^k when p is read as univariate in x = var v; the
// exponent of v is removed from the returned polynomial's monomials.
Polynomial coeff_of_power(const Polynomial& p, std::size_t v, std::uint32_t k) {
    Polynomial::TermMap out;
    const Monomial shift = Monomial::var(p.table()->arity(), v, k);
    for (const auto& [m, c] : p.terms()) {
        if (m.exp(v) == k) out.emplace(shift.quotient_of(m), c);
    }
    return Polynomial::from_terms(p.table(), std::move(out));
}

// gcd of the univariate-in-v coefficients; stops early once it hits 1.
Polynomial content_in(const Polynomial& p, std::size_t v) {
    Polynomial g = Polynomial::zero(p.table());
    for (std::uint32_t k = 0; k <= p.degree_in(v); ++k) {
        Polynomial coeff = coeff_of_power(p, v, k);
        if (coeff.is_zero()) continue;
        g = gcd(g, coeff);
        if (g.is_one()) break;
    }
    return g;
}

// lc(w)^(delta+1) * u mod w in variable v, the classical pseudo-remainder.
// The reduction loop may cancel in fewer than delta+1 steps; the tail factor
// is multiplied back so the subresultant divisions below stay exact.
Polynomial prem(Polynomial u, const Polynomial& w, std::size_t v, unsigned delta) {
    const unsigned dw = w.degree_in(v);
    const Polynomial lcw = coeff_of_power(w, v, dw);
    const std::size_t arity = w.table()->arity();
    unsigned steps = 0;
    while (!u.is_zero()) {
        const unsigned du = u.degree_in(v);
        if (du < dw) break;
        const Polynomial lcu = coeff_of_power(u, v, du);
        Polynomial shifted = (lcu * w).times_monomial(Monomial::var(arity, v, du - dw), 1);
        u = lcw * u - shifted;
        ++steps;
    }
    if (!u.is_zero() && steps < delta + 1) u = u * lcw.pow(delta + 1 - steps);
    return u;
}

// Largest monomial dividing every term. Precondition: p is nonzero.
Monomial monomial_content(const Polynomial& p) {
    auto it = p.terms().begin();
    Monomial m = it->first;
    for (++it; it != p.terms().end(); ++it) {
        m = Monomial::componentwise_min(m, it->first);
        if (m.is_unit()) break;
    }
    return m;
}

Polynomial strip_monomial(const Polynomial& p, const Monomial& m) {
    if (m.is_unit()) return p;
    Polynomial::TermMap out;
    for (const auto& [mono, c] : p.terms()) out.emplace(m.quotient_of(mono), c);
    return Polynomial::from_terms(p.table(), std::move(out));
}

// Subresultant PRS on operands primitive with respect to v, both of positive
// degree in v. Returns the primitive gcd of the pair.
Polynomial gcd_prs(Polynomial u, Polynomial w, std::size_t v) {
    if (u.degree_in(v) < w.degree_in(v)) std::swap(u, w);
    Polynomial g = Polynomial::one(u.table());
    Polynomial h = g;
    while (true) {
        const unsigned delta = u.degree_in(v) - w.degree_in(v);
        Polynomial r = prem(std::move(u), w, v, delta);
        if (r.is_zero()) break;
        if (r.degree_in(v) == 0) {
            return Polynomial::one(w.table()); // primitive parts are coprime
        }
        u = w;
        w = divexact(r, g * h.pow(delta));
        g = coeff_of_power(u, v, u.degree_in(v));
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            h = divexact(g.pow(delta), h.pow(delta - 1));
        }
    }
    return divexact(w, content_in(w, v)).primitive_normalized();
}

// ---- heuristic gcd --------------------------------------------------------

std::optional<Polynomial> try_divide(const Polynomial& a, const Polynomial& b) {
    try {
        return divexact(a, b);
    } catch (const InexactDivision&) {
        return std::nullopt;
    }
}

// Largest |numerator| over the (integer) coefficients.
BigInt coeff_norm(const Polynomial& p) {
    BigInt norm = 0;
    for (const auto& [m, c] : p.terms()) {
        BigInt a = abs_of(c.num());
        if (a > norm) norm = std::move(a);
    }
    return norm;
}

// p with variable v evaluated at the integer xi.
Polynomial eval_var(const Polynomial& p, std::size_t v, const BigInt& xi) {
    std::vector<BigInt> powers{BigInt(1)};
    Polynomial::TermMap out;
    const std::size_t arity = p.table()->arity();
    for (const auto& [m, c] : p.terms()) {
        while (powers.size() <= m.exp(v)) powers.push_back(powers.back() * xi);
        Monomial rest = Monomial::var(arity, v, m.exp(v)).quotient_of(m);
        auto [it, inserted] = out.try_emplace(rest, c * Rational(powers[m.exp(v)]));
        if (!inserted) it->second += c * Rational(powers[m.exp(v)]);
    }
    return Polynomial::from_terms(p.table(), std::move(out));
}

// Digit in (-xi/2, xi/2] with c == digit (mod xi).
BigInt balanced_mod(const BigInt& c, const BigInt& xi) {
    BigInt r = c % xi;
    if (2 * r > xi) {
        r -= xi;
    } else if (2 * r <= -xi) {
        r += xi;
    }
    return r;
}

// Lift gamma back to a polynomial in v through balanced base-xi digits.
Polynomial lift_digits(Polynomial gamma, std::size_t v, const BigInt& xi,
                       unsigned degree_cap, bool& ok) {
    const std::size_t arity = gamma.table()->arity();
    Polynomial g = Polynomial::zero(gamma.table());
    for (std::uint32_t i = 0; !gamma.is_zero(); ++i) {
        if (i > degree_cap) {
            ok = false; // candidate degree already exceeds both operands
            return g;
        }
        Polynomial::TermMap digit_terms;
        Polynomial::TermMap rest_terms;
        for (const auto& [m, c] : gamma.terms()) {
            BigInt d = balanced_mod(c.num(), xi);
            if (!d.is_zero()) digit_terms.emplace(m, Rational(d));
            BigInt q = (c.num() - d) / xi;
            if (!q.is_zero()) rest_terms.emplace(m, Rational(std::move(q)));
        }
        Polynomial digit = Polynomial::from_terms(gamma.table(), std::move(digit_terms));
        if (!digit.is_zero()) {
            g += digit.times_monomial(Monomial::var(arity, v, i), 1);
        }
        gamma = Polynomial::from_terms(gamma.table(), std::move(rest_terms));
    }
    ok = true;
    return g;
}

// Evaluate-reconstruct-verify gcd for integer-coefficient operands. Returns
// nullopt when the bounds blow up or the retries are exhausted.
std::optional<Polynomial> gcd_heuristic(const Polynomial& a, const Polynomial& b) {
    const int v_signed = top_var(a, b);
    if (v_signed < 0) return std::nullopt;
    const auto v = static_cast<std::size_t>(v_signed);
    const unsigned da = a.degree_in(v);
    const unsigned db = b.degree_in(v);

    BigInt na = coeff_norm(a);
    BigInt nb = coeff_norm(b);
    BigInt xi = 2 * (na < nb ? na : nb) + 2;

    for (int attempt = 0; attempt < 6; ++attempt) {
        const auto xi_bits = boost::multiprecision::msb(xi) + 1;
        if (xi_bits * (std::max(da, db) + 1) > 400000) return std::nullopt;

        Polynomial ag = eval_var(a, v, xi);
        Polynomial bg = eval_var(b, v, xi);
        if (!ag.is_zero() && !bg.is_zero()) {
            std::optional<Polynomial> gamma;
            if (top_var(ag, bg) < 0) {
                gamma = Polynomial::constant(
                    a.table(), Rational(gcd_of(ag.constant_value().num(),
                                               bg.constant_value().num())));
            } else {
                gamma = gcd_heuristic(ag, bg);
            }
            if (gamma) {
                bool ok = false;
                Polynomial g =
                    lift_digits(std::move(*gamma), v, xi, std::min(da, db), ok);
                if (ok && !g.is_zero()) {
                    g = g.primitive_normalized();
                    if (try_divide(a, g) && try_divide(b, g)) return g;
                }
            }
        }
        xi = xi * 73794 / 27011; // irrational-flavored growth dodges repeats
    }
    return std::nullopt;
}

// Both inputs integer-primitive, nonzero, with trivial monomial content.
Polynomial gcd_primitive(const Polynomial& a, const Polynomial& b) {
    if (a == b) return a;
    if (a.is_constant() || b.is_constant()) return Polynomial::one(a.table());

    if (auto fast = gcd_heuristic(a, b)) return *fast;

    const auto v = static_cast<std::size_t>(top_var(a, b));
    if (!a.contains_var(v)) return gcd(a, content_in(b, v));
    if (!b.contains_var(v)) return gcd(content_in(a, v), b);

    const Polynomial ca = content_in(a, v);
    const Polynomial cb = content_in(b, v);
    const Polynomial cg = gcd(ca, cb);
    Polynomial pg = gcd_prs(divexact(a, ca), divexact(b, cb), v);
    return (pg.is_one() ? cg : cg * pg).primitive_normalized();
}

} // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    require_same_table(a.table(), b.table());
    if (a.is_zero()) return b.primitive_normalized();
    if (b.is_zero()) return a.primitive_normalized();

    const Monomial ma = monomial_content(a);
    const Monomial mb = monomial_content(b);
    const Monomial mg = Monomial::componentwise_min(ma, mb);
    Polynomial g = gcd_primitive(strip_monomial(a, ma).primitive_normalized(),
                                 strip_monomial(b, mb).primitive_normalized());
    return mg.is_unit() ? g : g.times_monomial(mg, 1);
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial::zero(a.table());
    return (divexact(a, gcd(a, b)) * b).primitive_normalized();
}

} // namespace rene
