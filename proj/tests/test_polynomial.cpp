#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rene/polynomial.hpp"
#include "rene/script.hpp"

using rene::BigInt;
using rene::Monomial;
using rene::Polynomial;
using rene::Rational;
using rene::VarTable;
using rene::VarTablePtr;

namespace {

const VarTablePtr kTable = VarTable::standard();

Polynomial var(std::string_view name) { return Polynomial::variable(kTable, name); }

Polynomial cst(long long v) { return Polynomial::constant(kTable, Rational(v)); }

Polynomial random_poly(std::mt19937_64& rng, unsigned max_terms = 5,
                       unsigned max_exp = 3) {
    Polynomial p = Polynomial::zero(kTable);
    const unsigned terms = rng() % (max_terms + 1);
    for (unsigned t = 0; t < terms; ++t) {
        Polynomial term = Polynomial::constant(
            kTable, Rational(BigInt(static_cast<std::int64_t>(rng() % 21) - 10),
                             BigInt(static_cast<std::int64_t>(rng() % 4) + 1)));
        for (std::size_t v = 0; v < kTable->arity(); ++v) {
            const auto e = static_cast<unsigned>(rng() % (max_exp + 1));
            term = term * Polynomial::variable(kTable, v).pow(e);
        }
        p += term;
    }
    return p;
}

Polynomial random_nonzero(std::mt19937_64& rng) {
    while (true) {
        Polynomial p = random_poly(rng);
        if (!p.is_zero()) return p;
    }
}

} // namespace

TEST_CASE("ring arithmetic on the worked examples") {
    Polynomial m = var("m"), n = var("n");
    CHECK((m + n) * (m - n) == m * m - n * n);
    Polynomial p = m * n + cst(3);
    CHECK(p + Polynomial::zero(kTable) == p);
    CHECK((m * n - cst(1)) - (m * n - cst(1)) == Polynomial::zero(kTable));
    CHECK((m * n - cst(1)).is_zero() == false);
}

TEST_CASE("operands must share the table") {
    Polynomial m = var("m");
    Polynomial other = Polynomial::variable(VarTable::make({"x", "y"}), std::size_t{0});
    CHECK_THROWS_AS(m * other, rene::TableMismatch);
    CHECK_THROWS_AS(m + other, rene::TableMismatch);
}

TEST_CASE("evaluation") {
    Polynomial m = var("m"), n = var("n"), M = var("M"), N = var("N");
    CHECK((m * m + cst(1)).eval({{"m", Rational(1, 2)}}) == Rational(5, 4));

    // hand expansion at the all-ones point: 2 - 2 + 2 - 2 = 0
    Polynomial factor = M * N * (m + n) - m * n * (M + N) + M + N - m - n;
    CHECK(factor.eval({{"m", 1}, {"n", 1}, {"M", 1}, {"N", 1}}) == Rational(0));

    CHECK(Polynomial::zero(kTable).eval({}) == Rational(0));
    CHECK_THROWS_AS((m + n).eval({{"m", 1}}), rene::MissingBinding);
    // a binding for an absent indeterminate is fine
    CHECK((m + cst(1)).eval({{"m", 2}, {"N", 5}}) == Rational(3));
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        Polynomial a = random_poly(rng);
        Polynomial b = random_poly(rng);
        std::map<std::string, Rational> at;
        for (std::size_t v = 0; v < kTable->arity(); ++v) {
            at[kTable->name(v)] =
                Rational(BigInt(static_cast<std::int64_t>(rng() % 19) - 9),
                         BigInt(static_cast<std::int64_t>(rng() % 6) + 1));
        }
        CHECK((a + b).eval(at) == a.eval(at) + b.eval(at));
        CHECK((a * b).eval(at) == a.eval(at) * b.eval(at));
    }
}

TEST_CASE("multiplication commutes and associates") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 100; ++i) {
        Polynomial a = random_poly(rng, 4, 2);
        Polynomial b = random_poly(rng, 4, 2);
        Polynomial c = random_poly(rng, 4, 2);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a + b) * c == a * c + b * c);
    }
}

TEST_CASE("gcd on the worked examples") {
    Polynomial m = var("m"), n = var("n");
    CHECK(gcd(m * m - cst(1), m * m - cst(2) * m + cst(1)) == m - cst(1));
    Polynomial p = cst(3) * m * n - cst(6) * n;
    CHECK(gcd(p, Polynomial::zero(kTable)) == m * n - cst(2) * n);
    CHECK(gcd(Polynomial::zero(kTable), p) == m * n - cst(2) * n);
    CHECK(gcd((m + n) * (cst(1) - m * n), m + n) == m + n);
    CHECK(gcd(Polynomial::zero(kTable), Polynomial::zero(kTable)).is_zero());
    // normalization: primitive part, positive leading coefficient
    CHECK(gcd(cst(-2) * m - cst(2), Polynomial::zero(kTable)) == m + cst(1));
    CHECK(gcd(cst(4), cst(6)) == cst(1));
}

TEST_CASE("gcd divides both operands and leaves coprime cofactors") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
        Polynomial a = random_nonzero(rng);
        Polynomial b = random_nonzero(rng);
        Polynomial g = gcd(a, b);
        Polynomial qa = divexact(a, g); // must not throw
        Polynomial qb = divexact(b, g);
        CHECK(qa * g == a);
        CHECK(qb * g == b);
        CHECK(gcd(qa, qb).is_constant());
    }
}

TEST_CASE("gcd finds planted common factors") {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 60; ++i) {
        Polynomial g = random_nonzero(rng);
        Polynomial u = random_nonzero(rng);
        Polynomial v = random_nonzero(rng);
        Polynomial found = gcd(g * u, g * v);
        // the planted factor divides the gcd
        CHECK_NOTHROW(divexact(found, g.primitive_normalized()));
    }
}

TEST_CASE("exact division") {
    Polynomial m = var("m"), n = var("n");
    CHECK(divexact(m * m - n * n, m - n) == m + n);
    Polynomial p = cst(7) * m * n * n - m;
    CHECK(divexact(p, Polynomial::one(kTable)) == p);
    CHECK_THROWS_AS(divexact(m * m + cst(1), m), rene::InexactDivision);
    CHECK_THROWS_AS(divexact(m, Polynomial::zero(kTable)), rene::DivisionByZero);
}

TEST_CASE("lcm") {
    Polynomial m = var("m"), n = var("n");
    Polynomial l = lcm(m * m - n * n, m - n);
    CHECK(l == m * m - n * n);
    CHECK(lcm(m, Polynomial::zero(kTable)).is_zero());
}

TEST_CASE("content split") {
    Polynomial m = var("m"), n = var("n");
    auto [c1, p1] = (cst(2) * m + cst(2) * n).content_split();
    CHECK(c1 == Rational(2));
    CHECK(p1 == m + n);
    auto [c2, p2] = (cst(-3) * m * m).content_split();
    CHECK(c2 == Rational(-3));
    CHECK(p2 == m * m);
    auto [c3, p3] = (Polynomial::constant(kTable, Rational(1, 2)) * m +
                     Polynomial::constant(kTable, Rational(3, 4)))
                        .content_split();
    CHECK(c3 == Rational(1, 4));
    CHECK(p3 == cst(2) * m + cst(3));
}

TEST_CASE("canonical printing") {
    Polynomial m = var("m"), n = var("n");
    CHECK((m * m - n * n).str() == "m^2 - n^2");
    CHECK(Polynomial::zero(kTable).str() == "0");
    CHECK((cst(2) * m * n + m).str() == "2*m*n + m");
    CHECK((-m).str() == "-m");
    CHECK(cst(-5).str() == "-5");
    CHECK((Polynomial::constant(kTable, Rational(1, 2)) * m).str() == "1/2*m");
    CHECK((m.pow(3) + cst(1)).str() == "m^3 + 1");
    // graded lex: degree decides first, then the earlier indeterminate
    Polynomial M = var("M");
    CHECK((var("N") + M + n + m).str() == "m + n + M + N");
    CHECK((m * m + m * n + n * n).str() == "m^2 + m*n + n^2");
    // content factored out on request
    CHECK((cst(2) * m + cst(2) * n).str(true) == "2*(m + n)");
    CHECK((cst(2) * m).str(true) == "2*m");
}

TEST_CASE("canonical text parses back to an equal polynomial") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        Polynomial p = random_poly(rng);
        rene::RatFunc parsed = rene::script::eval_ratfunc_text(p.str(), kTable);
        CHECK(parsed == rene::RatFunc(p));
    }
}

TEST_CASE("from_terms validates and canonicalizes") {
    Polynomial::TermMap terms;
    terms[Monomial::var(4, 0, 2)] = Rational(1);
    terms[Monomial::unit(4)] = Rational(0); // dropped
    Polynomial p = Polynomial::from_terms(kTable, terms);
    CHECK(p == var("m") * var("m"));
    CHECK(p.term_count() == 1);

    Polynomial::TermMap bad;
    bad[Monomial::unit(2)] = Rational(1);
    CHECK_THROWS_AS(Polynomial::from_terms(kTable, bad), rene::Error);
}

TEST_CASE("degrees") {
    Polynomial m = var("m"), N = var("N");
    Polynomial p = m * m * N + m;
    CHECK(p.total_degree() == 3);
    CHECK(p.degree_in(0) == 2);
    CHECK(p.degree_in(3) == 1);
    CHECK(p.degree_in(1) == 0);
    CHECK(Polynomial::zero(kTable).total_degree() == 0);
    CHECK(p.contains_var(0));
    CHECK(!p.contains_var(2));
}
