#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "rene/geometry.hpp"

using rene::Barycentrics;
using rene::BigInt;
using rene::make_point;
using rene::Point;
using rene::Rational;
using rene::RatFunc;
using rene::Triangle;
using rene::VarTable;
using rene::VarTablePtr;

namespace {

const VarTablePtr kTable = VarTable::standard();

RatFunc var(std::string_view name) { return RatFunc::variable(kTable, name); }
RatFunc cst(long long v) { return RatFunc::constant(kTable, Rational(v)); }
RatFunc cst(Rational r) { return RatFunc::constant(kTable, std::move(r)); }

Point pt(Rational x, Rational y) { return make_point(kTable, std::move(x), std::move(y)); }

Rational random_rat(std::mt19937_64& rng, std::int64_t bound = 10) {
    auto num = static_cast<std::int64_t>(rng() % (2 * bound + 1)) - bound;
    auto den = static_cast<std::int64_t>(rng() % bound) + 1;
    return Rational(BigInt(num), BigInt(den));
}

Point random_point(std::mt19937_64& rng) {
    return pt(random_rat(rng), random_rat(rng));
}

} // namespace

TEST_CASE("te places the apex by intersecting the two rays") {
    Triangle t = rene::te(cst(Rational(1, 2)), cst(Rational(1, 2)));
    CHECK(t.v1() == pt(0, 0));
    CHECK(t.v2() == pt(1, 0));
    CHECK(t.v3() == pt(Rational(1, 2), Rational(2, 3)));

    // two right half-angles make the rays parallel
    CHECK_THROWS_AS(rene::te(cst(1), cst(1)), rene::DegenerateConstruction);
    CHECK_THROWS_AS(rene::te(var("m"), -var("m")), rene::DegenerateConstruction);
    // zero angle collapses the triangle
    CHECK_THROWS_AS(rene::te(cst(0), cst(Rational(1, 2))), rene::DegenerateConstruction);
}

TEST_CASE("te symbolic apex matches the closed form") {
    RatFunc m = var("m"), n = var("n");
    Triangle t = rene::te(m, n);
    RatFunc denom = (m + n) * (cst(1) - m * n);
    CHECK(t.v3().x() == n * (cst(1) - m * m) / denom);
    CHECK(t.v3().y() == cst(2) * m * n / denom);
    CHECK(prob_equal(t.v3().y(), cst(2) * m * n / denom, 20, 5));
}

TEST_CASE("te symbolic apex agrees with a numeric two-line intersection oracle") {
    RatFunc m = var("m"), n = var("n");
    Triangle t = rene::te(m, n);
    std::mt19937_64 rng(51);
    int done = 0;
    while (done < 30) {
        Rational u = random_rat(rng, 6);
        Rational v = random_rat(rng, 6);
        if (u.is_zero() || v.is_zero()) continue;
        if (((u + v) * (Rational(1) - u * v)).is_zero()) continue;
        // independent route: y = s1*x meets y = -s2*(x-1), slopes from the
        // doubled half-angle tangents
        Rational den1 = Rational(1) - u * u;
        Rational den2 = Rational(1) - v * v;
        if (den1.is_zero() || den2.is_zero()) continue; // vertical ray; skip
        Rational s1 = Rational(2) * u / den1;
        Rational s2 = Rational(2) * v / den2;
        if ((s1 + s2).is_zero()) continue;
        Rational x = s2 / (s1 + s2);
        Rational y = s1 * x;
        std::map<std::string, Rational> at{{"m", u}, {"n", v}};
        CHECK(t.v3().x().eval(at) == x);
        CHECK(t.v3().y().eval(at) == y);
        ++done;
    }
}

TEST_CASE("te angle contract in double precision") {
    std::mt19937_64 rng(53);
    int done = 0;
    while (done < 50) {
        auto dn = static_cast<std::int64_t>(rng() % 97) + 2;
        auto un = static_cast<std::int64_t>(rng() % (dn - 1)) + 1;
        auto dm = static_cast<std::int64_t>(rng() % 97) + 2;
        auto vn = static_cast<std::int64_t>(rng() % (dm - 1)) + 1;
        Rational u{BigInt(un), BigInt(dn)}; // in (0,1)
        Rational v{BigInt(vn), BigInt(dm)};
        if ((Rational(1) - u * v).is_zero()) continue;
        Triangle t = rene::te(cst(u), cst(v));
        const double ax = t.v3().x().eval({}).to_double();
        const double ay = t.v3().y().eval({}).to_double();
        const double tan_half_at_origin = std::tan(std::atan2(ay, ax) / 2.0);
        const double tan_half_at_unit = std::tan((M_PI - std::atan2(ay, ax - 1.0)) / 2.0);
        CHECK(tan_half_at_origin == doctest::Approx(u.to_double()).epsilon(1e-9));
        CHECK(tan_half_at_unit == doctest::Approx(v.to_double()).epsilon(1e-9));
        ++done;
    }
}

TEST_CASE("squared distance") {
    CHECK(rene::de_sq(pt(0, 0), pt(1, 0)) == cst(1));
    CHECK(rene::de_sq(pt(0, 0), pt(Rational(1, 2), Rational(2, 3))) ==
          cst(Rational(25, 36)));
    Point p = pt(Rational(3, 7), Rational(-2, 5));
    CHECK(rene::de_sq(p, p).is_zero());
}

TEST_CASE("collinearity determinant") {
    CHECK(rene::collinear_det(pt(0, 0), pt(1, 0), pt(2, 0)).is_zero());
    CHECK(rene::collinear_det(pt(0, 0), pt(1, 0), pt(0, 1)) == cst(1));
    Triangle t = rene::te(var("m"), var("n"));
    RatFunc d = rene::collinear_det(t.v1(), t.v2(), t.v3());
    CHECK_FALSE(d.is_zero());
    CHECK(d == t.v3().y()); // base has unit length along the x-axis
}

TEST_CASE("triangle construction rejects collinear vertices") {
    CHECK_THROWS_AS(Triangle(pt(0, 0), pt(1, 0), pt(2, 0)), rene::DegenerateConstruction);
    CHECK_NOTHROW(Triangle(pt(0, 0), pt(1, 0), pt(0, 1)));
}

TEST_CASE("concyclicity determinant") {
    CHECK(rene::concyclic_det(pt(1, 0), pt(0, 1), pt(-1, 0), pt(0, -1)).is_zero());
    // all four on the circle centered (1/2, 1/2)
    CHECK(rene::concyclic_det(pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)).is_zero());
    CHECK_FALSE(rene::concyclic_det(pt(0, 0), pt(1, 0), pt(0, 1), pt(2, 2)).is_zero());
}

TEST_CASE("barycentric coordinates") {
    Triangle t(pt(0, 0), pt(3, 0), pt(0, 4));
    Barycentrics at_v1 = rene::barycentrics(t, t.v1());
    CHECK(at_v1.y.is_zero());
    CHECK(at_v1.z.is_zero());
    CHECK_FALSE(at_v1.x.is_zero());

    Point centroid = pt(1, Rational(4, 3));
    Barycentrics g = rene::barycentrics(t, centroid);
    CHECK(g.x == g.y);
    CHECK(g.y == g.z);
    CHECK_FALSE(g.x.is_zero());
}

TEST_CASE("barycentric recombination reproduces the point") {
    std::mt19937_64 rng(59);
    int done = 0;
    while (done < 100) {
        Point a = random_point(rng), b = random_point(rng), c = random_point(rng);
        if (rene::collinear_det(a, b, c).is_zero()) continue;
        Triangle t(a, b, c);
        Point p = random_point(rng);
        Barycentrics w = rene::barycentrics(t, p);
        RatFunc s = w.x + w.y + w.z;
        Point back((w.x * a.x() + w.y * b.x() + w.z * c.x()) / s,
                   (w.x * a.y() + w.y * b.y() + w.z * c.y()) / s);
        CHECK(back == p);
        ++done;
    }
}

TEST_CASE("the incenter is its own isogonal conjugate") {
    Triangle t(pt(0, 0), pt(3, 0), pt(0, 4)); // 3-4-5: rational side lengths
    Point incenter = pt(1, 1);
    CHECK(rene::isogonal_conjugate(t, incenter) == incenter);
}

TEST_CASE("isogonal conjugation is an involution, numerically") {
    std::mt19937_64 rng(61);
    int done = 0;
    while (done < 100) {
        Point a = random_point(rng), b = random_point(rng), c = random_point(rng);
        if (rene::collinear_det(a, b, c).is_zero()) continue;
        Triangle t(a, b, c);
        Point p = random_point(rng);
        try {
            Point q = rene::isogonal_conjugate(t, p);
            CHECK(rene::isogonal_conjugate(t, q) == p);
            ++done;
        } catch (const rene::ConjugateAtInfinity&) {
            // p on a sideline or on the circumcircle; resample
        }
    }
}

TEST_CASE("isogonal conjugation is an involution, symbolically") {
    // generic point with fresh indeterminate coordinates over a numeric triangle
    VarTablePtr vt = VarTable::make({"px", "py"});
    Triangle t(make_point(vt, 0, 0), make_point(vt, 3, 0), make_point(vt, 0, 4));
    Point p(RatFunc::variable(vt, std::size_t{0}), RatFunc::variable(vt, std::size_t{1}));
    Point q = rene::isogonal_conjugate(t, p);
    CHECK(rene::isogonal_conjugate(t, q) == p);
}

TEST_CASE("conjugate of a sideline point is at infinity") {
    Triangle t(pt(0, 0), pt(3, 0), pt(0, 4));
    CHECK_THROWS_AS(rene::isogonal_conjugate(t, pt(1, 0)), rene::ConjugateAtInfinity);
    // on the circumcircle of the 3-4-5 triangle: (3,4) lies on it
    CHECK_THROWS_AS(rene::isogonal_conjugate(t, pt(3, 4)), rene::ConjugateAtInfinity);
}

TEST_CASE("circumcenter and circumradius") {
    CHECK(rene::circumcenter(pt(0, 0), pt(1, 0), pt(0, 1)) ==
          pt(Rational(1, 2), Rational(1, 2)));
    CHECK(rene::circumradius_sq(pt(0, 0), pt(1, 0), pt(0, 1)) == cst(Rational(1, 2)));
    // hypotenuse of the 3-4-5 right triangle is a diameter: r = 5/2
    CHECK(rene::circumradius_sq(pt(0, 0), pt(3, 0), pt(0, 4)) == cst(Rational(25, 4)));
    CHECK_THROWS_AS(rene::circumcenter(pt(0, 0), pt(1, 0), pt(2, 0)),
                    rene::DegenerateConstruction);
}

TEST_CASE("circumcenter is equidistant, symbolically on te") {
    RatFunc m = var("m"), n = var("n");
    Triangle t = rene::te(m, n);
    Point o = rene::circumcenter(t.v1(), t.v2(), t.v3());
    RatFunc d1 = rene::de_sq(o, t.v1());
    CHECK(d1 == rene::de_sq(o, t.v2()));
    CHECK(d1 == rene::de_sq(o, t.v3()));
}

TEST_CASE("circumcenter is equidistant on random rational triples") {
    std::mt19937_64 rng(67);
    int done = 0;
    while (done < 100) {
        Point a = random_point(rng), b = random_point(rng), c = random_point(rng);
        if (rene::collinear_det(a, b, c).is_zero()) continue;
        Point o = rene::circumcenter(a, b, c);
        RatFunc d = rene::de_sq(o, a);
        CHECK(d == rene::de_sq(o, b));
        CHECK(d == rene::de_sq(o, c));
        ++done;
    }
}

TEST_CASE("reflection across a line") {
    RatFunc a = var("m"), b = var("n"); // reuse indeterminates as free symbols
    Point p(a, b);
    Point reflected = rene::reflect_over_line(p, pt(0, 0), pt(1, 0));
    CHECK(reflected == Point(a, -b));
    CHECK(rene::reflect_over_line(reflected, pt(0, 0), pt(1, 0)) == p);
    CHECK(rene::reflect_over_line(pt(0, 1), pt(0, 0), pt(1, 1)) == pt(1, 0));
    CHECK_THROWS_AS(rene::reflect_over_line(p, pt(1, 1), pt(1, 1)),
                    rene::DegenerateConstruction);
}

TEST_CASE("reflection is an isometry, symbolically") {
    RatFunc m = var("m"), n = var("n"), M = var("M"), N = var("N");
    Point p(m, n);
    Point q(M, N);
    Point l1 = pt(Rational(1, 3), Rational(-2, 5));
    Point l2 = pt(2, 1);
    Point rp = rene::reflect_over_line(p, l1, l2);
    Point rq = rene::reflect_over_line(q, l1, l2);
    CHECK(rene::de_sq(rp, rq) == rene::de_sq(p, q));
}
