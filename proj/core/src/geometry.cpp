#include "rene/geometry.hpp"

#include <array>

namespace rene {

Point::Point(RatFunc x, RatFunc y) : x_(std::move(x)), y_(std::move(y)) {
    require_same_table(x_.table(), y_.table());
}

std::string Point::str() const { return "(" + x_.str() + ", " + y_.str() + ")"; }

Point make_point(const VarTablePtr& table, Rational x, Rational y) {
    return Point(RatFunc::constant(table, std::move(x)), RatFunc::constant(table, std::move(y)));
}

Triangle::Triangle(Point v1, Point v2, Point v3)
    : v1_(std::move(v1)), v2_(std::move(v2)), v3_(std::move(v3)) {
    if (collinear_det(v1_, v2_, v3_).is_zero()) {
        throw DegenerateConstruction("triangle vertices are collinear");
    }
}

RatFunc de_sq(const Point& p, const Point& q) {
    RatFunc dx = p.x() - q.x();
    RatFunc dy = p.y() - q.y();
    return dx * dx + dy * dy;
}

RatFunc collinear_det(const Point& p1, const Point& p2, const Point& p3) {
    return (p2.x() - p1.x()) * (p3.y() - p1.y()) - (p3.x() - p1.x()) * (p2.y() - p1.y());
}

RatFunc concyclic_det(const Point& p1, const Point& p2, const Point& p3, const Point& p4) {
    auto row = [](const Point& p) {
        return std::array<RatFunc, 3>{p.x(), p.y(), p.x() * p.x() + p.y() * p.y()};
    };
    const std::array<std::array<RatFunc, 3>, 4> r{
        {row(p1), row(p2), row(p3), row(p4)}};
    auto det3 = [](const std::array<RatFunc, 3>& a, const std::array<RatFunc, 3>& b,
                   const std::array<RatFunc, 3>& c) {
        return a[0] * (b[1] * c[2] - b[2] * c[1]) -
               a[1] * (b[0] * c[2] - b[2] * c[0]) +
               a[2] * (b[0] * c[1] - b[1] * c[0]);
    };
    // Cofactor expansion along the column of ones.
    return -det3(r[1], r[2], r[3]) + det3(r[0], r[2], r[3]) -
           det3(r[0], r[1], r[3]) + det3(r[0], r[1], r[2]);
}

Triangle te(const RatFunc& u, const RatFunc& v) {
    require_same_table(u.table(), v.table());
    const VarTablePtr& table = u.table();
    const RatFunc one = RatFunc::one(table);
    RatFunc sum = u + v;
    RatFunc cross = one - u * v;
    if (sum.is_zero() || cross.is_zero()) {
        throw DegenerateConstruction("te rays are parallel: (u+v)(1-uv) vanishes identically");
    }
    // Ray from (0,0) at the doubled angle of u:  2u*x - (1-u^2)*y = 0
    // Ray from (1,0) opening back towards it:    2v*x + (1-v^2)*y = 2v
    RatFunc two = RatFunc::constant(table, 2);
    RatFunc a11 = two * u, a12 = -(one - u * u);
    RatFunc a21 = two * v, a22 = one - v * v;
    RatFunc rhs = two * v;
    RatFunc det = a11 * a22 - a12 * a21; // equals 2(u+v)(1-uv), nonzero here
    Point apex((-a12 * rhs) / det, (a11 * rhs) / det);
    return Triangle(make_point(table, 0, 0), make_point(table, 1, 0), apex);
}

namespace {

// Scales a homogeneous triple to coprime polynomial entries; the projective
// class is unchanged and later arithmetic stays small.
std::array<RatFunc, 3> normalize_homogeneous(const RatFunc& a, const RatFunc& b,
                                             const RatFunc& c) {
    Polynomial l = lcm(lcm(a.den(), b.den()), c.den());
    Polynomial pa = a.num() * divexact(l, a.den());
    Polynomial pb = b.num() * divexact(l, b.den());
    Polynomial pc = c.num() * divexact(l, c.den());
    Polynomial g = gcd(gcd(pa, pb), pc);
    if (!g.is_one()) {
        pa = divexact(pa, g);
        pb = divexact(pb, g);
        pc = divexact(pc, g);
    }
    return {RatFunc(std::move(pa)), RatFunc(std::move(pb)), RatFunc(std::move(pc))};
}

} // namespace

Barycentrics barycentrics(const Triangle& t, const Point& p) {
    RatFunc x = collinear_det(p, t.v2(), t.v3());
    RatFunc y = collinear_det(t.v1(), p, t.v3());
    RatFunc z = collinear_det(t.v1(), t.v2(), p);
    auto n = normalize_homogeneous(x, y, z);
    return Barycentrics{std::move(n[0]), std::move(n[1]), std::move(n[2])};
}

Point isogonal_conjugate(const Triangle& t, const Point& p) {
    Barycentrics b = barycentrics(t, p);
    if (b.x.is_zero() || b.y.is_zero() || b.z.is_zero()) {
        throw ConjugateAtInfinity("point lies on a sideline of the reference triangle");
    }
    RatFunc a2 = de_sq(t.v2(), t.v3());
    RatFunc b2 = de_sq(t.v1(), t.v3());
    RatFunc c2 = de_sq(t.v1(), t.v2());
    auto h = normalize_homogeneous(a2 * b.y * b.z, b2 * b.x * b.z, c2 * b.x * b.y);
    RatFunc s = h[0] + h[1] + h[2];
    if (s.is_zero()) {
        throw ConjugateAtInfinity("conjugate is at infinity: homogeneous sum vanishes");
    }
    RatFunc cx = (h[0] * t.v1().x() + h[1] * t.v2().x() + h[2] * t.v3().x()) / s;
    RatFunc cy = (h[0] * t.v1().y() + h[1] * t.v2().y() + h[2] * t.v3().y()) / s;
    return Point(std::move(cx), std::move(cy));
}

Point circumcenter(const Point& p1, const Point& p2, const Point& p3) {
    // 2(Pi - P1)·O = |Pi|^2 - |P1|^2 for i = 2, 3; Cramer elimination.
    const VarTablePtr& table = p1.table();
    RatFunc two = RatFunc::constant(table, 2);
    RatFunc sq1 = p1.x() * p1.x() + p1.y() * p1.y();
    RatFunc a11 = two * (p2.x() - p1.x());
    RatFunc a12 = two * (p2.y() - p1.y());
    RatFunc b1 = p2.x() * p2.x() + p2.y() * p2.y() - sq1;
    RatFunc a21 = two * (p3.x() - p1.x());
    RatFunc a22 = two * (p3.y() - p1.y());
    RatFunc b2 = p3.x() * p3.x() + p3.y() * p3.y() - sq1;
    RatFunc det = a11 * a22 - a12 * a21;
    if (det.is_zero()) {
        throw DegenerateConstruction("circumcenter of collinear points");
    }
    return Point((b1 * a22 - b2 * a12) / det, (a11 * b2 - a21 * b1) / det);
}

RatFunc circumradius_sq(const Point& p1, const Point& p2, const Point& p3) {
    return de_sq(circumcenter(p1, p2, p3), p1);
}

Point reflect_over_line(const Point& p, const Point& l1, const Point& l2) {
    if (l1 == l2) {
        throw DegenerateConstruction("reflection line endpoints coincide");
    }
    RatFunc dx = l2.x() - l1.x();
    RatFunc dy = l2.y() - l1.y();
    RatFunc dd = dx * dx + dy * dy; // nonzero: the field is formally real
    RatFunc t = ((p.x() - l1.x()) * dx + (p.y() - l1.y()) * dy) / dd;
    RatFunc two = RatFunc::constant(p.table(), 2);
    RatFunc fx = l1.x() + t * dx;
    RatFunc fy = l1.y() + t * dy;
    return Point(two * fx - p.x(), two * fy - p.y());
}

} // namespace rene
