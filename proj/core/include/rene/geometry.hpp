#pragma once

#include <string>

#include "rene/ratfunc.hpp"

namespace rene {

/// Point with exact rational-function coordinates.
class Point {
public:
    Point(RatFunc x, RatFunc y);

    const RatFunc& x() const { return x_; }
    const RatFunc& y() const { return y_; }
    const VarTablePtr& table() const { return x_.table(); }

    friend bool operator==(const Point& a, const Point& b) {
        return a.x_ == b.x_ && a.y_ == b.y_;
    }

    /// "(x, y)" using the rational-function textual form.
    std::string str() const;

private:
    RatFunc x_;
    RatFunc y_;
};

Point make_point(const VarTablePtr& table, Rational x, Rational y);

/// Three non-collinear points; collinearity (as rational functions) is
/// rejected at construction.
class Triangle {
public:
    Triangle(Point v1, Point v2, Point v3);

    const Point& v1() const { return v1_; }
    const Point& v2() const { return v2_; }
    const Point& v3() const { return v3_; }

private:
    Point v1_, v2_, v3_;
};

/// Homogeneous barycentric coordinates relative to a triangle; never all
/// three identically zero.
struct Barycentrics {
    RatFunc x, y, z;
};

/// The normalized triangle with v1 = (0,0), v2 = (1,0) and apex placed by the
/// half-angle tangents u (at v1) and v (at v2): the apex solves the two
/// implicit ray equations with slopes tan of the doubled angles. Throws
/// DegenerateConstruction when (u+v)(1-uv) is identically zero or the apex
/// falls on the base line.
Triangle te(const RatFunc& u, const RatFunc& v);

/// Squared distance (P.x-Q.x)^2 + (P.y-Q.y)^2.
RatFunc de_sq(const Point& p, const Point& q);

/// Twice the signed area; zero iff collinear.
RatFunc collinear_det(const Point& p1, const Point& p2, const Point& p3);

/// 4x4 determinant with rows [x, y, x^2+y^2, 1]; zero iff the four points
/// lie on a common circle or line.
RatFunc concyclic_det(const Point& p1, const Point& p2, const Point& p3, const Point& p4);

Barycentrics barycentrics(const Triangle& t, const Point& p);

/// Isogonal conjugate through barycentric coordinates: with (x : y : z) for P
/// and squared side lengths a2, b2, c2, the conjugate is (a2·yz : b2·xz :
/// c2·xy) converted back to Cartesian form. Everything stays inside the
/// rational-function field. Throws ConjugateAtInfinity when P sits on a
/// sideline or on the circumcircle (homogeneous sum identically zero).
Point isogonal_conjugate(const Triangle& t, const Point& p);

/// The point equidistant from all three; perpendicular-bisector equations
/// solved by 2x2 elimination. DegenerateConstruction on collinear input.
Point circumcenter(const Point& p1, const Point& p2, const Point& p3);

RatFunc circumradius_sq(const Point& p1, const Point& p2, const Point& p3);

/// Reflection of p across the line through l1 and l2 (which must differ).
Point reflect_over_line(const Point& p, const Point& l1, const Point& l2);

} // namespace rene
