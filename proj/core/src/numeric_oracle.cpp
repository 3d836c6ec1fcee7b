#include <array>
#include <map>
#include <optional>
#include <random>

#include "rene/quartet.hpp"

// Independent numeric oracle. Everything here works on plain Rational pairs
// and rebuilds the configuration from first principles: apexes by
// intersecting the two base rays, isogonal conjugates by reflecting cevian
// directions across the angle bisector (a complex multiplication — reflecting
// z across the bisector of e1, e2 sends the direction to e1*e2*conj(z), which
// keeps everything rational), circumcenters by eliminating the equidistance
// equations. None of the symbolic RatFunc code paths are reused.

namespace rene {

namespace {

struct QPoint {
    Rational x, y;

    friend QPoint operator-(const QPoint& a, const QPoint& b) {
        return {a.x - b.x, a.y - b.y};
    }
    friend bool operator==(const QPoint& a, const QPoint& b) = default;
};

Rational cross(const QPoint& a, const QPoint& b) { return a.x * b.y - a.y * b.x; }

Rational dsq(const QPoint& a, const QPoint& b) {
    QPoint d = a - b;
    return d.x * d.x + d.y * d.y;
}

// Complex product.
QPoint cmul(const QPoint& a, const QPoint& b) {
    return {a.x * b.x - a.y * b.y, a.x * b.y + a.y * b.x};
}

QPoint conj(const QPoint& a) { return {a.x, -a.y}; }

bool is_zero(const QPoint& a) { return a.x.is_zero() && a.y.is_zero(); }

// Intersection of the line through p along d with the line through q along e.
std::optional<QPoint> meet(const QPoint& p, const QPoint& d, const QPoint& q,
                           const QPoint& e) {
    Rational den = cross(d, e);
    if (den.is_zero()) return std::nullopt;
    Rational t = cross(q - p, e) / den;
    return QPoint{p.x + t * d.x, p.y + t * d.y};
}

// Direction of the isogonal cevian at vertex v: the cevian towards p
// reflected across the bisector of the two sides leaving v.
QPoint isogonal_direction(const QPoint& v, const QPoint& w1, const QPoint& w2,
                          const QPoint& p) {
    return cmul(cmul(w1 - v, w2 - v), conj(p - v));
}

std::optional<QPoint> isogonal_num(const QPoint& v1, const QPoint& v2,
                                   const QPoint& v3, const QPoint& p) {
    if (cross(v2 - v1, v3 - v1).is_zero()) return std::nullopt; // collinear triangle
    if (p == v1 || p == v2 || p == v3) return std::nullopt;
    QPoint d1 = isogonal_direction(v1, v2, v3, p);
    QPoint d2 = isogonal_direction(v2, v1, v3, p);
    QPoint d3 = isogonal_direction(v3, v1, v2, p);
    if (is_zero(d1) || is_zero(d2) || is_zero(d3)) return std::nullopt;
    auto q = meet(v1, d1, v2, d2);
    if (!q) return std::nullopt; // conjugate at infinity
    if (!cross(d3, *q - v3).is_zero()) {
        throw Error("numeric oracle: reflected cevians do not concur");
    }
    return q;
}

// Circumcenter from the two equidistance equations by direct elimination.
std::optional<QPoint> circumcenter_num(const QPoint& p1, const QPoint& p2,
                                       const QPoint& p3) {
    Rational a11 = 2 * (p2.x - p1.x), a12 = 2 * (p2.y - p1.y);
    Rational a21 = 2 * (p3.x - p1.x), a22 = 2 * (p3.y - p1.y);
    Rational sq1 = p1.x * p1.x + p1.y * p1.y;
    Rational b1 = p2.x * p2.x + p2.y * p2.y - sq1;
    Rational b2 = p3.x * p3.x + p3.y * p3.y - sq1;
    // Eliminate x from the second row (swap rows if the pivot vanishes).
    if (a11.is_zero()) {
        std::swap(a11, a21);
        std::swap(a12, a22);
        std::swap(b1, b2);
        if (a11.is_zero()) return std::nullopt;
    }
    Rational f = a21 / a11;
    Rational r22 = a22 - f * a12;
    if (r22.is_zero()) return std::nullopt;
    Rational y = (b2 - f * b1) / r22;
    Rational x = (b1 - a12 * y) / a11;
    return QPoint{x, y};
}

struct NumericScene {
    QPoint A, B, C, D, Astar, Bstar, Cstar, Dstar;
};

// Rebuild the whole configuration at the tuple; nullopt marks a degenerate
// draw that the caller resamples.
std::optional<NumericScene> rebuild(const Rational& m, const Rational& n,
                                    const Rational& M, const Rational& N) {
    const QPoint A{0, 0};
    const QPoint D{1, 0};
    // Base rays by half-angle tangents: direction (1-t^2, 2t) doubles the
    // angle with rational coordinates; the ray at D opens backwards.
    auto apex = [&](const Rational& u, const Rational& v) {
        return meet(A, QPoint{1 - u * u, 2 * u}, D, QPoint{-(1 - v * v), 2 * v});
    };
    auto b = apex(m, n);
    auto c = apex(M, N);
    if (!b || !c || *b == *c) return std::nullopt;
    if (b->y.is_zero() || c->y.is_zero()) return std::nullopt;

    auto astar = isogonal_num(*b, *c, D, A);
    auto bstar = isogonal_num(A, D, *c, *b);
    auto cstar = isogonal_num(A, *b, D, *c);
    auto dstar = isogonal_num(A, *b, *c, D);
    if (!astar || !bstar || !cstar || !dstar) return std::nullopt;
    return NumericScene{A, *b, *c, D, *astar, *bstar, *cstar, *dstar};
}

bool matches_scene(const QuadrilateralScene& scene, const NumericScene& num,
                   const std::map<std::string, Rational>& at) {
    const std::array<std::pair<const Point*, const QPoint*>, 8> pairs{{
        {&scene.A, &num.A},
        {&scene.B, &num.B},
        {&scene.C, &num.C},
        {&scene.D, &num.D},
        {&scene.Astar, &num.Astar},
        {&scene.Bstar, &num.Bstar},
        {&scene.Cstar, &num.Cstar},
        {&scene.Dstar, &num.Dstar},
    }};
    for (const auto& [sym, exact] : pairs) {
        if (sym->x().eval(at) != exact->x) return false;
        if (sym->y().eval(at) != exact->y) return false;
    }
    return true;
}

bool equalities_hold(const NumericScene& s, const Rational& radius) {
    const std::array<std::array<const QPoint*, 4>, 4> claims{{
        {&s.A, &s.Bstar, &s.Cstar, &s.Dstar},
        {&s.B, &s.Astar, &s.Cstar, &s.Dstar},
        {&s.C, &s.Astar, &s.Bstar, &s.Dstar},
        {&s.D, &s.Astar, &s.Bstar, &s.Cstar},
    }};
    for (const auto& [center, s1, s2, s3] : claims) {
        Rational d1 = dsq(*center, *s1);
        if (d1 != dsq(*center, *s2) || dsq(*center, *s2) != dsq(*center, *s3)) {
            return false;
        }
    }

    // Closed-form radius, squared against the reconstructed circumradius.
    auto center = circumcenter_num(s.Bstar, s.Cstar, s.Dstar);
    if (!center) return false;
    if (dsq(*center, s.Bstar) != radius * radius) return false;

    // Mirror relations across AD.
    return s.Bstar.x == s.Cstar.x && s.Bstar.y == -s.Cstar.y;
}

} // namespace

bool numeric_spotcheck(const QuadrilateralScene& scene, unsigned trials,
                       std::uint64_t seed) {
    if (scene.params->arity() != 4) {
        throw Error("numeric spot check expects the four-parameter scene");
    }
    std::mt19937_64 rng(seed);
    auto draw = [&rng]() {
        const std::int64_t bound = 12;
        auto num = static_cast<std::int64_t>(rng() % (2 * bound + 1)) - bound;
        auto den = static_cast<std::int64_t>(rng() % bound) + 1;
        return Rational(BigInt(num), BigInt(den));
    };

    unsigned long budget = 200ul * trials + 1000; // resampling safety valve
    for (unsigned t = 0; t < trials; ++t) {
        while (true) {
            if (budget-- == 0) {
                throw Error("numeric spot check: too many degenerate draws");
            }
            Rational m = draw(), n = draw(), M = draw(), N = draw();
            if (m.is_zero() || n.is_zero() || M.is_zero() || N.is_zero()) continue;
            Rational rden = ((M * N - 1) * (m * n - 1) + (M + N) * (n + m)) *
                            (M * N * (n + m) - m * n * (M + N) + M + N - m - n);
            if (rden.is_zero()) continue;
            auto num = rebuild(m, n, M, N);
            if (!num) continue;
            if (cross(num->Cstar - num->Bstar, num->Dstar - num->Bstar).is_zero()) {
                continue; // starred triangle collapsed; no circumcircle to check
            }

            std::map<std::string, Rational> at;
            at[scene.params->name(0)] = m;
            at[scene.params->name(1)] = n;
            at[scene.params->name(2)] = M;
            at[scene.params->name(3)] = N;
            try {
                if (!matches_scene(scene, *num, at)) return false;
            } catch (const PoleAtPoint&) {
                continue; // the symbolic form degenerates here; resample
            }
            Rational radius =
                (N - n) * (N * n + 1) * (m * m + 1) * (M * M + 1) / rden;
            if (!equalities_hold(*num, radius)) return false;
            break;
        }
    }
    return true;
}

} // namespace rene
