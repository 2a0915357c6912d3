#pragma once

#include <array>
#include <utility>

#include "geo/core.hpp"

// Euclidean plane primitives. Points are complex coordinates; orientation is
// counterclockwise positive, so the angle from 1 to i at the origin is +pi/2.

namespace geo {

using Point = Complex;

// Parametric line anchor + t * direction, with |direction| = 1.
struct Line {
    Point anchor;
    Complex direction{1.0, 0.0};

    Line() = default;
    Line(Point a, Complex dir) : anchor(a) {
        double n = std::abs(dir);
        if (!(n > 0.0) || !std::isfinite(n)) throw GeoError("line: zero direction");
        direction = dir / n;
    }

    static Line through(Point a, Point b) {
        if (a == b) throw GeoError("line: coincident points");
        return Line(a, b - a);
    }

    // Signed offset of p to the left of the line.
    double side(Point p) const { return (std::conj(direction) * (p - anchor)).imag(); }
    double distance(Point p) const { return std::abs(side(p)); }
    Point at(double t) const { return anchor + t * direction; }
    double param(Point p) const { return (std::conj(direction) * (p - anchor)).real(); }
};

struct Circle {
    Point center;
    double radius = 1.0;

    Point at(double theta) const { return center + radius * unit(theta); }
};

/// Cross product (b - a) x (c - a); positive for a counterclockwise triple.
inline double orient(Point a, Point b, Point c) {
    return (std::conj(b - a) * (c - a)).imag();
}

struct Triangle {
    Point a, b, c;

    double scale() const { return scale_of({a, b, c}); }

    bool degenerate(const Tolerances& tol = {}) const {
        double s = scale();
        if (std::abs(a - b) <= tol.eps_eq * s || std::abs(b - c) <= tol.eps_eq * s ||
            std::abs(c - a) <= tol.eps_eq * s)
            return true;
        return std::abs(((b - a) * std::conj(c - a)).imag()) < tol.eps_degenerate * s * s;
    }

    void require_nondegenerate(const char* op, const Tolerances& tol) const {
        if (degenerate(tol)) throw GeoError(std::string(op) + ": degenerate triangle");
    }

    // Side lengths opposite to a, b, c.
    std::array<double, 3> sides() const {
        return {std::abs(b - c), std::abs(c - a), std::abs(a - b)};
    }
};

inline AngleValue signed_angle(Point a, Point o, Point b, const Tolerances& tol = {}) {
    double s = scale_of({a, o, b});
    if (std::abs(a - o) <= tol.eps_eq * s || std::abs(b - o) <= tol.eps_eq * s)
        throw GeoError("degenerate angle");
    return normalize_angle(std::arg((b - o) / (a - o)));
}

inline Point foot_point(Point p, const Line& l) { return l.at(l.param(p)); }

inline Point reflect_line(Point p, const Line& l) { return 2.0 * foot_point(p, l) - p; }

inline bool same_side(const Line& l, Point x, Point y, const Tolerances& tol = {}) {
    double s = std::max(scale_of({l.anchor, x, y}), 1.0);
    double sx = l.side(x), sy = l.side(y);
    if (std::abs(sx) <= tol.eps_degenerate * s || std::abs(sy) <= tol.eps_degenerate * s)
        throw GeoError("on boundary");
    return (sx > 0) == (sy > 0);
}

inline Point midpoint(Point a, Point b) { return 0.5 * (a + b); }

inline Line perpendicular_bisector(Point a, Point b) {
    if (a == b) throw GeoError("perpendicular bisector: coincident points");
    return Line(midpoint(a, b), Complex(0, 1) * (b - a));
}

/// Intersection of two non-parallel lines.
inline Point intersect(const Line& l, const Line& m, const Tolerances& tol = {}) {
    double den = (std::conj(l.direction) * m.direction).imag();
    if (std::abs(den) <= tol.eps_degenerate) throw GeoError("parallel lines");
    // anchor_m + t dir_m lies on l  <=>  side_l(...) = 0
    double t = -l.side(m.anchor) / den;
    return m.at(t);
}

inline Circle circumcircle(const Triangle& t, const Tolerances& tol = {}) {
    t.require_nondegenerate("circumcenter", tol);
    // Solve in coordinates relative to a for accuracy.
    Complex b = t.b - t.a, c = t.c - t.a;
    double d = 2.0 * (b.real() * c.imag() - b.imag() * c.real());
    double nb = std::norm(b), nc = std::norm(c);
    Complex u((c.imag() * nb - b.imag() * nc) / d, (b.real() * nc - c.real() * nb) / d);
    return {t.a + u, std::abs(u)};
}

inline std::pair<Point, double> circumcenter(const Triangle& t, const Tolerances& tol = {}) {
    Circle c = circumcircle(t, tol);
    return {c.center, c.radius};
}

inline Point centroid(const Triangle& t, const Tolerances& tol = {}) {
    t.require_nondegenerate("centroid", tol);
    return (t.a + t.b + t.c) / 3.0;
}

inline Point orthocenter(const Triangle& t, const Tolerances& tol = {}) {
    t.require_nondegenerate("orthocenter", tol);
    // H - O = (A - O) + (B - O) + (C - O) with O the circumcenter.
    Point o = circumcircle(t, tol).center;
    return t.a + t.b + t.c - 2.0 * o;
}

inline std::pair<Point, double> incenter(const Triangle& t, const Tolerances& tol = {}) {
    t.require_nondegenerate("incenter", tol);
    auto [la, lb, lc] = t.sides();
    double p = la + lb + lc;
    Point center = (la * t.a + lb * t.b + lc * t.c) / p;
    double twice_area = std::abs(((t.b - t.a) * std::conj(t.c - t.a)).imag());
    return {center, twice_area / p};
}

/// Foot D of the bisector from A on [BC]; DB/DC = AB/AC.
inline Point bisector_foot(const Triangle& t, const Tolerances& tol = {}) {
    t.require_nondegenerate("bisector_foot", tol);
    double ab = std::abs(t.b - t.a), ac = std::abs(t.c - t.a);
    return t.b + (t.c - t.b) * (ab / (ab + ac));
}

/// Length of the tangent segments from A to the incircle.
inline double tangent_length(const Triangle& t, const Tolerances& tol = {}) {
    t.require_nondegenerate("tangent_length", tol);
    auto [la, lb, lc] = t.sides();
    return 0.5 * (lb + lc - la);
}

enum class Tangency { disjoint, ext_tangent, intersecting, int_tangent, nested };

inline const char* to_string(Tangency t) {
    switch (t) {
    case Tangency::disjoint: return "disjoint";
    case Tangency::ext_tangent: return "ext_tangent";
    case Tangency::intersecting: return "intersecting";
    case Tangency::int_tangent: return "int_tangent";
    case Tangency::nested: return "nested";
    }
    return "?";
}

inline Tangency tangency_classify(const Circle& c1, const Circle& c2, const Tolerances& tol = {}) {
    if (!(c1.radius > 0) || !(c2.radius > 0)) throw GeoError("tangency: nonpositive radius");
    double d = std::abs(c1.center - c2.center);
    double band = tol.eps_assert * std::max({d, c1.radius, c2.radius});
    double sum = c1.radius + c2.radius, diff = std::abs(c1.radius - c2.radius);
    if (d <= band && diff <= band) throw GeoError("tangency: identical circles");
    if (std::abs(d - sum) <= band) return Tangency::ext_tangent;
    if (d > sum) return Tangency::disjoint;
    if (std::abs(d - diff) <= band) return Tangency::int_tangent;
    if (d < diff) return Tangency::nested;
    return Tangency::intersecting;
}

/// Side-and-angle comparison of two ordered triangles.
inline bool congruent(const Triangle& s, const Triangle& t, const Tolerances& tol = {}) {
    auto a = s.sides(), b = t.sides();
    double sc = std::max(s.scale(), t.scale());
    for (int i = 0; i < 3; ++i)
        if (std::abs(a[i] - b[i]) > tol.eps_assert * sc) return false;
    auto abs_angle = [&](Point p, Point o, Point q) {
        return std::abs(signed_angle(p, o, q, tol).radians());
    };
    return std::abs(abs_angle(s.b, s.a, s.c) - abs_angle(t.b, t.a, t.c)) <= tol.eps_assert &&
           std::abs(abs_angle(s.a, s.b, s.c) - abs_angle(t.a, t.b, t.c)) <= tol.eps_assert &&
           std::abs(abs_angle(s.a, s.c, s.b) - abs_angle(t.a, t.c, t.b)) <= tol.eps_assert;
}

} // namespace geo
