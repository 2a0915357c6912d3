#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "geo/euclid.hpp"

namespace geo {

/// A point of the inversive plane: a finite complex coordinate or infinity.
class ExtPoint {
public:
    ExtPoint(Complex z) : z_(z) {
        if (!geo::is_finite(z)) throw GeoError("non-finite coordinate");
    }
    ExtPoint(double x) : ExtPoint(Complex(x, 0.0)) {}

    static ExtPoint infinity() { return ExtPoint(); }

    bool is_infinite() const { return !z_.has_value(); }
    bool is_finite() const { return z_.has_value(); }

    Complex value() const {
        if (!z_) throw GeoError("point at infinity has no coordinate");
        return *z_;
    }

    friend bool operator==(const ExtPoint&, const ExtPoint&) = default;

private:
    ExtPoint() = default;
    std::optional<Complex> z_;
};

/// Generalized circle: a Euclidean circle or a Euclidean line.
class Cline {
public:
    Cline(Circle c) : shape_(c) {
        if (!(c.radius > 0.0) || !std::isfinite(c.radius) || !geo::is_finite(c.center))
            throw GeoError("cline: circle radius must be positive and finite");
    }
    Cline(Line l) : shape_(l) {}

    bool is_line() const { return std::holds_alternative<Line>(shape_); }
    bool is_circle() const { return !is_line(); }
    const Circle& circle() const { return std::get<Circle>(shape_); }
    const Line& line() const { return std::get<Line>(shape_); }

    double distance(Point p) const {
        if (is_line()) return line().distance(p);
        return std::abs(std::abs(p - circle().center) - circle().radius);
    }

    // A length comparable to the cline's size and position, for tolerance bands.
    double extent() const {
        if (is_line()) return std::max(1.0, std::abs(line().anchor));
        return std::max(circle().radius, std::abs(circle().center));
    }

    bool contains(const ExtPoint& p, double eps) const {
        if (p.is_infinite()) return is_line();
        return distance(p.value()) <= eps * std::max(extent(), std::abs(p.value()));
    }

    /// Points spread along the cline: evenly around a circle, or at
    /// symmetric offsets from the anchor of a line.
    std::vector<Point> samples(int n) const {
        std::vector<Point> out;
        out.reserve(n);
        for (int i = 0; i < n; ++i) {
            if (is_line()) {
                double t = std::tan(kPi * (i + 0.5) / n - kPi / 2);
                out.push_back(line().at(t));
            } else {
                out.push_back(circle().at(kTwoPi * i / n));
            }
        }
        return out;
    }

    const std::variant<Circle, Line>& shape() const { return shape_; }

private:
    std::variant<Circle, Line> shape_;
};

struct InversionCircle {
    Point center;
    double radius = 1.0;

    InversionCircle() = default;
    InversionCircle(Point c, double r) : center(c), radius(r) {
        if (!(r > 0.0) || !std::isfinite(r)) throw GeoError("inversion circle: radius must be positive");
    }

    Cline as_cline() const { return Cline(Circle{center, radius}); }
};

inline const InversionCircle kUnitCircle{Complex(0.0, 0.0), 1.0};

inline ExtPoint invert_point(const InversionCircle& w, const ExtPoint& p, const Tolerances& tol = {}) {
    if (p.is_infinite()) return ExtPoint(w.center);
    Complex d = p.value() - w.center;
    if (std::abs(d) <= tol.eps_degenerate * w.radius) return ExtPoint::infinity();
    return ExtPoint(w.center + w.radius * w.radius / std::conj(d));
}

/// Finite-point shorthand; throws if p is the center.
inline Point invert(const InversionCircle& w, Point p, const Tolerances& tol = {}) {
    ExtPoint r = invert_point(w, ExtPoint(p), tol);
    if (r.is_infinite()) throw GeoError("inversion of the center");
    return r.value();
}

inline Cline cline_through(const ExtPoint& a, const ExtPoint& b, const ExtPoint& c,
                           const Tolerances& tol = {}) {
    std::vector<Point> finite;
    for (const ExtPoint* p : {&a, &b, &c})
        if (p->is_finite()) finite.push_back(p->value());
    if (finite.size() < 2) throw GeoError("cline_through: coincident points");
    if (finite.size() == 2) {
        double s = scale_of({finite[0], finite[1]});
        if (s == 0.0) throw GeoError("cline_through: coincident points");
        return Cline(Line::through(finite[0], finite[1]));
    }
    Point pa = finite[0], pb = finite[1], pc = finite[2];
    double s = scale_of({pa, pb, pc});
    double dab = std::abs(pa - pb), dbc = std::abs(pb - pc), dca = std::abs(pc - pa);
    if (s == 0.0 || std::min({dab, dbc, dca}) <= tol.eps_eq * s)
        throw GeoError("cline_through: coincident points");
    if (std::abs(((pb - pa) * std::conj(pc - pa)).imag()) < tol.eps_degenerate * s * s) {
        if (dab >= dbc && dab >= dca) return Cline(Line::through(pa, pb));
        if (dbc >= dca) return Cline(Line::through(pb, pc));
        return Cline(Line::through(pc, pa));
    }
    return Cline(circumcircle(Triangle{pa, pb, pc}, tol));
}

/// Image of a cline under inversion. Three well-spread points are inverted
/// and refit; the image is a line exactly when the input passes through the
/// center (within eps_degenerate relative to the configuration size).
inline Cline invert_cline(const InversionCircle& w, const Cline& g, const Tolerances& tol = {}) {
    const Point o = w.center;
    double s = std::max({g.extent(), w.radius, std::abs(o)});
    if (g.is_line()) {
        const Line& l = g.line();
        double dist = l.distance(o);
        if (dist <= tol.eps_degenerate * s) return Cline(Line(foot_point(o, l), l.direction));
        Point f = foot_point(o, l);
        // f and f +- dist*dir invert to three points a quarter turn apart.
        return cline_through(ExtPoint(o), ExtPoint(invert(w, f, tol)),
                             ExtPoint(invert(w, f + dist * l.direction, tol)), tol);
    }
    const Circle& c = g.circle();
    Complex away = c.center == o ? Complex(1.0, 0.0) : (c.center - o) / std::abs(c.center - o);
    double theta0 = std::arg(away);
    if (std::abs(std::abs(c.center - o) - c.radius) <= tol.eps_degenerate * s) {
        Point p1 = c.at(theta0 + kPi / 2), p2 = c.at(theta0 - kPi / 2);
        return cline_through(ExtPoint(invert(w, p1, tol)), ExtPoint(invert(w, p2, tol)),
                             ExtPoint::infinity(), tol);
    }
    Point p0 = c.at(theta0), p1 = c.at(theta0 + kTwoPi / 3), p2 = c.at(theta0 - kTwoPi / 3);
    return cline_through(ExtPoint(invert(w, p0, tol)), ExtPoint(invert(w, p1, tol)),
                         ExtPoint(invert(w, p2, tol)), tol);
}

inline double real_cross_ratio(Point a, Point b, Point c, Point d, const Tolerances& tol = {}) {
    double s = scale_of({a, b, c, d});
    double bc = std::abs(b - c), da = std::abs(d - a);
    if (bc <= tol.eps_eq * s || da <= tol.eps_eq * s || s == 0.0)
        throw GeoError("cross-ratio: zero denominator");
    return std::abs(a - b) * std::abs(c - d) / (bc * da);
}

/// Intersection points of two clines (0, 1 or 2 finite points). Tangency is
/// decided with the eps_assert band used by tangency_classify.
inline std::vector<Point> intersect(const Cline& g, const Cline& h, const Tolerances& tol = {}) {
    if (g.is_line() && h.is_line()) {
        const Line &l = g.line(), &m = h.line();
        if (std::abs((std::conj(l.direction) * m.direction).imag()) <= tol.eps_degenerate) return {};
        return {intersect(l, m, tol)};
    }
    if (g.is_line() != h.is_line()) {
        const Line& l = g.is_line() ? g.line() : h.line();
        const Circle& c = g.is_line() ? h.circle() : g.circle();
        Point f = foot_point(c.center, l);
        double dist = std::abs(f - c.center);
        double band = tol.eps_assert * c.radius;
        if (std::abs(dist - c.radius) <= band) return {f};
        if (dist > c.radius) return {};
        double t = std::sqrt(c.radius * c.radius - dist * dist);
        return {f - t * l.direction, f + t * l.direction};
    }
    const Circle &c1 = g.circle(), &c2 = h.circle();
    double d = std::abs(c2.center - c1.center);
    if (d == 0.0) return {};
    Tangency k;
    try {
        k = tangency_classify(c1, c2, tol);
    } catch (const GeoError&) {
        return {};
    }
    Complex u = (c2.center - c1.center) / d;
    double a = (d * d + c1.radius * c1.radius - c2.radius * c2.radius) / (2.0 * d);
    switch (k) {
    case Tangency::disjoint:
    case Tangency::nested: return {};
    case Tangency::ext_tangent:
    case Tangency::int_tangent: return {c1.center + a * u};
    case Tangency::intersecting: break;
    }
    double hh = std::sqrt(std::max(0.0, c1.radius * c1.radius - a * a));
    Complex iu(-u.imag(), u.real());
    return {c1.center + a * u - hh * iu, c1.center + a * u + hh * iu};
}

inline bool clines_perpendicular(const Cline& g, const Cline& h, const Tolerances& tol = {}) {
    if (g.is_line() && h.is_line()) {
        // Parallel lines meet only at infinity, where they are tangent.
        return std::abs((std::conj(g.line().direction) * h.line().direction).real()) <= tol.eps_assert;
    }
    if (g.is_line() != h.is_line()) {
        const Line& l = g.is_line() ? g.line() : h.line();
        const Circle& c = g.is_line() ? h.circle() : g.circle();
        double dist = l.distance(c.center);
        if (dist > c.radius * (1.0 + tol.eps_assert)) throw GeoError("no intersection");
        return dist <= tol.eps_assert * c.radius;
    }
    const Circle &c1 = g.circle(), &c2 = h.circle();
    double d = std::abs(c1.center - c2.center);
    double s = std::max({d, c1.radius, c2.radius});
    double band = tol.eps_assert * s;
    if (d > c1.radius + c2.radius + band || d < std::abs(c1.radius - c2.radius) - band)
        throw GeoError("no intersection");
    return std::abs(d * d - c1.radius * c1.radius - c2.radius * c2.radius) <= tol.eps_assert * s * s;
}

/// The cline through p and q perpendicular to w, built as the cline through
/// p, q and the inverse of p.
inline Cline perpendicular_cline_through(const InversionCircle& w, Point p, Point q,
                                         const Tolerances& tol = {}) {
    double limit = w.radius * (1.0 - tol.eps_degenerate);
    if (std::abs(p - w.center) >= limit || std::abs(q - w.center) >= limit)
        throw GeoError("point on or outside the inversion circle");
    if (std::abs(p - q) <= tol.eps_eq * std::max(w.radius, scale_of({p, q, w.center})))
        throw GeoError("coincident points");
    // Prefer the point farther from the center: its inverse is better conditioned.
    if (std::abs(q - w.center) > std::abs(p - w.center)) std::swap(p, q);
    return cline_through(ExtPoint(p), ExtPoint(q), invert_point(w, ExtPoint(p), tol), tol);
}

inline void require_distinct(std::initializer_list<Point> pts, const char* op, const Tolerances& tol) {
    double s = scale_of(pts);
    for (auto i = pts.begin(); i != pts.end(); ++i)
        for (auto j = i + 1; j != pts.end(); ++j)
            if (std::abs(*i - *j) <= tol.eps_eq * s || s == 0.0)
                throw GeoError(std::string(op) + ": coincident points");
}

/// True when the four points lie on one cline.
inline bool inscribed_check(Point u, Point v, Point w, Point z, const Tolerances& tol = {}) {
    require_distinct({u, v, w, z}, "inscribed_check", tol);
    Complex value = (v - u) * (w - z) / ((v - w) * (z - u));
    return std::abs(value.imag()) <= tol.eps_assert * std::abs(value);
}

inline double ptolemy_residual(Point a, Point b, Point c, Point d) {
    return std::abs(a - b) * std::abs(c - d) + std::abs(b - c) * std::abs(d - a) -
           std::abs(a - c) * std::abs(b - d);
}

/// Unit tangent at a of the arc that starts at a, passes m and ends at x.
inline Complex arc_tangent(Point a, Point m, Point x, const Tolerances& tol = {}) {
    Cline g = cline_through(ExtPoint(a), ExtPoint(m), ExtPoint(x), tol);
    if (g.is_line()) return (m - a) / std::abs(m - a);
    Complex radial = (a - g.circle().center) / g.circle().radius;
    Complex ccw = Complex(0, 1) * radial;
    return orient(a, m, x) > 0 ? ccw : -ccw;
}

} // namespace geo
