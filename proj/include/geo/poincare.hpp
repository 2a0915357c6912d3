#pragma once

#include <array>
#include <optional>
#include <vector>

#include "geo/inversive.hpp"

// Poincare disk model with the unit circle as the absolute.

namespace geo {

class HPoint {
public:
    HPoint() = default;
    explicit HPoint(Complex z, const Tolerances& tol = {}) : z_(z) {
        if (!geo::is_finite(z) || !(std::abs(z) < 1.0 - tol.eps_degenerate))
            throw GeoError("point outside the absolute");
    }
    Complex z() const { return z_; }

private:
    Complex z_{0.0, 0.0};
};

/// An h-line: its carrier cline (perpendicular to the absolute) and its two
/// ideal points. Ideal points are ordered so that, for the defining pair
/// (P, Q), the points A, P, Q, B follow each other along the carrier.
struct HLine {
    Cline carrier;
    Complex ideal_a;
    Complex ideal_b;
};

struct HCircle {
    HPoint hcenter;
    double hradius;
    Circle euclid;
};

inline bool same_point(Complex p, Complex q, const Tolerances& tol) {
    return std::abs(p - q) <= tol.eps_eq;
}

/// Intersections of a cline with the absolute, snapped to unit modulus.
inline std::array<Complex, 2> absolute_crossings(const Cline& carrier, const Tolerances& tol = {}) {
    auto pts = intersect(carrier, kUnitCircle.as_cline(), tol);
    if (pts.size() != 2) throw GeoError("cline does not cross the absolute");
    return {pts[0] / std::abs(pts[0]), pts[1] / std::abs(pts[1])};
}

inline double delta_ratio(Complex a, Complex b, Complex p, Complex q) {
    return std::abs(a - q) * std::abs(b - p) / (std::abs(q - b) * std::abs(p - a));
}

inline HLine h_line_through(const HPoint& p, const HPoint& q, const Tolerances& tol = {}) {
    if (same_point(p.z(), q.z(), tol)) throw GeoError("h_line_through: coincident points");
    Cline carrier = perpendicular_cline_through(kUnitCircle, p.z(), q.z(), tol);
    auto [a, b] = absolute_crossings(carrier, tol);
    // A is the ideal point on the side of P, which is the labeling with delta >= 1.
    if (delta_ratio(a, b, p.z(), q.z()) < 1.0) std::swap(a, b);
    return {carrier, a, b};
}

/// The h-line with the given ideal points (unit complex numbers).
inline HLine h_line_from_ideal(Complex a, Complex b, const Tolerances& tol = {}) {
    a /= std::abs(a);
    b /= std::abs(b);
    if (std::abs(a - b) <= tol.eps_eq) throw GeoError("h_line_from_ideal: coincident ideal points");
    if (std::abs(a + b) <= tol.eps_eq) return {Cline(Line(Complex(0.0), a)), a, b};
    // The tangents to the absolute at a and b meet at the carrier's center.
    Complex c = 2.0 * a * b / (a + b);
    return {Cline(Circle{c, std::abs(c - a)}), a, b};
}

inline double h_dist_from_center(double x) {
    if (!(x >= 0.0 && x < 1.0)) throw GeoError("h_dist_from_center: expected 0 <= x < 1");
    return std::log((1.0 + x) / (1.0 - x));
}

/// Euclidean distance from the center of a point at h-distance y.
inline double euclid_dist_from_center(double y) {
    if (!(y >= 0.0) || !std::isfinite(y)) throw GeoError("euclid_dist_from_center: expected y >= 0");
    double e = std::exp(y);
    return (e - 1.0) / (e + 1.0);
}

/// PQ_h = ln of the cross-ratio AQ*BP / (QB*PA) of P, Q and the ideal points
/// of (PQ)_h.
inline double h_dist(const HPoint& p, const HPoint& q, const Tolerances& tol = {}) {
    if (same_point(p.z(), q.z(), tol)) return 0.0;
    HLine l = h_line_through(p, q, tol);
    return std::log(delta_ratio(l.ideal_a, l.ideal_b, p.z(), q.z()));
}

/// The cline Gamma perpendicular to the absolute whose inversion takes p to
/// the center; empty for p = 0 (the identity motion).
///
/// Gamma is centered at the inverse p' = p/|p|^2 of p in the absolute. Its
/// radius follows from orthogonality, |p'|^2 = 1 + rho^2, which gives
/// rho = sqrt(1 - |p|^2) / |p|; the value 1/sqrt(1 - |p|^2) is not orthogonal
/// to the absolute.
inline std::optional<InversionCircle> move_to_center(const HPoint& p) {
    double x = std::abs(p.z());
    if (x == 0.0) return std::nullopt;
    return InversionCircle(p.z() / (x * x), std::sqrt((1.0 - x) * (1.0 + x)) / x);
}

inline Complex apply_motion(const std::optional<InversionCircle>& g, Complex z) {
    if (!g) return z;
    return invert(*g, z);
}

inline Cline apply_motion(const std::optional<InversionCircle>& g, const Cline& c,
                          const Tolerances& tol = {}) {
    if (!g) return c;
    return invert_cline(*g, c, tol);
}

inline HLine apply_motion(const std::optional<InversionCircle>& g, const HLine& l,
                          const Tolerances& tol = {}) {
    if (!g) return l;
    Complex a = invert(*g, l.ideal_a), b = invert(*g, l.ideal_b);
    return {invert_cline(*g, l.carrier, tol), a / std::abs(a), b / std::abs(b)};
}

/// Reflection of the h-plane through an h-line: inversion in a circular
/// carrier, Euclidean reflection in a straight one.
inline Complex reflect_in_carrier(const Cline& carrier, Complex z) {
    if (carrier.is_line()) return reflect_line(z, carrier.line());
    const Circle& c = carrier.circle();
    return invert(InversionCircle(c.center, c.radius), z);
}

inline HPoint h_reflect(const HLine& l, const HPoint& p, const Tolerances& tol = {}) {
    return HPoint(reflect_in_carrier(l.carrier, p.z()), tol);
}

/// The point of [PQ)_h at h-distance s from P.
inline HPoint h_point_at(const HPoint& p, const HPoint& q, double s, const Tolerances& tol = {}) {
    if (same_point(p.z(), q.z(), tol)) throw GeoError("h_point_at: coincident points");
    auto g = move_to_center(p);
    Complex qc = apply_motion(g, q.z());
    Complex r = std::tanh(s / 2.0) * qc / std::abs(qc);
    return HPoint(apply_motion(g, r), tol);
}

inline HPoint h_midpoint(const HPoint& p, const HPoint& q, const Tolerances& tol = {}) {
    if (same_point(p.z(), q.z(), tol)) return p;
    return h_point_at(p, q, 0.5 * h_dist(p, q, tol), tol);
}

/// Foot point of p on l: the h-midpoint of p and its reflection through l.
inline HPoint h_foot(const HLine& l, const HPoint& p, const Tolerances& tol = {}) {
    HPoint r = h_reflect(l, p, tol);
    return h_midpoint(p, r, tol);
}

inline double h_dist_to_line(const HLine& l, const HPoint& p, const Tolerances& tol = {}) {
    return 0.5 * h_dist(p, h_reflect(l, p, tol), tol);
}

/// The h-line through x perpendicular to l, for x not on l.
inline HLine h_perpendicular_from(const HLine& l, const HPoint& x, const Tolerances& tol = {}) {
    HPoint r = h_reflect(l, x, tol);
    if (same_point(r.z(), x.z(), tol)) throw GeoError("h_perpendicular_from: point lies on the line");
    return h_line_through(x, r, tol);
}

/// The h-line perpendicular to l at its point x.
inline HLine h_perpendicular_at(const HLine& l, const HPoint& x, const Tolerances& tol = {}) {
    auto g = move_to_center(x);
    HLine moved = apply_motion(g, l, tol);
    // Through the center the h-line is a diameter; turn its direction a quarter.
    Complex dir = moved.ideal_b - moved.ideal_a;
    Complex y = 0.5 * Complex(0, 1) * dir / std::abs(dir);
    return h_line_through(x, HPoint(apply_motion(g, y), tol), tol);
}

/// The h-line through p with ideal point a.
inline HLine h_line_to_ideal(const HPoint& p, Complex a, const Tolerances& tol = {}) {
    a /= std::abs(a);
    Cline carrier = std::abs(p.z()) <= tol.eps_eq
                        ? Cline(Line(Complex(0.0), a))
                        : cline_through(ExtPoint(p.z()), ExtPoint(a),
                                        invert_point(kUnitCircle, ExtPoint(p.z()), tol), tol);
    auto [u, v] = absolute_crossings(carrier, tol);
    Complex other = std::abs(u - a) > std::abs(v - a) ? u : v;
    return {carrier, other, a};
}

/// Unit tangent at q of the h-segment [QP]_h, pointing toward p.
inline Complex h_tangent(const HPoint& q, const HPoint& p, const Tolerances& tol = {}) {
    HLine l = h_line_through(q, p, tol);
    Complex chord = p.z() - q.z();
    if (l.carrier.is_line()) return chord / std::abs(chord);
    const Circle& c = l.carrier.circle();
    Complex t = Complex(0, 1) * (q.z() - c.center) / c.radius;
    // The part of the carrier inside the absolute is shorter than a half circle.
    if ((std::conj(t) * chord).real() < 0) t = -t;
    return t;
}

/// Signed angle at q between the h-half-lines toward p and r.
inline AngleValue h_angle(const HPoint& p, const HPoint& q, const HPoint& r, const Tolerances& tol = {}) {
    if (same_point(p.z(), q.z(), tol) || same_point(r.z(), q.z(), tol))
        throw GeoError("degenerate angle");
    return normalize_angle(std::arg(h_tangent(q, r, tol) / h_tangent(q, p, tol)));
}

/// Euclidean circle formed by the points at h-distance rho from c. Its
/// Euclidean center lies on the ray from the origin through c.
inline HCircle h_circle_realize(const HPoint& c, double rho) {
    if (!(rho > 0.0) || !std::isfinite(rho)) throw GeoError("h_circle: radius must be positive");
    double x = std::abs(c.z());
    Complex dir = x > 0.0 ? c.z() / x : Complex(1.0, 0.0);
    double d = h_dist_from_center(x);
    // Diametral points at signed h-distances d +- rho along the ray.
    double far = std::tanh((d + rho) / 2.0);
    double near = std::tanh((d - rho) / 2.0);
    Circle e{dir * (0.5 * (far + near)), 0.5 * (far - near)};
    if (!(std::abs(e.center) + e.radius < 1.0)) throw GeoError("h_circle: radius too large for double precision");
    return {c, rho, e};
}

inline double h_circumference(double rho) {
    if (!(rho > 0.0)) throw GeoError("h_circumference: radius must be positive");
    return kTwoPi * std::sinh(rho);
}

/// Points where an h-circle meets an h-line. The circle's center is moved to
/// the origin first, where the h-circle is a concentric Euclidean circle.
inline std::vector<HPoint> intersect(const HCircle& c, const HLine& l, const Tolerances& tol = {}) {
    auto g = move_to_center(c.hcenter);
    Cline moved = apply_motion(g, l.carrier, tol);
    Circle centered{Complex(0.0), std::tanh(c.hradius / 2.0)};
    std::vector<HPoint> out;
    for (Complex z : intersect(Cline(centered), moved, tol)) out.emplace_back(apply_motion(g, z), tol);
    return out;
}

/// Angle of parallelism for the distance h from a point to a line:
/// h = 1/2 ln((1 + cos phi) / (1 - cos phi)), i.e. tan(phi / 2) = e^-h.
inline AngleValue angle_of_parallelism(double h) {
    if (!(h > 0.0) || !std::isfinite(h)) throw GeoError("angle_of_parallelism: expected h > 0");
    return normalize_angle(2.0 * std::atan(std::exp(-h)));
}

inline double parallelism_distance(double phi) {
    if (!(phi > 0.0 && phi < kPi / 2)) throw GeoError("parallelism_distance: expected 0 < phi < pi/2");
    return -std::log(std::tan(phi / 2.0));
}

inline double h_defect(const HPoint& p, const HPoint& q, const HPoint& r, const Tolerances& tol = {}) {
    if (same_point(p.z(), q.z(), tol) || same_point(q.z(), r.z(), tol) || same_point(r.z(), p.z(), tol))
        throw GeoError("h_defect: degenerate triangle");
    auto g = move_to_center(p);
    // Through the center h-lines are diameters, so collinearity is Euclidean.
    if (Triangle{Complex(0.0), apply_motion(g, q.z()), apply_motion(g, r.z())}.degenerate(tol))
        throw GeoError("h_defect: degenerate triangle");
    double sum = std::abs(h_angle(q, p, r, tol).radians()) + std::abs(h_angle(p, q, r, tol).radians()) +
                 std::abs(h_angle(q, r, p, tol).radians());
    return kPi - sum;
}

enum class CycleKind { h_circle, horocycle, equidistant, h_line, outside };

inline const char* to_string(CycleKind k) {
    switch (k) {
    case CycleKind::h_circle: return "h_circle";
    case CycleKind::horocycle: return "horocycle";
    case CycleKind::equidistant: return "equidistant";
    case CycleKind::h_line: return "h_line";
    case CycleKind::outside: return "outside";
    }
    return "?";
}

inline CycleKind classify_cycle(const Circle& g, const Tolerances& tol = {}) {
    if (!(g.radius > 0.0)) throw GeoError("classify_cycle: radius must be positive");
    double d = std::abs(g.center), r = g.radius;
    double s = std::max(1.0, d + r);
    double band = tol.eps_assert * s;
    if (std::abs(d * d - 1.0 - r * r) <= band * s) return CycleKind::h_line;
    if (r < 1.0 && std::abs(d + r - 1.0) <= band) return CycleKind::horocycle;
    if (d + r < 1.0) return CycleKind::h_circle;
    if (d < 1.0 + r - band && d > std::abs(1.0 - r) + band) return CycleKind::equidistant;
    return CycleKind::outside;
}

inline CycleKind classify_cycle(const Cline& g, const Tolerances& tol = {}) {
    if (g.is_circle()) return classify_cycle(g.circle(), tol);
    double dist = g.line().distance(Complex(0.0));
    if (dist <= tol.eps_assert) return CycleKind::h_line;
    if (dist < 1.0 - tol.eps_assert) return CycleKind::equidistant;
    return CycleKind::outside;
}

inline double conformal_factor(const HPoint& p) { return 2.0 / (1.0 - std::norm(p.z())); }

/// Distance between nearest ideal points of two h-lines; zero when they
/// share an ideal point.
inline double shared_ideal_gap(const HLine& l, const HLine& m) {
    return std::min({std::abs(l.ideal_a - m.ideal_a), std::abs(l.ideal_a - m.ideal_b),
                     std::abs(l.ideal_b - m.ideal_a), std::abs(l.ideal_b - m.ideal_b)});
}

} // namespace geo
