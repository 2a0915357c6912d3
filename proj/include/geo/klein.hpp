#pragma once

#include "geo/poincare.hpp"

namespace geo {

class KPoint {
public:
    KPoint() = default;
    explicit KPoint(Complex z, const Tolerances& tol = {}) : z_(z) {
        if (!geo::is_finite(z) || !(std::abs(z) < 1.0 - tol.eps_degenerate))
            throw GeoError("point outside the absolute");
    }
    Complex z() const { return z_; }

private:
    Complex z_{0.0, 0.0};
};

// Lift to the unit sphere by stereographic projection from the South Pole,
// then drop vertically back to the plane: |p| = x goes to 2x / (1 + x^2).
inline KPoint poincare_to_klein(const HPoint& p) {
    return KPoint(2.0 * p.z() / (1.0 + std::norm(p.z())));
}

inline HPoint klein_to_poincare(const KPoint& k) {
    // (1 - sqrt(1 - s^2)) / s along the same ray, in cancellation-free form.
    return HPoint(k.z() / (1.0 + std::sqrt((1.0 - std::abs(k.z())) * (1.0 + std::abs(k.z())))));
}

/// PQ_h = 1/2 |ln (AQ * BP) / (QB * PA)| with A, B the ends of the chord
/// through P and Q.
inline double klein_dist(const KPoint& p, const KPoint& q, const Tolerances& tol = {}) {
    if (same_point(p.z(), q.z(), tol)) return 0.0;
    auto [a, b] = absolute_crossings(Cline(Line::through(p.z(), q.z())), tol);
    return 0.5 * std::abs(std::log(delta_ratio(a, b, p.z(), q.z())));
}

/// Points and lines of Bolyai's compass-and-ruler construction of the two
/// lines through P asymptotically parallel to l.
struct BolyaiResult {
    HPoint p;
    HPoint q;                      // foot of P on l
    HPoint r;                      // on l with QR_h = QP_h
    std::array<HPoint, 2> t;       // on k with PT_h = PQ_h
    HLine m, n, k;                 // (PQ)_h, perpendicular to m at P, perpendicular to n through R
    std::array<HLine, 2> parallels;

    double qr_h(const Tolerances& tol = {}) const;
    double pt_h(int i, const Tolerances& tol = {}) const;
};

inline BolyaiResult bolyai_construct(const HLine& l, const HPoint& p, const Tolerances& tol = {}) {
    double h = h_dist_to_line(l, p, tol);
    if (h <= tol.eps_assert) throw GeoError("bolyai: point lies on the line");
    // 1. m through P perpendicular to l, Q its foot.
    HLine m = h_perpendicular_from(l, p, tol);
    HPoint q = h_foot(l, p, tol);
    // 2. n through P perpendicular to m.
    HLine n = h_perpendicular_at(m, p, tol);
    // 3. Circle centered Q through P meets l at R.
    double pq = h_dist(p, q, tol);
    auto on_l = intersect(h_circle_realize(q, pq), l, tol);
    if (on_l.empty()) throw GeoError("bolyai: circle misses the line");
    HPoint r = on_l.front();
    // 4. k through R perpendicular to n.
    HLine k = h_perpendicular_from(n, r, tol);
    // 5. Circle centered P through Q meets k at T.
    auto on_k = intersect(h_circle_realize(p, pq), k, tol);
    if (on_k.size() != 2) throw GeoError("bolyai: circle does not cross k twice");
    // 6. (PT)_h is asymptotically parallel to l.
    return {p, q, r, {on_k[0], on_k[1]}, m, n, k,
            {h_line_through(p, on_k[0], tol), h_line_through(p, on_k[1], tol)}};
}

inline double BolyaiResult::qr_h(const Tolerances& tol) const { return h_dist(q, r, tol); }

inline double BolyaiResult::pt_h(int i, const Tolerances& tol) const { return h_dist(p, t[i], tol); }

/// The same six steps carried out in the Euclidean plane. There the circle
/// of step 5 touches k, so `t` holds a single point and the result is the
/// unique parallel.
struct EuclidBolyaiResult {
    Point q, r;
    std::vector<Point> t;
    Line parallel;
};

inline EuclidBolyaiResult bolyai_construct_euclidean(const Line& l, Point p, const Tolerances& tol = {}) {
    Point q = foot_point(p, l);
    double pq = std::abs(p - q);
    if (pq <= tol.eps_eq * std::max(1.0, std::abs(p))) throw GeoError("bolyai: point lies on the line");
    Line m = Line::through(p, q);
    Line n(p, Complex(0, 1) * m.direction);
    auto on_l = intersect(Cline(Circle{q, pq}), Cline(l), tol);
    Point r = on_l.front();
    Line k(r, Complex(0, 1) * n.direction);
    auto on_k = intersect(Cline(Circle{p, pq}), Cline(k), tol);
    if (on_k.empty()) throw GeoError("bolyai: circle misses k");
    return {q, r, on_k, Line::through(p, on_k.front())};
}

/// h-midpoint computed in the Poincare model, reported in Klein coordinates.
inline KPoint klein_midpoint(const KPoint& p, const KPoint& q, const Tolerances& tol = {}) {
    return poincare_to_klein(h_midpoint(klein_to_poincare(p), klein_to_poincare(q), tol));
}

} // namespace geo
