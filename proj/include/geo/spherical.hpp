#pragma once

#include "geo/inversive.hpp"

namespace geo {

struct Vec3 {
    double x = 0, y = 0, z = 0;

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    constexpr Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(dot(*this)); }
};

class SPoint {
public:
    explicit SPoint(Vec3 v, const Tolerances& tol = {}) : v_(v) {
        if (!(std::abs(v.norm() - 1.0) <= tol.eps_eq)) throw GeoError("spherical point must be a unit vector");
    }
    static SPoint normalized(Vec3 v) {
        double n = v.norm();
        if (!(n > 0) || !std::isfinite(n)) throw GeoError("cannot normalize a zero vector");
        return SPoint(v * (1.0 / n));
    }
    const Vec3& v() const { return v_; }

private:
    Vec3 v_;
};

struct GreatCircle {
    Vec3 normal;

    explicit GreatCircle(Vec3 n, const Tolerances& tol = {}) : normal(n) {
        if (!(std::abs(n.norm() - 1.0) <= tol.eps_eq)) throw GeoError("great circle normal must be a unit vector");
    }
};

inline const SPoint kNorthPole{Vec3{0, 0, 1}};
inline const SPoint kSouthPole{Vec3{0, 0, -1}};

/// Central angle between unit vectors, in [0, pi]. atan2 of the cross and
/// dot products stays accurate near 0 and near pi where acos does not.
inline double s_dist(const SPoint& a, const SPoint& b) {
    return std::atan2(a.v().cross(b.v()).norm(), std::clamp(a.v().dot(b.v()), -1.0, 1.0));
}

/// Tangent at a toward b: the part of b orthogonal to a.
inline Vec3 tangent_toward(const SPoint& a, const SPoint& b) {
    return b.v() - a.v() * a.v().dot(b.v());
}

/// cos(AB) - cos(BC) cos(CA) for a triangle with a right angle at C.
inline double s_pythagoras_residual(const SPoint& a, const SPoint& b, const SPoint& c,
                                    const Tolerances& tol = {}) {
    Vec3 ta = tangent_toward(c, a), tb = tangent_toward(c, b);
    double na = ta.norm(), nb = tb.norm();
    // A zero leg leaves the angle at C undefined; the identity still holds.
    if (na > tol.eps_eq && nb > tol.eps_eq && std::abs(ta.dot(tb)) > tol.eps_assert * na * nb)
        throw GeoError("s_pythagoras: angle at C is not right");
    return std::cos(s_dist(a, b)) - std::cos(s_dist(b, c)) * std::cos(s_dist(c, a));
}

/// Plane to sphere from the South Pole: the restriction of the inversion in
/// the sphere of radius sqrt(2) centered at S.
inline SPoint stereographic_to_sphere(const ExtPoint& p) {
    if (p.is_infinite()) return kSouthPole;
    double u = p.value().real(), v = p.value().imag();
    double q = u * u + v * v;
    return SPoint::normalized(Vec3{2 * u, 2 * v, 1 - q} * (1.0 / (1 + q)));
}

inline ExtPoint sphere_to_plane(const SPoint& s, const Tolerances& tol = {}) {
    const Vec3& v = s.v();
    if (1.0 + v.z <= tol.eps_degenerate) return ExtPoint::infinity();
    return ExtPoint(Complex(v.x, v.y) / (1.0 + v.z));
}

/// Projection from the North Pole onto the plane z = 0.
inline ExtPoint sphere_to_plane_from_north(const SPoint& s, const Tolerances& tol = {}) {
    const Vec3& v = s.v();
    if (1.0 - v.z <= tol.eps_degenerate) return ExtPoint::infinity();
    return ExtPoint(Complex(v.x, v.y) / (1.0 - v.z));
}

inline Complex central_project(const SPoint& p, const Tolerances& tol = {}) {
    const Vec3& v = p.v();
    if (v.z <= tol.eps_degenerate) throw GeoError("central projection: point not in the north hemisphere");
    return Complex(v.x / v.z, v.y / v.z);
}

/// Stereographic image (from the South Pole) of a great circle.
inline Cline great_circle_image(const GreatCircle& g, const Tolerances& tol = {}) {
    const Vec3& n = g.normal;
    // Start from the highest point of the circle, as far from S as possible.
    Vec3 top = Vec3{0, 0, 1} - n * n.z;
    Vec3 e1 = top.norm() > 1e-8 ? top * (1.0 / top.norm()) : Vec3{1, 0, 0};
    Vec3 e2 = n.cross(e1);
    auto on_circle = [&](double theta) {
        return SPoint::normalized(e1 * std::cos(theta) + e2 * std::sin(theta));
    };
    return cline_through(sphere_to_plane(on_circle(0.0), tol), sphere_to_plane(on_circle(kTwoPi / 3), tol),
                         sphere_to_plane(on_circle(-kTwoPi / 3), tol), tol);
}

/// Unsigned angle of the spherical triangle at a.
inline double s_vertex_angle(const SPoint& a, const SPoint& b, const SPoint& c) {
    Vec3 tb = tangent_toward(a, b), tc = tangent_toward(a, c);
    return std::atan2(tb.cross(tc).norm(), tb.dot(tc));
}

/// Angle sum minus pi; the area of the triangle on the unit sphere.
inline double s_excess(const SPoint& a, const SPoint& b, const SPoint& c, const Tolerances& tol = {}) {
    double det = a.v().dot(b.v().cross(c.v()));
    if (std::abs(det) <= tol.eps_degenerate) throw GeoError("s_excess: degenerate triangle");
    return s_vertex_angle(a, b, c) + s_vertex_angle(b, c, a) + s_vertex_angle(c, a, b) - kPi;
}

} // namespace geo
