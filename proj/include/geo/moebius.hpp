#pragma once

#include <utility>
#include <vector>

#include "geo/inversive.hpp"

namespace geo {

// M = (az + b) / (cz + d). Coefficients are kept unnormalized; two
// transformations are equal when their coefficient vectors are proportional.
struct Moebius {
    Complex a{1}, b{0}, c{0}, d{1};
    // Exact images recorded by from_three_points. Evaluating the coefficients
    // at z1 rounds to within a few ulps of 1; the pins keep the three defining
    // images exact. Any algebra on the coefficients drops them.
    std::vector<std::pair<ExtPoint, ExtPoint>> pins;

    Moebius() = default;
    Moebius(Complex a_, Complex b_, Complex c_, Complex d_, const Tolerances& tol = {})
        : a(a_), b(b_), c(c_), d(d_) {
        double m = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
        if (!(m > 0) || !std::isfinite(m) || std::abs(det()) <= tol.eps_degenerate * m * m)
            throw GeoError("moebius: vanishing determinant");
    }

    static Moebius identity() { return {}; }

    Complex det() const { return a * d - b * c; }

    ExtPoint operator()(const ExtPoint& z) const;
};

inline ExtPoint apply(const Moebius& m, const ExtPoint& z) {
    for (const auto& [from, to] : m.pins)
        if (from == z) return to;
    if (z.is_infinite()) {
        if (m.c == Complex(0.0)) return ExtPoint::infinity();
        return ExtPoint(m.a / m.c);
    }
    Complex w = z.value();
    Complex num = m.a * w + m.b;
    Complex den = m.c * w + m.d;
    if (den == Complex(0.0)) return ExtPoint::infinity();
    Complex r = num / den;
    if (!is_finite(r)) return ExtPoint::infinity();
    return ExtPoint(r);
}

inline ExtPoint Moebius::operator()(const ExtPoint& z) const { return apply(*this, z); }

/// z -> m1(m2(z)).
inline Moebius compose(const Moebius& m1, const Moebius& m2) {
    return Moebius(m1.a * m2.a + m1.b * m2.c, m1.a * m2.b + m1.b * m2.d,
                   m1.c * m2.a + m1.d * m2.c, m1.c * m2.b + m1.d * m2.d);
}

inline Moebius inverse(const Moebius& m) { return Moebius(m.d, -m.b, -m.c, m.a); }

/// Coefficient vectors proportional within rel_eps.
inline bool projectively_equal(const Moebius& m, const Moebius& n, double rel_eps = 1e-12) {
    const Complex p[4] = {m.a, m.b, m.c, m.d};
    const Complex q[4] = {n.a, n.b, n.c, n.d};
    double np = 0, nq = 0;
    for (int i = 0; i < 4; ++i) {
        np = std::max(np, std::abs(p[i]));
        nq = std::max(nq, std::abs(q[i]));
    }
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (std::abs(p[i] * q[j] - p[j] * q[i]) > rel_eps * np * nq) return false;
    return true;
}

struct Elementary {
    enum class Kind { shift, scale, reciprocal };
    Kind kind;
    Complex w{0};

    Moebius as_moebius() const {
        switch (kind) {
        case Kind::shift: return Moebius(1, w, 0, 1);
        case Kind::scale: return Moebius(w, 0, 0, 1);
        case Kind::reciprocal: return Moebius(0, 1, 1, 0);
        }
        return {};
    }

    ExtPoint operator()(const ExtPoint& z) const { return apply(as_moebius(), z); }

    friend bool operator==(const Elementary&, const Elementary&) = default;
};

/// Elementary factors in application order: the first element acts first.
inline std::vector<Elementary> decompose_elementary(const Moebius& m) {
    using K = Elementary::Kind;
    if (m.c == Complex(0.0))
        return {{K::scale, m.a / m.d}, {K::shift, m.b / m.d}};
    return {{K::shift, m.d / m.c},
            {K::reciprocal, 0},
            {K::scale, -m.det() / (m.c * m.c)},
            {K::shift, m.a / m.c}};
}

inline Moebius recompose(const std::vector<Elementary>& chain) {
    Moebius out;
    for (const auto& e : chain) out = compose(e.as_moebius(), out);
    return out;
}

namespace detail {

inline Moebius three_point_coefficients(const ExtPoint& z0, const ExtPoint& z1, const ExtPoint& zinf,
                                        const Tolerances& tol) {
    if (z0.is_infinite()) {
        Complex p1 = z1.value(), pi = zinf.value();
        return Moebius(0, p1 - pi, 1, -pi, tol);
    }
    if (z1.is_infinite()) {
        Complex p0 = z0.value(), pi = zinf.value();
        return Moebius(1, -p0, 1, -pi, tol);
    }
    if (zinf.is_infinite()) {
        Complex p0 = z0.value(), p1 = z1.value();
        return Moebius(1, -p0, 0, p1 - p0, tol);
    }
    Complex p0 = z0.value(), p1 = z1.value(), pi = zinf.value();
    require_distinct({p0, p1, pi}, "from_three_points", tol);
    Complex alpha = p1 - pi, beta = p1 - p0;
    return Moebius(alpha, -(p0 * alpha), beta, -(pi * beta), tol);
}

} // namespace detail

/// The transformation sending z0 -> 0, z1 -> 1, zinf -> infinity.
inline Moebius from_three_points(const ExtPoint& z0, const ExtPoint& z1, const ExtPoint& zinf,
                                 const Tolerances& tol = {}) {
    if (z0 == z1 || z1 == zinf || z0 == zinf) throw GeoError("from_three_points: coincident points");
    Moebius m = detail::three_point_coefficients(z0, z1, zinf, tol);
    m.pins = {{z0, ExtPoint(0.0)}, {z1, ExtPoint(1.0)}, {zinf, ExtPoint::infinity()}};
    return m;
}

/// (u, v; w, z) = (u - w)(v - z) / ((v - w)(u - z)). A factor holding an
/// infinite argument cancels against its partner, i.e. inf/inf = 1.
inline Complex complex_cross_ratio(const ExtPoint& u, const ExtPoint& v, const ExtPoint& w,
                                   const ExtPoint& z, const Tolerances& tol = {}) {
    const ExtPoint* all[4] = {&u, &v, &w, &z};
    int infinite = 0;
    for (int i = 0; i < 4; ++i) {
        if (all[i]->is_infinite()) ++infinite;
        for (int j = i + 1; j < 4; ++j)
            if (*all[i] == *all[j]) throw GeoError("cross-ratio: repeated points");
    }
    if (infinite > 1) throw GeoError("cross-ratio: repeated points");
    if (infinite == 0) {
        Complex pu = u.value(), pv = v.value(), pw = w.value(), pz = z.value();
        require_distinct({pu, pv, pw, pz}, "cross-ratio", tol);
    }
    auto diff = [](const ExtPoint& p, const ExtPoint& q) -> std::optional<Complex> {
        if (p.is_infinite() || q.is_infinite()) return std::nullopt;
        return p.value() - q.value();
    };
    Complex num(1.0), den(1.0);
    for (auto f : {diff(u, w), diff(v, z)})
        if (f) num *= *f;
    for (auto f : {diff(v, w), diff(u, z)})
        if (f) den *= *f;
    return num / den;
}

} // namespace geo
