#pragma once

#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "geo/moebius.hpp"
#include "geo/script/value.hpp"

namespace geo::script {

struct Param {
    TypeSet types;
};

using Args = std::span<const Value>;

struct OpSpec {
    std::string_view kind;
    std::string_view op; // empty for the plain form of a kind
    std::vector<Param> params;
    ValueType result;
    std::function<Value(Args, const Tolerances&)> eval;
    // For operations whose result type follows the argument types.
    std::function<ValueType(std::span<const ValueType>)> result_of = {};

    std::string keyword() const {
        return op.empty() ? std::string(kind) : std::string(kind) + " " + std::string(op);
    }
};

namespace detail {

inline ExtPoint ext_point(const Value& v) {
    switch (type_of(v)) {
    case ValueType::point: return std::get<ExtPoint>(v);
    case ValueType::hpoint: return ExtPoint(std::get<HPoint>(v).z());
    case ValueType::kpoint: return ExtPoint(std::get<KPoint>(v).z());
    case ValueType::complex: return ExtPoint(std::get<Complex>(v));
    default: throw GeoError(std::string("expected a point, got ") + to_string(type_of(v)));
    }
}

inline Complex pt(const Value& v) {
    ExtPoint p = ext_point(v);
    if (p.is_infinite()) throw GeoError("point at infinity where a finite point is required");
    return p.value();
}

inline double real(const Value& v) { return std::get<double>(v); }
inline const HPoint& hp(const Value& v) { return std::get<HPoint>(v); }
inline const KPoint& kp(const Value& v) { return std::get<KPoint>(v); }
inline const SPoint& sp(const Value& v) { return std::get<SPoint>(v); }
inline const HLine& hl(const Value& v) { return std::get<HLine>(v); }
inline const Line& ln(const Value& v) { return std::get<Line>(v); }
inline const Circle& circ(const Value& v) { return std::get<Circle>(v); }

inline Cline cline(const Value& v) {
    switch (type_of(v)) {
    case ValueType::line: return Cline(std::get<Line>(v));
    case ValueType::circle: return Cline(std::get<Circle>(v));
    case ValueType::cline: return std::get<Cline>(v);
    case ValueType::hline: return std::get<HLine>(v).carrier;
    case ValueType::hcircle: return Cline(std::get<HCircle>(v).euclid);
    default: throw GeoError(std::string("expected a cline, got ") + to_string(type_of(v)));
    }
}

inline const Vec3& vec3(const Value& v) { return std::get<Vec3>(v); }

inline Triangle tri(Args a, std::size_t i = 0) { return {pt(a[i]), pt(a[i + 1]), pt(a[i + 2])}; }

inline InversionCircle inversion_circle(const Circle& c) { return InversionCircle(c.center, c.radius); }

inline Label yes_no(bool b) { return Label{b ? "true" : "false"}; }

} // namespace detail

inline const std::vector<OpSpec>& registry() {
    using T = ValueType;
    using namespace detail;
    const Param P{kPlanePoint};
    const Param ExtP{TypeSet{T::point, T::hpoint, T::kpoint, T::complex}};
    const Param R{{T::real}};
    const Param C{{T::complex}};
    const Param H{{T::hpoint}};
    const Param K{{T::kpoint}};
    const Param S{{T::spoint}};
    const Param L{{T::line}};
    const Param Ci{{T::circle}};
    const Param HL{{T::hline}};
    const Param HC{{T::hcircle}};
    const Param V3{{T::vector}};
    const Param AnyCline{{T::line, T::circle, T::cline, T::hline, T::hcircle}};

    static const std::vector<OpSpec> table = {
        // Euclidean points.
        {"point", "", {C}, T::point, [](Args a, auto&) { return Value(ExtPoint(std::get<Complex>(a[0]))); }},
        {"point", "midpoint", {P, P}, T::point,
         [](Args a, auto&) { return Value(ExtPoint(midpoint(pt(a[0]), pt(a[1])))); }},
        {"point", "foot", {P, L}, T::point,
         [](Args a, auto&) { return Value(ExtPoint(foot_point(pt(a[0]), ln(a[1])))); }},
        {"point", "reflect", {P, L}, T::point,
         [](Args a, auto&) { return Value(ExtPoint(reflect_line(pt(a[0]), ln(a[1])))); }},
        {"point", "meet", {L, L}, T::point,
         [](Args a, auto& tol) { return Value(ExtPoint(intersect(ln(a[0]), ln(a[1]), tol))); }},
        {"point", "circumcenter", {P, P, P}, T::point,
         [](Args a, auto& tol) { return Value(ExtPoint(circumcenter(tri(a), tol).first)); }},
        {"point", "centroid", {P, P, P}, T::point,
         [](Args a, auto& tol) { return Value(ExtPoint(centroid(tri(a), tol))); }},
        {"point", "orthocenter", {P, P, P}, T::point,
         [](Args a, auto& tol) { return Value(ExtPoint(orthocenter(tri(a), tol))); }},
        {"point", "incenter", {P, P, P}, T::point,
         [](Args a, auto& tol) { return Value(ExtPoint(incenter(tri(a), tol).first)); }},
        {"point", "bisector_foot", {P, P, P}, T::point,
         [](Args a, auto& tol) { return Value(ExtPoint(bisector_foot(tri(a), tol))); }},
        {"point", "project", {S}, T::point,
         [](Args a, auto& tol) { return Value(ExtPoint(central_project(sp(a[0]), tol))); }},
        {"point", "stereo", {S}, T::point, [](Args a, auto& tol) { return Value(sphere_to_plane(sp(a[0]), tol)); }},
        {"point", "moebius3", {ExtP, ExtP, ExtP, ExtP}, T::point,
         [](Args a, auto& tol) {
             Moebius m = from_three_points(ext_point(a[0]), ext_point(a[1]), ext_point(a[2]), tol);
             return Value(apply(m, ext_point(a[3])));
         }},

        // Points of the hyperbolic plane.
        {"hpoint", "", {C}, T::hpoint,
         [](Args a, auto& tol) { return Value(HPoint(std::get<Complex>(a[0]), tol)); }},
        {"hpoint", "midpoint", {H, H}, T::hpoint,
         [](Args a, auto& tol) { return Value(h_midpoint(hp(a[0]), hp(a[1]), tol)); }},
        {"hpoint", "foot", {HL, H}, T::hpoint,
         [](Args a, auto& tol) { return Value(h_foot(hl(a[0]), hp(a[1]), tol)); }},
        {"hpoint", "at", {H, H, R}, T::hpoint,
         [](Args a, auto& tol) { return Value(h_point_at(hp(a[0]), hp(a[1]), real(a[2]), tol)); }},
        {"hpoint", "meet", {HC, HL, R}, T::hpoint,
         [](Args a, auto& tol) {
             auto pts = intersect(std::get<HCircle>(a[0]), hl(a[1]), tol);
             double i = real(a[2]);
             if (i != 1.0 && i != 2.0) throw GeoError("meet: index must be 1 or 2");
             if (pts.size() < static_cast<std::size_t>(i)) throw GeoError("meet: no such intersection point");
             return Value(pts[static_cast<std::size_t>(i) - 1]);
         }},
        {"kpoint", "", {C}, T::kpoint,
         [](Args a, auto& tol) { return Value(KPoint(std::get<Complex>(a[0]), tol)); }},
        {"kpoint", "midpoint", {K, K}, T::kpoint,
         [](Args a, auto& tol) { return Value(klein_midpoint(kp(a[0]), kp(a[1]), tol)); }},
        {"spoint", "", {V3}, T::spoint, [](Args a, auto& tol) { return Value(SPoint(vec3(a[0]), tol)); }},
        {"spoint", "lift", {ExtP}, T::spoint,
         [](Args a, auto&) { return Value(stereographic_to_sphere(ext_point(a[0]))); }},
        {"spoint", "midpoint", {S, S}, T::spoint,
         [](Args a, auto&) { return Value(SPoint::normalized(sp(a[0]).v() + sp(a[1]).v())); }},

        // Lines, circles and clines.
        {"line", "", {P, P}, T::line,
         [](Args a, auto& tol) {
             Complex p = pt(a[0]), q = pt(a[1]);
             if (std::abs(p - q) <= tol.eps_eq * std::max(1.0, std::abs(p))) throw GeoError("line: coincident points");
             return Value(Line::through(p, q));
         }},
        {"line", "bisector", {P, P}, T::line,
         [](Args a, auto& tol) {
             Complex p = pt(a[0]), q = pt(a[1]);
             if (std::abs(p - q) <= tol.eps_eq * std::max(1.0, std::abs(p)))
                 throw GeoError("bisector: coincident points");
             return Value(perpendicular_bisector(p, q));
         }},
        {"circle", "", {P, R}, T::circle,
         [](Args a, auto&) {
             double r = real(a[1]);
             if (!(r > 0.0) || !std::isfinite(r)) throw GeoError("circle: radius must be positive");
             return Value(Circle{pt(a[0]), r});
         }},
        {"circle", "circum", {P, P, P}, T::circle,
         [](Args a, auto& tol) { return Value(circumcircle(tri(a), tol)); }},
        {"circle", "incircle", {P, P, P}, T::circle,
         [](Args a, auto& tol) {
             auto [c, r] = incenter(tri(a), tol);
             return Value(Circle{c, r});
         }},
        {"circle", "motion", {H}, T::circle,
         [](Args a, auto&) {
             auto g = move_to_center(hp(a[0]));
             if (!g) throw GeoError("motion: the point is already the center");
             return Value(Circle{g->center, g->radius});
         }},
        {"cline3", "", {ExtP, ExtP, ExtP}, T::cline,
         [](Args a, auto& tol) { return Value(cline_through(ext_point(a[0]), ext_point(a[1]), ext_point(a[2]), tol)); }},
        {"cline3", "perp", {Ci, P, P}, T::cline,
         [](Args a, auto& tol) {
             return Value(perpendicular_cline_through(inversion_circle(circ(a[0])), pt(a[1]), pt(a[2]), tol));
         }},
        {"cline3", "great", {V3}, T::cline,
         [](Args a, auto& tol) { return Value(great_circle_image(GreatCircle(vec3(a[0]), tol), tol)); }},
        {"invert", "", {Ci, Param{{T::point, T::hpoint, T::kpoint, T::complex, T::line, T::circle, T::cline, T::hline}}},
         T::cline,
         [](Args a, auto& tol) -> Value {
             InversionCircle w = inversion_circle(circ(a[0]));
             if (kPlanePoint.contains(type_of(a[1]))) return invert_point(w, ext_point(a[1]), tol);
             return invert_cline(w, cline(a[1]), tol);
         },
         [](std::span<const ValueType> t) { return kPlanePoint.contains(t[1]) ? T::point : T::cline; }},

        // Hyperbolic constructions.
        {"hline", "", {H, H}, T::hline,
         [](Args a, auto& tol) { return Value(h_line_through(hp(a[0]), hp(a[1]), tol)); }},
        {"hline", "ideal", {C, C}, T::hline,
         [](Args a, auto& tol) {
             Complex u = std::get<Complex>(a[0]), v = std::get<Complex>(a[1]);
             if (std::abs(u) == 0.0 || std::abs(v) == 0.0) throw GeoError("ideal: zero direction");
             return Value(h_line_from_ideal(u, v, tol));
         }},
        {"hline", "perp", {HL, H}, T::hline,
         [](Args a, auto& tol) { return Value(h_perpendicular_from(hl(a[0]), hp(a[1]), tol)); }},
        {"hline", "perp_at", {HL, H}, T::hline,
         [](Args a, auto& tol) { return Value(h_perpendicular_at(hl(a[0]), hp(a[1]), tol)); }},
        {"hline", "to_ideal", {H, C}, T::hline,
         [](Args a, auto& tol) {
             Complex u = std::get<Complex>(a[1]);
             if (std::abs(u) == 0.0) throw GeoError("to_ideal: zero direction");
             return Value(h_line_to_ideal(hp(a[0]), u, tol));
         }},
        {"hreflect", "", {HL, H}, T::hpoint,
         [](Args a, auto& tol) { return Value(h_reflect(hl(a[0]), hp(a[1]), tol)); }},
        {"hcircle", "", {H, R}, T::hcircle, [](Args a, auto&) { return Value(h_circle_realize(hp(a[0]), real(a[1]))); }},
        {"klein", "", {H}, T::kpoint, [](Args a, auto&) { return Value(poincare_to_klein(hp(a[0]))); }},
        {"poincare", "", {K}, T::hpoint, [](Args a, auto&) { return Value(klein_to_poincare(kp(a[0]))); }},
        {"bolyai", "", {HL, H}, T::bolyai,
         [](Args a, auto& tol) { return Value(BolyaiValue{bolyai_construct(hl(a[0]), hp(a[1]), tol), hl(a[0])}); }},

        // Measurements.
        {"measure", "dist", {P, P}, T::real, [](Args a, auto&) { return Value(std::abs(pt(a[0]) - pt(a[1]))); }},
        {"measure", "dist1", {P, P}, T::real,
         [](Args a, auto&) { return Value(plane_metric(Metric::d1, pt(a[0]), pt(a[1]))); }},
        {"measure", "distinf", {P, P}, T::real,
         [](Args a, auto&) { return Value(plane_metric(Metric::dinf, pt(a[0]), pt(a[1]))); }},
        {"measure", "angle", {P, P, P}, T::real,
         [](Args a, auto& tol) { return Value(signed_angle(pt(a[0]), pt(a[1]), pt(a[2]), tol).radians()); }},
        {"measure", "tangent_length", {P, P, P}, T::real,
         [](Args a, auto& tol) { return Value(tangent_length(tri(a), tol)); }},
        {"measure", "hdist", {H, H}, T::real, [](Args a, auto& tol) { return Value(h_dist(hp(a[0]), hp(a[1]), tol)); }},
        {"measure", "hdist_line", {HL, H}, T::real,
         [](Args a, auto& tol) { return Value(h_dist_to_line(hl(a[0]), hp(a[1]), tol)); }},
        {"measure", "hangle", {H, H, H}, T::real,
         [](Args a, auto& tol) { return Value(h_angle(hp(a[0]), hp(a[1]), hp(a[2]), tol).radians()); }},
        {"measure", "defect", {H, H, H}, T::real,
         [](Args a, auto& tol) { return Value(h_defect(hp(a[0]), hp(a[1]), hp(a[2]), tol)); }},
        {"measure", "kdist", {K, K}, T::real,
         [](Args a, auto& tol) { return Value(klein_dist(kp(a[0]), kp(a[1]), tol)); }},
        {"measure", "sdist", {S, S}, T::real, [](Args a, auto&) { return Value(s_dist(sp(a[0]), sp(a[1]))); }},
        {"measure", "excess", {S, S, S}, T::real,
         [](Args a, auto& tol) { return Value(s_excess(sp(a[0]), sp(a[1]), sp(a[2]), tol)); }},
        {"measure", "spyth", {S, S, S}, T::real,
         [](Args a, auto& tol) { return Value(s_pythagoras_residual(sp(a[0]), sp(a[1]), sp(a[2]), tol)); }},
        {"measure", "circumference", {R}, T::real, [](Args a, auto&) { return Value(h_circumference(real(a[0]))); }},
        {"measure", "parallelism", {R}, T::real,
         [](Args a, auto&) { return Value(angle_of_parallelism(real(a[0])).radians()); }},
        {"measure", "parallelism_distance", {R}, T::real,
         [](Args a, auto&) { return Value(parallelism_distance(real(a[0]))); }},
        {"measure", "conformal", {H}, T::real, [](Args a, auto&) { return Value(conformal_factor(hp(a[0]))); }},
        {"measure", "cross_ratio", {P, P, P, P}, T::real,
         [](Args a, auto& tol) { return Value(real_cross_ratio(pt(a[0]), pt(a[1]), pt(a[2]), pt(a[3]), tol)); }},
        {"measure", "ccross", {ExtP, ExtP, ExtP, ExtP}, T::complex,
         [](Args a, auto& tol) {
             return Value(complex_cross_ratio(ext_point(a[0]), ext_point(a[1]), ext_point(a[2]), ext_point(a[3]), tol));
         }},
        {"measure", "ptolemy", {P, P, P, P}, T::real,
         [](Args a, auto&) { return Value(ptolemy_residual(pt(a[0]), pt(a[1]), pt(a[2]), pt(a[3]))); }},
        {"measure", "inscribed", {P, P, P, P}, T::label,
         [](Args a, auto& tol) { return Value(yes_no(inscribed_check(pt(a[0]), pt(a[1]), pt(a[2]), pt(a[3]), tol))); }},
        {"measure", "congruent", {P, P, P, P, P, P}, T::label,
         [](Args a, auto& tol) { return Value(yes_no(congruent(tri(a, 0), tri(a, 3), tol))); }},
        {"measure", "classify", {AnyCline}, T::label,
         [](Args a, auto& tol) { return Value(Label{to_string(classify_cycle(cline(a[0]), tol))}); }},
        {"measure", "tangency", {Ci, Ci}, T::label,
         [](Args a, auto& tol) { return Value(Label{to_string(tangency_classify(circ(a[0]), circ(a[1]), tol))}); }},
        {"measure", "perpendicular", {AnyCline, AnyCline}, T::label,
         [](Args a, auto& tol) { return Value(yes_no(clines_perpendicular(cline(a[0]), cline(a[1]), tol))); }},
        {"measure", "ideal_gap", {HL, HL}, T::real, [](Args a, auto&) { return Value(shared_ideal_gap(hl(a[0]), hl(a[1]))); }},
        {"measure", "radius", {Param{{T::circle, T::cline, T::hcircle}}}, T::real,
         [](Args a, auto&) {
             Cline c = cline(a[0]);
             if (c.is_line()) throw GeoError("radius: the cline is a line");
             return Value(c.circle().radius);
         }},
        {"measure", "hradius", {HC}, T::real, [](Args a, auto&) { return Value(std::get<HCircle>(a[0]).hradius); }},
    };
    return table;
}

inline bool is_kind(std::string_view word) {
    for (const auto& e : registry())
        if (e.kind == word) return true;
    return false;
}

inline bool is_measure_op(std::string_view word) {
    for (const auto& e : registry())
        if (e.kind == "measure" && e.op == word) return true;
    return false;
}

inline const OpSpec* find_op(std::string_view kind, std::string_view op) {
    for (const auto& e : registry())
        if (e.kind == kind && e.op == op) return &e;
    return nullptr;
}

inline bool has_sub_op(std::string_view kind, std::string_view op) {
    return !op.empty() && find_op(kind, op) != nullptr;
}

} // namespace geo::script
