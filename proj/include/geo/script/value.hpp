#pragma once

#include <charconv>
#include <cstdio>
#include <string>
#include <variant>

#include "geo/klein.hpp"
#include "geo/spherical.hpp"

namespace geo::script {

struct Label {
    std::string text;
    friend bool operator==(const Label&, const Label&) = default;
};

// Everything bolyai_construct produces, plus the line it started from.
struct BolyaiValue {
    BolyaiResult result;
    HLine line;
};

// Alternative order matches ValueType.
using Value = std::variant<double, Complex, ExtPoint, HPoint, KPoint, SPoint, Line, Circle, Cline, HLine,
                           HCircle, BolyaiValue, Label, Vec3>;

enum class ValueType { real, complex, point, hpoint, kpoint, spoint, line, circle, cline, hline, hcircle, bolyai, label, vector };

inline constexpr int kValueTypeCount = 14;

inline ValueType type_of(const Value& v) { return static_cast<ValueType>(v.index()); }

inline const char* to_string(ValueType t) {
    switch (t) {
    case ValueType::real: return "real";
    case ValueType::complex: return "complex";
    case ValueType::point: return "point";
    case ValueType::hpoint: return "hpoint";
    case ValueType::kpoint: return "kpoint";
    case ValueType::spoint: return "spoint";
    case ValueType::line: return "line";
    case ValueType::circle: return "circle";
    case ValueType::cline: return "cline";
    case ValueType::hline: return "hline";
    case ValueType::hcircle: return "hcircle";
    case ValueType::bolyai: return "bolyai";
    case ValueType::label: return "label";
    case ValueType::vector: return "vector";
    }
    return "?";
}

/// A set of value types, used for operation parameters.
class TypeSet {
public:
    constexpr TypeSet() = default;
    constexpr TypeSet(std::initializer_list<ValueType> ts) {
        for (ValueType t : ts) bits_ |= 1u << static_cast<unsigned>(t);
    }
    constexpr bool contains(ValueType t) const { return bits_ & (1u << static_cast<unsigned>(t)); }
    constexpr bool empty() const { return bits_ == 0; }

    std::string describe() const {
        std::string out;
        for (int i = 0; i < kValueTypeCount; ++i) {
            if (!contains(static_cast<ValueType>(i))) continue;
            if (!out.empty()) out += " or ";
            out += to_string(static_cast<ValueType>(i));
        }
        return out;
    }

private:
    unsigned bits_ = 0;
};

// Types that stand for a single finite or infinite point of the plane.
inline constexpr TypeSet kPlanePoint{ValueType::point, ValueType::hpoint, ValueType::kpoint, ValueType::complex};

// Shortest text that reads back as the same double.
inline std::string format_real(double x) {
    char buf[32];
    auto r = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, r.ptr);
}

inline std::string format_complex(Complex z) {
    return "(" + format_real(z.real()) + ", " + format_real(z.imag()) + ")";
}

inline std::string format_value(const Value& v) {
    struct Visitor {
        std::string operator()(double x) const { return format_real(x); }
        std::string operator()(Complex z) const { return format_complex(z); }
        std::string operator()(const ExtPoint& p) const { return p.is_infinite() ? "inf" : format_complex(p.value()); }
        std::string operator()(const HPoint& p) const { return format_complex(p.z()); }
        std::string operator()(const KPoint& p) const { return format_complex(p.z()); }
        std::string operator()(const SPoint& p) const { return (*this)(p.v()); }
        std::string operator()(const Vec3& v) const {
            return "(" + format_real(v.x) + ", " + format_real(v.y) + ", " + format_real(v.z) + ")";
        }
        std::string operator()(const Line& l) const {
            return "line through " + format_complex(l.anchor) + " direction " + format_complex(l.direction);
        }
        std::string operator()(const Circle& c) const {
            return "circle center " + format_complex(c.center) + " radius " + format_real(c.radius);
        }
        std::string operator()(const Cline& c) const {
            return c.is_line() ? (*this)(c.line()) : (*this)(c.circle());
        }
        std::string operator()(const HLine& l) const {
            return "hline ideal " + format_complex(l.ideal_a) + " " + format_complex(l.ideal_b);
        }
        std::string operator()(const HCircle& c) const {
            return "hcircle center " + format_complex(c.hcenter.z()) + " hradius " + format_real(c.hradius) +
                   " euclid " + (*this)(c.euclid);
        }
        std::string operator()(const BolyaiValue& b) const {
            return "bolyai q " + format_complex(b.result.q.z()) + " r " + format_complex(b.result.r.z()) +
                   " qr " + format_real(b.result.qr_h()) + " pt " + format_real(b.result.pt_h(0));
        }
        std::string operator()(const Label& l) const { return "\"" + l.text + "\""; }
    };
    return std::visit(Visitor{}, v);
}

/// Members reachable as NAME.member on a bolyai binding.
struct BolyaiMember {
    const char* name;
    ValueType type;
};

inline constexpr BolyaiMember kBolyaiMembers[] = {
    {"p", ValueType::hpoint},  {"q", ValueType::hpoint},    {"r", ValueType::hpoint},
    {"t1", ValueType::hpoint}, {"t2", ValueType::hpoint},   {"m", ValueType::hline},
    {"n", ValueType::hline},   {"k", ValueType::hline},     {"par1", ValueType::hline},
    {"par2", ValueType::hline}, {"qr", ValueType::real},    {"pt1", ValueType::real},
    {"pt2", ValueType::real},  {"gap1", ValueType::real},   {"gap2", ValueType::real},
};

inline const BolyaiMember* find_bolyai_member(std::string_view name) {
    for (const auto& m : kBolyaiMembers)
        if (name == m.name) return &m;
    return nullptr;
}

inline Value bolyai_member(const BolyaiValue& b, std::string_view name) {
    const BolyaiResult& r = b.result;
    if (name == "p") return r.p;
    if (name == "q") return r.q;
    if (name == "r") return r.r;
    if (name == "t1") return r.t[0];
    if (name == "t2") return r.t[1];
    if (name == "m") return r.m;
    if (name == "n") return r.n;
    if (name == "k") return r.k;
    if (name == "par1") return r.parallels[0];
    if (name == "par2") return r.parallels[1];
    if (name == "qr") return r.qr_h();
    if (name == "pt1") return r.pt_h(0);
    if (name == "pt2") return r.pt_h(1);
    if (name == "gap1") return shared_ideal_gap(r.parallels[0], b.line);
    if (name == "gap2") return shared_ideal_gap(r.parallels[1], b.line);
    throw GeoError("bolyai has no member '" + std::string(name) + "'");
}

} // namespace geo::script
