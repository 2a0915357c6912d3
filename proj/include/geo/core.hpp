#pragma once

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <istream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

namespace geo {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Raised for every geometric precondition failure (degenerate input, point
// outside the disk, ...). The message is what geo_script reports verbatim.
class GeoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Tolerances {
    double eps_eq = 1e-12;         // coordinate equality
    double eps_assert = 1e-9;      // derived-measure assertions
    double eps_degenerate = 1e-12; // collinearity / coincidence discriminants

    bool valid() const {
        return eps_eq > 0 && eps_assert > 0 && eps_degenerate > 0 &&
               eps_degenerate <= eps_eq && eps_eq <= eps_assert;
    }

    // Sets one field by name; returns false for an unknown key.
    bool set(const std::string& key, double value) {
        if (key == "eps_eq") eps_eq = value;
        else if (key == "eps_assert") eps_assert = value;
        else if (key == "eps_degenerate") eps_degenerate = value;
        else return false;
        return true;
    }
};

/// Reads a plain-text `key=value` tolerance file. Blank lines and lines
/// starting with '#' are skipped. Throws std::invalid_argument on malformed
/// lines, unknown keys, or a resulting set that violates
/// eps_degenerate <= eps_eq <= eps_assert.
inline Tolerances parse_tolerances(std::istream& in, Tolerances base = {}) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": expected key=value");
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        double v = 0;
        try {
            std::size_t used = 0;
            v = std::stod(val, &used);
            if (used != val.size()) throw std::invalid_argument(val);
        } catch (const std::exception&) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": bad number '" + val + "'");
        }
        if (!base.set(key, v))
            throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    if (!base.valid())
        throw std::invalid_argument("tolerances must be positive with eps_degenerate <= eps_eq <= eps_assert");
    return base;
}

/// An angle value modulo 2pi, stored in (-pi, pi]. The straight angle is
/// represented by +pi.
class AngleValue {
public:
    constexpr AngleValue() = default;

    double radians() const { return rad_; }

    friend AngleValue normalize_angle(double x);

    AngleValue operator-() const;
    friend AngleValue operator+(AngleValue a, AngleValue b);
    friend AngleValue operator-(AngleValue a, AngleValue b);

private:
    explicit constexpr AngleValue(double r) : rad_(r) {}
    double rad_ = 0.0;
};

inline AngleValue normalize_angle(double x) {
    if (!std::isfinite(x)) throw GeoError("normalize_angle: non-finite input");
    double r = std::remainder(x, kTwoPi);
    // remainder() may land a few ulps above -pi when x is an odd multiple of
    // pi; those values are the straight angle and get the +pi representative.
    double slack = 4.0 * DBL_EPSILON * std::max(1.0, std::abs(x));
    if (r <= -kPi + slack) r += kTwoPi;
    if (r > kPi) r = kPi;
    return AngleValue(r);
}

inline AngleValue AngleValue::operator-() const { return normalize_angle(-rad_); }
inline AngleValue operator+(AngleValue a, AngleValue b) { return normalize_angle(a.rad_ + b.rad_); }
inline AngleValue operator-(AngleValue a, AngleValue b) { return normalize_angle(a.rad_ - b.rad_); }

/// True when a and b agree modulo 2pi within eps.
inline bool angles_close(AngleValue a, AngleValue b, double eps) {
    return std::abs((a - b).radians()) <= eps;
}

inline bool angle_double_is_zero(AngleValue a, const Tolerances& tol = {}) {
    return std::abs(normalize_angle(2.0 * a.radians()).radians()) <= tol.eps_assert;
}

enum class Metric { d1, d2, dinf };

inline double plane_metric(Metric kind, Complex a, Complex b) {
    double dx = std::abs(a.real() - b.real());
    double dy = std::abs(a.imag() - b.imag());
    switch (kind) {
    case Metric::d1: return dx + dy;
    case Metric::d2: return std::hypot(dx, dy);
    case Metric::dinf: return std::max(dx, dy);
    }
    return 0.0;
}

/// Diameter of the axis-aligned bounding box of the given points. Used to
/// make tolerance bands translation and scale aware.
inline double scale_of(std::initializer_list<Complex> pts) {
    if (pts.size() == 0) return 0.0;
    double xmin = pts.begin()->real(), xmax = xmin;
    double ymin = pts.begin()->imag(), ymax = ymin;
    for (const auto& p : pts) {
        xmin = std::min(xmin, p.real());
        xmax = std::max(xmax, p.real());
        ymin = std::min(ymin, p.imag());
        ymax = std::max(ymax, p.imag());
    }
    return std::hypot(xmax - xmin, ymax - ymin);
}

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

inline Complex unit(double theta) { return std::polar(1.0, theta); }

} // namespace geo
