#pragma once

#include "geo/script/evaluator.hpp"

namespace geo::script {

namespace detail {

inline std::string fixed6(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    std::string s = buf;
    if (s == "-0.000000") s = "0.000000";
    return s;
}

inline std::string xy(Complex z) { return fixed6(z.real()) + " " + fixed6(z.imag()); }

inline std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

constexpr double kViewHalf = 1.1;

class SvgWriter {
public:
    explicit SvgWriter(bool klein) : klein_(klein) {}

    void absolute() {
        out_ += "<path class=\"absolute\" d=\"M 1.000000 0.000000 A 1.000000 1.000000 0 1 1 -1.000000 0.000000 "
                "A 1.000000 1.000000 0 1 1 1.000000 0.000000 Z\"/>\n";
    }

    void draw(const std::string& id, const Value& v) {
        switch (type_of(v)) {
        case ValueType::point: {
            const auto& p = std::get<ExtPoint>(v);
            if (p.is_finite()) dot(id, p.value());
            break;
        }
        case ValueType::hpoint: {
            const auto& p = std::get<HPoint>(v);
            dot(id, klein_ ? poincare_to_klein(p).z() : p.z());
            break;
        }
        case ValueType::kpoint: {
            const auto& k = std::get<KPoint>(v);
            dot(id, klein_ ? k.z() : klein_to_poincare(k).z());
            break;
        }
        case ValueType::line: line(id, "line", std::get<Line>(v), ""); break;
        case ValueType::circle: cycle(id, Cline(std::get<Circle>(v)), "circle"); break;
        case ValueType::cline: cycle(id, std::get<Cline>(v), "cline"); break;
        case ValueType::hline: hline(id, std::get<HLine>(v)); break;
        case ValueType::hcircle:
            // Klein pictures show points and chords only.
            if (!klein_) circle(id, "hcircle", std::get<HCircle>(v).euclid, "");
            break;
        case ValueType::bolyai: {
            const auto& b = std::get<BolyaiValue>(v).result;
            hline(id + ".par1", b.parallels[0]);
            hline(id + ".par2", b.parallels[1]);
            for (const char* m : {"p", "q", "r", "t1", "t2"}) draw(id + "." + m, bolyai_member(std::get<BolyaiValue>(v), m));
            break;
        }
        default: throw GeoError("'" + id + "' cannot be rendered");
        }
    }

    const std::string& body() const { return out_; }

private:
    static std::string attrs(const std::string& cls, const std::string& id) {
        return "class=\"" + cls + "\" id=\"" + xml_escape(id) + "\"";
    }

    void dot(const std::string& id, Complex z) {
        out_ += "<circle " + attrs("point", id) + " cx=\"" + fixed6(z.real()) + "\" cy=\"" + fixed6(z.imag()) +
                "\" r=\"0.012000\" fill=\"black\" stroke=\"none\"/>\n";
    }

    void circle(const std::string& id, const std::string& cls, const Circle& c, const std::string& extra) {
        out_ += "<circle " + attrs(cls, id) + " cx=\"" + fixed6(c.center.real()) + "\" cy=\"" +
                fixed6(c.center.imag()) + "\" r=\"" + fixed6(c.radius) + "\"" + extra + "/>\n";
    }

    void segment(const std::string& id, const std::string& cls, Complex a, Complex b, const std::string& extra) {
        out_ += "<path " + attrs(cls, id) + " d=\"M " + xy(a) + " L " + xy(b) + "\"" + extra + "/>\n";
    }

    // The part of a Euclidean line inside the view box.
    void line(const std::string& id, const std::string& cls, const Line& l, const std::string& extra) {
        double lo = -1e300, hi = 1e300;
        const double p[2] = {l.anchor.real(), l.anchor.imag()};
        const double d[2] = {l.direction.real(), l.direction.imag()};
        for (int i = 0; i < 2; ++i) {
            if (std::abs(d[i]) < 1e-300) {
                if (std::abs(p[i]) > kViewHalf) return;
                continue;
            }
            double t1 = (-kViewHalf - p[i]) / d[i], t2 = (kViewHalf - p[i]) / d[i];
            lo = std::max(lo, std::min(t1, t2));
            hi = std::min(hi, std::max(t1, t2));
        }
        if (!(lo < hi)) return;
        segment(id, cls, l.at(lo), l.at(hi), extra);
    }

    static std::string cycle_style(CycleKind k) {
        switch (k) {
        case CycleKind::horocycle: return " stroke-dasharray=\"0.030000 0.015000\"";
        case CycleKind::equidistant: return " stroke-dasharray=\"0.008000 0.012000\"";
        case CycleKind::outside: return " stroke=\"gray\"";
        default: return "";
        }
    }

    void cycle(const std::string& id, const Cline& c, const std::string& cls) {
        CycleKind k = classify_cycle(c);
        std::string full = cls + " " + to_string(k);
        if (c.is_line()) line(id, full, c.line(), cycle_style(k));
        else circle(id, full, c.circle(), cycle_style(k));
    }

    void hline(const std::string& id, const HLine& l) {
        Complex a = l.ideal_a, b = l.ideal_b;
        if (klein_ || l.carrier.is_line()) {
            segment(id, "hline", a, b, "");
            return;
        }
        const Circle& c = l.carrier.circle();
        // The arc inside the disk is the minor arc of the carrier.
        int sweep = ((std::conj(a - c.center) * (b - c.center)).imag() > 0) ? 1 : 0;
        out_ += "<path " + attrs("hline", id) + " d=\"M " + xy(a) + " A " + fixed6(c.radius) + " " + fixed6(c.radius) +
                " 0 0 " + std::to_string(sweep) + " " + xy(b) + "\"/>\n";
    }

    bool klein_;
    std::string out_;
};

} // namespace detail

/// SVG picture of the selected bindings of a report. Model units with the
/// y axis pointing up; coordinates carry six decimals so output is stable
/// across runs.
inline std::string render_svg(const EvalReport& report, const RenderJob& job) {
    detail::SvgWriter w(job.model == "klein");
    w.absolute();
    for (const auto& name : job.names) {
        auto v = report.lookup(name);
        if (!v) throw GeoError("unknown selection name '" + name + "'");
        w.draw(name, *v);
    }
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(job.width) +
                      "\" height=\"" + std::to_string(job.width) +
                      "\" viewBox=\"-1.1 -1.1 2.2 2.2\">\n"
                      "<g transform=\"scale(1,-1)\" fill=\"none\" stroke=\"black\" stroke-width=\"0.006\">\n";
    out += w.body();
    out += "</g>\n</svg>\n";
    return out;
}

inline std::string render_svg(const EvalReport& report, const std::vector<std::string>& names,
                              const std::string& model = "poincare", int width = 512) {
    RenderJob job;
    job.names = names;
    job.model = model;
    job.width = width;
    return render_svg(report, job);
}

} // namespace geo::script
