#pragma once

#include "json.hpp"

#include "geo/script/evaluator.hpp"

namespace geo::script {

inline std::string text_report(const std::string& file, const EvalReport& report) {
    std::string out;
    for (const auto& r : report.results) {
        out += file + ":" + std::to_string(r.line) + ": " + to_string(r.status) + ": " + r.source;
        if (r.value) out += " -> " + format_value(*r.value);
        if (r.delta) out += " (delta " + format_real(*r.delta) + ")";
        if (!r.message.empty()) out += ": " + r.message;
        out += "\n";
    }
    out += "summary: " + std::to_string(report.results.size()) + " statements, " +
           std::to_string(report.count(StatementResult::Status::pass)) + " passed, " +
           std::to_string(report.count(StatementResult::Status::fail)) + " failed, " +
           std::to_string(report.count(StatementResult::Status::error)) + " errors\n";
    return out;
}

inline std::string text_diagnostics(const std::string& file, const std::vector<Diagnostic>& errors) {
    std::string out;
    for (const auto& d : errors) out += file + ":" + d.str() + "\n";
    return out;
}

inline nlohmann::json to_json(const Value& v) {
    auto cplx = [](Complex z) { return nlohmann::json::array({z.real(), z.imag()}); };
    nlohmann::json j;
    j["type"] = to_string(type_of(v));
    struct Visitor {
        nlohmann::json& j;
        decltype(cplx)& c;
        void operator()(double x) { j["value"] = x; }
        void operator()(Complex z) { j["value"] = c(z); }
        void operator()(const ExtPoint& p) {
            if (p.is_infinite()) j["value"] = "inf";
            else j["value"] = c(p.value());
        }
        void operator()(const HPoint& p) { j["value"] = c(p.z()); }
        void operator()(const KPoint& p) { j["value"] = c(p.z()); }
        void operator()(const SPoint& p) { (*this)(p.v()); }
        void operator()(const Vec3& v) { j["value"] = {v.x, v.y, v.z}; }
        void operator()(const Line& l) {
            j["anchor"] = c(l.anchor);
            j["direction"] = c(l.direction);
        }
        void operator()(const Circle& k) {
            j["center"] = c(k.center);
            j["radius"] = k.radius;
        }
        void operator()(const Cline& k) {
            if (k.is_line()) (*this)(k.line());
            else (*this)(k.circle());
            j["shape"] = k.is_line() ? "line" : "circle";
        }
        void operator()(const HLine& l) { j["ideal"] = {c(l.ideal_a), c(l.ideal_b)}; }
        void operator()(const HCircle& k) {
            j["hcenter"] = c(k.hcenter.z());
            j["hradius"] = k.hradius;
            j["center"] = c(k.euclid.center);
            j["radius"] = k.euclid.radius;
        }
        void operator()(const BolyaiValue& b) {
            j["q"] = c(b.result.q.z());
            j["r"] = c(b.result.r.z());
            j["t"] = {c(b.result.t[0].z()), c(b.result.t[1].z())};
            j["qr"] = b.result.qr_h();
            j["pt"] = {b.result.pt_h(0), b.result.pt_h(1)};
        }
        void operator()(const Label& l) { j["value"] = l.text; }
    };
    std::visit(Visitor{j, cplx}, v);
    return j;
}

inline nlohmann::json json_report(const std::string& file, const EvalReport& report) {
    nlohmann::json j;
    j["file"] = file;
    j["statements"] = nlohmann::json::array();
    for (const auto& r : report.results) {
        nlohmann::json s;
        s["line"] = r.line;
        s["source"] = r.source;
        s["status"] = to_string(r.status);
        if (!r.name.empty()) s["name"] = r.name;
        if (r.value) s["value"] = to_json(*r.value);
        if (r.delta) {
            s["delta"] = *r.delta;
            s["lhs"] = r.observed_lhs;
            s["rhs"] = r.observed_rhs;
        }
        if (!r.message.empty()) s["message"] = r.message;
        j["statements"].push_back(std::move(s));
    }
    j["summary"] = {{"statements", report.results.size()},
                    {"passed", report.count(StatementResult::Status::pass)},
                    {"failed", report.count(StatementResult::Status::fail)},
                    {"errors", report.count(StatementResult::Status::error)}};
    j["exit_code"] = report.exit_code();
    return j;
}

inline nlohmann::json json_diagnostics(const std::string& file, const std::vector<Diagnostic>& errors) {
    nlohmann::json j;
    j["file"] = file;
    j["errors"] = nlohmann::json::array();
    for (const auto& d : errors)
        j["errors"].push_back({{"line", d.loc.line}, {"column", d.loc.column}, {"message", d.message}});
    j["exit_code"] = static_cast<int>(kExitParse);
    return j;
}

} // namespace geo::script
