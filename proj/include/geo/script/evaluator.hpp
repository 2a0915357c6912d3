#pragma once

#include <map>
#include <set>

#include "geo/script/parser.hpp"

namespace geo::script {

struct StatementResult {
    enum class Status { ok, pass, fail, error };

    int line = 0;
    std::string source; // canonical text of the statement
    Status status = Status::ok;
    std::string name;   // binding name, empty for other statements
    std::optional<Value> value;
    std::optional<double> delta;        // assertions
    std::string observed_lhs, observed_rhs;
    std::string message;
};

inline const char* to_string(StatementResult::Status s) {
    switch (s) {
    case StatementResult::Status::ok: return "ok";
    case StatementResult::Status::pass: return "pass";
    case StatementResult::Status::fail: return "fail";
    case StatementResult::Status::error: return "error";
    }
    return "?";
}

struct RenderJob {
    int line = 0;
    std::string path;
    int width = 512;
    std::string model = "poincare";
    std::vector<std::string> names; // resolved selection, in drawing order
};

enum ExitCode { kExitOk = 0, kExitParse = 1, kExitAssertion = 2, kExitGeometric = 3 };

struct EvalReport {
    std::vector<StatementResult> results;
    std::vector<std::pair<std::string, Value>> bindings; // successful bindings in order
    std::vector<RenderJob> renders;
    Tolerances final_tolerances;

    int count(StatementResult::Status s) const {
        int n = 0;
        for (const auto& r : results) n += r.status == s;
        return n;
    }

    int exit_code() const {
        if (count(StatementResult::Status::error) > 0) return kExitGeometric;
        if (count(StatementResult::Status::fail) > 0) return kExitAssertion;
        return kExitOk;
    }

    /// A binding or bolyai member by name; null when absent.
    std::optional<Value> lookup(std::string_view name) const {
        std::string_view base = name, member;
        if (auto dot = name.find('.'); dot != std::string_view::npos) {
            base = name.substr(0, dot);
            member = name.substr(dot + 1);
        }
        for (const auto& [n, v] : bindings) {
            if (n != base) continue;
            if (member.empty()) return v;
            return bolyai_member(std::get<BolyaiValue>(v), member);
        }
        return std::nullopt;
    }
};

namespace detail {

using Scalar = std::variant<Complex, Label>;

inline bool is_real(Complex z) { return z.imag() == 0.0; }

class Evaluator {
public:
    explicit Evaluator(const Tolerances& base) : tol_(base) {}

    EvalReport run(const Script& script) {
        EvalReport report;
        for (const auto& s : script.statements) {
            StatementResult r;
            r.line = s.loc.line;
            r.source = print(s);
            try {
                std::visit([&](const auto& body) { exec(body, r, report); }, s.body);
            } catch (const GeoError& e) {
                r.status = StatementResult::Status::error;
                r.message = e.what();
            } catch (const std::bad_variant_access&) {
                r.status = StatementResult::Status::error;
                r.message = "value has the wrong type";
            }
            if (r.status == StatementResult::Status::error && !r.name.empty()) failed_.insert(r.name);
            report.results.push_back(std::move(r));
        }
        report.bindings = std::move(bindings_);
        report.final_tolerances = tol_;
        return report;
    }

private:
    static std::string base_name(const std::string& name) { return name.substr(0, name.find('.')); }

    void require_available(const std::string& name) const {
        if (failed_.count(base_name(name))) throw GeoError("depends on failed binding '" + base_name(name) + "'");
    }

    Value lookup(const std::string& name) const {
        require_available(name);
        std::string base = base_name(name);
        auto it = env_.find(base);
        if (it == env_.end()) throw GeoError("unresolved name '" + base + "'");
        const Value& v = bindings_[it->second].second;
        if (base.size() == name.size()) return v;
        return bolyai_member(std::get<BolyaiValue>(v), std::string_view(name).substr(base.size() + 1));
    }

    Value arg_value(const Arg& a) const {
        switch (a.kind) {
        case Arg::Kind::name: return lookup(a.text);
        case Arg::Kind::number: return a.values[0];
        case Arg::Kind::infinity: return ExtPoint::infinity();
        case Arg::Kind::tuple:
            if (a.values.size() == 2) return Complex(a.values[0], a.values[1]);
            return Vec3{a.values[0], a.values[1], a.values[2]};
        }
        throw GeoError("bad argument");
    }

    void exec(const Binding& b, StatementResult& r, EvalReport&) {
        r.name = b.name;
        const OpSpec* spec = find_op(b.kind, b.op);
        if (!spec) throw GeoError("unknown operation");
        std::vector<Value> args;
        for (const auto& a : b.args) args.push_back(arg_value(a));
        Value v = spec->eval(args, tol_);
        env_[b.name] = bindings_.size();
        bindings_.emplace_back(b.name, v);
        r.value = std::move(v);
    }

    void exec(const Assertion& a, StatementResult& r, EvalReport&) {
        Scalar lhs = eval(a.lhs), rhs = eval(a.rhs);
        r.observed_lhs = show(lhs);
        r.observed_rhs = show(rhs);
        bool pass;
        if (std::holds_alternative<Label>(lhs) || std::holds_alternative<Label>(rhs)) {
            pass = lhs == rhs;
            r.delta = pass ? 0.0 : 1.0;
        } else {
            r.delta = std::abs(std::get<Complex>(lhs) - std::get<Complex>(rhs));
            pass = *r.delta <= a.tol;
        }
        r.status = pass ? StatementResult::Status::pass : StatementResult::Status::fail;
        if (!pass) r.message = r.observed_lhs + " != " + r.observed_rhs + " (tol " + a.tol_text + ")";
    }

    void exec(const RenderDirective& d, StatementResult& r, EvalReport& report) {
        RenderJob job;
        job.line = r.line;
        job.path = d.path;
        job.width = d.width.value_or(512);
        job.model = model_;
        if (d.names.empty()) {
            for (const auto& [n, v] : bindings_)
                if (renderable(type_of(v))) job.names.push_back(n);
        } else {
            for (const auto& n : d.names) {
                lookup(n);
                job.names.push_back(n);
            }
        }
        report.renders.push_back(std::move(job));
    }

    void exec(const TolDirective& d, StatementResult&, EvalReport&) {
        Tolerances next = tol_;
        next.set(d.key, d.value);
        if (!next.valid())
            throw GeoError("tolerances must satisfy eps_degenerate <= eps_eq <= eps_assert");
        tol_ = next;
    }

    void exec(const ModelDirective& d, StatementResult&, EvalReport&) { model_ = d.model; }

    static std::string show(const Scalar& s) {
        if (auto l = std::get_if<Label>(&s)) return quote(l->text);
        Complex z = std::get<Complex>(s);
        return is_real(z) ? format_real(z.real()) : format_complex(z);
    }

    Scalar eval(const Expr& e) const {
        switch (e.kind) {
        case Expr::Kind::number: return Complex(e.number);
        case Expr::Kind::string: return Label{e.text};
        case Expr::Kind::name: return name_value(e.text);
        case Expr::Kind::tuple: {
            Complex x = number(e.children[0]), y = number(e.children[1]);
            if (!is_real(x) || !is_real(y)) throw GeoError("tuple components must be real");
            return Complex(x.real(), y.real());
        }
        case Expr::Kind::unary: {
            // 0 - x rather than -x: a real operand keeps a +0 imaginary part,
            // so sqrt(-4) is 2i and not -2i.
            Complex x = number(e.children[0]);
            return finite(Complex(-x.real(), 0.0 - x.imag()));
        }
        case Expr::Kind::binary: return finite(binary(e.text[0], number(e.children[0]), number(e.children[1])));
        case Expr::Kind::call: return finite(call(e));
        }
        throw GeoError("bad expression");
    }

    Complex number(const Expr& e) const { return std::get<Complex>(eval(e)); }

    static Complex finite(Complex z) {
        if (!geo::is_finite(z)) throw GeoError("expression value is not finite");
        return z;
    }

    Scalar name_value(const std::string& name) const {
        if (name == "pi") return Complex(kPi);
        Value v = lookup(name);
        switch (type_of(v)) {
        case ValueType::real: return Complex(std::get<double>(v));
        case ValueType::complex: return std::get<Complex>(v);
        case ValueType::point: return std::get<ExtPoint>(v).value();
        case ValueType::hpoint: return std::get<HPoint>(v).z();
        case ValueType::kpoint: return std::get<KPoint>(v).z();
        case ValueType::label: return std::get<Label>(v);
        default: throw GeoError("'" + name + "' cannot be used in an expression");
        }
    }

    static Complex binary(char op, Complex a, Complex b) {
        switch (op) {
        case '+': return a + b;
        case '-': return a - b;
        case '*': return is_real(a) && is_real(b) ? Complex(a.real() * b.real()) : a * b;
        case '/':
            if (b == Complex(0.0)) throw GeoError("division by zero");
            return is_real(a) && is_real(b) ? Complex(a.real() / b.real()) : a / b;
        case '^':
            if (is_real(a) && is_real(b) && (a.real() >= 0.0 || b.real() == std::floor(b.real())))
                return std::pow(a.real(), b.real());
            return std::pow(a, b);
        }
        throw GeoError("bad operator");
    }

    Complex call(const Expr& e) const {
        const std::string& f = e.text;
        Complex z = number(e.children[0]);
        if (f == "atan2") {
            Complex x = number(e.children[1]);
            if (!is_real(z) || !is_real(x)) throw GeoError("atan2 needs real arguments");
            return std::atan2(z.real(), x.real());
        }
        if (f == "abs") return std::abs(z);
        if (f == "re") return z.real();
        if (f == "im") return z.imag();
        if (f == "arg") return std::arg(z);
        if (f == "conj") return std::conj(z);
        double x = z.real();
        bool r = is_real(z);
        if (f == "ln") return r && x > 0 ? Complex(std::log(x)) : std::log(z);
        if (f == "exp") return r ? Complex(std::exp(x)) : std::exp(z);
        if (f == "sqrt") return r && x >= 0 ? Complex(std::sqrt(x)) : std::sqrt(z);
        if (f == "sin") return r ? Complex(std::sin(x)) : std::sin(z);
        if (f == "cos") return r ? Complex(std::cos(x)) : std::cos(z);
        if (f == "tan") return r ? Complex(std::tan(x)) : std::tan(z);
        if (f == "asin") return r && std::abs(x) <= 1 ? Complex(std::asin(x)) : std::asin(z);
        if (f == "acos") return r && std::abs(x) <= 1 ? Complex(std::acos(x)) : std::acos(z);
        if (f == "atan") return r ? Complex(std::atan(x)) : std::atan(z);
        if (f == "sinh") return r ? Complex(std::sinh(x)) : std::sinh(z);
        if (f == "cosh") return r ? Complex(std::cosh(x)) : std::cosh(z);
        if (f == "tanh") return r ? Complex(std::tanh(x)) : std::tanh(z);
        if (f == "asinh") return r ? Complex(std::asinh(x)) : std::asinh(z);
        if (f == "acosh") return r && x >= 1 ? Complex(std::acosh(x)) : std::acosh(z);
        if (f == "atanh") return r && std::abs(x) < 1 ? Complex(std::atanh(x)) : std::atanh(z);
        throw GeoError("unknown function '" + f + "'");
    }

    Tolerances tol_;
    std::string model_ = "poincare";
    std::vector<std::pair<std::string, Value>> bindings_;
    std::map<std::string, std::size_t> env_;
    std::set<std::string> failed_;
};

} // namespace detail

/// Runs a parsed script. Geometric failures stay local to their statement;
/// statements that use a failed binding are reported as errors as well.
inline EvalReport evaluate(const Script& script, const Tolerances& tol = {}) {
    return detail::Evaluator(tol).run(script);
}

} // namespace geo::script
