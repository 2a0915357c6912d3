#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace geo::script {

struct SourceLoc {
    int line = 0;
    int column = 0;
};

// Statement argument: a reference to an earlier binding or a literal.
struct Arg {
    enum class Kind { name, number, tuple, infinity };
    Kind kind = Kind::name;
    std::string text;                // name, or the literal as written
    std::vector<double> values;      // the number, or tuple components
    std::vector<std::string> texts;  // tuple components as written
    SourceLoc loc;

    friend bool operator==(const Arg& a, const Arg& b) {
        if (a.kind != b.kind) return false;
        if (a.kind == Kind::name) return a.text == b.text;
        return a.values == b.values;
    }
};

struct Expr {
    enum class Kind { number, name, string, tuple, unary, binary, call };
    Kind kind = Kind::number;
    std::string text; // literal, name, string contents, operator or function
    double number = 0.0;
    std::vector<Expr> children;
    SourceLoc loc;

    friend bool operator==(const Expr& a, const Expr& b) {
        if (a.kind != b.kind || a.children != b.children) return false;
        if (a.kind == Kind::number) return a.number == b.number;
        return a.text == b.text;
    }
};

struct Binding {
    std::string kind;
    std::string op; // empty for the plain form
    std::string name;
    std::vector<Arg> args;
    friend bool operator==(const Binding&, const Binding&) = default;
};

struct Assertion {
    Expr lhs, rhs;
    double tol = 0.0;
    std::string tol_text;
    friend bool operator==(const Assertion& a, const Assertion& b) {
        return a.lhs == b.lhs && a.rhs == b.rhs && a.tol == b.tol;
    }
};

struct RenderDirective {
    std::string path;
    std::optional<int> width;
    std::vector<std::string> names;
    friend bool operator==(const RenderDirective&, const RenderDirective&) = default;
};

struct TolDirective {
    std::string key;
    double value = 0.0;
    std::string text;
    friend bool operator==(const TolDirective& a, const TolDirective& b) {
        return a.key == b.key && a.value == b.value;
    }
};

struct ModelDirective {
    std::string model;
    friend bool operator==(const ModelDirective&, const ModelDirective&) = default;
};

struct Statement {
    SourceLoc loc;
    std::variant<Binding, Assertion, RenderDirective, TolDirective, ModelDirective> body;
    // Equality is structural; source locations do not take part.
    friend bool operator==(const Statement& a, const Statement& b) { return a.body == b.body; }
};

struct Script {
    std::vector<Statement> statements;
    friend bool operator==(const Script&, const Script&) = default;
};

inline std::string print(const Arg& a) {
    switch (a.kind) {
    case Arg::Kind::name:
    case Arg::Kind::number: return a.text;
    case Arg::Kind::infinity: return "inf";
    case Arg::Kind::tuple: {
        std::string out = "(";
        for (std::size_t i = 0; i < a.texts.size(); ++i) out += (i ? ", " : "") + a.texts[i];
        return out + ")";
    }
    }
    return {};
}

inline std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

inline std::string print(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::number:
    case Expr::Kind::name: return e.text;
    case Expr::Kind::string: return quote(e.text);
    case Expr::Kind::tuple:
    case Expr::Kind::call: {
        std::string out = e.kind == Expr::Kind::call ? e.text + "(" : "(";
        for (std::size_t i = 0; i < e.children.size(); ++i) out += (i ? ", " : "") + print(e.children[i]);
        return out + ")";
    }
    case Expr::Kind::unary: return "(" + e.text + print(e.children[0]) + ")";
    case Expr::Kind::binary:
        return "(" + print(e.children[0]) + " " + e.text + " " + print(e.children[1]) + ")";
    }
    return {};
}

/// Canonical text of one statement. Parsing it back gives an equal statement.
inline std::string print(const Statement& s) {
    struct Visitor {
        std::string operator()(const Binding& b) const {
            std::string out = b.kind + " " + b.name + " =";
            if (!b.op.empty()) out += " " + b.op;
            for (const auto& a : b.args) out += " " + print(a);
            return out;
        }
        std::string operator()(const Assertion& a) const {
            return "assert_eq " + print(a.lhs) + " " + print(a.rhs) + " tol " + a.tol_text;
        }
        std::string operator()(const RenderDirective& r) const {
            std::string out = "render " + r.path;
            if (r.width) out += " width " + std::to_string(*r.width);
            for (const auto& n : r.names) out += " " + n;
            return out;
        }
        std::string operator()(const TolDirective& t) const { return "tol " + t.key + " " + t.text; }
        std::string operator()(const ModelDirective& m) const { return "model " + m.model; }
    };
    return std::visit(Visitor{}, s.body);
}

inline std::string print(const Script& script) {
    std::string out;
    for (const auto& s : script.statements) out += print(s) + "\n";
    return out;
}

} // namespace geo::script
