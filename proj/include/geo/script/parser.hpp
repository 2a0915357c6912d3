#pragma once

#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <string_view>

#include "geo/script/ast.hpp"
#include "geo/script/registry.hpp"

namespace geo::script {

struct Diagnostic {
    SourceLoc loc;
    std::string message;

    std::string str() const {
        return std::to_string(loc.line) + ":" + std::to_string(loc.column) + ": error: " + message;
    }
};

struct ParseResult {
    Script script;
    std::vector<Diagnostic> errors;
    bool ok() const { return errors.empty(); }
};

// Functions callable inside assert_eq expressions, with their arity.
inline const std::map<std::string, int, std::less<>>& expression_functions() {
    static const std::map<std::string, int, std::less<>> fns = {
        {"abs", 1},  {"acos", 1}, {"acosh", 1}, {"arg", 1},  {"asin", 1}, {"asinh", 1},
        {"atan", 1}, {"atan2", 2}, {"atanh", 1}, {"conj", 1}, {"cos", 1},  {"cosh", 1},
        {"exp", 1},  {"im", 1},   {"ln", 1},    {"re", 1},   {"sin", 1},  {"sinh", 1},
        {"sqrt", 1}, {"tan", 1},  {"tanh", 1},
    };
    return fns;
}

inline bool is_reserved(std::string_view w) {
    static const std::set<std::string, std::less<>> words = {"inf", "pi", "tol", "width", "assert_eq", "render", "model"};
    return words.count(w) || expression_functions().count(w) || is_kind(w) || is_measure_op(w);
}

namespace detail {

struct Token {
    enum class Kind { ident, number, string, punct, end };
    Kind kind = Kind::end;
    std::string text;
    int column = 0;
    std::size_t begin = 0, end = 0; // byte offsets in the line
};

inline bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }
inline bool digit(char c) { return c >= '0' && c <= '9'; }

class LineParser {
public:
    LineParser(std::string_view line, int line_no, std::vector<Diagnostic>& errors)
        : line_(line), line_no_(line_no), errors_(errors) {}

    // Splits the line (comment already removed) into tokens; false on a
    // lexical error, which has been reported.
    bool tokenize() {
        std::size_t i = 0;
        while (i < line_.size()) {
            char c = line_[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            Token t;
            t.begin = i;
            t.column = column_of(i);
            if (ident_start(c)) {
                t.kind = Token::Kind::ident;
                while (i < line_.size() && ident_char(line_[i])) ++i;
                if (i + 1 < line_.size() && line_[i] == '.' && ident_char(line_[i + 1])) {
                    ++i;
                    while (i < line_.size() && ident_char(line_[i])) ++i;
                }
            } else if (digit(c) || (c == '.' && i + 1 < line_.size() && digit(line_[i + 1]))) {
                t.kind = Token::Kind::number;
                while (i < line_.size() && digit(line_[i])) ++i;
                if (i < line_.size() && line_[i] == '.') {
                    ++i;
                    while (i < line_.size() && digit(line_[i])) ++i;
                }
                if (i < line_.size() && (line_[i] == 'e' || line_[i] == 'E')) {
                    std::size_t j = i + 1;
                    if (j < line_.size() && (line_[j] == '+' || line_[j] == '-')) ++j;
                    if (j < line_.size() && digit(line_[j])) {
                        i = j;
                        while (i < line_.size() && digit(line_[i])) ++i;
                    }
                }
                if (i < line_.size() && ident_char(line_[i])) {
                    error(t.column, "malformed number '" + std::string(line_.substr(t.begin, i + 1 - t.begin)) + "'");
                    return false;
                }
            } else if (c == '"') {
                t.kind = Token::Kind::string;
                ++i;
                std::string s;
                bool closed = false;
                while (i < line_.size()) {
                    if (line_[i] == '\\' && i + 1 < line_.size()) {
                        s += line_[i + 1];
                        i += 2;
                    } else if (line_[i] == '"') {
                        ++i;
                        closed = true;
                        break;
                    } else {
                        s += line_[i++];
                    }
                }
                if (!closed) {
                    error(t.column, "unterminated string");
                    return false;
                }
                t.text = s;
                t.end = i;
                tokens_.push_back(t);
                continue;
            } else if (std::string_view("()=,+-*/^").find(c) != std::string_view::npos) {
                t.kind = Token::Kind::punct;
                ++i;
            } else {
                error(t.column, "unexpected character '" + std::string(1, c) + "'");
                return false;
            }
            t.end = i;
            t.text = std::string(line_.substr(t.begin, i - t.begin));
            tokens_.push_back(t);
        }
        Token end;
        end.begin = end.end = line_.size();
        end.column = column_of(line_.size());
        tokens_.push_back(end);
        return true;
    }

    bool empty() const { return tokens_.size() == 1; }

    const Token& peek(std::size_t ahead = 0) const { return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)]; }
    const Token& next() {
        const Token& t = tokens_[pos_];
        if (pos_ + 1 < tokens_.size()) ++pos_;
        return t;
    }
    bool at_end() const { return peek().kind == Token::Kind::end; }
    bool is_punct(char c, std::size_t ahead = 0) const {
        return peek(ahead).kind == Token::Kind::punct && peek(ahead).text[0] == c;
    }
    bool is_word(std::string_view w) const { return peek().kind == Token::Kind::ident && peek().text == w; }

    SourceLoc loc(const Token& t) const { return {line_no_, t.column}; }

    void error(int column, std::string msg) { errors_.push_back({{line_no_, column}, std::move(msg)}); }
    void error_at(const Token& t, const std::string& msg) {
        if (t.kind == Token::Kind::end) error(t.column, msg + " at end of line");
        else error(t.column, msg + " near '" + describe(t) + "'");
    }

    static std::string describe(const Token& t) { return t.kind == Token::Kind::string ? quote(t.text) : t.text; }

    // Raw text of the next whitespace-delimited word, consuming the tokens
    // it covers.
    std::optional<std::pair<std::string, SourceLoc>> raw_word() {
        if (at_end()) return std::nullopt;
        std::size_t b = peek().begin, e = b;
        while (e < line_.size() && !std::isspace(static_cast<unsigned char>(line_[e]))) ++e;
        SourceLoc l = loc(peek());
        while (!at_end() && peek().begin < e) next();
        return std::make_pair(std::string(line_.substr(b, e - b)), l);
    }

    // A signed numeric literal: optional '-' or '+' glued to a number.
    std::optional<std::pair<double, std::string>> number_literal() {
        std::string sign;
        if ((is_punct('-') || is_punct('+')) && peek(1).kind == Token::Kind::number &&
            peek(1).begin == peek().end) {
            sign = next().text;
        }
        if (peek().kind != Token::Kind::number) return std::nullopt;
        const Token& t = next();
        std::string text = sign + t.text;
        return std::make_pair(to_double(t.text) * (sign == "-" ? -1.0 : 1.0), text);
    }

    static double to_double(const std::string& s) {
        double v = 0.0;
        auto r = std::from_chars(s.data(), s.data() + s.size(), v);
        if (r.ec != std::errc()) return std::stod(s); // out-of-range values saturate
        return v;
    }

private:
    int column_of(std::size_t offset) const {
        int col = 1;
        for (std::size_t i = 0; i < offset && i < line_.size(); ++i)
            if ((static_cast<unsigned char>(line_[i]) & 0xC0) != 0x80) ++col;
        return col;
    }

    std::string_view line_;
    int line_no_;
    std::vector<Diagnostic>& errors_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

inline std::string_view strip_comment(std::string_view line) {
    bool in_string = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (in_string && c == '\\') {
            ++i;
        } else if (c == '"') {
            in_string = !in_string;
        } else if (c == '#' && !in_string) {
            return line.substr(0, i);
        }
    }
    return line;
}

enum class ExprType { number, label };

class ScriptParser {
public:
    ParseResult run(std::string_view text) {
        int line_no = 0;
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t nl = text.find('\n', start);
            std::string_view line = text.substr(start, nl == std::string_view::npos ? text.size() - start : nl - start);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            ++line_no;
            parse_line(strip_comment(line), line_no);
            if (nl == std::string_view::npos) break;
            start = nl + 1;
        }
        return {std::move(script_), std::move(errors_)};
    }

private:
    struct NameInfo {
        std::optional<ValueType> type; // empty when the binding itself was malformed
        int line;
    };

    void parse_line(std::string_view line, int line_no) {
        LineParser p(line, line_no, errors_);
        if (!p.tokenize() || p.empty()) return;
        const Token& head = p.peek();
        if (head.kind != Token::Kind::ident) {
            p.error_at(head, "expected a statement keyword");
            return;
        }
        Statement s;
        s.loc = p.loc(head);
        std::size_t before = errors_.size();
        bool ok;
        if (head.text == "assert_eq") ok = parse_assertion(p, s);
        else if (head.text == "render") ok = parse_render(p, s);
        else if (head.text == "tol") ok = parse_tol(p, s);
        else if (head.text == "model") ok = parse_model(p, s);
        else if (is_kind(head.text) || is_measure_op(head.text)) ok = parse_binding(p, s);
        else {
            p.error(head.column, "unknown operation '" + head.text + "'");
            return;
        }
        if (ok && errors_.size() == before) script_.statements.push_back(std::move(s));
    }

    bool expect_end(LineParser& p) {
        if (p.at_end()) return true;
        p.error_at(p.peek(), "unexpected trailing input");
        return false;
    }

    bool parse_binding(LineParser& p, Statement& s) {
        Binding b;
        Token head = p.next();
        if (is_kind(head.text)) {
            b.kind = head.text;
        } else {
            b.kind = "measure";
            b.op = head.text;
        }
        Token name = p.peek();
        if (name.kind != Token::Kind::ident) {
            p.error_at(name, "expected a binding name");
            return false;
        }
        p.next();
        b.name = name.text;
        bool name_ok = check_new_name(p, name);
        if (!p.is_punct('=')) {
            p.error_at(p.peek(), "expected '='");
            if (name_ok) names_[b.name] = {std::nullopt, name.column};
            return false;
        }
        p.next();
        if (b.kind == "measure" && b.op.empty()) {
            const Token& op = p.peek();
            if (op.kind != Token::Kind::ident || !is_measure_op(op.text)) {
                p.error_at(op, op.kind == Token::Kind::ident ? "unknown operation '" + op.text + "'"
                                                            : "expected a measurement name");
                if (name_ok) names_[b.name] = {std::nullopt, name.column};
                return false;
            }
            b.op = p.next().text;
        } else if (b.kind != "measure" && p.peek().kind == Token::Kind::ident && has_sub_op(b.kind, p.peek().text)) {
            b.op = p.next().text;
        }
        const OpSpec* spec = find_op(b.kind, b.op);
        bool ok = spec != nullptr;
        if (!spec) p.error(head.column, "'" + b.kind + "' has no plain form; name an operation");
        std::vector<Token> arg_tokens;
        while (!p.at_end()) {
            Token start = p.peek();
            auto a = parse_arg(p);
            if (!a) {
                ok = false;
                break;
            }
            b.args.push_back(std::move(*a));
            arg_tokens.push_back(start);
        }
        std::optional<ValueType> result;
        if (ok) result = check_args(p, *spec, b, arg_tokens);
        if (name_ok) names_[b.name] = {result, s.loc.line};
        if (!result) return false;
        s.body = std::move(b);
        return true;
    }

    bool check_new_name(LineParser& p, const Token& name) {
        if (name.text.find('.') != std::string::npos) {
            p.error(name.column, "binding name '" + name.text + "' may not contain '.'");
            return false;
        }
        if (is_reserved(name.text)) {
            p.error(name.column, "'" + name.text + "' is a reserved word");
            return false;
        }
        if (auto it = names_.find(name.text); it != names_.end()) {
            p.error(name.column,
                    "duplicate binding '" + name.text + "' (first bound at line " + std::to_string(it->second.line) + ")");
            return false;
        }
        return true;
    }

    std::optional<Arg> parse_arg(LineParser& p) {
        Arg a;
        const Token& t = p.peek();
        a.loc = p.loc(t);
        if (t.kind == Token::Kind::ident) {
            a.text = p.next().text;
            a.kind = a.text == "inf" ? Arg::Kind::infinity : Arg::Kind::name;
            return a;
        }
        if (p.is_punct('(')) {
            p.next();
            a.kind = Arg::Kind::tuple;
            for (;;) {
                auto n = p.number_literal();
                if (!n) {
                    p.error_at(p.peek(), "expected a number in tuple");
                    return std::nullopt;
                }
                a.values.push_back(n->first);
                a.texts.push_back(n->second);
                if (p.is_punct(',')) {
                    p.next();
                    continue;
                }
                if (p.is_punct(')')) {
                    p.next();
                    break;
                }
                p.error_at(p.peek(), "expected ',' or ')'");
                return std::nullopt;
            }
            if (a.values.size() != 2 && a.values.size() != 3) {
                p.error(a.loc.column, "tuples have 2 or 3 components");
                return std::nullopt;
            }
            a.text = print(a);
            return a;
        }
        if (auto n = p.number_literal()) {
            a.kind = Arg::Kind::number;
            a.values = {n->first};
            a.text = n->second;
            return a;
        }
        p.error_at(t, "expected an argument");
        return std::nullopt;
    }

    // Static type of a name reference; reports and returns empty when
    // unresolved. `known` is false for references to malformed bindings.
    std::optional<ValueType> resolve(LineParser& p, const std::string& name, SourceLoc at, bool& known) {
        known = true;
        std::string base = name, member;
        if (auto dot = name.find('.'); dot != std::string::npos) {
            base = name.substr(0, dot);
            member = name.substr(dot + 1);
        }
        auto it = names_.find(base);
        if (it == names_.end()) {
            p.error(at.column, "unresolved name '" + base + "'");
            return std::nullopt;
        }
        if (!it->second.type) {
            known = false;
            return std::nullopt;
        }
        if (member.empty()) return it->second.type;
        if (*it->second.type != ValueType::bolyai) {
            p.error(at.column, "'" + base + "' is a " + to_string(*it->second.type) + " and has no members");
            return std::nullopt;
        }
        const BolyaiMember* m = find_bolyai_member(member);
        if (!m) {
            p.error(at.column, "bolyai has no member '" + member + "'");
            return std::nullopt;
        }
        return m->type;
    }

    std::optional<ValueType> check_args(LineParser& p, const OpSpec& spec, const Binding& b,
                                        const std::vector<Token>& at) {
        if (b.args.size() != spec.params.size()) {
            p.error(at.empty() ? p.peek().column : at.front().column,
                    "'" + spec.keyword() + "' expects " + std::to_string(spec.params.size()) + " argument" +
                        (spec.params.size() == 1 ? "" : "s") + ", got " + std::to_string(b.args.size()));
            return std::nullopt;
        }
        std::vector<ValueType> types;
        bool ok = true, all_known = true;
        for (std::size_t i = 0; i < b.args.size(); ++i) {
            const Arg& a = b.args[i];
            std::optional<ValueType> t;
            bool known = true;
            switch (a.kind) {
            case Arg::Kind::name: t = resolve(p, a.text, a.loc, known); break;
            case Arg::Kind::number: t = ValueType::real; break;
            case Arg::Kind::infinity: t = ValueType::point; break;
            case Arg::Kind::tuple: t = a.values.size() == 2 ? ValueType::complex : ValueType::vector; break;
            }
            if (!known) all_known = false;
            if (!t) {
                ok = false;
                types.push_back(ValueType::real);
                continue;
            }
            types.push_back(*t);
            const char* what = a.kind == Arg::Kind::infinity ? "inf"
                               : a.kind == Arg::Kind::name   ? nullptr
                                                             : "a literal";
            if (!spec.params[i].types.contains(*t)) {
                p.error(a.loc.column, "argument " + std::to_string(i + 1) + " of '" + spec.keyword() + "': expected " +
                                          spec.params[i].types.describe() + ", got " +
                                          (what ? std::string(what) + " " : std::string()) + to_string(*t));
                ok = false;
            }
        }
        if (!ok || !all_known) return std::nullopt;
        return spec.result_of ? spec.result_of(types) : spec.result;
    }

    bool parse_assertion(LineParser& p, Statement& s) {
        p.next();
        Assertion a;
        auto lhs = parse_expr(p);
        if (!lhs) return false;
        if (p.is_word("tol") || p.at_end()) {
            p.error_at(p.peek(), "assert_eq needs two expressions (write negative literals as (-x))");
            return false;
        }
        auto rhs = parse_expr(p);
        if (!rhs) return false;
        if (lhs->second != rhs->second) {
            p.error(s.loc.column, "assert_eq compares a label with a number");
            return false;
        }
        if (!p.is_word("tol")) {
            p.error_at(p.peek(), "expected 'tol'");
            return false;
        }
        p.next();
        Token tt = p.peek();
        auto n = p.number_literal();
        if (!n || !(n->first >= 0.0) || !std::isfinite(n->first)) {
            p.error_at(tt, "expected a nonnegative tolerance");
            return false;
        }
        if (!expect_end(p)) return false;
        a.lhs = std::move(lhs->first);
        a.rhs = std::move(rhs->first);
        a.tol = n->first;
        a.tol_text = n->second;
        s.body = std::move(a);
        return true;
    }

    using Typed = std::optional<std::pair<Expr, ExprType>>;

    Typed parse_expr(LineParser& p) {
        Typed lhs = parse_term(p);
        while (lhs && (p.is_punct('+') || p.is_punct('-'))) lhs = binary(p, std::move(lhs), &ScriptParser::parse_term);
        return lhs;
    }

    Typed parse_term(LineParser& p) {
        Typed lhs = parse_unary(p);
        while (lhs && (p.is_punct('*') || p.is_punct('/'))) lhs = binary(p, std::move(lhs), &ScriptParser::parse_unary);
        return lhs;
    }

    Typed binary(LineParser& p, Typed lhs, Typed (ScriptParser::*operand)(LineParser&)) {
        Token op = p.next();
        Typed rhs = (this->*operand)(p);
        if (!rhs) return std::nullopt;
        if (lhs->second == ExprType::label || rhs->second == ExprType::label) {
            p.error(op.column, "labels cannot take part in arithmetic");
            return std::nullopt;
        }
        Expr e;
        e.kind = Expr::Kind::binary;
        e.text = op.text;
        e.loc = p.loc(op);
        e.children = {std::move(lhs->first), std::move(rhs->first)};
        return std::make_pair(std::move(e), ExprType::number);
    }

    Typed parse_unary(LineParser& p) {
        if (p.is_punct('-')) {
            Token op = p.next();
            Typed inner = parse_unary(p);
            if (!inner) return std::nullopt;
            if (inner->second == ExprType::label) {
                p.error(op.column, "labels cannot take part in arithmetic");
                return std::nullopt;
            }
            Expr e;
            e.kind = Expr::Kind::unary;
            e.text = "-";
            e.loc = p.loc(op);
            e.children = {std::move(inner->first)};
            return std::make_pair(std::move(e), ExprType::number);
        }
        Typed base = parse_primary(p);
        if (base && p.is_punct('^')) {
            Token op = p.next();
            Typed exponent = parse_unary(p);
            if (!exponent) return std::nullopt;
            if (base->second == ExprType::label || exponent->second == ExprType::label) {
                p.error(op.column, "labels cannot take part in arithmetic");
                return std::nullopt;
            }
            Expr e;
            e.kind = Expr::Kind::binary;
            e.text = "^";
            e.loc = p.loc(op);
            e.children = {std::move(base->first), std::move(exponent->first)};
            return std::make_pair(std::move(e), ExprType::number);
        }
        return base;
    }

    Typed parse_primary(LineParser& p) {
        Token t = p.peek();
        Expr e;
        e.loc = p.loc(t);
        if (t.kind == Token::Kind::number) {
            p.next();
            e.kind = Expr::Kind::number;
            e.text = t.text;
            e.number = LineParser::to_double(t.text);
            return std::make_pair(std::move(e), ExprType::number);
        }
        if (t.kind == Token::Kind::string) {
            p.next();
            e.kind = Expr::Kind::string;
            e.text = t.text;
            return std::make_pair(std::move(e), ExprType::label);
        }
        if (p.is_punct('(')) {
            p.next();
            std::vector<Expr> items;
            for (;;) {
                Typed item = parse_expr(p);
                if (!item) return std::nullopt;
                if (item->second == ExprType::label) {
                    p.error(t.column, "labels cannot be grouped");
                    return std::nullopt;
                }
                items.push_back(std::move(item->first));
                if (p.is_punct(',')) {
                    p.next();
                    continue;
                }
                if (p.is_punct(')')) {
                    p.next();
                    break;
                }
                p.error_at(p.peek(), "expected ',' or ')'");
                return std::nullopt;
            }
            if (items.size() == 1) return std::make_pair(std::move(items.front()), ExprType::number);
            if (items.size() != 2) {
                p.error(t.column, "complex tuples have 2 components");
                return std::nullopt;
            }
            e.kind = Expr::Kind::tuple;
            e.children = std::move(items);
            return std::make_pair(std::move(e), ExprType::number);
        }
        if (t.kind == Token::Kind::ident) {
            p.next();
            e.text = t.text;
            auto fn = expression_functions().find(t.text);
            if (fn != expression_functions().end()) {
                if (!p.is_punct('(')) {
                    p.error_at(p.peek(), "expected '(' after function '" + t.text + "'");
                    return std::nullopt;
                }
                p.next();
                e.kind = Expr::Kind::call;
                for (;;) {
                    Typed arg = parse_expr(p);
                    if (!arg) return std::nullopt;
                    if (arg->second == ExprType::label) {
                        p.error(t.column, "labels cannot be function arguments");
                        return std::nullopt;
                    }
                    e.children.push_back(std::move(arg->first));
                    if (p.is_punct(',')) {
                        p.next();
                        continue;
                    }
                    if (p.is_punct(')')) {
                        p.next();
                        break;
                    }
                    p.error_at(p.peek(), "expected ',' or ')'");
                    return std::nullopt;
                }
                if (static_cast<int>(e.children.size()) != fn->second) {
                    p.error(t.column, "'" + t.text + "' takes " + std::to_string(fn->second) + " argument" +
                                          (fn->second == 1 ? "" : "s"));
                    return std::nullopt;
                }
                return std::make_pair(std::move(e), ExprType::number);
            }
            e.kind = Expr::Kind::name;
            if (t.text == "pi") return std::make_pair(std::move(e), ExprType::number);
            bool known = true;
            auto type = resolve(p, t.text, e.loc, known);
            if (!known) return std::make_pair(std::move(e), ExprType::number);
            if (!type) return std::nullopt;
            switch (*type) {
            case ValueType::label: return std::make_pair(std::move(e), ExprType::label);
            case ValueType::real:
            case ValueType::complex:
            case ValueType::point:
            case ValueType::hpoint:
            case ValueType::kpoint: return std::make_pair(std::move(e), ExprType::number);
            default:
                p.error(t.column, "'" + t.text + "' is a " + to_string(*type) + " and cannot be used in an expression");
                return std::nullopt;
            }
        }
        p.error_at(t, "expected an expression");
        return std::nullopt;
    }

    bool parse_render(LineParser& p, Statement& s) {
        p.next();
        auto path = p.raw_word();
        if (!path) {
            p.error_at(p.peek(), "render needs an output path");
            return false;
        }
        RenderDirective r;
        r.path = path->first;
        if (p.is_word("width")) {
            p.next();
            Token t = p.peek();
            auto n = p.number_literal();
            if (!n || n->first < 1 || n->first > 100000 || n->first != std::floor(n->first)) {
                p.error_at(t, "width must be a positive integer");
                return false;
            }
            r.width = static_cast<int>(n->first);
        }
        while (!p.at_end()) {
            Token t = p.next();
            if (t.kind != Token::Kind::ident) {
                p.error_at(t, "expected a binding name to render");
                return false;
            }
            bool known = true;
            auto type = resolve(p, t.text, p.loc(t), known);
            if (!type && known) return false;
            if (type && !renderable(*type)) {
                p.error(t.column, "'" + t.text + "' is a " + to_string(*type) + " and cannot be rendered");
                return false;
            }
            r.names.push_back(t.text);
        }
        s.body = std::move(r);
        return true;
    }

    bool parse_tol(LineParser& p, Statement& s) {
        p.next();
        Token key = p.peek();
        if (key.kind != Token::Kind::ident || !Tolerances{}.set(key.text, 1.0)) {
            p.error_at(key, "expected eps_eq, eps_assert or eps_degenerate");
            return false;
        }
        p.next();
        Token vt = p.peek();
        auto n = p.number_literal();
        if (!n || !(n->first > 0.0) || !std::isfinite(n->first)) {
            p.error_at(vt, "expected a positive tolerance");
            return false;
        }
        if (!expect_end(p)) return false;
        s.body = TolDirective{key.text, n->first, n->second};
        return true;
    }

    bool parse_model(LineParser& p, Statement& s) {
        p.next();
        Token m = p.peek();
        if (m.kind != Token::Kind::ident || (m.text != "poincare" && m.text != "klein")) {
            p.error_at(m, "expected 'poincare' or 'klein'");
            return false;
        }
        p.next();
        if (!expect_end(p)) return false;
        s.body = ModelDirective{m.text};
        return true;
    }

public:
    static bool renderable(ValueType t) {
        switch (t) {
        case ValueType::point:
        case ValueType::hpoint:
        case ValueType::kpoint:
        case ValueType::line:
        case ValueType::circle:
        case ValueType::cline:
        case ValueType::hline:
        case ValueType::hcircle:
        case ValueType::bolyai: return true;
        default: return false;
        }
    }

private:
    Script script_;
    std::vector<Diagnostic> errors_;
    std::map<std::string, NameInfo, std::less<>> names_;
};

} // namespace detail

/// Parses a whole script. Every malformed line is reported; the script is
/// usable only when no diagnostics were produced.
inline ParseResult parse(std::string_view text) { return detail::ScriptParser().run(text); }

inline bool renderable(ValueType t) { return detail::ScriptParser::renderable(t); }

} // namespace geo::script
