#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "geo/script.hpp"

namespace geo::script {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<fs::path> golden_scripts() {
    std::vector<fs::path> out;
    for (const auto& e : fs::directory_iterator(fs::path(GEO_SCRIPTS_DIR) / "golden"))
        if (e.path().extension() == ".geo") out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

EvalReport run(const std::string& text) {
    ParseResult p = parse(text);
    EXPECT_TRUE(p.ok()) << (p.errors.empty() ? "" : p.errors.front().str());
    return evaluate(p.script);
}

int count_elements(const std::string& svg) {
    static const std::regex element("<(path|circle) ");
    return static_cast<int>(std::distance(std::sregex_iterator(svg.begin(), svg.end(), element), std::sregex_iterator()));
}

TEST(Parse, Examples) {
    ParseResult p = parse("point P = (0.5, 0)");
    ASSERT_TRUE(p.ok());
    ASSERT_EQ(p.script.statements.size(), 1u);
    const auto& b = std::get<Binding>(p.script.statements[0].body);
    EXPECT_EQ(b.kind, "point");
    EXPECT_EQ(b.name, "P");
    ASSERT_EQ(b.args.size(), 1u);
    EXPECT_EQ(b.args[0].values, (std::vector<double>{0.5, 0.0}));

    ParseResult q = parse("hpoint P = (0.5, 0)\n# comment\nhdist d = P Q\n");
    ASSERT_EQ(q.errors.size(), 1u);
    EXPECT_EQ(q.errors[0].loc.line, 3);
    EXPECT_EQ(q.errors[0].loc.column, 13);
    EXPECT_NE(q.errors[0].message.find("unresolved name 'Q'"), std::string::npos);

    ParseResult a = parse("hpoint O = (0, 0)\nhpoint P = (0.5, 0)\nhdist d = O P\nassert_eq d 1.0986122886681098 tol 1e-9");
    ASSERT_TRUE(a.ok());
    ASSERT_EQ(a.script.statements.size(), 4u);
    const auto& as = std::get<Assertion>(a.script.statements[3].body);
    EXPECT_EQ(as.tol, 1e-9);
    EXPECT_EQ(as.rhs.number, 1.0986122886681098);
}

TEST(Parse, MeasureShorthandEqualsLongForm) {
    ParseResult a = parse("hpoint P = (0.1, 0)\nhpoint Q = (0.2, 0)\nhdist d = P Q");
    ParseResult b = parse("hpoint P = (0.1, 0)\nhpoint Q = (0.2, 0)\nmeasure d = hdist P Q");
    ASSERT_TRUE(a.ok() && b.ok());
    EXPECT_EQ(a.script, b.script);
}

struct BadCase {
    const char* text;
    int line, column;
    const char* fragment;
};

TEST(Parse, Diagnostics) {
    const BadCase cases[] = {
        {"frobnicate x = 1", 1, 1, "unknown operation 'frobnicate'"},
        {"hpoint P = (0, 0)\nhpoint P = (0.1, 0)", 2, 8, "duplicate binding 'P' (first bound at line 1)"},
        {"hpoint P = (0, 0)\nhdist d = P", 2, 11, "expects 2 arguments, got 1"},
        {"circle W = (0, 0) 1\nhpoint P = (0, 0)\nhdist d = P W", 3, 13, "expected hpoint, got circle"},
        {"point P = (1, 2", 1, 16, "expected ',' or ')' at end of line"},
        {"point P = (1, 2) @", 1, 18, "unexpected character '@'"},
        {"point pi = (1, 2)", 1, 7, "'pi' is a reserved word"},
        {"point P = (1, 2)\nassert_eq P \"x tol 1", 2, 13, "unterminated string"},
        {"point P = (1, 2)\nassert_eq P tol 1", 2, 13, "needs two expressions"},
        {"measure m = 3", 1, 13, "expected a measurement name"},
        {"tol eps_big 1e-9", 1, 5, "expected eps_eq, eps_assert or eps_degenerate"},
        {"model hyperbolic", 1, 7, "expected 'poincare' or 'klein'"},
        {"hpoint P = (0, 0)\nhline l = P P\nassert_eq l 1 tol 0", 3, 11, "cannot be used in an expression"},
        {"hpoint P = (0, 0)\nclassify k = P", 2, 14, "expected line or circle or cline"},
        {"point P = 1e5x", 1, 11, "malformed number"},
        {"hpoint P = (0, 0)\nhpoint Q = (0.1, 0)\nhline l = P Q\nbolyai B = l P\nassert_eq B.zz 0 tol 0", 5, 11,
         "bolyai has no member 'zz'"},
        {"render", 1, 7, "render needs an output path"},
        {"point P = (1, 2)\nrender out.svg width 0", 2, 22, "width must be a positive integer"},
        {"spoint S = (1, 0, 0)\nrender out.svg S", 2, 16, "cannot be rendered"},
        {"point P = (1, 2)\nassert_eq \"a\" P tol 0", 2, 1, "compares a label with a number"},
    };
    for (const auto& c : cases) {
        ParseResult p = parse(c.text);
        ASSERT_FALSE(p.ok()) << c.text;
        const Diagnostic& d = p.errors.front();
        EXPECT_EQ(d.loc.line, c.line) << c.text << " -> " << d.str();
        EXPECT_EQ(d.loc.column, c.column) << c.text << " -> " << d.str();
        EXPECT_NE(d.message.find(c.fragment), std::string::npos) << c.text << " -> " << d.str();
    }
}

TEST(Parse, ReportsEveryBadLineWithoutCascades) {
    ParseResult p = parse("hpoint P = (0, 0)\nhpoint Q = nonsense 3\nhdist d = P Q\nfoo\nhdist e = P R\n");
    ASSERT_EQ(p.errors.size(), 3u);
    EXPECT_EQ(p.errors[0].loc.line, 2);
    EXPECT_EQ(p.errors[1].loc.line, 4);
    EXPECT_EQ(p.errors[2].loc.line, 5);
}

TEST(Parse, ColumnsCountCharactersNotBytes) {
    ParseResult p = parse("point P = (1, 2) # café\npoint Q = (0, 0) ∞");
    ASSERT_EQ(p.errors.size(), 1u);
    EXPECT_EQ(p.errors[0].loc.column, 18);
}

TEST(RoundTrip, GoldenCorpus) {
    auto files = golden_scripts();
    ASSERT_GE(files.size(), 10u);
    for (const auto& f : files) {
        ParseResult first = parse(slurp(f));
        ASSERT_TRUE(first.ok()) << f << ": " << first.errors.front().str();
        std::string printed = print(first.script);
        ParseResult second = parse(printed);
        ASSERT_TRUE(second.ok()) << f << ": " << second.errors.front().str() << "\n" << printed;
        EXPECT_EQ(first.script, second.script) << f;
        EXPECT_EQ(print(second.script), printed) << f;
    }
}

TEST(RoundTrip, ExpressionsKeepTheirShape) {
    const char* text = "point P = (1, 2)\nassert_eq -P^2*3 - 1/(2+re(P)) (-3, -4) tol 1e-9\n";
    ParseResult a = parse(text);
    ASSERT_TRUE(a.ok()) << a.errors.front().str();
    ParseResult b = parse(print(a.script));
    ASSERT_TRUE(b.ok());
    EXPECT_EQ(a.script, b.script);
    const auto& e = std::get<Assertion>(a.script.statements[1].body).lhs;
    EXPECT_EQ(print(e), "(((-(P ^ 2)) * 3) - (1 / (2 + re(P))))");
}

TEST(Coverage, EveryOperationAppearsInTheGoldenCorpus) {
    std::set<std::pair<std::string, std::string>> used;
    std::set<std::string> directives;
    for (const auto& f : golden_scripts()) {
        ParseResult p = parse(slurp(f));
        ASSERT_TRUE(p.ok()) << f;
        for (const auto& s : p.script.statements) {
            if (auto b = std::get_if<Binding>(&s.body)) used.insert({b->kind, b->op});
            else if (std::holds_alternative<Assertion>(s.body)) directives.insert("assert_eq");
            else if (std::holds_alternative<RenderDirective>(s.body)) directives.insert("render");
            else if (std::holds_alternative<TolDirective>(s.body)) directives.insert("tol");
            else directives.insert("model");
        }
    }
    for (const auto& e : registry())
        EXPECT_TRUE(used.count({std::string(e.kind), std::string(e.op)})) << "unused: " << e.keyword();
    EXPECT_EQ(directives.size(), 4u);
}

TEST(Evaluate, Examples) {
    EvalReport r = run("hpoint O = (0, 0)\nhpoint P = (0.5, 0)\nhdist d = O P\nassert_eq d ln(3) tol 1e-12\n");
    EXPECT_EQ(r.exit_code(), kExitOk);
    EXPECT_EQ(r.results.size(), 4u);
    EXPECT_EQ(r.results[3].status, StatementResult::Status::pass);

    EvalReport b = run("hpoint A = (-0.6, -0.3)\nhpoint B = (0.7, -0.2)\nhline l = A B\nhpoint P = (0.1, 0.45)\n"
                       "bolyai G = l P\nassert_eq G.qr G.pt1 tol 1e-9\n");
    EXPECT_EQ(b.exit_code(), kExitOk);

    EvalReport bad = run("hpoint X = (1.5, 0)\n");
    EXPECT_EQ(bad.exit_code(), kExitGeometric);
    EXPECT_EQ(bad.results[0].message, "point outside the absolute");
}

TEST(Evaluate, FailuresStayLocal) {
    EvalReport r = run("hpoint X = (1.5, 0)\nhpoint P = (0.5, 0)\nhpoint O = (0, 0)\nhdist d = X P\n"
                       "hdist e = O P\nassert_eq e ln(3) tol 1e-12\nassert_eq d 0 tol 1\nassert_eq e 0 tol 0.5\n");
    ASSERT_EQ(r.results.size(), 8u);
    using S = StatementResult::Status;
    EXPECT_EQ(r.results[0].status, S::error);
    EXPECT_EQ(r.results[1].status, S::ok);
    EXPECT_EQ(r.results[3].status, S::error);
    EXPECT_EQ(r.results[3].message, "depends on failed binding 'X'");
    EXPECT_EQ(r.results[4].status, S::ok);
    EXPECT_EQ(r.results[5].status, S::pass);
    EXPECT_EQ(r.results[6].status, S::error);
    EXPECT_EQ(r.results[7].status, S::fail);
    // A geometric error outranks a failed assertion.
    EXPECT_EQ(r.exit_code(), kExitGeometric);
    EXPECT_EQ(run("hpoint P = (0.5, 0)\nhpoint O = (0, 0)\nhdist e = O P\nassert_eq e 1 tol 0.01\n").exit_code(),
              kExitAssertion);
}

TEST(Evaluate, Expressions) {
    EvalReport r = run("point P = (3, 4)\n"
                       "assert_eq abs(P) 5 tol 0\n"
                       "assert_eq 2^3^2 512 tol 0\n"
                       "assert_eq -2^2 (-4) tol 0\n"
                       "assert_eq P*(0, 1) (-4, 3) tol 0\n"
                       "assert_eq atan2(1, 1) pi/4 tol 0\n"
                       "assert_eq sqrt(-4) (0, 2) tol 1e-15\n"
                       "assert_eq conj(P) (3, -4) tol 0\n"
                       "assert_eq exp(ln(2)) 2 tol 1e-15\n"
                       "assert_eq cosh(1)^2-sinh(1)^2 1 tol 1e-15\n"
                       "assert_eq 1/(P-P) 0 tol 1\n");
    for (std::size_t i = 1; i + 1 < r.results.size(); ++i)
        EXPECT_EQ(r.results[i].status, StatementResult::Status::pass) << r.results[i].source << " " << r.results[i].message;
    EXPECT_EQ(r.results.back().status, StatementResult::Status::error);
    EXPECT_EQ(r.results.back().message, "division by zero");
}

TEST(Evaluate, Labels) {
    EvalReport r = run("circle A = (0, 0) 1\ncircle B = (2, 0) 1\ntangency t = A B\n"
                       "assert_eq t \"ext_tangent\" tol 0\nassert_eq t \"nested\" tol 0\n");
    EXPECT_EQ(r.results[3].status, StatementResult::Status::pass);
    EXPECT_EQ(r.results[4].status, StatementResult::Status::fail);
    EXPECT_EQ(r.exit_code(), kExitAssertion);
}

TEST(Evaluate, ToleranceDirective) {
    // A loose eps_assert turns a near-tangency into a tangency.
    const char* base = "circle A = (0, 0) 1\ncircle B = (2.000001, 0) 1\n";
    EvalReport strict = run(std::string(base) + "tangency t = A B\n");
    EvalReport loose = run(std::string(base) + "tol eps_assert 1e-3\ntangency t = A B\n");
    EXPECT_EQ(std::get<Label>(*strict.results.back().value).text, "disjoint");
    EXPECT_EQ(std::get<Label>(*loose.results.back().value).text, "ext_tangent");
    EXPECT_EQ(loose.final_tolerances.eps_assert, 1e-3);
    EvalReport invalid = run("tol eps_eq 1\n");
    EXPECT_EQ(invalid.exit_code(), kExitGeometric);
}

TEST(Evaluate, BaseTolerancesComeFromTheCaller) {
    ParseResult p = parse("circle A = (0, 0) 1\ncircle B = (2.000001, 0) 1\ntangency t = A B\n");
    Tolerances tol;
    tol.eps_assert = 1e-3;
    EvalReport r = evaluate(p.script, tol);
    EXPECT_EQ(std::get<Label>(*r.results.back().value).text, "ext_tangent");
}

TEST(Evaluate, IsDeterministic) {
    for (const auto& f : golden_scripts()) {
        std::string text = slurp(f);
        EvalReport a = run(text), b = run(text);
        EXPECT_EQ(text_report("x", a), text_report("x", b)) << f;
        EXPECT_EQ(json_report("x", a).dump(), json_report("x", b).dump()) << f;
    }
}

TEST(Svg, ElementCounts) {
    EvalReport d = run("hpoint A = (-0.5, 0)\nhpoint B = (0.5, 0)\nhline d = A B\nrender out.svg d\n");
    ASSERT_EQ(d.renders.size(), 1u);
    std::string svg = render_svg(d, d.renders[0]);
    EXPECT_EQ(count_elements(svg), 2);
    EXPECT_NE(svg.find("<path class=\"hline\" id=\"d\" d=\"M -1.000000 0.000000 L 1.000000 0.000000\"/>"), std::string::npos)
        << svg;

    EvalReport t = run(slurp(fs::path(GEO_SCRIPTS_DIR) / "golden" / "ideal_triangle.geo"));
    ASSERT_EQ(t.renders.size(), 1u);
    std::string tri = render_svg(t, t.renders[0]);
    EXPECT_EQ(count_elements(tri), 5);
    EXPECT_NE(tri.find("viewBox=\"-1.1 -1.1 2.2 2.2\""), std::string::npos);
    EXPECT_NE(tri.find(" A 1.732051 1.732051 0 0 "), std::string::npos);
    EXPECT_NE(tri.find("r=\"0.267949\""), std::string::npos);
}

TEST(Svg, ArcsStayInsideTheDisk) {
    // Midpoint of every rendered arc lies inside the absolute: the sweep flag
    // selects the minor arc of the carrier.
    EvalReport r = run("hpoint A = (-0.3, 0.4)\nhpoint B = (0.5, 0.2)\nhline l = A B\nhpoint C = (0.3, -0.5)\n"
                       "hline m = B C\nhline n = C A\n");
    for (const char* name : {"l", "m", "n"}) {
        HLine h = std::get<HLine>(*r.lookup(name));
        const Circle& c = h.carrier.circle();
        std::string svg = render_svg(r, {name});
        std::smatch m;
        ASSERT_TRUE(std::regex_search(svg, m, std::regex(" 0 0 ([01]) ")));
        int sweep = std::stoi(m[1]);
        // Mid-angle of the arc traversed with that orientation.
        double t0 = std::arg(h.ideal_a - c.center), t1 = std::arg(h.ideal_b - c.center);
        double span = std::remainder(t1 - t0, kTwoPi);
        EXPECT_EQ(sweep == 1, span > 0);
        EXPECT_LT(std::abs(c.at(t0 + span / 2)), 1.0);
    }
}

TEST(Svg, KleinModelDrawsChordsAndSkipsCircles) {
    EvalReport r = run("hpoint A = (-0.3, 0.4)\nhpoint B = (0.5, 0.2)\nhline l = A B\nhcircle C = A 0.5\nmodel klein\n"
                       "render k.svg l C A\n");
    std::string svg = render_svg(r, r.renders[0]);
    EXPECT_EQ(count_elements(svg), 3);
    // Only the two arcs of the absolute.
    const std::regex arc(" A ");
    EXPECT_EQ(std::distance(std::sregex_iterator(svg.begin(), svg.end(), arc), std::sregex_iterator()), 2);
    EXPECT_NE(svg.find("class=\"hline\" id=\"l\" d=\"M "), std::string::npos);
    Complex k = poincare_to_klein(HPoint(Complex(-0.3, 0.4))).z();
    char buf[64];
    std::snprintf(buf, sizeof buf, "cx=\"%.6f\" cy=\"%.6f\"", k.real(), k.imag());
    EXPECT_NE(svg.find(buf), std::string::npos);
}

TEST(Svg, ByteIdenticalAndNoNegativeZero) {
    for (const auto& f : golden_scripts()) {
        std::string text = slurp(f);
        EvalReport a = run(text), b = run(text);
        for (std::size_t i = 0; i < a.renders.size(); ++i) {
            std::string sa = render_svg(a, a.renders[i]);
            EXPECT_EQ(sa, render_svg(b, b.renders[i]));
            EXPECT_EQ(sa.find("-0.000000"), std::string::npos) << f;
        }
    }
}

TEST(Svg, DefaultSelectionIsEveryDrawableBinding) {
    EvalReport r = run("hpoint A = (0.1, 0)\nhpoint B = (0.2, 0.1)\nhdist d = A B\nrender out.svg\n");
    ASSERT_EQ(r.renders.size(), 1u);
    EXPECT_EQ(r.renders[0].names, (std::vector<std::string>{"A", "B"}));
}

TEST(Report, JsonShape) {
    EvalReport r = run("hpoint O = (0, 0)\nhpoint P = (0.5, 0)\nhdist d = O P\nassert_eq d 1 tol 0.5\n");
    auto j = json_report("f.geo", r);
    EXPECT_EQ(j["exit_code"], 0);
    EXPECT_EQ(j["summary"]["passed"], 1);
    EXPECT_EQ(j["statements"][2]["value"]["type"], "real");
    EXPECT_DOUBLE_EQ(j["statements"][2]["value"]["value"].get<double>(), std::log(3.0));
    EXPECT_EQ(j["statements"][3]["status"], "pass");
    auto diag = json_diagnostics("f.geo", parse("foo").errors);
    EXPECT_EQ(diag["exit_code"], 1);
    EXPECT_EQ(diag["errors"][0]["column"], 1);
}

} // namespace
} // namespace geo::script
