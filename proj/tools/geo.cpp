#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "geo/script.hpp"

namespace {

using namespace geo::script;

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    out << data;
    return static_cast<bool>(out);
}

struct RunOptions {
    std::string file;
    std::optional<double> tol;
    std::string render;
    std::string report = "text";
    std::string config;
};

int run(const RunOptions& opt) {
    geo::Tolerances tol;
    if (!opt.config.empty()) {
        std::ifstream in(opt.config);
        if (!in) {
            std::cerr << "geo: cannot read config '" << opt.config << "'\n";
            return kExitParse;
        }
        try {
            tol = geo::parse_tolerances(in);
        } catch (const std::invalid_argument& e) {
            std::cerr << "geo: " << opt.config << ": " << e.what() << "\n";
            return kExitParse;
        }
    }
    if (opt.tol) {
        tol.eps_assert = *opt.tol;
        if (!tol.valid()) {
            std::cerr << "geo: --tol must be positive and at least eps_eq\n";
            return kExitParse;
        }
    }
    auto text = read_file(opt.file);
    if (!text) {
        std::cerr << "geo: cannot read '" << opt.file << "'\n";
        return kExitParse;
    }
    ParseResult parsed = parse(*text);
    if (!parsed.ok()) {
        if (opt.report == "json") std::cout << json_diagnostics(opt.file, parsed.errors).dump(2) << "\n";
        else std::cerr << text_diagnostics(opt.file, parsed.errors);
        return kExitParse;
    }
    EvalReport report = evaluate(parsed.script, tol);
    int code = report.exit_code();

    std::vector<RenderJob> jobs = report.renders;
    if (!opt.render.empty()) {
        RenderJob job;
        if (!jobs.empty()) {
            job = jobs.back();
        } else {
            for (const auto& [name, v] : report.bindings)
                if (renderable(type_of(v))) job.names.push_back(name);
        }
        job.path = opt.render;
        jobs = {job};
    }
    for (const auto& job : jobs) {
        try {
            if (!write_file(job.path, render_svg(report, job))) {
                std::cerr << "geo: cannot write '" << job.path << "'\n";
                code = kExitGeometric;
            }
        } catch (const geo::GeoError& e) {
            std::cerr << "geo: render: " << e.what() << "\n";
            code = kExitGeometric;
        }
    }

    if (opt.report == "json") std::cout << json_report(opt.file, report).dump(2) << "\n";
    else std::cout << text_report(opt.file, report);
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Plane geometry construction scripts"};
    app.require_subcommand(1);
    RunOptions opt;
    CLI::App* cmd = app.add_subcommand("run", "Evaluate a construction script");
    cmd->add_option("file", opt.file, "Script to run")->required();
    cmd->add_option("--tol", opt.tol, "Default assertion tolerance (eps_assert)");
    cmd->add_option("--render", opt.render, "Write the SVG figure here");
    cmd->add_option("--report", opt.report, "Report format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--config", opt.config, "Tolerance file with key=value lines");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitParse;
    }
    return run(opt);
}
