#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "tfbs/runner.hpp"

namespace {

struct CliState {
    tfbs::RunConfig cfg;
    double nu = 0.0;
    std::string config_file;
};

void add_common(CLI::App* sub, CliState& st, bool with_levels) {
    // the short help flag would shadow the --h step option
    sub->set_help_flag("--help", "print help");
    sub->add_option("--problem", st.cfg.problem,
                    "problem name: example1, example2 or mms");
    sub->add_option("--gamma", st.cfg.gamma, "fractional order in (0, 1]")
        ->capture_default_str();
    sub->add_option("--h", st.cfg.h, "spatial step")->capture_default_str();
    sub->add_option("--tau", st.cfg.tau, "time step")->capture_default_str();
    sub->add_option("--T", st.cfg.T, "final time")->capture_default_str();
    sub->add_option("--nu", st.nu, "diffusion coefficient override");
    sub->add_option("--out", st.cfg.output_path, "output CSV path");
    sub->add_option("--config", st.config_file,
                    "plain key=value file; command-line flags take "
                    "precedence");
    if (with_levels) {
        sub->add_option("--levels", st.cfg.levels,
                        "number of halving levels")
            ->capture_default_str()
            ->check(CLI::Range(2, 12));
    }
}

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

// Applies key=value lines for every option not already given on the
// command line. Returns 0 or the exit code 2 on malformed input.
int apply_config(const CLI::App& sub, CliState& st) {
    std::ifstream in(st.config_file);
    if (!in) {
        std::cerr << "config error: cannot open '" << st.config_file
                  << "'\n";
        return 2;
    }
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string text = trim(line);
        if (text.empty() || text[0] == '#') continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos) {
            std::cerr << "config error: line " << lineno
                      << ": expected key=value\n";
            return 2;
        }
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));

        auto number = [&](double& dst) {
            char* end = nullptr;
            const double v = std::strtod(value.c_str(), &end);
            if (end == value.c_str() || *end != '\0') {
                std::cerr << "config error: line " << lineno
                          << ": invalid number for '" << key << "'\n";
                return false;
            }
            dst = v;
            return true;
        };
        auto from_cmdline = [&](const char* flag) {
            return sub.count(flag) > 0;
        };

        bool ok = true;
        if (key == "problem") {
            if (!from_cmdline("--problem")) st.cfg.problem = value;
        } else if (key == "gamma") {
            double v;
            ok = number(v);
            if (ok && !from_cmdline("--gamma")) st.cfg.gamma = v;
        } else if (key == "h") {
            double v;
            ok = number(v);
            if (ok && !from_cmdline("--h")) st.cfg.h = v;
        } else if (key == "tau") {
            double v;
            ok = number(v);
            if (ok && !from_cmdline("--tau")) st.cfg.tau = v;
        } else if (key == "T") {
            double v;
            ok = number(v);
            if (ok && !from_cmdline("--T")) st.cfg.T = v;
        } else if (key == "nu") {
            double v;
            ok = number(v);
            if (ok && !from_cmdline("--nu")) st.cfg.nu = v;
        } else if (key == "out") {
            if (!from_cmdline("--out")) st.cfg.output_path = value;
        } else if (key == "levels") {
            double v;
            ok = number(v);
            if (ok && sub.count("--levels") == 0) {
                st.cfg.levels = static_cast<int>(v);
            }
        } else {
            std::cerr << "config error: line " << lineno
                      << ": unknown key '" << key << "'\n";
            return 2;
        }
        if (!ok) return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "tfbs: time-fractional Burgers solver "
        "(cubic trigonometric B-spline collocation, Caputo L1 time "
        "stepping)"};
    app.require_subcommand(1);

    CliState st;

    auto* solve = app.add_subcommand("solve", "run once, write the profile");
    solve->callback([&] { st.cfg.mode = tfbs::RunConfig::Mode::solve; });
    add_common(solve, st, false);

    auto* cspace = app.add_subcommand(
        "converge-space", "halve h across levels, write the order table");
    cspace->callback(
        [&] { st.cfg.mode = tfbs::RunConfig::Mode::converge_space; });
    add_common(cspace, st, true);

    auto* ctime = app.add_subcommand(
        "converge-time", "halve tau across levels, write the order table");
    ctime->callback(
        [&] { st.cfg.mode = tfbs::RunConfig::Mode::converge_time; });
    add_common(ctime, st, true);

    auto* sweep = app.add_subcommand(
        "sweep-gamma", "run gamma in {0.2, 0.5, 0.8}, one profile each");
    sweep->callback(
        [&] { st.cfg.mode = tfbs::RunConfig::Mode::sweep_gamma; });
    add_common(sweep, st, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const CLI::App* sub = app.get_subcommands().front();
    if (sub->count("--config") > 0) {
        const int rc = apply_config(*sub, st);
        if (rc != 0) return rc;
    }
    if (sub->count("--nu") > 0) st.cfg.nu = st.nu;

    if (st.cfg.problem.empty()) {
        std::cerr << "config error: --problem is required (flag or config "
                     "file)\n";
        return 2;
    }
    if (st.cfg.output_path.empty()) {
        std::cerr << "config error: --out is required (flag or config "
                     "file)\n";
        return 2;
    }
    return tfbs::run(st.cfg);
}
