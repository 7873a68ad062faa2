#include "tfbs/runner.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <stdexcept>
#include <vector>

#include "tfbs/engine.hpp"
#include "tfbs/norms.hpp"
#include "tfbs/problems.hpp"

namespace tfbs {

namespace {

// 17 significant digits: doubles survive a write/read round trip.
std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::ofstream open_output(const std::string& path) {
    const std::filesystem::path p(path);
    if (p.has_parent_path()) {
        std::filesystem::create_directories(p.parent_path());
    }
    std::ofstream out(p);
    if (!out) {
        throw std::invalid_argument("cannot open output file '" + path + "'");
    }
    return out;
}

std::string with_gamma_suffix(const std::string& path, double gamma) {
    std::filesystem::path p(path);
    char tag[32];
    std::snprintf(tag, sizeof(tag), "_gamma%.1f", gamma);
    const std::string stem = p.stem().string() + tag;
    std::filesystem::path out = p;
    out.replace_filename(stem + p.extension().string());
    return out.string();
}

struct ProfileOutcome {
    ErrorReport report;
    bool has_exact = false;
    double seconds = 0.0;
};

ProfileOutcome write_profile(const BenchmarkProblem& prob,
                             const std::string& path) {
    const SolveResult result = solve(prob.spec);
    const std::vector<double>& u = result.levels.back();
    const SpatialGrid& grid = prob.spec.grid;

    std::ofstream out = open_output(path);
    ProfileOutcome outcome;
    outcome.seconds = result.seconds;
    if (prob.exact) {
        std::vector<double> exact(grid.M + 1);
        for (std::size_t j = 0; j <= grid.M; ++j) {
            exact[j] = prob.exact(grid.knots[j], prob.spec.T);
        }
        out << "x,u_numeric,u_exact,abs_error\n";
        for (std::size_t j = 0; j <= grid.M; ++j) {
            out << fmt(grid.knots[j]) << ',' << fmt(u[j]) << ','
                << fmt(exact[j]) << ',' << fmt(std::fabs(u[j] - exact[j]))
                << '\n';
        }
        outcome.report = error_norms(u, exact, grid.h);
        outcome.report.runtime_seconds = result.seconds;
        outcome.has_exact = true;
    } else {
        out << "x,u_numeric\n";
        for (std::size_t j = 0; j <= grid.M; ++j) {
            out << fmt(grid.knots[j]) << ',' << fmt(u[j]) << '\n';
        }
    }
    return outcome;
}

int run_solve(const RunConfig& cfg) {
    const BenchmarkProblem prob = make_problem(cfg.problem, cfg.gamma, cfg.h,
                                               cfg.tau, cfg.T, cfg.nu);
    const ProfileOutcome outcome = write_profile(prob, cfg.output_path);
    std::cout << "solve problem=" << cfg.problem << " gamma=" << cfg.gamma
              << " M=" << prob.spec.grid.M << " N=" << prob.spec.n_steps;
    if (outcome.has_exact) {
        std::cout << " l_inf=" << fmt(outcome.report.l_inf)
                  << " l2=" << fmt(outcome.report.l2);
    }
    std::cout << " runtime=" << outcome.seconds << "s -> " << cfg.output_path
              << "\n";
    return 0;
}

int run_converge(const RunConfig& cfg, bool refine_space) {
    if (cfg.levels < 2) {
        throw std::invalid_argument("converge modes need at least 2 levels");
    }
    {
        // The orders are measured against the problem's exact solution.
        const BenchmarkProblem probe = make_problem(cfg.problem, cfg.gamma,
                                                    cfg.h, cfg.tau, cfg.T,
                                                    cfg.nu);
        if (!probe.exact) {
            throw std::invalid_argument(
                "problem '" + cfg.problem +
                "' has no exact solution at this gamma; converge modes need "
                "one (use mms, or example1 with gamma=1)");
        }
    }

    std::vector<double> hs, taus, linfs, l2s;
    for (int k = 0; k < cfg.levels; ++k) {
        const double scale = static_cast<double>(1 << k);
        const double h = refine_space ? cfg.h / scale : cfg.h;
        const double tau = refine_space ? cfg.tau : cfg.tau / scale;
        const BenchmarkProblem prob =
            make_problem(cfg.problem, cfg.gamma, h, tau, cfg.T, cfg.nu);
        const SolveResult result = solve(prob.spec);
        const SpatialGrid& grid = prob.spec.grid;
        std::vector<double> exact(grid.M + 1);
        for (std::size_t j = 0; j <= grid.M; ++j) {
            exact[j] = prob.exact(grid.knots[j], prob.spec.T);
        }
        const ErrorReport rep = error_norms(result.levels.back(), exact,
                                            grid.h);
        hs.push_back(grid.h);
        taus.push_back(tau);
        linfs.push_back(rep.l_inf);
        l2s.push_back(rep.l2);
    }

    std::ofstream out = open_output(cfg.output_path);
    out << "level,h,tau,l_inf,l2,order_inf,order_l2\n";
    std::cout << "level,h,tau,l_inf,l2,order_inf,order_l2\n";
    for (int k = 0; k < cfg.levels; ++k) {
        std::string line = std::to_string(k) + ',' + fmt(hs[k]) + ',' +
                           fmt(taus[k]) + ',' + fmt(linfs[k]) + ',' +
                           fmt(l2s[k]) + ',';
        if (k > 0) {
            line += fmt(std::log2(linfs[k - 1] / linfs[k])) + ',' +
                    fmt(std::log2(l2s[k - 1] / l2s[k]));
        } else {
            line += ",";
        }
        out << line << '\n';
        std::cout << line << '\n';
    }
    return 0;
}

int run_sweep(const RunConfig& cfg) {
    const double gammas[] = {0.2, 0.5, 0.8};
    std::vector<std::future<std::string>> jobs;
    for (double g : gammas) {
        jobs.push_back(std::async(std::launch::async, [&cfg, g] {
            const BenchmarkProblem prob =
                make_problem(cfg.problem, g, cfg.h, cfg.tau, cfg.T, cfg.nu);
            const std::string path = with_gamma_suffix(cfg.output_path, g);
            write_profile(prob, path);
            return path;
        }));
    }
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        std::cout << "sweep gamma=" << gammas[i] << " -> " << jobs[i].get()
                  << "\n";
    }
    return 0;
}

}  // namespace

int run(const RunConfig& config) {
    try {
        switch (config.mode) {
            case RunConfig::Mode::solve:
                return run_solve(config);
            case RunConfig::Mode::converge_space:
                return run_converge(config, true);
            case RunConfig::Mode::converge_time:
                return run_converge(config, false);
            case RunConfig::Mode::sweep_gamma:
                return run_sweep(config);
        }
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "run failed: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace tfbs
