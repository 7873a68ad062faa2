#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "tfbs/norms.hpp"

namespace fs = std::filesystem;

namespace {

std::string cli_path() {
    const char* p = std::getenv("TFBS_CLI");
    REQUIRE_MESSAGE(p != nullptr,
                    "TFBS_CLI must point at the built CLI binary");
    return p;
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("tfbs_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

RunResult run_cli(const TempDir& dir, const std::string& args) {
    const fs::path out_file = dir.path / "stdout.txt";
    const fs::path err_file = dir.path / "stderr.txt";
    const std::string cmd = "\"" + cli_path() + "\" " + args + " > " +
                            out_file.string() + " 2> " + err_file.string();
    const int rc = std::system(cmd.c_str());
    RunResult r;
    REQUIRE(rc != -1);
    if (WIFEXITED(rc)) r.exit_code = WEXITSTATUS(rc);
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    r.out = slurp(out_file);
    r.err = slurp(err_file);
    return r;
}

std::vector<std::vector<double>> read_csv(const fs::path& p,
                                          std::string* header = nullptr) {
    std::ifstream in(p);
    REQUIRE_MESSAGE(in.good(), "missing CSV " << p.string());
    std::string line;
    std::getline(in, line);
    if (header) *header = line;
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            row.push_back(cell.empty() ? NAN : std::strtod(cell.c_str(),
                                                           nullptr));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("solve writes a profile whose norms round-trip") {
    TempDir dir;
    const fs::path csv = dir.path / "example1.csv";
    const RunResult r = run_cli(
        dir, "solve --problem example1 --gamma 1.0 --h 0.01 --tau 0.01 "
             "--T 1.0 --out " + csv.string());
    CHECK(r.exit_code == 0);

    std::string header;
    const auto rows = read_csv(csv, &header);
    CHECK(header == "x,u_numeric,u_exact,abs_error");
    REQUIRE(rows.size() == 601);
    REQUIRE(rows.front().size() == 4);
    CHECK(rows.front()[0] == -3.0);
    CHECK(rows.back()[0] == 3.0);

    // re-read the profile and recompute: reported numbers must match
    std::vector<double> num, exact;
    for (const auto& row : rows) {
        num.push_back(row[1]);
        exact.push_back(row[2]);
        CHECK(row[3] == std::fabs(row[1] - row[2]));
    }
    const auto rep = tfbs::error_norms(num, exact, 0.01);
    CHECK(r.out.find("l_inf=" + fmt17(rep.l_inf)) != std::string::npos);
    CHECK(r.out.find("l2=" + fmt17(rep.l2)) != std::string::npos);
    CHECK(rep.l_inf < 1e-2);
}

TEST_CASE("solve without an oracle writes two columns") {
    TempDir dir;
    const fs::path csv = dir.path / "frac.csv";
    const RunResult r = run_cli(
        dir, "solve --problem example1 --gamma 0.5 --h 0.05 --tau 0.05 "
             "--T 0.5 --out " + csv.string());
    CHECK(r.exit_code == 0);
    std::string header;
    const auto rows = read_csv(csv, &header);
    CHECK(header == "x,u_numeric");
    CHECK(rows.size() == 121);
    CHECK(rows.front().size() == 2);
    CHECK(r.out.find("l_inf=") == std::string::npos);
}

TEST_CASE("converge-time reports observed orders") {
    TempDir dir;
    const fs::path csv = dir.path / "orders.csv";
    const RunResult r = run_cli(
        dir, "converge-time --problem mms --gamma 0.5 --h 0.03125 "
             "--tau 0.05 --T 0.2 --levels 3 --out " + csv.string());
    CHECK(r.exit_code == 0);
    std::string header;
    const auto rows = read_csv(csv, &header);
    CHECK(header == "level,h,tau,l_inf,l2,order_inf,order_l2");
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].size() >= 5);
    for (std::size_t k = 1; k < rows.size(); ++k) {
        REQUIRE(rows[k].size() == 7);
        CHECK(rows[k][2] == doctest::Approx(0.05 / std::pow(2.0, k)));
        CHECK(std::isfinite(rows[k][5]));
        CHECK(rows[k][5] > 0.0);  // error decreases under tau refinement
    }
    CHECK(rows[1][3] < rows[0][3]);
}

TEST_CASE("converge-space needs an exact solution") {
    TempDir dir;
    const RunResult r = run_cli(
        dir, "converge-space --problem example2 --gamma 0.5 --h 0.1 "
             "--tau 0.05 --T 0.2 --out " + (dir.path / "x.csv").string());
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("config error") != std::string::npos);
}

TEST_CASE("sweep-gamma writes three distinct profiles") {
    TempDir dir;
    const fs::path csv = dir.path / "sweep.csv";
    const RunResult r = run_cli(
        dir, "sweep-gamma --problem example2 --h 0.05 --tau 0.05 --T 0.5 "
             "--out " + csv.string());
    CHECK(r.exit_code == 0);
    const auto p02 = read_csv(dir.path / "sweep_gamma0.2.csv");
    const auto p05 = read_csv(dir.path / "sweep_gamma0.5.csv");
    const auto p08 = read_csv(dir.path / "sweep_gamma0.8.csv");
    REQUIRE(p02.size() == 121);
    REQUIRE(p05.size() == 121);
    REQUIRE(p08.size() == 121);
    double dist = 0.0;
    for (std::size_t j = 0; j < p02.size(); ++j) {
        dist = std::max(dist, std::fabs(p02[j][1] - p08[j][1]));
    }
    CHECK(dist > 1e-4);  // fronts at gamma=0.2 vs 0.8 differ materially
}

TEST_CASE("config file provides defaults, flags override") {
    TempDir dir;
    const fs::path cfg = dir.path / "run.cfg";
    {
        std::ofstream out(cfg);
        out << "problem=mms\n"
            << "gamma=0.5\n"
            << "h=0.125\n"
            << "tau=0.05\n"
            << "T=0.2\n";
    }
    const fs::path csv = dir.path / "mms.csv";
    const RunResult base = run_cli(dir, "solve --config " + cfg.string() +
                                            " --out " + csv.string());
    CHECK(base.exit_code == 0);
    CHECK(base.out.find("gamma=0.5") != std::string::npos);

    const RunResult ov = run_cli(dir, "solve --config " + cfg.string() +
                                          " --gamma 0.8 --out " +
                                          csv.string());
    CHECK(ov.exit_code == 0);
    CHECK(ov.out.find("gamma=0.8") != std::string::npos);
}

TEST_CASE("configuration errors exit with code 2") {
    TempDir dir;
    const std::string out = (dir.path / "x.csv").string();
    CHECK(run_cli(dir, "solve --problem nope --out " + out).exit_code == 2);
    CHECK(run_cli(dir, "solve --problem mms --gamma 1.5 --out " + out)
              .exit_code == 2);
    CHECK(run_cli(dir, "solve --problem mms").exit_code == 2);  // no --out
    CHECK(run_cli(dir, "frobnicate --problem mms --out " + out).exit_code ==
          2);
    // h does not divide the domain span
    CHECK(run_cli(dir, "solve --problem mms --h 0.3 --tau 0.1 --T 0.2 "
                       "--out " + out).exit_code == 2);
}

}  // TEST_SUITE
