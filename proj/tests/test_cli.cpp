#include "support.hpp"

#include "fivefour/cli.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using namespace fivefour;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Scratch directory holding a two-court synthetic vote file.
struct Workspace {
    fs::path dir;
    std::string votes;

    Workspace() {
        dir = fs::temp_directory_path() / ("fivefour_cli_" + std::to_string(std::rand()));
        fs::remove_all(dir);
        fs::create_directories(dir);
        std::mt19937_64 rng(31);
        const auto ideal = testing::random_points(rng);
        auto cases = testing::spatial_cases(ideal, 80, 2001, 2, "S", 5);
        auto more = testing::spatial_cases(ideal, 30, 2003, 1, "T", 6);
        cases.insert(cases.end(), more.begin(), more.end());
        cases.push_back({"gap", 2001, "S", {2, 2, 2, 2, 2, 1, 1, 0, 1}});
        votes = (dir / "votes.csv").string();
        std::ofstream(votes) << testing::to_csv(testing::letter_roster(), cases);
    }
    ~Workspace() { fs::remove_all(dir); }
};

}  // namespace

TEST_CASE("unknown or missing subcommand prints usage and exits 2") {
    auto r = run({"bogus"});
    CHECK(r.code == cli::kExitConfig);
    CHECK(r.err.find("Usage") != std::string::npos);
    CHECK(run({}).code == cli::kExitConfig);
    CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("missing input exits 2 and writes nothing") {
    Workspace w;
    const auto out = w.dir / "out";
    const auto r = run({"all", "--input", (w.dir / "nope.csv").string(), "--out", out.string()});
    CHECK(r.code == cli::kExitConfig);
    CHECK_FALSE(fs::exists(out));
}

TEST_CASE("configuration errors exit 2") {
    Workspace w;
    CHECK(run({"mds", "--input", w.votes, "--court", "S", "--column", "majority=nothere"}).code == cli::kExitConfig);
    CHECK(run({"mds", "--input", w.votes, "--court", "S", "--dim", "3"}).code == cli::kExitConfig);
    CHECK(run({"mds", "--input", w.votes, "--court", "S", "--epsilon", "-1"}).code == cli::kExitConfig);
    CHECK(run({"mds", "--input", w.votes, "--court", "nope"}).code == cli::kExitConfig);
    CHECK(run({"mds", "--input", w.votes}).code == cli::kExitConfig);
    CHECK(run({"render", "--input", w.votes, "--court", "S", "--figure", "pie"}).code == cli::kExitConfig);
}

TEST_CASE("a roster other than nine is a data error, exit 1") {
    Workspace w;
    std::ofstream(w.votes, std::ios::app) << "x,2001,S,99,JZ,2\n";
    const auto r = run({"mds", "--input", w.votes, "--court", "S"});
    CHECK(r.code == cli::kExitData);
    CHECK(r.err.find("10 voting justices") != std::string::npos);
}

TEST_CASE("mds output is deterministic and warnings carry the WARN: prefix") {
    Workspace w;
    const auto a = run({"mds", "--input", w.votes, "--court", "S", "--dim", "1"});
    const auto b = run({"mds", "--input", w.votes, "--court", "S", "--dim", "1"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"x1\"") != std::string::npos);
    CHECK(a.out.find("\"x2\"") == std::string::npos);
    CHECK(a.err.find("WARN: ") == 0);
    CHECK(a.err.find("excluded 1") != std::string::npos);
    const auto csv = run({"mds", "--input", w.votes, "--court", "S", "--format", "csv"});
    CHECK(csv.out.rfind("justice_name,x1,x2\n", 0) == 0);
}

TEST_CASE("the input path can come from the environment") {
    Workspace w;
    setenv("FIVEFOUR_DATA", w.votes.c_str(), 1);
    const auto r = run({"ingest"});
    unsetenv("FIVEFOUR_DATA");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"natural_courts\"") != std::string::npos);
}

TEST_CASE("config file values apply under command-line flags") {
    Workspace w;
    const auto cfg = (w.dir / "run.cfg").string();
    std::ofstream(cfg) << "# batch settings\ninput = " << w.votes << "\ncourt = T\nformat = csv\n";
    const auto from_cfg = run({"report", "--config", cfg, "--no-terms"});
    REQUIRE(from_cfg.code == 0);
    CHECK(from_cfg.out.find("\nT,") != std::string::npos);
    const auto flag_wins = run({"report", "--config", cfg, "--court", "S", "--no-terms"});
    CHECK(flag_wins.out.find("\nS,") != std::string::npos);
    CHECK(flag_wins.out.find("\nT,") == std::string::npos);
    std::ofstream(cfg, std::ios::app) << "colour = blue\n";
    CHECK(run({"report", "--config", cfg}).code == cli::kExitConfig);
}

TEST_CASE("report sweeps every court when none is selected") {
    Workspace w;
    const auto r = run({"report", "--input", w.votes, "--format", "csv", "--no-terms"});
    REQUIRE(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 3);
    CHECK(r.out.find("\nS,80,") != std::string::npos);
}

TEST_CASE("all writes the union of the single-command outputs") {
    Workspace w;
    const auto out = w.dir / "all";
    const auto r = run({"all", "--input", w.votes, "--out", out.string()});
    REQUIRE(r.code == 0);
    for (const char* f : {"report.csv", "report.json", "min_accuracy.svg", "term_mean_justices.json", "S_voronoi.json",
                          "S_ksets.json", "S_coalitions.json", "S_mds1.json", "S_mds2.json", "S_matrix.csv",
                          "S_voronoi.svg", "S_line.svg", "S_analysis.json", "T_voronoi.json"}) {
        CHECK_MESSAGE(fs::exists(out / f), f);
    }
    CHECK(slurp(out / "S_voronoi.json") == run({"voronoi", "--input", w.votes, "--court", "S"}).out);
    CHECK(slurp(out / "S_ksets.json") == run({"ksets", "--input", w.votes, "--court", "S"}).out);
    CHECK(slurp(out / "S_coalitions.json") == run({"coalitions", "--input", w.votes, "--court", "S"}).out);
    CHECK(slurp(out / "report.csv") == run({"report", "--input", w.votes, "--format", "csv"}).out);

    const auto again = w.dir / "again";
    run({"all", "--input", w.votes, "--out", again.string()});
    for (const auto& entry : fs::directory_iterator(out)) {
        CHECK(slurp(entry.path()) == slurp(again / entry.path().filename()));
    }
}

TEST_CASE("render and per-command SVG output") {
    Workspace w;
    const auto line = run({"render", "--input", w.votes, "--court", "S", "--figure", "line"});
    CHECK(line.code == 0);
    CHECK(line.out.find("<svg") != std::string::npos);
    const auto vor = run({"voronoi", "--input", w.votes, "--court", "S", "--format", "svg",
                          "--highlight", "JA,JB,JC,JD,JE"});
    CHECK(vor.code == 0);
    const auto circles = run({"fifth-vote", "--input", w.votes, "--court", "S", "--format", "svg",
                              "--coalition", "JA,JB,JC,JD,JE"});
    CHECK(circles.code == 0);
    CHECK(circles.out.find("influence-majority") != std::string::npos);
    CHECK(run({"fifth-vote", "--input", w.votes, "--court", "S", "--format", "svg", "--coalition", "JA,JB"}).code ==
          cli::kExitConfig);
    CHECK(run({"render", "--input", w.votes, "--figure", "min-accuracy"}).code == 0);
    CHECK(run({"mean-justice", "--input", w.votes, "--court", "S"}).out.find("\"terms\"") != std::string::npos);
}
