#include "cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "qmap/pauli.h"
#include "qmap/region_math.h"
#include "qmap/serialize.h"

using namespace qmap;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "qmap");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string &name) {
    return (std::filesystem::temp_directory_path() / ("qmap_cli_test_" + name)).string();
}

std::vector<std::vector<std::string>> read_csv(const std::string &path) {
    std::ifstream f(path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(f, line)) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            cells.push_back(cell);
        }
        rows.push_back(cells);
    }
    return rows;
}

std::string slurp(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), {}};
}

int rank_of(const std::string &code) {
    static const std::map<std::string, int> ranks{{"N", 0}, {"P", 1}, {"S", 2}, {"CP", 3}};
    return ranks.at(code);
}

}  // namespace

TEST(cli, classify_examples) {
    Result r = run_cli({"classify", "--channel", "choi_map"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j["positive"].get<bool>());
    EXPECT_TRUE(j["schwarz"].get<bool>());
    EXPECT_FALSE(j["completely_positive"].get<bool>());

    r = run_cli({"classify", "--pauli-eigs", "-0.5,-0.5,-0.5"});
    ASSERT_EQ(r.code, 0) << r.err;
    j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j["schwarz"].get<bool>());
    EXPECT_FALSE(j["completely_positive"].get<bool>());

    r = run_cli({"classify", "--a", "1", "--b", "1", "--lambda", "1", "--mu", "0"});
    ASSERT_EQ(r.code, 0) << r.err;
    j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j["positive"].get<bool>());
    EXPECT_TRUE(j["schwarz"].get<bool>());
    EXPECT_TRUE(j["completely_positive"].get<bool>());
}

TEST(cli, classify_other_inputs) {
    Result r = run_cli({"classify", "--a11", "1", "--a12", "0.3", "--a21", "0", "--a22", "0.7", "--lambda", "0.5,0.1"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_FALSE(j["unital"].get<bool>());
    EXPECT_EQ(map_params_from_json(j["params"]), (MapParams{1, 0.3, 0, 0.7, cplx(0.5, 0.1), 0.0}));

    r = run_cli({"classify", "--pauli", "0.4,0.3,0.2,0.1"});
    ASSERT_EQ(r.code, 0) << r.err;
    j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["symmetry"], "orthogonal_only");

    r = run_cli({"classify", "--channel", "amplitude_damping", "--param", "0.5"});
    ASSERT_EQ(r.code, 0) << r.err;
    j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j["completely_positive"].get<bool>());
    EXPECT_TRUE(j["trace_preserving"].get<bool>());
}

TEST(cli, usage_errors_exit_2) {
    for (const auto &args : std::vector<std::vector<std::string>>{
             {},
             {"bogus"},
             {"classify"},
             {"classify", "--a", "0.5"},
             {"classify", "--a", "0.5", "--b", "0.5", "--channel", "choi_map"},
             {"classify", "--a", "0.5", "--b", "0.5", "--lambda", "x"},
             {"classify", "--a", "1.5", "--b", "0.5"},
             {"classify", "--channel", "nope"},
             {"classify", "--channel", "amplitude_damping", "--param", "2"},
             {"classify", "--pauli", "0.5,0.5"},
             {"classify", "--pauli", "0.5,0.5,0.5,0.5"},
             {"classify", "--pauli-eigs", "1,2,3", "--mu", "0.1"},
             {"scan", "--a", "0.5", "--b", "0.5", "--grid", "1", "--out", temp_path("g1.csv")},
             {"scan", "--a", "0.5", "--b", "0.5", "--out", "/nonexistent-dir/x.csv"},
             {"volume", "--samples", "9999"},
             {"verify", "--sweep", "other"},
             {"verify", "--sweep", "unital", "--budget", "10"},
             {"surface", "--out", "/nonexistent-dir/x.csv"},
         }) {
        std::vector<std::string> a = args;
        Result r = run_cli(a);
        EXPECT_EQ(r.code, 2) << (a.empty() ? "" : a[0]) << " " << r.out;
        EXPECT_FALSE(r.err.empty());
        EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1) << r.err;
    }
    EXPECT_EQ(run_cli({"--help"}).code, 0);
    EXPECT_EQ(run_cli({"scan", "--help"}).code, 0);
}

TEST(cli, scan_unital_geometry) {
    std::string path = temp_path("scan.csv");
    Result r = run_cli({"scan", "--a", "0.5", "--b", "0.5", "--grid", "101", "--out", path});
    ASSERT_EQ(r.code, 0) << r.err;
    auto rows = read_csv(path);
    ASSERT_EQ(rows.size(), 101u * 101u + 1);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"lambda", "mu", "class"}));
    for (size_t k = 1; k < rows.size(); k++) {
        double l = std::stod(rows[k][0]), m = std::stod(rows[k][1]);
        const std::string &c = rows[k][2];
        // a = b = 1/2: Schwarz is the disc of radius 1/sqrt(2), CP the square [0, 1/2]^2.
        double rr = l * l + m * m;
        if (std::abs(rr - 0.5) > 1e-9) {
            ASSERT_EQ(rank_of(c) >= 2, rr < 0.5) << l << " " << m;
        }
        if (std::abs(l - 0.5) > 1e-9 && std::abs(m - 0.5) > 1e-9) {
            ASSERT_EQ(c == "CP", l < 0.5 && m < 0.5) << l << " " << m;
        }
    }
    std::filesystem::remove(path);
}

TEST(cli, scan_pauli_circle) {
    std::string path = temp_path("pauli.csv");
    Result r = run_cli({"scan", "--pauli", "--fix-a", "0.5", "--grid", "121", "--out", path});
    ASSERT_EQ(r.code, 0) << r.err;
    auto rows = read_csv(path);
    ASSERT_EQ(rows.size(), 121u * 121u + 1);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"p0", "p1", "class"}));
    for (size_t k = 1; k < rows.size(); k++) {
        double p0 = std::stod(rows[k][0]), p1 = std::stod(rows[k][1]);
        double d2 = (p0 - 0.25) * (p0 - 0.25) + (p1 - 0.25) * (p1 - 0.25);
        if (std::abs(d2 - 1.0 / 8) > 1e-9) {
            ASSERT_EQ(rank_of(rows[k][2]) >= 2, d2 < 1.0 / 8) << p0 << " " << p1;
        }
    }
    std::filesystem::remove(path);
}

TEST(cli, scan_nesting_per_row) {
    std::string path = temp_path("nest.csv");
    Result r = run_cli({"scan", "--a", "0.3", "--b", "0.9", "--grid", "64", "--out", path, "--lambda-max", "1.2",
                        "--mu-max", "1.2"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto rows = read_csv(path);
    // Along each row (fixed |lambda|, increasing |mu|) the class never improves.
    for (size_t i = 0; i < 64; i++) {
        int prev = 3;
        for (size_t k = 0; k < 64; k++) {
            int cur = rank_of(rows[1 + i * 64 + k][2]);
            ASSERT_LE(cur, prev);
            prev = cur;
        }
    }
    std::filesystem::remove(path);
}

TEST(cli, volume_deterministic) {
    Result a = run_cli({"volume", "--samples", "100000", "--seed", "11"});
    Result b = run_cli({"volume", "--samples", "100000", "--seed", "11", "--workers", "3"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    auto j = nlohmann::json::parse(a.out);
    EXPECT_EQ(j["v_pos"], 8.0);
    EXPECT_EQ(j["n"], 100000);
    EXPECT_EQ(j["seed"], 11);

    setenv("QMAP_SEED", "11", 1);
    Result c = run_cli({"volume", "--samples", "100000"});
    unsetenv("QMAP_SEED");
    EXPECT_EQ(c.out, a.out);
    setenv("QMAP_SEED", "abc", 1);
    EXPECT_EQ(run_cli({"volume", "--samples", "100000"}).code, 2);
    unsetenv("QMAP_SEED");
}

TEST(cli, volume_golden) {
    // Fixed seed, fixed algorithm: the counts are part of the output contract.
    Result r = run_cli({"volume", "--samples", "10000", "--seed", "1"});
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    VolumeEstimate v = estimate_volumes(10000, 1, 1, kernels::Isa::Scalar);
    EXPECT_EQ(j["counts"]["schwarz"], v.counts.schwarz);
    EXPECT_EQ(j["counts"]["cp"], v.counts.cp);
    EXPECT_EQ(j["counts"]["positive"], 10000);
}

TEST(cli, verify_sweeps) {
    for (std::string kind : {"unital", "nonunital", "pauli"}) {
        Result r = run_cli({"verify", "--sweep", kind, "--n", "50", "--seed", "3", "--budget", "3000"});
        EXPECT_EQ(r.code, 0) << kind << " " << r.out << r.err;
        auto j = nlohmann::json::parse(r.out);
        EXPECT_EQ(j["n"], 50);
        EXPECT_TRUE(j["disagreements"].empty());
        EXPECT_EQ(j["sweep"], kind);
    }
}

TEST(cli, surface) {
    std::string path = temp_path("surface.csv");
    std::string vpath = temp_path("surface_vertices.csv");
    Result r = run_cli({"surface", "--grid", "101", "--out", path});
    ASSERT_EQ(r.code, 0) << r.err;
    auto rows = read_csv(path);
    ASSERT_EQ(rows.size(), 101u * 101u + 1);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"l1", "l2", "l3_plus", "l3_minus"}));
    for (size_t k = 1; k < rows.size(); k++) {
        double l1 = std::stod(rows[k][0]), l2 = std::stod(rows[k][1]);
        for (int branch : {2, 3}) {
            double l3 = std::stod(rows[k][branch]);
            ASSERT_NEAR(pauli_slacks(l1, l2, l3).fas, 0, 1e-8) << l1 << " " << l2;
        }
        if (std::abs(l1) == 1 && std::abs(l2) == 1) {
            EXPECT_EQ(std::stod(rows[k][2]), l1 * l2);
            EXPECT_EQ(std::stod(rows[k][3]), l1 * l2);
        }
    }
    auto verts = read_csv(vpath);
    ASSERT_EQ(verts.size(), 5u);
    for (size_t k = 0; k < 4; k++) {
        for (size_t c = 0; c < 3; c++) {
            EXPECT_EQ(std::stod(verts[k + 1][c]), kTetrahedronVertices[k][c]);
        }
    }
    std::string first = slurp(path);
    ASSERT_EQ(run_cli({"surface", "--grid", "101", "--out", path}).code, 0);
    EXPECT_EQ(slurp(path), first);
    std::filesystem::remove(path);
    std::filesystem::remove(vpath);
}
