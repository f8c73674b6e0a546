#include "cli.h"

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "qmap/classify.h"
#include "qmap/docmap.h"
#include "qmap/errors.h"
#include "qmap/kernels.h"
#include "qmap/oracle.h"
#include "qmap/pauli.h"
#include "qmap/region_math.h"
#include "qmap/serialize.h"

namespace qmap::cli {

namespace {

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

std::vector<double> parse_list(const std::string &text, const std::string &flag) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        double v = 0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != item.size()) {
            throw UsageError(flag + ": '" + text + "' is not a comma-separated list of numbers");
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw UsageError(flag + ": empty value");
    }
    return out;
}

std::vector<double> parse_list(const std::string &text, const std::string &flag, size_t want) {
    std::vector<double> v = parse_list(text, flag);
    if (v.size() != want) {
        throw UsageError(flag + " expects " + std::to_string(want) + " comma-separated values");
    }
    return v;
}

cplx parse_complex(const std::string &text, const std::string &flag) {
    std::vector<double> v = parse_list(text, flag);
    if (v.size() > 2) {
        throw UsageError(flag + " expects re or re,im");
    }
    return {v[0], v.size() == 2 ? v[1] : 0.0};
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v == 0 ? 0.0 : v);
    return buf;
}

std::ofstream open_output(const std::string &path) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw UsageError("cannot open '" + path + "' for writing");
    }
    return f;
}

void finish_output(std::ofstream &f, const std::string &path) {
    f.flush();
    if (!f) {
        throw UsageError("failed writing '" + path + "'");
    }
}

uint64_t resolve_seed(const std::optional<uint64_t> &flag, uint64_t fallback) {
    if (flag) {
        return *flag;
    }
    const char *env = std::getenv("QMAP_SEED");
    if (env == nullptr || *env == '\0') {
        return fallback;
    }
    char *end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || env[0] == '-') {
        throw UsageError(std::string("QMAP_SEED must be a non-negative integer, got '") + env + "'");
    }
    return v;
}

const char *class_code(uint8_t bits) {
    if (bits & kRegionCP) {
        return "CP";
    }
    if (bits & kRegionSchwarz) {
        return "S";
    }
    if (bits & kRegionPositive) {
        return "P";
    }
    return "N";
}

uint8_t class_bits(const Classification &c) {
    return static_cast<uint8_t>((c.positive ? kRegionPositive : 0) | (c.schwarz ? kRegionSchwarz : 0) |
                                (c.completely_positive ? kRegionCP : 0));
}

// ---- classify ----

struct ClassifyArgs {
    std::optional<double> a, b, a11, a12, a21, a22;
    std::string lambda = "0";
    std::string mu = "0";
    std::optional<std::string> channel;
    std::string params;
    std::optional<std::string> pauli;
    std::optional<std::string> pauli_eigs;
};

int cmd_classify(const ClassifyArgs &args, bool phases_given, std::ostream &out) {
    bool unital = args.a || args.b;
    bool general = args.a11 || args.a12 || args.a21 || args.a22;
    int modes = int(unital) + int(general) + int(args.channel.has_value()) + int(args.pauli.has_value()) +
                int(args.pauli_eigs.has_value());
    if (modes != 1) {
        throw UsageError(
            "classify needs exactly one of: --a/--b, --a11..--a22, --channel, --pauli, --pauli-eigs");
    }
    if (phases_given && !unital && !general) {
        throw UsageError("--lambda/--mu only apply with --a/--b or --a11..--a22");
    }
    if (!args.params.empty() && !args.channel) {
        throw UsageError("--param requires --channel");
    }

    nlohmann::json j;
    MapParams p;
    Classification c;
    if (unital) {
        if (!args.a || !args.b) {
            throw UsageError("--a and --b must be given together");
        }
        if (!(*args.a >= 0 && *args.a <= 1 && *args.b >= 0 && *args.b <= 1)) {
            throw UsageError("--a and --b must lie in [0, 1]");
        }
        p = MapParams::unital(*args.a, *args.b, parse_complex(args.lambda, "--lambda"), parse_complex(args.mu, "--mu"));
        j["input"] = "unital";
        c = classify(p);
    } else if (general) {
        if (!(args.a11 && args.a12 && args.a21 && args.a22)) {
            throw UsageError("--a11, --a12, --a21 and --a22 must be given together");
        }
        p = {*args.a11, *args.a12, *args.a21, *args.a22, parse_complex(args.lambda, "--lambda"),
             parse_complex(args.mu, "--mu")};
        j["input"] = "general";
        c = classify(p);
    } else if (args.channel) {
        std::vector<double> values;
        if (!args.params.empty()) {
            values = parse_list(args.params, "--param");
        }
        p = named_channel(*args.channel, values);
        j["input"] = "channel";
        j["channel"] = *args.channel;
        c = classify(p);
    } else {
        PauliEigenvalues lam;
        if (args.pauli) {
            auto v = parse_list(*args.pauli, "--pauli", 4);
            PauliParams pp{{v[0], v[1], v[2], v[3]}};
            lam = to_eigenvalues(pp);
            p = to_map_params(pp);
            j["input"] = "pauli";
        } else {
            auto v = parse_list(*args.pauli_eigs, "--pauli-eigs", 3);
            lam = {{v[0], v[1], v[2]}};
            p = to_map_params(from_eigenvalues(lam));
            j["input"] = "pauli_eigs";
        }
        j["eigenvalues"] = {lam.lam[0], lam.lam[1], lam.lam[2]};
        c = classify_pauli(lam);
    }

    nlohmann::json cj = to_json(c);
    for (auto it = cj.begin(); it != cj.end(); ++it) {
        j[it.key()] = it.value();
    }
    j["trace_preserving"] = is_trace_preserving(p);
    j["symmetry"] = std::string(to_string(symmetry_type(p)));
    if (!c.unital && p.min_a() >= -kSlackTol) {
        j["dual_schwarz"] = is_dual_generalized_schwarz(p).holds;
    }
    j["params"] = to_json(p);
    out << j.dump() << "\n";
    return kExitOk;
}

// ---- scan ----

struct ScanArgs {
    std::optional<double> a, b;
    int grid = 256;
    std::string out;
    double lambda_max = 1;
    double mu_max = 1;
    bool pauli = false;
    std::optional<double> fix_a;
    double p_min = -0.5;
    double p_max = 1;
};

int cmd_scan(const ScanArgs &args, std::ostream &out) {
    if (args.grid < 2) {
        throw UsageError("--grid must be at least 2");
    }
    const int n = args.grid;
    auto axis = [n](double lo, double hi, int k) { return lo + (hi - lo) * k / (n - 1); };

    if (args.pauli) {
        if (!args.fix_a || args.a || args.b) {
            throw UsageError("--pauli scans take --fix-a and no --a/--b");
        }
        double a = *args.fix_a;
        if (!(a >= 0 && a <= 1)) {
            throw UsageError("--fix-a must lie in [0, 1]");
        }
        if (!(args.p_max > args.p_min)) {
            throw UsageError("--p-max must exceed --p-min");
        }
        std::ofstream f = open_output(args.out);
        f << "p0,p1,class\n";
        for (int i = 0; i < n; i++) {
            double p0 = axis(args.p_min, args.p_max, i);
            for (int k = 0; k < n; k++) {
                double p1 = axis(args.p_min, args.p_max, k);
                // p3 = a - p0, p2 = 1 - a - p1
                PauliEigenvalues lam{{2 * p0 + 2 * p1 - 1, 2 * p0 - 2 * p1 + 1 - 2 * a, 2 * a - 1}};
                f << fmt(p0) << ',' << fmt(p1) << ',' << class_code(class_bits(classify_pauli(lam))) << '\n';
            }
        }
        finish_output(f, args.out);
        out << nlohmann::json{{"out", args.out}, {"rows", uint64_t(n) * uint64_t(n)}, {"fix_a", a}}.dump() << "\n";
        return kExitOk;
    }

    if (!args.a || !args.b) {
        throw UsageError("scan needs --a and --b (or --pauli --fix-a)");
    }
    double a = *args.a, b = *args.b;
    if (!(a >= 0 && a <= 1 && b >= 0 && b <= 1)) {
        throw UsageError("--a and --b must lie in [0, 1]");
    }
    if (!(args.lambda_max > 0 && args.mu_max > 0)) {
        throw UsageError("--lambda-max and --mu-max must be positive");
    }
    std::vector<double> lam(n), mu(n);
    std::vector<uint8_t> codes(n);
    std::ofstream f = open_output(args.out);
    f << "lambda,mu,class\n";
    for (int k = 0; k < n; k++) {
        mu[k] = axis(0, args.mu_max, k);
    }
    for (int i = 0; i < n; i++) {
        double l = axis(0, args.lambda_max, i);
        std::fill(lam.begin(), lam.end(), l);
        kernels::unital_region_codes(a, b, lam, mu, codes, kSlackTol);
        for (int k = 0; k < n; k++) {
            f << fmt(l) << ',' << fmt(mu[k]) << ',' << class_code(codes[k]) << '\n';
        }
    }
    finish_output(f, args.out);
    out << nlohmann::json{{"out", args.out}, {"rows", uint64_t(n) * uint64_t(n)}, {"a", a}, {"b", b}}.dump() << "\n";
    return kExitOk;
}

// ---- volume ----

struct VolumeArgs {
    uint64_t samples = 10000000;
    std::optional<uint64_t> seed;
    unsigned workers = 0;
};

int cmd_volume(const VolumeArgs &args, std::ostream &out) {
    if (args.samples < 10000) {
        throw UsageError("--samples must be at least 10000");
    }
    unsigned workers = args.workers ? args.workers : std::max(1u, std::thread::hardware_concurrency());
    VolumeEstimate v = estimate_volumes(args.samples, resolve_seed(args.seed, 1), workers);
    out << to_json(v).dump() << "\n";
    return kExitOk;
}

// ---- verify ----

struct VerifyArgs {
    std::string sweep;
    uint64_t n = 1000;
    std::optional<uint64_t> seed;
    int budget = 10000;
};

int cmd_verify(const VerifyArgs &args, std::ostream &out) {
    SweepKind kind;
    try {
        kind = parse_sweep_kind(args.sweep);
    } catch (const InvalidParams &) {
        throw UsageError("--sweep must be one of unital, nonunital, pauli");
    }
    if (args.budget < kSchwarzScanEvals || args.budget < kBlockScanEvals) {
        throw UsageError("--budget must be at least " + std::to_string(kSchwarzScanEvals));
    }
    AgreementReport r = agreement_sweep(kind, args.n, resolve_seed(args.seed, 42), args.budget);
    out << to_json(r).dump() << "\n";
    return r.disagreements.empty() ? kExitOk : kExitDisagreement;
}

// ---- surface ----

struct SurfaceArgs {
    int grid = 101;
    std::string out;
    std::string vertices;
};

std::string default_vertices_path(const std::string &out) {
    std::string stem = out;
    if (stem.size() > 4 && stem.compare(stem.size() - 4, 4, ".csv") == 0) {
        stem.resize(stem.size() - 4);
    }
    return stem + "_vertices.csv";
}

int cmd_surface(const SurfaceArgs &args, std::ostream &out) {
    if (args.grid < 2) {
        throw UsageError("--grid must be at least 2");
    }
    const int n = args.grid;
    std::string vpath = args.vertices.empty() ? default_vertices_path(args.out) : args.vertices;
    std::ofstream f = open_output(args.out);
    f << "l1,l2,l3_plus,l3_minus\n";
    for (int i = 0; i < n; i++) {
        double l1 = -1 + 2.0 * i / (n - 1);
        for (int k = 0; k < n; k++) {
            double l2 = -1 + 2.0 * k / (n - 1);
            auto [lp, lm] = schwarz_boundary_lambda3(l1, l2);
            f << fmt(l1) << ',' << fmt(l2) << ',' << fmt(lp) << ',' << fmt(lm) << '\n';
        }
    }
    finish_output(f, args.out);

    std::ofstream vf = open_output(vpath);
    vf << "l1,l2,l3\n";
    for (const auto &v : kTetrahedronVertices) {
        vf << fmt(v[0]) << ',' << fmt(v[1]) << ',' << fmt(v[2]) << '\n';
    }
    finish_output(vf, vpath);
    out << nlohmann::json{{"out", args.out}, {"vertices", vpath}, {"rows", uint64_t(n) * uint64_t(n)}}.dump()
        << "\n";
    return kExitOk;
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Qubit maps with diagonal unitary/orthogonal symmetry: classification and verification"};
    app.name("qmap");
    app.require_subcommand(1);

    ClassifyArgs ca;
    auto *classify_cmd = app.add_subcommand("classify", "Classify one map; prints JSON");
    classify_cmd->add_option("--a", ca.a, "Unital map: a = a11");
    classify_cmd->add_option("--b", ca.b, "Unital map: b = a22");
    classify_cmd->add_option("--a11", ca.a11, "General map entry a11");
    classify_cmd->add_option("--a12", ca.a12, "General map entry a12");
    classify_cmd->add_option("--a21", ca.a21, "General map entry a21");
    classify_cmd->add_option("--a22", ca.a22, "General map entry a22");
    auto *lam_opt = classify_cmd->add_option("--lambda", ca.lambda, "lambda as re[,im]");
    auto *mu_opt = classify_cmd->add_option("--mu", ca.mu, "mu as re[,im]");
    classify_cmd->add_option("--channel", ca.channel, "Named channel")
        ->check(CLI::IsMember(named_channel_names()));
    classify_cmd->add_option("--param", ca.params, "Channel parameters, comma-separated");
    classify_cmd->add_option("--pauli", ca.pauli, "Pauli coefficients p0,p1,p2,p3");
    classify_cmd->add_option("--pauli-eigs", ca.pauli_eigs, "Pauli eigenvalues l1,l2,l3");

    ScanArgs sa;
    auto *scan_cmd = app.add_subcommand("scan", "Region map on a grid; writes CSV");
    scan_cmd->add_option("--a", sa.a, "a = a11 of the unital family");
    scan_cmd->add_option("--b", sa.b, "b = a22 of the unital family");
    scan_cmd->add_option("--grid", sa.grid, "Points per axis")->capture_default_str();
    scan_cmd->add_option("--out", sa.out, "Output CSV path")->required();
    scan_cmd->add_option("--lambda-max", sa.lambda_max, "Upper end of the |lambda| axis")->capture_default_str();
    scan_cmd->add_option("--mu-max", sa.mu_max, "Upper end of the |mu| axis")->capture_default_str();
    scan_cmd->add_flag("--pauli", sa.pauli, "Scan the Pauli (p0, p1) plane instead");
    scan_cmd->add_option("--fix-a", sa.fix_a, "Pauli scan: a = p0 + p3");
    scan_cmd->add_option("--p-min", sa.p_min, "Pauli scan: lower end of both axes")->capture_default_str();
    scan_cmd->add_option("--p-max", sa.p_max, "Pauli scan: upper end of both axes")->capture_default_str();

    VolumeArgs va;
    auto *volume_cmd = app.add_subcommand("volume", "Monte Carlo volumes of the Pauli regions; prints JSON");
    volume_cmd->add_option("--samples", va.samples, "Number of samples (>= 10000)")->capture_default_str();
    volume_cmd->add_option("--seed", va.seed, "Seed (default: $QMAP_SEED or 1)");
    volume_cmd->add_option("--workers", va.workers, "Worker threads (0 = all cores)");

    VerifyArgs ra;
    auto *verify_cmd = app.add_subcommand("verify", "Analytic vs numerical agreement sweep; prints JSON");
    verify_cmd->add_option("--sweep", ra.sweep, "unital, nonunital or pauli")->required();
    verify_cmd->add_option("--n", ra.n, "Number of sampled maps")->capture_default_str();
    verify_cmd->add_option("--seed", ra.seed, "Seed (default: $QMAP_SEED or 42)");
    verify_cmd->add_option("--budget", ra.budget, "Objective evaluations per search")->capture_default_str();

    SurfaceArgs fa;
    auto *surface_cmd = app.add_subcommand("surface", "Mesh of the Pauli Schwarz boundary; writes CSV");
    surface_cmd->add_option("--grid", fa.grid, "Points per axis")->capture_default_str();
    surface_cmd->add_option("--out", fa.out, "Output CSV path")->required();
    surface_cmd->add_option("--vertices", fa.vertices, "Tetrahedron vertex CSV (default: <out>_vertices.csv)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e, out, err);
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (classify_cmd->parsed()) {
            return cmd_classify(ca, lam_opt->count() > 0 || mu_opt->count() > 0, out);
        }
        if (scan_cmd->parsed()) {
            return cmd_scan(sa, out);
        }
        if (volume_cmd->parsed()) {
            return cmd_volume(va, out);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(ra, out);
        }
        if (surface_cmd->parsed()) {
            return cmd_surface(fa, out);
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace qmap::cli
