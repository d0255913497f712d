// branchlaw: invariant polynomials, dual Hahn recurrences, Plancherel
// measures with point masses, and Monte Carlo checks for the branching
// decomposition machinery, as JSON/CSV reports.
//
// Exit codes: 0 success (all verifications passed), 1 verification failure,
// 2 usage error.

#include "branchlaw/serialize.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

using namespace branchlaw;

namespace {

constexpr int kSchemaVersion = 1;

struct GlobalConfig {
    std::uint64_t seed = 0;
    bool seed_from_env = false;
    int threads = 0;
};

GlobalConfig read_env() {
    GlobalConfig cfg;
    if (const char* s = std::getenv("BRANCHLAW_SEED")) {
        cfg.seed = std::strtoull(s, nullptr, 10);
        cfg.seed_from_env = true;
    }
    if (const char* t = std::getenv("BRANCHLAW_THREADS"))
        cfg.threads = static_cast<int>(std::strtol(t, nullptr, 10));
    if (cfg.threads <= 0)
        cfg.threads = static_cast<int>(std::thread::hardware_concurrency());
    return cfg;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void emit(const Json& doc, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << doc.dump(2) << "\n";
}

Json base_report(const GlobalConfig& cfg) {
    return Json{{"schema_version", kSchemaVersion}, {"threads", cfg.threads}};
}

std::vector<double> parse_csv_doubles(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
}

// accepts "p/q", integers, and decimal literals like "0.5" (exactly 1/2)
Rational parse_point_coordinate(const std::string& s) {
    const auto dot = s.find('.');
    if (dot == std::string::npos) return parse_rational(s);
    const std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    Rational denom = 1;
    for (size_t i = dot + 1; i < s.size(); ++i) denom *= 10;
    return Rational(BigInt(digits)) / denom;
}

int run_psi(int m, int k, std::optional<int> n, const std::string& eval_spec,
            const std::string& out_path, const GlobalConfig& cfg) {
    const EvenSymPoly psi = build_psi(m, k);
    Json doc = base_report(cfg);
    doc["m"] = m;
    doc["k"] = k;
    doc["psi"] = to_json(psi);
    if (n) {
        doc["n"] = *n;
        doc["norm_sq"] = to_string(psi_norm_sq(*n, m, k));
    }
    if (!eval_spec.empty()) {
        std::vector<Rational> x;
        {
            std::stringstream ss(eval_spec);
            std::string item;
            while (std::getline(ss, item, ',')) x.push_back(parse_point_coordinate(item));
        }
        if (static_cast<int>(x.size()) != m)
            throw CLI::ValidationError("--eval expects " + std::to_string(m) + " entries");
        const Rational value = evaluate(psi, x);
        doc["value"] = to_string(value);
        doc["value_float"] = to_double(value);
        if (n) {
            std::vector<double> xd;
            for (const auto& xi : x) xd.push_back(to_double(xi));
            doc["phi_value"] = phi_evaluate(*n, m, k, xd);
        }
    }
    emit(doc, out_path);
    return 0;
}

int run_hahn(int n, int m, int k, const std::string& out_path, const GlobalConfig& cfg) {
    const HahnParams p = hahn_params(n, m);
    const std::vector<Rational> s_coeffs = hahn_S_coeffs(k, p);
    const Rational tilde_norm = pochhammer(p.a + p.b, k) * pochhammer(p.a + p.c, k);
    const Rational ratio = alpha_ratio(n, m, k);

    auto coeff_strings = [](const std::vector<Rational>& cs, const Rational& scale) {
        Json arr = Json::array();
        for (const auto& c : cs) arr.push_back(to_string(c * scale));
        return arr;
    };

    Json doc = base_report(cfg);
    doc["n"] = n;
    doc["m"] = m;
    doc["k"] = k;
    doc["params"] = to_json(p);
    doc["S"] = coeff_strings(s_coeffs, Rational(1));
    doc["S_tilde"] = coeff_strings(s_coeffs, 1 / tilde_norm);
    // Gamma-free renormalised family St^alpha_k / alpha_0 = alpha_ratio * St_k
    doc["S_alpha_over_alpha0"] = coeff_strings(s_coeffs, ratio / tilde_norm);
    doc["alpha_sq_gamma_free"] = to_string(alpha_sq_gamma_free(n, m, k));
    doc["alpha"] = alpha(n, m, k);
    emit(doc, out_path);
    return 0;
}

int run_coeffs(int n, int m, int k_max, const std::string& out_path, const GlobalConfig& cfg) {
    Json doc = base_report(cfg);
    doc["n"] = n;
    doc["m"] = m;
    doc["k_max"] = k_max;
    Json table = Json::array();
    for (int k = 0; k <= k_max; ++k) {
        Json row = to_json(jacobi_coeffs(n, m, k));
        row["k"] = k;
        table.push_back(std::move(row));
    }
    doc["coeffs"] = std::move(table);
    emit(doc, out_path);
    return 0;
}

int run_measure(int n, int m, const std::string& grid_spec, const std::string& csv_path,
                const std::string& out_path, const GlobalConfig& cfg) {
    const HahnParams p = hahn_params(n, m);
    const PlancherelMeasure mu = make_measure(p);

    double x_min = 0.05, x_max = 10.0;
    int steps = 200;
    if (!grid_spec.empty()) {
        std::stringstream ss(grid_spec);
        std::string a, b, c;
        if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, c, ':'))
            throw CLI::ValidationError("--grid expects x_min:x_max:steps");
        x_min = std::stod(a);
        x_max = std::stod(b);
        steps = std::stoi(c);
        if (!(x_min > 0.0) || !(x_max > x_min) || steps < 1)
            throw CLI::ValidationError("--grid requires 0 < x_min < x_max and steps >= 1");
    }

    if (!csv_path.empty()) {
        std::ofstream csv(csv_path, std::ios::binary);
        if (!csv) throw std::runtime_error("cannot open csv file: " + csv_path);
        csv << "x,density\n";
        for (int i = 0; i <= steps; ++i) {
            const double x = x_min + (x_max - x_min) * i / steps;
            csv << format_double(x) << "," << format_double(density(x, p)) << "\n";
        }
    }

    Json doc = base_report(cfg);
    doc["n"] = n;
    doc["m"] = m;
    doc["params"] = to_json(p);
    doc["x_max_truncation"] = mu.x_max;
    doc["total_mass"] = total_mass(mu);
    doc["continuous_mass"] = continuous_mass(mu);
    doc["atoms"] = to_json(mu.atoms);
    if (!csv_path.empty()) doc["density_csv"] = csv_path;
    emit(doc, out_path);
    return 0;
}

int run_spectrum(int n, int m, const std::string& out_path, const GlobalConfig& cfg) {
    Json doc = base_report(cfg);
    doc.update(to_json(branching_summary(n, m)));
    emit(doc, out_path);
    return 0;
}

int run_t1(int n, int m, const std::string& z_spec, std::int64_t samples, std::uint64_t seed,
           int k_max, const std::string& out_path, const GlobalConfig& cfg) {
    const std::vector<double> diag = parse_csv_doubles(z_spec);
    if (static_cast<int>(diag.size()) != m)
        throw CLI::ValidationError("--z expects " + std::to_string(m) + " diagonal entries");
    Eigen::MatrixXd z = Eigen::MatrixXd::Zero(n, m);
    for (int j = 0; j < m; ++j) z(j, j) = diag[static_cast<size_t>(j)];

    const McResult mc = mc_T1(n, m, z, samples, seed);
    const double series = t1_series(n, m, z, k_max);
    const double sigmas =
        mc.std_error > 0.0 ? std::abs(mc.estimate - series) / mc.std_error : 0.0;

    Json doc = base_report(cfg);
    doc["n"] = n;
    doc["m"] = m;
    doc["z_diag"] = diag;
    doc["monte_carlo"] = to_json(mc);
    doc["series_k_max"] = k_max;
    doc["series_value"] = series;
    doc["deviation_sigmas"] = sigmas;
    doc["agree_3sigma"] = sigmas <= 3.0;
    emit(doc, out_path);
    return doc["agree_3sigma"].get<bool>() ? 0 : 1;
}

int run_verify(const std::string& suite, int n, int m, int k_max, std::optional<double> tol,
               std::uint64_t seed, std::int64_t samples, int trials, const std::string& out_path,
               const GlobalConfig& cfg) {
    Json doc = base_report(cfg);
    doc["suite"] = suite;
    doc["n"] = n;
    doc["m"] = m;
    doc["seed"] = seed;
    bool pass = true;

    const bool all = (suite == "all");
    if (all || suite == "recurrence") {
        const RecurrenceReport r = verify_recurrence(n, m, k_max);
        doc["recurrence"] = to_json(r);
        pass = pass && r.all_pass();
    }
    if (all || suite == "orthogonality") {
        const OrthogonalityReport r =
            verify_orthogonality(n, m, std::min(k_max, 8), tol.value_or(1e-8));
        doc["orthogonality"] = to_json(r);
        pass = pass && r.pass;
    }
    if (all || suite == "unitarity") {
        const UnitarityReport r = verify_unitarity(n, m, std::min(k_max, 8), tol.value_or(1e-7));
        doc["unitarity"] = to_json(r);
        pass = pass && r.pass;
    }
    if (all || suite == "group") {
        const GroupVerifyReport r = verify_group(n, m, trials, tol.value_or(1e-9), seed);
        doc["group"] = to_json(r);
        pass = pass && r.pass;
    }
    if (all || suite == "expansion") {
        const ExpansionVerifyReport r = verify_expansion(n, m, samples, seed);
        doc["expansion"] = to_json(r);
        pass = pass && r.pass;
    }
    doc["pass"] = pass;
    emit(doc, out_path);
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    const GlobalConfig cfg = read_env();

    CLI::App app{"branching-decomposition toolkit"};
    app.require_subcommand(1);

    // psi
    auto* psi = app.add_subcommand("psi", "invariant polynomial psi_k (exact orbit form)");
    int psi_m = 1, psi_k = 0;
    std::optional<int> psi_n;
    std::string psi_eval, psi_out;
    psi->add_option("m", psi_m, "number of variables")->required();
    psi->add_option("k", psi_k, "degree index")->required();
    psi->add_option("--n", psi_n, "rank parameter n (adds the norm and phi value)");
    psi->add_option("--eval", psi_eval, "comma-separated rational point x1,..,xm");
    psi->add_option("-o,--out", psi_out, "output file (default stdout)");

    // coeffs
    auto* coeffs = app.add_subcommand("coeffs", "Jacobi coefficient table (exact strings)");
    int co_n = 0, co_m = 0, co_kmax = 8;
    std::string co_out;
    coeffs->add_option("n", co_n)->required();
    coeffs->add_option("m", co_m)->required();
    coeffs->add_option("k_max", co_kmax)->required();
    coeffs->add_option("-o,--out", co_out, "output file (default stdout)");

    // hahn
    auto* hahn = app.add_subcommand("hahn", "dual Hahn polynomial coefficient lists in y");
    int ha_n = 0, ha_m = 0, ha_k = 0;
    std::string ha_out;
    hahn->add_option("n", ha_n)->required();
    hahn->add_option("m", ha_m)->required();
    hahn->add_option("k", ha_k)->required();
    hahn->add_option("-o,--out", ha_out, "output file (default stdout)");

    // measure
    auto* measure = app.add_subcommand("measure", "spectral measure: density CSV and atoms JSON");
    int me_n = 0, me_m = 0;
    std::string me_grid, me_csv, me_out;
    measure->add_option("n", me_n)->required();
    measure->add_option("m", me_m)->required();
    measure->add_option("--grid", me_grid, "density grid x_min:x_max:steps");
    measure->add_option("--csv", me_csv, "density table output path");
    measure->add_option("-o,--out", me_out, "JSON output file (default stdout)");

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "branching decomposition summary");
    int sp_n = 0, sp_m = 0;
    std::string sp_out;
    spectrum->add_option("n", sp_n)->required();
    spectrum->add_option("m", sp_m)->required();
    spectrum->add_option("-o,--out", sp_out, "output file (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite (exit 0 iff pass)");
    std::string ve_suite, ve_out;
    int ve_n = 0, ve_m = 0, ve_kmax = 8, ve_trials = 100;
    std::optional<double> ve_tol;
    std::uint64_t ve_seed = cfg.seed;
    std::int64_t ve_samples = 200000;
    verify->add_option("suite", ve_suite)
        ->required()
        ->check(CLI::IsMember({"recurrence", "orthogonality", "unitarity", "group", "expansion",
                               "all"}));
    verify->add_option("n", ve_n)->required();
    verify->add_option("m", ve_m)->required();
    verify->add_option("k_max,--kmax", ve_kmax, "largest k in the exact recurrence sweep");
    verify->add_option("--tol", ve_tol, "numeric tolerance (per-suite defaults otherwise)");
    verify->add_option("--seed", ve_seed, "random seed");
    verify->add_option("--samples", ve_samples, "Monte Carlo sample count");
    verify->add_option("--trials", ve_trials, "random trials for the group identities");
    verify->add_option("-o,--out", ve_out, "output file (default stdout)");

    // t1
    auto* t1 = app.add_subcommand("t1", "Monte Carlo boundary integral vs truncated expansion");
    int t1_n = 0, t1_m = 0, t1_kmax = 10;
    std::string t1_z, t1_out;
    std::int64_t t1_samples = 1000000;
    std::uint64_t t1_seed = cfg.seed;
    t1->add_option("n", t1_n)->required();
    t1->add_option("m", t1_m)->required();
    t1->add_option("--z", t1_z, "diagonal entries of z, comma separated")->required();
    t1->add_option("--samples", t1_samples, "sample count");
    t1->add_option("--seed", t1_seed, "random seed");
    t1->add_option("--series-kmax", t1_kmax, "series truncation");
    t1->add_option("-o,--out", t1_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (psi->parsed()) return run_psi(psi_m, psi_k, psi_n, psi_eval, psi_out, cfg);
        if (coeffs->parsed()) return run_coeffs(co_n, co_m, co_kmax, co_out, cfg);
        if (hahn->parsed()) return run_hahn(ha_n, ha_m, ha_k, ha_out, cfg);
        if (measure->parsed()) return run_measure(me_n, me_m, me_grid, me_csv, me_out, cfg);
        if (spectrum->parsed()) return run_spectrum(sp_n, sp_m, sp_out, cfg);
        if (verify->parsed())
            return run_verify(ve_suite, ve_n, ve_m, ve_kmax, ve_tol, ve_seed, ve_samples,
                              ve_trials, ve_out, cfg);
        if (t1->parsed()) return run_t1(t1_n, t1_m, t1_z, t1_samples, t1_seed, t1_kmax, t1_out, cfg);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
