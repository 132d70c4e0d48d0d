// Command-line surface over the root-datum combinatorics, dual
// parametrizations, restriction tables, truncated-bijection search, and the
// SL(2,C) matrix-coefficient experiments.  Every command emits a JSON report
// (stdout, optionally --out DIR/report.json); exit codes: 0 success,
// 2 invalid input, 3 verification failure, 4 resource cap.

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mackey/duals.hpp"
#include "mackey/errors.hpp"
#include "mackey/json_io.hpp"
#include "mackey/mackey_map.hpp"
#include "mackey/multiplicity.hpp"
#include "mackey/root_datum.hpp"
#include "mackey/sl2.hpp"

namespace {

using mackey::io::json;

void emit(const json& report, const std::string& out_dir) {
    std::cout << report.dump(2) << std::endl;
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        mackey::io::write_text_file(out_dir + "/report.json", report.dump(2) + "\n");
    }
}

double rel_diff(mackey::sl2::cplx a, mackey::sl2::cplx b) {
    double scale = std::max({std::abs(a), std::abs(b), 1e-30});
    return std::abs(a - b) / scale;
}

int run_roots_validate(const std::string& datum_path, const std::string& out) {
    mackey::RootDatum d = mackey::io::datum_from_json(mackey::io::load_json_file(datum_path));
    json results;
    results["rank"] = d.rank();
    results["rank_central"] = d.rank_central();
    results["semisimple_rank"] = d.ss_rank();
    results["weyl_order"] = d.weyl_order();
    json roots = json::array();
    for (const auto& r : d.positive_roots()) roots.push_back(mackey::io::weight_to_json(r));
    results["positive_roots"] = roots;
    results["rho"] = mackey::io::weight_to_json(d.rho());
    json inputs;
    inputs["datum"] = mackey::io::datum_to_json(d);
    emit(mackey::io::make_report("roots-validate", inputs, results, true), out);
    return 0;
}

int run_dual_normalize(const std::string& datum_path, const std::string& sigma_s,
                       const std::string& nu_s, const std::string& kind,
                       const std::string& out) {
    mackey::RootDatum d = mackey::io::datum_from_json(mackey::io::load_json_file(datum_path));
    mackey::WeightVec sigma = mackey::io::weight_from_string(sigma_s, d);
    mackey::NuVector nu = mackey::io::nu_from_string(nu_s, d);
    json inputs;
    inputs["datum"] = mackey::io::datum_to_json(d);
    inputs["sigma"] = mackey::io::weight_to_json(sigma);
    inputs["nu"] = mackey::io::nu_to_json(nu);
    inputs["kind"] = kind;
    json results;
    if (kind == "tempered")
        results = mackey::io::param_to_json(mackey::normalize_tempered(d, sigma, nu));
    else if (kind == "motion")
        results = mackey::io::param_to_json(mackey::normalize_motion(d, sigma, nu));
    else
        throw mackey::InvalidInput("kind must be tempered or motion");
    emit(mackey::io::make_report("dual-normalize", inputs, results, true), out);
    return 0;
}

int run_mackey_map(const std::string& datum_path, const std::string& sigma_s,
                   const std::string& nu_s, const std::string& direction,
                   const std::string& out) {
    mackey::RootDatum d = mackey::io::datum_from_json(mackey::io::load_json_file(datum_path));
    mackey::WeightVec sigma = mackey::io::weight_from_string(sigma_s, d);
    mackey::NuVector nu = mackey::io::nu_from_string(nu_s, d);
    json inputs;
    inputs["datum"] = mackey::io::datum_to_json(d);
    inputs["sigma"] = mackey::io::weight_to_json(sigma);
    inputs["nu"] = mackey::io::nu_to_json(nu);
    inputs["direction"] = direction;
    json results;
    if (direction == "forward") {
        mackey::TemperedParam p = mackey::normalize_tempered(d, sigma, nu);
        results["input"] = mackey::io::param_to_json(p);
        results["output"] = mackey::io::param_to_json(mackey::mackey_mu(p));
    } else if (direction == "inverse") {
        mackey::MotionParam q = mackey::normalize_motion(d, sigma, nu);
        results["input"] = mackey::io::param_to_json(q);
        results["output"] = mackey::io::param_to_json(mackey::mackey_mu_inverse(q));
    } else
        throw mackey::InvalidInput("direction must be forward or inverse");
    emit(mackey::io::make_report("mackey-map", inputs, results, true), out);
    return 0;
}

int run_decompose(const std::string& datum_path, const std::string& sigma_s,
                  const std::string& nu_s, int radius, const std::string& method,
                  const std::string& out) {
    mackey::RootDatum d = mackey::io::datum_from_json(mackey::io::load_json_file(datum_path));
    mackey::WeightVec sigma = mackey::io::weight_from_string(sigma_s, d);
    mackey::NuVector nu = mackey::io::nu_from_string(nu_s, d);
    mackey::MultMethod m;
    if (method == "freudenthal")
        m = mackey::MultMethod::freudenthal;
    else if (method == "kostant")
        m = mackey::MultMethod::kostant;
    else
        throw mackey::InvalidInput("method must be freudenthal or kostant");
    mackey::DecompositionTable table = mackey::decompose_pi_alpha(d, sigma, nu, radius, m);
    std::cout << mackey::io::decomposition_to_text(table);
    json inputs;
    inputs["datum"] = mackey::io::datum_to_json(d);
    inputs["sigma"] = mackey::io::weight_to_json(sigma);
    inputs["nu"] = mackey::io::nu_to_json(nu);
    inputs["radius"] = radius;
    inputs["method"] = method;
    emit(mackey::io::make_report("decompose", inputs,
                                 mackey::io::decomposition_to_json(table), true),
         out);
    return 0;
}

int run_uniqueness(const std::string& datum_path, const std::string& nu_s, int radius,
                   std::int64_t cap, const std::string& out) {
    mackey::RootDatum d = mackey::io::datum_from_json(mackey::io::load_json_file(datum_path));
    mackey::NuVector nu = mackey::io::nu_from_string(nu_s, d);
    mackey::BijectionCertificate cert = mackey::uniqueness_search(d, nu, radius, cap);
    json inputs;
    inputs["datum"] = mackey::io::datum_to_json(d);
    inputs["nu"] = mackey::io::nu_to_json(nu);
    inputs["radius"] = radius;
    inputs["cap"] = cap;
    bool pass = cert.identity_only();
    emit(mackey::io::make_report("uniqueness", inputs,
                                 mackey::io::certificate_to_json(cert), pass),
         out);
    return pass ? 0 : 3;
}

int run_sl2_limit(const std::string& scenario_path, double ratio_bound, double tol,
                  const std::string& out) {
    mackey::sl2::Sl2Scenario sc =
        mackey::io::scenario_from_json(mackey::io::load_json_file(scenario_path));
    if (tol > 0.0) sc.tol = tol;
    mackey::sl2::ConvergenceReport rep = mackey::sl2::convergence_experiment(sc);
    json inputs;
    inputs["scenario"] = mackey::io::load_json_file(scenario_path);
    inputs["ratio_bound"] = ratio_bound;
    bool pass = rep.passes(ratio_bound);
    json report = mackey::io::make_report(
        "sl2-limit", inputs, mackey::io::convergence_to_json(rep, ratio_bound), pass);
    emit(report, out);
    if (!out.empty())
        mackey::io::write_text_file(out + "/convergence.csv",
                                    mackey::io::convergence_to_csv(rep));
    else
        std::cout << mackey::io::convergence_to_csv(rep);
    return pass ? 0 : 3;
}

int run_sl2_keyprop(const std::string& scenario_path, std::vector<double> ts, double tol,
                    const std::string& out) {
    mackey::sl2::Sl2Scenario sc =
        mackey::io::scenario_from_json(mackey::io::load_json_file(scenario_path));
    if (ts.empty()) ts = {1.0, 0.5, 0.25};
    if (tol <= 0.0) tol = 1e-6;
    json rows = json::array();
    bool pass = true;
    for (double t : ts) {
        mackey::sl2::KeyPropertyProbe p = mackey::sl2::key_property_probe(sc, t);
        double rel = rel_diff(p.path_a, p.path_b);
        json row;
        row["t"] = t;
        row["direct"] = mackey::io::complex_to_json(p.path_a);
        row["rescaled"] = mackey::io::complex_to_json(p.path_b);
        row["rel_diff"] = rel;
        rows.push_back(row);
        if (rel > tol) pass = false;
    }
    json inputs;
    inputs["scenario"] = mackey::io::load_json_file(scenario_path);
    inputs["t_values"] = ts;
    inputs["tol"] = tol;
    json results;
    results["rows"] = rows;
    results["tol"] = tol;
    emit(mackey::io::make_report("sl2-keyprop", inputs, results, pass), out);
    return pass ? 0 : 3;
}

int run_sl2_motionrep(const std::string& scenario_path, double tol, const std::string& out) {
    mackey::sl2::Sl2Scenario sc =
        mackey::io::scenario_from_json(mackey::io::load_json_file(scenario_path));
    if (tol <= 0.0) tol = 1e-6;
    mackey::sl2::cplx rep = mackey::sl2::motion_rep_coeff(sc);
    mackey::sl2::cplx lim = mackey::sl2::motion_limit_coeff(sc);
    double rel = rel_diff(rep, lim);
    bool pass = rel <= tol;
    json inputs;
    inputs["scenario"] = mackey::io::load_json_file(scenario_path);
    inputs["tol"] = tol;
    json results;
    results["motion_rep"] = mackey::io::complex_to_json(rep);
    results["motion_limit"] = mackey::io::complex_to_json(lim);
    results["rel_diff"] = rel;
    results["tol"] = tol;
    emit(mackey::io::make_report("sl2-motionrep", inputs, results, pass), out);
    return pass ? 0 : 3;
}

int run_sl2_iwasawa(const std::string& entries, const std::string& out) {
    auto parts = mackey::io::split_csv(entries);
    if (parts.size() != 8)
        throw mackey::InvalidInput(
            "--entries wants 8 comma-separated reals (re,im per entry, row-major)");
    double v[8];
    for (int i = 0; i < 8; ++i) {
        try {
            v[i] = std::stod(parts[std::size_t(i)]);
        } catch (const std::exception&) {
            throw mackey::InvalidInput("bad matrix entry: " + parts[std::size_t(i)]);
        }
    }
    mackey::Mat2 g{{v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}, {v[6], v[7]}};
    mackey::sl2::Iwasawa iw = mackey::sl2::iwasawa(g);
    mackey::Mat2 a = mackey::Mat2::diag(std::exp(iw.H), std::exp(-iw.H));
    mackey::Mat2 n{1.0, iw.n, 0.0, 1.0};
    mackey::Mat2 rec = iw.k * a * n;
    double err = std::sqrt(std::norm(rec.a - g.a) + std::norm(rec.b - g.b) +
                           std::norm(rec.c - g.c) + std::norm(rec.d - g.d));
    json inputs;
    inputs["entries"] = entries;
    json results;
    results["kappa"] = {mackey::io::complex_to_json(iw.k.a), mackey::io::complex_to_json(iw.k.b),
                        mackey::io::complex_to_json(iw.k.c), mackey::io::complex_to_json(iw.k.d)};
    results["H"] = iw.H;
    results["n"] = mackey::io::complex_to_json(iw.n);
    results["reconstruction_error"] = err;
    bool pass = err <= 1e-12;
    emit(mackey::io::make_report("sl2-iwasawa", inputs, results, pass), out);
    return pass ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tempered and motion-group duals for complex reductive root data"};
    app.require_subcommand(1);

    std::string datum_path, sigma_s, nu_s, out_dir, kind = "tempered";
    std::string direction = "forward", method = "freudenthal";
    std::string scenario_path, entries;
    int radius = 0;
    std::int64_t cap = 10000000;
    double tol = 0.0, ratio_bound = 0.7;
    std::vector<double> t_values;

    auto* validate = app.add_subcommand("roots-validate", "Validate a root datum file");
    validate->add_option("--datum", datum_path)->required();
    validate->add_option("--out", out_dir);

    auto* normalize = app.add_subcommand("dual-normalize", "Canonical dual parameters");
    normalize->add_option("--datum", datum_path)->required();
    normalize->add_option("--sigma", sigma_s)->required();
    normalize->add_option("--nu", nu_s)->required();
    normalize->add_option("--kind", kind)->check(CLI::IsMember({"tempered", "motion"}));
    normalize->add_option("--out", out_dir);

    auto* mmap = app.add_subcommand("mackey-map", "Bijection between the two duals");
    mmap->add_option("--datum", datum_path)->required();
    mmap->add_option("--sigma", sigma_s)->required();
    mmap->add_option("--nu", nu_s)->required();
    mmap->add_option("--direction", direction)
        ->check(CLI::IsMember({"forward", "inverse"}));
    mmap->add_option("--out", out_dir);

    auto* decomp = app.add_subcommand("decompose", "Restriction multiplicities up to a radius");
    decomp->add_option("--datum", datum_path)->required();
    decomp->add_option("--sigma", sigma_s)->required();
    decomp->add_option("--nu", nu_s)->required();
    decomp->add_option("--radius", radius)->required();
    decomp->add_option("--method", method)
        ->check(CLI::IsMember({"freudenthal", "kostant"}));
    decomp->add_option("--out", out_dir);

    auto* uniq = app.add_subcommand("uniqueness", "Truncated bijection uniqueness search");
    uniq->add_option("--datum", datum_path)->required();
    uniq->add_option("--nu", nu_s)->required();
    uniq->add_option("--radius", radius)->required();
    uniq->add_option("--cap", cap);
    uniq->add_option("--out", out_dir);

    auto* sl2cmd = app.add_subcommand("sl2", "SL(2,C) matrix-coefficient experiments");
    sl2cmd->require_subcommand(1);
    auto* limit = sl2cmd->add_subcommand("limit", "Scaled-coefficient convergence to the motion limit");
    limit->add_option("--scenario", scenario_path)->required();
    limit->add_option("--ratio-bound", ratio_bound);
    limit->add_option("--tol", tol);
    limit->add_option("--out", out_dir);
    auto* keyprop = sl2cmd->add_subcommand("keyprop", "Rescaling identity, two evaluation paths");
    keyprop->add_option("--scenario", scenario_path)->required();
    keyprop->add_option("--t", t_values);
    keyprop->add_option("--tol", tol);
    keyprop->add_option("--out", out_dir);
    auto* motionrep = sl2cmd->add_subcommand("motionrep", "Motion-group value, two charts");
    motionrep->add_option("--scenario", scenario_path)->required();
    motionrep->add_option("--tol", tol);
    motionrep->add_option("--out", out_dir);
    auto* iwa = sl2cmd->add_subcommand("iwasawa", "KAN factorization of one matrix");
    iwa->add_option("--entries", entries)->required();
    iwa->add_option("--out", out_dir);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*validate) return run_roots_validate(datum_path, out_dir);
        if (*normalize) return run_dual_normalize(datum_path, sigma_s, nu_s, kind, out_dir);
        if (*mmap) return run_mackey_map(datum_path, sigma_s, nu_s, direction, out_dir);
        if (*decomp) return run_decompose(datum_path, sigma_s, nu_s, radius, method, out_dir);
        if (*uniq) return run_uniqueness(datum_path, nu_s, radius, cap, out_dir);
        if (*limit) return run_sl2_limit(scenario_path, ratio_bound, tol, out_dir);
        if (*keyprop) return run_sl2_keyprop(scenario_path, t_values, tol, out_dir);
        if (*motionrep) return run_sl2_motionrep(scenario_path, tol, out_dir);
        if (*iwa) return run_sl2_iwasawa(entries, out_dir);
        std::cerr << "error: no command selected\n";
        return 2;
    } catch (const mackey::InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const mackey::ResourceCap& e) {
        std::cerr << "resource cap: " << e.what() << '\n';
        return 4;
    } catch (const mackey::VerificationFailure& e) {
        std::cerr << "verification failure: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
