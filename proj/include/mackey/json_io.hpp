#ifndef MACKEY_JSON_IO_HPP
#define MACKEY_JSON_IO_HPP

#include <cstdint>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "mackey/duals.hpp"
#include "mackey/errors.hpp"
#include "mackey/mackey_map.hpp"
#include "mackey/root_datum.hpp"
#include "mackey/sl2.hpp"

namespace mackey::io {

using nlohmann::json;

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    try {
        json j;
        in >> j;
        return j;
    } catch (const json::exception& e) {
        throw InvalidInput("json parse failed for " + path + ": " + e.what());
    }
}

inline json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("json parse failed: ") + e.what());
    }
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write " + path);
    out << content;
}

// Root data arrive as {"cartan": [[...]], "rank_central": n} with exact
// integers; extra keys are ignored except the optional enumeration cap.
inline RootDatum datum_from_json(const json& j) {
    if (!j.is_object() || !j.contains("cartan") || !j["cartan"].is_array())
        throw InvalidInput("datum document needs a \"cartan\" matrix");
    IntMat cartan;
    for (const auto& row : j["cartan"]) {
        if (!row.is_array()) throw InvalidInput("cartan rows must be arrays");
        IntVec r;
        for (const auto& e : row) {
            if (!e.is_number_integer()) throw InvalidInput("cartan entries must be integers");
            r.push_back(e.get<std::int64_t>());
        }
        cartan.push_back(std::move(r));
    }
    std::int64_t central = 0;
    if (j.contains("rank_central")) {
        if (!j["rank_central"].is_number_integer() ||
            j["rank_central"].get<std::int64_t>() < 0)
            throw InvalidInput("rank_central must be a nonnegative integer");
        central = j["rank_central"].get<std::int64_t>();
    }
    std::size_t cap = 10000;
    if (j.contains("weyl_order_cap")) cap = j["weyl_order_cap"].get<std::size_t>();
    return validate_root_datum(cartan, int(central), std::int64_t(cap));
}

inline json datum_to_json(const RootDatum& d) {
    json j;
    j["cartan"] = d.cartan();
    j["rank_central"] = d.rank_central();
    return j;
}

inline WeightVec weight_from_json(const json& j, const RootDatum& d) {
    if (!j.is_array()) throw InvalidInput("weight must be an integer array");
    WeightVec v;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw InvalidInput("weight entries must be integers");
        v.push_back(e.get<std::int64_t>());
    }
    if (v.size() != std::size_t(d.rank())) throw InvalidInput("weight length does not match datum rank");
    return v;
}

inline json weight_to_json(const WeightVec& v) { return json(v); }

inline NuVector nu_from_json(const json& j, const RootDatum& d) {
    if (!j.is_array()) throw InvalidInput("nu must be an array of rationals");
    NuVector v;
    for (const auto& e : j) {
        if (e.is_number_integer())
            v.emplace_back(e.get<std::int64_t>());
        else if (e.is_string())
            v.push_back(Rat::parse(e.get<std::string>()));
        else
            throw InvalidInput("nu entries must be integers or \"p/q\" strings");
    }
    if (v.size() != std::size_t(d.rank())) throw InvalidInput("nu length does not match datum rank");
    return v;
}

inline json nu_to_json(const NuVector& v) {
    json arr = json::array();
    for (const auto& r : v) arr.push_back(r.str());
    return arr;
}

inline std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else
            cur.push_back(c);
    }
    out.push_back(cur);
    return out;
}

// CLI-style weight: "1,0,-2".
inline WeightVec weight_from_string(const std::string& s, const RootDatum& d) {
    WeightVec v;
    for (const auto& part : split_csv(s)) {
        Rat r = Rat::parse(part);
        if (!r.is_integer()) throw InvalidInput("sigma entries must be integers");
        v.push_back(r.num());
    }
    if (v.size() != std::size_t(d.rank())) throw InvalidInput("sigma length does not match datum rank");
    return v;
}

// CLI-style covector: "1/2,0".
inline NuVector nu_from_string(const std::string& s, const RootDatum& d) {
    NuVector v;
    for (const auto& part : split_csv(s)) v.push_back(Rat::parse(part));
    if (v.size() != std::size_t(d.rank())) throw InvalidInput("nu length does not match datum rank");
    return v;
}

inline json param_to_json(const TemperedParam& p) {
    json j;
    j["kind"] = "tempered";
    j["sigma"] = weight_to_json(p.sigma);
    j["nu"] = nu_to_json(p.nu);
    return j;
}

inline json param_to_json(const MotionParam& p) {
    json j;
    j["kind"] = "motion";
    j["sigma"] = weight_to_json(p.sigma);
    j["nu"] = nu_to_json(p.nu);
    return j;
}

inline json decomposition_to_json(const DecompositionTable& t) {
    json j;
    j["sigma"] = weight_to_json(t.sigma);
    j["nu"] = nu_to_json(t.nu);
    j["radius"] = t.radius;
    json terms = json::array();
    for (const auto& term : t.terms) {
        json e;
        e["theta"] = weight_to_json(term.theta);
        e["m"] = term.m;
        terms.push_back(e);
    }
    j["terms"] = terms;
    return j;
}

inline std::string decomposition_to_text(const DecompositionTable& t) {
    std::ostringstream os;
    os << std::left << std::setw(28) << "theta" << "m\n";
    for (const auto& term : t.terms) {
        std::ostringstream cell;
        cell << '(';
        for (std::size_t i = 0; i < term.theta.size(); ++i)
            cell << (i ? "," : "") << term.theta[i];
        cell << ')';
        os << std::left << std::setw(28) << cell.str() << term.m << '\n';
    }
    return os.str();
}

inline json certificate_to_json(const BijectionCertificate& c) {
    json j;
    j["nu"] = nu_to_json(c.nu);
    j["radius"] = c.radius;
    json classes = json::array();
    for (const auto& v : c.classes) classes.push_back(weight_to_json(v));
    j["classes"] = classes;
    j["candidates_checked"] = c.candidates_checked;
    json survivors = json::array();
    for (const auto& table : c.survivors) survivors.push_back(json(table));
    j["survivors"] = survivors;
    j["identity_only"] = c.identity_only();
    return j;
}

inline sl2::QuadOrders orders_from_json(const json& j) {
    sl2::QuadOrders o;
    o.k_alpha = j.value("k_alpha", o.k_alpha);
    o.k_beta = j.value("k_beta", o.k_beta);
    o.k_gamma = j.value("k_gamma", o.k_gamma);
    o.x = j.value("x", o.x);
    o.yr = j.value("yr", o.yr);
    o.yi = j.value("yi", o.yi);
    return o;
}

inline json orders_to_json(const sl2::QuadOrders& o) {
    json j;
    j["k_alpha"] = o.k_alpha;
    j["k_beta"] = o.k_beta;
    j["k_gamma"] = o.k_gamma;
    j["x"] = o.x;
    j["yr"] = o.yr;
    j["yi"] = o.yi;
    return j;
}

inline sl2::KVector kvector_from_json(const json& j) {
    sl2::KVector v;
    try {
        for (const auto& e : j) {
            sl2::KTerm t;
            t.two_j = e.at("two_j").get<int>();
            t.two_m = e.at("two_m").get<int>();
            t.two_n = e.at("two_n").get<int>();
            t.coeff = sl2::cplx{e.value("re", 1.0), e.value("im", 0.0)};
            v.terms.push_back(t);
        }
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("bad K-vector term list: ") + e.what());
    }
    return v;
}

// Scenario documents: {"sigma": int, "nu": float, "section": name,
// "orders": {...}, "t_schedule": [...]} plus optional nu_probes, tol, and
// explicit phi/psi term lists.
inline sl2::Sl2Scenario scenario_from_json(const json& j) {
    if (!j.is_object() || !j.contains("sigma") || !j.contains("nu") ||
        !j.contains("section"))
        throw InvalidInput("scenario needs sigma, nu, and section");
    if (!j["sigma"].is_number_integer())
        throw InvalidInput("scenario sigma must be an integer");
    sl2::Sl2Scenario sc;
    try {
        sc = sl2::make_scenario(j["sigma"].get<int>(), j["nu"].get<double>(),
                                j["section"].get<std::string>());
        if (j.contains("orders")) sc.orders = orders_from_json(j["orders"]);
        if (j.contains("t_schedule"))
            sc.t_schedule = j["t_schedule"].get<std::vector<double>>();
        if (j.contains("nu_probes"))
            sc.nu_probes = j["nu_probes"].get<std::vector<double>>();
        if (j.contains("tol")) sc.tol = j["tol"].get<double>();
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("bad scenario document: ") + e.what());
    }
    if (j.contains("phi")) sc.phi = kvector_from_json(j["phi"]);
    if (j.contains("psi")) sc.psi = kvector_from_json(j["psi"]);
    sl2::detail::validate_kvector(sc.phi, "phi");
    sl2::detail::validate_kvector(sc.psi, "psi");
    if (sc.tol <= 0.0) throw InvalidInput("tolerance must be positive");
    return sc;
}

inline json complex_to_json(sl2::cplx z) {
    json j;
    j["re"] = z.real();
    j["im"] = z.imag();
    return j;
}

inline json convergence_to_json(const sl2::ConvergenceReport& r, double ratio_bound) {
    json j;
    j["sigma"] = r.sigma;
    j["nu"] = r.nu;
    j["section"] = r.section;
    j["limit"] = complex_to_json(r.limit);
    j["limit_delta"] = r.limit_delta;
    j["scaled_delta"] = r.scaled_delta;
    json rows = json::array();
    for (const auto& row : r.rows) {
        json e;
        e["t"] = row.t;
        e["e_t"] = row.err;
        e["value"] = complex_to_json(row.scaled);
        e["ratio"] = row.ratio;
        e["err_over_t"] = row.err_over_t;
        rows.push_back(e);
    }
    j["rows"] = rows;
    json probes = json::array();
    for (const auto& p : r.probes) {
        json e;
        e["nu"] = p.nu;
        e["e_at_t_min"] = p.err_at_t_min;
        e["err_over_t"] = p.err_over_t;
        probes.push_back(e);
    }
    j["nu_probes"] = probes;
    j["monotone"] = r.monotone;
    j["last_ratio"] = r.last_ratio;
    j["ratio_bound"] = ratio_bound;
    j["pass"] = r.passes(ratio_bound);
    return j;
}

inline std::string convergence_to_csv(const sl2::ConvergenceReport& r) {
    std::ostringstream os;
    os << std::setprecision(17);
    os << "t,e_t,value_re,value_im\n";
    for (const auto& row : r.rows)
        os << row.t << ',' << row.err << ',' << row.scaled.real() << ','
           << row.scaled.imag() << '\n';
    return os.str();
}

namespace detail {

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << v;
    return os.str();
}

inline std::string utc_timestamp() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace detail

// Report envelope shared by every CLI command.  The digest covers command
// and inputs only, never the timestamp, so repeated runs on identical
// inputs carry identical digests and byte-identical results payloads.
inline json make_report(const std::string& command, const json& inputs,
                        const json& results, bool pass) {
    json r;
    r["schema_version"] = 1;
    r["command"] = command;
    r["timestamp"] = detail::utc_timestamp();
    r["inputs"] = inputs;
    r["inputs_digest"] = detail::hex64(detail::fnv1a64(command + "\n" + inputs.dump()));
    r["results"] = results;
    r["pass"] = pass;
    return r;
}

} // namespace mackey::io

#endif
