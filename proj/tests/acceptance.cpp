#include <catch2/catch_amalgamated.hpp>

#include <chrono>
#include <cmath>
#include <complex>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "mackey/duals.hpp"
#include "mackey/json_io.hpp"
#include "mackey/mackey_map.hpp"
#include "mackey/multiplicity.hpp"
#include "mackey/root_datum.hpp"
#include "mackey/sl2.hpp"

// One check per release gate, each printing a single pass/fail line with its
// runtime against the pinned budget.  Tolerances and bounds here are frozen;
// loosening them is a release decision, not a test fix.

using namespace mackey;

namespace {

struct Gate {
    int index;
    std::string label;
    double budget_s;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    void finish(bool ok) const {
        double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
        bool in_budget = secs <= budget_s;
        std::ostringstream os;
        os << "criterion " << index << "/9: " << label << " ... "
           << (ok && in_budget ? "pass" : "FAIL") << " (" << std::fixed
           << std::setprecision(1) << secs << "s, budget " << budget_s << "s)";
        std::cout << os.str() << std::endl;
        REQUIRE(ok);
        REQUIRE(in_budget);
    }
};

RootDatum a1() { return validate_root_datum({{2}}, 0, 10000); }
RootDatum a2() { return validate_root_datum({{2, -1}, {-1, 2}}, 0, 10000); }
RootDatum c2() { return validate_root_datum({{2, -1}, {-2, 2}}, 0, 10000); }

// All dominant weights with coordinate sum <= cap.
std::vector<WeightVec> dominant_up_to(const RootDatum& d, int cap) {
    std::vector<WeightVec> out;
    WeightVec cur(std::size_t(d.rank()), 0);
    while (true) {
        std::int64_t total = 0;
        for (auto c : cur) total += c;
        if (total <= cap) out.push_back(cur);
        std::size_t i = 0;
        for (; i < cur.size(); ++i) {
            if (cur[i] < cap) {
                ++cur[i];
                break;
            }
            cur[i] = 0;
        }
        if (i == cur.size()) break;
    }
    return out;
}

// Iterates v over the product of [-box[j], box[j]].
template <typename F>
void for_each_in_box(const std::vector<std::int64_t>& box, F&& f) {
    WeightVec v;
    for (auto b : box) v.push_back(-b);
    while (true) {
        f(v);
        std::size_t i = 0;
        for (; i < v.size(); ++i) {
            if (v[i] < box[i]) {
                ++v[i];
                break;
            }
            v[i] = -box[i];
        }
        if (i == v.size()) break;
    }
}

std::vector<std::int64_t> orbit_box(const RootDatum& d, const WeightVec& theta) {
    std::vector<std::int64_t> box(theta.size(), 0);
    for (const auto& p : weyl_orbit(d, theta))
        for (std::size_t j = 0; j < box.size(); ++j)
            box[j] = std::max(box[j], std::abs(p.v[j]));
    return box;
}

std::string data_file(const char* name) {
    return std::string(MACKEY_DATA_DIR) + "/" + name;
}

const std::vector<const char*> kScenarioFiles = {
    "sl2_s0_nu0.json", "sl2_s0_nu1.json", "sl2_s1_nu0.json", "sl2_s1_nu1.json"};

double rel_diff(sl2::cplx a, sl2::cplx b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-30});
}

} // namespace

TEST_CASE("criterion 1: multiplicity formulas agree") {
    Gate g{1, "Freudenthal and Kostant agree, all reps of height <= 8 on A1 A2 C2",
           30.0};
    bool ok = true;
    for (const RootDatum& d : {a1(), a2(), c2()}) {
        for (const auto& theta : dominant_up_to(d, 8)) {
            std::int64_t total = 0;
            for_each_in_box(orbit_box(d, theta), [&](const WeightVec& sigma) {
                std::int64_t mf =
                    weight_multiplicity(d, theta, sigma, MultMethod::freudenthal);
                std::int64_t mk =
                    weight_multiplicity(d, theta, sigma, MultMethod::kostant);
                if (mf != mk) ok = false;
                total += mf;
            });
            if (total != weyl_dimension(d, theta)) ok = false;
        }
    }
    g.finish(ok);
}

TEST_CASE("criterion 2: pinned restriction tables") {
    Gate g{2, "decomposition tables match the pinned values", 5.0};
    bool ok = true;

    auto t1 = decompose_pi_alpha(a1(), {1}, {Rat(0)}, 9);
    ok = ok && t1.terms.size() == 5;
    for (std::int64_t k = 0; k < std::int64_t(t1.terms.size()); ++k) {
        ok = ok && t1.terms[std::size_t(k)].theta == WeightVec{2 * k + 1};
        ok = ok && t1.terms[std::size_t(k)].m == 1;
    }

    auto t2 = decompose_pi_alpha(a2(), {0, 0}, {Rat(0), Rat(0)}, 2);
    bool found = false;
    for (const auto& term : t2.terms)
        if (term.theta == WeightVec{1, 1} && term.m == 2) found = true;
    ok = ok && found;

    g.finish(ok);
}

TEST_CASE("criterion 3: leading term is multiplicity one") {
    Gate g{3, "m(sigma, sigma+) = 1 for sup-norm <= 6 over A1 and A2", 10.0};
    bool ok = true;
    for (const RootDatum& d : {a1(), a2()}) {
        std::vector<NuVector> nus;
        nus.emplace_back(std::size_t(d.rank()), Rat(0));
        for (int i = 0; i < d.rank(); ++i) {
            NuVector nu(std::size_t(d.rank()), Rat(0));
            nu[std::size_t(i)] = Rat(1);
            nus.push_back(nu);
        }
        std::vector<std::int64_t> box(std::size_t(d.rank()), 6);
        for (const auto& nu : nus)
            for_each_in_box(box, [&](const WeightVec& sigma) {
                if (!multiplicity_one_check(d, sigma, nu)) ok = false;
            });
    }
    g.finish(ok);
}

TEST_CASE("criterion 4: only the identity preserves the truncated order") {
    Gate g{4, "uniqueness search leaves the identity alone (A1 r=7, A2 r=1)", 60.0};
    bool ok = true;

    auto ca1 = uniqueness_search(a1(), {Rat(0)}, 7);
    ok = ok && ca1.classes.size() == 8 && ca1.identity_only();

    auto ca2 = uniqueness_search(a2(), {Rat(0), Rat(0)}, 1);
    ok = ok && ca2.classes.size() <= 12 && ca2.identity_only();

    g.finish(ok);
}

TEST_CASE("criterion 5: canonical forms are invariant and scaling composes") {
    Gate g{5, "1000 random Weyl translates and scaling pairs", 10.0};
    bool ok = true;
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::int64_t> coord(-9, 9);
    std::uniform_int_distribution<std::int64_t> num(-6, 6);
    std::uniform_int_distribution<std::int64_t> den(1, 3);

    const std::vector<RootDatum> data = {a1(), a2(), c2()};
    for (int trial = 0; trial < 1000; ++trial) {
        const RootDatum& d = data[std::size_t(trial % 3)];
        WeightVec sigma;
        NuVector nu;
        for (int i = 0; i < d.rank(); ++i) {
            sigma.push_back(coord(rng));
            nu.push_back(Rat(num(rng), den(rng)));
        }
        const auto& w = d.weyl_elements()[std::size_t(
            std::uniform_int_distribution<std::size_t>(
                0, std::size_t(d.weyl_order() - 1))(rng))];

        auto p = normalize_tempered(d, sigma, nu);
        auto pw = normalize_tempered(d, w.apply(sigma), w.apply(nu));
        if (p.sigma != pw.sigma || p.nu != pw.nu) ok = false;

        auto q = normalize_motion(d, sigma, nu);
        auto qw = normalize_motion(d, w.apply(sigma), w.apply(nu));
        if (q.sigma != qw.sigma || q.nu != qw.nu) ok = false;

        Rat s{num(rng), den(rng)}, t{num(rng), den(rng)};
        if (s == Rat(0)) s = Rat(1, 2);
        if (t == Rat(0)) t = Rat(-2);
        auto lhs = scaling_action(s, scaling_action(t, p));
        auto rhs = scaling_action(s * t, p);
        if (lhs.sigma != rhs.sigma || lhs.nu != rhs.nu) ok = false;
    }
    g.finish(ok);
}

TEST_CASE("criterion 6: scaled coefficients converge at first order") {
    Gate g{6, "e(t) falls monotonically with final ratio <= 0.7, four scenarios",
           600.0};
    bool ok = true;
    for (const char* name : kScenarioFiles) {
        auto sc = io::scenario_from_json(io::load_json_file(data_file(name)));
        try {
            auto rep = sl2::convergence_experiment(sc);
            bool here = rep.monotone && rep.last_ratio <= 0.7 &&
                        rep.limit_delta <= 1e-8 && rep.scaled_delta <= 1e-8;
            std::ostringstream os;
            os << "  " << name << ": e(t) =";
            for (const auto& row : rep.rows)
                os << " " << std::scientific << std::setprecision(2) << row.err;
            os << ", last ratio " << std::fixed << std::setprecision(3)
               << rep.last_ratio << ", deltas " << std::scientific
               << std::setprecision(2) << rep.limit_delta << " "
               << rep.scaled_delta << (here ? "" : "  <- FAIL");
            std::cout << os.str() << std::endl;
            ok = ok && here;
        } catch (const QuadratureUnconverged& e) {
            std::cout << "  " << name << ": " << e.what() << std::endl;
            ok = false;
        }
    }
    g.finish(ok);
}

TEST_CASE("criterion 7: the two motion charts agree") {
    Gate g{7, "motion value equal in both charts to 1e-6 relative", 120.0};
    // The charts integrate over different boxes; box order 44 puts the
    // coarser (limit) chart comfortably below the 1e-6 relative bar.
    const sl2::QuadOrders orders{14, 12, 8, 44, 44, 44};
    bool ok = true;
    for (const char* name : kScenarioFiles) {
        auto sc = io::scenario_from_json(io::load_json_file(data_file(name)));
        double rel = rel_diff(sl2::motion_rep_coeff(sc, orders),
                              sl2::motion_limit_coeff(sc, orders));
        std::cout << "  " << name << ": chart rel diff " << std::scientific
                  << std::setprecision(2) << rel << std::endl;
        ok = ok && rel <= 1e-6;
    }
    g.finish(ok);
}

TEST_CASE("criterion 8: direct and rescaled paths coincide") {
    Gate g{8, "scaled coefficient equal along both paths at t = 1, 1/2, 1/4", 120.0};
    bool ok = true;
    for (const char* name : kScenarioFiles) {
        auto sc = io::scenario_from_json(io::load_json_file(data_file(name)));
        for (double t : {1.0, 0.5, 0.25}) {
            auto p = sl2::key_property_probe(sc, t);
            double rel = p.abs_diff /
                         std::max({std::abs(p.path_a), std::abs(p.path_b), 1e-30});
            if (!(rel <= 1e-6)) {
                std::cout << "  " << name << " t=" << t << ": rel diff " << rel
                          << std::endl;
                ok = false;
            }
        }
    }
    g.finish(ok);
}

TEST_CASE("criterion 9: group-analysis substrate is sound") {
    Gate g{9, "Schur orthogonality to 1e-10 and Iwasawa reconstruction to 1e-12",
           30.0};
    bool ok = true;

    // All matrix-coefficient pairs through spin 2 against the K quadrature.
    KQuadrature kq = su2_quadrature(16, 12, 24);
    struct Label {
        int two_j, two_m, two_n;
    };
    std::vector<Label> labels;
    for (int two_j = 0; two_j <= 4; ++two_j)
        for (int two_m = -two_j; two_m <= two_j; two_m += 2)
            for (int two_n = -two_j; two_n <= two_j; two_n += 2)
                labels.push_back({two_j, two_m, two_n});
    std::vector<std::vector<sl2::cplx>> vals(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        vals[i].reserve(kq.nodes.size());
        for (const auto& node : kq.nodes)
            vals[i].push_back(wigner_d(labels[i].two_j, labels[i].two_m,
                                       labels[i].two_n, node.u));
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t k = 0; k < labels.size(); ++k) {
            sl2::cplx acc{0.0};
            for (std::size_t q = 0; q < kq.nodes.size(); ++q)
                acc += kq.nodes[q].w * vals[i][q] * std::conj(vals[k][q]);
            sl2::cplx expect{0.0};
            if (labels[i].two_j == labels[k].two_j &&
                labels[i].two_m == labels[k].two_m &&
                labels[i].two_n == labels[k].two_n)
                expect = 1.0 / double(labels[i].two_j + 1);
            worst = std::max(worst, std::abs(acc - expect));
        }
    ok = ok && worst <= 1e-10;

    // Random det-1 matrices with entries up to 10 in modulus.
    std::mt19937 rng(2026);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    int done = 0;
    double worst_rec = 0.0;
    while (done < 10000) {
        sl2::cplx a{u(rng), u(rng)}, b{u(rng), u(rng)}, c{u(rng), u(rng)};
        if (std::abs(a) < 0.3) continue;
        sl2::cplx dd = (sl2::cplx{1.0} + b * c) / a;
        if (std::abs(dd) > 10.0) continue;
        Mat2 m{a, b, c, dd};
        sl2::Iwasawa iw = sl2::iwasawa(m);
        Mat2 rec = iw.k * Mat2::diag(std::exp(iw.H), std::exp(-iw.H)) *
                   Mat2{1.0, iw.n, 0.0, 1.0};
        double err = std::sqrt(std::norm(rec.a - m.a) + std::norm(rec.b - m.b) +
                               std::norm(rec.c - m.c) + std::norm(rec.d - m.d));
        worst_rec = std::max(worst_rec, err);
        ++done;
    }
    ok = ok && worst_rec <= 1e-12;

    g.finish(ok);
}
