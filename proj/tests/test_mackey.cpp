#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mackey/mackey_map.hpp"

using namespace mackey;

namespace {

const RootDatum& a1() {
    static RootDatum d = validate_root_datum({{2}});
    return d;
}
const RootDatum& a2() {
    static RootDatum d = validate_root_datum({{2, -1}, {-1, 2}});
    return d;
}
const RootDatum& c2() {
    static RootDatum d = validate_root_datum({{2, -1}, {-2, 2}});
    return d;
}

NuVector nu_zero(const RootDatum& d) { return NuVector(std::size_t(d.rank()), Rat(0)); }

std::vector<std::pair<WeightVec, std::int64_t>> flat(const DecompositionTable& t) {
    std::vector<std::pair<WeightVec, std::int64_t>> out;
    for (const auto& term : t.terms) out.emplace_back(term.theta, term.m);
    return out;
}

} // namespace

TEST_CASE("bijection round trips") {
    auto p = normalize_tempered(a1(), WeightVec{3}, NuVector{Rat(2)});
    auto q = mackey_mu(p);
    REQUIRE(q.sigma == WeightVec{3});
    REQUIRE(q.nu == NuVector{Rat(2)});
    auto back = mackey_mu_inverse(q);
    REQUIRE(back.sigma == p.sigma);
    REQUIRE(back.nu == p.nu);

    auto z = mackey_mu(normalize_tempered(a1(), WeightVec{0}, NuVector{Rat(0)}));
    REQUIRE(z.sigma == WeightVec{0});

    auto r = mackey_mu(normalize_tempered(a2(), WeightVec{1, 0}, NuVector{Rat(0), Rat(1)}));
    REQUIRE(r.sigma == WeightVec{1, 0});
    REQUIRE(r.nu == NuVector{Rat(0), Rat(1)});

    TemperedParam null_param{nullptr, WeightVec{0}, NuVector{Rat(0)}};
    REQUIRE_THROWS_AS(mackey_mu(null_param), DatumMismatch);

    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<std::int64_t> num(-5, 5);
    std::uniform_int_distribution<std::int64_t> den(1, 3);
    for (const RootDatum* dp : {&a2(), &c2()}) {
        const RootDatum& d = *dp;
        for (int trial = 0; trial < 100; ++trial) {
            WeightVec sigma{num(rng), num(rng)};
            NuVector nu{Rat(num(rng), den(rng)), Rat(num(rng), den(rng))};
            auto t = normalize_tempered(d, sigma, nu);
            auto m = mackey_mu(t);
            auto t2 = mackey_mu_inverse(m);
            REQUIRE(t2.sigma == t.sigma);
            REQUIRE(t2.nu == t.nu);
            auto m2 = mackey_mu(t2);
            REQUIRE(m2.sigma == m.sigma);
            REQUIRE(m2.nu == m.nu);
        }
    }
}

TEST_CASE("decomposition tables") {
    using Terms = std::vector<std::pair<WeightVec, std::int64_t>>;

    auto t1 = decompose_pi_alpha(a1(), {1}, nu_zero(a1()), 5);
    REQUIRE(flat(t1) == Terms{{{1}, 1}, {{3}, 1}, {{5}, 1}});
    REQUIRE(t1.radius == 5);
    REQUIRE(t1.sigma == WeightVec{1});

    auto t2 = decompose_pi_alpha(a1(), {1}, NuVector{Rat(2)}, 4);
    REQUIRE(flat(t2) == Terms{{{1}, 1}});

    auto t3 = decompose_pi_alpha(a2(), {0, 0}, nu_zero(a2()), 1);
    REQUIRE(flat(t3) == Terms{{{0, 0}, 1}, {{1, 1}, 2}});

    auto t4 = decompose_pi_alpha(a1(), {1}, nu_zero(a1()), 9);
    REQUIRE(flat(t4) == Terms{{{1}, 1}, {{3}, 1}, {{5}, 1}, {{7}, 1}, {{9}, 1}});

    REQUIRE_THROWS_AS(decompose_pi_alpha(a1(), {5}, nu_zero(a1()), 3), RadiusTooSmall);
    REQUIRE_THROWS_AS(decompose_pi_alpha(a1(), {-5}, nu_zero(a1()), 4), RadiusTooSmall);

    // Table invariants: multiplicities match the direct computation, the
    // dominated sigma appears once, and every term is above sigma in hull
    // order.  Both multiplicity routes agree on the table.
    for (const RootDatum* dp : {&a2(), &c2()}) {
        const RootDatum& d = *dp;
        for (const NuVector& nu : {nu_zero(d), NuVector{Rat(1), Rat(0)}}) {
            WeightVec sigma{1, -1};
            auto table = decompose_pi_alpha(d, sigma, nu, 3);
            auto kostant = decompose_pi_alpha(d, sigma, nu, 3, MultMethod::kostant);
            REQUIRE(flat(table) == flat(kostant));
            std::size_t sigma_class_terms = 0;
            for (const auto& term : table.terms) {
                REQUIRE(term.m == m_sigma_theta(d, nu, sigma, term.theta));
                REQUIRE(hull_leq(d, nu, sigma, term.theta));
                REQUIRE(term.m > 0);
                if (hull_leq(d, nu, term.theta, sigma)) {
                    ++sigma_class_terms;
                    REQUIRE(term.m == 1);  // the class of sigma itself
                }
            }
            REQUIRE(sigma_class_terms == 1);
            for (std::size_t i = 1; i < table.terms.size(); ++i)
                REQUIRE(table.terms[i - 1].theta < table.terms[i].theta);
        }
    }
}

TEST_CASE("decomposition is scaling equivariant") {
    for (const Rat& t : {Rat(2), Rat(3, 2), Rat(1, 4)}) {
        for (const NuVector& nu :
             {NuVector{Rat(1), Rat(0)}, NuVector{Rat(1), Rat(2)}, nu_zero(a2())}) {
            NuVector scaled(nu.size());
            for (std::size_t i = 0; i < nu.size(); ++i) scaled[i] = nu[i] * t;
            auto base = decompose_pi_alpha(a2(), {2, 0}, nu, 3);
            auto moved = decompose_pi_alpha(a2(), {2, 0}, scaled, 3);
            REQUIRE(flat(base) == flat(moved));
        }
    }
}

TEST_CASE("multiplicity one") {
    REQUIRE(multiplicity_one_check(a1(), {1}, nu_zero(a1())));
    REQUIRE(multiplicity_one_check(a1(), {0}, NuVector{Rat(3, 2)}));
    REQUIRE(multiplicity_one_check(a2(), {1, 1}, nu_zero(a2())));
    for (const RootDatum* dp : {&a1(), &a2(), &c2()}) {
        const RootDatum& d = *dp;
        std::vector<NuVector> probes{nu_zero(d)};
        for (int i = 0; i < d.ss_rank(); ++i) {
            NuVector e(std::size_t(d.rank()), Rat(0));
            e[std::size_t(i)] = Rat(1);
            probes.push_back(e);
        }
        std::vector<WeightVec> sigmas;
        if (d.ss_rank() == 1) {
            for (std::int64_t s = -4; s <= 4; ++s) sigmas.push_back({s});
        } else {
            for (std::int64_t s0 = -4; s0 <= 4; ++s0)
                for (std::int64_t s1 = -4; s1 <= 4; ++s1) sigmas.push_back({s0, s1});
        }
        for (const auto& nu : probes)
            for (const auto& sigma : sigmas) REQUIRE(multiplicity_one_check(d, sigma, nu));
    }
}

TEST_CASE("uniqueness search returns only the identity") {
    auto c1 = uniqueness_search(a1(), nu_zero(a1()), 7);
    REQUIRE(c1.classes.size() == 8);
    for (std::int64_t k = 0; k <= 7; ++k) REQUIRE(c1.classes[std::size_t(k)] == WeightVec{k});
    REQUIRE(c1.identity_only());
    REQUIRE(c1.survivors.size() == 1);
    REQUIRE(c1.candidates_checked >= 8);
    REQUIRE(c1.candidates_checked < 40320);  // pruned well below 8!

    auto single = uniqueness_search(a1(), nu_zero(a1()), 0);
    REQUIRE(single.classes.size() == 1);
    REQUIRE(single.identity_only());

    // Trivial stabilizer: the box is an antichain, so the identity is the
    // only order-compatible bijection outright.
    auto torus = uniqueness_search(a1(), NuVector{Rat(2)}, 3);
    REQUIRE(torus.classes.size() == 7);
    REQUIRE(torus.identity_only());

    auto ca2 = uniqueness_search(a2(), nu_zero(a2()), 1);
    REQUIRE(ca2.classes.size() == 4);
    REQUIRE(ca2.identity_only());

    REQUIRE_THROWS_AS(uniqueness_search(a2(), nu_zero(a2()), 2), NotDownwardClosed);
    REQUIRE_THROWS_AS(uniqueness_search(c2(), nu_zero(c2()), 1), NotDownwardClosed);
    REQUIRE_THROWS_AS(uniqueness_search(a1(), nu_zero(a1()), 7, 3), SearchCapExceeded);
}
