#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <utility>

#include "mackey/duals.hpp"

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

// Oracle for the canonical form: scan all of W, keep the images with nu
// dominant and sigma nonnegative on the walls of nu, take the lex-minimal
// sigma.  Uses nothing from duals.hpp.
std::pair<WeightVec, NuVector> brute_canonical(const RootDatum& d, const WeightVec& sigma,
                                               const NuVector& nu) {
    std::pair<WeightVec, NuVector> best;
    bool have = false;
    for (const auto& w : d.weyl_elements()) {
        NuVector n = w.apply(nu);
        if (!d.is_dominant(n)) continue;
        WeightVec s = w.apply(sigma);
        bool wall_dominant = true;
        for (int i = 0; i < d.ss_rank(); ++i)
            if (n[std::size_t(i)].is_zero() && s[std::size_t(i)] < 0) wall_dominant = false;
        if (!wall_dominant) continue;
        std::pair<WeightVec, NuVector> cand{std::move(s), std::move(n)};
        if (!have || cand < best) {
            best = std::move(cand);
            have = true;
        }
    }
    REQUIRE(have);
    return best;
}

NuVector nu_int(std::initializer_list<std::int64_t> xs) {
    NuVector v;
    for (auto x : xs) v.emplace_back(x);
    return v;
}

} // namespace

TEST_CASE("normalize examples") {
    auto p = normalize_tempered(a1(), WeightVec{-3}, nu_int({-2}));
    REQUIRE(p.sigma == WeightVec{3});
    REQUIRE(p.nu == nu_int({2}));

    auto z = normalize_tempered(a2(), WeightVec{0, 0}, nu_int({0, 0}));
    REQUIRE(z.sigma == WeightVec{0, 0});
    REQUIRE(z.nu == nu_int({0, 0}));

    // nu = 0 makes the full group act on sigma.
    auto q = normalize_tempered(a2(), WeightVec{1, -1}, nu_int({0, 0}));
    REQUIRE(q.sigma == WeightVec{0, 1});
    REQUIRE(q.nu == nu_int({0, 0}));

    auto m0 = normalize_motion(a1(), WeightVec{2}, nu_int({0}));
    REQUIRE(m0.sigma == WeightVec{2});
    auto m1 = normalize_motion(a1(), WeightVec{-2}, nu_int({0}));
    REQUIRE(m1.sigma == WeightVec{2});

    // nu on a wall: sigma is moved by the wall reflection only.
    auto m2 = normalize_motion(a2(), WeightVec{0, -1}, nu_int({1, 0}));
    REQUIRE(m2.nu == nu_int({1, 0}));
    REQUIRE(m2.sigma == WeightVec{-1, 1});
    auto m3 = normalize_motion(a2(), WeightVec{0, 1}, nu_int({1, 0}));
    REQUIRE(m3.sigma == WeightVec{0, 1});
}

TEST_CASE("normalization agrees with the full-group scan") {
    std::mt19937_64 rng(20260814);
    std::uniform_int_distribution<std::int64_t> num(-6, 6);
    std::uniform_int_distribution<std::int64_t> den(1, 4);
    for (const RootDatum* dp : {&a1(), &a2(), &c2()}) {
        const RootDatum& d = *dp;
        for (int trial = 0; trial < 200; ++trial) {
            WeightVec sigma(std::size_t(d.rank()));
            NuVector nu(std::size_t(d.rank()));
            for (auto& x : sigma) x = num(rng);
            for (auto& x : nu) x = Rat(num(rng), den(rng));
            if (trial % 3 == 0)
                for (auto& x : nu) x = Rat(num(rng) / 3);  // force walls often
            auto expect = brute_canonical(d, sigma, nu);
            auto t = normalize_tempered(d, sigma, nu);
            REQUIRE(t.sigma == expect.first);
            REQUIRE(t.nu == expect.second);
            auto m = normalize_motion(d, sigma, nu);
            REQUIRE(m.sigma == expect.first);
            REQUIRE(m.nu == expect.second);

            // Idempotence and W-invariance, exactly.
            auto tt = normalize_tempered(d, t.sigma, t.nu);
            REQUIRE(tt.sigma == t.sigma);
            REQUIRE(tt.nu == t.nu);
            for (const auto& w : d.weyl_elements()) {
                auto tw = normalize_tempered(d, w.apply(sigma), w.apply(nu));
                REQUIRE(tw.sigma == t.sigma);
                REQUIRE(tw.nu == t.nu);
            }
        }
    }
}

TEST_CASE("equivalence") {
    auto p = normalize_tempered(a1(), WeightVec{3}, nu_int({2}));
    auto q = normalize_tempered(a1(), WeightVec{-3}, nu_int({-2}));
    REQUIRE(equivalent(p, q));

    TemperedParam r{&a1(), WeightVec{3}, nu_int({-2})};
    REQUIRE_FALSE(equivalent(p, r));
    REQUIRE(equivalent(p, p));

    TemperedParam other{&a2(), WeightVec{0, 0}, nu_int({0, 0})};
    REQUIRE_THROWS_AS(equivalent(p, other), DatumMismatch);
    TemperedParam null_param{nullptr, WeightVec{3}, nu_int({2})};
    REQUIRE_THROWS_AS(equivalent(p, null_param), DatumMismatch);

    // equivalent(p, q) iff some group element carries one raw pair to the
    // other; checked exhaustively.
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> num(-3, 3);
    const RootDatum& d = c2();
    for (int trial = 0; trial < 120; ++trial) {
        TemperedParam x{&d, {num(rng), num(rng)}, nu_int({num(rng), num(rng)})};
        TemperedParam y{&d, {num(rng), num(rng)}, nu_int({num(rng), num(rng)})};
        bool conjugate = false;
        for (const auto& w : d.weyl_elements())
            if (w.apply(x.sigma) == y.sigma && w.apply(x.nu) == y.nu) conjugate = true;
        REQUIRE(equivalent(x, y) == conjugate);
        MotionParam mx{&d, x.sigma, x.nu};
        MotionParam my{&d, y.sigma, y.nu};
        REQUIRE(equivalent(mx, my) == conjugate);
    }
}

TEST_CASE("scaling action") {
    auto p = normalize_tempered(a1(), WeightVec{3}, nu_int({2}));

    auto same = scaling_action(Rat(1), p);
    REQUIRE(same.sigma == p.sigma);
    REQUIRE(same.nu == p.nu);

    auto half = scaling_action(Rat(1, 2), p);
    REQUIRE(half.sigma == WeightVec{3});
    REQUIRE(half.nu == nu_int({4}));

    // Negative t lands in the opposite chamber; renormalizing negates sigma
    // along with nu.
    auto neg = scaling_action(Rat(-1), p);
    REQUIRE(neg.sigma == WeightVec{-3});
    REQUIRE(neg.nu == nu_int({2}));
    auto back = scaling_action(Rat(-1), neg);
    REQUIRE(back.sigma == p.sigma);
    REQUIRE(back.nu == p.nu);

    REQUIRE_THROWS_AS(scaling_action(Rat(0), p), ZeroScale);

    // Positive scalings fix sigma and rescale nu at regular dominant nu.
    auto reg = normalize_tempered(a2(), WeightVec{2, 3}, nu_int({1, 2}));
    auto scaled = scaling_action(Rat(3, 2), reg);
    REQUIRE(scaled.sigma == reg.sigma);
    REQUIRE(scaled.nu == NuVector{Rat(2, 3), Rat(4, 3)});
}

TEST_CASE("scaling group law holds exactly") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::int64_t> num(-5, 5);
    std::uniform_int_distribution<std::int64_t> den(1, 4);
    auto rat_nonzero = [&] {
        std::int64_t n = 0;
        while (n == 0) n = num(rng);
        return Rat(n, den(rng));
    };
    for (const RootDatum* dp : {&a1(), &a2(), &c2()}) {
        const RootDatum& d = *dp;
        for (int trial = 0; trial < 150; ++trial) {
            WeightVec sigma(std::size_t(d.rank()));
            NuVector nu(std::size_t(d.rank()));
            for (auto& x : sigma) x = num(rng);
            for (auto& x : nu) x = Rat(num(rng), den(rng));
            auto p = normalize_tempered(d, sigma, nu);
            Rat t1 = rat_nonzero(), t2 = rat_nonzero();
            auto lhs = scaling_action(t1, scaling_action(t2, p));
            auto rhs = scaling_action(t1 * t2, p);
            REQUIRE(lhs.sigma == rhs.sigma);
            REQUIRE(lhs.nu == rhs.nu);
        }
    }
}

TEST_CASE("central coordinates pass through normalization") {
    RootDatum d = validate_root_datum({{2}}, 1);
    auto p = normalize_tempered(d, WeightVec{3, 7}, NuVector{Rat(-2), Rat(5, 3)});
    REQUIRE(p.sigma == WeightVec{-3, 7});
    REQUIRE(p.nu == NuVector{Rat(2), Rat(5, 3)});
}
