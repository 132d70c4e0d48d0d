#ifndef MACKEY_DUALS_HPP
#define MACKEY_DUALS_HPP

#include <utility>

#include "mackey/errors.hpp"
#include "mackey/root_datum.hpp"

namespace mackey {

// Both dual parametrizations carry the same canonical data: nu in the closed
// dominant chamber, sigma dominant for the stabilizer sub-datum of nu, and
// lexicographically minimal among the stabilizer-orbit points with that
// property (the dominant representative is in fact unique; the tie-break is
// kept because the contract states it).  The two types differ in reading:
// a TemperedParam labels a pair up to simultaneous conjugacy, a MotionParam
// labels a stabilizer orbit of characters over a chamber point.

struct TemperedParam {
    const RootDatum* datum;
    WeightVec sigma;
    NuVector nu;
};

struct MotionParam {
    const RootDatum* datum;
    WeightVec sigma;
    NuVector nu;
};

namespace detail {

inline std::pair<WeightVec, NuVector> canonical_pair(const RootDatum& d, const WeightVec& sigma,
                                                     const NuVector& nu) {
    d.check_length(sigma);
    d.check_length(nu);
    auto dom = dominant_rep(d, nu);
    WeightVec s = dom.w.apply(sigma);
    std::vector<int> fixed;
    for (int i = 0; i < d.ss_rank(); ++i)
        if (dom.rep[std::size_t(i)].is_zero()) fixed.push_back(i);

    // Orbit of s under the stabilizer generators; keep the dominant points.
    std::vector<WeightVec> queue{s};
    std::map<WeightVec, bool> seen{{s, true}};
    WeightVec best;
    bool have_best = false;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        WeightVec cur = queue[head];
        bool dominant = true;
        for (int i : fixed)
            if (cur[std::size_t(i)] < 0) dominant = false;
        if (dominant && (!have_best || cur < best)) {
            best = cur;
            have_best = true;
        }
        for (int i : fixed) {
            WeightVec nxt = d.reflect(cur, i);
            if (!seen.emplace(nxt, true).second) continue;
            queue.push_back(std::move(nxt));
        }
    }
    return {best, dom.rep};
}

} // namespace detail

inline TemperedParam normalize_tempered(const RootDatum& d, const WeightVec& sigma,
                                        const NuVector& nu) {
    auto [s, n] = detail::canonical_pair(d, sigma, nu);
    return TemperedParam{&d, std::move(s), std::move(n)};
}

inline MotionParam normalize_motion(const RootDatum& d, const WeightVec& sigma,
                                    const NuVector& nu) {
    auto [s, n] = detail::canonical_pair(d, sigma, nu);
    return MotionParam{&d, std::move(s), std::move(n)};
}

namespace detail {

template <typename Param>
void check_same_datum(const Param& p, const Param& q) {
    if (p.datum == nullptr || q.datum == nullptr) throw DatumMismatch("parameter without datum");
    if (!(*p.datum == *q.datum)) throw DatumMismatch("parameters over different root data");
}

} // namespace detail

inline bool equivalent(const TemperedParam& p, const TemperedParam& q) {
    detail::check_same_datum(p, q);
    auto a = detail::canonical_pair(*p.datum, p.sigma, p.nu);
    auto b = detail::canonical_pair(*q.datum, q.sigma, q.nu);
    return a == b;
}

inline bool equivalent(const MotionParam& p, const MotionParam& q) {
    detail::check_same_datum(p, q);
    auto a = detail::canonical_pair(*p.datum, p.sigma, p.nu);
    auto b = detail::canonical_pair(*q.datum, q.sigma, q.nu);
    return a == b;
}

// Dual action of the scaling automorphism: the continuous parameter moves by
// 1/t and the result is renormalized.  Negative t lands in the opposite
// chamber, which the normalization absorbs.  Exact on rationals, so the
// group law alpha_{t1} o alpha_{t2} = alpha_{t1 t2} holds on the nose.
inline TemperedParam scaling_action(const Rat& t, const TemperedParam& p) {
    if (t.is_zero()) throw ZeroScale("scaling parameter must be nonzero");
    if (p.datum == nullptr) throw DatumMismatch("parameter without datum");
    NuVector scaled(p.nu.size());
    for (std::size_t i = 0; i < p.nu.size(); ++i) scaled[i] = p.nu[i] / t;
    return normalize_tempered(*p.datum, p.sigma, scaled);
}

} // namespace mackey

#endif
