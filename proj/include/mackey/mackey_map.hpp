#ifndef MACKEY_MACKEY_MAP_HPP
#define MACKEY_MACKEY_MAP_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "mackey/duals.hpp"
#include "mackey/errors.hpp"
#include "mackey/multiplicity.hpp"
#include "mackey/root_datum.hpp"

namespace mackey {

// The bijection between the two duals is the identity on canonical
// parameters; its content is which representation the parameter labels on
// each side.  Round trips are exact.
inline MotionParam mackey_mu(const TemperedParam& p) {
    if (p.datum == nullptr) throw DatumMismatch("parameter without datum");
    return normalize_motion(*p.datum, p.sigma, p.nu);
}

inline TemperedParam mackey_mu_inverse(const MotionParam& p) {
    if (p.datum == nullptr) throw DatumMismatch("parameter without datum");
    return normalize_tempered(*p.datum, p.sigma, p.nu);
}

struct DecompositionTerm {
    WeightVec theta; // dominant representative for Phi_nu
    std::int64_t m;
};

// Restriction table of a scaled principal-series class against the motion
// classes over the same nu, truncated to sup-norm radius.  Expressed in the
// chamber-normalized frame: nu dominant, sigma conjugated along, each theta
// the dominant representative of its stabilizer orbit.  Terms are ordered
// lexicographically in theta.
struct DecompositionTable {
    WeightVec sigma;
    NuVector nu;
    int radius = 0;
    std::vector<DecompositionTerm> terms;
};

namespace detail {

inline std::int64_t sup_norm(const WeightVec& v) {
    std::int64_t m = 0;
    for (auto x : v) m = std::max(m, std::int64_t(std::abs(x)));
    return m;
}

// Enumerates integer vectors in the sup-norm box that are dominant for the
// frame's stabilizer and share sigma's coordinates outside the semisimple
// block (classes differing there cannot carry sigma at all).
inline std::vector<WeightVec> frame_classes(const RootDatum& d, const NuFrame& f, int radius,
                                            const WeightVec* central_anchor) {
    std::vector<WeightVec> out;
    const int n = d.rank();
    const int ss = d.ss_rank();
    WeightVec cur(std::size_t(n), 0);
    std::vector<int> free_axes;
    for (int j = 0; j < ss; ++j) free_axes.push_back(j);
    if (central_anchor) {
        for (int j = ss; j < n; ++j) cur[std::size_t(j)] = (*central_anchor)[std::size_t(j)];
    } else {
        for (int j = ss; j < n; ++j) free_axes.push_back(j);
    }
    std::vector<bool> is_wall(std::size_t(n), false);
    for (int i : f.st.indices) is_wall[std::size_t(i)] = true;

    struct Walker {
        const std::vector<int>& axes;
        const std::vector<bool>& wall;
        int radius;
        std::vector<WeightVec>& out;
        void run(WeightVec& v, std::size_t k) {
            if (k == axes.size()) {
                out.push_back(v);
                return;
            }
            int j = axes[k];
            std::int64_t lo = wall[std::size_t(j)] ? 0 : -radius;
            for (std::int64_t x = lo; x <= radius; ++x) {
                v[std::size_t(j)] = x;
                run(v, k + 1);
            }
        }
    } walker{free_axes, is_wall, radius, out};
    walker.run(cur, 0);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace detail

// pi_{sigma,nu} restricted along the scaled family decomposes over the
// motion classes at nu; the table lists exactly the classes in the radius
// box with positive multiplicity.
inline DecompositionTable decompose_pi_alpha(const RootDatum& d, const WeightVec& sigma,
                                             const NuVector& nu, int radius,
                                             MultMethod method = MultMethod::freudenthal) {
    d.check_length(sigma);
    auto f = detail::nu_frame(d, nu);
    WeightVec sconj = f.st.to_dominant.apply(sigma);
    WeightVec splus = detail::dominate_in_frame(d, f, sconj);
    if (radius < detail::sup_norm(sigma))
        throw RadiusTooSmall("radius " + std::to_string(radius) + " < ||sigma||_inf = " +
                             std::to_string(detail::sup_norm(sigma)));
    if (radius < detail::sup_norm(splus))
        throw RadiusTooSmall("radius " + std::to_string(radius) +
                             " < ||dominated sigma||_inf = " +
                             std::to_string(detail::sup_norm(splus)));

    DecompositionTable table{sconj, f.st.dominant, radius, {}};
    for (auto& theta : detail::frame_classes(d, f, radius, &sconj)) {
        std::int64_t m = detail::m_sigma_theta_framed(d, f, sconj, theta, method);
        if (m > 0) table.terms.push_back({std::move(theta), m});
    }
    return table;
}

// m(sigma, sigma^+) = 1: the dominated class itself appears exactly once.
inline bool multiplicity_one_check(const RootDatum& d, const WeightVec& sigma,
                                   const NuVector& nu) {
    d.check_length(sigma);
    auto f = detail::nu_frame(d, nu);
    WeightVec sconj = f.st.to_dominant.apply(sigma);
    return detail::m_sigma_theta_framed(d, f, sconj, sconj, MultMethod::freudenthal) == 1;
}

// Certificate for the order-theoretic uniqueness argument on a finite
// truncation T of the classes over nu: every bijection f of T with
// f(x) >= x in the hull order is recorded; the expected survivor list is
// exactly the identity.  Evidence for the truncation only, not a proof for
// the full dual.
struct BijectionCertificate {
    NuVector nu;
    int radius = 0;
    std::vector<WeightVec> classes;          // the truncation T, sorted
    std::int64_t candidates_checked = 0;     // assignments explored by the search
    std::vector<std::vector<int>> survivors; // image index per class position

    bool identity_only() const {
        if (survivors.size() != 1) return false;
        for (std::size_t i = 0; i < survivors[0].size(); ++i)
            if (survivors[0][i] != int(i)) return false;
        return true;
    }
};

inline BijectionCertificate uniqueness_search(const RootDatum& d, const NuVector& nu, int radius,
                                              std::int64_t candidate_cap = 10000000) {
    auto f = detail::nu_frame(d, nu);
    BijectionCertificate cert;
    cert.nu = f.st.dominant;
    cert.radius = radius;
    cert.classes = detail::frame_classes(d, f, radius, nullptr);
    const std::size_t n = cert.classes.size();

    // The truncation must be downward closed in the hull order, otherwise
    // the certificate would silently ignore constraints from classes just
    // outside the box.  Scan the orbit hull of every class for dominant
    // integer points that escape the radius.
    for (const auto& theta : cert.classes) {
        std::vector<WeightVec> orbit{theta};
        std::map<WeightVec, bool> seen{{theta, true}};
        for (std::size_t head = 0; head < orbit.size(); ++head) {
            for (int i : f.st.indices) {
                WeightVec nxt = d.reflect(orbit[head], i);
                if (seen.emplace(nxt, true).second) orbit.push_back(std::move(nxt));
            }
        }
        WeightVec lo = theta, hi = theta;
        for (const auto& p : orbit)
            for (std::size_t j = 0; j < p.size(); ++j) {
                lo[j] = std::min(lo[j], p[j]);
                hi[j] = std::max(hi[j], p[j]);
            }
        WeightVec probe(lo.size(), 0);
        struct Scan {
            const RootDatum& d;
            const detail::NuFrame& f;
            const WeightVec& lo;
            const WeightVec& hi;
            const WeightVec& theta;
            int radius;
            void run(WeightVec& v, std::size_t j) {
                if (j == v.size()) {
                    for (int i : f.st.indices)
                        if (v[std::size_t(i)] < 0) return;
                    if (detail::sup_norm(v) <= radius) return;
                    if (detail::hull_leq_framed(d, f, v, theta))
                        throw NotDownwardClosed(
                            "truncation radius " + std::to_string(radius) +
                            " is not hull-closed: a dominant class below a boxed class "
                            "escapes the box");
                    return;
                }
                for (std::int64_t x = lo[j]; x <= hi[j]; ++x) {
                    v[j] = x;
                    run(v, j + 1);
                }
            }
        } scan{d, f, lo, hi, theta, radius};
        scan.run(probe, 0);
    }

    // Order matrix and a linear extension (sorted by number of classes
    // below, ties kept lexicographic by construction of `classes`).
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            leq[a][b] = detail::hull_leq_framed(d, f, cert.classes[a], cert.classes[b]);
    std::vector<int> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = int(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        std::size_t below_a = 0, below_b = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (leq[j][std::size_t(a)]) ++below_a;
            if (leq[j][std::size_t(b)]) ++below_b;
        }
        return below_a < below_b;
    });

    // Backtracking over image assignments, smallest classes first; each
    // attempted assignment counts against the cap.
    std::vector<int> image(n, -1);
    std::vector<bool> used(n, false);
    struct Search {
        const std::vector<std::vector<bool>>& leq;
        const std::vector<int>& order;
        std::vector<int>& image;
        std::vector<bool>& used;
        std::int64_t cap;
        std::int64_t checked = 0;
        std::vector<std::vector<int>>& survivors;
        void run(std::size_t k) {
            if (k == order.size()) {
                survivors.push_back(image);
                return;
            }
            std::size_t x = std::size_t(order[k]);
            for (std::size_t y = 0; y < leq.size(); ++y) {
                if (used[y] || !leq[x][y]) continue;
                if (++checked > cap)
                    throw SearchCapExceeded("uniqueness search exceeded candidate cap " +
                                            std::to_string(cap));
                used[y] = true;
                image[x] = int(y);
                run(k + 1);
                used[y] = false;
                image[x] = -1;
            }
        }
    } search{leq, order, image, used, candidate_cap, 0, cert.survivors};
    search.run(0);
    cert.candidates_checked = search.checked;
    std::sort(cert.survivors.begin(), cert.survivors.end());
    return cert;
}

} // namespace mackey

#endif
