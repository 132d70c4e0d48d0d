#ifndef MACKEY_MULTIPLICITY_HPP
#define MACKEY_MULTIPLICITY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "mackey/errors.hpp"
#include "mackey/linalg.hpp"
#include "mackey/root_datum.hpp"

namespace mackey {

enum class MultMethod { freudenthal, kostant };

namespace detail {

// Positive rationals d_i with d_j * cartan[i][j] == d_i * cartan[j][i]; they
// symmetrize the Cartan matrix so that (v, alpha_i) = d_i * v_i for v in
// fundamental-weight coordinates.  Normalization per component is irrelevant
// to every identity used here.
inline RatVec symmetrizer(const RootDatum& d) {
    const int n = d.ss_rank();
    RatVec sym(std::size_t(n), Rat(0));
    std::vector<bool> seen(std::size_t(n), false);
    for (int start = 0; start < n; ++start) {
        if (seen[std::size_t(start)]) continue;
        sym[std::size_t(start)] = Rat(1);
        seen[std::size_t(start)] = true;
        std::vector<int> queue{start};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int i = queue[head];
            for (int j = 0; j < n; ++j) {
                auto cij = d.cartan()[std::size_t(i)][std::size_t(j)];
                if (i == j || cij == 0) continue;
                Rat expect = sym[std::size_t(i)] * Rat(d.cartan()[std::size_t(j)][std::size_t(i)], cij);
                if (seen[std::size_t(j)]) {
                    if (sym[std::size_t(j)] != expect)
                        throw NotCartan("Cartan matrix is not symmetrizable");
                } else {
                    sym[std::size_t(j)] = expect;
                    seen[std::size_t(j)] = true;
                    queue.push_back(j);
                }
            }
        }
    }
    return sym;
}

// (v, u) with u given by root-basis coordinates; v in fundamental-weight
// coordinates.  Only defined against the root span, which is all the
// recursion needs.
inline Rat pairing_span(const RatVec& sym, const IntVec& v, const IntVec& root_coords) {
    Rat acc(0);
    for (std::size_t j = 0; j < root_coords.size(); ++j)
        if (root_coords[j] != 0) acc += Rat(root_coords[j]) * sym[j] * Rat(v[j]);
    return acc;
}

// Root-basis coordinates of a vector in the root lattice; nullopt when the
// vector leaves the span or the coordinates are not integers.
inline std::optional<IntVec> root_coords_of(const RootDatum& d, const WeightVec& v) {
    std::vector<RatVec> gens;
    for (const auto& a : d.simple_roots()) gens.push_back(to_rat(a));
    auto sol = solve_in_span(gens, to_rat(v));
    if (!sol) return std::nullopt;
    IntVec c(sol->size());
    for (std::size_t j = 0; j < sol->size(); ++j) {
        if (!(*sol)[j].is_integer()) return std::nullopt;
        c[j] = (*sol)[j].num();
    }
    return c;
}

} // namespace detail

// Number of ways to write beta as a nonnegative integer combination of
// positive roots.  Streams through the root list in fixed order, so each
// multiset is counted once.
inline std::int64_t kostant_partition(const RootDatum& d, const WeightVec& beta) {
    d.check_length(beta);
    auto coords = detail::root_coords_of(d, beta);
    if (!coords) return 0;
    for (auto c : *coords)
        if (c < 0) return 0;
    const auto& roots = d.positive_root_coords();
    // count(idx, rem): combinations using roots[idx..] summing to rem.
    std::vector<IntVec> stack;
    struct Counter {
        const std::vector<IntVec>& roots;
        std::int64_t run(std::size_t idx, IntVec rem) {
            bool zero = true;
            for (auto r : rem)
                if (r != 0) zero = false;
            if (zero) return 1;
            if (idx == roots.size()) return 0;
            std::int64_t total = 0;
            for (std::int64_t k = 0;; ++k) {
                IntVec next = rem;
                bool ok = true;
                for (std::size_t j = 0; j < rem.size(); ++j) {
                    next[j] = rem[j] - k * roots[idx][j];
                    if (next[j] < 0) ok = false;
                }
                if (!ok) break;
                total += run(idx + 1, next);
            }
            return total;
        }
    } counter{roots};
    return counter.run(0, *coords);
}

namespace detail {

struct FreudenthalCtx {
    const RootDatum& d;
    const RatVec sym;
    const WeightVec theta;       // dominant highest weight
    const IntVec theta_plus_rho; // theta + rho, reused
    std::map<WeightVec, std::int64_t> memo;
};

inline std::int64_t freudenthal_dominant(FreudenthalCtx& ctx, const WeightVec& sigma_dom) {
    if (sigma_dom == ctx.theta) return 1;
    auto hit = ctx.memo.find(sigma_dom);
    if (hit != ctx.memo.end()) return hit->second;

    WeightVec diff(sigma_dom.size());
    for (std::size_t j = 0; j < diff.size(); ++j) diff[j] = ctx.theta[j] - sigma_dom[j];
    auto coords = root_coords_of(ctx.d, diff);
    std::int64_t result = 0;
    if (coords) {
        bool nonneg = true;
        for (auto c : *coords)
            if (c < 0) nonneg = false;
        if (nonneg) {
            // ((theta+rho, theta+rho) - (sigma+rho, sigma+rho)) m(sigma)
            //   = 2 sum_{alpha>0} sum_{k>=1} (sigma + k alpha, alpha) m(sigma + k alpha)
            IntVec vsum(sigma_dom.size());
            for (std::size_t j = 0; j < vsum.size(); ++j)
                vsum[j] = ctx.theta_plus_rho[j] + sigma_dom[j] + ctx.d.rho()[j];
            Rat denom = pairing_span(ctx.sym, vsum, *coords);
            if (denom.is_zero()) throw Error("Freudenthal denominator vanished");
            Rat num(0);
            const auto& roots = ctx.d.positive_roots();
            const auto& rcoords = ctx.d.positive_root_coords();
            for (std::size_t r = 0; r < roots.size(); ++r) {
                for (std::int64_t k = 1;; ++k) {
                    bool inside = true;
                    for (std::size_t j = 0; j < rcoords[r].size(); ++j)
                        if ((*coords)[j] - k * rcoords[r][j] < 0) inside = false;
                    if (!inside) break;
                    WeightVec sk(sigma_dom.size());
                    for (std::size_t j = 0; j < sk.size(); ++j)
                        sk[j] = sigma_dom[j] + k * roots[r][j];
                    std::int64_t mk = freudenthal_dominant(ctx, dominant_rep(ctx.d, sk).rep);
                    if (mk != 0) num += Rat(2 * mk) * pairing_span(ctx.sym, sk, rcoords[r]);
                }
            }
            Rat m = num / denom;
            if (!m.is_integer() || m.num() < 0) throw Error("Freudenthal produced a non-multiplicity");
            result = m.num();
        }
    }
    ctx.memo.emplace(sigma_dom, result);
    return result;
}

} // namespace detail

// Multiplicity of the weight sigma in the irreducible representation of
// highest weight theta, over the given datum.  Two independent routes are
// kept on purpose: the Freudenthal recursion and the alternating Kostant
// sum check each other in the test suite.
inline std::int64_t weight_multiplicity(const RootDatum& d, const WeightVec& theta,
                                        const WeightVec& sigma,
                                        MultMethod method = MultMethod::freudenthal) {
    d.check_length(theta);
    d.check_length(sigma);
    if (!d.is_dominant(theta)) throw NotDominant("highest weight is not dominant");

    if (method == MultMethod::kostant) {
        IntVec theta_rho(theta.size()), sigma_rho(sigma.size());
        for (std::size_t j = 0; j < theta.size(); ++j) {
            theta_rho[j] = theta[j] + d.rho()[j];
            sigma_rho[j] = sigma[j] + d.rho()[j];
        }
        std::int64_t acc = 0;
        for (const auto& w : d.weyl_elements()) {
            WeightVec shifted = w.apply(theta_rho);
            for (std::size_t j = 0; j < shifted.size(); ++j) shifted[j] -= sigma_rho[j];
            std::int64_t p = kostant_partition(d, shifted);
            if (p != 0) acc += w.det() * p;
        }
        if (acc < 0) throw Error("Kostant sum produced a negative multiplicity");
        return acc;
    }

    detail::FreudenthalCtx ctx{d, detail::symmetrizer(d), theta, [&] {
                                   IntVec t(theta.size());
                                   for (std::size_t j = 0; j < theta.size(); ++j)
                                       t[j] = theta[j] + d.rho()[j];
                                   return t;
                               }(),
                               {}};
    return detail::freudenthal_dominant(ctx, dominant_rep(d, sigma).rep);
}

namespace detail {

// Chamber frame at nu: conjugation to the dominant chamber plus the
// stabilizer sub-datum and its span generators, shared by the operations
// that work relative to Phi_nu.
struct NuFrame {
    Stabilizer<NuVector> st;
    std::vector<RatVec> span_gens; // parent-coordinate simple roots of Phi_nu
};

inline NuFrame nu_frame(const RootDatum& d, const NuVector& nu) {
    d.check_length(nu);
    NuFrame f{stabilizer(d, nu), {}};
    for (int i : f.st.indices) f.span_gens.push_back(to_rat(d.simple_roots()[std::size_t(i)]));
    return f;
}

inline WeightVec dominate_in_frame(const RootDatum& d, const NuFrame& f, WeightVec v) {
    for (;;) {
        int neg = -1;
        for (int i : f.st.indices) {
            if (v[std::size_t(i)] < 0) {
                neg = i;
                break;
            }
        }
        if (neg < 0) return v;
        v = d.reflect(v, neg);
    }
}

// Multiplicity of sigma in the Phi_nu-irrep with highest weight class theta,
// inputs already conjugated into the dominant chamber of nu.  Components of
// theta - sigma transverse to the span of Phi_nu force zero.
inline std::int64_t m_sigma_theta_framed(const RootDatum& d, const NuFrame& f,
                                         const WeightVec& sigma, const WeightVec& theta,
                                         MultMethod method) {
    WeightVec theta_dom = dominate_in_frame(d, f, theta);
    RatVec diff(sigma.size());
    for (std::size_t j = 0; j < sigma.size(); ++j) diff[j] = Rat(theta_dom[j] - sigma[j]);
    if (!solve_in_span(f.span_gens, diff)) return 0;
    return weight_multiplicity(f.st.sub, restrict_to_sub(f.st.indices, theta_dom),
                               restrict_to_sub(f.st.indices, sigma), method);
}

inline bool hull_leq_framed(const RootDatum& d, const NuFrame& f, const WeightVec& sigma,
                            const WeightVec& theta) {
    // sigma lies in the convex hull of the Phi_nu-orbit of theta iff the
    // difference of dominated representatives is a nonnegative rational
    // combination of the positive roots of Phi_nu and sigma - theta does not
    // leave the span (stabilizer orbits keep transverse components fixed).
    RatVec diff(sigma.size());
    for (std::size_t j = 0; j < sigma.size(); ++j) diff[j] = Rat(theta[j] - sigma[j]);
    if (!solve_in_span(f.span_gens, diff)) return false;
    WeightVec sp = dominate_in_frame(d, f, sigma);
    WeightVec tp = dominate_in_frame(d, f, theta);
    RatVec gap(sp.size());
    for (std::size_t j = 0; j < sp.size(); ++j) gap[j] = Rat(tp[j] - sp[j]);
    auto sol = solve_in_span(f.span_gens, gap);
    if (!sol) return false;
    for (const auto& c : *sol)
        if (c.sign() < 0) return false;
    return true;
}

} // namespace detail

// K_nu-multiplicity m(sigma, theta): sigma and theta are parent-coordinate
// weights in the same frame as nu; both are conjugated along with nu into
// the dominant chamber, theta is dominated for Phi_nu, and the multiplicity
// is computed in the stabilizer sub-datum.
inline std::int64_t m_sigma_theta(const RootDatum& d, const NuVector& nu, const WeightVec& sigma,
                                  const WeightVec& theta,
                                  MultMethod method = MultMethod::freudenthal) {
    d.check_length(sigma);
    d.check_length(theta);
    auto f = detail::nu_frame(d, nu);
    return detail::m_sigma_theta_framed(d, f, f.st.to_dominant.apply(sigma),
                                        f.st.to_dominant.apply(theta), method);
}

// Partial order on character classes over nu: [sigma] <= [theta] iff sigma
// lies in the convex hull of the Phi_nu-orbit of theta.  Exact; no floating
// point enters the comparison.
inline bool hull_leq(const RootDatum& d, const NuVector& nu, const WeightVec& sigma,
                     const WeightVec& theta) {
    d.check_length(sigma);
    d.check_length(theta);
    auto f = detail::nu_frame(d, nu);
    return detail::hull_leq_framed(d, f, f.st.to_dominant.apply(sigma),
                                   f.st.to_dominant.apply(theta));
}

// Dimension of the irreducible representation with highest weight theta,
// from the product formula over positive roots.  Used as a sum rule against
// the weight multiplicities.
inline std::int64_t weyl_dimension(const RootDatum& d, const WeightVec& theta) {
    d.check_length(theta);
    if (!d.is_dominant(theta)) throw NotDominant("highest weight is not dominant");
    RatVec sym = detail::symmetrizer(d);
    IntVec theta_rho(theta.size());
    for (std::size_t j = 0; j < theta.size(); ++j) theta_rho[j] = theta[j] + d.rho()[j];
    Rat dim(1);
    for (const auto& c : d.positive_root_coords())
        dim *= detail::pairing_span(sym, theta_rho, c) / detail::pairing_span(sym, d.rho(), c);
    if (!dim.is_integer() || dim.num() <= 0) throw Error("dimension formula gave a non-integer");
    return dim.num();
}

} // namespace mackey

#endif
