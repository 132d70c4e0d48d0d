#ifndef MACKEY_SL2_HPP
#define MACKEY_SL2_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "mackey/errors.hpp"
#include "mackey/parallel.hpp"
#include "mackey/quadrature.hpp"
#include "mackey/wigner.hpp"

namespace mackey::sl2 {

// The 2x2 complex toolbox lives one level up; these two appear in this
// header's own signatures, so give them local names.
using mackey::Mat2;
using mackey::cplx;

// Normalization conventions for SL(2,C) = G, K = SU(2), and the associated
// Cartan motion group K lt s.  Everything downstream assumes these:
//
//  * a = real diagonal traceless matrices, coordinate x via diag(x, -x);
//    n = strictly upper triangular, coordinate y (complex);
//    s = traceless Hermitian, coordinates z via [[z1, z2 + i z3],
//    [z2 - i z3, -z1]].
//  * rho(diag(x, -x)) = 2x, and half the sum of restricted roots is rho.
//  * nu in a* acts by nu(diag(x, -x)) = nu * x, extended to s* by
//    nu(Z) = nu * Z_11.
//  * Haar measure on K has total mass one; Lebesgue measure dX dY on
//    a + n uses dx dRe(y) dIm(y); its pushforward to s under
//    (X, Y) -> X + (Y + Y*)/2 is 4 dz1 dz2 dz3.
//  * dim(G/K) = 3, so the t-rescaled regular representation carries the
//    factor |t|^{-3}.
struct GroupModel {
    static constexpr int half_dim = 3;
    static constexpr double rho_slope = 2.0;
    static constexpr double s_jacobian = 4.0;
};

// g = k a n with a = diag(e^H, e^{-H}) and n = [[1, n01], [0, 1]].
struct Iwasawa {
    Mat2 k;
    double H = 0.0;
    cplx n{0.0};
};

namespace detail {

inline Iwasawa iwasawa_unchecked(const Mat2& g) {
    double l2 = std::norm(g.a) + std::norm(g.c);
    double l = std::sqrt(l2);
    Iwasawa iw;
    iw.H = std::log(l);
    iw.k = Mat2{g.a / l, -std::conj(g.c) / l, g.c / l, std::conj(g.a) / l};
    iw.n = (std::conj(g.a) * g.b + std::conj(g.c) * g.d) / l2;
    return iw;
}

} // namespace detail

inline Iwasawa iwasawa(const Mat2& g) {
    if (std::abs(g.det() - cplx{1.0}) > 1e-9)
        throw NotUnimodular("iwasawa factorization needs det = 1");
    return detail::iwasawa_unchecked(g);
}

// Finite combination of normalized matrix coefficients on K:
// sum_q coeff_q * sqrt(two_j_q + 1) * D^{j_q}_{m_q n_q}.
struct KTerm {
    int two_j = 0, two_m = 0, two_n = 0;
    cplx coeff{1.0};
};

struct KVector {
    std::vector<KTerm> terms;

    cplx eval(const Mat2& u) const {
        cplx s{0.0};
        for (const auto& t : terms)
            s += t.coeff * std::sqrt(double(t.two_j + 1)) *
                 wigner_d(t.two_j, t.two_m, t.two_n, u);
        return s;
    }
};

// A named test function on the group, f_t(g) = D^{j0}_{m0 n0}(k(g)) *
// bump(H(g)/t, Re n(g)/t, Im n(g)/t) in Iwasawa coordinates.  The bump is
// (1 + tilt * x / rx) * (1 - r^2)^8 on the ellipsoid r^2 = (x/rx)^2 +
// (yr^2 + yi^2)/ry^2 <= 1, so it vanishes to eighth order at the support
// boundary and is C^7 across it; Gauss rules then converge fast despite the
// boundary sitting inside the integration box.  The tilt breaks the x -> -x
// symmetry, which would otherwise kill the first-order term of the limit.
struct SectionSpec {
    std::string name;
    int two_j0 = 0, two_m0 = 0, two_n0 = 0;
    double rx = 1.0, ry = 1.0;
    double tilt = 0.0;
    double amplitude = 1.0;
};

// The _fine entries are the unit-radius shapes at one-eighth scale.  The
// relative quadrature picture is scale-invariant (boxes shrink with the
// support), but absolute errors carry the support volume, so these shrink
// every order-doubling shift by 8^3; they exist so the shipped convergence
// scenarios can declare an absolute self-consistency tolerance of 1e-8 and
// meet it inside the runtime budget.
inline std::vector<SectionSpec> section_catalogue() {
    return {
        {"zero", 0, 0, 0, 1.0, 1.0, 0.0, 0.0},
        {"scalar_bump", 0, 0, 0, 1.0, 1.0, 0.5, 1.0},
        {"spinor_bump", 1, 1, -1, 1.0, 1.0, 0.5, 1.0},
        {"vector_bump", 2, 0, 0, 1.0, 1.0, 0.0, 1.0},
        {"scalar_bump_fine", 0, 0, 0, 0.125, 0.125, 0.5, 1.0},
        {"spinor_bump_fine", 1, 1, -1, 0.125, 0.125, 0.5, 1.0},
    };
}

inline SectionSpec section_by_name(const std::string& name) {
    for (auto& s : section_catalogue())
        if (s.name == name) return s;
    throw InvalidInput("unknown section name: " + name);
}

namespace detail {

inline double bump(const SectionSpec& s, double x, double yr, double yi) {
    if (s.amplitude == 0.0) return 0.0;
    double r2 = (x / s.rx) * (x / s.rx) + (yr * yr + yi * yi) / (s.ry * s.ry);
    if (r2 >= 1.0) return 0.0;
    double u = 1.0 - r2;
    double u2 = u * u, u4 = u2 * u2;
    return s.amplitude * (1.0 + s.tilt * x / s.rx) * u4 * u4;
}

} // namespace detail

struct QuadOrders {
    int k_alpha = 14, k_beta = 12, k_gamma = 8;
    int x = 16, yr = 16, yi = 16;

    QuadOrders doubled() const {
        return {2 * k_alpha, 2 * k_beta, 2 * k_gamma, 2 * x, 2 * yr, 2 * yi};
    }
};

// One matrix-coefficient experiment: principal series parameters, a section
// from the catalogue, K-vectors (defaults are the minimal equivariant
// choice), quadrature orders and the scale schedule.
struct Sl2Scenario {
    int sigma = 0;
    double nu = 0.0;
    SectionSpec section;
    KVector phi, psi;
    QuadOrders orders;
    std::vector<double> t_schedule{0.4, 0.2, 0.1, 0.05};
    std::vector<double> nu_probes;
    double tol = 1e-8;
};

namespace detail {

// Shape check only.  The sigma-isotypic condition (column label 2n = -sigma)
// is not enforced: vectors in the wrong isotype are legal inputs whose
// coefficients vanish by orthogonality, and tests rely on observing that.
inline void validate_kvector(const KVector& v, const char* which) {
    for (const auto& t : v.terms) {
        if (t.two_j < 0 || std::abs(t.two_m) > t.two_j || std::abs(t.two_n) > t.two_j ||
            (t.two_j - t.two_m) % 2 != 0 || (t.two_j - t.two_n) % 2 != 0)
            throw InvalidInput(std::string(which) + ": bad spin labels in K-vector");
    }
}

} // namespace detail

// Default K-vectors are the minimal pair the section can see: averaging the
// integrand over the two M-translations multiplies it by e^{i(m0 - m_phi)}
// and e^{i(n0 - m_psi)} phases, so phi must sit at the section's row label
// and psi at its column label; both columns carry the sigma-isotype -sigma.
inline Sl2Scenario make_scenario(int sigma, double nu, const std::string& section_name) {
    Sl2Scenario sc;
    sc.sigma = sigma;
    sc.nu = nu;
    sc.section = section_by_name(section_name);
    if ((sc.section.two_j0 - sigma) % 2 != 0)
        throw InvalidInput("sigma parity does not match the section spin");
    if (std::abs(sigma) > sc.section.two_j0)
        throw InvalidInput("no sigma-equivariant vector at this section spin");
    KTerm t;
    t.two_j = sc.section.two_j0;
    t.two_m = sc.section.two_m0;
    t.two_n = -sigma;
    t.coeff = cplx{1.0};
    sc.phi.terms = {t};
    t.two_m = sc.section.two_n0;
    sc.psi.terms = {t};
    detail::validate_kvector(sc.phi, "phi");
    detail::validate_kvector(sc.psi, "psi");
    return sc;
}

namespace detail {

// Left K-convolution against phi collapses by Schur orthogonality to a
// finite spectral vector: integrating conj(phi(k1)) D^{j0}_{m0 n}(k1 k)
// over k1 leaves sum_c phihat_c D^{j0}_{c n}(k) with
// phihat_c = conj(coeff_q) / sqrt(2 j0 + 1) summed over terms of phi
// sitting at (j0, m0, c).  This removes one K-integration exactly.
struct SpectralPhi {
    int two_j0 = 0, two_n0 = 0;
    std::vector<std::pair<int, cplx>> hat; // (two_c, weight), nonzero only

    cplx apply(const Mat2& k) const {
        cplx s{0.0};
        for (const auto& [two_c, w] : hat)
            s += w * wigner_d(two_j0, two_c, two_n0, k);
        return s;
    }
};

inline SpectralPhi spectral_phi(const Sl2Scenario& sc) {
    SpectralPhi sp;
    sp.two_j0 = sc.section.two_j0;
    sp.two_n0 = sc.section.two_n0;
    double inv = 1.0 / std::sqrt(double(sc.section.two_j0 + 1));
    for (int two_c = -sp.two_j0; two_c <= sp.two_j0; two_c += 2) {
        cplx w{0.0};
        for (const auto& t : sc.phi.terms)
            if (t.two_j == sp.two_j0 && t.two_m == sc.section.two_m0 && t.two_n == two_c)
                w += std::conj(t.coeff) * inv;
        if (w != cplx{0.0}) sp.hat.emplace_back(two_c, w);
    }
    return sp;
}

// Largest value of tr(g* g) on the support of the time-t section, maximized
// over the Iwasawa box |H| <= t rx, |n| <= t ry sqrt(2) (the ry bound is the
// loose rectangle hull of the round bump, so the box always covers).
inline double support_trace_bound(const SectionSpec& s, double t) {
    double e2 = std::exp(2.0 * t * s.rx);
    return e2 * (1.0 + 2.0 * t * t * s.ry * s.ry) + 1.0 / e2;
}

struct Box {
    double x, yr, yi;
};

// tr(g* g) for g = exp(-uY)exp(-uX) equals e^{-2ux} + e^{2ux}(1 + u^2|y|^2);
// bounding it by Tmax gives |ux| <= ubar = acosh(Tmax/2)/2 and
// u|y| <= sinh(2 ubar), both sharp.
inline Box scaled_support_box(const SectionSpec& s, double t_profile, double t_geom) {
    double tmax = support_trace_bound(s, t_profile);
    double ubar = 0.5 * std::acosh(0.5 * tmax);
    double vbar = std::sinh(2.0 * ubar);
    return {ubar / t_geom, vbar / t_geom, vbar / t_geom};
}

// In the motion group the section's support is Ad(K)-saturated; the
// Frobenius bound 2 z1^2 + 2|z_12|^2 <= 2(rx^2 + ry^2/2) confines every
// coordinate to rho = sqrt(rx^2 + ry^2/2).  This is also the t -> 0 limit
// of scaled_support_box.
inline double motion_radius(const SectionSpec& s) {
    return std::sqrt(s.rx * s.rx + 0.5 * s.ry * s.ry);
}

// Sharper per-coordinate bound for the z chart.  On the bump ellipsoid
// (z1/rx)^2 + 4|z12|^2/ry^2 < 1 the invariant 2 z1^2 + 2|z12|^2 is at most
// max(2 rx^2, ry^2/2), so every coordinate of Z stays below max(rx, ry/2).
// Deliberately not the motion_radius bound: with unrelated boxes the two
// charts place their Gauss nodes at different points, so agreement between
// them measures genuine quadrature error rather than replaying one sum.
inline double motion_z_bound(const SectionSpec& s) {
    return std::max(s.rx, 0.5 * s.ry);
}

struct KNodeData {
    std::vector<cplx> psi_dag;  // psi(u^dagger) per node
    std::vector<cplx> a_at_u;   // spectral phi applied at the node itself
};

inline KNodeData knode_data(const Sl2Scenario& sc, const KQuadrature& kq,
                            const SpectralPhi& sp) {
    KNodeData d;
    d.psi_dag.reserve(kq.nodes.size());
    d.a_at_u.reserve(kq.nodes.size());
    for (const auto& node : kq.nodes) {
        d.psi_dag.push_back(sc.psi.eval(node.udag));
        d.a_at_u.push_back(sp.apply(node.u));
    }
    return d;
}

// Common core of the two scaled-coefficient paths.  With geometry scale u
// and profile scale t it evaluates
//   (u/t)^3 * Int dX dY e^{-i nu (u/t) x} e^{2 u x}
//       Int_K conj-phi-collapsed D(k(g u2)) bump(H/t, n/t)(g u2) psi(u2^{-1})
// over g = exp(-uY) exp(-uX).  u = t is the direct definition at time t;
// u = 1 with the |t|^{-3} prefactor is the same number after the change of
// variables (X, Y) -> (uX, uY), which the fixed Gauss grid maps onto
// exactly, so both paths agree to rounding at every t and bit-for-bit at
// t = 1.
inline cplx scaled_core(const Sl2Scenario& sc, double t_profile, double t_geom,
                        const QuadOrders& o) {
    if (!(t_profile > 0.0) || !(t_geom > 0.0))
        throw InvalidInput("scale parameters must be positive");
    KQuadrature kq = su2_quadrature(o.k_alpha, o.k_beta, o.k_gamma);
    SpectralPhi sp = spectral_phi(sc);
    KNodeData kd = knode_data(sc, kq, sp);

    Box box = scaled_support_box(sc.section, t_profile, t_geom);
    QuadRule qx = gauss_legendre(o.x, -box.x, box.x);
    QuadRule qyr = gauss_legendre(o.yr, -box.yr, box.yr);
    QuadRule qyi = gauss_legendre(o.yi, -box.yi, box.yi);

    // The phase sign follows the compact-picture action, whose cocycle is
    // e^{-(rho + i nu) H}.  Flipping it would still converge, but to the nu
    // -> -nu motion coefficient: the Iwasawa expansion of exp(-uY)exp(-uX)u2
    // sends the bump argument to minus the Ad(u2^-1)-rotated X + Y, and
    // undoing that flip inside the limit integral conjugates the phase.  For
    // sigma != 0 those two motion coefficients differ at first order in nu,
    // so the sign here is observable in the convergence runs.
    double phase = -sc.nu * t_geom / t_profile;
    double slope = GroupModel::rho_slope * t_geom;
    bool scalar = (sc.section.two_j0 == 0);
    cplx a_const = scalar && !sp.hat.empty() ? sp.hat.front().second : cplx{0.0};
    double inv_t = 1.0 / t_profile;

    std::vector<cplx> slice(qx.x.size(), cplx{0.0});
    parallel_slices(int(qx.x.size()), [&](int ix) {
        double x = qx.x[std::size_t(ix)];
        double ex = std::exp(-t_geom * x), exi = 1.0 / ex;
        cplx acc{0.0};
        for (std::size_t iyr = 0; iyr < qyr.x.size(); ++iyr)
            for (std::size_t iyi = 0; iyi < qyi.x.size(); ++iyi) {
                cplx y{qyr.x[iyr], qyi.x[iyi]};
                Mat2 g{ex, -t_geom * y * exi, 0.0, exi};
                cplx s{0.0};
                for (std::size_t q = 0; q < kq.nodes.size(); ++q) {
                    Mat2 h = g * kq.nodes[q].u;
                    double l2 = std::norm(h.a) + std::norm(h.c);
                    double hx = 0.5 * std::log(l2) * inv_t;
                    if (std::abs(hx) >= sc.section.rx) continue;
                    cplx n = (std::conj(h.a) * h.b + std::conj(h.c) * h.d) / l2;
                    double bv = bump(sc.section, hx, n.real() * inv_t, n.imag() * inv_t);
                    if (bv == 0.0) continue;
                    cplx a = a_const;
                    if (!scalar) {
                        double l = std::sqrt(l2);
                        Mat2 kap{h.a / l, -std::conj(h.c) / l, h.c / l,
                                 std::conj(h.a) / l};
                        a = sp.apply(kap);
                    }
                    s += kq.nodes[q].w * a * bv * kd.psi_dag[q];
                }
                acc += qyr.w[iyr] * qyi.w[iyi] * s;
            }
        slice[std::size_t(ix)] =
            acc * qx.w[std::size_t(ix)] * std::polar(std::exp(slope * x), phase * x);
    });
    cplx total = pairwise_sum(std::move(slice));
    double ratio = t_geom / t_profile;
    return total * (ratio * ratio * ratio);
}

enum class MotionMode { limit_coords, rep_coords };

// Matrix coefficient of the section at t = 0 against the motion group
// representation with the same (sigma, nu).  limit_coords integrates in the
// (x, y) chart inherited from a + n (the t -> 0 shape of the scaled
// formula); rep_coords integrates over s directly with the Jacobian 4.
// Equality of the two is a change of variables, so comparing them probes
// the quadrature and the Ad(K) bookkeeping at once.
inline cplx motion_core(const Sl2Scenario& sc, MotionMode mode, const QuadOrders& o) {
    KQuadrature kq = su2_quadrature(o.k_alpha, o.k_beta, o.k_gamma);
    SpectralPhi sp = spectral_phi(sc);
    KNodeData kd = knode_data(sc, kq, sp);
    double rho = motion_radius(sc.section);

    double bx = rho, byr = 2.0 * rho, byi = 2.0 * rho, jac = 1.0;
    if (mode == MotionMode::rep_coords) {
        bx = byr = byi = motion_z_bound(sc.section);
        jac = GroupModel::s_jacobian;
    }
    QuadRule qx = gauss_legendre(o.x, -bx, bx);
    QuadRule qyr = gauss_legendre(o.yr, -byr, byr);
    QuadRule qyi = gauss_legendre(o.yi, -byi, byi);

    std::vector<cplx> slice(qx.x.size(), cplx{0.0});
    parallel_slices(int(qx.x.size()), [&](int ix) {
        double x = qx.x[std::size_t(ix)];
        cplx acc{0.0};
        for (std::size_t iyr = 0; iyr < qyr.x.size(); ++iyr)
            for (std::size_t iyi = 0; iyi < qyi.x.size(); ++iyi) {
                // Both charts describe Z in s; in the (x, y) chart the
                // off-diagonal entry is y/2, in the z chart it is z2 + i z3.
                cplx z12 = mode == MotionMode::limit_coords
                               ? cplx{0.5 * qyr.x[iyr], 0.5 * qyi.x[iyi]}
                               : cplx{qyr.x[iyr], qyi.x[iyi]};
                cplx s{0.0};
                for (std::size_t q = 0; q < kq.nodes.size(); ++q) {
                    const Mat2& u = kq.nodes[q].u;
                    // u^dagger Z u for Hermitian traceless Z.
                    cplx zu11 = x * u.a + z12 * u.c;
                    cplx zu21 = std::conj(z12) * u.a - x * u.c;
                    double zp11 =
                        (std::conj(u.a) * zu11 + std::conj(u.c) * zu21).real();
                    cplx zp12 = std::conj(u.a) * (x * u.b + z12 * u.d) +
                                std::conj(u.c) * (std::conj(z12) * u.b - x * u.d);
                    double bv = bump(sc.section, zp11, 2.0 * zp12.real(),
                                     2.0 * zp12.imag());
                    if (bv == 0.0) continue;
                    s += kq.nodes[q].w * kd.a_at_u[q] * bv * kd.psi_dag[q];
                }
                acc += qyr.w[iyr] * qyi.w[iyi] * s;
            }
        slice[std::size_t(ix)] =
            acc * qx.w[std::size_t(ix)] * std::polar(1.0, sc.nu * x);
    });
    return pairwise_sum(std::move(slice)) * jac;
}

} // namespace detail

inline cplx scaled_matrix_coeff(const Sl2Scenario& sc, double t) {
    return detail::scaled_core(sc, t, t, sc.orders);
}

inline cplx scaled_matrix_coeff(const Sl2Scenario& sc, double t, const QuadOrders& o) {
    return detail::scaled_core(sc, t, t, o);
}

inline cplx motion_limit_coeff(const Sl2Scenario& sc) {
    return detail::motion_core(sc, detail::MotionMode::limit_coords, sc.orders);
}

inline cplx motion_limit_coeff(const Sl2Scenario& sc, const QuadOrders& o) {
    return detail::motion_core(sc, detail::MotionMode::limit_coords, o);
}

inline cplx motion_rep_coeff(const Sl2Scenario& sc) {
    return detail::motion_core(sc, detail::MotionMode::rep_coords, sc.orders);
}

inline cplx motion_rep_coeff(const Sl2Scenario& sc, const QuadOrders& o) {
    return detail::motion_core(sc, detail::MotionMode::rep_coords, o);
}

// The scaled coefficient at time t computed two ways: directly, and as
// |t|^{-3} times the unscaled integral of the time-t section against the
// nu/t character.  They are equal by the change of variables (X, Y) ->
// (tX, tY); path_b exercises the rescaled-Haar description of the field.
struct KeyPropertyProbe {
    cplx path_a, path_b;
    double abs_diff = 0.0;
};

inline KeyPropertyProbe key_property_probe(const Sl2Scenario& sc, double t) {
    KeyPropertyProbe p;
    p.path_a = detail::scaled_core(sc, t, t, sc.orders);
    p.path_b = detail::scaled_core(sc, t, 1.0, sc.orders);
    p.abs_diff = std::abs(p.path_a - p.path_b);
    return p;
}

// Value plus the shift observed when every quadrature order is doubled.
struct CheckedValue {
    cplx value;
    double delta = 0.0;
};

template <typename Eval>
CheckedValue self_checked(const Sl2Scenario& sc, Eval&& eval) {
    cplx base = eval(sc.orders);
    cplx fine = eval(sc.orders.doubled());
    double delta = std::abs(fine - base);
    if (delta > sc.tol)
        throw QuadratureUnconverged("order doubling moved the value by " +
                                    std::to_string(delta));
    return {fine, delta};
}

struct ConvergenceRow {
    double t = 0.0;
    cplx scaled;
    double err = 0.0;        // |scaled - limit|
    double ratio = 0.0;      // err / previous err (schedule runs downward)
    double err_over_t = 0.0;
};

struct NuProbeRow {
    double nu = 0.0;
    double err_at_t_min = 0.0;
    double err_over_t = 0.0;
};

struct ConvergenceReport {
    int sigma = 0;
    double nu = 0.0;
    std::string section;
    cplx limit;
    double limit_delta = 0.0;   // self-check of the limit value
    double scaled_delta = 0.0;  // self-check of the scaled value at t_max
    std::vector<ConvergenceRow> rows;
    std::vector<NuProbeRow> probes;
    bool monotone = false;
    double last_ratio = 0.0;
    double rate_bound = 0.0; // max err/t over the schedule

    bool passes(double ratio_bound = 0.7) const {
        return monotone && last_ratio <= ratio_bound;
    }
};

// Runs the schedule, self-checks the two endpoint quadratures by order
// doubling (throwing QuadratureUnconverged on failure), and reports the
// deviation from the motion limit per t.  The err/t column exhibits the
// first-order rate; nu_probes re-run the smallest t at shifted spectral
// parameters to show the rate constant is stable in nu.
inline ConvergenceReport convergence_experiment(const Sl2Scenario& sc) {
    if (sc.t_schedule.empty()) throw InvalidInput("empty t schedule");
    for (std::size_t i = 0; i + 1 < sc.t_schedule.size(); ++i)
        if (!(sc.t_schedule[i] > sc.t_schedule[i + 1]) || !(sc.t_schedule[i + 1] > 0.0))
            throw InvalidInput("t schedule must decrease through positive values");

    ConvergenceReport rep;
    rep.sigma = sc.sigma;
    rep.nu = sc.nu;
    rep.section = sc.section.name;

    CheckedValue lim = self_checked(
        sc, [&](const QuadOrders& o) { return detail::motion_core(
                sc, detail::MotionMode::limit_coords, o); });
    rep.limit = lim.value;
    rep.limit_delta = lim.delta;

    double t_max = sc.t_schedule.front();
    CheckedValue head = self_checked(
        sc, [&](const QuadOrders& o) { return detail::scaled_core(sc, t_max, t_max, o); });
    rep.scaled_delta = head.delta;

    rep.monotone = true;
    for (std::size_t i = 0; i < sc.t_schedule.size(); ++i) {
        double t = sc.t_schedule[i];
        ConvergenceRow row;
        row.t = t;
        row.scaled = i == 0 ? head.value : detail::scaled_core(sc, t, t, sc.orders);
        row.err = std::abs(row.scaled - rep.limit);
        row.err_over_t = row.err / t;
        if (i > 0) {
            row.ratio = rep.rows.back().err > 0.0 ? row.err / rep.rows.back().err : 0.0;
            if (row.err >= rep.rows.back().err) rep.monotone = false;
        }
        rep.rate_bound = std::max(rep.rate_bound, row.err_over_t);
        rep.rows.push_back(row);
    }
    rep.last_ratio = rep.rows.size() > 1 ? rep.rows.back().ratio : 0.0;

    double t_min = sc.t_schedule.back();
    for (double nu : sc.nu_probes) {
        Sl2Scenario probe = sc;
        probe.nu = nu;
        cplx lim_p = detail::motion_core(probe, detail::MotionMode::limit_coords,
                                         probe.orders);
        cplx val_p = detail::scaled_core(probe, t_min, t_min, probe.orders);
        NuProbeRow row;
        row.nu = nu;
        row.err_at_t_min = std::abs(val_p - lim_p);
        row.err_over_t = row.err_at_t_min / t_min;
        rep.probes.push_back(row);
    }
    return rep;
}

} // namespace mackey::sl2

#endif
