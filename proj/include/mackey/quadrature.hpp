#ifndef MACKEY_QUADRATURE_HPP
#define MACKEY_QUADRATURE_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "mackey/errors.hpp"
#include "mackey/wigner.hpp"

namespace mackey {

struct QuadRule {
    std::vector<double> x; // nodes
    std::vector<double> w; // weights
};

// Gauss-Legendre rule on [-1, 1], exact for polynomials of degree 2n - 1.
// Nodes are Newton-refined from the Chebyshev-angle initial guess; the rule
// is symmetric by construction.
inline QuadRule gauss_legendre(int n) {
    if (n < 1) throw InvalidInput("quadrature order must be positive");
    QuadRule rule;
    rule.x.resize(std::size_t(n));
    rule.w.resize(std::size_t(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (double(i) + 0.75) / (double(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Evaluate P_n and P_n' by upward recurrence.
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / double(k);
                p0 = p1;
                p1 = p2;
            }
            dp = double(n) * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.x[std::size_t(i)] = -x; // ascending order
        rule.w[std::size_t(i)] = w;
        rule.x[std::size_t(n - 1 - i)] = x;
        rule.w[std::size_t(n - 1 - i)] = w;
    }
    if (n % 2 == 1) rule.x[std::size_t(n / 2)] = 0.0;
    return rule;
}

// Affine image of the rule on [lo, hi].
inline QuadRule gauss_legendre(int n, double lo, double hi) {
    QuadRule rule = gauss_legendre(n);
    double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    for (std::size_t i = 0; i < rule.x.size(); ++i) {
        rule.x[i] = mid + half * rule.x[i];
        rule.w[i] *= half;
    }
    return rule;
}

struct KNode {
    Mat2 u;
    Mat2 udag;
    double w;
};

struct KQuadrature {
    std::vector<KNode> nodes;
    int order_alpha = 0, order_beta = 0, order_gamma = 0;
};

// Product rule for normalized Haar measure on SU(2) in Euler coordinates
// u = Rz(alpha) Ry(beta) Rz(gamma).  The polar angle is integrated through
// the substitution c = cos(beta), which absorbs the sin(beta) density and
// leaves every factor polynomial-friendly for Gauss-Legendre.  The gamma
// range is 4*pi so half-integer spins are covered; total mass is 1.
inline KQuadrature su2_quadrature(int order_alpha, int order_beta, int order_gamma) {
    QuadRule qa = gauss_legendre(order_alpha, 0.0, 2.0 * M_PI);
    QuadRule qc = gauss_legendre(order_beta, -1.0, 1.0);
    QuadRule qg = gauss_legendre(order_gamma, 0.0, 4.0 * M_PI);
    KQuadrature kq;
    kq.order_alpha = order_alpha;
    kq.order_beta = order_beta;
    kq.order_gamma = order_gamma;
    kq.nodes.reserve(qa.x.size() * qc.x.size() * qg.x.size());
    double norm = 1.0 / (16.0 * M_PI * M_PI); // 2*pi * 2 * 4*pi of raw volume
    for (std::size_t ia = 0; ia < qa.x.size(); ++ia)
        for (std::size_t ic = 0; ic < qc.x.size(); ++ic)
            for (std::size_t ig = 0; ig < qg.x.size(); ++ig) {
                double alpha = qa.x[ia], c = qc.x[ic], gamma = qg.x[ig];
                double ch = std::sqrt(0.5 * (1.0 + c)); // cos(beta/2)
                double sh = std::sqrt(0.5 * (1.0 - c)); // sin(beta/2)
                cplx epp = std::polar(1.0, -0.5 * (alpha + gamma));
                cplx epm = std::polar(1.0, -0.5 * (alpha - gamma));
                Mat2 u{ch * epp, -sh * epm, sh * std::conj(epm), ch * std::conj(epp)};
                KNode node;
                node.u = u;
                node.udag = u.dagger();
                node.w = qa.w[ia] * qc.w[ic] * qg.w[ig] * norm;
                kq.nodes.push_back(node);
            }
    return kq;
}

} // namespace mackey

#endif
