#ifndef MACKEY_WIGNER_HPP
#define MACKEY_WIGNER_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>

#include "mackey/errors.hpp"

namespace mackey {

using cplx = std::complex<double>;

// Dense 2x2 complex matrix, enough linear algebra for SU(2) and SL(2,C).
struct Mat2 {
    cplx a{0.0}, b{0.0}, c{0.0}, d{0.0}; // row-major [[a, b], [c, d]]

    friend Mat2 operator*(const Mat2& u, const Mat2& v) {
        return {u.a * v.a + u.b * v.c, u.a * v.b + u.b * v.d,
                u.c * v.a + u.d * v.c, u.c * v.b + u.d * v.d};
    }
    Mat2 dagger() const {
        return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)};
    }
    cplx det() const { return a * d - b * c; }
    cplx trace() const { return a + d; }

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 diag(cplx x, cplx y) { return {x, 0.0, 0.0, y}; }
};

namespace detail {

inline double factorial(int n) {
    // Exact in double up to 22!; spins here stay far below that.
    static const auto table = [] {
        std::array<double, 23> t{};
        t[0] = 1.0;
        for (int i = 1; i < 23; ++i) t[i] = t[i - 1] * double(i);
        return t;
    }();
    if (n < 0 || n >= int(table.size()))
        throw IndexOutOfRange("factorial argument out of range");
    return table[std::size_t(n)];
}

inline cplx pow_int(cplx z, int e) {
    cplx r{1.0};
    for (int i = 0; i < e; ++i) r *= z;
    return r;
}

} // namespace detail

// Matrix coefficient of the spin-j irreducible representation of SU(2) in
// the monomial basis x^{j+m} y^{j-m} / sqrt((j+m)!(j-m)!), rows indexed by
// m_row and columns by m_col, both running j, j-1, ..., -j.  Spins are
// passed doubled so half-integers stay integral: two_j = 2j and so on.
//
// The group acts on row vectors, (x, y) -> (x, y) u, which makes this a
// homomorphism: wigner_d(u v) = wigner_d(u) wigner_d(v), and a unitary
// matrix whenever u is special unitary.  On the diagonal torus
// diag(e^{i h}, e^{-i h}) the (m, m) entry is e^{2 i m h}.
inline cplx wigner_d(int two_j, int two_m_row, int two_m_col, const Mat2& u) {
    if (two_j < 0 || std::abs(two_m_row) > two_j || std::abs(two_m_col) > two_j ||
        (two_j - two_m_row) % 2 != 0 || (two_j - two_m_col) % 2 != 0)
        throw IndexOutOfRange("spin labels must satisfy |m| <= j with j - m integral");
    if (two_j == 0) return cplx{1.0};

    int jm = (two_j + two_m_col) / 2;  // j + m (column)
    int jmm = (two_j - two_m_col) / 2; // j - m
    int jp = (two_j + two_m_row) / 2;  // j + m' (row)
    int jpm = (two_j - two_m_row) / 2; // j - m'

    double pref = std::sqrt(detail::factorial(jp) * detail::factorial(jpm) /
                            (detail::factorial(jm) * detail::factorial(jmm)));
    int rlo = std::max(0, jp - jmm); // keep the d-exponent r - (jp - jmm) >= 0
    int rhi = std::min(jm, jp);
    cplx sum{0.0};
    for (int r = rlo; r <= rhi; ++r) {
        double comb = detail::factorial(jm) /
                          (detail::factorial(r) * detail::factorial(jm - r)) *
                      detail::factorial(jmm) /
                          (detail::factorial(jp - r) * detail::factorial(jmm - jp + r));
        sum += comb * detail::pow_int(u.a, r) * detail::pow_int(u.c, jm - r) *
               detail::pow_int(u.b, jp - r) * detail::pow_int(u.d, r - jp + jmm);
    }
    return pref * sum;
}

} // namespace mackey

#endif
