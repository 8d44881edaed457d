#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "spinsign/rational.hpp"

namespace spinsign {

/// Satake p-parameters (a0, a1, a2) of a genus-2 eigenform. T is
/// std::complex<double> for the numeric path or Rational for exact work.
template <class T>
struct SatakeTriple {
    T a0, a1, a2;
};

using SatakeParams = SatakeTriple<std::complex<double>>;
using SatakeParamsExact = SatakeTriple<Rational>;

/// Roots of the local spin factor: the local L-factor is
/// prod (1 - root * p^{-s})^{-1} over the nonzero roots. Zero roots model
/// ramified primes, where the degree drops below 4.
template <class T>
struct SpinFactor {
    std::array<T, 4> roots;
    long long prime = 0;
};

template <class T>
SpinFactor<T> spin_roots(const SatakeTriple<T>& s, long long prime = 0) {
    return SpinFactor<T>{{s.a0, s.a0 * s.a1, s.a0 * s.a2, s.a0 * s.a1 * s.a2}, prime};
}

/// Dirichlet coefficients a(p^r) for r = 0..rmax, by power-series inversion
/// of the degree <= 4 polynomial prod (1 - root * t).
template <class T>
std::vector<T> dirichlet_coeffs(const SpinFactor<T>& f, int rmax) {
    if (rmax < 1) throw std::invalid_argument("dirichlet_coeffs: rmax must be >= 1");
    // Expand prod (1 - root*t) = sum c_j t^j.
    std::array<T, 5> c{};
    c[0] = T(1);
    int deg = 0;
    for (const T& root : f.roots) {
        for (int j = deg + 1; j > 0; --j) c[j] = c[j] - root * c[j - 1];
        ++deg;
    }
    std::vector<T> a(static_cast<std::size_t>(rmax) + 1);
    a[0] = T(1);
    for (int r = 1; r <= rmax; ++r) {
        T acc{};
        for (int j = 1; j <= std::min(r, 4); ++j) acc += c[j] * a[r - j];
        a[r] = -acc;
    }
    return a;
}

/// First Dirichlet coefficient: the sum of the spin roots.
template <class T>
T lambda_p(const SpinFactor<T>& f) {
    return f.roots[0] + f.roots[1] + f.roots[2] + f.roots[3];
}

/// |a_i| = 1 within tol for all three parameters (then all four spin roots
/// have unit modulus as well).
bool check_ramanujan(const SatakeParams& s, double tol);

/// |lambda| <= 4 (+ 1e-12 slack), the bound implied by unit spin roots.
bool check_weissauer(double lambda);

/// Optional predicate a0^2 * a1 * a2 = 1; not enforced anywhere.
bool trivial_central_character(const SatakeParams& s, double tol);

}  // namespace spinsign
