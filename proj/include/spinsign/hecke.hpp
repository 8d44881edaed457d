#pragma once

#include <span>
#include <vector>

#include "spinsign/satake.hpp"
#include "spinsign/symplectic.hpp"

namespace spinsign {

/// The four kinds of right cosets in T(p) = Gamma diag(1,1,p,p) Gamma.
/// Each family fixes the diagonal exponents (d1, d2) of its D-block:
/// G1 -> (0,0) with upper-left block p*1_2, G2 -> (1,0), G3 -> (0,1),
/// G4 -> (1,1).
enum class CosetFamily { G1, G2, G3, G4 };

struct CosetRep {
    SimilitudeMatrix matrix;
    CosetFamily family;
    std::vector<long long> params;  // [] | [a] | [alpha, d] | [a, b, d]
    std::array<int, 2> d_exponents;
};

struct HeckeDecomposition {
    long long prime;
    std::vector<CosetRep> reps;
};

/// Enumerates the 1 + p + p^2 + p^3 right-coset representatives of T(p):
///   G1: diag(p, p, 1, 1)
///   G2: [[1,0,a,0],[0,p,0,0],[0,0,p,0],[0,0,0,1]],            a in Z/p
///   G3: [[p,0,0,0],[-alpha,1,0,d],[0,0,1,alpha],[0,0,0,p]],   alpha,d in Z/p
///   G4: [[1,0,a,b],[0,1,b,d],[0,0,p,0],[0,0,0,p]],            a,b,d in Z/p
/// Throws NotPrime, or std::length_error past the memory budget.
HeckeDecomposition decompose_Tp(long long p, std::size_t max_reps = (1u << 20));

/// Certifies the disjoint union: no two representatives generate the same
/// left Sp4(Z)-coset. Checked pairwise via the exact rational inverse,
/// integrality of g_i * g_j^{-1}, and the symplectic condition.
bool verify_disjoint(const HeckeDecomposition& dec);

/// Certifies membership in the double coset of diag(1,1,p,p): every
/// representative must have mu = p and Smith form (1, 1, p, p).
bool verify_double_coset(const HeckeDecomposition& dec);

/// Normalized Hecke eigenvalue a0 + a0*a1 + a0*a2 + a0*a1*a2; equals the
/// decomposition evaluation divided by p^(2k - 3/2) for every p and k.
template <class T>
T lambda_normalized(const SatakeTriple<T>& s) {
    return s.a0 + s.a0 * s.a1 + s.a0 * s.a2 + s.a0 * s.a1 * s.a2;
}

namespace detail {
template <class T>
T inverse_prime_power(long long p, int j);
template <>
inline Rational inverse_prime_power<Rational>(long long p, int j) {
    Int q = 1;
    for (int i = 0; i < j; ++i) q *= p;
    return Rational(1, q);
}
template <>
inline std::complex<double> inverse_prime_power<std::complex<double>>(long long p, int j) {
    return {std::pow(static_cast<double>(p), -j), 0.0};
}
}  // namespace detail

/// The coset sum of the eigenvalue formula at r = 1, without the p-power
/// normalization: a0 * sum_i prod_j (a_j p^{-j})^{d_ij} over the stored
/// representatives. Exact for rational parameters.
template <class T>
T lambda_from_decomposition(const HeckeDecomposition& dec, const SatakeTriple<T>& s) {
    const T a1p = s.a1 * detail::inverse_prime_power<T>(dec.prime, 1);
    const T a2p = s.a2 * detail::inverse_prime_power<T>(dec.prime, 2);
    T sum{};
    for (const CosetRep& rep : dec.reps) {
        T term(1);
        if (rep.d_exponents[0] == 1) term = term * a1p;
        if (rep.d_exponents[1] == 1) term = term * a2p;
        sum += term;
    }
    return s.a0 * sum;
}

/// Same sum split by family; entries are the monomials a0, a0*a1, a0*a2,
/// a0*a1*a2 when the decomposition is the T(p) one.
template <class T>
std::array<T, 4> lambda_by_family(const HeckeDecomposition& dec, const SatakeTriple<T>& s) {
    const T a1p = s.a1 * detail::inverse_prime_power<T>(dec.prime, 1);
    const T a2p = s.a2 * detail::inverse_prime_power<T>(dec.prime, 2);
    std::array<T, 4> sums{};
    for (const CosetRep& rep : dec.reps) {
        T term(1);
        if (rep.d_exponents[0] == 1) term = term * a1p;
        if (rep.d_exponents[1] == 1) term = term * a2p;
        sums[static_cast<int>(rep.family)] += s.a0 * term;
    }
    return sums;
}

/// Full T(p) eigenvalue mu_F(p) = p^(2k - 3/2) * lambda.
std::complex<double> eigenvalue_from_decomposition(const HeckeDecomposition& dec,
                                                   const SatakeParams& s, int weight);

/// General-r evaluator over caller-supplied diagonal exponent lists: the
/// normalized coset sum a0^r * sum_i (a1 p^{-1})^{d_i1} (a2 p^{-2})^{d_i2}.
template <class T>
T lambda_formula(long long p, int r, std::span<const std::array<int, 2>> d_exponents,
                 const SatakeTriple<T>& s) {
    const T a1p = s.a1 * detail::inverse_prime_power<T>(p, 1);
    const T a2p = s.a2 * detail::inverse_prime_power<T>(p, 2);
    T sum{};
    for (const auto& d : d_exponents) {
        T term(1);
        for (int i = 0; i < d[0]; ++i) term = term * a1p;
        for (int i = 0; i < d[1]; ++i) term = term * a2p;
        sum += term;
    }
    T scale(1);
    for (int i = 0; i < r; ++i) scale = scale * s.a0;
    return scale * sum;
}

/// mu_F(g) for mu(g) = p^r: (p^(2k-3/2) a0)^r * sum_i prod_j (a_j p^{-j})^{d_ij}.
std::complex<double> eigenvalue_formula(long long p, int weight, int r,
                                        std::span<const std::array<int, 2>> d_exponents,
                                        const SatakeParams& s);

}  // namespace spinsign
