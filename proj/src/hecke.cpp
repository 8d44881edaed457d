#include "spinsign/hecke.hpp"

#include "spinsign/smith.hpp"

namespace spinsign {

namespace {

Mat4 from_rows(std::array<std::array<long long, 4>, 4> rows) {
    Mat4 m;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m.at(r, c) = rows[r][c];
    return m;
}

// g_i * g_j^{-1}, entry by entry with an early bail-out: almost every pair
// fails integrality in the first row, so full products are rarely needed.
bool same_left_coset(const Mat4& gi, const Mat4& inv_j) {
    Mat4 q;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            Rational s = 0;
            for (int k = 0; k < 4; ++k) s += gi.at(r, k) * inv_j.at(k, c);
            if (denominator(s) != 1) return false;
            q.at(r, c) = std::move(s);
        }
    try {
        return similitude(q) == 1;
    } catch (const NotSimilitude&) {
        return false;
    }
}

}  // namespace

HeckeDecomposition decompose_Tp(long long p, std::size_t max_reps) {
    if (!is_prime(p)) throw NotPrime(p);
    if (p > 1290)  // keeps 1 + p + p^2 + p^3 well inside 64 bits
        throw std::length_error("decompose_Tp: prime too large for enumeration");
    const std::size_t count = static_cast<std::size_t>(1 + p + p * p + p * p * p);
    if (count > max_reps)
        throw std::length_error("decompose_Tp: " + std::to_string(count) +
                                " representatives exceed the memory budget");

    HeckeDecomposition dec{p, {}};
    dec.reps.reserve(count);

    dec.reps.push_back({SimilitudeMatrix(from_rows({{{p, 0, 0, 0},  //
                                                     {0, p, 0, 0},
                                                     {0, 0, 1, 0},
                                                     {0, 0, 0, 1}}})),
                        CosetFamily::G1,
                        {},
                        {0, 0}});

    for (long long a = 0; a < p; ++a)
        dec.reps.push_back({SimilitudeMatrix(from_rows({{{1, 0, a, 0},  //
                                                         {0, p, 0, 0},
                                                         {0, 0, p, 0},
                                                         {0, 0, 0, 1}}})),
                            CosetFamily::G2,
                            {a},
                            {1, 0}});

    for (long long alpha = 0; alpha < p; ++alpha)
        for (long long d = 0; d < p; ++d)
            dec.reps.push_back({SimilitudeMatrix(from_rows({{{p, 0, 0, 0},  //
                                                             {-alpha, 1, 0, d},
                                                             {0, 0, 1, alpha},
                                                             {0, 0, 0, p}}})),
                                CosetFamily::G3,
                                {alpha, d},
                                {0, 1}});

    for (long long a = 0; a < p; ++a)
        for (long long b = 0; b < p; ++b)
            for (long long d = 0; d < p; ++d)
                dec.reps.push_back({SimilitudeMatrix(from_rows({{{1, 0, a, b},  //
                                                                 {0, 1, b, d},
                                                                 {0, 0, p, 0},
                                                                 {0, 0, 0, p}}})),
                                    CosetFamily::G4,
                                    {a, b, d},
                                    {1, 1}});

    return dec;
}

bool verify_disjoint(const HeckeDecomposition& dec) {
    const std::size_t n = dec.reps.size();
    std::vector<Mat4> inverses;
    inverses.reserve(n);
    for (const CosetRep& rep : dec.reps) inverses.push_back(rep.matrix.entries().inverse());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (same_left_coset(dec.reps[i].matrix.entries(), inverses[j])) return false;
    return true;
}

bool verify_double_coset(const HeckeDecomposition& dec) {
    for (const CosetRep& rep : dec.reps) {
        if (rep.matrix.mu() != dec.prime) return false;
        auto divisors = smith_normal_form(rep.matrix.entries());
        if (divisors[0] != 1 || divisors[1] != 1 || divisors[2] != dec.prime ||
            divisors[3] != dec.prime)
            return false;
    }
    return true;
}

std::complex<double> eigenvalue_from_decomposition(const HeckeDecomposition& dec,
                                                   const SatakeParams& s, int weight) {
    const double scale = std::pow(static_cast<double>(dec.prime), 2.0 * weight - 1.5);
    return scale * lambda_from_decomposition(dec, s);
}

std::complex<double> eigenvalue_formula(long long p, int weight, int r,
                                        std::span<const std::array<int, 2>> d_exponents,
                                        const SatakeParams& s) {
    const double scale = std::pow(static_cast<double>(p), (2.0 * weight - 1.5) * r);
    return scale * lambda_formula(p, r, d_exponents, s);
}

}  // namespace spinsign
