#pragma once

#include "spinsign/streams.hpp"

namespace spinsign {

struct SumResult {
    double sum = 0.0;
    double ratio = 0.0;  // sum / (x / log x)
    long long terms = 0;
};

/// Sum of lambda(p)^2 over p <= x outside S (the streams' own ramified sets
/// are always excluded as well), plus its ratio to x / log x. The ratio
/// estimates the class constant m.
SumResult sum_square(const LambdaStream& stream, const PrimeTable& table, long long x,
                     const std::set<long long>& S = {});

/// Sum of lambda_F(p) * lambda_G(p); tends to o(x / log x) for streams
/// built from pairwise-distinct sources.
SumResult sum_cross(const LambdaStream& f, const LambdaStream& g, const PrimeTable& table,
                    long long x, const std::set<long long>& S = {});

struct Exceedance {
    long long count = 0;
    double alpha_hat = 0.0;  // count / (x / log x)
};

/// #{p <= x : |lambda(p)| > c}, strict inequality.
Exceedance exceedance_count(const LambdaStream& stream, const PrimeTable& table, long long x,
                            double c, const std::set<long long>& S = {});

struct PrimeSumReport {
    long long x = 0;
    std::vector<long long> excluded;  // effective S
    double sum_square_f = 0.0;
    double sum_square_g = 0.0;
    double sum_cross = 0.0;
    double s_minus = 0.0;  // sum of (lf^2 lg^2 - 16 lf lg)
    long long count_exceed = 0;
    long long count_neg_product = 0;
    double density = 0.0;  // count_neg_product / (x / log x)
    double bound = 0.0;    // c^2 (16 alpha + m - 16) / 512
    int m = 1;
    double c = 0.0;
    double alpha = 0.0;  // measured alpha-hat at threshold c
    double ratio_square_f = 0.0;
    double ratio_square_g = 0.0;
    double ratio_cross = 0.0;
    bool proof_inequality_holds = false;  // S^-(x) <= 512 * count_neg_product
    bool density_at_least_bound = false;
};

/// The sign-change experiment: square and cross sums, the exceedance count
/// of G at threshold c, S^-(x), the negative-product count and density,
/// and the density bound c^2 (16 alpha + m - 16) / 512. Also records
/// whether S^-(x) <= 512 * #{lambda_F lambda_G < 0}, the chain the density
/// bound rests on, and whether density >= bound.
PrimeSumReport sign_change_report(const LambdaStream& f, const LambdaStream& g,
                                  const PrimeTable& table, long long x, double c, int m,
                                  const std::set<long long>& S = {});

/// Finite-x check of the square-product lower bound: true iff
/// sum lambda_F^2 lambda_G^2 >= (c^2 (16 alpha_hat + m - 16) - eps) x/log x.
bool lemma31_check(const LambdaStream& f, const LambdaStream& g, const PrimeTable& table,
                   long long x, double c, int m, double eps,
                   const std::set<long long>& S = {});

struct PerPrimeRow {
    long long p;
    double lambda_f;
    double lambda_g;
    int product_sign;  // -1, 0, +1
};

/// Per-prime dump backing the optional CSV output.
std::vector<PerPrimeRow> per_prime_rows(const LambdaStream& f, const LambdaStream& g,
                                        const PrimeTable& table, long long x,
                                        const std::set<long long>& S = {});

}  // namespace spinsign
