#pragma once

#include <cmath>
#include <vector>

#include "spinsign/errors.hpp"

namespace spinsign {

struct PrimeTable {
    long long limit = 0;
    std::vector<long long> primes;  // ascending, complete up to limit

    /// pi(x) for x <= limit.
    long long count_upto(long long x) const;
};

PrimeTable sieve(long long xmax);

/// First Chebyshev function: sum of log p over p <= x. Compensated
/// summation; throws OutOfRange past the table limit.
double chebyshev_theta(const PrimeTable& table, long long x);

/// x / log x, the comparison scale of all the prime sums.
double prime_scale(long long x);

/// Kahan-Neumaier accumulator; the prime sums add 1e5..1e6 terms of O(1)
/// values, which plain doubles lose digits on.
class CompensatedSum {
public:
    void add(double v) {
        double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace spinsign
