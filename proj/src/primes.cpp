#include "spinsign/primes.hpp"

#include <algorithm>
#include <cmath>

namespace spinsign {

long long PrimeTable::count_upto(long long x) const {
    auto it = std::upper_bound(primes.begin(), primes.end(), x);
    return static_cast<long long>(it - primes.begin());
}

PrimeTable sieve(long long xmax) {
    if (xmax < 2) throw std::invalid_argument("sieve: xmax must be >= 2");
    PrimeTable table;
    table.limit = xmax;
    std::vector<bool> composite(static_cast<std::size_t>(xmax) + 1, false);
    for (long long i = 2; i * i <= xmax; ++i) {
        if (composite[i]) continue;
        for (long long j = i * i; j <= xmax; j += i) composite[j] = true;
    }
    for (long long i = 2; i <= xmax; ++i)
        if (!composite[i]) table.primes.push_back(i);
    return table;
}

double chebyshev_theta(const PrimeTable& table, long long x) {
    if (x > table.limit)
        throw OutOfRange("chebyshev_theta: x exceeds the sieve limit " +
                         std::to_string(table.limit));
    CompensatedSum acc;
    for (long long p : table.primes) {
        if (p > x) break;
        acc.add(std::log(static_cast<double>(p)));
    }
    return acc.value();
}

double prime_scale(long long x) {
    return static_cast<double>(x) / std::log(static_cast<double>(x));
}

}  // namespace spinsign
