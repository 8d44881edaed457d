#include "spinsign/delta.hpp"

namespace spinsign {

namespace {

// Truncated product of two series mod q^{n+1}.
std::vector<Int> mul(const std::vector<Int>& a, const std::vector<Int>& b, int n) {
    std::vector<Int> out(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n && i < static_cast<int>(a.size()); ++i) {
        if (a[i] == 0) continue;
        const int jmax = std::min<int>(n - i, static_cast<int>(b.size()) - 1);
        for (int j = 0; j <= jmax; ++j) {
            if (b[j] == 0) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// prod (1 - q^k) mod q^{n+1} via the pentagonal-number theorem.
std::vector<Int> eta_series(int n) {
    std::vector<Int> c(static_cast<std::size_t>(n) + 1);
    c[0] = 1;
    for (long long k = 1;; ++k) {
        long long g1 = k * (3 * k - 1) / 2;
        long long g2 = k * (3 * k + 1) / 2;
        if (g1 > n && g2 > n) break;
        const int sign = (k % 2 == 0) ? 1 : -1;
        if (g1 <= n) c[g1] += sign;
        if (g2 <= n) c[g2] += sign;
    }
    return c;
}

}  // namespace

std::vector<Int> delta_qexp(int nterms) {
    if (nterms < 1) throw std::invalid_argument("delta_qexp: nterms must be >= 1");
    const int n = nterms - 1;  // degree needed in the eta power
    std::vector<Int> base = eta_series(n);
    std::vector<Int> result{Int(1)};
    int e = 24;
    while (e > 0) {  // binary powering with truncation
        if (e & 1) result = mul(result, base, n);
        e >>= 1;
        if (e > 0) base = mul(base, base, n);
    }
    std::vector<Int> tau(static_cast<std::size_t>(nterms) + 1);
    for (int m = 0; m <= n; ++m) tau[m + 1] = result[m];
    return tau;
}

}  // namespace spinsign
