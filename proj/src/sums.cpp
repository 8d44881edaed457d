#include "spinsign/sums.hpp"

#include <cmath>

namespace spinsign {

namespace {

// Walks table primes <= x, skipping the effective exclusion set, and hands
// (p, lambda...) pairs to the visitor. MissingCoefficient when a stream has
// no value at an included prime.
template <class Visit>
void walk_one(const LambdaStream& s, const PrimeTable& table, long long x,
              const std::set<long long>& extra, Visit&& visit) {
    if (x > table.limit) throw OutOfRange("prime sum: x exceeds the sieve limit");
    std::size_t i = 0;
    for (long long p : table.primes) {
        if (p > x) break;
        while (i < s.primes.size() && s.primes[i] < p) ++i;
        const bool skip = extra.count(p) || s.excluded.count(p);
        if (skip) continue;
        if (i >= s.primes.size() || s.primes[i] != p) throw MissingCoefficient(p);
        visit(p, s.lambda[i]);
    }
}

template <class Visit>
void walk_pair(const LambdaStream& f, const LambdaStream& g, const PrimeTable& table,
               long long x, const std::set<long long>& extra, Visit&& visit) {
    if (x > table.limit) throw OutOfRange("prime sum: x exceeds the sieve limit");
    std::size_t i = 0, j = 0;
    for (long long p : table.primes) {
        if (p > x) break;
        while (i < f.primes.size() && f.primes[i] < p) ++i;
        while (j < g.primes.size() && g.primes[j] < p) ++j;
        if (extra.count(p) || f.excluded.count(p) || g.excluded.count(p)) continue;
        if (i >= f.primes.size() || f.primes[i] != p) throw MissingCoefficient(p);
        if (j >= g.primes.size() || g.primes[j] != p) throw MissingCoefficient(p);
        visit(p, f.lambda[i], g.lambda[j]);
    }
}

}  // namespace

SumResult sum_square(const LambdaStream& stream, const PrimeTable& table, long long x,
                     const std::set<long long>& S) {
    CompensatedSum acc;
    long long terms = 0;
    walk_one(stream, table, x, S, [&](long long, double l) {
        acc.add(l * l);
        ++terms;
    });
    return {acc.value(), acc.value() / prime_scale(x), terms};
}

SumResult sum_cross(const LambdaStream& f, const LambdaStream& g, const PrimeTable& table,
                    long long x, const std::set<long long>& S) {
    CompensatedSum acc;
    long long terms = 0;
    walk_pair(f, g, table, x, S, [&](long long, double lf, double lg) {
        acc.add(lf * lg);
        ++terms;
    });
    return {acc.value(), acc.value() / prime_scale(x), terms};
}

Exceedance exceedance_count(const LambdaStream& stream, const PrimeTable& table, long long x,
                            double c, const std::set<long long>& S) {
    if (!(c > 0.0 && c < 4.0)) throw std::invalid_argument("exceedance: need 0 < c < 4");
    long long count = 0;
    walk_one(stream, table, x, S, [&](long long, double l) {
        if (std::abs(l) > c) ++count;
    });
    return {count, static_cast<double>(count) / prime_scale(x)};
}

PrimeSumReport sign_change_report(const LambdaStream& f, const LambdaStream& g,
                                  const PrimeTable& table, long long x, double c, int m,
                                  const std::set<long long>& S) {
    if (!(c > 0.0 && c < 4.0)) throw std::invalid_argument("sign_change_report: need 0 < c < 4");
    PrimeSumReport rep;
    rep.x = x;
    rep.c = c;
    rep.m = m;

    std::set<long long> effective = S;
    effective.insert(f.excluded.begin(), f.excluded.end());
    effective.insert(g.excluded.begin(), g.excluded.end());
    for (long long p : effective)
        if (p <= x) rep.excluded.push_back(p);

    SumResult sf = sum_square(f, table, x, effective);
    SumResult sg = sum_square(g, table, x, effective);
    SumResult cross = sum_cross(f, g, table, x, effective);
    rep.sum_square_f = sf.sum;
    rep.sum_square_g = sg.sum;
    rep.sum_cross = cross.sum;
    rep.ratio_square_f = sf.ratio;
    rep.ratio_square_g = sg.ratio;
    rep.ratio_cross = cross.ratio;

    Exceedance exc = exceedance_count(g, table, x, c, effective);
    rep.count_exceed = exc.count;
    rep.alpha = exc.alpha_hat;

    CompensatedSum s_minus;
    long long neg = 0;
    walk_pair(f, g, table, x, effective, [&](long long, double lf, double lg) {
        const double prod = lf * lg;
        s_minus.add(prod * prod - 16.0 * prod);
        if (prod < 0.0) ++neg;
    });
    rep.s_minus = s_minus.value();
    rep.count_neg_product = neg;
    rep.density = static_cast<double>(neg) / prime_scale(x);
    rep.bound = c * c * (16.0 * rep.alpha + m - 16.0) / 512.0;
    rep.proof_inequality_holds = rep.s_minus <= 512.0 * static_cast<double>(neg);
    rep.density_at_least_bound = rep.density >= rep.bound;
    return rep;
}

bool lemma31_check(const LambdaStream& f, const LambdaStream& g, const PrimeTable& table,
                   long long x, double c, int m, double eps, const std::set<long long>& S) {
    std::set<long long> effective = S;
    effective.insert(f.excluded.begin(), f.excluded.end());
    effective.insert(g.excluded.begin(), g.excluded.end());
    Exceedance exc = exceedance_count(g, table, x, c, effective);
    CompensatedSum acc;
    walk_pair(f, g, table, x, effective, [&](long long, double lf, double lg) {
        acc.add(lf * lf * lg * lg);
    });
    const double scale = prime_scale(x);
    const double needed = (c * c * (16.0 * exc.alpha_hat + m - 16.0) - eps) * scale;
    return acc.value() >= needed;
}

std::vector<PerPrimeRow> per_prime_rows(const LambdaStream& f, const LambdaStream& g,
                                        const PrimeTable& table, long long x,
                                        const std::set<long long>& S) {
    std::vector<PerPrimeRow> rows;
    walk_pair(f, g, table, x, S, [&](long long p, double lf, double lg) {
        const double prod = lf * lg;
        rows.push_back({p, lf, lg, prod < 0.0 ? -1 : (prod > 0.0 ? 1 : 0)});
    });
    return rows;
}

}  // namespace spinsign
