#pragma once

#include <string>
#include <string_view>

#include "spinsign/mat4.hpp"

namespace spinsign {

/// Computes mu with tg*J*g = mu*J. Throws NotSimilitude when tg*J*g is not a
/// nonzero scalar multiple of J (in particular for singular g).
Rational similitude(const Mat4& g);

/// A GSp(4) element together with its cached similitude factor.
class SimilitudeMatrix {
public:
    explicit SimilitudeMatrix(Mat4 entries);

    const Mat4& entries() const { return entries_; }
    const Rational& mu() const { return mu_; }

    SimilitudeMatrix operator*(const SimilitudeMatrix& rhs) const;
    SimilitudeMatrix inverse() const;

    bool operator==(const SimilitudeMatrix&) const = default;

private:
    Mat4 entries_;
    Rational mu_;
};

enum class SubgroupKind { Borel, Siegel, Klingen, Paramodular };

struct SubgroupSpec {
    SubgroupKind kind;
    long long level;  // N >= 1
};

/// Local analogue of a SubgroupSpec at one prime: p^exponent exactly divides
/// the level, and the entry-wise pattern is read p-adically.
struct ValuationPattern {
    long long prime;
    long long exponent;  // r_p >= 1
    SubgroupKind kind;
};

/// Membership in B(N), Gamma_0^2(N), Q(N) or K(N): mu = 1, the entry-wise
/// divisibility pattern of the kind, and integrality over the ambient ring
/// (Z for the first three; for K(N) only the (2,4) slot may carry a
/// denominator, and it must divide N).
bool is_member(const SimilitudeMatrix& g, const SubgroupSpec& spec);

/// p-adic membership: mu = 1 plus the local valuation pattern (the (2,4)
/// slot of the paramodular pattern admits valuation >= -r_p).
bool is_local_member(const SimilitudeMatrix& g, const ValuationPattern& pat);

/// Parses "kind:N", e.g. "paramodular:4" or "siegel:2".
SubgroupSpec parse_subgroup_spec(std::string_view text);
std::string subgroup_kind_name(SubgroupKind kind);

}  // namespace spinsign
