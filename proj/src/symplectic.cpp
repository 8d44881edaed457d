#include "spinsign/symplectic.hpp"

#include <algorithm>

namespace spinsign {

namespace {

// Slot roles in the printed lattice of each congruence subgroup.
enum Slot : char { Z = 0, LVL = 1, INV = 2 };  // Z, N*Z, N^{-1}*Z

using Pattern = std::array<Slot, 16>;

constexpr Pattern kBorel = {
    Z,   LVL, Z,   Z,    //
    Z,   Z,   Z,   Z,    //
    LVL, LVL, Z,   Z,    //
    LVL, LVL, LVL, Z,
};
constexpr Pattern kSiegel = {
    Z,   Z,   Z, Z,    //
    Z,   Z,   Z, Z,    //
    LVL, LVL, Z, Z,    //
    LVL, LVL, Z, Z,
};
constexpr Pattern kKlingen = {
    Z,   LVL, Z,   Z,    //
    Z,   Z,   Z,   Z,    //
    Z,   LVL, Z,   Z,    //
    LVL, LVL, LVL, Z,
};
constexpr Pattern kParamodular = {
    Z,   LVL, Z,   Z,    //
    Z,   Z,   Z,   INV,  //
    Z,   LVL, Z,   Z,    //
    LVL, LVL, LVL, Z,
};

const Pattern& pattern_for(SubgroupKind kind) {
    switch (kind) {
        case SubgroupKind::Borel: return kBorel;
        case SubgroupKind::Siegel: return kSiegel;
        case SubgroupKind::Klingen: return kKlingen;
        case SubgroupKind::Paramodular: return kParamodular;
    }
    throw std::logic_error("unknown subgroup kind");
}

}  // namespace

Rational similitude(const Mat4& g) {
    const Mat4 J = Mat4::sympl_J();
    Mat4 m = g.transpose() * J * g;  // must equal mu*J
    const Rational& mu = m.at(0, 2);
    if (mu == 0) throw NotSimilitude("tgJg has zero (1,3) entry");
    Mat4 scaled = J;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) scaled.at(r, c) *= mu;
    if (!(m - scaled).is_zero()) throw NotSimilitude("tgJg is not a scalar multiple of J");
    return mu;
}

SimilitudeMatrix::SimilitudeMatrix(Mat4 entries)
    : entries_(std::move(entries)), mu_(similitude(entries_)) {}

SimilitudeMatrix SimilitudeMatrix::operator*(const SimilitudeMatrix& rhs) const {
    return SimilitudeMatrix(entries_ * rhs.entries_);
}

SimilitudeMatrix SimilitudeMatrix::inverse() const {
    return SimilitudeMatrix(entries_.inverse());
}

bool is_member(const SimilitudeMatrix& g, const SubgroupSpec& spec) {
    if (spec.level < 1) throw std::invalid_argument("subgroup level must be >= 1");
    if (g.mu() != 1) return false;
    const Pattern& pat = pattern_for(spec.kind);
    const Rational N = spec.level;
    for (int i = 0; i < 16; ++i) {
        const Rational& e = g.entries().at(i / 4, i % 4);
        switch (pat[i]) {
            case Z:
                if (denominator(e) != 1) return false;
                break;
            case LVL:
                if (denominator(e) != 1 || numerator(e) % spec.level != 0) return false;
                break;
            case INV: {
                const Rational scaled = e * N;
                if (denominator(scaled) != 1) return false;
                break;
            }
        }
    }
    return true;
}

bool is_local_member(const SimilitudeMatrix& g, const ValuationPattern& pat) {
    if (pat.exponent < 1) throw std::invalid_argument("valuation pattern needs r_p >= 1");
    if (!is_prime(pat.prime)) throw NotPrime(pat.prime);
    if (g.mu() != 1) return false;
    const Pattern& slots = pattern_for(pat.kind);
    for (int i = 0; i < 16; ++i) {
        const Rational& e = g.entries().at(i / 4, i % 4);
        long long bound = 0;
        if (slots[i] == LVL) bound = pat.exponent;
        if (slots[i] == INV) bound = -pat.exponent;
        if (!valuation_at_least(e, pat.prime, bound)) return false;
    }
    return true;
}

SubgroupSpec parse_subgroup_spec(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw ParseError("subgroup spec must be 'kind:N', got '" + std::string(text) + "'");
    std::string kind(text.substr(0, colon));
    std::transform(kind.begin(), kind.end(), kind.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    SubgroupSpec spec{};
    if (kind == "borel")
        spec.kind = SubgroupKind::Borel;
    else if (kind == "siegel")
        spec.kind = SubgroupKind::Siegel;
    else if (kind == "klingen")
        spec.kind = SubgroupKind::Klingen;
    else if (kind == "paramodular")
        spec.kind = SubgroupKind::Paramodular;
    else
        throw ParseError("unknown subgroup kind '" + kind + "'");
    try {
        spec.level = std::stoll(std::string(text.substr(colon + 1)));
    } catch (const std::exception&) {
        throw ParseError("bad level in subgroup spec '" + std::string(text) + "'");
    }
    if (spec.level < 1) throw ParseError("subgroup level must be >= 1");
    return spec;
}

std::string subgroup_kind_name(SubgroupKind kind) {
    switch (kind) {
        case SubgroupKind::Borel: return "borel";
        case SubgroupKind::Siegel: return "siegel";
        case SubgroupKind::Klingen: return "klingen";
        case SubgroupKind::Paramodular: return "paramodular";
    }
    return "?";
}

}  // namespace spinsign
