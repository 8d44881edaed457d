#include "spinsign/rational.hpp"

#include <cctype>

namespace spinsign {

namespace {

Int parse_int(std::string_view text) {
    if (text.empty()) throw ParseError("empty integer literal");
    std::size_t i = 0;
    if (text[0] == '+' || text[0] == '-') i = 1;
    if (i == text.size()) throw ParseError("bare sign is not an integer");
    for (std::size_t j = i; j < text.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(text[j])))
            throw ParseError("bad integer literal: '" + std::string(text) + "'");
    return Int(std::string(text));
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string rational_to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

long long padic_valuation(Int n, long long p) {
    if (n == 0) throw std::invalid_argument("padic_valuation: zero integer");
    if (p < 2) throw std::invalid_argument("padic_valuation: p must be >= 2");
    long long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

std::optional<long long> padic_valuation(const Rational& q, long long p) {
    if (q == 0) return std::nullopt;
    return padic_valuation(numerator(q), p) - padic_valuation(denominator(q), p);
}

bool valuation_at_least(const Rational& q, long long p, long long bound) {
    auto v = padic_valuation(q, p);
    return !v.has_value() || *v >= bound;
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace spinsign
