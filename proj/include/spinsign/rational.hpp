#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "spinsign/errors.hpp"

namespace spinsign {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "a/b" or a plain integer (optional sign, arbitrary size).
Rational parse_rational(std::string_view text);

/// "a/b" when the denominator is nontrivial, "a" otherwise.
std::string rational_to_string(const Rational& q);

/// Exact p-adic valuation of a nonzero integer.
long long padic_valuation(Int n, long long p);

/// Valuation of a rational; nullopt encodes v_p(0) = +infinity.
std::optional<long long> padic_valuation(const Rational& q, long long p);

/// True iff v_p(q) >= bound, with v_p(0) = +infinity satisfying every bound.
bool valuation_at_least(const Rational& q, long long p, long long bound);

bool is_prime(long long n);

}  // namespace spinsign
