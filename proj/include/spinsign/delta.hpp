#pragma once

#include <vector>

#include "spinsign/rational.hpp"

namespace spinsign {

/// Ramanujan tau coefficients tau(1)..tau(nterms) of the discriminant form
/// q * prod_{n>=1} (1 - q^n)^24, computed exactly: the eta factor is
/// expanded with the pentagonal-number theorem and raised to the 24th power
/// by repeated squaring of truncated series. Index 0 of the result is 0.
std::vector<Int> delta_qexp(int nterms);

}  // namespace spinsign
