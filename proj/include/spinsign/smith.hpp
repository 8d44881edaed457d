#pragma once

#include <array>

#include "spinsign/mat4.hpp"

namespace spinsign {

using IMat4 = std::array<std::array<Int, 4>, 4>;

/// Elementary divisors d1 | d2 | d3 | d4 (all positive) of an integer 4x4
/// matrix, by exact row/column reduction. Throws SingularMatrix on rank < 4.
std::array<Int, 4> smith_normal_form(IMat4 g);

/// Convenience overload; the matrix must have integer entries.
std::array<Int, 4> smith_normal_form(const Mat4& g);

}  // namespace spinsign
