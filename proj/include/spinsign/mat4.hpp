#pragma once

#include <array>
#include <string>
#include <string_view>

#include "spinsign/rational.hpp"

namespace spinsign {

/// Dense 4x4 matrix over the exact rationals. Everything in the symplectic
/// layer is pattern-exact, so no floating point appears here.
class Mat4 {
public:
    Mat4() = default;

    static Mat4 identity();
    /// The standard symplectic form J = [[0, 1_2], [-1_2, 0]].
    static Mat4 sympl_J();
    static Mat4 diag(Rational a, Rational b, Rational c, Rational d);

    Rational& at(int r, int c) { return entries_[r * 4 + c]; }
    const Rational& at(int r, int c) const { return entries_[r * 4 + c]; }

    Mat4 operator*(const Mat4& rhs) const;
    Mat4 operator-(const Mat4& rhs) const;
    Mat4 transpose() const;
    Rational det() const;
    /// Exact inverse by Gauss-Jordan elimination; throws SingularMatrix.
    Mat4 inverse() const;

    bool is_zero() const;
    bool is_integral() const;
    bool operator==(const Mat4&) const = default;

private:
    std::array<Rational, 16> entries_{};
};

/// Reads 16 whitespace-separated rationals ("a/b" or integers), row-major.
Mat4 parse_matrix(std::string_view text);
std::string format_matrix(const Mat4& m);

}  // namespace spinsign
