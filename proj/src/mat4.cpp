#include "spinsign/mat4.hpp"

#include <sstream>
#include <vector>

namespace spinsign {

Mat4 Mat4::identity() {
    Mat4 m;
    for (int i = 0; i < 4; ++i) m.at(i, i) = 1;
    return m;
}

Mat4 Mat4::sympl_J() {
    Mat4 j;
    j.at(0, 2) = 1;
    j.at(1, 3) = 1;
    j.at(2, 0) = -1;
    j.at(3, 1) = -1;
    return j;
}

Mat4 Mat4::diag(Rational a, Rational b, Rational c, Rational d) {
    Mat4 m;
    m.at(0, 0) = std::move(a);
    m.at(1, 1) = std::move(b);
    m.at(2, 2) = std::move(c);
    m.at(3, 3) = std::move(d);
    return m;
}

Mat4 Mat4::operator*(const Mat4& rhs) const {
    Mat4 out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            Rational s = 0;
            for (int k = 0; k < 4; ++k) s += at(r, k) * rhs.at(k, c);
            out.at(r, c) = std::move(s);
        }
    return out;
}

Mat4 Mat4::operator-(const Mat4& rhs) const {
    Mat4 out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out.at(i, j) = at(i, j) - rhs.at(i, j);
    return out;
}

Mat4 Mat4::transpose() const {
    Mat4 out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out.at(c, r) = at(r, c);
    return out;
}

Rational Mat4::det() const {
    // Fraction-free expansion is overkill at this size; eliminate directly.
    Mat4 work = *this;
    Rational d = 1;
    for (int col = 0; col < 4; ++col) {
        int pivot = -1;
        for (int r = col; r < 4; ++r)
            if (work.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != col) {
            for (int c = 0; c < 4; ++c) std::swap(work.at(pivot, c), work.at(col, c));
            d = -d;
        }
        d *= work.at(col, col);
        for (int r = col + 1; r < 4; ++r) {
            if (work.at(r, col) == 0) continue;
            Rational f = work.at(r, col) / work.at(col, col);
            for (int c = col; c < 4; ++c) work.at(r, c) -= f * work.at(col, c);
        }
    }
    return d;
}

Mat4 Mat4::inverse() const {
    Mat4 work = *this;
    Mat4 inv = Mat4::identity();
    for (int col = 0; col < 4; ++col) {
        int pivot = -1;
        for (int r = col; r < 4; ++r)
            if (work.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw SingularMatrix("Mat4::inverse: rank < 4");
        if (pivot != col)
            for (int c = 0; c < 4; ++c) {
                std::swap(work.at(pivot, c), work.at(col, c));
                std::swap(inv.at(pivot, c), inv.at(col, c));
            }
        Rational piv = work.at(col, col);
        for (int c = 0; c < 4; ++c) {
            work.at(col, c) /= piv;
            inv.at(col, c) /= piv;
        }
        for (int r = 0; r < 4; ++r) {
            if (r == col || work.at(r, col) == 0) continue;
            Rational f = work.at(r, col);
            for (int c = 0; c < 4; ++c) {
                work.at(r, c) -= f * work.at(col, c);
                inv.at(r, c) -= f * inv.at(col, c);
            }
        }
    }
    return inv;
}

bool Mat4::is_zero() const {
    for (const auto& e : entries_)
        if (e != 0) return false;
    return true;
}

bool Mat4::is_integral() const {
    for (const auto& e : entries_)
        if (denominator(e) != 1) return false;
    return true;
}

Mat4 parse_matrix(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    if (tokens.size() != 16)
        throw ParseError("matrix literal needs 16 entries, got " + std::to_string(tokens.size()));
    Mat4 m;
    for (int i = 0; i < 16; ++i) m.at(i / 4, i % 4) = parse_rational(tokens[i]);
    return m;
}

std::string format_matrix(const Mat4& m) {
    std::string out;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            out += rational_to_string(m.at(r, c));
            out += (c == 3) ? '\n' : ' ';
        }
    }
    return out;
}

}  // namespace spinsign
