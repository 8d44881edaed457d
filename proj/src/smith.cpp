#include "spinsign/smith.hpp"

namespace spinsign {

namespace {

// True when row s and column s are zero outside the diagonal entry.
bool is_isolated(const IMat4& a, int s) {
    for (int i = s + 1; i < 4; ++i)
        if (a[i][s] != 0 || a[s][i] != 0) return false;
    return true;
}

// Smallest nonzero |entry| in the trailing block a[s.., s..]; false if none.
bool locate_pivot(const IMat4& a, int s, int& pr, int& pc) {
    bool found = false;
    Int best = 0;
    for (int i = s; i < 4; ++i)
        for (int j = s; j < 4; ++j) {
            if (a[i][j] == 0) continue;
            Int v = abs(a[i][j]);
            if (!found || v < best) {
                best = v;
                pr = i;
                pc = j;
                found = true;
            }
        }
    return found;
}

// Reduces row s and column s against the pivot until both are clear. Each
// pass either finishes or strictly shrinks |a[s][s]|, so this terminates.
void isolate_pivot(IMat4& a, int s) {
    while (!is_isolated(a, s)) {
        int pr = s, pc = s;
        if (!locate_pivot(a, s, pr, pc)) throw SingularMatrix("smith_normal_form: rank < 4");
        std::swap(a[s], a[pr]);
        for (int i = 0; i < 4; ++i) std::swap(a[i][s], a[i][pc]);
        for (int i = s + 1; i < 4; ++i) {
            if (a[i][s] == 0) continue;
            Int q = a[i][s] / a[s][s];
            for (int j = s; j < 4; ++j) a[i][j] -= q * a[s][j];
        }
        for (int j = s + 1; j < 4; ++j) {
            if (a[s][j] == 0) continue;
            Int q = a[s][j] / a[s][s];
            for (int i = s; i < 4; ++i) a[i][j] -= q * a[i][s];
        }
    }
}

}  // namespace

std::array<Int, 4> smith_normal_form(IMat4 a) {
    for (int s = 0; s < 4; ++s) {
        int pr, pc;
        if (!locate_pivot(a, s, pr, pc)) throw SingularMatrix("smith_normal_form: rank < 4");
        isolate_pivot(a, s);

        // The pivot must divide the whole trailing block; folding a bad row
        // into row s and re-isolating shrinks the pivot, so this terminates.
        for (bool clean = false; !clean;) {
            clean = true;
            for (int i = s + 1; i < 4 && clean; ++i)
                for (int j = s + 1; j < 4 && clean; ++j)
                    if (a[i][j] % a[s][s] != 0) {
                        for (int c = s; c < 4; ++c) a[s][c] += a[i][c];
                        isolate_pivot(a, s);
                        clean = false;
                    }
        }

        if (a[s][s] < 0)
            for (int j = s; j < 4; ++j) a[s][j] = -a[s][j];
    }
    return {a[0][0], a[1][1], a[2][2], a[3][3]};
}

std::array<Int, 4> smith_normal_form(const Mat4& g) {
    IMat4 a;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            const Rational& e = g.at(r, c);
            if (denominator(e) != 1)
                throw std::invalid_argument("smith_normal_form: matrix is not integral");
            a[r][c] = numerator(e);
        }
    return smith_normal_form(a);
}

}  // namespace spinsign
