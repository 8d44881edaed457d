#include "spinsign/satake.hpp"

namespace spinsign {

bool check_ramanujan(const SatakeParams& s, double tol) {
    if (tol <= 0) throw std::invalid_argument("check_ramanujan: tol must be > 0");
    return std::abs(std::abs(s.a0) - 1.0) <= tol && std::abs(std::abs(s.a1) - 1.0) <= tol &&
           std::abs(std::abs(s.a2) - 1.0) <= tol;
}

bool check_weissauer(double lambda) { return std::abs(lambda) <= 4.0 + 1e-12; }

bool trivial_central_character(const SatakeParams& s, double tol) {
    return std::abs(s.a0 * s.a0 * s.a1 * s.a2 - 1.0) <= tol;
}

}  // namespace spinsign
