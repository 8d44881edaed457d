#pragma once

#include <stdexcept>
#include <string>

namespace spinsign {

struct NotSimilitude : std::domain_error {
    explicit NotSimilitude(const std::string& what) : std::domain_error(what) {}
};

struct NotPrime : std::domain_error {
    explicit NotPrime(long long n)
        : std::domain_error("not a prime: " + std::to_string(n)), value(n) {}
    long long value;
};

struct SingularMatrix : std::domain_error {
    explicit SingularMatrix(const std::string& what) : std::domain_error(what) {}
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, long long line_no = 0)
        : std::runtime_error(line_no > 0 ? what + " (line " + std::to_string(line_no) + ")"
                                         : what),
          line(line_no) {}
    long long line;
};

struct MissingCoefficient : std::domain_error {
    explicit MissingCoefficient(long long p)
        : std::domain_error("missing coefficient at p=" + std::to_string(p)), prime(p) {}
    long long prime;
};

struct RamifiedPrime : std::domain_error {
    explicit RamifiedPrime(long long p)
        : std::domain_error("prime divides the level: p=" + std::to_string(p)), prime(p) {}
    long long prime;
};

struct OutOfRange : std::domain_error {
    explicit OutOfRange(const std::string& what) : std::domain_error(what) {}
};

}  // namespace spinsign
