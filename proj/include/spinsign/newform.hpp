#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "spinsign/rational.hpp"

namespace spinsign {

/// Raw coefficient data of a genus-1 Hecke newform.
struct NewformGL2 {
    long long level = 1;
    int weight = 12;
    std::string label;
    std::map<long long, Int> ap;  // prime -> a(p)
    std::map<long long, Int> an;  // optional full a(n) table

    bool ramified(long long p) const { return level % p == 0; }
};

/// Ramanujan-Deligne violation found on ingest: |a(p)| p^{-(k-1)/2} > 2.
/// Reported, never fatal.
struct RamanujanWarning {
    long long p;
    double normalized;
};

struct NewformLoad {
    NewformGL2 form;
    std::vector<RamanujanWarning> warnings;
};

enum class NewformFormat { Auto, Csv, QexpText };

/// Loads a newform export. Both formats start with a header line
/// `level=<N>,weight=<k>[,label=<text>]`; the csv body is `p,a(p)` lines,
/// the q-expansion body is whitespace-separated `n a(n)` lines (primes are
/// extracted from the full table). Throws ParseError with a line number.
NewformLoad load_newform(const std::filesystem::path& path,
                         NewformFormat format = NewformFormat::Auto);

/// Same parser over an in-memory string.
NewformLoad parse_newform(const std::string& text, NewformFormat format,
                          const std::string& default_label);

/// Unitary normalization a(p) * p^{-(k-1)/2}, so that Ramanujan sources
/// land in [-2, 2]. Throws RamifiedPrime for p | N, MissingCoefficient
/// when a(p) is unknown.
double normalized_ap(const NewformGL2& f, long long p);

/// The built-in level-1 weight-12 discriminant form with coefficients up
/// to nterms, straight from the eta-product engine.
NewformGL2 delta_newform(int nterms);

}  // namespace spinsign
