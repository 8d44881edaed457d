#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "spinsign/newform.hpp"
#include "spinsign/primes.hpp"

namespace spinsign {

enum class AngleKind { SatoTateSemicircle, UniformAngle, FixedTable };

/// Synthetic angle source: one theta_p in [0, pi] per prime, reproducible
/// from the seed. The induced GL2 coefficient is 2*cos(theta_p).
struct AngleStreamModel {
    AngleKind kind = AngleKind::SatoTateSemicircle;
    std::uint64_t seed = 0;
    double fixed_angle = 1.5707963267948966;  // FixedTable only
};

std::vector<double> sample_angles(const AngleStreamModel& model,
                                  const std::vector<long long>& primes);
std::vector<double> sample_angles(const AngleStreamModel& model, long long pmax);

enum class EigenformClass { G, Y };

enum class SourceType {
    Newform,    // file-backed genus-1 newform, contributes a(p) p^{-(k-1)/2}
    Angles,     // single synthetic angle stream, contributes 2 cos(theta_p)
    Gl4Angles,  // two angle pairs per prime: four unit roots closed under
                // conjugation, contributes 2 cos(theta_p) + 2 cos(phi_p)
    RootTable,  // explicit per-prime spin roots from a JSON file
};

struct SourceSpec {
    SourceType type = SourceType::Angles;
    AngleStreamModel model;         // Angles / Gl4Angles
    std::filesystem::path path;     // Newform / RootTable
    NewformFormat format = NewformFormat::Auto;
};

/// A class-G or class-Y recipe for a normalized eigenvalue sequence:
/// class Y sums the unitary coefficients of two distinct GL2 sources,
/// class G reads a single GL4-style source. The ramified set S always
/// absorbs the primes dividing any source level.
struct EigenformSpec {
    EigenformClass cls = EigenformClass::G;
    std::string label;
    std::vector<SourceSpec> sources;  // exactly 1 for G, exactly 2 for Y
    std::set<long long> ramified;
};

struct LambdaStream {
    std::string label;
    std::set<long long> excluded;   // the spec's ramified set S
    std::vector<long long> primes;  // p <= pmax, p not in excluded
    std::vector<double> lambda;
};

/// Stable identity of a source, used for the pairwise-distinctness checks.
std::string source_key(const SourceSpec& src, const std::filesystem::path& base_dir);

/// True when the two sources carry distinct labels AND their coefficient
/// streams disagree at one of the first ten primes.
bool sources_distinct(const SourceSpec& a, const SourceSpec& b,
                      const std::filesystem::path& base_dir);

/// Materializes (p, lambda(p)) for p <= pmax outside S. Class Y rejects
/// specs whose two sources are not distinct. Throws MissingCoefficient at
/// the first prime a file-backed source cannot cover.
LambdaStream lambda_stream(const EigenformSpec& spec, const PrimeTable& table, long long pmax,
                           const std::filesystem::path& base_dir = ".");
LambdaStream lambda_stream(const EigenformSpec& spec, long long pmax,
                           const std::filesystem::path& base_dir = ".");

}  // namespace spinsign
