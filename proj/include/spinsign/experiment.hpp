#pragma once

#include "spinsign/json_io.hpp"

namespace spinsign {

/// Reproducible sign-change experiment: two eigenform specs, a cutoff, the
/// theorem constants, and an optional base seed folded into every synthetic
/// source.
struct ExperimentConfig {
    std::filesystem::path spec_f;
    std::filesystem::path spec_g;
    long long x = 1000000;
    double c = 0.5;
    int m = 2;
    double epsilon = 0.1;
    std::optional<std::uint64_t> seed;

    void validate() const;  // 0 < c < 4, x >= 100, m in {1, 2}
};

ExperimentConfig experiment_config_from_json(const json& doc);
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

/// Folds a base seed into every synthetic source of the spec; file-backed
/// sources are untouched. Same base, same spec -> same streams.
EigenformSpec with_base_seed(EigenformSpec spec, std::uint64_t base);

struct ExperimentResult {
    EigenformSpec spec_f;
    EigenformSpec spec_g;
    PrimeSumReport report;
    bool lemma31_holds = false;
    std::vector<PerPrimeRow> rows;  // filled when want_rows is set
};

/// Loads both specs (paths relative to base_dir), enforces pairwise
/// distinctness of all sources across the two specs, builds the streams,
/// and assembles the report. Throws std::invalid_argument("sources must be
/// distinct") when the specs share a source.
ExperimentResult run_density_experiment(const ExperimentConfig& config,
                                        const std::filesystem::path& base_dir,
                                        bool want_rows = false);

}  // namespace spinsign
