#include "spinsign/experiment.hpp"

#include <fstream>

namespace spinsign {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

void ExperimentConfig::validate() const {
    if (!(c > 0.0 && c < 4.0))
        throw std::invalid_argument("experiment config: need 0 < c < 4");
    if (x < 100) throw std::invalid_argument("experiment config: need x >= 100");
    if (m != 1 && m != 2) throw std::invalid_argument("experiment config: m must be 1 or 2");
}

ExperimentConfig experiment_config_from_json(const json& doc) {
    try {
        ExperimentConfig config;
        config.spec_f = doc.at("specF").get<std::string>();
        config.spec_g = doc.at("specG").get<std::string>();
        config.x = static_cast<long long>(doc.at("x").get<double>());
        config.c = doc.at("c").get<double>();
        config.m = doc.at("m").get<int>();
        if (doc.contains("epsilon")) config.epsilon = doc.at("epsilon").get<double>();
        if (doc.contains("seed")) config.seed = doc.at("seed").get<std::uint64_t>();
        config.validate();
        return config;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("bad experiment config: " + std::string(e.what()));
    }
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config '" + path.string() + "'");
    json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("bad config JSON in '" + path.string() + "': " + e.what());
    }
    return experiment_config_from_json(doc);
}

EigenformSpec with_base_seed(EigenformSpec spec, std::uint64_t base) {
    for (SourceSpec& src : spec.sources)
        if (src.type == SourceType::Angles || src.type == SourceType::Gl4Angles)
            src.model.seed = splitmix64(base ^ splitmix64(src.model.seed));
    return spec;
}

ExperimentResult run_density_experiment(const ExperimentConfig& config,
                                        const std::filesystem::path& base_dir,
                                        bool want_rows) {
    config.validate();
    auto resolve_path = [&](const std::filesystem::path& p) {
        return p.is_absolute() ? p : base_dir / p;
    };
    ExperimentResult result;
    result.spec_f = load_eigenform_spec(resolve_path(config.spec_f));
    result.spec_g = load_eigenform_spec(resolve_path(config.spec_g));
    if (config.seed) {
        result.spec_f = with_base_seed(std::move(result.spec_f), *config.seed);
        result.spec_g = with_base_seed(std::move(result.spec_g), *config.seed);
    }

    // Lemma 3.2's hypothesis: every source on the F side distinct from every
    // source on the G side (each Y spec already enforces its internal pair).
    for (const SourceSpec& a : result.spec_f.sources)
        for (const SourceSpec& b : result.spec_g.sources)
            if (!sources_distinct(a, b, base_dir))
                throw std::invalid_argument("sources must be distinct");

    PrimeTable table = sieve(config.x);
    LambdaStream f = lambda_stream(result.spec_f, table, config.x, base_dir);
    LambdaStream g = lambda_stream(result.spec_g, table, config.x, base_dir);
    result.report = sign_change_report(f, g, table, config.x, config.c, config.m);
    result.lemma31_holds =
        lemma31_check(f, g, table, config.x, config.c, config.m, config.epsilon);
    if (want_rows) result.rows = per_prime_rows(f, g, table, config.x);
    return result;
}

}  // namespace spinsign
