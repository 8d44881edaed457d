#include "spinsign/streams.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <random>

#include <json.hpp>

namespace spinsign {

namespace {

constexpr double kPi = 3.14159265358979323846;
const double kNaN = std::numeric_limits<double>::quiet_NaN();

// 53-bit uniform in [0,1); avoids std::uniform_real_distribution so the
// streams are bit-identical across standard library implementations.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Inverse CDF of the Sato-Tate measure (2/pi) sin^2(theta) dtheta by
// bisection; F(theta) = (theta - sin(theta)cos(theta)) / pi.
double semicircle_angle(double u) {
    double lo = 0.0, hi = kPi;
    for (int i = 0; i < 64; ++i) {
        double mid = 0.5 * (lo + hi);
        double f = (mid - 0.5 * std::sin(2.0 * mid)) / kPi;
        if (f < u)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double draw_angle(const AngleStreamModel& model, std::mt19937_64& rng) {
    switch (model.kind) {
        case AngleKind::SatoTateSemicircle: return semicircle_angle(uniform01(rng));
        case AngleKind::UniformAngle: return kPi * uniform01(rng);
        case AngleKind::FixedTable: return model.fixed_angle;
    }
    throw std::logic_error("unknown angle kind");
}

std::string angle_kind_tag(AngleKind kind) {
    switch (kind) {
        case AngleKind::SatoTateSemicircle: return "semicircle";
        case AngleKind::UniformAngle: return "uniform";
        case AngleKind::FixedTable: return "fixed";
    }
    return "?";
}

// A source with its file data pulled in; contribution vectors are always
// generated over the full ascending prime list so that a given seed yields
// the same angle at a given prime regardless of exclusions.
struct ResolvedSource {
    SourceType type;
    std::string label;
    long long level = 1;
    NewformGL2 form;                             // Newform
    AngleStreamModel model;                      // Angles / Gl4Angles
    std::map<long long, double> root_sums;       // RootTable

    std::vector<double> contributions(const std::vector<long long>& primes) const {
        std::vector<double> out(primes.size(), kNaN);
        switch (type) {
            case SourceType::Angles: {
                std::mt19937_64 rng(model.seed);
                for (std::size_t i = 0; i < primes.size(); ++i)
                    out[i] = 2.0 * std::cos(draw_angle(model, rng));
                break;
            }
            case SourceType::Gl4Angles: {
                std::mt19937_64 rng(model.seed);
                for (std::size_t i = 0; i < primes.size(); ++i) {
                    double theta = draw_angle(model, rng);
                    double phi = draw_angle(model, rng);
                    out[i] = 2.0 * std::cos(theta) + 2.0 * std::cos(phi);
                }
                break;
            }
            case SourceType::Newform: {
                for (std::size_t i = 0; i < primes.size(); ++i) {
                    long long p = primes[i];
                    if (form.ramified(p)) continue;
                    auto it = form.ap.find(p);
                    if (it == form.ap.end()) continue;
                    out[i] = it->second.convert_to<double>() *
                             std::pow(static_cast<double>(p), -(form.weight - 1) / 2.0);
                }
                break;
            }
            case SourceType::RootTable: {
                for (std::size_t i = 0; i < primes.size(); ++i) {
                    auto it = root_sums.find(primes[i]);
                    if (it != root_sums.end()) out[i] = it->second;
                }
                break;
            }
        }
        return out;
    }
};

std::map<long long, double> load_root_table(const std::filesystem::path& path,
                                            std::string& label) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open root table '" + path.string() + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("bad root table JSON: " + std::string(e.what()));
    }
    if (doc.contains("label")) label = doc.at("label").get<std::string>();
    std::map<long long, double> sums;
    for (const auto& entry : doc.at("entries")) {
        long long p = entry.at("p").get<long long>();
        double re = 0.0, im = 0.0;
        for (const auto& root : entry.at("roots")) {
            re += root.at(0).get<double>();
            im += root.at(1).get<double>();
        }
        if (std::abs(im) > 1e-6)
            throw ParseError("root set at p=" + std::to_string(p) +
                             " is not closed under conjugation (Im sum = " +
                             std::to_string(im) + ")");
        sums[p] = re;
    }
    return sums;
}

ResolvedSource resolve(const SourceSpec& src, const std::filesystem::path& base_dir) {
    ResolvedSource r;
    r.type = src.type;
    r.model = src.model;
    switch (src.type) {
        case SourceType::Angles:
        case SourceType::Gl4Angles: {
            std::string tag = src.type == SourceType::Gl4Angles ? "gl4-" : "";
            tag += angle_kind_tag(src.model.kind);
            if (src.model.kind == AngleKind::FixedTable)
                r.label = tag + "(angle=" + std::to_string(src.model.fixed_angle) + ")";
            else
                r.label = tag + "(seed=" + std::to_string(src.model.seed) + ")";
            break;
        }
        case SourceType::Newform: {
            auto path = src.path.is_absolute() ? src.path : base_dir / src.path;
            NewformLoad load = load_newform(path, src.format);
            r.form = std::move(load.form);
            r.label = "newform:" + r.form.label;
            r.level = r.form.level;
            break;
        }
        case SourceType::RootTable: {
            auto path = src.path.is_absolute() ? src.path : base_dir / src.path;
            std::string label = path.stem().string();
            r.root_sums = load_root_table(path, label);
            r.label = "roots:" + label;
            break;
        }
    }
    return r;
}

}  // namespace

std::vector<double> sample_angles(const AngleStreamModel& model,
                                  const std::vector<long long>& primes) {
    std::mt19937_64 rng(model.seed);
    std::vector<double> out;
    out.reserve(primes.size());
    for (std::size_t i = 0; i < primes.size(); ++i) out.push_back(draw_angle(model, rng));
    return out;
}

std::vector<double> sample_angles(const AngleStreamModel& model, long long pmax) {
    return sample_angles(model, sieve(pmax).primes);
}

std::string source_key(const SourceSpec& src, const std::filesystem::path& base_dir) {
    return resolve(src, base_dir).label;
}

bool sources_distinct(const SourceSpec& a, const SourceSpec& b,
                      const std::filesystem::path& base_dir) {
    ResolvedSource ra = resolve(a, base_dir);
    ResolvedSource rb = resolve(b, base_dir);
    if (ra.label == rb.label) return false;
    const std::vector<long long> first{2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
    std::vector<double> va = ra.contributions(first);
    std::vector<double> vb = rb.contributions(first);
    for (std::size_t i = 0; i < first.size(); ++i) {
        if (std::isnan(va[i]) || std::isnan(vb[i])) continue;
        if (std::abs(va[i] - vb[i]) > 1e-12) return true;
    }
    return false;
}

LambdaStream lambda_stream(const EigenformSpec& spec, const PrimeTable& table, long long pmax,
                           const std::filesystem::path& base_dir) {
    const std::size_t want = spec.cls == EigenformClass::G ? 1 : 2;
    if (spec.sources.size() != want)
        throw std::invalid_argument("class " +
                                    std::string(spec.cls == EigenformClass::G ? "G" : "Y") +
                                    " spec needs exactly " + std::to_string(want) +
                                    " source(s)");
    if (pmax > table.limit)
        throw OutOfRange("lambda_stream: pmax exceeds the sieve limit");
    if (spec.cls == EigenformClass::Y &&
        !sources_distinct(spec.sources[0], spec.sources[1], base_dir))
        throw std::invalid_argument("sources must be distinct");

    std::vector<ResolvedSource> resolved;
    for (const SourceSpec& src : spec.sources) resolved.push_back(resolve(src, base_dir));

    LambdaStream stream;
    stream.label = spec.label;
    stream.excluded = spec.ramified;
    for (const ResolvedSource& r : resolved) {
        long long n = r.level;
        for (long long p = 2; p * p <= n; ++p)
            while (n % p == 0) {
                stream.excluded.insert(p);
                n /= p;
            }
        if (n > 1) stream.excluded.insert(n);
    }

    std::vector<long long> all_primes;
    for (long long p : table.primes) {
        if (p > pmax) break;
        all_primes.push_back(p);
    }
    std::vector<std::vector<double>> parts;
    for (const ResolvedSource& r : resolved) parts.push_back(r.contributions(all_primes));

    for (std::size_t i = 0; i < all_primes.size(); ++i) {
        long long p = all_primes[i];
        if (stream.excluded.count(p)) continue;
        double value = 0.0;
        for (const auto& part : parts) {
            if (std::isnan(part[i])) throw MissingCoefficient(p);
            value += part[i];
        }
        stream.primes.push_back(p);
        stream.lambda.push_back(value);
    }
    return stream;
}

LambdaStream lambda_stream(const EigenformSpec& spec, long long pmax,
                           const std::filesystem::path& base_dir) {
    return lambda_stream(spec, sieve(pmax), pmax, base_dir);
}

}  // namespace spinsign
