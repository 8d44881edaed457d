#pragma once

#include <complex>
#include <filesystem>
#include <optional>

#include <json.hpp>

#include "spinsign/hecke.hpp"
#include "spinsign/streams.hpp"
#include "spinsign/sums.hpp"

namespace spinsign {

using json = nlohmann::ordered_json;

/// Wire format of a decomposition:
/// {"prime": p, "reps": [{"family": "G2", "params": [a], "matrix": [[..]x4],
///  "d": [d1, d2]}, ...]}
json decomposition_to_json(const HeckeDecomposition& dec);
HeckeDecomposition decomposition_from_json(const json& doc);

/// Satake parameters / spin roots travel as JSON pairs [re, im]; plain
/// numbers are real; exact-rational mode uses strings "a/b".
json complex_to_json(std::complex<double> z);
std::complex<double> complex_from_json(const json& v);

SatakeParams satake_from_json(const json& triple);
/// Present only when all three entries are integers or "a/b" strings.
std::optional<SatakeParamsExact> satake_exact_from_json(const json& triple);

json eigenform_spec_to_json(const EigenformSpec& spec);
EigenformSpec eigenform_spec_from_json(const json& doc);
EigenformSpec load_eigenform_spec(const std::filesystem::path& path);

json report_to_json(const PrimeSumReport& report);

}  // namespace spinsign
