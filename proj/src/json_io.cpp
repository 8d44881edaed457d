#include "spinsign/json_io.hpp"

#include <fstream>

namespace spinsign {

namespace {

const char* family_tag(CosetFamily f) {
    switch (f) {
        case CosetFamily::G1: return "G1";
        case CosetFamily::G2: return "G2";
        case CosetFamily::G3: return "G3";
        case CosetFamily::G4: return "G4";
    }
    return "?";
}

CosetFamily family_from_tag(const std::string& tag) {
    if (tag == "G1") return CosetFamily::G1;
    if (tag == "G2") return CosetFamily::G2;
    if (tag == "G3") return CosetFamily::G3;
    if (tag == "G4") return CosetFamily::G4;
    throw ParseError("unknown coset family '" + tag + "'");
}

json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    try {
        return json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("bad JSON in '" + path.string() + "': " + e.what());
    }
}

}  // namespace

json decomposition_to_json(const HeckeDecomposition& dec) {
    json doc;
    doc["prime"] = dec.prime;
    json reps = json::array();
    for (const CosetRep& rep : dec.reps) {
        json r;
        r["family"] = family_tag(rep.family);
        r["params"] = rep.params;
        json rows = json::array();
        for (int i = 0; i < 4; ++i) {
            json row = json::array();
            for (int j = 0; j < 4; ++j) {
                const Rational& e = rep.matrix.entries().at(i, j);
                row.push_back(numerator(e).convert_to<long long>());
            }
            rows.push_back(std::move(row));
        }
        r["matrix"] = std::move(rows);
        r["d"] = rep.d_exponents;
        reps.push_back(std::move(r));
    }
    doc["reps"] = std::move(reps);
    return doc;
}

HeckeDecomposition decomposition_from_json(const json& doc) {
    try {
        HeckeDecomposition dec;
        dec.prime = doc.at("prime").get<long long>();
        for (const auto& r : doc.at("reps")) {
            Mat4 m;
            const auto& rows = r.at("matrix");
            if (rows.size() != 4) throw ParseError("matrix needs 4 rows");
            for (int i = 0; i < 4; ++i) {
                if (rows[i].size() != 4) throw ParseError("matrix row needs 4 entries");
                for (int j = 0; j < 4; ++j) m.at(i, j) = rows[i][j].get<long long>();
            }
            CosetRep rep{SimilitudeMatrix(std::move(m)),
                         family_from_tag(r.at("family").get<std::string>()),
                         r.at("params").get<std::vector<long long>>(),
                         {r.at("d")[0].get<int>(), r.at("d")[1].get<int>()}};
            dec.reps.push_back(std::move(rep));
        }
        return dec;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("bad decomposition JSON: " + std::string(e.what()));
    }
}

json complex_to_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

std::complex<double> complex_from_json(const json& v) {
    if (v.is_number()) return {v.get<double>(), 0.0};
    if (v.is_string()) {
        Rational q = parse_rational(v.get<std::string>());
        return {q.convert_to<double>(), 0.0};
    }
    if (v.is_array() && v.size() == 2)
        return {v[0].get<double>(), v[1].get<double>()};
    throw ParseError("complex value must be a number, \"a/b\", or [re, im]");
}

SatakeParams satake_from_json(const json& triple) {
    if (!triple.is_array() || triple.size() != 3)
        throw ParseError("satake parameters must be a 3-element array");
    return {complex_from_json(triple[0]), complex_from_json(triple[1]),
            complex_from_json(triple[2])};
}

std::optional<SatakeParamsExact> satake_exact_from_json(const json& triple) {
    if (!triple.is_array() || triple.size() != 3)
        throw ParseError("satake parameters must be a 3-element array");
    std::array<Rational, 3> vals;
    for (int i = 0; i < 3; ++i) {
        const json& v = triple[i];
        if (v.is_number_integer())
            vals[i] = Rational(v.get<long long>());
        else if (v.is_string())
            vals[i] = parse_rational(v.get<std::string>());
        else
            return std::nullopt;
    }
    return SatakeParamsExact{vals[0], vals[1], vals[2]};
}

namespace {

const char* source_type_tag(SourceType t) {
    switch (t) {
        case SourceType::Newform: return "newform";
        case SourceType::Angles: return "angles";
        case SourceType::Gl4Angles: return "gl4";
        case SourceType::RootTable: return "roots";
    }
    return "?";
}

const char* angle_kind_tag(AngleKind k) {
    switch (k) {
        case AngleKind::SatoTateSemicircle: return "semicircle";
        case AngleKind::UniformAngle: return "uniform";
        case AngleKind::FixedTable: return "fixed";
    }
    return "?";
}

AngleKind angle_kind_from_tag(const std::string& tag) {
    if (tag == "semicircle") return AngleKind::SatoTateSemicircle;
    if (tag == "uniform") return AngleKind::UniformAngle;
    if (tag == "fixed") return AngleKind::FixedTable;
    throw ParseError("unknown angle kind '" + tag + "'");
}

SourceSpec source_from_json(const json& s) {
    SourceSpec src;
    const std::string type = s.at("type").get<std::string>();
    if (type == "newform") {
        src.type = SourceType::Newform;
        src.path = s.at("path").get<std::string>();
        if (s.contains("format")) {
            const std::string fmt = s.at("format").get<std::string>();
            if (fmt == "csv")
                src.format = NewformFormat::Csv;
            else if (fmt == "qexp")
                src.format = NewformFormat::QexpText;
            else if (fmt == "auto")
                src.format = NewformFormat::Auto;
            else
                throw ParseError("unknown newform format '" + fmt + "'");
        }
    } else if (type == "roots") {
        src.type = SourceType::RootTable;
        src.path = s.at("path").get<std::string>();
    } else if (type == "gl4") {
        src.type = SourceType::Gl4Angles;
        src.model.kind = s.contains("kind")
                             ? angle_kind_from_tag(s.at("kind").get<std::string>())
                             : AngleKind::SatoTateSemicircle;
        if (s.contains("seed")) src.model.seed = s.at("seed").get<std::uint64_t>();
        if (s.contains("angle")) src.model.fixed_angle = s.at("angle").get<double>();
    } else if (type == "semicircle" || type == "uniform" || type == "fixed" ||
               type == "angles") {
        src.type = SourceType::Angles;
        src.model.kind = type == "angles"
                             ? angle_kind_from_tag(s.at("kind").get<std::string>())
                             : angle_kind_from_tag(type);
        if (s.contains("seed")) src.model.seed = s.at("seed").get<std::uint64_t>();
        if (s.contains("angle")) src.model.fixed_angle = s.at("angle").get<double>();
    } else {
        throw ParseError("unknown source type '" + type + "'");
    }
    return src;
}

json source_to_json(const SourceSpec& src) {
    json s;
    switch (src.type) {
        case SourceType::Newform:
            s["type"] = "newform";
            s["path"] = src.path.string();
            s["format"] = src.format == NewformFormat::Csv        ? "csv"
                          : src.format == NewformFormat::QexpText ? "qexp"
                                                                  : "auto";
            break;
        case SourceType::RootTable:
            s["type"] = "roots";
            s["path"] = src.path.string();
            break;
        case SourceType::Gl4Angles:
            s["type"] = "gl4";
            s["kind"] = angle_kind_tag(src.model.kind);
            s["seed"] = src.model.seed;
            if (src.model.kind == AngleKind::FixedTable) s["angle"] = src.model.fixed_angle;
            break;
        case SourceType::Angles:
            s["type"] = angle_kind_tag(src.model.kind);
            if (src.model.kind == AngleKind::FixedTable)
                s["angle"] = src.model.fixed_angle;
            else
                s["seed"] = src.model.seed;
            break;
    }
    return s;
}

}  // namespace

json eigenform_spec_to_json(const EigenformSpec& spec) {
    json doc;
    doc["label"] = spec.label;
    doc["class"] = spec.cls == EigenformClass::G ? "G" : "Y";
    doc["ramified"] = spec.ramified;
    json sources = json::array();
    for (const SourceSpec& src : spec.sources) sources.push_back(source_to_json(src));
    doc["sources"] = std::move(sources);
    return doc;
}

EigenformSpec eigenform_spec_from_json(const json& doc) {
    try {
        EigenformSpec spec;
        spec.label = doc.value("label", "");
        const std::string cls = doc.at("class").get<std::string>();
        if (cls == "G")
            spec.cls = EigenformClass::G;
        else if (cls == "Y")
            spec.cls = EigenformClass::Y;
        else
            throw ParseError("class must be \"G\" or \"Y\"");
        if (doc.contains("ramified"))
            for (const auto& p : doc.at("ramified")) spec.ramified.insert(p.get<long long>());
        for (const auto& s : doc.at("sources")) spec.sources.push_back(source_from_json(s));
        return spec;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("bad eigenform spec JSON: " + std::string(e.what()));
    }
}

EigenformSpec load_eigenform_spec(const std::filesystem::path& path) {
    return eigenform_spec_from_json(load_json_file(path));
}

json report_to_json(const PrimeSumReport& report) {
    json doc;
    doc["x"] = report.x;
    doc["excluded"] = report.excluded;
    doc["sumSquareF"] = report.sum_square_f;
    doc["sumSquareG"] = report.sum_square_g;
    doc["sumCross"] = report.sum_cross;
    doc["sMinus"] = report.s_minus;
    doc["countExceed"] = report.count_exceed;
    doc["countNegProduct"] = report.count_neg_product;
    doc["density"] = report.density;
    doc["bound"] = report.bound;
    doc["m"] = report.m;
    doc["c"] = report.c;
    doc["alpha"] = report.alpha;
    doc["ratioSquareF"] = report.ratio_square_f;
    doc["ratioSquareG"] = report.ratio_square_g;
    doc["ratioCross"] = report.ratio_cross;
    doc["proofInequalityHolds"] = report.proof_inequality_holds;
    doc["densityAtLeastBound"] = report.density_at_least_bound;
    return doc;
}

}  // namespace spinsign
