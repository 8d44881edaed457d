#include "spinsign/newform.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "spinsign/delta.hpp"

namespace spinsign {

namespace {

constexpr double kDeligneTol = 1e-9;

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Header line: level=<N>,weight=<k>[,label=<text>]
void parse_header(const std::string& line, long long line_no, NewformGL2& form) {
    std::stringstream ss(line);
    std::string item;
    bool have_level = false, have_weight = false;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected key=value in header, got '" + item + "'", line_no);
        std::string key = trim(item.substr(0, eq));
        std::string value = trim(item.substr(eq + 1));
        try {
            if (key == "level") {
                form.level = std::stoll(value);
                have_level = true;
            } else if (key == "weight") {
                form.weight = std::stoi(value);
                have_weight = true;
            } else if (key == "label") {
                form.label = value;
            } else {
                throw ParseError("unknown header key '" + key + "'", line_no);
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError("bad header value '" + value + "'", line_no);
        }
    }
    if (!have_level || !have_weight)
        throw ParseError("header must declare level=<N>,weight=<k>", line_no);
    if (form.level < 1 || form.weight < 1)
        throw ParseError("level and weight must be positive", line_no);
}

void check_ingest(NewformLoad& load) {
    const NewformGL2& f = load.form;
    for (const auto& [p, a] : f.ap) {
        if (f.ramified(p)) continue;
        double norm = a.convert_to<double>() * std::pow(static_cast<double>(p),
                                                        -(f.weight - 1) / 2.0);
        if (std::abs(norm) > 2.0 + kDeligneTol) load.warnings.push_back({p, norm});
    }
}

}  // namespace

NewformLoad parse_newform(const std::string& text, NewformFormat format,
                          const std::string& default_label) {
    std::istringstream in(text);
    std::string line;
    long long line_no = 0;
    NewformLoad load;
    load.form.label = default_label;

    bool header_seen = false;
    bool any_coeff = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::string body = trim(line);
        if (body.empty() || body[0] == '#') continue;
        if (!header_seen) {
            parse_header(body, line_no, load.form);
            header_seen = true;
            continue;
        }
        if (format == NewformFormat::Auto)
            format = body.find(',') != std::string::npos ? NewformFormat::Csv
                                                         : NewformFormat::QexpText;
        long long n;
        Int coeff;
        try {
            if (format == NewformFormat::Csv) {
                auto comma = body.find(',');
                if (comma == std::string::npos)
                    throw ParseError("expected 'p,a(p)'", line_no);
                n = std::stoll(trim(body.substr(0, comma)));
                coeff = Int(trim(body.substr(comma + 1)));
            } else {
                std::istringstream ls(body);
                std::string ns, cs;
                if (!(ls >> ns >> cs)) throw ParseError("expected 'n a(n)'", line_no);
                n = std::stoll(ns);
                coeff = Int(cs);
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError("bad coefficient line '" + body + "'", line_no);
        }
        if (n < 1) throw ParseError("coefficient index must be >= 1", line_no);
        any_coeff = true;
        if (format == NewformFormat::Csv) {
            if (!is_prime(n)) throw ParseError("csv row index must be prime", line_no);
            load.form.ap[n] = coeff;
        } else {
            load.form.an[n] = coeff;
            if (is_prime(n)) load.form.ap[n] = coeff;
        }
    }
    if (!header_seen) throw ParseError("missing header line 'level=...,weight=...'", line_no);
    if (!any_coeff) throw ParseError("no coefficient lines found", line_no);
    if (!load.form.an.empty()) {
        auto it = load.form.an.find(1);
        if (it != load.form.an.end() && it->second != 1)
            throw ParseError("a(1) must equal 1 in a normalized table");
    }
    check_ingest(load);
    return load;
}

NewformLoad load_newform(const std::filesystem::path& path, NewformFormat format) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open newform file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_newform(buf.str(), format, path.stem().string());
}

double normalized_ap(const NewformGL2& f, long long p) {
    if (f.ramified(p)) throw RamifiedPrime(p);
    auto it = f.ap.find(p);
    if (it == f.ap.end()) throw MissingCoefficient(p);
    return it->second.convert_to<double>() *
           std::pow(static_cast<double>(p), -(f.weight - 1) / 2.0);
}

NewformGL2 delta_newform(int nterms) {
    NewformGL2 f;
    f.level = 1;
    f.weight = 12;
    f.label = "delta";
    std::vector<Int> tau = delta_qexp(nterms);
    for (long long n = 1; n <= nterms; ++n) {
        f.an[n] = tau[n];
        if (is_prime(n)) f.ap[n] = tau[n];
    }
    return f;
}

}  // namespace spinsign
