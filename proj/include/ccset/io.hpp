#pragma once

#include <cstdio>

#include <json.hpp>

#include "construct.hpp"

namespace ccset {

struct Provenance {
    std::string construction;
    nlohmann::json parameters = nlohmann::json::object();

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

// On-disk representation of a code, a code set, or a whole bundle. Codes
// are stored set-major as nested integer phase arrays; `sets` > 1 and
// `zone` are present for bundles only.
struct CodeSetDocument {
    std::string format_version = "1";
    std::string kind = "code";  // code | code_set | szccs_bundle
    std::vector<Code> codes;
    int sets = 1;
    std::optional<int> zone;
    std::optional<Provenance> provenance;
    nlohmann::json verdicts = nlohmann::json::array();

    int k() const { return static_cast<int>(codes.size()); }
    int m() const { return codes.front().rows(); }
    int n() const { return codes.front().cols(); }
    int root_order() const { return codes.front().root_order(); }

    CodeSet as_set() const { return CodeSet(codes); }

    std::vector<CodeSet> as_sets() const {
        std::vector<CodeSet> out;
        const int per_set = k() / sets;
        for (int s = 0; s < sets; ++s)
            out.emplace_back(
                std::vector<Code>(codes.begin() + static_cast<std::ptrdiff_t>(s) * per_set,
                                  codes.begin() + static_cast<std::ptrdiff_t>(s + 1) * per_set));
        return out;
    }

    friend bool operator==(const CodeSetDocument& a, const CodeSetDocument& b) {
        return a.format_version == b.format_version && a.kind == b.kind && a.codes == b.codes &&
               a.sets == b.sets && a.zone == b.zone && a.provenance == b.provenance &&
               a.verdicts == b.verdicts;
    }
};

inline CodeSetDocument document_from_code(const Code& code) {
    CodeSetDocument doc;
    doc.kind = "code";
    doc.codes = {code};
    return doc;
}

inline CodeSetDocument document_from_set(const CodeSet& set) {
    CodeSetDocument doc;
    doc.kind = set.size() == 1 ? "code" : "code_set";
    doc.codes = set.codes();
    return doc;
}

inline CodeSetDocument document_from_bundle(const SzccsBundle& bundle) {
    CodeSetDocument doc;
    doc.kind = "szccs_bundle";
    doc.codes = bundle.flattened().codes();
    doc.sets = static_cast<int>(bundle.sets.size());
    doc.zone = bundle.zone.z;
    return doc;
}

inline nlohmann::json verdict_to_json(const Verdict& verdict) {
    nlohmann::json out{{"property", property_name(verdict.property)},
                       {"passed", verdict.passed},
                       {"parameters", nlohmann::json::object()},
                       {"violations", nlohmann::json::array()}};
    for (const auto& [key, value] : verdict.params)
        out["parameters"][key] = key == "optimal" ? nlohmann::json(value != 0) : nlohmann::json(value);
    for (const Violation& v : verdict.violations) {
        nlohmann::json item{{"codes", v.codes},
                            {"shift", v.shift},
                            {"re", v.value.real()},
                            {"im", v.value.imag()},
                            {"magnitude", v.magnitude}};
        if (!v.note.empty()) item["note"] = v.note;
        out["violations"].push_back(std::move(item));
    }
    return out;
}

inline nlohmann::json document_to_json(const CodeSetDocument& doc) {
    nlohmann::json codes = nlohmann::json::array();
    for (const Code& c : doc.codes) {
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 0; i < c.rows(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int j = 0; j < c.cols(); ++j) row.push_back(c.phase(i, j));
            rows.push_back(std::move(row));
        }
        codes.push_back(std::move(rows));
    }
    nlohmann::json out{{"format_version", doc.format_version},
                       {"kind", doc.kind},
                       {"m", doc.m()},
                       {"n", doc.n()},
                       {"k", doc.k()},
                       {"root_order", doc.root_order()},
                       {"codes", std::move(codes)}};
    if (doc.kind == "szccs_bundle") {
        out["sets"] = doc.sets;
        if (doc.zone) out["zone"] = *doc.zone;
    }
    if (doc.provenance)
        out["provenance"] = {{"construction", doc.provenance->construction},
                             {"parameters", doc.provenance->parameters}};
    if (!doc.verdicts.empty()) out["verdicts"] = doc.verdicts;
    return out;
}

inline std::string emit_document(const CodeSetDocument& doc) {
    return document_to_json(doc).dump(2) + "\n";
}

inline CodeSetDocument parse_json_document(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("document is not valid JSON: ") + e.what());
    }
    try {
        CodeSetDocument doc;
        doc.format_version = j.at("format_version").get<std::string>();
        doc.kind = j.at("kind").get<std::string>();
        if (doc.kind != "code" && doc.kind != "code_set" && doc.kind != "szccs_bundle")
            throw std::invalid_argument("unknown document kind: " + doc.kind);
        const int m = j.at("m").get<int>();
        const int n = j.at("n").get<int>();
        const int k = j.at("k").get<int>();
        const int q = j.at("root_order").get<int>();
        if (k < 1) throw std::invalid_argument("document must hold at least one code");
        const auto& codes = j.at("codes");
        if (static_cast<int>(codes.size()) != k)
            throw std::invalid_argument("document code count disagrees with k");
        for (const auto& rows : codes) {
            if (static_cast<int>(rows.size()) != m)
                throw std::invalid_argument("document code row count disagrees with m");
            std::vector<int> phases;
            phases.reserve(static_cast<std::size_t>(m) * n);
            for (const auto& row : rows) {
                if (static_cast<int>(row.size()) != n)
                    throw std::invalid_argument("document code column count disagrees with n");
                for (const auto& value : row) {
                    const int phase = value.get<int>();
                    if (phase < 0 || phase >= q)
                        throw std::invalid_argument("phase value outside [0, root_order)");
                    phases.push_back(phase);
                }
            }
            doc.codes.emplace_back(m, n, PhaseAlphabet{q}, std::move(phases));
        }
        if (doc.kind == "szccs_bundle") {
            doc.sets = j.at("sets").get<int>();
            if (doc.sets < 1 || k % doc.sets != 0)
                throw std::invalid_argument("bundle set count must divide the code count");
            if (j.contains("zone")) doc.zone = j.at("zone").get<int>();
        }
        if (j.contains("provenance"))
            doc.provenance = Provenance{j.at("provenance").at("construction").get<std::string>(),
                                        j.at("provenance").value("parameters", nlohmann::json::object())};
        if (j.contains("verdicts")) doc.verdicts = j.at("verdicts");
        return doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed document: ") + e.what());
    }
}

// Sign text: one code per block of +/- rows, blocks separated by blank lines.
inline CodeSetDocument parse_sign_document(const std::string& text) {
    std::vector<std::string> blocks;
    std::string current;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string line = text.substr(pos, eol - pos);
        const bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
        if (blank) {
            if (!current.empty()) blocks.push_back(std::exchange(current, {}));
        } else {
            current += line;
            current += '\n';
        }
        pos = eol + 1;
    }
    if (!current.empty()) blocks.push_back(std::move(current));
    if (blocks.empty()) throw std::invalid_argument("sign document holds no codes");
    CodeSetDocument doc;
    for (const std::string& block : blocks) doc.codes.push_back(code_from_signs(block));
    doc.kind = doc.codes.size() == 1 ? "code" : "code_set";
    CodeSet shape_check(doc.codes);  // enforce homogeneous dimensions
    return doc;
}

inline std::string emit_sign_document(const CodeSetDocument& doc) {
    if (doc.root_order() != 2)
        throw std::invalid_argument("sign text is defined for binary codes only");
    std::string out;
    for (std::size_t i = 0; i < doc.codes.size(); ++i) {
        if (i > 0) out += '\n';
        out += sign_text(doc.codes[i]);
    }
    return out;
}

// Accepts either format; JSON documents start with '{'.
inline CodeSetDocument parse_document(const std::string& text) {
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw std::invalid_argument("document is empty");
    return text[first] == '{' ? parse_json_document(text) : parse_sign_document(text);
}

namespace detail {

// Shortest float form; integral values print without a decimal point.
inline std::string csv_number(double value) {
    if (value == 0.0) return "0";  // fold negative zero
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

}  // namespace detail

// Columns (tau1, tau2, re, im, abs), shifts as wrapped nonnegative pairs.
inline std::string pacf_csv(const PacfGrid& grid) {
    std::string out = "tau1,tau2,re,im,abs\n";
    for (int t1 = 0; t1 < grid.rows; ++t1)
        for (int t2 = 0; t2 < grid.cols; ++t2) {
            const std::complex<double>& v = grid.at(t1, t2);
            out += std::to_string(t1) + ',' + std::to_string(t2) + ',' + detail::csv_number(v.real()) +
                   ',' + detail::csv_number(v.imag()) + ',' + detail::csv_number(std::abs(v)) + '\n';
        }
    return out;
}

// Columns (tau, re, im, abs), signed shifts from -(N-1) to N-1.
inline std::string accf_csv(const AccfVector& vec) {
    std::string out = "tau,re,im,abs\n";
    for (int tau = -(vec.width - 1); tau <= vec.width - 1; ++tau) {
        const std::complex<double>& v = vec.at(tau);
        out += std::to_string(tau) + ',' + detail::csv_number(v.real()) + ',' +
               detail::csv_number(v.imag()) + ',' + detail::csv_number(std::abs(v)) + '\n';
    }
    return out;
}

}  // namespace ccset
