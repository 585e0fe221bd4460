#include "qec/output.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <limits>

#include <json.hpp>

#include "qec/error.hpp"
#include "qec/join_qec.hpp"

namespace qec {
namespace {

using nlohmann::json;

json coeffs_json(const IntPoly& p) {
    // int64 where it fits, decimal strings otherwise (json numbers beyond
    // 64 bits would be read back as doubles).
    static const BigInt lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
    static const BigInt hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
    json a = json::array();
    for (const BigInt& c : p.coeffs()) {
        if (c >= lo && c <= hi) a.push_back(std::stoll(c.get_str()));
        else a.push_back(c.get_str());
    }
    return a;
}

IntPoly coeffs_from_json(const json& a) {
    if (!a.is_array()) throw ParseError("polynomial coefficients must be an array");
    std::vector<BigInt> c;
    for (const json& v : a) {
        if (v.is_number_integer()) c.emplace_back(std::to_string(v.get<std::int64_t>()));
        else if (v.is_string()) c.emplace_back(v.get<std::string>());
        else throw ParseError("polynomial coefficient is not an integer");
    }
    return IntPoly(std::move(c));
}

json doubles_json(const std::vector<double>& v) {
    json a = json::array();
    for (double x : v) a.push_back(round15(x));
    return a;
}

std::vector<double> doubles_from_json(const json& a) {
    if (!a.is_array()) throw ParseError("expected an array of numbers");
    std::vector<double> v;
    for (const json& x : a) v.push_back(x.get<double>());
    return v;
}

constexpr const char* kSetNames[] = {"lambda0", "lambda1", "lambda2", "lambda3"};

std::vector<double>& set_at(OutputRecord::Sets& s, int i) {
    std::vector<double>* all[] = {&s.lambda0, &s.lambda1, &s.lambda2, &s.lambda3};
    return *all[i];
}
const std::vector<double>& set_at(const OutputRecord::Sets& s, int i) {
    return set_at(const_cast<OutputRecord::Sets&>(s), i);
}

json record_json(const OutputRecord& r) {
    json j;
    j["kind"] = r.kind;
    j["input"] = r.input;
    if (r.n) j["n"] = *r.n;
    if (r.value) j["value"] = round15(*r.value);
    if (r.alpha) j["alpha"] = round15(*r.alpha);
    if (r.source) j["source"] = *r.source;
    if (r.lambda_sets) {
        json s;
        for (int i = 0; i < 4; ++i) s[kSetNames[i]] = doubles_json(set_at(*r.lambda_sets, i));
        j["lambda_sets"] = s;
    }
    if (!r.polynomials.empty()) {
        json ps = json::array();
        for (const auto& [name, p] : r.polynomials)
            ps.push_back({{"name", name}, {"text", p.to_string()}, {"coeffs", coeffs_json(p)}});
        j["polynomials"] = ps;
    }
    if (r.timing_ms) j["timing_ms"] = round15(*r.timing_ms);
    return j;
}

OutputRecord record_from(const json& j) {
    if (!j.is_object()) throw ParseError("record must be a JSON object");
    try {
        OutputRecord r;
        r.kind = j.at("kind").get<std::string>();
        r.input = j.at("input").get<std::string>();
        if (j.contains("n")) r.n = j["n"].get<int>();
        if (j.contains("value")) r.value = j["value"].get<double>();
        if (j.contains("alpha")) r.alpha = j["alpha"].get<double>();
        if (j.contains("source")) r.source = j["source"].get<std::string>();
        if (j.contains("lambda_sets")) {
            OutputRecord::Sets s;
            for (int i = 0; i < 4; ++i) set_at(s, i) = doubles_from_json(j["lambda_sets"].at(kSetNames[i]));
            r.lambda_sets = s;
        }
        if (j.contains("polynomials"))
            for (const json& p : j["polynomials"])
                r.polynomials.emplace_back(p.at("name").get<std::string>(), coeffs_from_json(p.at("coeffs")));
        if (j.contains("timing_ms")) r.timing_ms = j["timing_ms"].get<double>();
        return r;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed record: ") + e.what());
    }
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what(), e.byte);
    }
}

// CSV --------------------------------------------------------------------

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false, any = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
            continue;
        }
        any = true;
        if (c == '"') quoted = true;
        else if (c == ',') {
            row.push_back(std::move(field));
            field.clear();
        } else if (c == '\n') {
            row.push_back(std::move(field));
            field.clear();
            rows.push_back(std::move(row));
            row.clear();
            any = false;
        } else if (c != '\r') {
            field += c;
        }
    }
    if (quoted) throw ParseError("unterminated quoted CSV field", text.size());
    if (any) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
    }
    return rows;
}

double parse_double(const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || *end != '\0') throw ParseError("not a number: '" + s + "'");
    return v;
}

}  // namespace

OutputRecord::Sets to_record_sets(const LambdaSets& s) {
    return {s.lambda0, s.lambda1, s.lambda2, s.lambda3};
}

std::string format15(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

double round15(double x) { return std::strtod(format15(x).c_str(), nullptr); }

std::string to_json(const OutputRecord& r) { return record_json(r).dump(); }

OutputRecord record_from_json(const std::string& text) { return record_from(parse_json(text)); }

std::string to_json_array(const std::vector<OutputRecord>& rs) {
    std::string out = "[";
    for (std::size_t i = 0; i < rs.size(); ++i) {
        out += i ? ",\n " : "\n ";
        out += to_json(rs[i]);
    }
    return out + "\n]";
}

std::vector<OutputRecord> records_from_json_array(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_array()) throw ParseError("expected a JSON array of records");
    std::vector<OutputRecord> out;
    for (const json& r : j) out.push_back(record_from(r));
    return out;
}

std::string to_csv(const std::vector<OutputRecord>& rs) {
    bool n = false, value = false, alpha = false, source = false, sets = false, timing = false;
    std::vector<std::string> polys;
    for (const auto& r : rs) {
        n |= r.n.has_value();
        value |= r.value.has_value();
        alpha |= r.alpha.has_value();
        source |= r.source.has_value();
        sets |= r.lambda_sets.has_value();
        timing |= r.timing_ms.has_value();
        for (const auto& [name, p] : r.polynomials)
            if (std::find(polys.begin(), polys.end(), name) == polys.end()) polys.push_back(name);
    }

    std::vector<std::string> header{"kind", "input"};
    if (n) header.push_back("n");
    if (value) header.push_back("value");
    if (alpha) header.push_back("alpha");
    if (source) header.push_back("source");
    if (sets) header.insert(header.end(), std::begin(kSetNames), std::end(kSetNames));
    for (const auto& p : polys) {
        header.push_back(p);
        header.push_back(p + "_coeffs");
    }
    if (timing) header.push_back("timing_ms");

    auto join_row = [](const std::vector<std::string>& cells) {
        std::string line;
        for (std::size_t i = 0; i < cells.size(); ++i) line += (i ? "," : "") + csv_field(cells[i]);
        return line + '\n';
    };
    auto opt = [](const std::optional<double>& d) { return d ? format15(*d) : std::string(); };

    std::string out = join_row(header);
    for (const auto& r : rs) {
        std::vector<std::string> row{r.kind, r.input};
        if (n) row.push_back(r.n ? std::to_string(*r.n) : "");
        if (value) row.push_back(opt(r.value));
        if (alpha) row.push_back(opt(r.alpha));
        if (source) row.push_back(r.source.value_or(""));
        if (sets)
            for (int i = 0; i < 4; ++i)
                row.push_back(r.lambda_sets ? doubles_json(set_at(*r.lambda_sets, i)).dump() : "");
        for (const auto& name : polys) {
            auto it = std::find_if(r.polynomials.begin(), r.polynomials.end(),
                                   [&](const auto& p) { return p.first == name; });
            row.push_back(it == r.polynomials.end() ? "" : it->second.to_string());
            row.push_back(it == r.polynomials.end() ? "" : coeffs_json(it->second).dump());
        }
        if (timing) row.push_back(opt(r.timing_ms));
        out += join_row(row);
    }
    return out;
}

std::vector<OutputRecord> records_from_csv(const std::string& text) {
    const auto rows = parse_csv(text);
    if (rows.empty()) throw ParseError("empty CSV");
    const auto& header = rows.front();
    std::vector<OutputRecord> out;
    for (std::size_t ri = 1; ri < rows.size(); ++ri) {
        const auto& row = rows[ri];
        if (row.size() != header.size())
            throw ParseError("CSV row " + std::to_string(ri) + " has " + std::to_string(row.size()) +
                             " fields, header has " + std::to_string(header.size()));
        OutputRecord r;
        for (std::size_t c = 0; c < header.size(); ++c) {
            const std::string& h = header[c];
            const std::string& v = row[c];
            if (h == "kind") r.kind = v;
            else if (h == "input") r.input = v;
            else if (v.empty()) continue;
            else if (h == "n") r.n = static_cast<int>(parse_double(v));
            else if (h == "value") r.value = parse_double(v);
            else if (h == "alpha") r.alpha = parse_double(v);
            else if (h == "source") r.source = v;
            else if (h == "timing_ms") r.timing_ms = parse_double(v);
            else if (h.rfind("lambda", 0) == 0 && h.size() == 7) {
                if (!r.lambda_sets) r.lambda_sets.emplace();
                set_at(*r.lambda_sets, h[6] - '0') = doubles_from_json(parse_json(v));
            } else if (h.size() > 7 && h.compare(h.size() - 7, 7, "_coeffs") == 0) {
                r.polynomials.emplace_back(h.substr(0, h.size() - 7), coeffs_from_json(parse_json(v)));
            }
            // the text column of a polynomial is redundant with its coefficients
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace qec
