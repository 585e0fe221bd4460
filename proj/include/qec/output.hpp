#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qec/int_poly.hpp"

namespace qec {

struct LambdaSets;

/// One line of CLI output. Which fields are set depends on the command:
/// `qec` fills value/alpha/source (and lambda sets for the join solver),
/// the fan-qec table fills value/alpha/source, polynomial tables fill
/// `polynomials`.
struct OutputRecord {
    struct Sets {
        std::vector<double> lambda0, lambda1, lambda2, lambda3;
        friend bool operator==(const Sets&, const Sets&) = default;
    };

    std::string kind;   // "qec", "fan-qec", "phi", "rn", "partial-cheb"
    std::string input;  // canonical graph expression, or n
    std::optional<int> n;
    std::optional<double> value;
    std::optional<double> alpha;
    std::optional<std::string> source;
    std::optional<Sets> lambda_sets;
    std::vector<std::pair<std::string, IntPoly>> polynomials;
    std::optional<double> timing_ms;

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

OutputRecord::Sets to_record_sets(const LambdaSets& s);

/// x rounded to 15 significant digits (what the writers print).
double round15(double x);
/// "%.15g"
std::string format15(double x);

/// One JSON object per record (no trailing newline).
std::string to_json(const OutputRecord& r);
/// Inverse of to_json. Throws ParseError on malformed input.
OutputRecord record_from_json(const std::string& text);

/// JSON array of records, one per line.
std::string to_json_array(const std::vector<OutputRecord>& rs);
std::vector<OutputRecord> records_from_json_array(const std::string& text);

/// CSV with a header row. The columns are the union of the fields set in
/// any record, in a fixed order; polynomials give two columns each,
/// `<name>` (canonical text) and `<name>_coeffs` (ascending JSON list).
std::string to_csv(const std::vector<OutputRecord>& rs);
std::vector<OutputRecord> records_from_csv(const std::string& text);

}  // namespace qec
