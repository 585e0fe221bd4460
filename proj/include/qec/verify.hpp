#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qec/graph.hpp"

namespace qec {

/// Aggregate outcome of one invariant over many instances.
struct Check {
    std::string suite;
    std::string name;
    double tolerance = 0;
    double max_residual = 0;
    std::size_t instances = 0;
    std::vector<std::string> failures;  // one JSON object per failing instance

    bool passed() const noexcept { return failures.empty(); }
};

struct Report {
    std::vector<Check> checks;
    bool passed() const noexcept;
};

struct VerifyOptions {
    std::uint64_t seed = 0;
    std::optional<int> n_max;  // suite default when unset
};

/// "oracle-join", "fan", "chebyshev", "recurrence", "embedding", "all".
const std::vector<std::string>& suite_names();

/// Throws InvalidArgument for an unknown suite name.
Report run_suite(std::string_view suite, const VerifyOptions& opts = {});

/// One line per check plus the serialised failing instances.
std::string format_report(const Report& r);

/// Test corpus for the join solver: every path/cycle/complete graph with
/// at most max_order vertices, followed by `random_count` seeded random
/// connected graphs on 2..max_order vertices.
std::vector<Graph> join_corpus(std::uint64_t seed, int random_count = 200, int max_order = 7);

}  // namespace qec
