// Regenerates the reference tables and the length-60 worked example from
// first principles and diffs them against the embedded expectations.
#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "czcp/sequence.hpp"

namespace czcp::cli {

struct Check {
    explicit Check(std::string n) : name(std::move(n)) {}

    std::string name;
    bool passed = true;
    std::vector<std::string> diffs;  // field-level, empty when passed
    std::string note;
};

struct ReproduceOptions {
    std::vector<unsigned> search_lengths{6, 12};  // table1 seed searches
    bool allow_large = false;
    unsigned threads = 1;
};

struct ReproduceReport {
    std::string target;
    std::vector<Check> checks;
    std::vector<std::pair<std::string, SequencePair>> pairs;  // regenerated pairs worth showing

    bool passed() const;
};

std::span<const std::string_view> reproduce_targets();

// Throws std::invalid_argument for an unknown target.
ReproduceReport reproduce(std::string_view target, const ReproduceOptions& options = {});

}  // namespace czcp::cli
