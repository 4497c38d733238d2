// Embedded reference pairs (Golay kernels, optimal seeds, their doubled
// constructions, the length-60 worked example) and GCP generation for any
// Golay-number length.

#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "czcp/sequence.hpp"
#include "czcp/verify.hpp"

namespace czcp {

class UnknownIdError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Fields an entry is known to have. Unset fields are not checked.
struct ClaimedVerdict {
    std::optional<std::size_t> czcp_width;
    std::optional<bool> is_gcp;
    std::optional<bool> is_perfect;
    std::optional<bool> is_optimal;
    std::optional<int> mid_aacs;
    std::optional<std::vector<int>> aacs;
    std::optional<std::vector<int>> accs;
};

struct CatalogEntry {
    std::string id;
    SequencePair pair;
    ClaimedVerdict claimed;
    std::string source;
};

// Expands run notation such as "12,0_2,-2,0_2" (0_k = k zeros).
std::vector<int> expand_profile(std::string_view text);

// Differences between an entry's claims and its recomputed classification;
// empty when everything matches.
std::vector<std::string> validate_entry(const CatalogEntry& entry);

// All embedded entries, validated once on first access (std::logic_error if
// any claim does not hold).
const std::vector<CatalogEntry>& catalog();

// Exact id or alias lookup ("K48" -> "K48d", "K56" -> "K56d").
const CatalogEntry& seed(std::string_view id);
bool has_entry(std::string_view id);

// Catalog id, alias, or "GCP<n>" for any Golay number n.
SequencePair resolve_pair(std::string_view id);

// Ids of the optimal seeds used as outer pairs of the extension.
std::span<const std::string_view> seed_ids();

// Kernel lengths 2, 10 and 26 in composition order for n: tens first, then
// twenty-sixes, then twos, so the outermost kernel has the best width ratio.
std::vector<unsigned> default_kernel_order(std::uint64_t n);

// GCP of length n built by folding turyn_compose(accumulator, kernel) over
// `order` (default_kernel_order(n) when empty). Throws ContractError when n
// is not a Golay number or `order` does not multiply to n.
SequencePair golay_pair(std::uint64_t n, std::span<const unsigned> order = {});

struct GolayCzcp {
    SequencePair pair;
    std::size_t measured_width;
    // Width the construction family is known to reach, when one applies:
    // N/2 with a factor 2, 6N/13 with a factor 26, 2N/5 for pure powers of 10.
    std::optional<std::size_t> expected_width;
    bool shortfall;  // measured below expected
};

GolayCzcp czcp_gcp(std::uint64_t n, std::span<const unsigned> order = {}, bool normalize = false);

}  // namespace czcp
