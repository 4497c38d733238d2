// Exhaustive search for optimal (M, M/2-1) CZCPs.
//
// Candidates are restricted to the layout every such pair must have up to
// equivalence: c[0] = d[0] = +1, d[i] = c[i] for i <= M/2-2, d[i] = -c[i] for
// i >= M/2+1, and free signs at d[M/2-1], d[M/2]. That layout already zeroes
// the cross-correlation tail, so only the autocorrelation zones are scanned.
//
// Candidate index layout (M+1 bits): bit 0 -> d[M/2-1], bit 1 -> d[M/2],
// bits 2.. -> c[1..M-1]. A set bit means -1. Shards are contiguous index
// ranges.

#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "czcp/sequence.hpp"

namespace czcp {

struct SearchSpec {
    unsigned length = 0;            // M, even
    std::optional<int> mid_abs;     // keep only |AACS(M/2)| == mid_abs
    bool require_optimal = true;    // width exactly M/2-1; otherwise >= M/2-1
    unsigned shard_index = 0;
    unsigned shard_count = 1;
    bool prune = true;              // false scans all 2^(2M) pairs (M <= 12)
    unsigned threads = 1;
    bool allow_large = false;       // required for M >= large_length_threshold
};

inline constexpr unsigned large_length_threshold = 24;
inline constexpr unsigned max_pruned_length = 40;
inline constexpr unsigned max_unpruned_length = 12;

struct SearchResult {
    std::vector<SequencePair> pairs;  // sorted canonical representatives
    std::size_t classes = 0;
    std::uint64_t candidates_scanned = 0;
    std::chrono::nanoseconds elapsed{0};
    std::vector<std::string> warnings;
};

// Throws ContractError describing the first invalid field.
void validate(const SearchSpec& spec);

std::uint64_t candidate_count(const SearchSpec& spec);

struct IndexRange {
    std::uint64_t begin;
    std::uint64_t end;
};
IndexRange shard_range(const SearchSpec& spec);

// Pair encoded by a pruned-space candidate index.
SequencePair decode_candidate(unsigned length, std::uint64_t index);

// Calls `visit` for every candidate of the spec's shard, in index order.
void enumerate_candidates(const SearchSpec& spec, const std::function<void(const SequencePair&)>& visit);

// Smallest member (first, then second, '+' < '-') of the closure of p under
// sign changes, interchange and reversed interchange.
SequencePair canonicalize(const SequencePair& p);

// Distinct members of that closure, sorted.
std::vector<SequencePair> equivalence_class(const SequencePair& p);

// (scanned, total) for the spec's shard; invoked each time another 10^6
// candidates have been scanned, and once at the end.
using ProgressFn = std::function<void(std::uint64_t, std::uint64_t)>;

SearchResult run_search(const SearchSpec& spec, const ProgressFn& progress = {});

// Rough wall-clock estimate, used for refusal messages.
double estimated_seconds(const SearchSpec& spec);

}  // namespace czcp
