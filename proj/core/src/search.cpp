#include "czcp/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <set>
#include <thread>

#include "czcp/correlation.hpp"
#include "czcp/verify.hpp"

namespace czcp {

void validate(const SearchSpec& spec) {
    const unsigned m = spec.length;
    if (m == 0 || m % 2 != 0) {
        throw ContractError("search length must be even and positive, got " + std::to_string(m));
    }
    if (m < 4) {
        throw ContractError("search length must be at least 4");
    }
    if (spec.prune && m > max_pruned_length) {
        throw ContractError("search length " + std::to_string(m) + " exceeds " + std::to_string(max_pruned_length));
    }
    if (!spec.prune && m > max_unpruned_length) {
        throw ContractError("unpruned search is limited to length <= " + std::to_string(max_unpruned_length));
    }
    if (spec.shard_count == 0 || spec.shard_count > (1u << 20)) {
        throw ContractError("shard count must be in [1, 2^20]");
    }
    if (spec.shard_index >= spec.shard_count) {
        throw ContractError("shard index " + std::to_string(spec.shard_index) + " is not below shard count " +
                            std::to_string(spec.shard_count));
    }
    if (spec.mid_abs && *spec.mid_abs < 0) {
        throw ContractError("mid-abs filter must be non-negative");
    }
    if (m >= large_length_threshold && !spec.allow_large) {
        throw ContractError("search length " + std::to_string(m) + " requires allow_large");
    }
}

std::uint64_t candidate_count(const SearchSpec& spec) {
    return spec.prune ? std::uint64_t{1} << (spec.length + 1) : std::uint64_t{1} << (2 * spec.length);
}

IndexRange shard_range(const SearchSpec& spec) {
    validate(spec);
    const std::uint64_t total = candidate_count(spec);
    // total <= 2^41 and shard_count <= 2^20, so the products fit.
    return IndexRange{total * spec.shard_index / spec.shard_count, total * (spec.shard_index + 1) / spec.shard_count};
}

namespace {

struct WordPair {
    std::uint64_t c;
    std::uint64_t d;
};

WordPair decode_pruned(unsigned m, std::uint64_t index) {
    const unsigned h = m / 2;
    const std::uint64_t c = (index >> 2) << 1;
    const std::uint64_t head = word::low_mask(h - 1);
    const std::uint64_t tail = word::low_mask(m) & ~word::low_mask(h + 1);
    const std::uint64_t d = (c & head) | (~c & tail) | ((index & 1u) << (h - 1)) | (((index >> 1) & 1u) << h);
    return {c, d};
}

WordPair decode_full(unsigned m, std::uint64_t index) {
    return {index & word::low_mask(m), index >> m};
}

// AACS is zero at every shift except 0 and m/2: necessary for width >= m/2-1.
bool autocorrelation_zones_clear(const WordPair& w, unsigned m, const std::vector<unsigned>& order) {
    for (unsigned u : order) {
        const int mism = word::shift_mismatch(w.c, m, u) + word::shift_mismatch(w.d, m, u);
        if (mism != static_cast<int>(m - u)) {
            return false;
        }
    }
    return true;
}

int mid_aacs(const WordPair& w, unsigned m) {
    const unsigned h = m / 2;
    const int mism = word::shift_mismatch(w.c, m, h) + word::shift_mismatch(w.d, m, h);
    return 2 * (static_cast<int>(m - h) - mism);
}

// u = 1, then u = m-1, then the rest ascending, skipping m/2.
std::vector<unsigned> check_order(unsigned m) {
    std::vector<unsigned> order{1};
    if (m - 1 != 1) {
        order.push_back(m - 1);
    }
    for (unsigned u = 2; u + 1 < m; ++u) {
        if (u != m / 2) {
            order.push_back(u);
        }
    }
    return order;
}

SequencePair to_pair(const WordPair& w, unsigned m) {
    return SequencePair(unpack_word(w.c, m), unpack_word(w.d, m));
}

}  // namespace

SequencePair decode_candidate(unsigned length, std::uint64_t index) {
    if (length < 4 || length % 2 != 0 || length > max_pruned_length) {
        throw ContractError("decode_candidate: unsupported length");
    }
    if (index >= (std::uint64_t{1} << (length + 1))) {
        throw ContractError("decode_candidate: index out of range");
    }
    return to_pair(decode_pruned(length, index), length);
}

void enumerate_candidates(const SearchSpec& spec, const std::function<void(const SequencePair&)>& visit) {
    const IndexRange range = shard_range(spec);
    for (std::uint64_t i = range.begin; i < range.end; ++i) {
        const WordPair w = spec.prune ? decode_pruned(spec.length, i) : decode_full(spec.length, i);
        visit(to_pair(w, spec.length));
    }
}

namespace {

std::array<SequencePair, 4> arrangements(const SequencePair& p) {
    const auto& a = p.first();
    const auto& b = p.second();
    return {SequencePair(a, b), SequencePair(b, a), SequencePair(reverse(b), reverse(a)),
            SequencePair(reverse(a), reverse(b))};
}

template <typename Fn>
void for_each_equivalent(const SequencePair& p, Fn&& fn) {
    for (const auto& q : arrangements(p)) {
        const BinarySequence na = negate(q.first());
        const BinarySequence nb = negate(q.second());
        fn(q);
        fn(SequencePair(na, q.second()));
        fn(SequencePair(q.first(), nb));
        fn(SequencePair(na, nb));
    }
}

}  // namespace

SequencePair canonicalize(const SequencePair& p) {
    std::optional<SequencePair> best;
    for_each_equivalent(p, [&](const SequencePair& q) {
        if (!best || q < *best) {
            best = q;
        }
    });
    return *best;
}

std::vector<SequencePair> equivalence_class(const SequencePair& p) {
    std::vector<SequencePair> out;
    for_each_equivalent(p, [&](const SequencePair& q) { out.push_back(q); });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

double estimated_seconds(const SearchSpec& spec) {
    // About 4 ns per pruned candidate on one core of a current desktop.
    const double per_candidate = spec.prune ? 4e-9 : 8e-9;
    const double threads = std::max(1u, spec.threads);
    const double count = std::ldexp(1.0, static_cast<int>(spec.prune ? spec.length + 1 : 2 * spec.length));
    return count * per_candidate / threads / spec.shard_count;
}

SearchResult run_search(const SearchSpec& spec, const ProgressFn& progress) {
    const auto started = std::chrono::steady_clock::now();
    const IndexRange range = shard_range(spec);
    const unsigned m = spec.length;
    const std::vector<unsigned> order = check_order(m);
    const std::size_t target = m / 2 - 1;

    constexpr std::uint64_t chunk = std::uint64_t{1} << 16;
    constexpr std::uint64_t report_every = 1'000'000;
    const std::uint64_t total = range.end - range.begin;
    std::atomic<std::uint64_t> next{range.begin};
    std::atomic<std::uint64_t> scanned{0};
    std::mutex merge_mutex;
    std::set<SequencePair> found;

    auto accept = [&](const WordPair& w) -> std::optional<SequencePair> {
        if (!autocorrelation_zones_clear(w, m, order)) {
            return std::nullopt;
        }
        if (spec.mid_abs && std::abs(mid_aacs(w, m)) != *spec.mid_abs) {
            return std::nullopt;
        }
        // Full re-verification of the rare survivors.
        SequencePair p = to_pair(w, m);
        const std::size_t width = czcp_width(p);
        if (spec.require_optimal ? width != target : width < target) {
            return std::nullopt;
        }
        return canonicalize(p);
    };

    auto worker = [&] {
        std::set<SequencePair> local;
        while (true) {
            const std::uint64_t lo = next.fetch_add(chunk);
            if (lo >= range.end) {
                break;
            }
            const std::uint64_t hi = std::min(range.end, lo + chunk);
            for (std::uint64_t i = lo; i < hi; ++i) {
                const WordPair w = spec.prune ? decode_pruned(m, i) : decode_full(m, i);
                if (auto canon = accept(w)) {
                    local.insert(std::move(*canon));
                }
            }
            const std::uint64_t before = scanned.fetch_add(hi - lo);
            const std::uint64_t after = before + (hi - lo);
            if (progress && before / report_every != after / report_every) {
                std::lock_guard lock(merge_mutex);
                progress(after, total);
            }
        }
        std::lock_guard lock(merge_mutex);
        found.insert(local.begin(), local.end());
    };

    const unsigned n_threads = std::max(1u, spec.threads);
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t) {
            pool.emplace_back(worker);
        }
    }
    if (progress) {
        progress(scanned.load(), total);
    }

    SearchResult result;
    result.pairs.assign(found.begin(), found.end());
    result.classes = result.pairs.size();
    result.candidates_scanned = scanned.load();
    if (is_golay_number(m)) {
        result.warnings.push_back("length " + std::to_string(m) +
                                  " is a Golay number; optimal non-perfect seeds target non-Golay lengths");
    }
    result.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - started);
    return result;
}

}  // namespace czcp
