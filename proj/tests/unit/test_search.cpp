#include <doctest.h>

#include <algorithm>
#include <set>

#include "czcp/catalog.hpp"
#include "czcp/correlation.hpp"
#include "czcp/search.hpp"
#include "oracle.hpp"

using namespace czcp;

namespace {

bool contains(const std::vector<SequencePair>& pairs, const SequencePair& p) {
    return std::binary_search(pairs.begin(), pairs.end(), p);
}

// Canonical classes of all 2^(2M) pairs with width exactly M/2-1 and the
// given |AACS(M/2)|, found by the test oracle alone.
std::set<SequencePair> brute_force_classes(unsigned m, int mid_abs) {
    std::set<SequencePair> out;
    const std::uint64_t total = std::uint64_t{1} << (2 * m);
    for (std::uint64_t x = 0; x < total; ++x) {
        const auto a = unpack_word(x & word::low_mask(m), m);
        const auto b = unpack_word(x >> m, m);
        const auto ai = oracle::ints(a), bi = oracle::ints(b);
        if (std::abs(oracle::aacs(ai, bi, m / 2)) != mid_abs) continue;
        if (oracle::czcp_width(ai, bi) != m / 2 - 1) continue;
        out.insert(canonicalize(SequencePair(a, b)));
    }
    return out;
}

}  // namespace

TEST_CASE("canonicalize") {
    const auto& k6 = seed("K6").pair;
    const auto c = canonicalize(k6);
    CHECK(canonicalize(c) == c);
    CHECK(canonicalize(SequencePair(negate(k6.first()), k6.second())) == c);

    const auto cls = equivalence_class(k6);
    CHECK(cls.size() == 16);
    for (const auto& q : cls) {
        CHECK(canonicalize(q) == c);
        CHECK(czcp_width(q) == 2);
        CHECK(c <= q);
    }
}

TEST_CASE("enumerate_candidates") {
    SearchSpec spec;
    spec.length = 6;
    CHECK(candidate_count(spec) == 128);
    std::size_t count = 0;
    std::set<SequencePair> seen;
    enumerate_candidates(spec, [&](const SequencePair& p) {
        ++count;
        seen.insert(p);
        CHECK(p.first()[0] == 1);
        CHECK(p.second()[0] == 1);
        CHECK(half_structure_holds(p, 2));
        const auto a = oracle::ints(p.first()), b = oracle::ints(p.second());
        for (long long u = 4; u < 6; ++u) CHECK(oracle::accs(a, b, u) == 0);
    });
    CHECK(count == 128);
    CHECK(seen.size() == 128);
    CHECK(decode_candidate(6, 0) == parse_pair("++++++", "++++--"));
}

TEST_CASE("pruned space covers every optimal length-6 pair up to equivalence") {
    SearchSpec spec;
    spec.length = 6;
    std::set<SequencePair> reachable;
    enumerate_candidates(spec, [&](const SequencePair& p) { reachable.insert(canonicalize(p)); });
    const std::uint64_t total = std::uint64_t{1} << 12;
    for (std::uint64_t x = 0; x < total; ++x) {
        const SequencePair p(unpack_word(x & 63, 6), unpack_word(x >> 6, 6));
        if (oracle::czcp_width(oracle::ints(p.first()), oracle::ints(p.second())) == 2) {
            CHECK(reachable.count(canonicalize(p)) == 1);
        }
    }
}

TEST_CASE("search at M = 6 finds the seed and matches brute force") {
    SearchSpec spec;
    spec.length = 6;
    spec.mid_abs = 2;
    const auto r = run_search(spec);
    CHECK(r.candidates_scanned == 128);
    CHECK(contains(r.pairs, canonicalize(seed("K6").pair)));
    CHECK(r.classes == r.pairs.size());
    CHECK(std::is_sorted(r.pairs.begin(), r.pairs.end()));

    const auto oracle_classes = brute_force_classes(6, 2);
    CHECK(std::set<SequencePair>(r.pairs.begin(), r.pairs.end()) == oracle_classes);

    SearchSpec full = spec;
    full.prune = false;
    const auto rf = run_search(full);
    CHECK(rf.candidates_scanned == 4096);
    CHECK(rf.pairs == r.pairs);
}

TEST_CASE("search at M = 8 matches brute force") {
    for (int mid : {0, 2, 4}) {
        SearchSpec spec;
        spec.length = 8;
        spec.mid_abs = mid;
        const auto r = run_search(spec);
        CHECK(std::set<SequencePair>(r.pairs.begin(), r.pairs.end()) == brute_force_classes(8, mid));
        CHECK_FALSE(r.warnings.empty());  // 8 is a Golay number
    }
}

TEST_CASE("search at M = 12 finds the seed") {
    SearchSpec spec;
    spec.length = 12;
    spec.mid_abs = 2;
    const auto r = run_search(spec);
    CHECK(contains(r.pairs, canonicalize(seed("K12").pair)));
    for (const auto& p : r.pairs) {
        const auto aacs = aacs_profile(p);
        CHECK(czcp_width(p) == 5);
        for (std::size_t u = 1; u < 12; ++u) CHECK(std::abs(aacs[u]) == (u == 6 ? 2 : 0));
    }
}

TEST_CASE("without the mid filter the search returns every optimal class") {
    SearchSpec spec;
    spec.length = 12;
    const auto all = run_search(spec);
    spec.mid_abs = 2;
    const auto filtered = run_search(spec);
    CHECK(all.classes >= filtered.classes);
    for (const auto& p : filtered.pairs) CHECK(contains(all.pairs, p));
    // The doubled length-6 seed is optimal with |AACS(6)| = 4.
    CHECK(contains(all.pairs, canonicalize(seed("K12d").pair)));
    CHECK_FALSE(contains(filtered.pairs, canonicalize(seed("K12d").pair)));
}

TEST_CASE("shard union equals single-shard output") {
    for (unsigned m : {6u, 12u}) {
        SearchSpec base;
        base.length = m;
        base.mid_abs = 2;
        const auto single = run_search(base);
        for (unsigned shards : {1u, 2u, 4u, 8u}) {
            std::set<SequencePair> merged;
            std::uint64_t scanned = 0;
            for (unsigned i = 0; i < shards; ++i) {
                SearchSpec s = base;
                s.shard_count = shards;
                s.shard_index = i;
                const auto r = run_search(s);
                merged.insert(r.pairs.begin(), r.pairs.end());
                scanned += r.candidates_scanned;
            }
            CHECK(std::vector<SequencePair>(merged.begin(), merged.end()) == single.pairs);
            CHECK(scanned == single.candidates_scanned);
        }
        SearchSpec threaded = base;
        threaded.threads = 4;
        CHECK(run_search(threaded).pairs == single.pairs);
    }
}

TEST_CASE("search spec validation") {
    SearchSpec spec;
    spec.length = 7;
    CHECK_THROWS_AS(run_search(spec), ContractError);
    spec.length = 24;
    CHECK_THROWS_AS(run_search(spec), ContractError);
    spec.length = 6;
    spec.shard_count = 2;
    spec.shard_index = 2;
    CHECK_THROWS_AS(run_search(spec), ContractError);
    spec.shard_index = 0;
    spec.prune = false;
    spec.length = 14;
    CHECK_THROWS_AS(run_search(spec), ContractError);
}

TEST_CASE("progress callback reports the final count") {
    SearchSpec spec;
    spec.length = 18;
    std::uint64_t last = 0, calls = 0;
    const auto r = run_search(spec, [&](std::uint64_t scanned, std::uint64_t total) {
        CHECK(total == candidate_count(spec));
        CHECK(scanned >= last);
        last = scanned;
        ++calls;
    });
    CHECK(last == r.candidates_scanned);
    CHECK(calls >= 1 + r.candidates_scanned / 1'000'000);
}
