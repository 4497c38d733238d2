#include <doctest.h>

#include <random>

#include "czcp/catalog.hpp"
#include "czcp/correlation.hpp"
#include "czcp/search.hpp"
#include "czcp/verify.hpp"
#include "oracle.hpp"

using namespace czcp;

namespace {

const SequencePair k6 = parse_pair("+----+", "+-+++-");
const SequencePair gcp10 = parse_pair("--+-+-++--", "++-+++++--");

// Random pair with the half structure forced at the given depth.
SequencePair structured_pair(std::mt19937_64& rng, std::size_t n, std::size_t depth) {
    auto a = oracle::random_seq(rng, n);
    auto b = oracle::random_seq(rng, n);
    const int k = a[0] * b[0];
    for (std::size_t i = 0; i < depth; ++i) {
        a[i] = k * b[i];
        a[n - 1 - i] = -k * b[n - 1 - i];
    }
    return SequencePair(oracle::to_sequence(a), oracle::to_sequence(b));
}

}  // namespace

TEST_CASE("zcp_width") {
    CHECK(zcp_width(gcp10) == 10);
    CHECK(zcp_width(parse_pair("+", "+")) == 1);
    CHECK(zcp_width(k6) == 3);

    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 1 + rng() % 24;
        const auto a = oracle::random_seq(rng, n);
        const auto b = oracle::random_seq(rng, n);
        CHECK(zcp_width(SequencePair(oracle::to_sequence(a), oracle::to_sequence(b))) == oracle::zcp_width(a, b));
    }
}

TEST_CASE("czcp_width on reference pairs") {
    CHECK(czcp_width(k6) == 2);
    CHECK(czcp_width(seed("K28").pair) == 13);
    CHECK(czcp_width(seed("EX60").pair) >= 24);
    CHECK(czcp_width(parse_pair("+-", "--")) == 1);
}

TEST_CASE("czcp_width equals the brute-force maximum over every length-6 and length-8 pair") {
    for (unsigned n : {6u, 8u}) {
        const std::uint64_t total = std::uint64_t{1} << (2 * n);
        for (std::uint64_t x = 0; x < total; ++x) {
            const auto a = unpack_word(x & word::low_mask(n), n);
            const auto b = unpack_word(x >> n, n);
            const std::size_t w = czcp_width(SequencePair(a, b));
            REQUIRE(w == oracle::czcp_width(oracle::ints(a), oracle::ints(b)));
        }
    }
}

TEST_CASE("czcp_width monotone and bounded on structured random pairs") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t n = 2 * (1 + rng() % 12);
        const auto p = structured_pair(rng, n, rng() % (n / 2 + 1));
        const auto a = oracle::ints(p.first());
        const auto b = oracle::ints(p.second());
        const std::size_t w = czcp_width(p);
        CHECK(w <= n / 2);
        CHECK(w == oracle::czcp_width(a, b));
        for (std::size_t z = 1; z <= w; ++z) {
            CHECK(oracle::is_czcp(a, b, z));
        }
    }
}

TEST_CASE("czc_ratio") {
    CHECK(czc_ratio(seed("K12").pair).ratio == Rational(1, 1));
    CHECK(czc_ratio(seed("K12").pair).z_max == 5);
    const auto ex = czc_ratio(seed("EX60").pair);
    CHECK(ex.ratio == Rational(24, 29));
    CHECK(ex.z_max == 29);
    const auto g4 = czc_ratio(golay_pair(4));
    CHECK(g4.ratio == Rational(1, 1));
    CHECK(g4.z_max == 2);
    CHECK_THROWS_AS(czc_ratio(parse_pair("+-+", "++-")), ContractError);
    CHECK(Rational(5, 5) == Rational(1, 1));
    CHECK(Rational(24, 29).str() == "24/29");
}

TEST_CASE("golay_factorization") {
    CHECK(golay_factorization(26) == GolayFactorization{0, 0, 1});
    CHECK(golay_factorization(20) == GolayFactorization{1, 1, 0});
    CHECK_FALSE(golay_factorization(6).has_value());
    CHECK(golay_factorization(1) == GolayFactorization{0, 0, 0});
    CHECK_FALSE(golay_factorization(0).has_value());

    // Enumerate every triple with value <= 2000 and compare both ways.
    std::vector<std::optional<GolayFactorization>> table(2001);
    for (unsigned x = 0; x <= 11; ++x)
        for (unsigned y = 0; y <= 4; ++y)
            for (unsigned z = 0; z <= 3; ++z) {
                const GolayFactorization f{x, y, z};
                if (f.value() <= 2000) table[f.value()] = f;
            }
    for (std::uint64_t n = 1; n <= 2000; ++n) {
        CHECK(golay_factorization(n) == table[n]);
        if (auto f = golay_factorization(n)) CHECK(f->value() == n);
    }
}

TEST_CASE("half_structure_holds") {
    CHECK(half_structure_holds(seed("K24").pair, 11));
    CHECK(half_structure_holds(parse_pair("+-+", "---"), 0));
    CHECK_FALSE(half_structure_holds(parse_pair("++++", "+-++"), 1));
    CHECK_THROWS_AS(half_structure_holds(k6, 4), ContractError);
}

TEST_CASE("width-Z pairs carry the half structure at depth Z") {
    for (const auto& e : catalog()) {
        CHECK(half_structure_holds(e.pair, czcp_width(e.pair)));
    }
    SearchSpec spec;
    spec.length = 10;
    spec.prune = false;
    for (const auto& p : run_search(spec).pairs) {
        CHECK(half_structure_holds(p, czcp_width(p)));
    }
}

TEST_CASE("half structure alone zeroes the cross-correlation tail") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 2 + rng() % 31;
        const std::size_t depth = rng() % (n / 2 + 1);
        const auto p = structured_pair(rng, n, depth);
        const auto a = oracle::ints(p.first());
        const auto b = oracle::ints(p.second());
        for (std::size_t u = n - depth; u < n; ++u) {
            REQUIRE(oracle::accs(a, b, static_cast<long long>(u)) == 0);
            REQUIRE(oracle::accs(a, b, -static_cast<long long>(u)) == 0);
        }
    }
}

TEST_CASE("seed_mid_condition_holds") {
    CHECK(seed_mid_condition_holds(k6));
    CHECK(seed_mid_condition_holds(seed("K28").pair));
    CHECK(seed_mid_condition_holds(parse_pair("+-", "--")));
    CHECK_THROWS_AS(seed_mid_condition_holds(parse_pair("+-+", "---")), ContractError);
}

TEST_CASE("optimal seeds meeting the middle condition have |AACS(M/2)| = 2") {
    for (auto id : seed_ids()) {
        const auto& p = seed(id).pair;
        const auto aacs = aacs_profile(p);
        const std::size_t m = p.size();
        REQUIRE(seed_mid_condition_holds(p));
        REQUIRE(czcp_width(p) == m / 2 - 1);
        for (std::size_t u = 1; u < m; ++u) {
            CHECK(std::abs(aacs[u]) == (u == m / 2 ? 2 : 0));
        }
    }
}

TEST_CASE("classify") {
    const auto v48 = classify(seed("K48").pair);
    CHECK(v48.length == 48);
    CHECK(v48.czcp_width == 23);
    CHECK(v48.is_optimal);
    CHECK(v48.mid_aacs == 4);
    CHECK_FALSE(v48.golay.has_value());

    const auto ex = classify(seed("EX60").pair);
    CHECK(ex.length == 60);
    CHECK(ex.czcp_width >= 24);
    CHECK(ex.mid_aacs == -20);
    CHECK(ex.czc_ratio == Rational(24, 29));

    const auto kernel = classify(parse_pair("+-", "--"));
    CHECK(kernel.is_gcp);
    CHECK(kernel.is_perfect);
    CHECK(kernel.is_optimal);
    CHECK(kernel.golay == GolayFactorization{1, 0, 0});

    const auto odd = classify(parse_pair("++-", "+-+"));
    CHECK_FALSE(odd.czc_ratio.has_value());
    CHECK_FALSE(odd.mid_aacs.has_value());
}

TEST_CASE("verdict invariants on random pairs") {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 3000; ++trial) {
        const std::size_t n = 1 + rng() % 20;
        const auto p = trial % 2 ? oracle::random_pair(rng, n) : structured_pair(rng, n, rng() % (n / 2 + 1));
        const auto v = classify(p);
        CHECK(v.czcp_width <= n / 2);
        CHECK(v.is_gcp == (v.zcp_width == n));
        if (v.is_perfect) CHECK(v.is_gcp);
        if (v.czc_ratio) {
            CHECK(*v.czc_ratio <= Rational(1, 1));
            CHECK(v.is_optimal == (v.czcp_width >= 1 && *v.czc_ratio == Rational(1, 1)));
        }
    }
}

TEST_CASE("czcp_width is invariant under equivalence operations") {
    std::mt19937_64 rng(25);
    std::vector<SequencePair> pairs;
    for (const auto& e : catalog()) pairs.push_back(e.pair);
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = 2 * (1 + rng() % 10);
        pairs.push_back(structured_pair(rng, n, rng() % (n / 2 + 1)));
    }
    for (const auto& p : pairs) {
        const std::size_t w = czcp_width(p);
        const auto& a = p.first();
        const auto& b = p.second();
        for (int s1 : {1, -1}) {
            for (int s2 : {1, -1}) {
                auto sign = [](const BinarySequence& x, int s) { return s > 0 ? x : negate(x); };
                CHECK(czcp_width(SequencePair(sign(a, s1), sign(b, s2))) == w);
                CHECK(czcp_width(SequencePair(sign(b, s1), sign(a, s2))) == w);
                CHECK(czcp_width(SequencePair(sign(reverse(b), s1), sign(reverse(a), s2))) == w);
            }
        }
    }
}
