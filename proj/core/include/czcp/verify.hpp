// Classification of sequence pairs: ZCP/CZCP zone widths, Golay/perfect/
// optimal status and the exact CZC ratio.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "czcp/correlation.hpp"
#include "czcp/sequence.hpp"

namespace czcp {

// Exact non-negative rational, always stored in lowest terms.
class Rational {
public:
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    bool operator==(const Rational&) const = default;
    std::strong_ordering operator<=>(const Rational& other) const noexcept;

    std::string str() const;

private:
    std::int64_t num_;
    std::int64_t den_;
};

// n = 2^alpha * 10^beta * 26^gamma.
struct GolayFactorization {
    unsigned alpha = 0;
    unsigned beta = 0;
    unsigned gamma = 0;

    std::uint64_t value() const;
    bool operator==(const GolayFactorization&) const = default;
};

// Exponents are unique because 2, 5 and 13 are distinct primes.
std::optional<GolayFactorization> golay_factorization(std::uint64_t n);
bool is_golay_number(std::uint64_t n);

// Largest Z in [0, N] with AACS zero for 0 < u < Z; N for a GCP.
std::size_t zcp_width(const SequencePair& p);
std::size_t zcp_width(const CorrelationProfile& profile);

// Largest Z in [0, N/2] such that the AACS vanishes on {1..Z} and
// {N-Z..N-1} and the ACCS vanishes on {N-Z..N-1}. 0 means "not a CZCP".
std::size_t czcp_width(const SequencePair& p);
std::size_t czcp_width(const CorrelationProfile& profile);

bool is_gcp(const SequencePair& p);

struct CzcRatio {
    Rational ratio;
    std::size_t z_max;
};

// Z / Z_max with Z_max = N/2 for perfect pairs and N/2 - 1 otherwise.
// Throws ContractError for odd N.
CzcRatio czc_ratio(const SequencePair& p);
CzcRatio czc_ratio(std::size_t length, std::size_t czcp_width);

// True iff first[i] == k * second[i] and first[N-1-i] == -k * second[N-1-i]
// for all i < depth, with k = first[0] * second[0]. This layout is necessary
// for a CZCP of width `depth` and by itself forces the ACCS to vanish on the
// tail zone {N-depth..N-1}.
bool half_structure_holds(const SequencePair& p, std::size_t depth);

// For even N: (c[N/2-1] - k d[N/2-1]) * (c[N/2] + k d[N/2]) == 0 with
// k = d[0] / c[0]. On an optimal non-Golay (N, N/2-1) pair this pins the
// middle AACS to +-2. Throws ContractError for odd N.
bool seed_mid_condition_holds(const SequencePair& p);

struct PairVerdict {
    std::size_t length = 0;
    std::size_t zcp_width = 0;
    std::size_t czcp_width = 0;
    bool is_gcp = false;
    bool is_perfect = false;
    bool is_optimal = false;
    // Absent for odd N.
    std::optional<Rational> czc_ratio;
    std::optional<std::size_t> z_max;
    std::optional<int> mid_aacs;
    std::optional<bool> seed_mid_condition;
    std::optional<GolayFactorization> golay;
};

PairVerdict classify(const SequencePair& p);
PairVerdict classify(const SequencePair& p, const CorrelationProfile& profile);

}  // namespace czcp
