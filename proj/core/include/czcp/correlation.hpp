// Exact aperiodic correlation of binary sequences.
//
// Shifts follow the usual aperiodic convention:
//   rho(a, b; u) = sum_{i=0}^{N-1-u} a[i] b[i+u]      0 <= u <= N-1
//                = sum_{i=0}^{N-1+u} a[i-u] b[i]      1-N <= u < 0
//                = 0                                  |u| >= N
// Profiles report shifts u = 0..N-1 only; negative shifts follow from
// rho(b, a; u) == rho(a, b; -u).

#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "czcp/sequence.hpp"

namespace czcp {

// Throws ContractError on length mismatch.
int accf(const BinarySequence& a, const BinarySequence& b, long long u);
int aacf(const BinarySequence& a, long long u);

// rho(first; u) + rho(second; u) for u = 0..N-1.
std::vector<int> aacs_profile(const SequencePair& p);
// rho(first, second; u) + rho(second, first; u) for u = 0..N-1.
std::vector<int> accs_profile(const SequencePair& p);

struct CorrelationProfile {
    std::vector<int> aacs;
    std::vector<int> accs;

    bool operator==(const CorrelationProfile&) const = default;
};

CorrelationProfile correlation_profile(const SequencePair& p);

// One bit per element, +1 -> 0 and -1 -> 1, element i at bit (i % 64) of
// word (i / 64). Bits past size() are zero.
class PackedSequence {
public:
    explicit PackedSequence(const BinarySequence& s);

    std::size_t size() const noexcept { return size_; }
    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

private:
    std::size_t size_;
    std::vector<std::uint64_t> words_;
};

// Bit-parallel rho(a, b; u) for 0 <= u: overlap - 2 * popcount(a ^ (b >> u))
// over the overlapping window. Lengths must match.
int packed_accf(const PackedSequence& a, const PackedSequence& b, std::size_t u);

// Single-word kernels for N <= 64, used by the search inner loop.
namespace word {

constexpr std::uint64_t low_mask(unsigned n) noexcept {
    return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

// rho(a, b; u) for sequences of length n packed into single words.
constexpr int accf(std::uint64_t a, std::uint64_t b, unsigned n, unsigned u) noexcept {
    if (u >= n) {
        return 0;
    }
    const unsigned overlap = n - u;
    const std::uint64_t diff = (a ^ (b >> u)) & low_mask(overlap);
    return static_cast<int>(overlap) - 2 * std::popcount(diff);
}

constexpr int aacf(std::uint64_t a, unsigned n, unsigned u) noexcept {
    return accf(a, a, n, u);
}

// Number of disagreeing positions between a and a shifted by u; the pair's
// AACS at u is 2 * ((n - u) - (mismatch(c) + mismatch(d))).
constexpr int shift_mismatch(std::uint64_t a, unsigned n, unsigned u) noexcept {
    return std::popcount((a ^ (a >> u)) & low_mask(n - u));
}

}  // namespace word

std::uint64_t pack_word(const BinarySequence& s);
BinarySequence unpack_word(std::uint64_t bits, unsigned n);

}  // namespace czcp
