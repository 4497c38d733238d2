#include "czcp/correlation.hpp"

#include <bit>

namespace czcp {

int accf(const BinarySequence& a, const BinarySequence& b, long long u) {
    if (a.size() != b.size()) {
        throw ContractError("accf: sequences differ in length");
    }
    const long long n = static_cast<long long>(a.size());
    if (u >= n || -u >= n) {
        return 0;
    }
    int sum = 0;
    if (u >= 0) {
        for (long long i = 0; i < n - u; ++i) {
            sum += a[i] * b[i + u];
        }
    } else {
        for (long long i = 0; i < n + u; ++i) {
            sum += a[i - u] * b[i];
        }
    }
    return sum;
}

int aacf(const BinarySequence& a, long long u) {
    return accf(a, a, u);
}

PackedSequence::PackedSequence(const BinarySequence& s) : size_(s.size()), words_((s.size() + 63) / 64, 0) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0) {
            words_[i / 64] |= std::uint64_t{1} << (i % 64);
        }
    }
}

int packed_accf(const PackedSequence& a, const PackedSequence& b, std::size_t u) {
    if (a.size() != b.size()) {
        throw ContractError("packed_accf: sequences differ in length");
    }
    const std::size_t n = a.size();
    if (u >= n) {
        return 0;
    }
    const std::size_t overlap = n - u;
    const std::uint64_t* aw = a.words().data();
    const std::uint64_t* bw = b.words().data();
    const std::size_t nwords = b.words().size();
    const std::size_t q = u / 64;
    const unsigned r = static_cast<unsigned>(u % 64);

    // word j of (b >> u), reading zeros past the end
    auto shifted = [&](std::size_t j) -> std::uint64_t {
        const std::size_t w = j + q;
        const std::uint64_t lo = w < nwords ? bw[w] : 0;
        if (r == 0) return lo;
        const std::uint64_t hi = w + 1 < nwords ? bw[w + 1] : 0;
        return (lo >> r) | (hi << (64 - r));
    };

    int mismatches = 0;
    const std::size_t full = overlap / 64;
    // Every word but possibly the last has both source words in range.
    const std::size_t safe = nwords > q + 1 ? std::min(full, nwords - q - 1) : 0;
    std::size_t j = 0;
    if (r == 0) {
        for (; j < safe; ++j) mismatches += std::popcount(aw[j] ^ bw[j + q]);
    } else {
        for (; j < safe; ++j) mismatches += std::popcount(aw[j] ^ ((bw[j + q] >> r) | (bw[j + q + 1] << (64 - r))));
    }
    for (; j < full; ++j) mismatches += std::popcount(aw[j] ^ shifted(j));
    if (const unsigned tail = static_cast<unsigned>(overlap % 64); tail != 0) {
        mismatches += std::popcount((aw[full] ^ shifted(full)) & word::low_mask(tail));
    }
    return static_cast<int>(overlap) - 2 * mismatches;
}

std::vector<int> aacs_profile(const SequencePair& p) {
    const PackedSequence a(p.first());
    const PackedSequence b(p.second());
    std::vector<int> out(p.size());
    for (std::size_t u = 0; u < out.size(); ++u) {
        out[u] = packed_accf(a, a, u) + packed_accf(b, b, u);
    }
    return out;
}

std::vector<int> accs_profile(const SequencePair& p) {
    const PackedSequence a(p.first());
    const PackedSequence b(p.second());
    std::vector<int> out(p.size());
    for (std::size_t u = 0; u < out.size(); ++u) {
        out[u] = packed_accf(a, b, u) + packed_accf(b, a, u);
    }
    return out;
}

CorrelationProfile correlation_profile(const SequencePair& p) {
    return CorrelationProfile{aacs_profile(p), accs_profile(p)};
}

std::uint64_t pack_word(const BinarySequence& s) {
    if (s.size() > 64) {
        throw ContractError("pack_word: sequence longer than 64");
    }
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0) {
            bits |= std::uint64_t{1} << i;
        }
    }
    return bits;
}

BinarySequence unpack_word(std::uint64_t bits, unsigned n) {
    std::vector<BinarySequence::value_type> out(n);
    for (unsigned i = 0; i < n; ++i) {
        out[i] = ((bits >> i) & 1u) ? -1 : 1;
    }
    return BinarySequence(std::move(out));
}

}  // namespace czcp
