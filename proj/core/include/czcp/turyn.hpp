// Turyn composition of sequence pairs and the CZCP constructions built on it.
//
// For an inner pair (a, b) of length N and an outer pair (c, d) of length M:
//   s = c (x) (a+b)/2 - rev(d) (x) (b-a)/2
//   t = d (x) (a+b)/2 + rev(c) (x) (b-a)/2
// where (x) is the block Kronecker product with the outer sequence indexing
// blocks. Block i of s is ((c[i]+d[M-1-i])/2) a + ((c[i]-d[M-1-i])/2) b.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "czcp/sequence.hpp"
#include "czcp/verify.hpp"

namespace czcp {

enum class ConstructionFailure {
    gcp_not_complementary,
    gcp_width_zero,
    seed_odd_length,
    seed_golay_length,
    seed_not_optimal,
    seed_mid_condition_fails,
    seed_not_czcp,
    outer_not_complementary,
};

std::string_view to_string(ConstructionFailure code) noexcept;

class ConstructionError : public std::invalid_argument {
public:
    ConstructionError(ConstructionFailure code, const std::string& what)
        : std::invalid_argument(what), code_(code) {}

    ConstructionFailure code() const noexcept { return code_; }

private:
    ConstructionFailure code_;
};

// Which result backs ConstructionReport::guaranteed_width.
enum class WidthGuarantee {
    // (M/2 - 1) N + Z from a Golay inner pair and an optimal seed meeting the
    // sign condition.
    extended,
    // N * Z_B from any Golay inner pair and any CZCP outer pair.
    scaled,
    // Both pairs are GCPs, so the output is a GCP; the width bound is N * Z_B.
    golay,
};

std::string_view to_string(WidthGuarantee g) noexcept;

struct ConstructionReport {
    SequencePair inner;  // inner pair actually used (after any normalization)
    SequencePair outer;
    SequencePair output;
    std::size_t inner_width = 0;  // measured CZCP width of the inner pair
    std::size_t outer_width = 0;  // measured CZCP width of the outer pair
    std::size_t guaranteed_width = 0;
    std::size_t measured_width = 0;
    WidthGuarantee guarantee = WidthGuarantee::scaled;
    std::optional<bool> sign_condition;
    std::optional<bool> seed_mid_condition;
    bool normalized = false;
    // AACS zero everywhere except shifts 0 and MN/2 with |AACS(MN/2)| = 2N.
    std::optional<bool> spectrum_ok;
    std::optional<bool> output_is_gcp;  // set by compose_golay
    std::vector<std::string> warnings;
};

// Total on binary pairs; output length is inner.size() * outer.size().
SequencePair turyn_compose(const SequencePair& inner, const SequencePair& outer);

// (a0/b0 + 1)(c[M/2-1] - (c0/d0) d[M/2-1]) + (a0/b0 - 1)(c[M/2] + (c0/d0) d[M/2]) == 0.
// Throws ContractError if the outer pair has odd length.
bool extension_condition_holds(const SequencePair& inner, const SequencePair& outer);

// Returns (a, -b) when a0 == b0, otherwise the pair unchanged.
// Throws ConstructionError if the pair is not a GCP.
SequencePair normalize_gcp(const SequencePair& gcp);

// Width-extending construction. `gcp` must be a GCP with measured CZCP width
// Z >= 1; `seed` must be an optimal (M, M/2-1) CZCP of even non-Golay length
// satisfying the middle-shift condition. When the sign condition fails and
// `auto_normalize` is set, the inner pair is normalized to a0 == -b0 and the
// condition re-checked; if it still fails the report falls back to the N*Z_B
// guarantee and carries a warning.
ConstructionReport construct_extended(const SequencePair& gcp, const SequencePair& seed, bool auto_normalize);

// Any GCP with any CZCP of width Z_B >= 1: width at least N * Z_B.
ConstructionReport construct_scaled(const SequencePair& gcp, const SequencePair& czcp);

// Composition of two GCPs; the output is re-verified as a GCP.
ConstructionReport compose_golay(const SequencePair& inner, const SequencePair& outer);

}  // namespace czcp
