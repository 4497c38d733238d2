#include "czcp/turyn.hpp"

#include <cstdlib>

#include "czcp/correlation.hpp"

namespace czcp {

std::string_view to_string(ConstructionFailure code) noexcept {
    switch (code) {
        case ConstructionFailure::gcp_not_complementary: return "gcp_not_complementary";
        case ConstructionFailure::gcp_width_zero: return "gcp_width_zero";
        case ConstructionFailure::seed_odd_length: return "seed_odd_length";
        case ConstructionFailure::seed_golay_length: return "seed_golay_length";
        case ConstructionFailure::seed_not_optimal: return "seed_not_optimal";
        case ConstructionFailure::seed_mid_condition_fails: return "seed_mid_condition_fails";
        case ConstructionFailure::seed_not_czcp: return "seed_not_czcp";
        case ConstructionFailure::outer_not_complementary: return "outer_not_complementary";
    }
    return "unknown";
}

std::string_view to_string(WidthGuarantee g) noexcept {
    switch (g) {
        case WidthGuarantee::extended: return "extended";
        case WidthGuarantee::scaled: return "scaled";
        case WidthGuarantee::golay: return "golay";
    }
    return "unknown";
}

namespace {

BinarySequence to_binary(const std::vector<int>& v) {
    std::vector<BinarySequence::value_type> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        // (a+b)/2 and (b-a)/2 have disjoint supports, so exactly one term is nonzero.
        if (v[i] != 1 && v[i] != -1) {
            throw std::logic_error("turyn_compose produced a non-binary entry");
        }
        out[i] = static_cast<BinarySequence::value_type>(v[i]);
    }
    return BinarySequence(std::move(out));
}

}  // namespace

SequencePair turyn_compose(const SequencePair& inner, const SequencePair& outer) {
    const auto& a = inner.first();
    const auto& b = inner.second();
    const auto& c = outer.first();
    const auto& d = outer.second();

    std::vector<int> half_sum(a.size());
    std::vector<int> half_diff(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        half_sum[i] = (a[i] + b[i]) / 2;
        half_diff[i] = (b[i] - a[i]) / 2;
    }

    const std::vector<int> c_sum = kronecker(c, half_sum);
    const std::vector<int> d_sum = kronecker(d, half_sum);
    const std::vector<int> rd_diff = kronecker(reverse(d), half_diff);
    const std::vector<int> rc_diff = kronecker(reverse(c), half_diff);

    std::vector<int> s(c_sum.size());
    std::vector<int> t(c_sum.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        s[i] = c_sum[i] - rd_diff[i];
        t[i] = d_sum[i] + rc_diff[i];
    }
    return SequencePair(to_binary(s), to_binary(t));
}

bool extension_condition_holds(const SequencePair& inner, const SequencePair& outer) {
    const std::size_t m = outer.size();
    if (m % 2 != 0) {
        throw ContractError("extension_condition_holds: outer pair has odd length");
    }
    const auto& c = outer.first();
    const auto& d = outer.second();
    const int ab = inner.first()[0] * inner.second()[0];  // a0/b0 over +-1
    const int cd = c[0] * d[0];                            // c0/d0 over +-1
    const std::size_t h = m / 2;
    const int value = (ab + 1) * (c[h - 1] - cd * d[h - 1]) + (ab - 1) * (c[h] + cd * d[h]);
    return value == 0;
}

SequencePair normalize_gcp(const SequencePair& gcp) {
    if (!is_gcp(gcp)) {
        throw ConstructionError(ConstructionFailure::gcp_not_complementary, "normalize_gcp: input is not a GCP");
    }
    if (gcp.first()[0] == gcp.second()[0]) {
        return SequencePair(gcp.first(), negate(gcp.second()));
    }
    return gcp;
}

namespace {

struct CheckedGcp {
    std::size_t width;
};

CheckedGcp check_gcp(const SequencePair& gcp) {
    const CorrelationProfile profile = correlation_profile(gcp);
    if (zcp_width(profile) != gcp.size()) {
        throw ConstructionError(ConstructionFailure::gcp_not_complementary,
                                "inner pair of length " + std::to_string(gcp.size()) + " is not a GCP");
    }
    return CheckedGcp{czcp_width(profile)};
}

ConstructionReport make_report(SequencePair inner, SequencePair outer, SequencePair output) {
    return ConstructionReport{std::move(inner), std::move(outer), std::move(output), 0, 0, 0, 0,
                              WidthGuarantee::scaled, std::nullopt, std::nullopt, false, std::nullopt, std::nullopt, {}};
}

bool spectrum_matches(const std::vector<int>& aacs, std::size_t inner_length) {
    const std::size_t n = aacs.size();
    if (n % 2 != 0) {
        return false;
    }
    for (std::size_t u = 1; u < n; ++u) {
        if (u == n / 2) {
            if (static_cast<std::size_t>(std::abs(aacs[u])) != 2 * inner_length) {
                return false;
            }
        } else if (aacs[u] != 0) {
            return false;
        }
    }
    return true;
}

}  // namespace

ConstructionReport construct_extended(const SequencePair& gcp, const SequencePair& seed, bool auto_normalize) {
    const CheckedGcp inner = check_gcp(gcp);
    if (inner.width == 0) {
        throw ConstructionError(ConstructionFailure::gcp_width_zero, "inner GCP has CZCP width 0");
    }

    const std::size_t m = seed.size();
    if (m % 2 != 0) {
        throw ConstructionError(ConstructionFailure::seed_odd_length,
                                "seed length " + std::to_string(m) + " is odd");
    }
    if (is_golay_number(m)) {
        throw ConstructionError(ConstructionFailure::seed_golay_length,
                                "seed length " + std::to_string(m) + " is a Golay number");
    }
    const std::size_t seed_width = czcp_width(seed);
    if (seed_width != m / 2 - 1) {
        throw ConstructionError(ConstructionFailure::seed_not_optimal,
                                "seed has CZCP width " + std::to_string(seed_width) + ", expected " +
                                    std::to_string(m / 2 - 1));
    }
    if (!seed_mid_condition_holds(seed)) {
        throw ConstructionError(ConstructionFailure::seed_mid_condition_fails,
                                "seed fails the middle-shift sign condition");
    }

    SequencePair used = gcp;
    bool normalized = false;
    bool condition = extension_condition_holds(used, seed);
    if (!condition && auto_normalize && used.first()[0] == used.second()[0]) {
        used = normalize_gcp(used);
        normalized = true;
        condition = extension_condition_holds(used, seed);
    }

    const std::size_t n = gcp.size();
    ConstructionReport report = make_report(used, seed, turyn_compose(used, seed));
    report.inner_width = inner.width;
    report.outer_width = seed_width;
    report.sign_condition = condition;
    report.seed_mid_condition = true;
    report.normalized = normalized;
    if (condition) {
        report.guarantee = WidthGuarantee::extended;
        report.guaranteed_width = (m / 2 - 1) * n + inner.width;
    } else {
        report.guarantee = WidthGuarantee::scaled;
        report.guaranteed_width = n * seed_width;
        report.warnings.push_back(auto_normalize
                                      ? "sign condition fails even after normalization; only N*Z_B is guaranteed"
                                      : "sign condition fails; only N*Z_B is guaranteed (try auto-normalize)");
    }

    const CorrelationProfile out_profile = correlation_profile(report.output);
    report.measured_width = czcp_width(out_profile);
    if (condition) {
        report.spectrum_ok = spectrum_matches(out_profile.aacs, n);
    }
    return report;
}

ConstructionReport construct_scaled(const SequencePair& gcp, const SequencePair& czcp) {
    const CheckedGcp inner = check_gcp(gcp);
    const std::size_t outer_width = czcp_width(czcp);
    if (outer_width == 0) {
        throw ConstructionError(ConstructionFailure::seed_not_czcp, "outer pair is not a CZCP (width 0)");
    }
    ConstructionReport report = make_report(gcp, czcp, turyn_compose(gcp, czcp));
    report.inner_width = inner.width;
    report.outer_width = outer_width;
    report.guarantee = WidthGuarantee::scaled;
    report.guaranteed_width = gcp.size() * outer_width;
    report.measured_width = czcp_width(report.output);
    if (czcp.size() % 2 == 0) {
        report.sign_condition = extension_condition_holds(gcp, czcp);
        report.seed_mid_condition = seed_mid_condition_holds(czcp);
    }
    return report;
}

ConstructionReport compose_golay(const SequencePair& inner, const SequencePair& outer) {
    const CheckedGcp checked_inner = check_gcp(inner);
    const CorrelationProfile outer_profile = correlation_profile(outer);
    if (zcp_width(outer_profile) != outer.size()) {
        throw ConstructionError(ConstructionFailure::outer_not_complementary,
                                "outer pair of length " + std::to_string(outer.size()) + " is not a GCP");
    }
    ConstructionReport report = make_report(inner, outer, turyn_compose(inner, outer));
    report.inner_width = checked_inner.width;
    report.outer_width = czcp_width(outer_profile);
    report.guarantee = WidthGuarantee::golay;
    report.guaranteed_width = inner.size() * report.outer_width;
    const CorrelationProfile out_profile = correlation_profile(report.output);
    report.measured_width = czcp_width(out_profile);
    report.output_is_gcp = zcp_width(out_profile) == report.output.size();
    return report;
}

}  // namespace czcp
