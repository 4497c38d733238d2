#include "czcp/verify.hpp"

#include <numeric>

namespace czcp {

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den <= 0 || num < 0) {
        throw ContractError("Rational: expected num >= 0 and den > 0");
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

std::strong_ordering Rational::operator<=>(const Rational& other) const noexcept {
    return num_ * other.den_ <=> other.num_ * den_;
}

std::string Rational::str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::uint64_t GolayFactorization::value() const {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < alpha; ++i) v *= 2;
    for (unsigned i = 0; i < beta; ++i) v *= 10;
    for (unsigned i = 0; i < gamma; ++i) v *= 26;
    return v;
}

std::optional<GolayFactorization> golay_factorization(std::uint64_t n) {
    if (n == 0) {
        return std::nullopt;
    }
    auto strip = [&n](std::uint64_t p) {
        unsigned k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        return k;
    };
    const unsigned twos = strip(2);
    const unsigned fives = strip(5);
    const unsigned thirteens = strip(13);
    if (n != 1 || twos < fives + thirteens) {
        return std::nullopt;
    }
    return GolayFactorization{twos - fives - thirteens, fives, thirteens};
}

bool is_golay_number(std::uint64_t n) {
    return golay_factorization(n).has_value();
}

std::size_t zcp_width(const CorrelationProfile& profile) {
    const std::size_t n = profile.aacs.size();
    for (std::size_t u = 1; u < n; ++u) {
        if (profile.aacs[u] != 0) {
            return u;
        }
    }
    return n;
}

std::size_t zcp_width(const SequencePair& p) {
    return zcp_width(correlation_profile(p));
}

std::size_t czcp_width(const CorrelationProfile& profile) {
    const auto& aacs = profile.aacs;
    const auto& accs = profile.accs;
    const std::size_t n = aacs.size();
    // Growing Z by one adds shift Z to the head zone and N-Z to the tail zone.
    std::size_t z = 0;
    while (z + 1 <= n / 2) {
        const std::size_t head = z + 1;
        const std::size_t tail = n - head;
        if (aacs[head] != 0 || aacs[tail] != 0 || accs[tail] != 0) {
            break;
        }
        ++z;
    }
    return z;
}

std::size_t czcp_width(const SequencePair& p) {
    return czcp_width(correlation_profile(p));
}

bool is_gcp(const SequencePair& p) {
    return zcp_width(p) == p.size();
}

CzcRatio czc_ratio(std::size_t length, std::size_t width) {
    if (length % 2 != 0) {
        throw ContractError("czc_ratio: odd length " + std::to_string(length) + " is unsupported");
    }
    const std::size_t half = length / 2;
    if (width == half) {
        return CzcRatio{Rational(1, 1), half};
    }
    const std::size_t z_max = half - 1;
    if (z_max == 0) {
        // N = 2 and not perfect: width is 0.
        return CzcRatio{Rational(0, 1), 0};
    }
    return CzcRatio{Rational(static_cast<std::int64_t>(width), static_cast<std::int64_t>(z_max)), z_max};
}

CzcRatio czc_ratio(const SequencePair& p) {
    if (p.size() % 2 != 0) {
        throw ContractError("czc_ratio: odd length " + std::to_string(p.size()) + " is unsupported");
    }
    return czc_ratio(p.size(), czcp_width(p));
}

bool half_structure_holds(const SequencePair& p, std::size_t depth) {
    const std::size_t n = p.size();
    if (2 * depth > n) {
        throw ContractError("half_structure_holds: depth exceeds N/2");
    }
    const auto& a = p.first();
    const auto& b = p.second();
    const int k = a[0] * b[0];
    for (std::size_t i = 0; i < depth; ++i) {
        if (a[i] != k * b[i] || a[n - 1 - i] != -k * b[n - 1 - i]) {
            return false;
        }
    }
    return true;
}

bool seed_mid_condition_holds(const SequencePair& p) {
    const std::size_t n = p.size();
    if (n % 2 != 0) {
        throw ContractError("seed_mid_condition_holds: odd length");
    }
    const auto& c = p.first();
    const auto& d = p.second();
    const std::size_t h = n / 2;
    const int k = d[0] * c[0];
    const int left = c[h - 1] - k * d[h - 1];
    const int right = c[h] + k * d[h];
    return left * right == 0;
}

PairVerdict classify(const SequencePair& p, const CorrelationProfile& profile) {
    PairVerdict v;
    v.length = p.size();
    v.zcp_width = zcp_width(profile);
    v.czcp_width = czcp_width(profile);
    v.is_gcp = v.zcp_width == v.length;
    v.golay = golay_factorization(v.length);
    if (v.length % 2 == 0) {
        v.is_perfect = v.czcp_width >= 1 && v.czcp_width == v.length / 2;
        const CzcRatio r = czc_ratio(v.length, v.czcp_width);
        v.czc_ratio = r.ratio;
        v.z_max = r.z_max;
        v.is_optimal = v.czcp_width >= 1 && r.ratio == Rational(1, 1);
        v.mid_aacs = profile.aacs[v.length / 2];
        v.seed_mid_condition = seed_mid_condition_holds(p);
    }
    return v;
}

PairVerdict classify(const SequencePair& p) {
    return classify(p, correlation_profile(p));
}

}  // namespace czcp
