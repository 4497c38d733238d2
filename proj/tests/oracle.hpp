// Test-only reference implementations. Everything here works on plain
// integer vectors straight from the definitions and shares no code with the
// library's correlation path.

#pragma once

#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "czcp/sequence.hpp"

namespace oracle {

using Seq = std::vector<int>;

inline Seq ints(const czcp::BinarySequence& s) {
    return Seq(s.begin(), s.end());
}

inline Seq from_text(const std::string& text) {
    Seq out;
    for (char ch : text) out.push_back(ch == '+' ? 1 : -1);
    return out;
}

// Double loop over the three branches of the aperiodic definition.
inline int accf(const Seq& a, const Seq& b, long long u) {
    const long long n = static_cast<long long>(a.size());
    int sum = 0;
    if (u >= n || -u >= n) return 0;
    if (u >= 0) {
        for (long long i = 0; i <= n - 1 - u; ++i) sum += a[i] * b[i + u];
    } else {
        for (long long i = 0; i <= n - 1 + u; ++i) sum += a[i - u] * b[i];
    }
    return sum;
}

inline int aacs(const Seq& a, const Seq& b, long long u) {
    return accf(a, a, u) + accf(b, b, u);
}

inline int accs(const Seq& a, const Seq& b, long long u) {
    return accf(a, b, u) + accf(b, a, u);
}

inline Seq aacs_profile(const Seq& a, const Seq& b) {
    Seq out;
    for (std::size_t u = 0; u < a.size(); ++u) out.push_back(aacs(a, b, static_cast<long long>(u)));
    return out;
}

inline Seq accs_profile(const Seq& a, const Seq& b) {
    Seq out;
    for (std::size_t u = 0; u < a.size(); ++u) out.push_back(accs(a, b, static_cast<long long>(u)));
    return out;
}

// C1 and C2 checked literally for one Z, both signs of u.
inline bool is_czcp(const Seq& a, const Seq& b, std::size_t z) {
    const long long n = static_cast<long long>(a.size());
    const long long zz = static_cast<long long>(z);
    if (2 * zz > n) return false;
    for (long long m = 1; m < n; ++m) {
        const bool in_t1 = m <= zz;
        const bool in_t2 = m >= n - zz;
        for (long long u : {m, -m}) {
            if ((in_t1 || in_t2) && aacs(a, b, u) != 0) return false;
            if (in_t2 && accs(a, b, u) != 0) return false;
        }
    }
    return true;
}

// Maximum over every candidate Z; no monotonicity assumed.
inline std::size_t czcp_width(const Seq& a, const Seq& b) {
    std::size_t best = 0;
    for (std::size_t z = 1; 2 * z <= a.size(); ++z) {
        if (is_czcp(a, b, z)) best = z;
    }
    return best;
}

inline std::size_t zcp_width(const Seq& a, const Seq& b) {
    std::size_t best = 0;
    const long long n = static_cast<long long>(a.size());
    for (long long z = 0; z <= n; ++z) {
        bool ok = true;
        for (long long u = 1; u < z && ok; ++u) ok = aacs(a, b, u) == 0 && aacs(a, b, -u) == 0;
        if (ok) best = static_cast<std::size_t>(z);
    }
    return best;
}

inline bool is_gcp(const Seq& a, const Seq& b) {
    for (long long u = 1; u < static_cast<long long>(a.size()); ++u) {
        if (aacs(a, b, u) != 0) return false;
    }
    return true;
}

// Composition written out block by block:
// s_i = ((c_i + d_{M-1-i})/2) a + ((c_i - d_{M-1-i})/2) b
// t_i = ((d_i - c_{M-1-i})/2) a + ((d_i + c_{M-1-i})/2) b
inline std::pair<Seq, Seq> turyn_blocks(const Seq& a, const Seq& b, const Seq& c, const Seq& d) {
    const std::size_t n = a.size();
    const std::size_t m = c.size();
    Seq s, t;
    for (std::size_t i = 0; i < m; ++i) {
        const int s_a = (c[i] + d[m - 1 - i]) / 2, s_b = (c[i] - d[m - 1 - i]) / 2;
        const int t_a = (d[i] - c[m - 1 - i]) / 2, t_b = (d[i] + c[m - 1 - i]) / 2;
        for (std::size_t j = 0; j < n; ++j) {
            s.push_back(s_a * a[j] + s_b * b[j]);
            t.push_back(t_a * a[j] + t_b * b[j]);
        }
    }
    return {s, t};
}

inline czcp::BinarySequence to_sequence(const Seq& v) {
    return czcp::BinarySequence(std::vector<std::int8_t>(v.begin(), v.end()));
}

inline Seq random_seq(std::mt19937_64& rng, std::size_t n) {
    Seq out(n);
    for (auto& v : out) v = (rng() & 1u) ? 1 : -1;
    return out;
}

inline czcp::SequencePair random_pair(std::mt19937_64& rng, std::size_t n) {
    return czcp::SequencePair(to_sequence(random_seq(rng, n)), to_sequence(random_seq(rng, n)));
}

}  // namespace oracle

// Readable doctest failure messages.
namespace czcp {
inline std::ostream& operator<<(std::ostream& os, const BinarySequence& s) {
    return os << format_sequence(s);
}
inline std::ostream& operator<<(std::ostream& os, const SequencePair& p) {
    return os << '(' << format_sequence(p.first()) << ", " << format_sequence(p.second()) << ')';
}
}  // namespace czcp
