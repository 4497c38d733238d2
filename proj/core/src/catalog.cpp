#include "czcp/catalog.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>

#include "czcp/correlation.hpp"
#include "czcp/turyn.hpp"

namespace czcp {

std::vector<int> expand_profile(std::string_view text) {
    std::vector<int> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) {
            comma = text.size();
        }
        std::string_view token = text.substr(start, comma - start);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        if (token.empty()) {
            throw FormatError("expand_profile: empty token", 0, start);
        }
        int run = 1;
        if (const auto us = token.find('_'); us != std::string_view::npos) {
            const auto count = token.substr(us + 1);
            if (std::from_chars(count.data(), count.data() + count.size(), run).ec != std::errc{}) {
                throw FormatError("expand_profile: bad run length", 0, start + us + 1);
            }
            token = token.substr(0, us);
        }
        int value = 0;
        if (std::from_chars(token.data(), token.data() + token.size(), value).ec != std::errc{}) {
            throw FormatError("expand_profile: bad value", 0, start);
        }
        out.insert(out.end(), static_cast<std::size_t>(run), value);
        start = comma + 1;
    }
    return out;
}

namespace {

template <typename T>
void check_field(std::vector<std::string>& diffs, const char* name, const std::optional<T>& claimed, const T& actual) {
    if (claimed && !(*claimed == actual)) {
        std::ostringstream msg;
        msg << name << ": claimed " << *claimed << ", measured " << actual;
        diffs.push_back(msg.str());
    }
}

void check_profile(std::vector<std::string>& diffs, const char* name, const std::optional<std::vector<int>>& claimed,
                   const std::vector<int>& actual) {
    if (!claimed) {
        return;
    }
    if (claimed->size() != actual.size()) {
        diffs.push_back(std::string(name) + ": claimed " + std::to_string(claimed->size()) + " entries, measured " +
                        std::to_string(actual.size()));
        return;
    }
    for (std::size_t u = 0; u < actual.size(); ++u) {
        if ((*claimed)[u] != actual[u]) {
            diffs.push_back(std::string(name) + "[" + std::to_string(u) + "]: claimed " +
                            std::to_string((*claimed)[u]) + ", measured " + std::to_string(actual[u]));
        }
    }
}

CatalogEntry make_entry(std::string id, std::string_view first, std::string_view second, ClaimedVerdict claimed,
                        std::string source) {
    return CatalogEntry{std::move(id), parse_pair(first, second), std::move(claimed), std::move(source)};
}

ClaimedVerdict seed_claim(std::size_t width, int mid, std::string_view aacs, std::string_view accs) {
    ClaimedVerdict c;
    c.czcp_width = width;
    c.is_gcp = false;
    c.is_optimal = true;
    c.is_perfect = false;
    c.mid_aacs = mid;
    c.aacs = expand_profile(aacs);
    c.accs = expand_profile(accs);
    return c;
}

ClaimedVerdict kernel_claim(std::size_t width, bool perfect) {
    ClaimedVerdict c;
    c.czcp_width = width;
    c.is_gcp = true;
    c.is_perfect = perfect;
    return c;
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> entries;

    entries.push_back(make_entry("GCP2", "+-", "--", kernel_claim(1, true), "standard kernel"));
    {
        ClaimedVerdict c = kernel_claim(4, false);
        c.aacs = expand_profile("20,0_9");
        entries.push_back(make_entry("GCP10", "--+-+-++--", "++-+++++--", c, "worked example inner GCP"));
    }
    entries.push_back(make_entry("GCP26", "++++-++--+-+-+--+-+++--+++", "++++-++--+-+++++-+---++---",
                                 kernel_claim(12, false), "standard kernel"));

    // Optimal (M, M/2-1) seeds with |AACS(M/2)| = 2.
    entries.push_back(make_entry("K6", "+----+", "+-+++-", seed_claim(2, -2, "12,0_2,-2,0_2", "-4,-4,0,2,0_2"),
                                 "optimal seed"));
    entries.push_back(make_entry("K12", "+++-++++--+-", "+++-+---++-+",
                                 seed_claim(5, -2, "24,0_5,-2,0_5", "-4,0,4,0,4,0,2,0_5"), "optimal seed"));
    entries.push_back(make_entry("K24", "+-++-+++--------++--+-+-", "+-++-+++---+++++--++-+-+",
                                 seed_claim(11, 2, "48,0_11,2,0_11", "-4,0,-4,0,-4,0,-4,0,-4,0,-4,0,-2,0_11"),
                                 "optimal seed"));
    entries.push_back(make_entry("K28", "++-+-++-----+----+--++---+-+", "++-+-++-----+++++-++--+++-+-",
                                 seed_claim(13, -2, "56,0_13,-2,0_13", "-4,0,4,0,-12,0,4,0,-12,0,-12,0,4,0,2,0_13"),
                                 "optimal seed"));

    // Outputs of the extension with GCP2 as inner pair.
    entries.push_back(make_entry("K12d", "--++++++-++-", "--+++-+-+--+",
                                 seed_claim(5, -4, "24,0_5,-4,0_5", "0,8,0,-4,0,-4,0,0_5"), "doubled seed"));
    entries.push_back(make_entry("K24d", "+---+-++------+--++++-++", "+---+-++---+-+-++----+--",
                                 seed_claim(11, -4, "48,0_11,-4,0_11", "0,0,0,-4,0,-12,0,20,0,4,0,4,0,0_11"),
                                 "doubled seed"));
    entries.push_back(make_entry(
        "K48d", "+--++---+++-----++++++++++-+-+-++-+-++-++-++--++", "+--++---+++-----+++++++-+-+-+-+--+-+--+--+--++--",
        seed_claim(23, 4, "96,0_23,4,0_23",
                   "0,40,0,-12,0,-4,0,-12,0,-4,0,-12,0,4,0,-12,0,-4,0,-4,0,4,0,-4,0,0_23"),
        "doubled seed"));
    entries.push_back(make_entry(
        "K56d", "--+--++-+++----+++++-++++-++++++-+---+-+--+-++-+++--+++-",
        "--+--++-+++----+++++-++++-+-+---+-+++-+-++-+--+---++---+",
        seed_claim(27, -4, "112,0_27,-4,0_27",
                   "0,16,0,4,0,-12,0,20,0,4,0,12,0,28,0,-20,0,-4,0,-4,0,-4,0,-12,0,-4,0,-4,0,0_27"),
        "doubled seed"));

    {
        // GCP10 composed with K6: s = (e, mid_s, f), t = (e, mid_t, -f).
        const std::string e = "++-+++++----+-----++--+-";
        const std::string f = "--++++-+-+--++--+-+-++--";
        std::string neg_f = f;
        for (char& ch : neg_f) ch = ch == '+' ? '-' : '+';
        ClaimedVerdict c;
        c.czcp_width = 24;
        c.is_gcp = false;
        c.mid_aacs = -20;
        c.aacs = expand_profile("120,0_29,-20,0_29");
        c.accs = expand_profile(
            "0,16,8,8,8,8,24,8,-8,-20,0,-16,8,-4,8,12,-8,-4,8,4,0,4,8,-4,-8,0,-4,-4,-4,-4,0,0,-4,0,-4,-4,0_24");
        entries.push_back(make_entry("EX60", e + "----++--+---" + f, e + "+-++----+-+-" + neg_f, c, "worked example"));
    }

    for (const auto& entry : entries) {
        if (const auto diffs = validate_entry(entry); !diffs.empty()) {
            throw std::logic_error("catalog entry " + entry.id + " fails validation: " + diffs.front());
        }
    }
    return entries;
}

std::string_view canonical_id(std::string_view id) {
    if (id == "K48") return "K48d";
    if (id == "K56") return "K56d";
    return id;
}

SequencePair kernel(unsigned length) {
    switch (length) {
        case 2: return seed("GCP2").pair;
        case 10: return seed("GCP10").pair;
        case 26: return seed("GCP26").pair;
        default: throw ContractError("no Golay kernel of length " + std::to_string(length));
    }
}

}  // namespace

std::vector<std::string> validate_entry(const CatalogEntry& entry) {
    const CorrelationProfile profile = correlation_profile(entry.pair);
    const PairVerdict v = classify(entry.pair, profile);
    std::vector<std::string> diffs;
    const auto& c = entry.claimed;
    check_field(diffs, "czcp_width", c.czcp_width, v.czcp_width);
    check_field(diffs, "is_gcp", c.is_gcp, v.is_gcp);
    check_field(diffs, "is_perfect", c.is_perfect, v.is_perfect);
    check_field(diffs, "is_optimal", c.is_optimal, v.is_optimal);
    if (c.mid_aacs) {
        check_field(diffs, "mid_aacs", c.mid_aacs, v.mid_aacs.value_or(0));
    }
    check_profile(diffs, "aacs", c.aacs, profile.aacs);
    check_profile(diffs, "accs", c.accs, profile.accs);
    return diffs;
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

bool has_entry(std::string_view id) {
    const auto key = canonical_id(id);
    const auto& all = catalog();
    return std::any_of(all.begin(), all.end(), [&](const CatalogEntry& e) { return e.id == key; });
}

const CatalogEntry& seed(std::string_view id) {
    const auto key = canonical_id(id);
    for (const auto& e : catalog()) {
        if (e.id == key) {
            return e;
        }
    }
    throw UnknownIdError("unknown catalog id '" + std::string(id) + "'");
}

SequencePair resolve_pair(std::string_view id) {
    if (has_entry(id)) {
        return seed(id).pair;
    }
    if (id.size() > 3 && id.substr(0, 3) == "GCP") {
        std::uint64_t n = 0;
        const auto digits = id.substr(3);
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
        if (ec == std::errc{} && ptr == digits.data() + digits.size() && is_golay_number(n)) {
            return golay_pair(n);
        }
    }
    throw UnknownIdError("unknown catalog id '" + std::string(id) + "'");
}

std::span<const std::string_view> seed_ids() {
    static constexpr std::array<std::string_view, 4> ids{"K6", "K12", "K24", "K28"};
    return ids;
}

std::vector<unsigned> default_kernel_order(std::uint64_t n) {
    const auto f = golay_factorization(n);
    if (!f) {
        throw ContractError(std::to_string(n) + " is not a Golay number");
    }
    std::vector<unsigned> order;
    order.insert(order.end(), f->beta, 10u);
    order.insert(order.end(), f->gamma, 26u);
    order.insert(order.end(), f->alpha, 2u);
    return order;
}

SequencePair golay_pair(std::uint64_t n, std::span<const unsigned> order) {
    std::vector<unsigned> chosen;
    if (order.empty()) {
        chosen = default_kernel_order(n);
    } else {
        std::uint64_t product = 1;
        for (unsigned k : order) {
            if (k != 2 && k != 10 && k != 26) {
                throw ContractError("kernel length " + std::to_string(k) + " is not one of 2, 10, 26");
            }
            product *= k;
        }
        if (product != n) {
            throw ContractError("kernel order multiplies to " + std::to_string(product) + ", not " +
                                std::to_string(n));
        }
        chosen.assign(order.begin(), order.end());
    }
    if (chosen.empty()) {
        return SequencePair(BinarySequence{1}, BinarySequence{1});
    }
    SequencePair acc = kernel(chosen.front());
    for (std::size_t i = 1; i < chosen.size(); ++i) {
        acc = turyn_compose(acc, kernel(chosen[i]));
    }
    return acc;
}

GolayCzcp czcp_gcp(std::uint64_t n, std::span<const unsigned> order, bool normalize) {
    SequencePair pair = golay_pair(n, order);
    if (normalize) {
        pair = normalize_gcp(pair);
    }
    const std::size_t width = czcp_width(pair);
    const auto f = golay_factorization(n);
    std::optional<std::size_t> expected;
    if (f->alpha >= 1) {
        expected = n / 2;
    } else if (f->gamma >= 1) {
        expected = 6 * n / 13;
    } else if (f->beta >= 1) {
        expected = 2 * n / 5;
    }
    const bool shortfall = expected && width < *expected;
    return GolayCzcp{std::move(pair), width, expected, shortfall};
}

}  // namespace czcp
