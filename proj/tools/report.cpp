#include "report.hpp"

#include <iomanip>
#include <ostream>

namespace czcp::cli {

namespace {

template <typename T>
json optional_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

void print_row(std::ostream& os, std::string_view name, const std::vector<int>& values) {
    // 20 shifts per line keeps long profiles readable.
    constexpr std::size_t per_line = 20;
    for (std::size_t start = 0; start < values.size(); start += per_line) {
        os << std::left << std::setw(10) << (start == 0 ? std::string(name) : std::string()) << std::right;
        os << "u=" << std::setw(4) << std::left << start << std::right;
        for (std::size_t u = start; u < std::min(values.size(), start + per_line); ++u) {
            os << std::setw(5) << values[u];
        }
        os << '\n';
    }
}

}  // namespace

json verdict_json(const PairVerdict& v) {
    json j{
        {"length", v.length},
        {"zcp_width", v.zcp_width},
        {"czcp_width", v.czcp_width},
        {"is_czcp", v.czcp_width >= 1},
        {"is_gcp", v.is_gcp},
        {"is_perfect", v.is_perfect},
        {"is_optimal", v.is_optimal},
        {"czc_ratio", v.czc_ratio ? json(v.czc_ratio->str()) : json(nullptr)},
        {"z_max", optional_json(v.z_max)},
        {"mid_aacs", optional_json(v.mid_aacs)},
        {"seed_mid_condition", optional_json(v.seed_mid_condition)},
    };
    if (v.golay) {
        j["golay"] = {{"alpha", v.golay->alpha}, {"beta", v.golay->beta}, {"gamma", v.golay->gamma}};
    } else {
        j["golay"] = nullptr;
    }
    return j;
}

json pair_json(std::string_view label, const SequencePair& p) {
    const CorrelationProfile profile = correlation_profile(p);
    return json{
        {"label", label},
        {"first", format_sequence(p.first())},
        {"second", format_sequence(p.second())},
        {"length", p.size()},
        {"profiles", {{"aacs", profile.aacs}, {"accs", profile.accs}}},
        {"verdict", verdict_json(classify(p, profile))},
    };
}

json construction_json(std::string_view mode, const ConstructionReport& r) {
    return json{
        {"mode", mode},
        {"guarantee", to_string(r.guarantee)},
        {"inner_length", r.inner.size()},
        {"outer_length", r.outer.size()},
        {"output_length", r.output.size()},
        {"inner_width", r.inner_width},
        {"outer_width", r.outer_width},
        {"guaranteed_width", r.guaranteed_width},
        {"measured_width", r.measured_width},
        {"sign_condition", optional_json(r.sign_condition)},
        {"seed_mid_condition", optional_json(r.seed_mid_condition)},
        {"spectrum_ok", optional_json(r.spectrum_ok)},
        {"output_is_gcp", optional_json(r.output_is_gcp)},
        {"normalized", r.normalized},
        {"warnings", r.warnings},
    };
}

json search_json(const SearchSpec& spec, const SearchResult& r) {
    return json{
        {"length", spec.length},
        {"mid_abs", optional_json(spec.mid_abs)},
        {"prune", spec.prune},
        {"shard_index", spec.shard_index},
        {"shard_count", spec.shard_count},
        {"threads", spec.threads},
        {"classes", r.classes},
        {"candidates_scanned", r.candidates_scanned},
        {"elapsed_seconds", std::chrono::duration<double>(r.elapsed).count()},
        {"warnings", r.warnings},
    };
}

std::string verdict_summary(const PairVerdict& v) {
    std::string s = "(" + std::to_string(v.length) + "," + std::to_string(v.czcp_width) + ")-CZCP";
    if (v.czcp_width == 0) s = "not a CZCP (width 0)";
    if (v.is_perfect) {
        s += ", perfect";
    } else if (v.is_optimal) {
        s += ", optimal";
    }
    if (v.is_gcp) s += ", GCP";
    return s;
}

void print_pair(std::ostream& os, std::string_view label, const SequencePair& p) {
    const CorrelationProfile profile = correlation_profile(p);
    const PairVerdict v = classify(p, profile);
    auto field = [&os](std::string_view name) -> std::ostream& {
        return os << std::left << std::setw(20) << name << std::right;
    };
    field("pair") << label << " (length " << p.size() << ")\n";
    field("first") << format_sequence(p.first()) << '\n';
    field("second") << format_sequence(p.second()) << '\n';
    print_row(os, "aacs", profile.aacs);
    print_row(os, "accs", profile.accs);
    field("verdict") << verdict_summary(v) << '\n';
    field("zcp width") << v.zcp_width << '\n';
    field("czcp width") << v.czcp_width << '\n';
    if (v.czc_ratio) field("czc ratio") << v.czc_ratio->str() << " (Z_max " << *v.z_max << ")\n";
    if (v.mid_aacs) field("aacs at N/2") << *v.mid_aacs << '\n';
    if (v.seed_mid_condition) field("middle condition") << (*v.seed_mid_condition ? "holds" : "fails") << '\n';
    if (v.golay) {
        field("golay length") << "2^" << v.golay->alpha << " 10^" << v.golay->beta << " 26^" << v.golay->gamma << '\n';
    }
}

}  // namespace czcp::cli
