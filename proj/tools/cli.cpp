#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

#include "report.hpp"
#include "reproduce.hpp"

namespace czcp::cli {

namespace {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string position(const FormatError& e) {
    return std::to_string(e.line() + 1) + ":" + std::to_string(e.column() + 1);
}

// A pair file path, a catalog id, or GCP<n>.
SequencePair load_pair(const std::string& ref) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(ref, ec)) {
        try {
            return read_pair_file(ref);
        } catch (const FormatError& e) {
            throw InputError(ref + ":" + position(e) + ": " + e.what());
        }
    }
    try {
        return resolve_pair(ref);
    } catch (const UnknownIdError&) {
        throw InputError("'" + ref + "' is neither a pair file nor a catalog id");
    }
}

unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

struct Context {
    std::ostream& out;
    std::ostream& err;
    json envelope;
    bool as_json = false;

    int finish(int code) {
        if (as_json) {
            envelope["exit_code"] = code;
            out << envelope.dump(2) << '\n';
        }
        return code;
    }

    int fail_input(const std::string& message) {
        err << "error: " << message << '\n';
        envelope["error"] = {{"code", "input_error"}, {"message", message}};
        return finish(exit_input_error);
    }
};

// verify ---------------------------------------------------------------

struct VerifyArgs {
    std::string input;
    std::string first;
    std::string second;
};

int cmd_verify(Context& ctx, const VerifyArgs& args) {
    SequencePair pair = [&] {
        if (!args.input.empty()) {
            if (!args.first.empty() || !args.second.empty()) {
                throw InputError("give either an input or --first/--second, not both");
            }
            return load_pair(args.input);
        }
        if (args.first.empty() || args.second.empty()) {
            throw InputError("verify needs an input file or id, or both --first and --second");
        }
        try {
            return parse_pair(args.first, args.second);
        } catch (const FormatError& e) {
            const std::string which = e.line() == 0 ? "--first" : "--second";
            throw InputError(which + ":" + std::to_string(e.column() + 1) + ": " + e.what());
        }
    }();

    const std::string label = args.input.empty() ? "inline" : args.input;
    const PairVerdict v = classify(pair);
    const int code = v.czcp_width >= 1 ? exit_ok : exit_negative;
    if (ctx.as_json) {
        ctx.envelope["pairs"] = json::array({pair_json(label, pair)});
    } else {
        print_pair(ctx.out, label, pair);
    }
    return ctx.finish(code);
}

// construct ------------------------------------------------------------

struct ConstructArgs {
    std::string gcp;
    std::string seed;
    std::string mode = "extend";
    bool auto_normalize = false;
    std::string output_path;
};

int cmd_construct(Context& ctx, const ConstructArgs& args) {
    const SequencePair gcp = load_pair(args.gcp);
    const SequencePair seed = load_pair(args.seed);
    std::string mode = args.mode;
    if (mode == "theorem1") mode = "extend";
    if (mode == "lemma8") mode = "scale";

    auto build = [&] {
        if (mode == "extend") return construct_extended(gcp, seed, args.auto_normalize);
        if (mode == "scale") return construct_scaled(gcp, seed);
        return compose_golay(gcp, seed);
    };
    std::optional<ConstructionReport> built;
    try {
        built = build();
    } catch (const ConstructionError& e) {
        const std::string code(to_string(e.code()));
        ctx.err << "rejected: " << code << ": " << e.what() << '\n';
        ctx.envelope["error"] = {{"code", code}, {"message", e.what()}};
        ctx.envelope["pairs"] = json::array({pair_json(args.gcp, gcp), pair_json(args.seed, seed)});
        return ctx.finish(exit_negative);
    }
    const ConstructionReport& report = *built;

    if (!args.output_path.empty()) {
        std::ofstream file(args.output_path);
        if (!(file << format_pair(report.output))) {
            throw InputError("cannot write '" + args.output_path + "'");
        }
    }
    for (const auto& w : report.warnings) ctx.err << "warning: " << w << '\n';

    if (ctx.as_json) {
        ctx.envelope["construction"] = construction_json(mode, report);
        ctx.envelope["pairs"] = json::array(
            {pair_json("inner", report.inner), pair_json("outer", report.outer), pair_json("output", report.output)});
    } else {
        auto& os = ctx.out;
        auto field = [&os](std::string_view name) -> std::ostream& {
            return os << std::left << std::setw(20) << name << std::right;
        };
        const std::size_t n = report.output.size();
        field("mode") << mode << " (guarantee: " << to_string(report.guarantee) << ")\n";
        field("inner") << args.gcp << ", length " << report.inner.size() << ", width " << report.inner_width
                       << (report.normalized ? ", normalized" : "") << '\n';
        field("outer") << args.seed << ", length " << report.outer.size() << ", width " << report.outer_width << '\n';
        field("guaranteed") << "(" << n << "," << report.guaranteed_width << ")\n";
        field("measured") << "(" << n << "," << report.measured_width << ")\n";
        if (report.sign_condition) field("sign condition") << (*report.sign_condition ? "holds" : "fails") << '\n';
        if (report.seed_mid_condition)
            field("middle condition") << (*report.seed_mid_condition ? "holds" : "fails") << '\n';
        if (report.spectrum_ok) field("aacs spectrum") << (*report.spectrum_ok ? "as predicted" : "MISMATCH") << '\n';
        if (report.output_is_gcp) field("output is GCP") << (*report.output_is_gcp ? "yes" : "NO") << '\n';
        os << '\n';
        print_pair(os, "output", report.output);
    }
    return ctx.finish(exit_ok);
}

// search ---------------------------------------------------------------

int cmd_search(Context& ctx, SearchSpec spec) {
    if (spec.length >= large_length_threshold && !spec.allow_large) {
        const std::uint64_t count = spec.length <= max_pruned_length ? candidate_count(spec) : 0;
        std::ostringstream msg;
        msg << "refusing M=" << spec.length << " without --allow-large: " << count << " candidates in this shard, ~"
            << std::fixed << std::setprecision(1) << estimated_seconds(spec) << " s on " << spec.threads
            << " thread(s)";
        return ctx.fail_input(msg.str());
    }
    try {
        validate(spec);
    } catch (const ContractError& e) {
        return ctx.fail_input(e.what());
    }

    const std::uint64_t total = candidate_count(spec) / spec.shard_count;
    const bool show_progress = total >= 4'000'000;
    SearchResult r = run_search(spec, [&](std::uint64_t scanned, std::uint64_t all) {
        if (!show_progress) return;
        ctx.err << "\rscanned " << scanned << " / " << all << " (" << (100 * scanned / std::max<std::uint64_t>(all, 1))
                << "%)" << std::flush;
    });
    if (show_progress) ctx.err << '\n';
    for (const auto& w : r.warnings) ctx.err << "warning: " << w << '\n';

    if (ctx.as_json) {
        json pairs = json::array();
        for (std::size_t i = 0; i < r.pairs.size(); ++i) {
            pairs.push_back(pair_json("class " + std::to_string(i), r.pairs[i]));
        }
        ctx.envelope["pairs"] = std::move(pairs);
        ctx.envelope["search"] = search_json(spec, r);
    } else {
        for (const auto& p : r.pairs) {
            ctx.out << format_sequence(p.first()) << ' ' << format_sequence(p.second()) << '\n';
        }
        ctx.out << "M=" << spec.length;
        if (spec.mid_abs) ctx.out << " |aacs(M/2)|=" << *spec.mid_abs;
        if (spec.shard_count > 1) ctx.out << " shard " << spec.shard_index << "/" << spec.shard_count;
        ctx.out << ": " << r.classes << " classes, " << r.candidates_scanned << " candidates scanned in "
                << std::fixed << std::setprecision(3) << std::chrono::duration<double>(r.elapsed).count() << " s\n";
    }
    return ctx.finish(exit_ok);
}

// catalog --------------------------------------------------------------

int cmd_catalog(Context& ctx) {
    if (ctx.as_json) {
        json entries = json::array();
        for (const auto& e : catalog()) {
            json j = pair_json(e.id, e.pair);
            j["source"] = e.source;
            entries.push_back(std::move(j));
        }
        ctx.envelope["pairs"] = std::move(entries);
        return ctx.finish(exit_ok);
    }
    for (const auto& e : catalog()) {
        const PairVerdict v = classify(e.pair);
        ctx.out << std::left << std::setw(8) << e.id << std::setw(36) << verdict_summary(v) << e.source << std::right
                << '\n';
    }
    return ctx.finish(exit_ok);
}

// reproduce ------------------------------------------------------------

int cmd_reproduce(Context& ctx, const std::string& target, const ReproduceOptions& options) {
    for (unsigned m : options.search_lengths) {
        if (m >= large_length_threshold && !options.allow_large) {
            return ctx.fail_input("search length " + std::to_string(m) + " needs --allow-large");
        }
    }
    const ReproduceReport report = reproduce(target, options);
    const bool passed = report.passed();
    if (ctx.as_json) {
        json checks = json::array();
        for (const auto& c : report.checks) {
            checks.push_back({{"name", c.name}, {"passed", c.passed}, {"diffs", c.diffs}, {"note", c.note}});
        }
        json pairs = json::array();
        for (const auto& [label, p] : report.pairs) pairs.push_back(pair_json(label, p));
        ctx.envelope["target"] = target;
        ctx.envelope["passed"] = passed;
        ctx.envelope["checks"] = std::move(checks);
        ctx.envelope["pairs"] = std::move(pairs);
    } else {
        std::size_t ok = 0;
        for (const auto& c : report.checks) {
            ctx.out << (c.passed ? "PASS  " : "FAIL  ") << c.name;
            if (!c.note.empty()) ctx.out << "  [" << c.note << "]";
            ctx.out << '\n';
            for (const auto& d : c.diffs) ctx.out << "      " << d << '\n';
            ok += c.passed ? 1 : 0;
        }
        ctx.out << target << ": " << ok << "/" << report.checks.size() << " checks passed\n";
    }
    return ctx.finish(passed ? exit_ok : exit_negative);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cross Z-complementary pair toolkit: verify, construct, search and reproduce reference results"};
    app.name("czcp");
    app.require_subcommand(1);

    bool as_json = false;

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Correlation profiles and verdict for one pair");
    verify_cmd->add_option("input", verify.input, "Pair file (two '+/-' lines) or catalog id");
    verify_cmd->add_option("--first", verify.first, "First sequence, inline");
    verify_cmd->add_option("--second", verify.second, "Second sequence, inline");

    ConstructArgs construct;
    auto* construct_cmd = app.add_subcommand("construct", "Turyn composition of a GCP with a seed pair");
    construct_cmd->add_option("--gcp", construct.gcp, "Inner GCP: file or id")->required();
    construct_cmd->add_option("--seed", construct.seed, "Outer pair: file or id")->required();
    construct_cmd->add_option("--mode", construct.mode, "extend (default), scale or gcp")
        ->check(CLI::IsMember({"extend", "scale", "gcp", "theorem1", "lemma8"}));
    construct_cmd->add_flag("--auto-normalize", construct.auto_normalize,
                            "Negate the GCP's second member if that makes the sign condition hold");
    construct_cmd->add_option("-o,--out", construct.output_path, "Write the output pair to this file");

    SearchSpec spec;
    spec.threads = default_threads();
    bool no_prune = false;
    int mid_abs = -1;
    auto* search_cmd = app.add_subcommand("search", "Exhaustive search for optimal (M, M/2-1) pairs");
    search_cmd->add_option("-M,--length", spec.length, "Even length M")->required();
    search_cmd->add_option("--mid-abs", mid_abs, "Keep only pairs with |AACS(M/2)| equal to this");
    search_cmd->add_option("--shards", spec.shard_count, "Number of shards");
    search_cmd->add_option("--shard", spec.shard_index, "Shard index to run");
    search_cmd->add_option("--threads", spec.threads, "Worker threads");
    search_cmd->add_flag("--allow-large", spec.allow_large, "Permit M >= 24");
    search_cmd->add_flag("--no-prune", no_prune, "Scan all 2^(2M) pairs (M <= 12)");

    auto* catalog_cmd = app.add_subcommand("catalog", "List the embedded reference pairs");

    std::string target;
    ReproduceOptions reproduce_opts;
    reproduce_opts.threads = default_threads();
    auto* reproduce_cmd = app.add_subcommand("reproduce", "Regenerate a reference table and diff it");
    std::vector<std::string> target_names(reproduce_targets().begin(), reproduce_targets().end());
    reproduce_cmd->add_option("target", target, "table1, table2, table3, table4 or example1")
        ->required()
        ->check(CLI::IsMember(target_names));
    reproduce_cmd->add_option("--search-lengths", reproduce_opts.search_lengths, "Seed search lengths for table1")
        ->delimiter(',');
    reproduce_cmd->add_flag("--allow-large", reproduce_opts.allow_large, "Permit search lengths >= 24");
    reproduce_cmd->add_option("--threads", reproduce_opts.threads, "Worker threads for searches");

    for (auto* sub : {verify_cmd, construct_cmd, search_cmd, catalog_cmd, reproduce_cmd}) {
        sub->add_flag("--json", as_json, "Emit the JSON report");
    }

    std::vector<std::string> argv_storage{"czcp"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input_error;
    }

    Context ctx{out, err, json::object(), as_json};
    ctx.envelope["command"] = app.get_subcommands().front()->get_name();
    ctx.envelope["args"] = args;

    try {
        if (*verify_cmd) return cmd_verify(ctx, verify);
        if (*construct_cmd) return cmd_construct(ctx, construct);
        if (*search_cmd) {
            if (mid_abs >= 0) spec.mid_abs = mid_abs;
            spec.prune = !no_prune;
            return cmd_search(ctx, spec);
        }
        if (*catalog_cmd) return cmd_catalog(ctx);
        return cmd_reproduce(ctx, target, reproduce_opts);
    } catch (const InputError& e) {
        return ctx.fail_input(e.what());
    } catch (const FormatError& e) {
        return ctx.fail_input(position(e) + ": " + e.what());
    } catch (const ContractError& e) {
        return ctx.fail_input(e.what());
    }
}

}  // namespace czcp::cli
