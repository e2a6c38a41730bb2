// constel: classify prime twins, analyze gap signatures, scan ranges.
//
// Exit codes: 0 success, 2 usage error (bad flags, malformed gap lists,
// unreadable config), 3 constraint violation (non-prime inputs, caps,
// divisibility preconditions).

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "constel/config.hpp"
#include "constel/output.hpp"
#include "constel/pattern_lab.hpp"
#include "constel/prime_engine.hpp"
#include "constel/search.hpp"
#include "constel/twin_taxonomy.hpp"

namespace {

// Usage-level problem detected after flag parsing; maps to exit 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses a comma-separated list of FULL distances into half gaps.
std::vector<uint64_t> parse_gap_list(const std::string& text) {
    std::vector<uint64_t> half_gaps;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string token = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (token.empty()) throw UsageError("malformed gap list: empty entry");
        uint64_t value = 0;
        try {
            size_t used = 0;
            value = std::stoull(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw UsageError("malformed gap list: '" + token + "' is not an unsigned integer");
        }
        if (value == 0 || (value & 1))
            throw UsageError("malformed gap list: distances must be positive even numbers (full distances 2d)");
        half_gaps.push_back(value / 2);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return half_gaps;
}

void emit_tuple(constel::RecordWriter& writer, const constel::Multiplet& m) {
    if (m.signature.length() == 2) {
        auto elements = m.elements();
        constel::TwinPair pair{elements[0], elements[1]};
        writer.twin(pair, constel::classify_twin(pair));
    } else {
        writer.tuple(m, constel::class_signature(m));
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"prime twin classes, gap signature analysis and constellation search"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand name

    std::string format_flag;
    std::string config_flag;
    app.add_option("--format", format_flag, "output format: table, jsonl or csv")
        ->check(CLI::IsMember({"table", "jsonl", "csv"}));
    app.add_option("--config", config_flag,
                   "config file (key=value); CONSTEL_CONFIG is honored when the flag is absent");

    uint64_t arg_p = 0, arg_q = 0;
    auto* cmd_classify = app.add_subcommand("classify", "classify a twin pair of odd primes");
    cmd_classify->add_option("p", arg_p, "smaller member")->required();
    cmd_classify->add_option("q", arg_q, "larger member")->required();

    uint64_t arg_half_distance = 0, arg_a_max = 0;
    auto* cmd_twins = app.add_subcommand("twins", "enumerate twin pairs at one half distance by parameter a");
    cmd_twins->add_option("--half-distance", arg_half_distance, "half distance D (full distance is 2D)")
        ->required();
    cmd_twins->add_option("--a-max", arg_a_max, "largest parameter a to try")->required();

    uint64_t arg_d_max = 0;
    auto* cmd_special = app.add_subcommand("special", "list special pairs (3, 3+2D)");
    cmd_special->add_option("--d-max", arg_d_max, "largest half distance D")->required();

    std::string arg_gaps;
    auto* cmd_pattern = app.add_subcommand("pattern", "residue analysis of a gap signature");
    cmd_pattern->add_option("--gaps", arg_gaps, "comma-separated FULL distances, e.g. 2,4")->required();

    uint64_t arg_from = 3, arg_to = 0;
    unsigned arg_jobs = 1;
    auto* cmd_search = app.add_subcommand("search", "find all occurrences of a signature");
    cmd_search->add_option("--gaps", arg_gaps, "comma-separated FULL distances")->required();
    cmd_search->add_option("--from", arg_from, "base range start (default 3)");
    cmd_search->add_option("--to", arg_to, "base range end")->required();
    cmd_search->add_option("--jobs", arg_jobs, "worker count (never changes output)");

    uint32_t arg_length = 0;
    uint64_t arg_half_step = 0;
    auto* cmd_ap = app.add_subcommand("ap", "find prime arithmetic progressions");
    cmd_ap->add_option("--length", arg_length, "members in the progression (>= 3)")->required();
    cmd_ap->add_option("--half-step", arg_half_step, "half of the common difference")->required();
    cmd_ap->add_option("--from", arg_from, "base range start (default 3)");
    cmd_ap->add_option("--to", arg_to, "base range end")->required();

    uint64_t arg_upto = 0;
    uint32_t arg_buckets = 1;
    auto* cmd_count = app.add_subcommand("count", "count occurrences cumulatively");
    cmd_count->add_option("--gaps", arg_gaps, "comma-separated FULL distances")->required();
    cmd_count->add_option("--upto", arg_upto, "largest base to count")->required();
    cmd_count->add_option("--buckets", arg_buckets, "number of cumulative buckets (default 1)");

    auto* cmd_verify = app.add_subcommand("verify", "check that a signature stays exceptional over a range");
    cmd_verify->add_option("--gaps", arg_gaps, "comma-separated FULL distances")->required();
    cmd_verify->add_option("--upto", arg_upto, "scan limit")->required();

    uint64_t arg_prime = 0;
    auto* cmd_min_distance = app.add_subcommand("min-distance", "smallest viable equal-distance step for a prime");
    cmd_min_distance->add_option("--prime", arg_prime, "tuple length and first member (prime >= 5)")->required();
    cmd_min_distance->add_option("--d-max", arg_d_max, "largest half step to try")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        constel::ToolConfig cfg;
        std::string config_path = config_flag;
        if (config_path.empty()) {
            if (const char* env = std::getenv("CONSTEL_CONFIG")) config_path = env;
        }
        if (!config_path.empty()) {
            try {
                cfg = constel::load_config(config_path);
            } catch (const std::runtime_error& e) {
                throw UsageError(e.what());
            }
        }

        constel::Format format =
            constel::parse_format(format_flag.empty() ? cfg.format : format_flag);
        constel::RecordWriter writer(std::cout, format);

        constel::SearchOptions opts;
        opts.sieve.segment_slots = cfg.segment_slots;
        opts.scan_cap = cfg.scan_cap;

        if (cmd_classify->parsed()) {
            constel::TwinPair pair = constel::make_twin_pair(arg_p, arg_q);
            writer.twin(pair, constel::classify_twin(pair));
        } else if (cmd_twins->parsed()) {
            for (const auto& tp : constel::enumerate_twin_params(arg_half_distance, arg_a_max))
                writer.twin(tp.pair, constel::classify_twin(tp.pair));
        } else if (cmd_special->parsed()) {
            for (const auto& pair : constel::list_special_twins(arg_d_max))
                writer.special_twin(pair);
        } else if (cmd_pattern->parsed()) {
            auto sig = constel::GapSignature::from_half_gaps(parse_gap_list(arg_gaps));
            writer.pattern(sig, constel::classify_pattern(sig));
            for (const auto& m : constel::exceptional_candidates(sig)) emit_tuple(writer, m);
        } else if (cmd_search->parsed()) {
            auto sig = constel::GapSignature::from_half_gaps(parse_gap_list(arg_gaps));
            constel::SearchJob job{std::move(sig), arg_from, arg_to, arg_jobs};
            for (const auto& m : constel::find_occurrences(job, opts)) emit_tuple(writer, m);
        } else if (cmd_ap->parsed()) {
            for (const auto& m : constel::find_equal_ap(arg_length, arg_half_step, arg_from, arg_to, 1, opts))
                emit_tuple(writer, m);
        } else if (cmd_count->parsed()) {
            auto sig = constel::GapSignature::from_half_gaps(parse_gap_list(arg_gaps));
            for (const auto& rec : constel::count_occurrences(sig, arg_upto, arg_buckets, 1, opts))
                writer.count(rec);
        } else if (cmd_verify->parsed()) {
            auto sig = constel::GapSignature::from_half_gaps(parse_gap_list(arg_gaps));
            auto report = constel::verify_exceptionality(sig, arg_upto, 1, opts);
            writer.verify(sig, report);
            if (!report.consistent()) {
                std::cerr << "verify: violations found; the analyzer and the scan disagree, "
                             "which indicates an implementation bug\n";
                for (const auto& m : report.violations) emit_tuple(writer, m);
            }
        } else if (cmd_min_distance->parsed()) {
            auto d = constel::min_anchored_distance(arg_prime, arg_d_max);
            if (d) {
                constel::Multiplet m{arg_prime, constel::equal_distance_signature(arg_prime, *d)};
                emit_tuple(writer, m);
            } else {
                std::cerr << "min-distance: no viable half step up to " << arg_d_max << "\n";
            }
        }
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const constel::ConstraintError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
