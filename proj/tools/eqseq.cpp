// eqseq: generate, analyse and verify Euler-quotient level sequences.
//
// Exit status: 0 success, 1 verification failure, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "eulerq/complexity.hpp"
#include "eulerq/report.hpp"
#include "eulerq/sequence_io.hpp"
#include "eulerq/sequences.hpp"
#include "eulerq/verify.hpp"

namespace {

using namespace eulerq;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct RunConfig {
    std::uint64_t p = 0;
    unsigned r = 1;
    std::string kind;
    std::vector<std::uint64_t> index_list;
    unsigned level = 0;
    unsigned order_i = 1;
    std::uint64_t mary_order = 2;
    std::uint64_t k_max = 0;
    std::uint64_t budget = SearchOptions{}.budget;
    unsigned threads = 0;
    std::string output_path;
    std::string input_path;
    std::string format = "text";
    std::string suite;
    std::uint64_t seed = verify::SuiteConfig{}.seed;
    std::size_t samples = verify::SuiteConfig{}.samples;
    bool summary = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

IndexSet require_index_set(const RunConfig& cfg) {
    if (cfg.index_list.empty()) throw UsageError("kind '" + cfg.kind + "' requires --I");
    return IndexSet(cfg.p, {cfg.index_list.begin(), cfg.index_list.end()});
}

PeriodicSequence build_sequence(const RunConfig& cfg) {
    if (cfg.p == 0) throw UsageError("--p is required");
    if (cfg.kind == "fermat-order") return order_i_sequence(cfg.p, cfg.order_i);
    if (cfg.kind == "order-class") return order_i_binary_sequence(cfg.p, cfg.order_i, require_index_set(cfg));
    const PrimePowerModulus m(cfg.p, cfg.r);
    if (cfg.kind == "level") return level_sequence(m, cfg.level);
    if (cfg.kind == "class") return binary_class_sequence(m, require_index_set(cfg));
    if (cfg.kind == "balanced") return balanced_class_sequence(m, require_index_set(cfg));
    if (cfg.kind == "threshold") return threshold_sequence(m);
    if (cfg.kind == "mary") return mary_sequence(m, cfg.mary_order);
    throw UsageError("unknown kind '" + cfg.kind + "'");
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot open '" + path + "' for writing");
    return out;
}

int cmd_generate(const RunConfig& cfg) {
    const auto seq = build_sequence(cfg);
    if (cfg.output_path.empty()) {
        write_sequence(std::cout, seq);
        std::cerr << "period=" << seq.period() << " weight=" << seq.weight() << '\n';
    } else {
        auto out = open_output(cfg.output_path);
        write_sequence(out, seq);
        std::cout << "period=" << seq.period() << " weight=" << seq.weight() << '\n';
    }
    return exit_ok;
}

ComplexityReport analyze(const PeriodicSequence& seq, const RunConfig& cfg) {
    const SearchOptions options{cfg.budget, cfg.threads};
    const auto& tag = seq.tag();
    const bool class_kind = tag.kind == "class" || tag.kind == "order-class";
    if (class_kind && !tag.index_set.empty() && cfg.k_max > 0) {
        const PrimePowerModulus m(tag.p, tag.r);
        const IndexSet index_set(tag.p, {tag.index_set.begin(), tag.index_set.end()});
        try {
            return kerror_profile(seq, m, index_set, cfg.k_max, options);
        } catch (const HypothesisError& e) {
            auto report = analyze_sequence(seq, cfg.k_max, options);
            report.notes.push_back(std::string("no closed form: ") + e.what());
            return report;
        }
    }
    return analyze_sequence(seq, cfg.k_max, options);
}

int cmd_analyze(const RunConfig& cfg) {
    std::optional<PeriodicSequence> seq;
    if (!cfg.input_path.empty()) {
        std::ifstream in(cfg.input_path);
        if (!in) throw UsageError("cannot open '" + cfg.input_path + "'");
        auto loaded = read_sequence(in);
        auto tag = loaded.tag();
        if (!cfg.index_list.empty()) tag.index_set = cfg.index_list;
        seq.emplace(loaded.alphabet_size(), loaded.symbols(), std::move(tag));
    } else {
        if (cfg.kind.empty()) throw UsageError("analyze needs --file or --kind with generation parameters");
        seq.emplace(build_sequence(cfg));
    }

    const auto report = analyze(*seq, cfg);
    std::ofstream file;
    if (!cfg.output_path.empty()) file = open_output(cfg.output_path);
    std::ostream& out = cfg.output_path.empty() ? std::cout : file;
    if (cfg.format == "json")
        out << to_json(report).dump(2) << '\n';
    else
        render_text(out, report);
    return exit_ok;
}

int cmd_verify(const RunConfig& cfg) {
    verify::SuiteConfig suite;
    suite.p = cfg.p == 0 ? suite.p : cfg.p;
    suite.r = cfg.r;
    if (!cfg.index_list.empty()) suite.index_set = {cfg.index_list.begin(), cfg.index_list.end()};
    suite.k_max = cfg.k_max;
    suite.seed = cfg.seed;
    suite.samples = cfg.samples;
    suite.search = {cfg.budget, cfg.threads};

    std::vector<verify::CheckResult> results;
    try {
        results = verify::run_suite(cfg.suite, suite);
    } catch (const HypothesisError& e) {
        std::cerr << "eqseq: refused: " << e.what() << '\n';
        return exit_usage;
    }

    if (cfg.format == "json") {
        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        for (const auto& c : results) {
            const char* status = c.status == verify::Status::pass ? "pass" : c.status == verify::Status::skip ? "skip" : "fail";
            out.push_back({{"check", c.name}, {"status", status}, {"detail", c.detail}});
        }
        std::cout << out.dump(2) << '\n';
    } else {
        for (const auto& c : results) {
            const char* status = c.status == verify::Status::pass ? "PASS" : c.status == verify::Status::skip ? "SKIP" : "FAIL";
            std::cout << status << "  " << c.name;
            if (!c.detail.empty()) std::cout << "  [" << c.detail << ']';
            std::cout << '\n';
        }
    }
    return verify::all_passed(results) ? exit_ok : exit_failed;
}

int cmd_partition(const RunConfig& cfg) {
    if (cfg.p == 0) throw UsageError("--p is required");
    const PrimePowerModulus m(cfg.p, cfg.r);
    const auto part = class_partition(m);
    if (cfg.format == "json") {
        nlohmann::ordered_json out;
        out["p"] = cfg.p;
        out["r"] = cfg.r;
        if (cfg.summary) {
            auto sizes = nlohmann::ordered_json::array();
            for (const auto& c : part.classes) sizes.push_back(c.size());
            out["sizes"] = sizes;
            out["multiples"] = part.multiples.size();
        } else {
            out["classes"] = part.classes;
            out["multiples"] = part.multiples;
        }
        std::cout << out.dump(cfg.summary ? -1 : 2) << '\n';
        return exit_ok;
    }
    if (cfg.summary) {
        std::cout << "sizes";
        for (const auto& c : part.classes) std::cout << ' ' << c.size();
        std::cout << "\n|P| " << part.multiples.size() << '\n';
        return exit_ok;
    }
    auto print = [](const std::string& label, const std::vector<std::uint64_t>& members) {
        std::cout << label << " (" << members.size() << "):";
        for (auto u : members) std::cout << ' ' << u;
        std::cout << '\n';
    };
    for (std::size_t l = 0; l < part.classes.size(); ++l) print("D_" + std::to_string(l), part.classes[l]);
    print("P", part.multiples);
    return exit_ok;
}

void add_modulus(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--p", cfg.p, "odd prime p");
    cmd->add_option("--r", cfg.r, "exponent r >= 1")->check(CLI::PositiveNumber);
}

void add_kind(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--kind", cfg.kind, "level | class | balanced | threshold | mary | fermat-order | order-class");
    cmd->add_option("--I", cfg.index_list, "index set, e.g. --I 0,1")->delimiter(',');
    cmd->add_option("--j", cfg.level, "level index for --kind level");
    cmd->add_option("--i", cfg.order_i, "order i for fermat-order / order-class")->check(CLI::PositiveNumber);
    cmd->add_option("--order", cfg.mary_order, "alphabet size for --kind mary");
}

void add_search(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--k-max", cfg.k_max, "largest k in the k-error profile");
    cmd->add_option("--budget", cfg.budget, "maximum number of error patterns searched exhaustively");
    cmd->add_option("--threads", cfg.threads, "worker threads for the exhaustive search (0 = all cores)");
}

void add_format(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--format", cfg.format, "text | json")->check(CLI::IsMember({"text", "json"}));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Euler-quotient level sequences: construction and linear-complexity analysis"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* generate = app.add_subcommand("generate", "write a sequence file");
    add_modulus(generate, cfg);
    add_kind(generate, cfg);
    generate->add_option("--out,-o", cfg.output_path, "output file (default: standard output)");

    auto* analyze_cmd = app.add_subcommand("analyze", "linear complexity and k-error profile");
    add_modulus(analyze_cmd, cfg);
    add_kind(analyze_cmd, cfg);
    add_search(analyze_cmd, cfg);
    add_format(analyze_cmd, cfg);
    analyze_cmd->add_option("--file,-f", cfg.input_path, "sequence file to analyse");
    analyze_cmd->add_option("--out,-o", cfg.output_path, "write the report here instead of standard output");

    auto* verify_cmd = app.add_subcommand("verify", "run a property suite");
    add_modulus(verify_cmd, cfg);
    add_search(verify_cmd, cfg);
    add_format(verify_cmd, cfg);
    verify_cmd->add_option("--suite", cfg.suite, "suite name")->required();
    verify_cmd->add_option("--I", cfg.index_list, "index set for the klc suite")->delimiter(',');
    verify_cmd->add_option("--seed", cfg.seed, "seed for randomised suites");
    verify_cmd->add_option("--samples", cfg.samples, "sample count for randomised suites");

    auto* partition = app.add_subcommand("partition", "list the classes D_l and P");
    add_modulus(partition, cfg);
    add_format(partition, cfg);
    partition->add_flag("--summary", cfg.summary, "print cardinalities only");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*generate) return cmd_generate(cfg);
        if (*analyze_cmd) return cmd_analyze(cfg);
        if (*verify_cmd) return cmd_verify(cfg);
        if (*partition) return cmd_partition(cfg);
    } catch (const ParseError& e) {
        std::cerr << "eqseq: " << cfg.input_path << ": " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "eqseq: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
