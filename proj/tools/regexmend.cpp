// Command-line surface over the repair library: validity checking, matching,
// equivalence, fitness, example generation, mutation, repair, and the
// benchmark harness. Results are JSON on stdout (except `check`), diagnostics
// go to stderr. Exit codes: 0 success, 1 negative answer (no match, not
// equivalent, unrepaired), 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "regexmend/json_io.hpp"
#include "regexmend/regexmend.hpp"

using namespace regexmend;

namespace {

const Alphabet& ascii() {
    static Alphabet a = Alphabet::printable_ascii();
    return a;
}

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded()) throw Error(path + " is not valid JSON");
    return j;
}

void print_json(const OrderedJson& j) { std::cout << j.dump(2) << "\n"; }

struct CommonRepairArgs {
    std::string config_path;
    std::uint64_t seed = 0;
    bool seed_set = false;
    unsigned threads = 0;
    bool threads_set = false;

    RepairConfig load() const {
        RepairConfig cfg;
        if (!config_path.empty()) cfg = config_from_json(read_json_file(config_path));
        if (seed_set) cfg.seed = seed;
        if (threads_set) cfg.threads = threads;
        return cfg;
    }
};

std::optional<ExternalTool> make_tool(const std::string& role, const std::string& command,
                                      std::int64_t timeout_ms) {
    if (command.empty()) return std::nullopt;
    ExternalTool t{role, command, std::chrono::milliseconds(timeout_ms)};
    t.check();
    return t;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"example-guided regular expression repair"};
    app.require_subcommand(1);

    // check
    std::string check_regex;
    CLI::App* check = app.add_subcommand("check", "report whether a regex is syntactically valid");
    check->add_option("regex", check_regex, "regex to check")->required();

    // match
    std::string match_regex, match_string;
    CLI::App* match = app.add_subcommand("match", "test string membership");
    match->add_option("regex", match_regex)->required();
    match->add_option("string", match_string, "string to test (may be empty)");

    // equiv
    std::string equiv_a, equiv_b;
    CLI::App* equiv = app.add_subcommand("equiv", "decide language equality of two regexes");
    equiv->add_option("regex1", equiv_a)->required();
    equiv->add_option("regex2", equiv_b)->required();

    // fitness
    std::string fit_regex, fit_examples;
    CLI::App* fit = app.add_subcommand("fitness", "score a regex against an examples file");
    fit->add_option("regex", fit_regex)->required();
    fit->add_option("examples", fit_examples, "JSON file {\"positive\": [...], \"negative\": [...]}")
        ->required();

    // gen
    std::string gen_regex;
    std::size_t gen_pos = 10, gen_neg = 10, gen_max_len = 30;
    std::uint64_t gen_seed = 0;
    CLI::App* gen = app.add_subcommand("gen", "sample positive/negative examples from a regex");
    gen->add_option("regex", gen_regex)->required();
    gen->add_option("--pos", gen_pos, "positive count");
    gen->add_option("--neg", gen_neg, "negative count");
    gen->add_option("--max-len", gen_max_len, "maximum string length");
    gen->add_option("--seed", gen_seed, "random seed");

    // mutate
    std::string mut_file;
    std::size_t mut_per = 5;
    std::uint64_t mut_seed = 0;
    CLI::App* mut = app.add_subcommand("mutate", "derive invalid/valid regex pairs from targets");
    mut->add_option("targets", mut_file, "text file, one valid regex per line")->required();
    mut->add_option("--per", mut_per, "pairs per target");
    mut->add_option("--seed", mut_seed, "random seed");

    // repair
    std::string rep_regex, rep_description, rep_examples, rep_fallback, rep_synth, rep_target;
    std::int64_t rep_tool_timeout = 30000;
    CommonRepairArgs rep_common;
    CLI::App* rep = app.add_subcommand("repair", "repair a regex against examples");
    rep->add_option("--regex", rep_regex, "candidate regex to repair");
    rep->add_option("--description", rep_description, "natural-language task for the synthesizer");
    rep->add_option("--examples", rep_examples, "examples JSON file")->required();
    rep->add_option("--synthesizer", rep_synth, "command producing a candidate regex");
    rep->add_option("--fallback", rep_fallback, "command run when the search fails");
    rep->add_option("--tool-timeout-ms", rep_tool_timeout, "external tool timeout");
    rep->add_option("--target", rep_target, "ground truth for success classification");
    rep->add_option("--config", rep_common.config_path, "repair config JSON file");
    rep->add_option("--seed", rep_common.seed)->each([&](const std::string&) { rep_common.seed_set = true; });
    rep->add_option("--threads", rep_common.threads)->each([&](const std::string&) {
        rep_common.threads_set = true;
    });

    // bench
    std::string bench_file, bench_fallback, bench_synth;
    std::int64_t bench_tool_timeout = 30000;
    std::size_t bench_pos = 10, bench_neg = 10, bench_max_len = 30;
    bool bench_consistency_only = false, bench_table = false;
    CommonRepairArgs bench_common;
    CLI::App* bench = app.add_subcommand("bench", "run the repair harness over JSON-lines records");
    bench->add_option("records", bench_file, "JSON-lines benchmark file")->required();
    bench->add_option("--config", bench_common.config_path, "repair config JSON file");
    bench->add_option("--seed", bench_common.seed)->each([&](const std::string&) {
        bench_common.seed_set = true;
    });
    bench->add_option("--threads", bench_common.threads)->each([&](const std::string&) {
        bench_common.threads_set = true;
    });
    bench->add_option("--pos", bench_pos, "sampled positive count");
    bench->add_option("--neg", bench_neg, "sampled negative count");
    bench->add_option("--max-len", bench_max_len, "sampled example length bound");
    bench->add_option("--synthesizer", bench_synth, "synthesizer command for candidate-less records");
    bench->add_option("--fallback", bench_fallback, "fallback repairer command");
    bench->add_option("--tool-timeout-ms", bench_tool_timeout, "external tool timeout");
    bench->add_flag("--consistency-only", bench_consistency_only,
                    "classify success without DFA equivalence");
    bench->add_flag("--table", bench_table, "append a text table on stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::ostringstream oss;
        oss << e.what();
        std::cerr << "error: " << oss.str() << "\n";
        return 2;
    }

    try {
        if (*check) {
            bool ok = validate(check_regex, ascii());
            std::cout << (ok ? "valid" : "invalid") << "\n";
            return ok ? 0 : 1;
        }

        Engine engine(ascii());

        if (*match) {
            bool m = engine.matches(parse(match_regex, ascii()), match_string);
            OrderedJson j;
            j["matches"] = m;
            print_json(j);
            return m ? 0 : 1;
        }

        if (*equiv) {
            bool eq = engine.equivalent(parse(equiv_a, ascii()), parse(equiv_b, ascii()));
            OrderedJson j;
            j["equivalent"] = eq;
            print_json(j);
            return eq ? 0 : 1;
        }

        if (*fit) {
            ExampleSet ex = examples_from_json(read_json_file(fit_examples), ascii());
            print_json(fitness_to_json(fitness(engine, parse(fit_regex, ascii()), ex)));
            return 0;
        }

        if (*gen) {
            RegexPtr r = parse(gen_regex, ascii());
            SampleResult pos = engine.sample_positive(r, gen_pos, gen_max_len, gen_seed);
            SampleResult neg =
                engine.sample_negative(r, gen_neg, gen_max_len, gen_seed ^ 0x9E3779B97F4A7C15ull);
            OrderedJson j;
            j["positive"] = pos.strings;
            j["negative"] = neg.strings;
            if (pos.exhausted) j["positive_exhausted"] = true;
            if (neg.exhausted) j["negative_exhausted"] = true;
            print_json(j);
            return 0;
        }

        if (*mut) {
            std::ifstream in(mut_file);
            if (!in) throw Error("cannot open " + mut_file);
            std::vector<std::string> targets;
            std::string line;
            while (std::getline(in, line)) {
                if (!line.empty() && line.back() == '\r') line.pop_back();
                if (!line.empty()) targets.push_back(line);
            }
            MutationResult r = make_invalid_pairs(targets, mut_per, mut_seed, ascii());
            OrderedJson j;
            OrderedJson pairs = OrderedJson::array();
            for (const auto& p : r.pairs) {
                OrderedJson pj;
                pj["invalid"] = p.invalid;
                pj["valid"] = p.valid;
                pj["edits"] = p.edits.size();
                pairs.push_back(std::move(pj));
            }
            j["pairs"] = std::move(pairs);
            j["requested"] = targets.size() * mut_per;
            j["produced"] = r.pairs.size();
            print_json(j);
            return 0;
        }

        if (*rep) {
            if (rep_regex.empty() && rep_synth.empty())
                throw Error("repair needs --regex or --synthesizer");
            RepairConfig cfg = rep_common.load();
            ExampleSet ex = examples_from_json(read_json_file(rep_examples), ascii());
            TransInput input;
            if (!rep_regex.empty()) input.candidate = rep_regex;
            if (!rep_description.empty()) input.description = rep_description;
            RepairReport report =
                transregex(input, ex, make_tool("synthesizer", rep_synth, rep_tool_timeout),
                           make_tool("repairer", rep_fallback, rep_tool_timeout), cfg, ascii());
            if (!rep_target.empty() && !report.regex.empty()) {
                RegexPtr outcome = parse(report.regex, ascii());
                report.success_vs_target = consistent(engine, outcome, ex) &&
                                           engine.equivalent(outcome, parse(rep_target, ascii()));
            }
            print_json(report_to_json(report));
            return report.repaired ? 0 : 1;
        }

        if (*bench) {
            RepairConfig cfg = bench_common.load();
            LoadResult loaded = load_benchmark_file(bench_file, ascii());
            for (const auto& w : loaded.warnings) std::cerr << "warning: " << w << "\n";
            HarnessOptions opt;
            opt.k_pos = bench_pos;
            opt.k_neg = bench_neg;
            opt.max_len = bench_max_len;
            opt.consistency_only = bench_consistency_only;
            opt.synthesizer = make_tool("synthesizer", bench_synth, bench_tool_timeout);
            opt.fallback = make_tool("repairer", bench_fallback, bench_tool_timeout);
            HarnessReport report = run_harness(loaded.records, cfg, opt, ascii());
            print_json(harness_to_json(report));
            if (bench_table) std::cerr << harness_to_table(report);
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
