#pragma once

#include <fstream>
#include <istream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "regexmend/repair.hpp"

namespace regexmend {

// One benchmark task: the intended regex, optional examples (sampled when
// absent), and optionally the incorrect prediction to repair.
struct BenchmarkRecord {
    std::string id;
    std::optional<std::string> description;
    std::string target;
    std::vector<std::string> positive;
    std::vector<std::string> negative;
    std::optional<std::string> candidate;
};

struct LoadResult {
    std::vector<BenchmarkRecord> records;
    std::size_t skipped = 0;
    std::vector<std::string> warnings;
};

inline std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// Reads JSON-lines records {id, description?, target, positive?, negative?,
// candidate?}. Records with unusable targets or examples inconsistent with
// the target are skipped and counted, never fatal.
inline LoadResult load_benchmark(std::istream& in,
                                 const Alphabet& alphabet = Alphabet::printable_ascii()) {
    Engine engine(alphabet);
    LoadResult out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto warn = [&](const std::string& why) {
            ++out.skipped;
            out.warnings.push_back("line " + std::to_string(lineno) + ": " + why);
        };
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (!j.is_object() || !j.contains("target") || !j["target"].is_string()) {
            warn("not a record object with a target");
            continue;
        }
        BenchmarkRecord rec;
        rec.target = j["target"].get<std::string>();
        rec.id = j.value("id", "line" + std::to_string(lineno));
        if (j.contains("description") && j["description"].is_string())
            rec.description = j["description"].get<std::string>();
        if (j.contains("candidate") && j["candidate"].is_string())
            rec.candidate = j["candidate"].get<std::string>();
        if (j.contains("positive")) j["positive"].get_to(rec.positive);
        if (j.contains("negative")) j["negative"].get_to(rec.negative);

        RegexPtr target;
        try {
            target = parse(rec.target, alphabet);
        } catch (const Error& e) {
            warn("target does not parse: " + std::string(e.what()));
            continue;
        }
        try {
            bool ok = true;
            for (const auto& w : rec.positive) ok = ok && engine.matches(target, w);
            for (const auto& w : rec.negative) ok = ok && !engine.matches(target, w);
            if (!ok) {
                warn("provided examples are inconsistent with the target");
                continue;
            }
        } catch (const Error& e) {
            warn(std::string("examples unusable: ") + e.what());
            continue;
        }
        out.records.push_back(std::move(rec));
    }
    return out;
}

inline LoadResult load_benchmark_file(const std::string& path,
                                      const Alphabet& alphabet = Alphabet::printable_ascii()) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return load_benchmark(in, alphabet);
}

// Provided examples verbatim when present, else seeded samples drawn from
// the target's automaton; consistent with the target either way.
inline ExampleSet materialize_examples(const Engine& engine, const BenchmarkRecord& rec,
                                       std::size_t k_pos, std::size_t k_neg, std::size_t max_len,
                                       std::uint64_t seed) {
    if (!rec.positive.empty() || !rec.negative.empty())
        return ExampleSet(rec.positive, rec.negative, engine.alphabet());
    RegexPtr target = parse(rec.target, engine.alphabet());
    SampleResult pos = engine.sample_positive(target, k_pos, max_len, seed);
    SampleResult neg = engine.sample_negative(target, k_neg, max_len, seed ^ 0x9E3779B97F4A7C15ull);
    return ExampleSet(pos.strings, neg.strings, engine.alphabet());
}

// ---- invalid/valid pair generation -----------------------------------------

struct MutationEdit {
    enum class Kind { Insert, Delete, Modify } kind;
    std::size_t position = 0;
    char payload = 0;
};

struct InvalidPair {
    std::string invalid;
    std::string valid;
    std::vector<MutationEdit> edits;
};

struct MutationResult {
    std::vector<InvalidPair> pairs;
    std::size_t shortfall = 0;  // pairs the attempt cap failed to produce
};

namespace detail {

inline std::size_t rng_below(std::mt19937_64& rng, std::size_t n) {
    if (n <= 1) return 0;
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / n * n;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return static_cast<std::size_t>(v % n);
}

}  // namespace detail

// For each valid target, emits up to n_per_target mutations that fail
// validate(), each within 1..5 single-character edits of the source.
// Mutations that stay valid are discarded and retried, 100 attempts per pair.
inline MutationResult make_invalid_pairs(const std::vector<std::string>& targets,
                                         std::size_t n_per_target, std::uint64_t seed,
                                         const Alphabet& alphabet = Alphabet::printable_ascii()) {
    MutationResult out;
    const std::string& chars = alphabet.characters();
    for (std::size_t ti = 0; ti < targets.size(); ++ti) {
        const std::string& target = targets[ti];
        if (!validate(target, alphabet)) throw Error("mutation source must be valid: " + target);
        std::mt19937_64 rng(seed ^ fnv1a(target) ^ (0x51ED270B9ull * (ti + 1)));
        std::set<std::string> produced;
        for (std::size_t k = 0; k < n_per_target; ++k) {
            bool done = false;
            for (int attempt = 0; attempt < 100 && !done; ++attempt) {
                std::string s = target;
                std::vector<MutationEdit> edits;
                std::size_t n_edits = 1 + detail::rng_below(rng, 5);
                for (std::size_t e = 0; e < n_edits; ++e) {
                    MutationEdit ed;
                    switch (detail::rng_below(rng, 3)) {
                        case 0:
                            ed.kind = MutationEdit::Kind::Insert;
                            ed.position = detail::rng_below(rng, s.size() + 1);
                            ed.payload = chars[detail::rng_below(rng, chars.size())];
                            s.insert(s.begin() + static_cast<std::ptrdiff_t>(ed.position), ed.payload);
                            break;
                        case 1:
                            if (s.empty()) continue;
                            ed.kind = MutationEdit::Kind::Delete;
                            ed.position = detail::rng_below(rng, s.size());
                            s.erase(s.begin() + static_cast<std::ptrdiff_t>(ed.position));
                            break;
                        default:
                            if (s.empty()) continue;
                            ed.kind = MutationEdit::Kind::Modify;
                            ed.position = detail::rng_below(rng, s.size());
                            ed.payload = chars[detail::rng_below(rng, chars.size())];
                            s[ed.position] = ed.payload;
                            break;
                    }
                    edits.push_back(ed);
                }
                if (edits.empty() || validate(s, alphabet) || produced.count(s)) continue;
                produced.insert(s);
                out.pairs.push_back({std::move(s), target, std::move(edits)});
                done = true;
            }
            if (!done) ++out.shortfall;
        }
    }
    return out;
}

// ---- success-rate harness ----------------------------------------------------

struct HarnessRow {
    std::string id;
    bool attempted = false;
    bool consistent = false;
    bool dfa_equal = false;
    bool success = false;
    std::string outcome_regex;
    std::string via;
    std::string error;
    std::int64_t elapsed_ms = 0;
};

struct HarnessReport {
    std::vector<HarnessRow> rows;
    std::size_t records = 0;
    std::size_t attempted = 0;
    std::size_t successes = 0;
    double success_rate = 0.0;
    double mean_ms = 0.0;
    double median_ms = 0.0;
    bool consistency_only = false;
};

struct HarnessOptions {
    std::size_t k_pos = 10, k_neg = 10, max_len = 30;
    bool consistency_only = false;  // drop the DFA-equality requirement
    std::optional<ExternalTool> synthesizer;
    std::optional<ExternalTool> fallback;
};

// Runs transregex over every record that carries a candidate (or that a
// synthesizer can seed) and classifies success as consistency with the
// examples plus DFA equivalence to the target.
inline HarnessReport run_harness(const std::vector<BenchmarkRecord>& records, const RepairConfig& cfg,
                                 const HarnessOptions& options = {},
                                 const Alphabet& alphabet = Alphabet::printable_ascii()) {
    if (records.empty()) throw Error("harness needs at least one record");
    Engine engine(alphabet, cfg.engine_budget);
    HarnessReport report;
    report.consistency_only = options.consistency_only;
    report.records = records.size();
    std::vector<std::int64_t> times;

    for (const BenchmarkRecord& rec : records) {
        HarnessRow row;
        row.id = rec.id;
        auto t0 = std::chrono::steady_clock::now();
        try {
            if (!rec.candidate && !(options.synthesizer && rec.description)) {
                row.error = "no candidate and no synthesizer";
                report.rows.push_back(std::move(row));
                continue;
            }
            row.attempted = true;
            RegexPtr target = parse(rec.target, alphabet);
            ExampleSet ex = materialize_examples(engine, rec, options.k_pos, options.k_neg,
                                                 options.max_len, cfg.seed ^ fnv1a(rec.id));
            TransInput input;
            input.candidate = rec.candidate;
            input.description = rec.description;
            RepairReport rr =
                transregex(input, ex, options.synthesizer, options.fallback, cfg, alphabet);
            row.via = rr.via;
            row.error = rr.error;
            row.outcome_regex = rr.regex;
            if (!rr.regex.empty()) {
                RegexPtr outcome = parse(rr.regex, alphabet);
                row.consistent = consistent(engine, outcome, ex);
                row.dfa_equal = engine.equivalent(outcome, target);
            }
            row.success = row.consistent && (options.consistency_only || row.dfa_equal);
        } catch (const Error& e) {
            row.error = e.what();
        }
        row.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
        if (row.attempted) {
            ++report.attempted;
            times.push_back(row.elapsed_ms);
            if (row.success) ++report.successes;
        }
        report.rows.push_back(std::move(row));
    }

    if (report.attempted > 0) {
        report.success_rate = static_cast<double>(report.successes) / static_cast<double>(report.attempted);
        std::int64_t sum = 0;
        for (auto t : times) sum += t;
        report.mean_ms = static_cast<double>(sum) / static_cast<double>(times.size());
        std::sort(times.begin(), times.end());
        std::size_t mid = times.size() / 2;
        report.median_ms = times.size() % 2 ? static_cast<double>(times[mid])
                                            : (static_cast<double>(times[mid - 1] + times[mid]) / 2.0);
    }
    return report;
}

}  // namespace regexmend
