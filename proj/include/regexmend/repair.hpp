#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "regexmend/neighborhood.hpp"
#include "regexmend/parallel.hpp"
#include "regexmend/subprocess.hpp"

namespace regexmend {

struct RepairConfig {
    std::vector<int> l_max_range = {2, 1, 0};
    int max_iterations = 50;                                   // per l_max stage
    std::chrono::milliseconds stage_time_budget{10000};
    std::chrono::milliseconds global_time_budget{60000};
    EngineBudget engine_budget{};
    std::size_t neighborhood_cap = 20000;
    std::uint64_t seed = 0;
    unsigned threads = 0;  // 0: REGEXMEND_THREADS env, then hardware count
    std::vector<TransformationKind> kinds = all_transformations();
    bool include_alias_candidates = false;

    void check() const {
        if (max_iterations < 1 || stage_time_budget.count() <= 0 || global_time_budget.count() <= 0)
            throw Error("repair budgets must be positive");
        int prev = 3;
        if (l_max_range.empty()) throw Error("l_max_range must be non-empty");
        for (int l : l_max_range) {
            if (l < 0 || l > 2 || l >= prev) throw Error("l_max_range must descend within {2,1,0}");
            prev = l;
        }
    }
};

struct TrajectoryPoint {
    int l_max = 0;
    int iteration = 0;
    Fitness f;
    std::string regex;
};

struct AcceptedStep {
    TransformationKind kind;
    std::size_t site = 0;
    std::ptrdiff_t candidate = -1;
    std::string detail;
    std::string regex;
};

struct StageSummary {
    int l_max = 0;
    int iterations = 0;
    std::string status;  // repaired | local_optimum | iteration_cap | timeout | engine_budget
    std::int64_t elapsed_ms = 0;
};

struct RepairReport {
    bool repaired = false;
    std::string regex;   // the repaired regex, or the original when unrepaired
    std::string origin;
    Fitness final_fitness;
    std::vector<TrajectoryPoint> trajectory;
    std::vector<AcceptedStep> steps;
    std::vector<StageSummary> stages;
    std::string via;     // input | syncorr | fallback | none
    std::optional<bool> success_vs_target;
    std::string error;
    std::int64_t elapsed_ms = 0;
};

// Pluggable synthesizer/repairer subprocess. The request is one JSON object
// {regex?, description?, positive, negative} on stdin; the reply is either a
// bare regex line or {"regex": "..."} on stdout.
struct ExternalTool {
    std::string role;  // "synthesizer" | "repairer"
    std::string command;
    std::chrono::milliseconds timeout{30000};

    void check() const {
        if (timeout.count() <= 0) throw Error("tool timeout must be positive");
        if (command.empty()) throw Error("tool command must be non-empty");
    }
};

struct ToolRequest {
    std::optional<std::string> regex;
    std::optional<std::string> description;
    const ExampleSet* examples = nullptr;
};

inline RegexPtr invoke_external(const ExternalTool& tool, const ToolRequest& request,
                                const Alphabet& alphabet) {
    tool.check();
    nlohmann::json j;
    if (request.regex) j["regex"] = *request.regex;
    if (request.description) j["description"] = *request.description;
    j["positive"] = request.examples ? request.examples->positive() : std::vector<std::string>{};
    j["negative"] = request.examples ? request.examples->negative() : std::vector<std::string>{};

    CommandResult res = run_command(tool.command, j.dump() + "\n", tool.timeout);
    if (res.timed_out)
        throw ToolError(tool.role + " timed out after " + std::to_string(tool.timeout.count()) + " ms");
    if (res.exit_code != 0)
        throw ToolError(tool.role + " exited with status " + std::to_string(res.exit_code));

    std::string text;
    auto parsed = nlohmann::json::parse(res.output, nullptr, false);
    if (parsed.is_object() && parsed.contains("regex") && parsed["regex"].is_string()) {
        text = parsed["regex"].get<std::string>();
    } else {
        std::size_t b = res.output.find_first_not_of(" \t\r\n");
        if (b == std::string::npos) throw ToolError(tool.role + " produced no output");
        std::size_t e = res.output.find('\n', b);
        text = res.output.substr(b, e == std::string::npos ? e : e - b);
        while (!text.empty() && (text.back() == '\r' || text.back() == ' ')) text.pop_back();
    }
    try {
        return parse(text, alphabet);
    } catch (const Error& err) {
        throw ToolError(tool.role + " returned an invalid regex \"" + text + "\": " + err.what());
    }
}

namespace detail {

struct EvaluatedMember {
    Fitness f;
    RegexPtr concrete;
    std::string text;
    std::size_t size = 0;
    bool ok = false;
};

// Fitness fan-out over the neighborhood; engine failures score -1 so one
// pathological neighbor cannot abort the search.
inline std::vector<EvaluatedMember> evaluate_members(const Engine& engine, const Neighborhood& nb,
                                                     const ExampleSet& ex, unsigned threads) {
    std::vector<EvaluatedMember> out(nb.members.size());
    parallel_for(nb.members.size(), threads, [&](std::size_t i) {
        EvaluatedMember& m = out[i];
        try {
            m.concrete = unpreprocess(nb.members[i].abstract);
            m.text = to_string(m.concrete);
            m.size = ast_size(m.concrete);
            m.f = fitness(engine, m.concrete, ex);
            m.ok = true;
        } catch (...) {
            m.f.num = -1;
            m.f.den = 1;
            m.ok = false;
        }
    });
    return out;
}

// argmax by f, then smaller AST, then lexicographically smaller text.
inline std::ptrdiff_t select_best(const std::vector<EvaluatedMember>& ms) {
    std::ptrdiff_t best = -1;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (!ms[i].ok) continue;
        if (best < 0) {
            best = static_cast<std::ptrdiff_t>(i);
            continue;
        }
        const EvaluatedMember& b = ms[static_cast<std::size_t>(best)];
        const EvaluatedMember& m = ms[i];
        if (m.f > b.f ||
            (m.f == b.f && (m.size < b.size || (m.size == b.size && m.text < b.text))))
            best = static_cast<std::ptrdiff_t>(i);
    }
    return best;
}

}  // namespace detail

// Neighborhood-search repair: for each l_max (descending), hill-climb from
// preprocess(r0, l_max), accepting the best strictly-improving neighbor until
// f reaches 1 or a stop condition (local optimum, iteration cap, time budget).
inline RepairReport syncorr(const RegexPtr& r0, const ExampleSet& ex, const RepairConfig& cfg,
                            const Alphabet& alphabet = Alphabet::printable_ascii()) {
    cfg.check();
    Engine engine(alphabet, cfg.engine_budget);
    auto t0 = std::chrono::steady_clock::now();
    auto global_deadline = t0 + cfg.global_time_budget;
    auto elapsed_ms = [](auto since) {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                     since)
            .count();
    };

    RepairReport report;
    report.origin = to_string(r0);
    report.regex = report.origin;
    report.via = "none";

    Fitness f0;
    bool f0_ok = true;
    try {
        f0 = fitness(engine, r0, ex);
    } catch (const BudgetExceeded&) {
        f0_ok = false;
    } catch (const QuantifierTooLarge&) {
        f0_ok = false;
    }
    if (!f0_ok) {
        // The origin itself is beyond the engine budget; every stage needs
        // f(r) for the hill-climb comparison, so each fails.
        for (int l_max : cfg.l_max_range)
            report.stages.push_back({l_max, 0, "engine_budget", 0});
        report.elapsed_ms = elapsed_ms(t0);
        return report;
    }
    report.final_fitness = f0;
    if (f0.is_one()) {
        report.repaired = true;
        report.via = "input";
        report.trajectory.push_back({cfg.l_max_range.front(), 0, f0, report.origin});
        report.elapsed_ms = elapsed_ms(t0);
        return report;
    }

    NeighborhoodOptions nopt;
    nopt.kinds = cfg.kinds;
    nopt.cap = cfg.neighborhood_cap;
    nopt.include_alias_candidates = cfg.include_alias_candidates;

    for (int l_max : cfg.l_max_range) {
        auto stage_start = std::chrono::steady_clock::now();
        auto stage_deadline = std::min(stage_start + cfg.stage_time_budget, global_deadline);
        StageSummary stage;
        stage.l_max = l_max;
        stage.status = "local_optimum";

        RegexPtr cur = r0;
        Fitness f_cur = f0;
        try {
            for (;;) {
                if (stage.iterations >= cfg.max_iterations) {
                    stage.status = "iteration_cap";
                    break;
                }
                if (std::chrono::steady_clock::now() >= stage_deadline) {
                    stage.status = "timeout";
                    break;
                }
                AbstractRegex abs = preprocess(cur, l_max);
                Neighborhood nb = neighbors(engine, abs, ex, nopt);
                ++stage.iterations;
                if (nb.members.empty()) break;

                std::vector<detail::EvaluatedMember> ms =
                    detail::evaluate_members(engine, nb, ex, cfg.threads);
                std::ptrdiff_t best = detail::select_best(ms);
                if (best < 0) break;
                const detail::EvaluatedMember& bm = ms[static_cast<std::size_t>(best)];
                const NeighborMember& origin_m = nb.members[static_cast<std::size_t>(best)];
                if (!(bm.f > f_cur)) break;  // local maximum

                report.trajectory.push_back({l_max, stage.iterations, bm.f, bm.text});
                report.steps.push_back(
                    {origin_m.kind, origin_m.site, origin_m.candidate, origin_m.detail, bm.text});
                if (bm.f.is_one()) {
                    report.repaired = true;
                    report.regex = bm.text;
                    report.final_fitness = bm.f;
                    report.via = "syncorr";
                    stage.status = "repaired";
                    stage.elapsed_ms = elapsed_ms(stage_start);
                    report.stages.push_back(stage);
                    report.elapsed_ms = elapsed_ms(t0);
                    if (!consistent(engine, bm.concrete, ex))
                        throw Error("internal: repaired regex is not consistent");
                    return report;
                }
                cur = bm.concrete;
                f_cur = bm.f;
                report.final_fitness = bm.f;
            }
        } catch (const BudgetExceeded&) {
            stage.status = "engine_budget";
        } catch (const QuantifierTooLarge&) {
            stage.status = "engine_budget";
        }
        stage.elapsed_ms = elapsed_ms(stage_start);
        report.stages.push_back(stage);
        if (std::chrono::steady_clock::now() >= global_deadline) break;
    }

    report.regex = report.origin;
    report.elapsed_ms = elapsed_ms(t0);
    return report;
}

struct TransInput {
    std::optional<std::string> candidate;     // a concrete regex to repair
    std::optional<std::string> description;   // natural-language task, for the synthesizer
};

// The full pipeline: obtain a candidate (directly or via the synthesizer),
// return it when already consistent, otherwise repair with syncorr, then
// hand the still-broken regex to the fallback repairer when configured.
inline RepairReport transregex(const TransInput& input, const ExampleSet& ex,
                               const std::optional<ExternalTool>& synthesizer,
                               const std::optional<ExternalTool>& fallback, const RepairConfig& cfg,
                               const Alphabet& alphabet = Alphabet::printable_ascii()) {
    cfg.check();
    Engine engine(alphabet, cfg.engine_budget);
    auto t0 = std::chrono::steady_clock::now();

    RepairReport report;
    RegexPtr r0;
    if (input.candidate) {
        r0 = parse(*input.candidate, alphabet);
    } else if (synthesizer) {
        try {
            ToolRequest req;
            req.description = input.description;
            req.examples = &ex;
            r0 = invoke_external(*synthesizer, req, alphabet);
        } catch (const ToolError& e) {
            report.error = std::string("SynthesizerFailed: ") + e.what();
            report.via = "none";
            return report;
        }
    } else {
        throw Error("transregex needs a candidate regex or a synthesizer tool");
    }

    report = syncorr(r0, ex, cfg, alphabet);
    if (report.repaired) return report;

    if (fallback) {
        try {
            ToolRequest req;
            req.regex = report.regex;  // syncorr returns the original on failure
            req.description = input.description;
            req.examples = &ex;
            RegexPtr fixed = invoke_external(*fallback, req, alphabet);
            if (consistent(engine, fixed, ex)) {
                report.repaired = true;
                report.regex = to_string(fixed);
                report.final_fitness = fitness(engine, fixed, ex);
                report.via = "fallback";
            } else {
                report.error = "FallbackFailed: output is inconsistent with the examples";
            }
        } catch (const ToolError& e) {
            report.error = std::string("FallbackFailed: ") + e.what();
        }
    }
    report.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count();
    return report;
}

}  // namespace regexmend
