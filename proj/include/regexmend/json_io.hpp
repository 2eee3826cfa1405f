#pragma once

#include <json.hpp>

#include "regexmend/corpus.hpp"

namespace regexmend {

using OrderedJson = nlohmann::ordered_json;

inline OrderedJson fitness_to_json(const Fitness& f) {
    OrderedJson j;
    j["num"] = f.num;
    j["den"] = f.den;
    j["value"] = f.approx();
    j["tp"] = f.tp;
    j["tn"] = f.tn;
    j["fp"] = f.fp;
    j["fn"] = f.fn;
    return j;
}

inline OrderedJson examples_to_json(const ExampleSet& ex) {
    OrderedJson j;
    j["positive"] = ex.positive();
    j["negative"] = ex.negative();
    return j;
}

inline ExampleSet examples_from_json(const nlohmann::json& j, const Alphabet& alphabet) {
    if (!j.is_object() || !j.contains("positive") || !j.contains("negative"))
        throw Error("examples file must hold {\"positive\": [...], \"negative\": [...]}");
    return ExampleSet(j["positive"].get<std::vector<std::string>>(),
                      j["negative"].get<std::vector<std::string>>(), alphabet);
}

inline TransformationKind transformation_from_name(const std::string& name) {
    for (TransformationKind k : all_transformations())
        if (name == transformation_name(k)) return k;
    throw Error("unknown transformation \"" + name + "\"");
}

// Config files carry any subset of the RepairConfig fields.
inline RepairConfig config_from_json(const nlohmann::json& j) {
    RepairConfig cfg;
    if (!j.is_object()) throw Error("config must be a JSON object");
    if (j.contains("l_max_range")) j["l_max_range"].get_to(cfg.l_max_range);
    if (j.contains("max_iterations")) cfg.max_iterations = j["max_iterations"].get<int>();
    if (j.contains("stage_time_budget_ms"))
        cfg.stage_time_budget = std::chrono::milliseconds(j["stage_time_budget_ms"].get<std::int64_t>());
    if (j.contains("global_time_budget_ms"))
        cfg.global_time_budget = std::chrono::milliseconds(j["global_time_budget_ms"].get<std::int64_t>());
    if (j.contains("max_states") || j.contains("max_quantifier_bound"))
        cfg.engine_budget = EngineBudget(j.value("max_states", std::size_t{10000}),
                                         j.value("max_quantifier_bound", std::uint32_t{1000}));
    if (j.contains("neighborhood_cap")) cfg.neighborhood_cap = j["neighborhood_cap"].get<std::size_t>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("threads")) cfg.threads = j["threads"].get<unsigned>();
    if (j.contains("include_alias_candidates"))
        cfg.include_alias_candidates = j["include_alias_candidates"].get<bool>();
    if (j.contains("transformations")) {
        cfg.kinds.clear();
        for (const auto& name : j["transformations"]) cfg.kinds.push_back(transformation_from_name(name));
    }
    cfg.check();
    return cfg;
}

inline OrderedJson report_to_json(const RepairReport& r) {
    OrderedJson j;
    j["outcome"] = r.repaired ? "repaired" : "unrepaired";
    j["regex"] = r.regex;
    j["origin"] = r.origin;
    j["via"] = r.via;
    j["fitness"] = fitness_to_json(r.final_fitness);
    OrderedJson traj = OrderedJson::array();
    for (const auto& p : r.trajectory) {
        OrderedJson t;
        t["l_max"] = p.l_max;
        t["iteration"] = p.iteration;
        t["f_num"] = p.f.num;
        t["f_den"] = p.f.den;
        t["regex"] = p.regex;
        traj.push_back(std::move(t));
    }
    j["trajectory"] = std::move(traj);
    OrderedJson steps = OrderedJson::array();
    for (const auto& s : r.steps) {
        OrderedJson t;
        t["transformation"] = transformation_name(s.kind);
        t["site"] = s.site;
        t["candidate"] = s.candidate;
        t["detail"] = s.detail;
        t["regex"] = s.regex;
        steps.push_back(std::move(t));
    }
    j["steps"] = std::move(steps);
    OrderedJson stages = OrderedJson::array();
    for (const auto& s : r.stages) {
        OrderedJson t;
        t["l_max"] = s.l_max;
        t["iterations"] = s.iterations;
        t["status"] = s.status;
        t["elapsed_ms"] = s.elapsed_ms;
        stages.push_back(std::move(t));
    }
    j["stages"] = std::move(stages);
    if (r.success_vs_target) j["success_vs_target"] = *r.success_vs_target;
    if (!r.error.empty()) j["error"] = r.error;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

inline OrderedJson harness_to_json(const HarnessReport& h) {
    OrderedJson j;
    OrderedJson rows = OrderedJson::array();
    for (const auto& r : h.rows) {
        OrderedJson t;
        t["id"] = r.id;
        t["attempted"] = r.attempted;
        t["consistent"] = r.consistent;
        t["dfa_equal"] = r.dfa_equal;
        t["success"] = r.success;
        t["regex"] = r.outcome_regex;
        t["via"] = r.via;
        if (!r.error.empty()) t["error"] = r.error;
        t["elapsed_ms"] = r.elapsed_ms;
        rows.push_back(std::move(t));
    }
    j["rows"] = std::move(rows);
    OrderedJson agg;
    agg["records"] = h.records;
    agg["attempted"] = h.attempted;
    agg["successes"] = h.successes;
    agg["success_rate"] = h.success_rate;
    agg["mean_ms"] = h.mean_ms;
    agg["median_ms"] = h.median_ms;
    agg["consistency_only"] = h.consistency_only;
    j["aggregate"] = std::move(agg);
    return j;
}

// Fixed-width text rendering of the harness report.
inline std::string harness_to_table(const HarnessReport& h) {
    auto pad = [](std::string s, std::size_t w) {
        if (s.size() < w) s.append(w - s.size(), ' ');
        return s;
    };
    std::size_t idw = 2;
    for (const auto& r : h.rows) idw = std::max(idw, r.id.size());
    std::string out = pad("id", idw) + "  consistent  dfa_equal  success  ms\n";
    for (const auto& r : h.rows) {
        if (!r.attempted) {
            out += pad(r.id, idw) + "  (skipped: " + r.error + ")\n";
            continue;
        }
        out += pad(r.id, idw) + "  " + pad(r.consistent ? "yes" : "no", 10) + "  " +
               pad(r.dfa_equal ? "yes" : "no", 9) + "  " + pad(r.success ? "yes" : "no", 7) + "  " +
               std::to_string(r.elapsed_ms) + "\n";
    }
    out += "success " + std::to_string(h.successes) + "/" + std::to_string(h.attempted) + "\n";
    return out;
}

}  // namespace regexmend
