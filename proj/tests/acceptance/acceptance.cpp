// Acceptance suite: runs every criterion end to end and prints one PASS/FAIL
// line each. Exit status is non-zero when any criterion fails.
//
// Criterion 8 drives the CLI binary; point REGEXMEND_CLI at it when the
// default build-tree locations do not apply.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "regexmend/json_io.hpp"
#include "regexmend/regexmend.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace regexmend;

namespace {

const Alphabet& ascii() {
    static Alphabet a = Alphabet::printable_ascii();
    return a;
}
Engine& eng() {
    static Engine e(ascii());
    return e;
}
RegexPtr rx(const std::string& t) { return parse(t, ascii()); }

struct Check {
    bool pass = true;
    std::string note;
    void fail(const std::string& why) {
        pass = false;
        if (!note.empty()) note += "; ";
        note += why;
    }
    void expect(bool cond, const std::string& why) {
        if (!cond) fail(why);
    }
};

RepairConfig acceptance_config() {
    RepairConfig cfg;
    cfg.max_iterations = 25;
    cfg.stage_time_budget = std::chrono::milliseconds(8000);
    cfg.global_time_budget = std::chrono::milliseconds(25000);
    return cfg;
}

// Fixed harness seed for the benchmark repair rows (criterion 2).
constexpr std::uint64_t kTableVSeed = 88;

// ---- criterion 1: vowel/digit end-to-end repair -----------------------------

void criterion1(Check& c) {
    auto t0 = std::chrono::steady_clock::now();
    ExampleSet ex = fixtures::vowel_examples(ascii());
    RepairReport rep = syncorr(rx(fixtures::kVowelCandidate), ex, acceptance_config());
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.expect(rep.repaired, "candidate was not repaired");
    if (rep.repaired) {
        c.expect(rep.final_fitness.is_one(), "repaired fitness is not 1");
        c.expect(eng().equivalent(rx(rep.regex), rx(fixtures::kVowelTarget)),
                 "result " + rep.regex + " is not DFA-equivalent to the target");
    }
    c.expect(secs <= 30.0, "took " + std::to_string(secs) + " s (> 30 s)");
    c.note += " result=" + rep.regex + " in " + std::to_string(secs) + " s";
}

// ---- criterion 2: benchmark repair rows under sampled examples --------------

void criterion2(Check& c) {
    struct Row {
        const char* id;
        const char* candidate;
        const char* target;
        bool must_succeed;
    };
    std::vector<Row> rows = {
        {"tv1", "([AEIOUaeiou].*[0-9].*){7,}", "[AEIOUaeiou].*[0-9]{7,}.*", true},
        {"tv2", "[A-Za-z]{2,3}[a-z]{2,3}[A-Z]{3,4}", "[A-Za-z]{2,3}[a-z]{3}[A-Z]{3,4}", true},
        {"tv3", "([A-Z]|[a-z]){1,}&.{6,8}&(.*([A-Z]|[a-z]).*)", ".{6,8}&(.*[A-Za-z].*)", true},
        // The fourth row needs a token outside every dictionary; a failure
        // (local optimum or an inequivalent f=1 regex) is the documented outcome.
        {"tv4", "[A-Za-z]{3,}[0-9]{3,}N[A-Za-z]{2,4}", "[A-Z]{3,}[0-9]{3,}(N|g)[A-Za-z]{2,4}", false},
    };
    RepairConfig cfg = acceptance_config();
    cfg.seed = kTableVSeed;
    for (const Row& row : rows) {
        BenchmarkRecord rec;
        rec.id = row.id;
        rec.target = row.target;
        ExampleSet ex = materialize_examples(eng(), rec, 10, 10, 30, cfg.seed ^ fnv1a(rec.id));
        RepairReport rep = syncorr(rx(row.candidate), ex, cfg);
        bool equal = rep.repaired && eng().equivalent(rx(rep.regex), rx(row.target));
        if (row.must_succeed) {
            c.expect(equal, std::string(row.id) + " not repaired to the ground truth (got " +
                                rep.regex + ")");
        } else {
            c.note += std::string(" ") + row.id + (equal ? "=unexpectedly-exact" : "=failed-as-documented");
        }
    }

    // The same three rows through the harness score 3/3.
    std::vector<BenchmarkRecord> fixture;
    for (std::size_t i = 0; i < 3; ++i) {
        BenchmarkRecord rec;
        rec.id = rows[i].id;
        rec.target = rows[i].target;
        rec.candidate = rows[i].candidate;
        fixture.push_back(std::move(rec));
    }
    HarnessReport hr = run_harness(fixture, cfg);
    c.expect(hr.successes == 3 && hr.attempted == 3,
             "harness scored " + std::to_string(hr.successes) + "/3");
}

// ---- criterion 3: preprocess golden trace ------------------------------------

void criterion3(Check& c) {
    RegexPtr r0 = rx("([AEIOUaeiou].*[0-9].*){7,}");
    for (int l : {1, 2}) {
        AbstractRegex a = preprocess(r0, l);
        c.expect(a.text() == "(<SR_VOW><SR_NUM>)<Q_{7,}>",
                 "l_max=" + std::to_string(l) + " gave " + a.text());
        c.expect(to_string(unpreprocess(a)) == "([AEIOUaeiou].*[0-9].*){7,}",
                 "round trip broke at l_max=" + std::to_string(l));
    }
    AbstractRegex a0 = preprocess(r0, 0);
    c.expect(a0.text() == "(<VOW><S><NUM><S>)<Q_{7,}>", "l_max=0 gave " + a0.text());
    c.expect(to_string(unpreprocess(a0)) == "([AEIOUaeiou].*[0-9].*){7,}", "round trip broke at l_max=0");
}

// ---- criterion 4: exhaustive matcher oracle ----------------------------------

// 127 strings over {a,b} with length <= 6, as a two-word bitset.
struct Lang {
    std::uint64_t lo = 0, hi = 0;
    friend Lang operator|(Lang a, Lang b) { return {a.lo | b.lo, a.hi | b.hi}; }
    friend Lang operator&(Lang a, Lang b) { return {a.lo & b.lo, a.hi & b.hi}; }
    friend bool operator==(Lang a, Lang b) { return a.lo == b.lo && a.hi == b.hi; }
    Lang complement() const { return {~lo, ~hi & ((1ull << 63) - 1)}; }
    void set(unsigned i) { (i < 64 ? lo : hi) |= 1ull << (i & 63); }
    bool test(unsigned i) const { return ((i < 64 ? lo : hi) >> (i & 63)) & 1; }
};

constexpr unsigned kOffsets[8] = {0, 1, 3, 7, 15, 31, 63, 127};

struct Enumerator {
    std::vector<std::vector<RegexPtr>> nodes;
    std::vector<std::vector<Lang>> langs;
    std::vector<std::array<std::uint8_t, 127>> cat;  // concat index table

    Enumerator() : nodes(8), langs(8), cat(127) {
        for (unsigned u = 0; u < 127; ++u) {
            unsigned lu = len_of(u), vu = u - kOffsets[lu];
            for (unsigned v = 0; v < 127; ++v) {
                unsigned lv = len_of(v), vv = v - kOffsets[lv];
                cat[u][v] = lu + lv <= 6
                                ? static_cast<std::uint8_t>(kOffsets[lu + lv] + ((vu << lv) | vv))
                                : 255;
            }
        }
    }

    static unsigned len_of(unsigned idx) {
        unsigned l = 0;
        while (kOffsets[l + 1] <= idx) ++l;
        return l;
    }

    Lang concat(Lang a, Lang b) const {
        Lang out;
        for (unsigned word = 0; word < 2; ++word) {
            std::uint64_t bits = word ? a.hi : a.lo;
            while (bits) {
                unsigned u = (word ? 64 : 0) + static_cast<unsigned>(__builtin_ctzll(bits));
                bits &= bits - 1;
                for (unsigned w2 = 0; w2 < 2; ++w2) {
                    std::uint64_t bits2 = w2 ? b.hi : b.lo;
                    while (bits2) {
                        unsigned v = (w2 ? 64 : 0) + static_cast<unsigned>(__builtin_ctzll(bits2));
                        bits2 &= bits2 - 1;
                        std::uint8_t t = cat[u][v];
                        if (t != 255) out.set(t);
                    }
                }
            }
        }
        return out;
    }

    Lang star(Lang k) const {
        Lang s;
        s.set(0);
        for (int i = 0; i < 7; ++i) {
            Lang next = s | concat(s, k);
            if (next == s) break;
            s = next;
        }
        return s;
    }

    void build_up_to(std::size_t max_size, const Alphabet& al) {
        Lang la, lb, leps;
        leps.set(0);
        la.set(kOffsets[1] + 0);
        lb.set(kOffsets[1] + 1);
        nodes[1] = {mk_empty(), mk_epsilon(), mk_literal('a'), mk_literal('b')};
        langs[1] = {Lang{}, leps, la, lb};
        (void)al;
        for (std::size_t n = 2; n <= max_size; ++n) {
            for (std::size_t i = 0; i < nodes[n - 1].size(); ++i) {
                nodes[n].push_back(mk_not(nodes[n - 1][i]));
                langs[n].push_back(langs[n - 1][i].complement());
                nodes[n].push_back(mk_repeat(nodes[n - 1][i], 0, kRepeatInf, QuantStyle::Star));
                langs[n].push_back(star(langs[n - 1][i]));
            }
            for (std::size_t ls = 1; ls + 1 < n; ++ls) {
                std::size_t rs = n - 1 - ls;
                for (std::size_t i = 0; i < nodes[ls].size(); ++i)
                    for (std::size_t j = 0; j < nodes[rs].size(); ++j) {
                        nodes[n].push_back(mk_concat(nodes[ls][i], nodes[rs][j]));
                        langs[n].push_back(concat(langs[ls][i], langs[rs][j]));
                        nodes[n].push_back(mk_alt(nodes[ls][i], nodes[rs][j]));
                        langs[n].push_back(langs[ls][i] | langs[rs][j]);
                        nodes[n].push_back(mk_and(nodes[ls][i], nodes[rs][j]));
                        langs[n].push_back(langs[ls][i] & langs[rs][j]);
                    }
            }
        }
    }
};

Lang dfa_language(const Dfa& d) {
    Lang out;
    int ba = d.block_of[static_cast<unsigned char>('a')];
    int bb = d.block_of[static_cast<unsigned char>('b')];
    std::function<void(std::uint32_t, unsigned, unsigned)> rec = [&](std::uint32_t s, unsigned len,
                                                                     unsigned val) {
        if (d.accepting[s]) out.set(kOffsets[len] + val);
        if (len == 6) return;
        rec(d.next[s][static_cast<std::size_t>(ba)], len + 1, val << 1);
        rec(d.next[s][static_cast<std::size_t>(bb)], len + 1, (val << 1) | 1);
    };
    rec(d.start, 0, 0);
    return out;
}

void criterion4(Check& c) {
    auto t0 = std::chrono::steady_clock::now();
    Alphabet tiny("ab");
    Engine e(tiny);
    Enumerator en;
    en.build_up_to(7, tiny);

    std::size_t checked = 0, mismatches = 0;
    std::string first_bad;
    auto verify = [&](const RegexPtr& r, Lang want) {
        ++checked;
        Lang got = dfa_language(e.compile(r));
        if (!(got == want) && ++mismatches == 1) first_bad = to_string(r);
    };

    for (std::size_t n = 1; n <= 7; ++n)
        for (std::size_t i = 0; i < en.nodes[n].size(); ++i) verify(en.nodes[n][i], en.langs[n][i]);

    // Size-8 trees are generated on the fly.
    for (std::size_t i = 0; i < en.nodes[7].size(); ++i) {
        verify(mk_not(en.nodes[7][i]), en.langs[7][i].complement());
        verify(mk_repeat(en.nodes[7][i], 0, kRepeatInf, QuantStyle::Star), en.star(en.langs[7][i]));
    }
    for (std::size_t ls = 1; ls <= 6; ++ls) {
        std::size_t rs = 7 - ls;
        for (std::size_t i = 0; i < en.nodes[ls].size(); ++i)
            for (std::size_t j = 0; j < en.nodes[rs].size(); ++j) {
                verify(mk_concat(en.nodes[ls][i], en.nodes[rs][j]),
                       en.concat(en.langs[ls][i], en.langs[rs][j]));
                verify(mk_alt(en.nodes[ls][i], en.nodes[rs][j]), en.langs[ls][i] | en.langs[rs][j]);
                verify(mk_and(en.nodes[ls][i], en.nodes[rs][j]), en.langs[ls][i] & en.langs[rs][j]);
            }
    }

    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.expect(mismatches == 0,
             std::to_string(mismatches) + " disagreements, first at " + first_bad);
    c.expect(secs <= 300.0, "took " + std::to_string(secs) + " s (> 5 min)");
    c.note += " " + std::to_string(checked) + " regexes x 127 strings in " + std::to_string(secs) + " s";
}

// ---- criterion 5: fitness against a counting oracle ---------------------------

void criterion5(Check& c) {
    Alphabet tiny("ab");
    Engine e(tiny);
    oracle::BoundedLang bl("ab", 6);
    oracle::RandomRegexOptions opt;
    std::mt19937_64 rng(505);
    auto word = [&](std::size_t maxLen) {
        std::string w;
        for (std::size_t j = rng() % (maxLen + 1); j > 0; --j) w.push_back((rng() & 1) ? 'a' : 'b');
        return w;
    };
    std::size_t done = 0;
    while (done < 1000) {
        RegexPtr r = oracle::random_regex(rng, tiny, opt, 1 + done % 8);
        std::set<std::string> pos, neg;
        for (int k = 0; k < 5; ++k) pos.insert(word(6));
        for (int k = 0; k < 5; ++k) {
            std::string w = word(6);
            if (!pos.count(w)) neg.insert(w);
        }
        std::vector<std::string> P(pos.begin(), pos.end()), N(neg.begin(), neg.end());
        ExampleSet ex(P, N, tiny);
        Fitness f = fitness(e, r, ex);
        const auto& lang = bl.language(r);
        std::int64_t tp = 0, tn = 0, fp = 0, fn = 0;
        for (const auto& w : P) lang.count(w) ? ++tp : ++fn;
        for (const auto& w : N) lang.count(w) ? ++fp : ++tn;
        if (f.num != tp + tn - fp - fn || f.den != std::int64_t(P.size() + N.size()) || f.tp != tp ||
            f.tn != tn || f.fp != fp || f.fn != fn) {
            c.fail("mismatch on " + to_string(r));
            return;
        }
        ++done;
    }

    ExampleSet fig2 = fixtures::vowel_examples(ascii());
    Fitness f_cand = fitness(eng(), rx(fixtures::kVowelCandidate), fig2);
    c.expect(f_cand.num == 0 && f_cand.den == 20, "candidate f is not 0");
    Fitness f_fixed = fitness(eng(), rx(fixtures::kVowelTarget), fig2);
    c.expect(f_fixed.is_one(), "repaired regex f is not 1");
    c.note += " 1000 instances exact";
}

// ---- criterion 6: equivalence vs bounded comparison ---------------------------

void criterion6(Check& c) {
    Alphabet tiny("ab");
    Engine e(tiny);
    oracle::BoundedLang bl("ab", 7);
    oracle::RandomRegexOptions opt;
    opt.max_bound = 2;
    std::mt19937_64 rng(606);
    std::size_t agree = 0, equal_pairs = 0;
    for (std::size_t i = 0; i < 500; ++i) {
        RegexPtr r1 = oracle::random_regex(rng, tiny, opt, 1 + i % 6);
        RegexPtr r2;
        switch (i % 4) {
            case 0: r2 = r1; break;                                   // identical
            case 1: r2 = mk_alt(r1, r1); break;                       // r|r
            case 2: r2 = mk_group(r1); break;                         // (r)
            default: r2 = oracle::random_regex(rng, tiny, opt, 1 + (i / 2) % 6); break;
        }
        bool eq = e.equivalent(r1, r2);
        bool bounded = bl.language(r1) == bl.language(r2);
        if (eq != bounded) {
            c.fail("disagreement on " + to_string(r1) + " vs " + to_string(r2));
            return;
        }
        ++agree;
        if (eq) ++equal_pairs;
    }
    c.expect(eng().equivalent(rx("a{1,}"), rx("aa*")), "a{1,} != aa*");
    c.expect(eng().equivalent(rx("[a-z]{3,3}"), rx("[a-z]{3}")), "[a-z]{3,3} != [a-z]{3}");
    c.note += " " + std::to_string(agree) + " pairs agree (" + std::to_string(equal_pairs) + " equal)";
}

// ---- criterion 7: generators -------------------------------------------------

void criterion7(Check& c) {
    std::vector<std::string> sources = {
        "[AEIOUaeiou].*[0-9]{7,}.*",
        "[A-Za-z]{2,3}[a-z]{3}[A-Z]{3,4}",
        ".{6,8}&(.*[A-Za-z].*)",
        "[A-Z]{3,}[0-9]{3,}(N|g)[A-Za-z]{2,4}",
        "(ab|cd){1,3}",
        "~(.*zz.*)&.{1,6}",
        "a?b*c+",
        "[0-9]+(\\.[0-9]{2})?",
        "x|yz{2,4}",
        "[a-f]{3}[0-9]",
    };
    std::size_t runs = 0;
    for (const auto& t : sources) {
        RegexPtr r = rx(t);
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            SampleResult pos = eng().sample_positive(r, 8, 30, seed);
            for (const auto& w : pos.strings)
                if (!eng().matches(r, w)) {
                    c.fail("positive sample " + w + " rejected by " + t);
                    return;
                }
            ++runs;
            SampleResult neg = eng().sample_negative(r, 8, 30, seed);
            for (const auto& w : neg.strings)
                if (eng().matches(r, w)) {
                    c.fail("negative sample " + w + " accepted by " + t);
                    return;
                }
            ++runs;
            // Reproducibility under the fixed seed.
            if (eng().sample_positive(r, 8, 30, seed).strings != pos.strings ||
                eng().sample_negative(r, 8, 30, seed).strings != neg.strings) {
                c.fail("sampling is not reproducible for " + t);
                return;
            }
        }
    }
    c.expect(runs == 200, "expected 200 seeded runs, got " + std::to_string(runs));

    MutationResult mut = make_invalid_pairs(sources, 10, 4242, ascii());
    for (const auto& p : mut.pairs) {
        if (validate(p.invalid, ascii())) {
            c.fail("mutation " + p.invalid + " is still valid");
            return;
        }
        if (oracle::edit_distance(p.invalid, p.valid) > 5) {
            c.fail("mutation " + p.invalid + " drifted more than 5 edits");
            return;
        }
    }
    c.note += " 200 sampling runs consistent, " + std::to_string(mut.pairs.size()) +
              " mutations all invalid";
}

// ---- criterion 8: CLI determinism ---------------------------------------------

std::string cli_path() {
    if (const char* env = std::getenv("REGEXMEND_CLI")) return env;
    for (const char* p : {"tools/regexmend", "./build/tools/regexmend", "../tools/regexmend"})
        if (access(p, X_OK) == 0) return p;
    throw Error("set REGEXMEND_CLI to the built CLI binary");
}

void strip_timing(nlohmann::ordered_json& j) {
    if (j.is_object()) {
        j.erase("elapsed_ms");
        j.erase("mean_ms");
        j.erase("median_ms");
        for (auto& [k, v] : j.items()) strip_timing(v);
    } else if (j.is_array()) {
        for (auto& v : j) strip_timing(v);
    }
}

void criterion8(Check& c) {
    std::string cli = cli_path();
    std::string dir = "/tmp/regexmend_acceptance_" + std::to_string(getpid());
    std::string examples = dir + "_fig2.json";
    std::string records = dir + "_golden.jsonl";
    {
        OrderedJson j;
        j["positive"] = fixtures::vowel_positives();
        j["negative"] = fixtures::vowel_negatives();
        std::ofstream(examples) << j.dump();
        std::ofstream(records) << fixtures::golden_jsonl();
    }
    auto run = [&](const std::string& args) {
        CommandResult r = run_command(cli + " " + args, "", std::chrono::milliseconds(120000));
        nlohmann::ordered_json j = nlohmann::ordered_json::parse(r.output, nullptr, false);
        if (j.is_discarded()) throw Error("CLI emitted no JSON for: " + args);
        strip_timing(j);
        return j.dump();
    };

    std::string base = "repair --regex '([AEIOUaeiou].*[0-9].*){7,}' --examples " + examples +
                       " --seed 7 --threads ";
    std::string r1 = run(base + "1");
    std::string r2 = run(base + "4");
    std::string r3 = run(base + "1");
    c.expect(r1 == r2, "cmd_repair differs between 1 and 4 worker threads");
    c.expect(r1 == r3, "cmd_repair differs between identical runs");

    std::string bbase = "bench " + records + " --seed 88 --threads ";
    std::string b1 = run(bbase + "1");
    std::string b2 = run(bbase + "3");
    std::string b3 = run(bbase + "1");
    c.expect(b1 == b2, "cmd_bench differs between 1 and 3 worker threads");
    c.expect(b1 == b3, "cmd_bench differs between identical runs");
}

// ---- criterion 9: soundness over a randomized corpus + golden fixture ---------

std::string mutate_valid(const std::string& target, std::mt19937_64& rng, const Alphabet& al) {
    const std::string& chars = al.characters();
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::string s = target;
        std::size_t edits = 1 + rng() % 2;
        for (std::size_t e = 0; e < edits; ++e) {
            switch (rng() % 3) {
                case 0:
                    s.insert(s.begin() + static_cast<std::ptrdiff_t>(rng() % (s.size() + 1)),
                             chars[rng() % chars.size()]);
                    break;
                case 1:
                    if (!s.empty()) s.erase(s.begin() + static_cast<std::ptrdiff_t>(rng() % s.size()));
                    break;
                default:
                    if (!s.empty()) s[rng() % s.size()] = chars[rng() % chars.size()];
                    break;
            }
        }
        if (validate(s, al)) return s;
    }
    return target;
}

void criterion9(Check& c) {
    std::vector<std::string> targets = {
        "[a-z]{2,4}X[0-9]+",          "(ab|cd){1,3}",      "[A-Z][a-z]*[0-9]{2}",
        ".{3,5}&(.*[0-9].*)",         "abc|a[0-9]{2,}",    "[AEIOUaeiou][0-9]{2,5}",
        "x+y?z{2}",                   "[0-9]{3}-[0-9]{4}", "~(.*q.*)&[a-z]{1,4}",
        "(0|1){4,8}",
    };
    RepairConfig cfg;
    cfg.max_iterations = 6;
    cfg.stage_time_budget = std::chrono::milliseconds(1500);
    cfg.global_time_budget = std::chrono::milliseconds(4500);

    std::mt19937_64 rng(909);
    std::size_t repaired_count = 0;
    for (std::size_t i = 0; i < 200; ++i) {
        const std::string& target_text = targets[i % targets.size()];
        RegexPtr target = rx(target_text);
        std::string cand_text = mutate_valid(target_text, rng, ascii());
        ExampleSet ex = [&] {
            SampleResult pos = eng().sample_positive(target, 10, 25, 1000 + i);
            SampleResult neg = eng().sample_negative(target, 10, 25, 2000 + i);
            return ExampleSet(pos.strings, neg.strings, ascii());
        }();
        RepairReport rep = syncorr(rx(cand_text), ex, cfg);
        if (rep.repaired) {
            ++repaired_count;
            if (!consistent(eng(), rx(rep.regex), ex)) {
                c.fail("case " + std::to_string(i) + ": repaired " + rep.regex +
                       " is not consistent");
                return;
            }
        }
    }
    c.note += " " + std::to_string(repaired_count) + "/200 repaired, all consistent";

    // The harness classification must match the hand-checked fixture.
    std::istringstream in(fixtures::golden_jsonl());
    LoadResult loaded = load_benchmark(in);
    HarnessReport rep = run_harness(loaded.records, acceptance_config());
    struct Expected {
        bool attempted, consistent, success;
    };
    std::vector<Expected> want = {
        {true, true, true},    // g1 candidate == target
        {true, true, true},    // g2 repaired
        {true, false, false},  // g3 unrepaired
        {true, true, false},   // g4 consistent, not equal
        {false, false, false}, // g5 no candidate
    };
    for (std::size_t i = 0; i < want.size(); ++i) {
        if (rep.rows[i].attempted != want[i].attempted || rep.rows[i].consistent != want[i].consistent ||
            rep.rows[i].success != want[i].success) {
            c.fail("golden row " + rep.rows[i].id + " classified differently than the hand check");
            return;
        }
    }
    c.expect(rep.successes == 2 && rep.attempted == 4, "golden aggregates off");
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<void(Check&)> fn;
    };
    std::vector<Criterion> criteria = {
        {1, "vowel/digit end-to-end repair", criterion1},
        {2, "benchmark repair rows under sampled examples (seed 88)", criterion2},
        {3, "preprocess golden trace", criterion3},
        {4, "exhaustive matcher oracle (size <= 8, len <= 6)", criterion4},
        {5, "fitness counting oracle, exact arithmetic", criterion5},
        {6, "equivalence vs bounded language comparison", criterion6},
        {7, "generator consistency and invalid mutations", criterion7},
        {8, "CLI determinism across runs and worker counts", criterion8},
        {9, "repair soundness and golden-fixture classification", criterion9},
    };

    int failures = 0;
    for (auto& cr : criteria) {
        Check c;
        auto t0 = std::chrono::steady_clock::now();
        try {
            cr.fn(c);
        } catch (const std::exception& e) {
            c.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] C%d %s (%.1f s)%s%s\n", c.pass ? "PASS" : "FAIL", cr.id, cr.name, secs,
                    c.note.empty() ? "" : " --", c.note.c_str());
        std::fflush(stdout);
        if (!c.pass) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
