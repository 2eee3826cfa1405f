#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "regexmend/ast.hpp"
#include "regexmend/parse.hpp"

namespace regexmend {

struct EngineBudget {
    std::size_t max_states = 10000;
    std::uint32_t max_quantifier_bound = 1000;

    EngineBudget() = default;
    EngineBudget(std::size_t states, std::uint32_t quant) : max_states(states), max_quantifier_bound(quant) {
        if (max_states < 1 || max_quantifier_bound < 1) throw Error("engine budget fields must be >= 1");
    }
};

// Deterministic automaton over a partition of the alphabet into character
// blocks. Transitions are total over states x blocks.
struct Dfa {
    std::uint32_t start = 0;
    std::vector<bool> accepting;
    std::vector<std::string> blocks;            // disjoint char sets covering the alphabet
    std::array<int, 256> block_of{};            // char -> block index, -1 outside the alphabet
    std::vector<std::vector<std::uint32_t>> next;  // [state][block]

    std::size_t state_count() const { return accepting.size(); }

    // Runs a word; throws AlphabetViolation on foreign characters.
    bool accepts(std::string_view w) const {
        std::uint32_t s = start;
        for (char c : w) {
            int b = block_of[static_cast<unsigned char>(c)];
            if (b < 0)
                throw AlphabetViolation("character '" + std::string(1, c) + "' is outside the alphabet");
            s = next[s][static_cast<std::size_t>(b)];
        }
        return accepting[s];
    }
};

struct SampleResult {
    std::vector<std::string> strings;
    // True when the language holds fewer than the requested number of
    // distinct members within the length bound; `strings` is then exhaustive.
    bool exhausted = false;
};

// Matching, DFA construction, equivalence and sampling for L(r), built on
// character derivatives extended compositionally over & and ~.
class Engine {
public:
    explicit Engine(Alphabet alphabet = Alphabet::printable_ascii(), EngineBudget budget = {})
        : alpha_(std::move(alphabet)), budget_(budget) {}

    const Alphabet& alphabet() const { return alpha_; }
    const EngineBudget& budget() const { return budget_; }

    // ---- membership ----------------------------------------------------

    bool matches(const RegexPtr& r, std::string_view w) const {
        alpha_.require_all(w, "matches");
        check_quantifiers(r);
        RegexPtr d = normalize(r);
        for (char c : w) {
            d = derive(d, c);
            if (d->kind == RegexKind::Empty) return false;
            guard_growth(d);
        }
        return nullable(d);
    }

    // Normalized derivative: L(result) = { w | c·w ∈ L(r) }.
    RegexPtr derivative(const RegexPtr& r, char c) const {
        alpha_.require(c, "derivative");
        return derive(normalize(r), c);
    }

    // Engine-canonical form of r: groups stripped, classes canonicalized,
    // similarity rules (ACI for | and &, absorption of [] and ()) applied.
    RegexPtr normalize(const RegexPtr& r) const {
        switch (r->kind) {
            case RegexKind::Empty:
            case RegexKind::Epsilon:
            case RegexKind::Literal:
            case RegexKind::Const:
                return r->kind == RegexKind::Const && r->text.size() == 1 ? mk_literal(r->text[0]) : r;
            case RegexKind::CharClass:
                return mk_class_from_bits(r->cls, alpha_);
            case RegexKind::Group:
                return normalize(r->child);
            case RegexKind::Concat:
                return s_concat(normalize(r->left), normalize(r->right));
            case RegexKind::Alt:
                return s_alt(normalize(r->left), normalize(r->right));
            case RegexKind::And:
                return s_and(normalize(r->left), normalize(r->right));
            case RegexKind::Not:
                return s_not(normalize(r->child));
            case RegexKind::Repeat:
                return s_repeat(normalize(r->child), r->min, r->max);
        }
        throw Error("unreachable");
    }

    static bool nullable(const RegexPtr& r) {
        switch (r->kind) {
            case RegexKind::Empty: return false;
            case RegexKind::Epsilon: return true;
            case RegexKind::Literal: return false;
            case RegexKind::CharClass: return false;
            case RegexKind::Const: return false;
            case RegexKind::Concat: return nullable(r->left) && nullable(r->right);
            case RegexKind::Alt: return nullable(r->left) || nullable(r->right);
            case RegexKind::And: return nullable(r->left) && nullable(r->right);
            case RegexKind::Not: return !nullable(r->child);
            case RegexKind::Repeat: return r->min == 0 || nullable(r->child);
            case RegexKind::Group: return nullable(r->child);
        }
        return false;
    }

    // ---- DFA construction ----------------------------------------------

    Dfa compile(const RegexPtr& r) const { return compile_with_blocks(r, minterm_blocks({r})); }

    // Language equality via union-find bisimulation over the product of the
    // two DFAs, built on the joint refinement of their partitions.
    bool equivalent(const RegexPtr& r1, const RegexPtr& r2) const {
        std::vector<std::string> blocks = minterm_blocks({r1, r2});
        Dfa a = compile_with_blocks(r1, blocks);
        Dfa b = compile_with_blocks(r2, blocks);

        std::size_t n = a.state_count() + b.state_count();
        std::vector<std::uint32_t> parent(n);
        for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<std::uint32_t>(i);
        auto find = [&](std::uint32_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        auto accepting = [&](std::uint32_t x) {
            return x < a.state_count() ? a.accepting[x] : b.accepting[x - a.state_count()];
        };
        auto step = [&](std::uint32_t x, std::size_t blk) {
            return x < a.state_count()
                       ? a.next[x][blk]
                       : static_cast<std::uint32_t>(b.next[x - a.state_count()][blk] + a.state_count());
        };

        std::vector<std::pair<std::uint32_t, std::uint32_t>> todo;
        auto merge = [&](std::uint32_t x, std::uint32_t y) {
            x = find(x);
            y = find(y);
            if (x == y) return;
            parent[x] = y;
            todo.emplace_back(x, y);
        };
        merge(a.start, static_cast<std::uint32_t>(b.start + a.state_count()));
        while (!todo.empty()) {
            auto [x, y] = todo.back();
            todo.pop_back();
            if (accepting(x) != accepting(y)) return false;
            for (std::size_t blk = 0; blk < blocks.size(); ++blk) merge(step(x, blk), step(y, blk));
        }
        return true;
    }

    static bool is_empty(const Dfa& d) {
        std::vector<std::uint32_t> dist = distances_to_accept(d);
        return dist[d.start] == kUnreachable;
    }

    // ---- random example generation --------------------------------------

    // Draws k distinct members of L(r) with length <= max_len. The walk picks
    // a feasible target length, then steps uniformly over productive
    // transitions (those from which an accepting state is reachable in
    // exactly the remaining number of characters). Deterministic per seed.
    SampleResult sample_positive(const RegexPtr& r, std::size_t k, std::size_t max_len,
                                 std::uint64_t seed) const {
        return sample(compile(r), k, max_len, seed);
    }

    // Same walk on the complement automaton: k distinct strings outside L(r).
    // Half the target lengths are drawn from the neighborhood of L(r)'s own
    // member lengths, so the negatives include near-misses and not only junk.
    SampleResult sample_negative(const RegexPtr& r, std::size_t k, std::size_t max_len,
                                 std::uint64_t seed) const {
        Dfa nd = compile(mk_not(r));
        std::vector<char> positive_accepting(nd.state_count());
        for (std::size_t s = 0; s < nd.state_count(); ++s) positive_accepting[s] = !nd.accepting[s];
        std::vector<std::vector<char>> pos_exact = exact_reach(nd, positive_accepting, max_len);
        std::vector<char> near(max_len + 1, 0);
        for (std::size_t l = 0; l <= max_len; ++l) {
            if (!pos_exact[l][nd.start]) continue;
            near[l] = 1;
            if (l > 0) near[l - 1] = 1;
            if (l + 1 <= max_len) near[l + 1] = 1;
        }
        std::vector<std::size_t> near_lengths;
        for (std::size_t l = 0; l <= max_len; ++l)
            if (near[l]) near_lengths.push_back(l);
        return sample(nd, k, max_len, seed, near_lengths);
    }

    SampleResult sample(const Dfa& d, std::size_t k, std::size_t max_len, std::uint64_t seed,
                        const std::vector<std::size_t>& preferred_lengths = {}) const {
        if (is_empty(d)) throw EmptyLanguage("language is empty");
        if (k == 0) return {};

        std::vector<char> accepting(d.accepting.begin(), d.accepting.end());
        std::vector<std::vector<char>> exact = exact_reach(d, accepting, max_len);

        std::vector<std::size_t> lengths;
        for (std::size_t l = 0; l <= max_len; ++l)
            if (exact[l][d.start]) lengths.push_back(l);
        std::vector<std::size_t> near;
        for (std::size_t l : preferred_lengths)
            if (l <= max_len && exact[l][d.start]) near.push_back(l);

        std::uint64_t total = count_members(d, max_len);
        if (lengths.empty() || total < k) {
            SampleResult out;
            out.strings = enumerate(d, max_len, k);
            out.exhausted = true;
            return out;
        }

        std::mt19937_64 rng(seed);
        std::set<std::string> seen;
        std::vector<std::string> out;
        std::size_t attempts = 0, max_attempts = 1000 + 200 * k;
        while (out.size() < k && attempts++ < max_attempts) {
            const std::vector<std::size_t>& pool =
                (!near.empty() && (rng() & 1)) ? near : lengths;
            std::size_t target = pool[bounded(rng, pool.size())];
            std::string w;
            std::uint32_t s = d.start;
            for (std::size_t i = 0; i < target; ++i) {
                std::size_t remaining = target - i - 1;
                std::vector<std::size_t> productive;
                for (std::size_t b = 0; b < d.blocks.size(); ++b)
                    if (exact[remaining][d.next[s][b]]) productive.push_back(b);
                std::size_t b = productive[bounded(rng, productive.size())];
                const std::string& chars = d.blocks[b];
                w.push_back(chars[bounded(rng, chars.size())]);
                s = d.next[s][b];
            }
            if (seen.insert(w).second) out.push_back(w);
        }
        if (out.size() < k) {
            // Rare duplicate-heavy languages: top up deterministically.
            for (const std::string& w : enumerate(d, max_len, k + seen.size())) {
                if (out.size() >= k) break;
                if (seen.insert(w).second) out.push_back(w);
            }
        }
        return {std::move(out), false};
    }

    // exact[l][s] <=> some state of `accepting` lies exactly l steps from s.
    static std::vector<std::vector<char>> exact_reach(const Dfa& d, const std::vector<char>& accepting,
                                                      std::size_t max_len) {
        std::size_t ns = d.state_count();
        std::vector<std::vector<char>> exact(max_len + 1, std::vector<char>(ns, 0));
        for (std::size_t s = 0; s < ns; ++s) exact[0][s] = accepting[s];
        for (std::size_t l = 1; l <= max_len; ++l)
            for (std::size_t s = 0; s < ns; ++s)
                for (std::size_t b = 0; b < d.blocks.size() && !exact[l][s]; ++b)
                    if (exact[l - 1][d.next[s][b]]) exact[l][s] = 1;
        return exact;
    }

    // ---- minterms & compilation -----------------------------------------

    // Partition of the alphabet into equivalence blocks of the character
    // sets syntactically occurring in the given regexes.
    std::vector<std::string> minterm_blocks(std::initializer_list<RegexPtr> rs) const {
        std::vector<std::bitset<256>> atoms;
        for (const RegexPtr& r : rs) collect_atoms(r, atoms);
        std::map<std::string, std::string> groups;  // membership signature -> chars
        for (char c : alpha_.characters()) {
            std::string sig(atoms.size(), '0');
            for (std::size_t i = 0; i < atoms.size(); ++i)
                if (atoms[i].test(static_cast<unsigned char>(c))) sig[i] = '1';
            groups[sig].push_back(c);
        }
        // Deterministic block order: by smallest member character.
        std::vector<std::string> blocks;
        for (auto& [sig, chars] : groups) blocks.push_back(chars);
        std::sort(blocks.begin(), blocks.end());
        return blocks;
    }

    Dfa compile_with_blocks(const RegexPtr& r, std::vector<std::string> blocks) const {
        check_quantifiers(r);
        Dfa d;
        d.block_of.fill(-1);
        d.blocks = std::move(blocks);
        for (std::size_t b = 0; b < d.blocks.size(); ++b)
            for (char c : d.blocks[b]) d.block_of[static_cast<unsigned char>(c)] = static_cast<int>(b);

        std::map<std::string, std::uint32_t> ids;
        std::vector<RegexPtr> nodes;
        auto intern = [&](const RegexPtr& n) {
            std::string key = to_string(n);
            auto [it, fresh] = ids.emplace(std::move(key), static_cast<std::uint32_t>(nodes.size()));
            if (fresh) {
                if (nodes.size() >= budget_.max_states)
                    throw BudgetExceeded("DFA construction exceeded " + std::to_string(budget_.max_states) +
                                         " states");
                nodes.push_back(n);
            }
            return it->second;
        };

        d.start = intern(normalize(r));
        for (std::uint32_t s = 0; s < nodes.size(); ++s) {
            d.next.emplace_back();
            d.next[s].reserve(d.blocks.size());
            for (const std::string& chars : d.blocks) {
                RegexPtr step = derive(nodes[s], chars.front());
                guard_growth(step);
                d.next[s].push_back(intern(step));
            }
        }
        d.accepting.resize(nodes.size());
        for (std::size_t s = 0; s < nodes.size(); ++s) d.accepting[s] = nullable(nodes[s]);
        return d;
    }

    // Diagnostic state-table dump.
    static std::string dfa_to_text(const Dfa& d) {
        std::string out = "states " + std::to_string(d.state_count()) + " start " + std::to_string(d.start) + "\n";
        out += "blocks";
        for (const auto& b : d.blocks) out += " {" + b + "}";
        out += "\n";
        for (std::size_t s = 0; s < d.state_count(); ++s) {
            out += std::to_string(s);
            out += d.accepting[s] ? "* :" : "  :";
            for (std::size_t b = 0; b < d.blocks.size(); ++b) out += " " + std::to_string(d.next[s][b]);
            out += "\n";
        }
        return out;
    }

    static constexpr std::uint32_t kUnreachable = 0xFFFFFFFFu;

    static std::vector<std::uint32_t> distances_to_accept(const Dfa& d) {
        std::size_t ns = d.state_count();
        std::vector<std::vector<std::uint32_t>> rev(ns);
        for (std::size_t s = 0; s < ns; ++s)
            for (std::size_t b = 0; b < d.blocks.size(); ++b) rev[d.next[s][b]].push_back(static_cast<std::uint32_t>(s));
        std::vector<std::uint32_t> dist(ns, kUnreachable);
        std::deque<std::uint32_t> q;
        for (std::size_t s = 0; s < ns; ++s)
            if (d.accepting[s]) {
                dist[s] = 0;
                q.push_back(static_cast<std::uint32_t>(s));
            }
        while (!q.empty()) {
            std::uint32_t s = q.front();
            q.pop_front();
            for (std::uint32_t p : rev[s])
                if (dist[p] == kUnreachable) {
                    dist[p] = dist[s] + 1;
                    q.push_back(p);
                }
        }
        return dist;
    }

private:
    Alphabet alpha_;
    EngineBudget budget_;

    void guard_growth(const RegexPtr& d) const {
        if (ast_size(d) > budget_.max_states * 25)
            throw BudgetExceeded("derivative grew past the node budget");
    }

    void check_quantifiers(const RegexPtr& r) const {
        if (!r) return;
        if (r->kind == RegexKind::Repeat) {
            if (r->min > budget_.max_quantifier_bound ||
                (r->max != kRepeatInf && r->max > budget_.max_quantifier_bound))
                throw QuantifierTooLarge("repetition bound exceeds " +
                                         std::to_string(budget_.max_quantifier_bound));
        }
        check_quantifiers(r->left);
        check_quantifiers(r->right);
        check_quantifiers(r->child);
    }

    static void collect_atoms(const RegexPtr& r, std::vector<std::bitset<256>>& atoms) {
        if (!r) return;
        auto add = [&](const std::bitset<256>& b) {
            for (const auto& a : atoms)
                if (a == b) return;
            atoms.push_back(b);
        };
        if (r->kind == RegexKind::Literal) {
            std::bitset<256> b;
            b.set(static_cast<unsigned char>(r->lit));
            add(b);
        } else if (r->kind == RegexKind::Const) {
            for (char c : r->text) {
                std::bitset<256> b;
                b.set(static_cast<unsigned char>(c));
                add(b);
            }
        } else if (r->kind == RegexKind::CharClass) {
            add(r->cls);
        }
        collect_atoms(r->left, atoms);
        collect_atoms(r->right, atoms);
        collect_atoms(r->child, atoms);
    }

    // ---- similarity-normalizing constructors (operands already normal) ---

    static RegexPtr s_concat(RegexPtr l, RegexPtr r) {
        if (l->kind == RegexKind::Empty || r->kind == RegexKind::Empty) return mk_empty();
        if (l->kind == RegexKind::Epsilon) return r;
        if (r->kind == RegexKind::Epsilon) return l;
        if (l->kind == RegexKind::Concat)
            return s_concat(l->left, s_concat(l->right, std::move(r)));
        return mk_concat(std::move(l), std::move(r));
    }

    static void flatten(RegexKind kind, const RegexPtr& r, std::vector<RegexPtr>& out) {
        if (r->kind == kind) {
            flatten(kind, r->left, out);
            flatten(kind, r->right, out);
        } else {
            out.push_back(r);
        }
    }

    static RegexPtr rebuild(RegexKind kind, std::vector<RegexPtr> ops) {
        RegexPtr acc = ops.front();
        for (std::size_t i = 1; i < ops.size(); ++i) acc = mk_binary(kind, std::move(acc), ops[i]);
        return acc;
    }

    static std::vector<RegexPtr> sorted_unique(std::vector<RegexPtr> ops) {
        std::vector<std::pair<std::string, RegexPtr>> keyed;
        keyed.reserve(ops.size());
        for (auto& o : ops) keyed.emplace_back(to_string(o), std::move(o));
        std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        keyed.erase(std::unique(keyed.begin(), keyed.end(),
                                [](const auto& a, const auto& b) { return a.first == b.first; }),
                    keyed.end());
        std::vector<RegexPtr> out;
        out.reserve(keyed.size());
        for (auto& [k, o] : keyed) out.push_back(std::move(o));
        return out;
    }

    static RegexPtr s_alt(const RegexPtr& l, const RegexPtr& r) {
        std::vector<RegexPtr> ops;
        flatten(RegexKind::Alt, l, ops);
        flatten(RegexKind::Alt, r, ops);
        std::vector<RegexPtr> kept;
        for (auto& o : ops)
            if (o->kind != RegexKind::Empty) kept.push_back(std::move(o));
        if (kept.empty()) return mk_empty();
        kept = sorted_unique(std::move(kept));
        return kept.size() == 1 ? kept.front() : rebuild(RegexKind::Alt, std::move(kept));
    }

    static RegexPtr s_and(const RegexPtr& l, const RegexPtr& r) {
        std::vector<RegexPtr> ops;
        flatten(RegexKind::And, l, ops);
        flatten(RegexKind::And, r, ops);
        for (const auto& o : ops)
            if (o->kind == RegexKind::Empty) return mk_empty();
        ops = sorted_unique(std::move(ops));
        return ops.size() == 1 ? ops.front() : rebuild(RegexKind::And, std::move(ops));
    }

    static RegexPtr s_not(RegexPtr c) {
        if (c->kind == RegexKind::Not) return c->child;
        return mk_not(std::move(c));
    }

    static RegexPtr s_repeat(RegexPtr c, std::uint32_t min, std::uint32_t max) {
        if (max == 0) return mk_epsilon();
        if (c->kind == RegexKind::Epsilon) return c;
        if (c->kind == RegexKind::Empty) return min == 0 ? mk_epsilon() : mk_empty();
        if (min == 1 && max == 1) return c;
        return mk_repeat(std::move(c), min, max);
    }

    // Character derivative over an engine-normalized node.
    RegexPtr derive(const RegexPtr& r, char c) const {
        switch (r->kind) {
            case RegexKind::Empty:
            case RegexKind::Epsilon:
                return mk_empty();
            case RegexKind::Literal:
                return r->lit == c ? mk_epsilon() : mk_empty();
            case RegexKind::CharClass:
                return r->cls.test(static_cast<unsigned char>(c)) ? mk_epsilon() : mk_empty();
            case RegexKind::Const:
                if (r->text[0] != c) return mk_empty();
                if (r->text.size() == 1) return mk_epsilon();
                return r->text.size() == 2 ? mk_literal(r->text[1]) : mk_const(r->text.substr(1));
            case RegexKind::Concat: {
                RegexPtr first = s_concat(derive(r->left, c), r->right);
                if (!nullable(r->left)) return first;
                return s_alt(first, derive(r->right, c));
            }
            case RegexKind::Alt:
                return s_alt(derive(r->left, c), derive(r->right, c));
            case RegexKind::And:
                return s_and(derive(r->left, c), derive(r->right, c));
            case RegexKind::Not:
                return s_not(derive(r->child, c));
            case RegexKind::Repeat: {
                std::uint32_t min = r->min > 0 ? r->min - 1 : 0;
                std::uint32_t max = r->max == kRepeatInf ? kRepeatInf : r->max - 1;
                return s_concat(derive(r->child, c), s_repeat(r->child, min, max));
            }
            case RegexKind::Group:
                return derive(r->child, c);
        }
        throw Error("unreachable");
    }

    // Uniform draw in [0, n) by rejection; stable across standard libraries.
    static std::size_t bounded(std::mt19937_64& rng, std::size_t n) {
        if (n <= 1) return 0;
        std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / n * n;
        std::uint64_t v;
        do {
            v = rng();
        } while (v >= limit);
        return static_cast<std::size_t>(v % n);
    }

    // Saturating count of accepted strings with length <= max_len.
    static std::uint64_t count_members(const Dfa& d, std::size_t max_len) {
        constexpr std::uint64_t kCap = std::uint64_t(1) << 62;
        std::size_t ns = d.state_count();
        std::vector<std::uint64_t> cur(ns, 0), nxt;
        cur[d.start] = 1;
        std::uint64_t total = 0;
        auto sat_add = [&](std::uint64_t a, std::uint64_t b) { return std::min(kCap, a + std::min(kCap, b)); };
        for (std::size_t l = 0;; ++l) {
            for (std::size_t s = 0; s < ns; ++s)
                if (d.accepting[s]) total = sat_add(total, cur[s]);
            if (l == max_len || total >= kCap) break;
            nxt.assign(ns, 0);
            for (std::size_t s = 0; s < ns; ++s) {
                if (cur[s] == 0) continue;
                for (std::size_t b = 0; b < d.blocks.size(); ++b) {
                    std::uint64_t width = d.blocks[b].size();
                    std::uint64_t add = cur[s] > kCap / width ? kCap : cur[s] * width;
                    std::uint64_t& cell = nxt[d.next[s][b]];
                    cell = sat_add(cell, add);
                }
            }
            cur.swap(nxt);
        }
        return total;
    }

    // Accepted strings in prefix-lexicographic order, up to `want` of them.
    static std::vector<std::string> enumerate(const Dfa& d, std::size_t max_len, std::size_t want) {
        std::vector<std::uint32_t> dist = distances_to_accept(d);
        std::vector<std::string> out;
        std::string prefix;
        // Char-ordered DFS with reachability pruning.
        auto rec = [&](auto&& self, std::uint32_t s) -> void {
            if (out.size() >= want) return;
            if (d.accepting[s]) out.push_back(prefix);
            if (prefix.size() == max_len) return;
            std::size_t remaining = max_len - prefix.size();
            std::vector<std::pair<char, std::uint32_t>> steps;
            for (std::size_t b = 0; b < d.blocks.size(); ++b) {
                std::uint32_t t = d.next[s][b];
                if (dist[t] != kUnreachable && dist[t] + 1 <= remaining)
                    for (char c : d.blocks[b]) steps.emplace_back(c, t);
            }
            std::sort(steps.begin(), steps.end());
            for (auto [c, t] : steps) {
                if (out.size() >= want) return;
                prefix.push_back(c);
                self(self, t);
                prefix.pop_back();
            }
        };
        rec(rec, d.start);
        return out;
    }
};

}  // namespace regexmend
