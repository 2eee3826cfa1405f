#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "regexmend/abstract.hpp"
#include "regexmend/evaluate.hpp"

namespace regexmend {

enum class TransformationKind {
    BinaryElementInsertion,
    ElementDeletion,
    ElementReplacement,
    QuantifierInsertion,
    QuantifierModification,
    QuantifierAdjustment,
    OperatorInsertion,
    OperatorDeletion,
    ElementAdjustment,
    ElementExchanging,
};

inline const std::vector<TransformationKind>& all_transformations() {
    static const std::vector<TransformationKind> k = {
        TransformationKind::BinaryElementInsertion, TransformationKind::ElementDeletion,
        TransformationKind::ElementReplacement,     TransformationKind::QuantifierInsertion,
        TransformationKind::QuantifierModification, TransformationKind::QuantifierAdjustment,
        TransformationKind::OperatorInsertion,      TransformationKind::OperatorDeletion,
        TransformationKind::ElementAdjustment,      TransformationKind::ElementExchanging,
    };
    return k;
}

inline const char* transformation_name(TransformationKind k) {
    switch (k) {
        case TransformationKind::BinaryElementInsertion: return "BinaryElementInsertion";
        case TransformationKind::ElementDeletion: return "ElementDeletion";
        case TransformationKind::ElementReplacement: return "ElementReplacement";
        case TransformationKind::QuantifierInsertion: return "QuantifierInsertion";
        case TransformationKind::QuantifierModification: return "QuantifierModification";
        case TransformationKind::QuantifierAdjustment: return "QuantifierAdjustment";
        case TransformationKind::OperatorInsertion: return "OperatorInsertion";
        case TransformationKind::OperatorDeletion: return "OperatorDeletion";
        case TransformationKind::ElementAdjustment: return "ElementAdjustment";
        case TransformationKind::ElementExchanging: return "ElementExchanging";
    }
    return "?";
}

struct QuantifierBounds {
    std::uint32_t min = 0;
    std::uint32_t max = 0;  // kRepeatInf for open bounds
    bool operator==(const QuantifierBounds&) const = default;
    bool operator<(const QuantifierBounds& o) const {
        return min != o.min ? min < o.min : max < o.max;
    }
};

// ---- canonical sequence form & site enumeration ----------------------------

namespace detail {

// Canonical form for neighborhood editing: every sequence context (root,
// group interior, |/& operand) is an explicit Seq node.
inline ANodePtr to_seq(const ANodePtr& n);

inline ANodePtr seqify_item(const ANodePtr& n) {
    switch (n->kind) {
        case ANodeKind::Token:
        case ANodeKind::Epsilon:
            return n;
        case ANodeKind::Quant:
            return mk_aquant(seqify_item(n->child), n->token);
        case ANodeKind::Group:
            return mk_aunary(ANodeKind::Group, to_seq(n->child));
        case ANodeKind::Not:
            return mk_aunary(ANodeKind::Not, seqify_item(n->child));
        case ANodeKind::Alt:
        case ANodeKind::And: {
            std::vector<ANodePtr> ops;
            ops.reserve(n->items.size());
            for (const auto& it : n->items) ops.push_back(to_seq(it));
            auto out = std::make_shared<ANode>();
            out->kind = n->kind;
            out->items = std::move(ops);
            return out;
        }
        case ANodeKind::Seq: {
            std::vector<ANodePtr> items;
            for (const auto& it : n->items) items.push_back(seqify_item(it));
            auto out = std::make_shared<ANode>();
            out->kind = ANodeKind::Seq;
            out->items = std::move(items);
            return out;
        }
    }
    throw Error("unreachable");
}

inline ANodePtr to_seq(const ANodePtr& n) {
    if (n->kind == ANodeKind::Seq) return seqify_item(n);
    auto out = std::make_shared<ANode>();
    out->kind = ANodeKind::Seq;
    if (n->kind != ANodeKind::Epsilon) out->items.push_back(seqify_item(n));
    return out;
}

}  // namespace detail

struct Site {
    ANodePtr node;      // Token, Quant(Token|Group), or Group
    bool generalized;   // bracketed
    bool quantified;    // node is a Quant
};

struct Slot {
    ANodePtr seq;
    std::size_t index;
};

struct SiteEnumeration {
    ANodePtr root;                     // canonical sequence form
    std::vector<Site> sites;           // elements and generalized elements, DFS order
    std::vector<Slot> slots;           // insertion points, DFS order
    std::vector<ANodePtr> nots;        // residual ~ nodes
    std::vector<ANodePtr> juncts;      // residual |/& nodes

    std::size_t element_count() const {
        std::size_t n = 0;
        for (const auto& s : sites) n += s.generalized ? 0 : 1;
        return n;
    }
    std::size_t generalized_count() const { return sites.size() - element_count(); }
};

namespace detail {

inline void walk_sites(const ANodePtr& n, SiteEnumeration& out) {
    switch (n->kind) {
        case ANodeKind::Token:
            out.sites.push_back({n, false, false});
            return;
        case ANodeKind::Quant: {
            bool gen = n->child->kind == ANodeKind::Group;
            out.sites.push_back({n, gen, true});
            // The quantified group's interior still contributes sites/slots;
            // the group itself is subsumed by this quantified site.
            if (gen) walk_sites(n->child->child, out);
            return;
        }
        case ANodeKind::Group:
            out.sites.push_back({n, true, false});
            walk_sites(n->child, out);
            return;
        case ANodeKind::Seq:
            for (std::size_t i = 0; i <= n->items.size(); ++i) out.slots.push_back({n, i});
            for (const auto& it : n->items) walk_sites(it, out);
            return;
        case ANodeKind::Alt:
        case ANodeKind::And:
            out.juncts.push_back(n);
            for (const auto& it : n->items) walk_sites(it, out);
            return;
        case ANodeKind::Not:
            out.nots.push_back(n);
            walk_sites(n->child, out);
            return;
        case ANodeKind::Epsilon:
            return;
    }
}

}  // namespace detail

// Enumerates element positions, generalized-element spans, and insertion
// slots of an abstract regex.
inline SiteEnumeration element_sites(const AbstractRegex& a) {
    if (!a.root || a.root->kind == ANodeKind::Epsilon) throw Error("empty abstract regex has no sites");
    SiteEnumeration out;
    out.root = detail::to_seq(a.root);
    detail::walk_sites(out.root, out);
    if (out.sites.empty()) throw Error("empty abstract regex has no sites");
    return out;
}

// ---- quantifier bounds from examples ---------------------------------------

// Candidate bounds for repeating `element`, from occurrence statistics over
// the positive examples: the longest run of consecutive non-empty matches is
// counted per positive, then {(min,max), (min,inf), (max,inf), (min,min)}
// over those counts is emitted.
inline std::vector<QuantifierBounds> infer_quantifier_bounds(const Engine& engine,
                                                             const RegexPtr& element,
                                                             const ExampleSet& ex) {
    if (ex.positive().empty()) return {};
    Dfa dfa;
    try {
        dfa = engine.compile(element);
    } catch (const Error&) {
        return {};
    }

    auto longest_match_end = [&](const std::string& w, std::size_t from) -> std::size_t {
        std::uint32_t s = dfa.start;
        std::size_t best = from;
        for (std::size_t i = from; i < w.size(); ++i) {
            int b = dfa.block_of[static_cast<unsigned char>(w[i])];
            if (b < 0) break;
            s = dfa.next[s][static_cast<std::size_t>(b)];
            if (dfa.accepting[s]) best = i + 1;
        }
        return best;  // == from when no non-empty match
    };

    std::uint32_t lo = kRepeatInf, hi = 0;
    for (const auto& w : ex.positive()) {
        std::uint32_t longest = 0;
        for (std::size_t start = 0; start <= w.size(); ++start) {
            std::uint32_t run = 0;
            std::size_t pos = start;
            for (;;) {
                std::size_t end = longest_match_end(w, pos);
                if (end == pos) break;
                ++run;
                pos = end;
            }
            longest = std::max(longest, run);
        }
        lo = std::min(lo, longest);
        hi = std::max(hi, longest);
    }

    std::set<QuantifierBounds> dedup;
    dedup.insert({lo, hi});
    dedup.insert({lo, kRepeatInf});
    dedup.insert({hi, kRepeatInf});
    dedup.insert({lo, lo});
    return {dedup.begin(), dedup.end()};
}

// ---- neighborhood generation ------------------------------------------------

struct NeighborMember {
    AbstractRegex abstract;
    TransformationKind kind;
    std::size_t site = 0;            // site/slot ordinal within the kind
    std::ptrdiff_t candidate = -1;   // candidate ordinal, -1 when not applicable
    std::string detail;
};

struct Neighborhood {
    AbstractRegex origin;            // re-pointed at the merged dictionary
    std::vector<NeighborMember> members;
    std::size_t truncated = 0;
};

struct NeighborhoodOptions {
    std::vector<TransformationKind> kinds = all_transformations();
    std::size_t cap = 20000;
    // When set, the fixed aliases <NUM> <LET> <CAP> <VOW> <S> join the
    // candidate set even if absent from the dictionary.
    bool include_alias_candidates = false;
};

namespace detail {

struct Edit {
    enum class Op { Delete, Replace, Unwrap, Attach } op;
    ANodePtr replacement;       // Replace
    std::size_t quant = 0;      // Attach
    bool bracket = false;       // Attach
};

using EditMap = std::map<const ANode*, Edit>;

inline std::optional<ANodePtr> apply_edits(const ANodePtr& n, const EditMap& edits) {
    auto eit = edits.find(n.get());
    if (eit != edits.end() && eit->second.op == Edit::Op::Replace) return eit->second.replacement;

    std::optional<ANodePtr> base;
    switch (n->kind) {
        case ANodeKind::Token:
        case ANodeKind::Epsilon:
            base = n;
            break;
        case ANodeKind::Quant: {
            auto c = apply_edits(n->child, edits);
            if (!c) return std::nullopt;
            base = (*c == n->child) ? n : mk_aquant(*c, n->token);
            break;
        }
        case ANodeKind::Group: {
            auto c = apply_edits(n->child, edits);
            if (!c || ((*c)->kind == ANodeKind::Seq && (*c)->items.empty())) return std::nullopt;
            base = (*c == n->child) ? n : mk_aunary(ANodeKind::Group, *c);
            break;
        }
        case ANodeKind::Not: {
            auto c = apply_edits(n->child, edits);
            if (!c) return std::nullopt;
            base = (*c == n->child) ? n : mk_aunary(ANodeKind::Not, *c);
            break;
        }
        case ANodeKind::Seq: {
            std::vector<ANodePtr> items;
            for (const auto& it : n->items) {
                auto c = apply_edits(it, edits);
                if (!c) continue;
                if ((*c)->kind == ANodeKind::Seq) {
                    for (const auto& sub : (*c)->items) items.push_back(sub);
                } else if ((*c)->kind != ANodeKind::Epsilon) {
                    items.push_back(*c);
                }
            }
            if (items.empty()) return std::nullopt;
            auto out = std::make_shared<ANode>();
            out->kind = ANodeKind::Seq;
            out->items = std::move(items);
            base = out;
            break;
        }
        case ANodeKind::Alt:
        case ANodeKind::And: {
            std::vector<ANodePtr> ops;
            for (const auto& it : n->items) {
                auto c = apply_edits(it, edits);
                if (c) ops.push_back(*c);
            }
            if (ops.empty()) return std::nullopt;
            if (ops.size() == 1) {
                base = ops.front();
            } else {
                auto out = std::make_shared<ANode>();
                out->kind = n->kind;
                out->items = std::move(ops);
                base = out;
            }
            break;
        }
    }

    if (eit == edits.end()) return base;
    switch (eit->second.op) {
        case Edit::Op::Delete:
            return std::nullopt;
        case Edit::Op::Unwrap: {
            const ANodePtr& q = *base;
            if (q->kind != ANodeKind::Quant) return base;
            return q->child->kind == ANodeKind::Group ? q->child->child : q->child;
        }
        case Edit::Op::Attach: {
            const Edit& e = eit->second;
            ANodePtr target = *base;
            if (e.bracket) target = mk_aunary(ANodeKind::Group, to_seq(target));
            return mk_aquant(std::move(target), e.quant);
        }
        case Edit::Op::Replace:
            return base;  // handled above
    }
    return base;
}

inline ANodePtr finish_root(std::optional<ANodePtr> r) { return r ? *r : mk_aepsilon(); }

inline ANodePtr insert_item(const ANodePtr& n, const ANode* seq, std::size_t idx, const ANodePtr& item) {
    auto out = std::make_shared<ANode>(*n);
    if (n->kind == ANodeKind::Seq && n.get() == seq) {
        out->items.insert(out->items.begin() + static_cast<std::ptrdiff_t>(idx), item);
        return out;
    }
    if (n->child) out->child = insert_item(n->child, seq, idx, item);
    for (auto& it : out->items) it = insert_item(it, seq, idx, item);
    return out;
}

// Replaces items [i, i+1] of `seq` by a two-operand |/& node.
inline ANodePtr join_pair(const ANodePtr& n, const ANode* seq, std::size_t i, ANodeKind op) {
    auto out = std::make_shared<ANode>(*n);
    if (n->kind == ANodeKind::Seq && n.get() == seq) {
        auto junct = std::make_shared<ANode>();
        junct->kind = op;
        junct->items = {to_seq(n->items[i]), to_seq(n->items[i + 1])};
        out->items.erase(out->items.begin() + static_cast<std::ptrdiff_t>(i),
                         out->items.begin() + static_cast<std::ptrdiff_t>(i + 2));
        out->items.insert(out->items.begin() + static_cast<std::ptrdiff_t>(i), junct);
        return out;
    }
    if (n->child) out->child = join_pair(n->child, seq, i, op);
    for (auto& it : out->items) it = join_pair(it, seq, i, op);
    return out;
}

// Deletes the |/& between operands i and i+1: the two operands concatenate.
inline ANodePtr merge_junct(const ANodePtr& n, const ANode* junct, std::size_t i) {
    if (n.get() == junct) {
        std::vector<ANodePtr> merged = n->items[i]->items;
        for (const auto& x : n->items[i + 1]->items) merged.push_back(x);
        auto seq = std::make_shared<ANode>();
        seq->kind = ANodeKind::Seq;
        seq->items = std::move(merged);
        if (n->items.size() == 2) return seq;
        auto out = std::make_shared<ANode>(*n);
        out->items.erase(out->items.begin() + static_cast<std::ptrdiff_t>(i),
                         out->items.begin() + static_cast<std::ptrdiff_t>(i + 2));
        out->items.insert(out->items.begin() + static_cast<std::ptrdiff_t>(i), seq);
        return out;
    }
    auto out = std::make_shared<ANode>(*n);
    if (n->child) out->child = merge_junct(n->child, junct, i);
    for (auto& it : out->items) it = merge_junct(it, junct, i);
    return out;
}

// Moves item src_pos of src_seq to index dst_idx of dst_seq.
inline ANodePtr move_item(const ANodePtr& n, const ANode* src_seq, std::size_t src_pos,
                          const ANode* dst_seq, std::size_t dst_idx, const ANodePtr& item) {
    auto out = std::make_shared<ANode>(*n);
    if (n->kind == ANodeKind::Seq && (n.get() == src_seq || n.get() == dst_seq)) {
        if (n.get() == src_seq)
            out->items.erase(out->items.begin() + static_cast<std::ptrdiff_t>(src_pos));
        if (n.get() == dst_seq) {
            std::size_t idx = dst_idx;
            if (n.get() == src_seq && src_pos < dst_idx) --idx;
            out->items.insert(out->items.begin() + static_cast<std::ptrdiff_t>(idx), item);
        }
        if (n.get() == src_seq && n.get() != dst_seq && out->items.empty()) {
            // Emptied sequences are not produced; callers skip these moves.
            throw Error("internal: move emptied a sequence");
        }
        return out;
    }
    if (n->child) out->child = move_item(n->child, src_seq, src_pos, dst_seq, dst_idx, item);
    for (auto& it : out->items) it = move_item(it, src_seq, src_pos, dst_seq, dst_idx, item);
    return out;
}

inline bool tree_contains(const ANodePtr& root, const ANode* target) {
    if (root.get() == target) return true;
    if (root->child && tree_contains(root->child, target)) return true;
    for (const auto& it : root->items)
        if (tree_contains(it, target)) return true;
    return false;
}

}  // namespace detail

// N(r): every single-transformation variant of `a` over the requested kinds.
// Candidates are the dictionary's element entries (the fixed aliases can be
// added via options). Deterministic order, structural dedup, bounded size.
inline Neighborhood neighbors(const Engine& engine, const AbstractRegex& a, const ExampleSet& ex,
                              const NeighborhoodOptions& options = {}) {
    using detail::Edit;
    using detail::EditMap;

    auto dict = std::make_shared<RewriteDictionary>(*a.dict);

    Neighborhood out;
    if (!a.root || a.root->kind == ANodeKind::Epsilon) {
        out.origin = a.with_dictionary(dict);
        return out;
    }

    SiteEnumeration sites = element_sites(a);
    const ANodePtr& root = sites.root;

    // Candidate elements: dictionary entries in insertion order.
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < dict->size(); ++i)
        if (dict->at(i).kind == TokenKind::Element) candidates.push_back(i);
    if (options.include_alias_candidates) {
        const Alphabet& al = engine.alphabet();
        auto alias = [&](const char* name, const char* text) {
            RegexPtr c = parse(text, al);
            std::size_t id = dict->intern_element(name, 0, c);
            for (std::size_t e : candidates)
                if (e == id) return;
            candidates.push_back(id);
        };
        alias("NUM", "[0-9]");
        alias("LET", "[A-Za-z]");
        alias("CAP", "[A-Z]");
        alias("VOW", "[AEIOUaeiou]");
        alias("S", ".*");
    }

    std::string origin_text = a.text();
    std::set<std::string> seen{origin_text};
    auto emit = [&](ANodePtr member_root, TransformationKind kind, std::size_t site,
                    std::ptrdiff_t cand, std::string detail_text) {
        AbstractRegex m{std::move(member_root), dict, a.l_max};
        std::string key = m.text();
        if (!seen.insert(key).second) return;
        out.members.push_back({std::move(m), kind, site, cand, std::move(detail_text)});
    };

    auto concrete_of_site = [&](const ANodePtr& site) {
        return detail::concrete_one(*site, *dict);
    };

    std::map<std::string, std::vector<QuantifierBounds>> bounds_cache;
    auto bounds_for = [&](const RegexPtr& element) -> const std::vector<QuantifierBounds>& {
        std::string key = to_string(element);
        auto it = bounds_cache.find(key);
        if (it == bounds_cache.end())
            it = bounds_cache.emplace(key, infer_quantifier_bounds(engine, element, ex)).first;
        return it->second;
    };

    for (TransformationKind kind : options.kinds) {
        switch (kind) {
            case TransformationKind::BinaryElementInsertion: {
                for (std::size_t s = 0; s < sites.slots.size(); ++s) {
                    const Slot& slot = sites.slots[s];
                    if (slot.seq->items.empty()) continue;
                    for (std::size_t c = 0; c < candidates.size(); ++c) {
                        ANodePtr tok = mk_atoken(candidates[c]);
                        emit(detail::insert_item(root, slot.seq.get(), slot.index, tok), kind, s,
                             static_cast<std::ptrdiff_t>(c), "concat");
                        // Disjunction/conjunction attach to the adjacent item.
                        bool has_right = slot.index < slot.seq->items.size();
                        const ANodePtr& nb = has_right ? slot.seq->items[slot.index]
                                                       : slot.seq->items[slot.index - 1];
                        for (ANodeKind op : {ANodeKind::Alt, ANodeKind::And}) {
                            auto junct = std::make_shared<ANode>();
                            junct->kind = op;
                            if (has_right)
                                junct->items = {detail::to_seq(tok), detail::to_seq(nb)};
                            else
                                junct->items = {detail::to_seq(nb), detail::to_seq(tok)};
                            EditMap edits{{nb.get(), Edit{Edit::Op::Replace, junct}}};
                            emit(detail::finish_root(detail::apply_edits(root, edits)), kind, s,
                                 static_cast<std::ptrdiff_t>(c), op == ANodeKind::Alt ? "|" : "&");
                        }
                    }
                }
                break;
            }

            case TransformationKind::ElementDeletion: {
                for (std::size_t s = 0; s < sites.sites.size(); ++s) {
                    EditMap edits{{sites.sites[s].node.get(), Edit{Edit::Op::Delete, nullptr, 0, false}}};
                    emit(detail::finish_root(detail::apply_edits(root, edits)), kind, s, -1, "");
                }
                break;
            }

            case TransformationKind::ElementReplacement: {
                for (std::size_t s = 0; s < sites.sites.size(); ++s) {
                    const Site& site = sites.sites[s];
                    for (std::size_t c = 0; c < candidates.size(); ++c) {
                        if (site.node->kind == ANodeKind::Token && site.node->token == candidates[c])
                            continue;
                        EditMap edits{{site.node.get(), Edit{Edit::Op::Replace, mk_atoken(candidates[c])}}};
                        emit(detail::finish_root(detail::apply_edits(root, edits)), kind, s,
                             static_cast<std::ptrdiff_t>(c), "");
                    }
                }
                break;
            }

            case TransformationKind::QuantifierInsertion: {
                for (std::size_t s = 0; s < sites.sites.size(); ++s) {
                    const Site& site = sites.sites[s];
                    if (site.quantified) continue;
                    const auto& bounds = bounds_for(concrete_of_site(site.node));
                    for (std::size_t b = 0; b < bounds.size(); ++b) {
                        std::size_t q = dict->intern_quantifier(bounds[b].min, bounds[b].max,
                                                                QuantStyle::Braces);
                        EditMap edits{{site.node.get(), Edit{Edit::Op::Attach, nullptr, q, false}}};
                        emit(detail::finish_root(detail::apply_edits(root, edits)), kind, s,
                             static_cast<std::ptrdiff_t>(b),
                             quantifier_text(bounds[b].min, bounds[b].max, QuantStyle::Braces));
                    }
                }
                break;
            }

            case TransformationKind::QuantifierModification: {
                for (std::size_t s = 0; s < sites.sites.size(); ++s) {
                    const Site& site = sites.sites[s];
                    if (!site.quantified) continue;
                    const DictEntry& cur = dict->at(site.node->token);
                    std::vector<QuantifierBounds> bounds = bounds_for(concrete_of_site(site.node->child));
                    for (QuantifierBounds sugar : {QuantifierBounds{0, 1}, QuantifierBounds{0, kRepeatInf},
                                                   QuantifierBounds{1, kRepeatInf}})
                        if (std::find(bounds.begin(), bounds.end(), sugar) == bounds.end())
                            bounds.push_back(sugar);
                    for (std::size_t b = 0; b < bounds.size(); ++b) {
                        if (bounds[b].min == cur.min && bounds[b].max == cur.max) continue;
                        std::size_t q = dict->intern_quantifier(bounds[b].min, bounds[b].max,
                                                                QuantStyle::Braces);
                        EditMap edits{
                            {site.node.get(), Edit{Edit::Op::Replace, mk_aquant(site.node->child, q)}}};
                        emit(detail::finish_root(detail::apply_edits(root, edits)), kind, s,
                             static_cast<std::ptrdiff_t>(b),
                             quantifier_text(bounds[b].min, bounds[b].max, QuantStyle::Braces));
                    }
                }
                break;
            }

            case TransformationKind::QuantifierAdjustment: {
                for (std::size_t s = 0; s < sites.sites.size(); ++s) {
                    const Site& src = sites.sites[s];
                    if (!src.quantified) continue;
                    for (std::size_t t = 0; t < sites.sites.size(); ++t) {
                        if (t == s) continue;
                        const Site& dst = sites.sites[t];
                        if (dst.quantified) continue;
                        bool token_target = dst.node->kind == ANodeKind::Token;
                        for (bool bracket : token_target ? std::vector<bool>{false, true}
                                                         : std::vector<bool>{false}) {
                            EditMap edits{
                                {src.node.get(), Edit{Edit::Op::Unwrap, nullptr, 0, false}},
                                {dst.node.get(), Edit{Edit::Op::Attach, nullptr, src.node->token, bracket}}};
                            emit(detail::finish_root(detail::apply_edits(root, edits)), kind, s,
                                 static_cast<std::ptrdiff_t>(t), bracket ? "bracketed" : "bare");
                        }
                    }
                }
                break;
            }

            case TransformationKind::OperatorInsertion: {
                std::size_t ordinal = 0;
                for (std::size_t s = 0; s < sites.sites.size(); ++s, ++ordinal) {
                    EditMap edits{{sites.sites[s].node.get(),
                                   Edit{Edit::Op::Replace,
                                        mk_aunary(ANodeKind::Not, sites.sites[s].node)}}};
                    emit(detail::finish_root(detail::apply_edits(root, edits)), kind, ordinal, -1, "~");
                }
                for (std::size_t s = 0; s < sites.slots.size(); ++s) {
                    const Slot& slot = sites.slots[s];
                    if (slot.index == 0 || slot.index >= slot.seq->items.size()) continue;
                    for (ANodeKind op : {ANodeKind::Alt, ANodeKind::And}) {
                        emit(detail::join_pair(root, slot.seq.get(), slot.index - 1, op), kind,
                             ordinal, -1, op == ANodeKind::Alt ? "|" : "&");
                        ++ordinal;
                    }
                }
                break;
            }

            case TransformationKind::OperatorDeletion: {
                std::size_t ordinal = 0;
                for (const auto& nt : sites.nots) {
                    EditMap edits{{nt.get(), Edit{Edit::Op::Replace, nt->child}}};
                    emit(detail::finish_root(detail::apply_edits(root, edits)), kind, ordinal++, -1, "~");
                }
                for (const auto& j : sites.juncts)
                    for (std::size_t i = 0; i + 1 < j->items.size(); ++i)
                        emit(detail::merge_junct(root, j.get(), i), kind, ordinal++, -1,
                             j->kind == ANodeKind::Alt ? "|" : "&");
                for (std::size_t s = 0; s < sites.sites.size(); ++s) {
                    if (!sites.sites[s].quantified) continue;
                    EditMap edits{{sites.sites[s].node.get(), Edit{Edit::Op::Unwrap, nullptr, 0, false}}};
                    emit(detail::finish_root(detail::apply_edits(root, edits)), kind, ordinal++, -1,
                         "quantifier");
                }
                break;
            }

            case TransformationKind::ElementAdjustment: {
                // Moves an element item from its sequence position to another slot.
                std::size_t ordinal = 0;
                for (const Slot& src : sites.slots) {
                    if (src.index >= src.seq->items.size()) continue;
                    const ANodePtr& item = src.seq->items[src.index];
                    bool movable = item->kind == ANodeKind::Token ||
                                   (item->kind == ANodeKind::Quant &&
                                    item->child->kind == ANodeKind::Token);
                    if (!movable) continue;
                    if (src.seq->items.size() == 1) continue;  // would empty the context
                    for (std::size_t d = 0; d < sites.slots.size(); ++d) {
                        const Slot& dst = sites.slots[d];
                        if (dst.seq == src.seq &&
                            (dst.index == src.index || dst.index == src.index + 1))
                            continue;  // no-op
                        if (detail::tree_contains(item, dst.seq.get())) continue;
                        emit(detail::move_item(root, src.seq.get(), src.index, dst.seq.get(), dst.index,
                                               item),
                             kind, ordinal, static_cast<std::ptrdiff_t>(d), "");
                    }
                    ++ordinal;
                }
                break;
            }

            case TransformationKind::ElementExchanging: {
                std::size_t ordinal = 0;
                for (std::size_t i = 0; i < sites.sites.size(); ++i) {
                    for (std::size_t j = i + 1; j < sites.sites.size(); ++j) {
                        const ANodePtr& x = sites.sites[i].node;
                        const ANodePtr& y = sites.sites[j].node;
                        if (detail::tree_contains(x, y.get()) || detail::tree_contains(y, x.get()))
                            continue;
                        EditMap edits{{x.get(), Edit{Edit::Op::Replace, y}},
                                      {y.get(), Edit{Edit::Op::Replace, x}}};
                        emit(detail::finish_root(detail::apply_edits(root, edits)), kind, ordinal++, -1,
                             "");
                    }
                }
                break;
            }
        }
    }

    if (out.members.size() > options.cap) {
        out.truncated = out.members.size() - options.cap;
        out.members.resize(options.cap);
    }
    out.origin = a.with_dictionary(dict);
    for (auto& m : out.members) m.abstract = m.abstract.with_dictionary(dict);
    return out;
}

}  // namespace regexmend
