#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "regexmend/ast.hpp"

namespace regexmend {

// Rewriting rules, by level:
//   0:  [C] -> <C_C>      const -> <C_const>     {m,n} -> <Q_{m,n}>     .* -> <S>
//   1:  ~(r) -> <N_r>     .*r -> <SL_r>          r.* -> <SR_r>          .*r.* -> <SLR_r>
//   2:  ~(.*r) -> <NSL_r> ~(r.*) -> <NSR_r>      ~(.*r.*) -> <NSLR_r>
// where r is a class or a const. Well-known classes keep their short names:
// <NUM>=[0-9], <LET>=[A-Za-z], <CAP>=[A-Z], <VOW>=[AEIOUaeiou], <S>=.*

enum class TokenKind { Element, Quantifier };

struct DictEntry {
    std::string name;
    TokenKind kind = TokenKind::Element;
    int level = 0;
    RegexPtr concrete;  // Element entries only
    std::uint32_t min = 0, max = 0;  // Quantifier entries only
    QuantStyle style = QuantStyle::Braces;
};

// Bijective token <-> concrete mapping. Tokens are content-addressed: the
// name derives from the canonical text of what it stands for, so identical
// sub-regexes share one token.
class RewriteDictionary {
public:
    std::size_t size() const { return entries_.size(); }
    const DictEntry& at(std::size_t i) const { return entries_.at(i); }

    std::optional<std::size_t> find(const std::string& name) const {
        auto it = by_name_.find(name);
        if (it == by_name_.end()) return std::nullopt;
        return it->second;
    }

    std::size_t intern_element(std::string name, int level, RegexPtr concrete) {
        auto it = by_name_.find(name);
        if (it != by_name_.end()) return it->second;
        DictEntry e;
        e.name = name;
        e.kind = TokenKind::Element;
        e.level = level;
        e.concrete = std::move(concrete);
        by_name_.emplace(std::move(name), entries_.size());
        entries_.push_back(std::move(e));
        return entries_.size() - 1;
    }

    std::size_t intern_quantifier(std::uint32_t min, std::uint32_t max, QuantStyle style) {
        std::string name = "Q_" + quantifier_text(min, max, style);
        auto it = by_name_.find(name);
        if (it != by_name_.end()) return it->second;
        DictEntry e;
        e.name = name;
        e.kind = TokenKind::Quantifier;
        e.level = 0;
        e.min = min;
        e.max = max;
        e.style = style;
        by_name_.emplace(std::move(name), entries_.size());
        entries_.push_back(std::move(e));
        return entries_.size() - 1;
    }

private:
    std::vector<DictEntry> entries_;
    std::map<std::string, std::size_t> by_name_;
};

enum class ANodeKind { Token, Quant, Seq, Alt, And, Not, Group, Epsilon };

struct ANode;
using ANodePtr = std::shared_ptr<const ANode>;

struct ANode {
    ANodeKind kind;
    std::size_t token = 0;         // Token: element entry; Quant: quantifier entry
    ANodePtr child;                // Quant / Not / Group
    std::vector<ANodePtr> items;   // Seq / Alt / And
};

inline ANodePtr mk_atoken(std::size_t entry) {
    auto n = std::make_shared<ANode>();
    n->kind = ANodeKind::Token;
    n->token = entry;
    return n;
}

inline ANodePtr mk_aquant(ANodePtr child, std::size_t entry) {
    auto n = std::make_shared<ANode>();
    n->kind = ANodeKind::Quant;
    n->child = std::move(child);
    n->token = entry;
    return n;
}

inline ANodePtr mk_alist(ANodeKind kind, std::vector<ANodePtr> items) {
    if (kind == ANodeKind::Seq && items.size() == 1) return items.front();
    auto n = std::make_shared<ANode>();
    n->kind = kind;
    n->items = std::move(items);
    return n;
}

inline ANodePtr mk_aunary(ANodeKind kind, ANodePtr child) {
    auto n = std::make_shared<ANode>();
    n->kind = kind;
    n->child = std::move(child);
    return n;
}

inline ANodePtr mk_aepsilon() {
    auto n = std::make_shared<ANode>();
    n->kind = ANodeKind::Epsilon;
    return n;
}

// Token sequence with residual operators plus the dictionary mapping tokens
// back to concrete sub-regexes.
struct AbstractRegex {
    ANodePtr root;
    std::shared_ptr<const RewriteDictionary> dict;
    int l_max = 0;

    std::string text() const;

    AbstractRegex with_dictionary(std::shared_ptr<const RewriteDictionary> d) const {
        return AbstractRegex{root, std::move(d), l_max};
    }
};

namespace detail {

inline int aprint_prec(const ANode& n) {
    switch (n.kind) {
        case ANodeKind::Alt: return 1;
        case ANodeKind::And: return 2;
        case ANodeKind::Seq: return 3;
        case ANodeKind::Not: return 4;
        case ANodeKind::Quant: return 5;
        default: return 6;
    }
}

inline void aprint(const ANode& n, const RewriteDictionary& dict, int min_prec, std::string& out) {
    bool paren = aprint_prec(n) < min_prec;
    if (paren) out.push_back('(');
    switch (n.kind) {
        case ANodeKind::Token:
            out += "<" + dict.at(n.token).name + ">";
            break;
        case ANodeKind::Quant:
            aprint(*n.child, dict, 5, out);
            out += "<" + dict.at(n.token).name + ">";
            break;
        case ANodeKind::Seq:
            for (const auto& it : n.items) aprint(*it, dict, 3, out);
            break;
        case ANodeKind::Alt:
            for (std::size_t i = 0; i < n.items.size(); ++i) {
                if (i) out.push_back('|');
                aprint(*n.items[i], dict, 2, out);
            }
            break;
        case ANodeKind::And:
            for (std::size_t i = 0; i < n.items.size(); ++i) {
                if (i) out.push_back('&');
                aprint(*n.items[i], dict, 3, out);
            }
            break;
        case ANodeKind::Not:
            out.push_back('~');
            aprint(*n.child, dict, 4, out);
            break;
        case ANodeKind::Group:
            out.push_back('(');
            aprint(*n.child, dict, 0, out);
            out.push_back(')');
            break;
        case ANodeKind::Epsilon:
            break;
    }
    if (paren) out.push_back(')');
}

}  // namespace detail

inline std::string AbstractRegex::text() const {
    std::string out;
    detail::aprint(*root, *dict, 0, out);
    return out;
}

// ---- preprocess ----------------------------------------------------------

namespace detail {

inline void flatten_concat(const RegexPtr& r, std::vector<RegexPtr>& out) {
    if (r->kind == RegexKind::Concat) {
        flatten_concat(r->left, out);
        flatten_concat(r->right, out);
    } else {
        out.push_back(r);
    }
}

inline void flatten_op(RegexKind kind, const RegexPtr& r, std::vector<RegexPtr>& out) {
    if (r->kind == kind) {
        flatten_op(kind, r->left, out);
        flatten_op(kind, r->right, out);
    } else {
        out.push_back(r);
    }
}

inline bool is_star_dot(const RegexPtr& r) {
    return r->kind == RegexKind::Repeat && r->min == 0 && r->max == kRepeatInf &&
           r->style == QuantStyle::Star && r->child->kind == RegexKind::CharClass && r->child->dot;
}

inline RegexPtr unwrap_groups(RegexPtr r) {
    while (r->kind == RegexKind::Group) r = r->child;
    return r;
}

// Short name for a class/const element: the fixed alias when the class is
// spelled as one of the well-known ones, else its canonical text.
inline std::string element_short_name(const RegexPtr& r) {
    if (r->kind == RegexKind::CharClass) {
        std::string body = class_text(*r);
        if (body == "[0-9]") return "NUM";
        if (body == "[A-Za-z]") return "LET";
        if (body == "[A-Z]") return "CAP";
        if (body == "[AEIOUaeiou]") return "VOW";
        return body;
    }
    std::string out;
    if (r->kind == RegexKind::Literal) {
        append_literal(out, r->lit);
    } else if (r->kind == RegexKind::Const) {
        for (char c : r->text) append_literal(out, c);
    } else {
        std::vector<RegexPtr> fs;
        flatten_concat(r, fs);
        for (const auto& f : fs) append_literal(out, f->lit);
    }
    return out;
}

inline std::string class_token_name(const RegexPtr& r) {
    std::string short_name = element_short_name(r);
    if (short_name == "NUM" || short_name == "LET" || short_name == "CAP" || short_name == "VOW")
        return short_name;
    return "C_" + short_name;
}

class Preprocessor {
public:
    Preprocessor(int l_max, RewriteDictionary& dict) : l_max_(l_max), dict_(dict) {}

    ANodePtr sequence(const RegexPtr& r) {
        std::vector<RegexPtr> factors;
        flatten_concat(r, factors);
        // A factor is either still concrete or already replaced by a token.
        std::vector<std::variant<RegexPtr, ANodePtr>> work(factors.begin(), factors.end());

        if (l_max_ >= 2) level2(work);
        if (l_max_ >= 1) level1(work);
        std::vector<ANodePtr> items = level0(work);
        return mk_alist(ANodeKind::Seq, std::move(items));
    }

private:
    int l_max_;
    RewriteDictionary& dict_;

    static bool is_class_or_literal(const RegexPtr& r) {
        return r->kind == RegexKind::CharClass || r->kind == RegexKind::Literal ||
               r->kind == RegexKind::Const;
    }

    // A class, or a const (single Const node or a pure literal chain).
    static bool is_element_regex(const RegexPtr& r) {
        if (is_class_or_literal(r)) return true;
        if (r->kind != RegexKind::Concat) return false;
        std::vector<RegexPtr> fs;
        flatten_concat(r, fs);
        for (const auto& f : fs)
            if (f->kind != RegexKind::Literal) return false;
        return true;
    }

    // A class factor, or a maximal literal run starting at `i`. Returns the
    // exclusive end index, or `i` when no element starts here.
    static std::size_t element_span(const std::vector<std::variant<RegexPtr, ANodePtr>>& w, std::size_t i) {
        if (i >= w.size() || !std::holds_alternative<RegexPtr>(w[i])) return i;
        const RegexPtr& f = std::get<RegexPtr>(w[i]);
        if (f->kind == RegexKind::CharClass || f->kind == RegexKind::Const) return i + 1;
        if (f->kind != RegexKind::Literal) return i;
        std::size_t j = i;
        while (j < w.size() && std::holds_alternative<RegexPtr>(w[j]) &&
               std::get<RegexPtr>(w[j])->kind == RegexKind::Literal)
            ++j;
        return j;
    }

    static RegexPtr fold_factors(const std::vector<RegexPtr>& fs) {
        RegexPtr acc = fs.front();
        for (std::size_t i = 1; i < fs.size(); ++i) acc = mk_concat(acc, fs[i]);
        return acc;
    }

    static RegexPtr slice(const std::vector<std::variant<RegexPtr, ANodePtr>>& w, std::size_t b,
                          std::size_t e) {
        std::vector<RegexPtr> fs;
        for (std::size_t i = b; i < e; ++i) fs.push_back(std::get<RegexPtr>(w[i]));
        return fold_factors(fs);
    }

    // Matches the body of a ~(...) against [.*r], [r.*], [.*r.*]; returns the
    // token family suffix or empty when no pattern applies.
    static std::string not_body_family(const std::vector<RegexPtr>& fs, RegexPtr& element_out) {
        auto elem_end = [&](std::size_t i) {
            if (i >= fs.size() || !is_class_or_literal(fs[i])) return i;
            if (fs[i]->kind != RegexKind::Literal) return i + 1;
            std::size_t j = i;
            while (j < fs.size() && fs[j]->kind == RegexKind::Literal) ++j;
            return j;
        };
        auto fold_range = [&](std::size_t b, std::size_t e) {
            std::vector<RegexPtr> sub(fs.begin() + b, fs.begin() + e);
            return fold_factors(sub);
        };
        if (!fs.empty() && is_star_dot(fs[0])) {
            std::size_t e = elem_end(1);
            if (e > 1) {
                if (e == fs.size()) {
                    element_out = fold_range(1, e);
                    return "SL";
                }
                if (e + 1 == fs.size() && is_star_dot(fs[e])) {
                    element_out = fold_range(1, e);
                    return "SLR";
                }
            }
            return "";
        }
        std::size_t e = elem_end(0);
        if (e > 0 && e + 1 == fs.size() && is_star_dot(fs[e])) {
            element_out = fold_range(0, e);
            return "SR";
        }
        return "";
    }

    void level2(std::vector<std::variant<RegexPtr, ANodePtr>>& w) {
        for (auto& slot : w) {
            if (!std::holds_alternative<RegexPtr>(slot)) continue;
            const RegexPtr f = std::get<RegexPtr>(slot);
            if (f->kind != RegexKind::Not) continue;
            std::vector<RegexPtr> body;
            flatten_concat(unwrap_groups(f->child), body);
            RegexPtr element;
            std::string family = not_body_family(body, element);
            if (family.empty()) continue;
            std::string name = "N" + family + "_" + element_short_name(element);
            slot = mk_atoken(dict_.intern_element(std::move(name), 2, f));
        }
    }

    void level1(std::vector<std::variant<RegexPtr, ANodePtr>>& w) {
        // ~(r) with r a class or const.
        for (auto& slot : w) {
            if (!std::holds_alternative<RegexPtr>(slot)) continue;
            const RegexPtr f = std::get<RegexPtr>(slot);
            if (f->kind != RegexKind::Not) continue;
            RegexPtr body = unwrap_groups(f->child);
            if (!is_element_regex(body)) continue;
            std::string name = "N_" + element_short_name(body);
            slot = mk_atoken(dict_.intern_element(std::move(name), 1, f));
        }

        // .*r / r.* / .*r.*, greedy left to right, longest first.
        std::vector<std::variant<RegexPtr, ANodePtr>> out;
        std::size_t i = 0;
        auto concrete_is = [&](std::size_t k, auto&& pred) {
            return k < w.size() && std::holds_alternative<RegexPtr>(w[k]) && pred(std::get<RegexPtr>(w[k]));
        };
        while (i < w.size()) {
            if (concrete_is(i, is_star_dot)) {
                std::size_t e = element_span(w, i + 1);
                if (e > i + 1) {
                    RegexPtr element = slice(w, i + 1, e);
                    if (concrete_is(e, is_star_dot)) {
                        RegexPtr whole = slice(w, i, e + 1);
                        out.push_back(mk_atoken(dict_.intern_element(
                            "SLR_" + element_short_name(element), 1, whole)));
                        i = e + 1;
                    } else {
                        RegexPtr whole = slice(w, i, e);
                        out.push_back(mk_atoken(dict_.intern_element(
                            "SL_" + element_short_name(element), 1, whole)));
                        i = e;
                    }
                    continue;
                }
            } else {
                std::size_t e = element_span(w, i);
                if (e > i && concrete_is(e, is_star_dot)) {
                    RegexPtr element = slice(w, i, e);
                    RegexPtr whole = slice(w, i, e + 1);
                    out.push_back(mk_atoken(dict_.intern_element("SR_" + element_short_name(element), 1, whole)));
                    i = e + 1;
                    continue;
                }
            }
            out.push_back(std::move(w[i]));
            ++i;
        }
        w.swap(out);
    }

    std::vector<ANodePtr> level0(std::vector<std::variant<RegexPtr, ANodePtr>>& w) {
        std::vector<ANodePtr> items;
        std::size_t i = 0;
        while (i < w.size()) {
            if (std::holds_alternative<ANodePtr>(w[i])) {
                items.push_back(std::get<ANodePtr>(w[i]));
                ++i;
                continue;
            }
            const RegexPtr f = std::get<RegexPtr>(w[i]);
            if (f->kind == RegexKind::Literal) {
                std::size_t e = element_span(w, i);
                RegexPtr run = slice(w, i, e);
                items.push_back(mk_atoken(dict_.intern_element("C_" + element_short_name(run), 0, run)));
                i = e;
                continue;
            }
            items.push_back(factor(f));
            ++i;
        }
        return items;
    }

    ANodePtr factor(const RegexPtr& f) {
        switch (f->kind) {
            case RegexKind::Epsilon:
                return mk_aepsilon();
            case RegexKind::Literal:
            case RegexKind::Const:
                return mk_atoken(dict_.intern_element("C_" + element_short_name(f), 0, f));
            case RegexKind::CharClass:
                return mk_atoken(dict_.intern_element(class_token_name(f), 0, f));
            case RegexKind::Group:
                return mk_aunary(ANodeKind::Group, sequence(f->child));
            case RegexKind::Not:
                return mk_aunary(ANodeKind::Not, sequence(f->child));
            case RegexKind::Alt:
            case RegexKind::And: {
                std::vector<RegexPtr> ops;
                flatten_op(f->kind, f, ops);
                std::vector<ANodePtr> items;
                for (const auto& o : ops) items.push_back(sequence(o));
                return mk_alist(f->kind == RegexKind::Alt ? ANodeKind::Alt : ANodeKind::And,
                                std::move(items));
            }
            case RegexKind::Repeat: {
                if (is_star_dot(f)) return mk_atoken(dict_.intern_element("S", 0, f));
                std::size_t q = dict_.intern_quantifier(f->min, f->max, f->style);
                return mk_aquant(factor(f->child), q);
            }
            case RegexKind::Concat:
                return sequence(f);
            case RegexKind::Empty:
                throw Error("the empty-set node has no abstract form");
        }
        throw Error("unreachable");
    }
};

}  // namespace detail

// Abstracts r by applying the rewriting rules greedily left to right, level
// descending from l_max to 0, recording every replacement in the dictionary.
inline AbstractRegex preprocess(const RegexPtr& r, int l_max) {
    if (l_max < 0 || l_max > 2) throw Error("l_max must be 0, 1 or 2");
    auto dict = std::make_shared<RewriteDictionary>();
    detail::Preprocessor pp(l_max, *dict);
    ANodePtr root = pp.sequence(r);
    return AbstractRegex{std::move(root), std::move(dict), l_max};
}

// ---- unpreprocess ---------------------------------------------------------

namespace detail {

// Collects the concrete factor list of one abstract item; token entries are
// spliced as their original factor chains so associativity round-trips.
inline void concrete_factors(const ANode& n, const RewriteDictionary& dict, std::vector<RegexPtr>& out);

inline RegexPtr concrete_one(const ANode& n, const RewriteDictionary& dict) {
    std::vector<RegexPtr> fs;
    concrete_factors(n, dict, fs);
    if (fs.empty()) return mk_epsilon();
    RegexPtr acc = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i) acc = mk_concat(acc, fs[i]);
    return acc;
}

inline const DictEntry& entry_of(const ANode& n, const RewriteDictionary& dict, TokenKind want) {
    if (n.token >= dict.size()) throw UnknownToken("token index out of range for this dictionary");
    const DictEntry& e = dict.at(n.token);
    if (e.kind != want) throw UnknownToken("token <" + e.name + "> has the wrong kind here");
    return e;
}

inline void concrete_factors(const ANode& n, const RewriteDictionary& dict, std::vector<RegexPtr>& out) {
    switch (n.kind) {
        case ANodeKind::Token: {
            const DictEntry& e = entry_of(n, dict, TokenKind::Element);
            if (!e.concrete) throw UnknownToken("token <" + e.name + "> is absent from the dictionary");
            flatten_concat(e.concrete, out);
            return;
        }
        case ANodeKind::Seq:
            for (const auto& it : n.items) concrete_factors(*it, dict, out);
            return;
        case ANodeKind::Quant: {
            const DictEntry& q = entry_of(n, dict, TokenKind::Quantifier);
            out.push_back(mk_repeat(concrete_one(*n.child, dict), q.min, q.max, q.style));
            return;
        }
        case ANodeKind::Group:
            out.push_back(mk_group(concrete_one(*n.child, dict)));
            return;
        case ANodeKind::Not:
            out.push_back(mk_not(concrete_one(*n.child, dict)));
            return;
        case ANodeKind::Alt:
        case ANodeKind::And: {
            RegexPtr acc = concrete_one(*n.items.front(), dict);
            for (std::size_t i = 1; i < n.items.size(); ++i) {
                RegexPtr rhs = concrete_one(*n.items[i], dict);
                acc = n.kind == ANodeKind::Alt ? mk_alt(std::move(acc), std::move(rhs))
                                               : mk_and(std::move(acc), std::move(rhs));
            }
            out.push_back(std::move(acc));
            return;
        }
        case ANodeKind::Epsilon:
            return;  // ε contributes no factor
    }
}

}  // namespace detail

// Substitutes every token by its dictionary entry. Throws UnknownToken for
// tokens absent from the attached dictionary (callers merge dictionaries
// before mixing abstract regexes).
inline RegexPtr unpreprocess(const AbstractRegex& a) {
    return detail::concrete_one(*a.root, *a.dict);
}

}  // namespace regexmend
