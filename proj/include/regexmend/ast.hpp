#pragma once

#include <bitset>
#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "regexmend/alphabet.hpp"
#include "regexmend/errors.hpp"

namespace regexmend {

// AST of the extended regex language: character classes, counted repetition
// {m,n}, disjunction |, concatenation, conjunction &, and negation ~.
enum class RegexKind {
    Empty,      // the empty language
    Epsilon,    // the empty word
    Literal,    // a single symbol
    CharClass,  // [C], possibly negated; `.` is the full-alphabet class
    Const,      // a run of symbols treated as one unit (printer/abstraction only)
    Concat,
    Alt,
    And,
    Not,
    Repeat,     // child{min,max}, max may be infinite
    Group       // explicit parentheses
};

// Surface form a Repeat was written in; printing reproduces it.
enum class QuantStyle : std::uint8_t {
    Braces,    // {m,n} ({m,} when max is infinite)
    Question,  // ?
    Star,      // *
    Plus,      // +
    Exact      // {i}
};

inline constexpr std::uint32_t kRepeatInf = std::numeric_limits<std::uint32_t>::max();

// One class member: a single char (lo == hi) or an inclusive range.
struct ClassItem {
    unsigned char lo = 0;
    unsigned char hi = 0;
    bool operator==(const ClassItem&) const = default;
};

struct RegexNode;
using RegexPtr = std::shared_ptr<const RegexNode>;

struct RegexNode {
    RegexKind kind;

    char lit = 0;                  // Literal
    std::vector<ClassItem> items;  // CharClass, as written
    bool negated = false;          // CharClass
    bool dot = false;              // CharClass written as `.`
    std::bitset<256> cls;          // CharClass, resolved member set
    std::string text;              // Const

    RegexPtr left, right;  // Concat / Alt / And
    RegexPtr child;        // Not / Repeat / Group

    std::uint32_t min = 0, max = 0;               // Repeat
    QuantStyle style = QuantStyle::Braces;        // Repeat
};

inline RegexPtr mk_empty() {
    auto n = std::make_shared<RegexNode>();
    n->kind = RegexKind::Empty;
    return n;
}

inline RegexPtr mk_epsilon() {
    auto n = std::make_shared<RegexNode>();
    n->kind = RegexKind::Epsilon;
    return n;
}

inline RegexPtr mk_literal(char c) {
    auto n = std::make_shared<RegexNode>();
    n->kind = RegexKind::Literal;
    n->lit = c;
    return n;
}

// Builds a class node, resolving the member set against the alphabet.
// The effective set must be a non-empty subset of the alphabet.
inline RegexPtr mk_class(std::vector<ClassItem> items, bool negated, bool dot, const Alphabet& alphabet) {
    auto n = std::make_shared<RegexNode>();
    n->kind = RegexKind::CharClass;
    n->negated = negated;
    n->dot = dot;
    if (dot) {
        n->cls = alphabet.bits();
    } else {
        std::bitset<256> listed;
        for (const auto& it : items) {
            if (it.lo > it.hi) throw Error("class range out of order");
            for (int c = it.lo; c <= it.hi; ++c) {
                if (!alphabet.contains(static_cast<char>(c)))
                    throw AlphabetViolation("class member '" + std::string(1, static_cast<char>(c)) +
                                            "' is outside the alphabet");
                listed.set(c);
            }
        }
        n->cls = negated ? (alphabet.bits() & ~listed) : listed;
    }
    n->items = std::move(items);
    if (n->cls.none()) throw Error("character class denotes the empty set");
    return n;
}

// Class node straight from a resolved member set (engine-internal shapes).
inline RegexPtr mk_class_from_bits(const std::bitset<256>& bits, const Alphabet& alphabet);

inline RegexPtr mk_const(std::string text) {
    if (text.empty()) throw Error("const must be non-empty");
    auto n = std::make_shared<RegexNode>();
    n->kind = RegexKind::Const;
    n->text = std::move(text);
    return n;
}

inline RegexPtr mk_binary(RegexKind kind, RegexPtr l, RegexPtr r) {
    auto n = std::make_shared<RegexNode>();
    n->kind = kind;
    n->left = std::move(l);
    n->right = std::move(r);
    return n;
}

inline RegexPtr mk_concat(RegexPtr l, RegexPtr r) { return mk_binary(RegexKind::Concat, std::move(l), std::move(r)); }
inline RegexPtr mk_alt(RegexPtr l, RegexPtr r) { return mk_binary(RegexKind::Alt, std::move(l), std::move(r)); }
inline RegexPtr mk_and(RegexPtr l, RegexPtr r) { return mk_binary(RegexKind::And, std::move(l), std::move(r)); }

inline RegexPtr mk_not(RegexPtr c) {
    auto n = std::make_shared<RegexNode>();
    n->kind = RegexKind::Not;
    n->child = std::move(c);
    return n;
}

inline RegexPtr mk_group(RegexPtr c) {
    auto n = std::make_shared<RegexNode>();
    n->kind = RegexKind::Group;
    n->child = std::move(c);
    return n;
}

inline RegexPtr mk_repeat(RegexPtr c, std::uint32_t min, std::uint32_t max,
                          QuantStyle style = QuantStyle::Braces) {
    if (min > max) throw Error("repetition requires min <= max");
    auto n = std::make_shared<RegexNode>();
    n->kind = RegexKind::Repeat;
    n->child = std::move(c);
    n->min = min;
    n->max = max;
    n->style = style;
    return n;
}

inline bool structural_equal(const RegexPtr& a, const RegexPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case RegexKind::Empty:
        case RegexKind::Epsilon:
            return true;
        case RegexKind::Literal:
            return a->lit == b->lit;
        case RegexKind::CharClass:
            return a->items == b->items && a->negated == b->negated && a->dot == b->dot && a->cls == b->cls;
        case RegexKind::Const:
            return a->text == b->text;
        case RegexKind::Concat:
        case RegexKind::Alt:
        case RegexKind::And:
            return structural_equal(a->left, b->left) && structural_equal(a->right, b->right);
        case RegexKind::Not:
        case RegexKind::Group:
            return structural_equal(a->child, b->child);
        case RegexKind::Repeat:
            return a->min == b->min && a->max == b->max && a->style == b->style &&
                   structural_equal(a->child, b->child);
    }
    return false;
}

inline std::size_t ast_size(const RegexPtr& r) {
    if (!r) return 0;
    return 1 + ast_size(r->left) + ast_size(r->right) + ast_size(r->child);
}

inline std::size_t ast_depth(const RegexPtr& r) {
    if (!r) return 0;
    std::size_t d = std::max(ast_depth(r->left), std::max(ast_depth(r->right), ast_depth(r->child)));
    return 1 + d;
}

// ---- canonical printing ------------------------------------------------

namespace detail {

inline bool is_metachar(char c) {
    switch (c) {
        case '(': case ')': case '[': case ']': case '{': case '}':
        case '|': case '&': case '~': case '*': case '+': case '?':
        case '.': case '\\':
            return true;
        default:
            return false;
    }
}

inline void append_literal(std::string& out, char c) {
    if (is_metachar(c)) out.push_back('\\');
    out.push_back(c);
}

inline void append_class_char(std::string& out, unsigned char c) {
    if (c == ']' || c == '\\' || c == '^' || c == '-' || c == '[') out.push_back('\\');
    out.push_back(static_cast<char>(c));
}

// Binding strength used for minimal parenthesization. Postfix quantifiers
// bind tighter than prefix ~; both bind tighter than concatenation.
inline int print_prec(const RegexNode& n) {
    switch (n.kind) {
        case RegexKind::Alt: return 1;
        case RegexKind::And: return 2;
        case RegexKind::Concat: return 3;
        case RegexKind::Not: return 4;
        case RegexKind::Repeat: return 5;
        default: return 6;
    }
}

}  // namespace detail

inline std::string quantifier_text(std::uint32_t min, std::uint32_t max, QuantStyle style) {
    switch (style) {
        case QuantStyle::Question: return "?";
        case QuantStyle::Star: return "*";
        case QuantStyle::Plus: return "+";
        case QuantStyle::Exact: return "{" + std::to_string(min) + "}";
        case QuantStyle::Braces: break;
    }
    if (max == kRepeatInf) return "{" + std::to_string(min) + ",}";
    return "{" + std::to_string(min) + "," + std::to_string(max) + "}";
}

inline std::string class_text(const RegexNode& n) {
    if (n.dot) return ".";
    std::string out = "[";
    if (n.negated) out.push_back('^');
    for (const auto& it : n.items) {
        detail::append_class_char(out, it.lo);
        if (it.hi != it.lo) {
            out.push_back('-');
            detail::append_class_char(out, it.hi);
        }
    }
    out.push_back(']');
    return out;
}

namespace detail {

// `bare` marks positions (root, group interior) where ε prints as the empty
// string; elsewhere it needs the explicit form "()" to stay parseable.
inline void print_node(const RegexNode& n, int min_prec, bool bare, std::string& out) {
    bool paren = print_prec(n) < min_prec;
    if (paren) out.push_back('(');
    switch (n.kind) {
        case RegexKind::Empty:
            out += "[]";  // no valid surface form; diagnostic only
            break;
        case RegexKind::Epsilon:
            if (!bare && !paren) out += "()";
            break;
        case RegexKind::Literal:
            append_literal(out, n.lit);
            break;
        case RegexKind::CharClass:
            out += class_text(n);
            break;
        case RegexKind::Const:
            for (char c : n.text) append_literal(out, c);
            break;
        case RegexKind::Concat:
            print_node(*n.left, 3, false, out);
            print_node(*n.right, 4, false, out);
            break;
        case RegexKind::Alt:
            print_node(*n.left, 1, false, out);
            out.push_back('|');
            print_node(*n.right, 2, false, out);
            break;
        case RegexKind::And:
            print_node(*n.left, 2, false, out);
            out.push_back('&');
            print_node(*n.right, 3, false, out);
            break;
        case RegexKind::Not:
            out.push_back('~');
            print_node(*n.child, 4, false, out);
            break;
        case RegexKind::Repeat:
            print_node(*n.child, 5, false, out);
            out += quantifier_text(n.min, n.max, n.style);
            break;
        case RegexKind::Group:
            out.push_back('(');
            print_node(*n.child, 0, true, out);
            out.push_back(')');
            break;
    }
    if (paren) out.push_back(')');
}

}  // namespace detail

// Canonical printing; parse(to_string(r)) reparses to a structurally equal
// AST for any parser-produced r.
inline std::string to_string(const RegexPtr& r) {
    std::string out;
    detail::print_node(*r, 0, true, out);
    return out;
}

struct RegexMetrics {
    std::size_t ast_size = 0;
    std::size_t depth = 0;
    std::size_t length = 0;
};

inline RegexMetrics metrics(const RegexPtr& r) {
    return RegexMetrics{ast_size(r), ast_depth(r), to_string(r).size()};
}

// Rebuilds a class node from a resolved bit set, choosing the plain or the
// negated spelling, whichever lists fewer items.
inline RegexPtr mk_class_from_bits(const std::bitset<256>& bits, const Alphabet& alphabet) {
    auto ranges = [](const std::bitset<256>& b) {
        std::vector<ClassItem> items;
        int c = 0;
        while (c < 256) {
            if (!b.test(c)) { ++c; continue; }
            int lo = c;
            while (c + 1 < 256 && b.test(c + 1)) ++c;
            items.push_back({static_cast<unsigned char>(lo), static_cast<unsigned char>(c)});
            ++c;
        }
        return items;
    };
    auto n = std::make_shared<RegexNode>();
    n->kind = RegexKind::CharClass;
    n->cls = bits;
    if (bits == alphabet.bits()) {
        n->dot = true;
        return n;
    }
    std::bitset<256> complement = alphabet.bits() & ~bits;
    if (complement.count() < bits.count()) {
        n->negated = true;
        n->items = ranges(complement);
    } else {
        n->items = ranges(bits);
    }
    if (n->cls.none()) throw Error("character class denotes the empty set");
    return n;
}

}  // namespace regexmend
