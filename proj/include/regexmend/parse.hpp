#pragma once

#include <cstdint>
#include <string_view>

#include "regexmend/ast.hpp"

namespace regexmend {

// Recursive-descent parser for the extended syntax. Precedence, loosest to
// tightest: `|`, `&`, concatenation, `~`, postfix quantifiers. `.` is the
// full-alphabet class, classes support ranges and leading `^`, and `\`
// escapes a metacharacter. Whitespace is significant (space is a symbol).
//
//   alt    := conj ('|' conj)*
//   conj   := concat ('&' concat)*
//   concat := negation+
//   negation := '~' negation | postfix
//   postfix  := atom quantifier*
//   atom   := literal | '.' | class | '(' alt? ')'
//
// The empty input denotes ε.
namespace detail {

inline constexpr std::uint32_t kMaxParsedBound = 1000000000;

class Parser {
public:
    Parser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

    RegexPtr run() {
        if (text_.empty()) return mk_epsilon();
        RegexPtr r = parse_alt();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return r;
    }

private:
    std::string_view text_;
    const Alphabet& alphabet_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& reason) const { throw ParseError(pos_, reason); }

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    bool at(char c) const { return !eof() && peek() == c; }
    bool accept(char c) {
        if (!at(c)) return false;
        ++pos_;
        return true;
    }

    RegexPtr parse_alt() {
        RegexPtr r = parse_conj();
        while (accept('|')) r = mk_alt(std::move(r), parse_conj());
        return r;
    }

    RegexPtr parse_conj() {
        RegexPtr r = parse_concat();
        while (accept('&')) r = mk_and(std::move(r), parse_concat());
        return r;
    }

    bool starts_item() const {
        if (eof()) return false;
        char c = peek();
        return c != '|' && c != '&' && c != ')' && c != '*' && c != '+' && c != '?' && c != '{' &&
               c != '}' && c != ']';
    }

    RegexPtr parse_concat() {
        if (!starts_item()) fail("expected an expression");
        RegexPtr r = parse_negation();
        while (starts_item()) r = mk_concat(std::move(r), parse_negation());
        return r;
    }

    RegexPtr parse_negation() {
        if (accept('~')) return mk_not(parse_negation());
        return parse_postfix();
    }

    RegexPtr parse_postfix() {
        RegexPtr r = parse_atom();
        for (;;) {
            if (accept('?')) {
                r = mk_repeat(std::move(r), 0, 1, QuantStyle::Question);
            } else if (accept('*')) {
                r = mk_repeat(std::move(r), 0, kRepeatInf, QuantStyle::Star);
            } else if (accept('+')) {
                r = mk_repeat(std::move(r), 1, kRepeatInf, QuantStyle::Plus);
            } else if (at('{')) {
                r = parse_braces(std::move(r));
            } else {
                return r;
            }
        }
    }

    std::uint32_t parse_number() {
        if (eof() || peek() < '0' || peek() > '9') fail("expected a number");
        std::uint64_t v = 0;
        while (!eof() && peek() >= '0' && peek() <= '9') {
            v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
            if (v > kMaxParsedBound) fail("quantifier bound too large");
            ++pos_;
        }
        return static_cast<std::uint32_t>(v);
    }

    RegexPtr parse_braces(RegexPtr child) {
        accept('{');
        std::uint32_t lo = parse_number();
        if (accept('}')) return mk_repeat(std::move(child), lo, lo, QuantStyle::Exact);
        if (!accept(',')) fail("expected ',' or '}' in quantifier");
        if (accept('}')) return mk_repeat(std::move(child), lo, kRepeatInf, QuantStyle::Braces);
        std::uint32_t hi = parse_number();
        if (!accept('}')) fail("expected '}' in quantifier");
        if (lo > hi) fail("quantifier requires min <= max");
        return mk_repeat(std::move(child), lo, hi, QuantStyle::Braces);
    }

    RegexPtr parse_atom() {
        if (eof()) fail("unexpected end of input");
        char c = peek();
        switch (c) {
            case '(': {
                ++pos_;
                if (accept(')')) return mk_group(mk_epsilon());
                RegexPtr inner = parse_alt();
                if (!accept(')')) fail("expected ')'");
                return mk_group(std::move(inner));
            }
            case '.':
                ++pos_;
                return mk_class({}, false, true, alphabet_);
            case '[':
                return parse_class();
            case '\\': {
                ++pos_;
                if (eof()) fail("dangling escape");
                char e = text_[pos_++];
                check_symbol(e);
                return mk_literal(e);
            }
            case ')': case '|': case '&': case '*': case '+': case '?':
            case '{': case '}': case ']':
                fail(std::string("unexpected '") + c + "'");
            default:
                ++pos_;
                check_symbol(c);
                return mk_literal(c);
        }
    }

    void check_symbol(char c) {
        if (!alphabet_.contains(c)) {
            --pos_;
            throw AlphabetViolation("character '" + std::string(1, c) + "' at position " +
                                    std::to_string(pos_) + " is outside the alphabet");
        }
    }

    char class_char() {
        if (eof()) fail("unterminated character class");
        char c = text_[pos_++];
        if (c == '\\') {
            if (eof()) fail("dangling escape in class");
            c = text_[pos_++];
        }
        check_symbol(c);
        return c;
    }

    RegexPtr parse_class() {
        std::size_t open = pos_;
        accept('[');
        bool negated = accept('^');
        std::vector<ClassItem> items;
        while (!at(']')) {
            if (eof()) { pos_ = open; fail("unterminated character class"); }
            unsigned char lo = static_cast<unsigned char>(class_char());
            unsigned char hi = lo;
            if (at('-') && pos_ + 1 < text_.size() && text_[pos_ + 1] != ']') {
                ++pos_;
                hi = static_cast<unsigned char>(class_char());
                if (lo > hi) fail("class range out of order");
            }
            items.push_back({lo, hi});
        }
        accept(']');
        if (items.empty()) { pos_ = open; fail("empty character class"); }
        try {
            return mk_class(std::move(items), negated, false, alphabet_);
        } catch (const AlphabetViolation&) {
            throw;
        } catch (const Error& e) {
            pos_ = open;
            fail(e.what());
        }
    }
};

}  // namespace detail

inline RegexPtr parse(std::string_view text, const Alphabet& alphabet) {
    return detail::Parser(text, alphabet).run();
}

// True iff `text` conforms to the syntax over `alphabet`; never throws.
inline bool validate(std::string_view text, const Alphabet& alphabet) noexcept {
    try {
        (void)parse(text, alphabet);
        return true;
    } catch (...) {
        return false;
    }
}

}  // namespace regexmend
