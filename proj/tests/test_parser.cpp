#include <catch2/catch_amalgamated.hpp>

#include "regexmend/parse.hpp"
#include "support/oracle.hpp"

using namespace regexmend;

namespace {
const Alphabet& ascii() {
    static Alphabet a = Alphabet::printable_ascii();
    return a;
}
}  // namespace

TEST_CASE("parse basic shapes") {
    SECTION("ab{1,3}") {
        RegexPtr r = parse("ab{1,3}", ascii());
        REQUIRE(r->kind == RegexKind::Concat);
        REQUIRE(r->left->kind == RegexKind::Literal);
        REQUIRE(r->left->lit == 'a');
        REQUIRE(r->right->kind == RegexKind::Repeat);
        REQUIRE(r->right->min == 1);
        REQUIRE(r->right->max == 3);
        REQUIRE(r->right->child->lit == 'b');
    }

    SECTION("malformed quantifiers") {
        REQUIRE_THROWS_AS(parse("ab{1,,,,3}", ascii()), ParseError);
        REQUIRE_THROWS_AS(parse("([AEIOUaeiou].*[0-9].*){7,,}", ascii()), ParseError);
        REQUIRE_THROWS_AS(parse("a{3,1}", ascii()), ParseError);
        REQUIRE_THROWS_AS(parse("a{", ascii()), ParseError);
    }

    SECTION("empty input is epsilon") {
        RegexPtr r = parse("", ascii());
        REQUIRE(r->kind == RegexKind::Epsilon);
    }

    SECTION("final output of the vowel/digit walkthrough") {
        RegexPtr r = parse("[AEIOUaeiou].*[0-9]{7,}.*", ascii());
        // Left-associated concat of: class, .*, [0-9]{7,}, .*
        REQUIRE(r->kind == RegexKind::Concat);
        const RegexNode* last = r->right.get();
        REQUIRE(last->kind == RegexKind::Repeat);
        REQUIRE(last->max == kRepeatInf);
        REQUIRE(last->child->dot);
        const RegexNode* digits = r->left->right.get();
        REQUIRE(digits->kind == RegexKind::Repeat);
        REQUIRE(digits->min == 7);
        REQUIRE(digits->max == kRepeatInf);
        REQUIRE(digits->child->cls.test('0'));
        REQUIRE(digits->child->cls.test('9'));
        REQUIRE_FALSE(digits->child->cls.test('a'));
        const RegexNode* vowels = r->left->left->left.get();
        REQUIRE(vowels->kind == RegexKind::CharClass);
        for (char c : std::string("AEIOUaeiou")) REQUIRE(vowels->cls.test(static_cast<unsigned char>(c)));
        REQUIRE(vowels->cls.count() == 10);
    }

    SECTION("precedence: quantifier and ~ bind tightest, then concat, &, |") {
        RegexPtr r = parse(".{6,8}&(.*[A-Za-z].*)", ascii());
        REQUIRE(r->kind == RegexKind::And);
        RegexPtr s = parse("a|bc&d", ascii());
        REQUIRE(s->kind == RegexKind::Alt);
        REQUIRE(s->right->kind == RegexKind::And);
        RegexPtr t = parse("~ab", ascii());
        REQUIRE(t->kind == RegexKind::Concat);
        REQUIRE(t->left->kind == RegexKind::Not);
        RegexPtr u = parse("~a*", ascii());
        REQUIRE(u->kind == RegexKind::Not);
        REQUIRE(u->child->kind == RegexKind::Repeat);
    }

    SECTION("classes") {
        RegexPtr r = parse("[A-Za-z0-9_]", ascii());
        REQUIRE(r->cls.test('Q'));
        REQUIRE(r->cls.test('_'));
        REQUIRE_FALSE(r->cls.test('-'));
        RegexPtr n = parse("[^abc]", ascii());
        REQUIRE(n->negated);
        REQUIRE_FALSE(n->cls.test('a'));
        REQUIRE(n->cls.test('d'));
        REQUIRE_THROWS_AS(parse("[]", ascii()), ParseError);
        REQUIRE_THROWS_AS(parse("[z-a]", ascii()), ParseError);
    }

    SECTION("escapes") {
        RegexPtr r = parse("\\{a\\}", ascii());
        REQUIRE(to_string(r) == "\\{a\\}");
        REQUIRE(parse("\\*", ascii())->lit == '*');
        REQUIRE_THROWS_AS(parse("a\\", ascii()), ParseError);
    }

    SECTION("alphabet violations") {
        Alphabet tiny("ab");
        REQUIRE_THROWS_AS(parse("ac", tiny), AlphabetViolation);
        REQUIRE_THROWS_AS(parse("[a-c]", tiny), AlphabetViolation);
    }
}

TEST_CASE("validate mirrors parse") {
    REQUIRE(validate("ab{1,3}", ascii()));
    REQUIRE_FALSE(validate("ab{1,,,,3}", ascii()));
    REQUIRE_FALSE(validate("([AEIOUaeiou].*[0-9].*){7,,}", ascii()));
    REQUIRE(validate("", ascii()));
    REQUIRE_FALSE(validate("(", ascii()));
    REQUIRE_FALSE(validate("a|", ascii()));
    REQUIRE_FALSE(validate("a**{", ascii()));
}

TEST_CASE("canonical printing") {
    SECTION("sugar hints survive") {
        REQUIRE(to_string(mk_repeat(mk_literal('a'), 0, kRepeatInf, QuantStyle::Star)) == "a*");
        REQUIRE(to_string(mk_repeat(mk_literal('a'), 3, 3, QuantStyle::Exact)) == "a{3}");
        REQUIRE(to_string(mk_repeat(mk_literal('a'), 3, 3, QuantStyle::Braces)) == "a{3,3}");
        REQUIRE(to_string(mk_repeat(mk_literal('a'), 2, kRepeatInf, QuantStyle::Braces)) == "a{2,}");
    }

    SECTION("ground-truth string round trip") {
        std::string t = "[A-Za-z]{2,3}[a-z]{3}[A-Z]{3,4}";
        REQUIRE(to_string(parse(t, ascii())) == t);
    }

    SECTION("assorted round trips") {
        for (std::string t : {"ab{1,3}", "a|b|c", "a&b&c", "(a|b)c", "~(ab)", "~a{2}", "(~a){2}",
                              ".{6,8}&(.*[A-Za-z].*)", "([AEIOUaeiou].*[0-9].*){7,}", "a?b*c+",
                              "[AEIOUaeiou].*[0-9]{7,}.*", "(a)", "()", "a(bc)*", "x\\.y",
                              "([A-Z]|[a-z]){1,}&.{6,8}&(.*([A-Z]|[a-z]).*)"}) {
            CAPTURE(t);
            RegexPtr r = parse(t, ascii());
            REQUIRE(to_string(r) == t);
            REQUIRE(structural_equal(parse(to_string(r), ascii()), r));
        }
    }

    SECTION("minimal parenthesization on constructed trees") {
        RegexPtr alt = mk_alt(mk_literal('a'), mk_literal('b'));
        REQUIRE(to_string(mk_concat(alt, mk_literal('c'))) == "(a|b)c");
        REQUIRE(to_string(mk_repeat(mk_not(mk_literal('a')), 2, 2)) == "(~a){2,2}");
        REQUIRE(to_string(mk_not(mk_repeat(mk_literal('a'), 2, 2))) == "~a{2,2}");
        REQUIRE(to_string(mk_and(alt, mk_literal('c'))) == "(a|b)&c");
    }
}

TEST_CASE("metrics") {
    REQUIRE(metrics(mk_epsilon()).ast_size == 1);
    REQUIRE(metrics(mk_epsilon()).depth == 1);
    RegexPtr cc = mk_concat(mk_literal('a'), mk_literal('b'));
    REQUIRE(metrics(cc).ast_size == 3);
    REQUIRE(metrics(cc).depth == 2);
    RegexPtr alt = parse("a|b", ascii());
    REQUIRE(metrics(alt).ast_size == 3);
    REQUIRE(metrics(alt).depth == 2);
    REQUIRE(metrics(alt).length == 3);
    RegexPtr deep = parse("((a))", ascii());
    REQUIRE(metrics(deep).ast_size >= metrics(deep).depth);
}

TEST_CASE("round trip and validate/parse agreement under fuzzing") {
    std::mt19937_64 rng(20260810);
    oracle::RandomRegexOptions opt;
    opt.leaves = "abc";
    Alphabet tiny("abc");
    for (int i = 0; i < 400; ++i) {
        RegexPtr r = oracle::random_regex(rng, tiny, opt, 1 + i % 9);
        std::string printed = to_string(r);
        CAPTURE(printed);
        RegexPtr back = parse(printed, tiny);
        REQUIRE(to_string(back) == printed);
    }

    // validate(t) <=> parse(t) succeeds, on arbitrary byte soup.
    std::string soup_chars = "ab(){}[]|&~*+?.\\,0123456789-^";
    for (int i = 0; i < 2000; ++i) {
        std::string t;
        std::size_t len = rng() % 12;
        for (std::size_t j = 0; j < len; ++j) t.push_back(soup_chars[rng() % soup_chars.size()]);
        bool ok;
        try {
            (void)parse(t, ascii());
            ok = true;
        } catch (const Error&) {
            ok = false;
        }
        CAPTURE(t);
        REQUIRE(validate(t, ascii()) == ok);
    }
}
