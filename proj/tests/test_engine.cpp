#include <catch2/catch_amalgamated.hpp>

#include "regexmend/engine.hpp"
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
}  // namespace

TEST_CASE("matches on the walkthrough regexes") {
    oracle::BacktrackMatcher oracle_match;

    // The incorrect candidate rejects its own positive example.
    REQUIRE_FALSE(eng().matches(rx("([AEIOUaeiou].*[0-9].*){7,}"), "E18043699"));
    REQUIRE(eng().matches(rx("a*"), ""));

    RegexPtr fixed = rx("[AEIOUaeiou].*[0-9]{7,}.*");
    REQUIRE_FALSE(oracle_match.matches(fixed, "o20m3u5817"));
    REQUIRE_FALSE(eng().matches(fixed, "o20m3u5817"));
    REQUIRE(oracle_match.matches(fixed, "E18043699"));
    REQUIRE(eng().matches(fixed, "E18043699"));

    REQUIRE_THROWS_AS(eng().matches(rx("a"), std::string(1, '\n')), AlphabetViolation);
}

TEST_CASE("derivative basics") {
    RegexPtr d1 = eng().derivative(rx("a|b"), 'a');
    REQUIRE(d1->kind == RegexKind::Epsilon);

    RegexPtr d2 = eng().derivative(mk_empty(), 'a');
    REQUIRE(d2->kind == RegexKind::Empty);

    RegexPtr d3 = eng().derivative(rx("~(a)"), 'a');
    REQUIRE(d3->kind == RegexKind::Not);
    REQUIRE(d3->child->kind == RegexKind::Epsilon);
    // L(~ε) after consuming 'a' is every w with a·w != a, i.e. every non-empty w.
    oracle::BoundedLang walk("ab", 3), full("ab", 4);
    RegexPtr nota = rx("~(a)");
    for (const auto& w : walk.universe()) {
        CAPTURE(w);
        REQUIRE(eng().matches(d3, w) == full.member(nota, "a" + w));
    }
}

TEST_CASE("derivative soundness on random regexes") {
    Alphabet tiny("ab");
    Engine e(tiny);
    std::mt19937_64 rng(77);
    oracle::RandomRegexOptions opt;
    for (int i = 0; i < 300; ++i) {
        RegexPtr r = oracle::random_regex(rng, tiny, opt, 1 + i % 8);
        char c = (rng() & 1) ? 'a' : 'b';
        std::string w;
        for (std::size_t j = rng() % 5; j > 0; --j) w.push_back((rng() & 1) ? 'a' : 'b');
        CAPTURE(to_string(r), c, w);
        REQUIRE(e.matches(r, std::string(1, c) + w) == e.matches(e.derivative(r, c), w));
    }
}

TEST_CASE("complement and conjunction are compositional") {
    Alphabet tiny("ab");
    Engine e(tiny);
    std::mt19937_64 rng(1234);
    oracle::RandomRegexOptions opt;
    for (int i = 0; i < 200; ++i) {
        RegexPtr r1 = oracle::random_regex(rng, tiny, opt, 1 + i % 6);
        RegexPtr r2 = oracle::random_regex(rng, tiny, opt, 1 + (i / 2) % 6);
        std::string w;
        for (std::size_t j = rng() % 6; j > 0; --j) w.push_back((rng() & 1) ? 'a' : 'b');
        CAPTURE(to_string(r1), to_string(r2), w);
        REQUIRE(e.matches(mk_not(r1), w) == !e.matches(r1, w));
        REQUIRE(e.matches(mk_and(r1, r2), w) == (e.matches(r1, w) && e.matches(r2, w)));
    }
}

TEST_CASE("compile_dfa") {
    SECTION("single literal over {a,b}") {
        Alphabet tiny("ab");
        Engine e(tiny);
        Dfa d = e.compile(parse("a", tiny));
        REQUIRE(d.state_count() == 3);  // start, accept, sink
        REQUIRE(d.accepts("a"));
        REQUIRE_FALSE(d.accepts("b"));
        REQUIRE_FALSE(d.accepts("aa"));
    }

    SECTION("complement flips acceptance statewise") {
        Alphabet tiny("ab");
        Engine e(tiny);
        Dfa d = e.compile(parse("a", tiny));
        Dfa n = e.compile(parse("~(a)", tiny));
        for (std::string w : {"", "a", "b", "ab", "ba", "aa", "bb", "aba"})
            REQUIRE(n.accepts(w) == !d.accepts(w));
    }

    SECTION("length-and-content conjunction, against brute force") {
        RegexPtr r = rx(".{6,8}&(.*[A-Za-z].*)");
        Dfa d = eng().compile(r);
        REQUIRE_FALSE(d.accepts("!;_"));
        REQUIRE(d.accepts("aaaaaa"));
        oracle::BacktrackMatcher bt;
        oracle::BoundedLang bl("a!;", 8);  // enumeration universe only
        for (const auto& w : bl.universe()) {
            CAPTURE(w);
            REQUIRE(d.accepts(w) == bt.matches(r, w));
        }
    }

    SECTION("budget errors") {
        Engine small(ascii(), EngineBudget(4, 1000));
        REQUIRE_THROWS_AS(small.compile(rx("[0-9]{3}[a-z]{3}")), BudgetExceeded);
        REQUIRE_THROWS_AS(eng().compile(rx("a{2000}")), QuantifierTooLarge);
    }
}

TEST_CASE("equivalence") {
    REQUIRE(eng().equivalent(rx("a{1,}"), rx("aa*")));
    REQUIRE(eng().equivalent(rx("[a-z]{3,3}"), rx("[a-z]{3}")));
    REQUIRE(eng().equivalent(rx("[A-Za-z]{2,3}[a-z]{3,3}[A-Z]{3,4}"), rx("[A-Za-z]{2,3}[a-z]{3}[A-Z]{3,4}")));
    REQUIRE(eng().equivalent(rx("a*"), rx("a{0,}")));
    REQUIRE_FALSE(eng().equivalent(rx("[AEIOUaeiou].*[0-9]{7,}.*"), rx("[AEIOUaeiou].*[0-9]{7,}")));
    REQUIRE(eng().equivalent(rx("[A-Za-z]"), rx("[A-Z]|[a-z]")));
    REQUIRE(eng().equivalent(rx("~(~(ab))"), rx("ab")));
}

TEST_CASE("equivalence agrees with bounded comparison on random pairs") {
    Alphabet tiny("ab");
    Engine e(tiny);
    std::mt19937_64 rng(424242);
    oracle::RandomRegexOptions opt;
    oracle::BoundedLang bl("ab", 7);
    int agreements = 0;
    for (int i = 0; i < 150; ++i) {
        RegexPtr r1 = oracle::random_regex(rng, tiny, opt, 1 + i % 6);
        RegexPtr r2 = (i % 3 == 0) ? r1 : oracle::random_regex(rng, tiny, opt, 1 + (i / 2) % 6);
        bool eq = e.equivalent(r1, r2);
        REQUIRE(eq == e.equivalent(r2, r1));  // symmetric
        bool bounded = bl.language(r1) == bl.language(r2);
        CAPTURE(to_string(r1), to_string(r2));
        REQUIRE(eq == bounded);
        agreements++;
        REQUIRE(e.equivalent(r1, r1));  // reflexive
    }
    REQUIRE(agreements == 150);
}

TEST_CASE("emptiness") {
    REQUIRE(Engine::is_empty(eng().compile(rx("a&b"))));
    REQUIRE_FALSE(Engine::is_empty(eng().compile(rx("a"))));
    REQUIRE(Engine::is_empty(eng().compile(rx("~(.*)"))));
}

TEST_CASE("sampling") {
    SECTION("exact language of one string") {
        SampleResult s = eng().sample_positive(rx("a"), 1, 5, 9);
        REQUIRE(s.strings == std::vector<std::string>{"a"});
        REQUIRE_FALSE(s.exhausted);
    }

    SECTION("positives satisfy matches; deterministic per seed") {
        RegexPtr r = rx("[AEIOUaeiou].*[0-9]{7,}.*");
        SampleResult s1 = eng().sample_positive(r, 10, 20, 1337);
        SampleResult s2 = eng().sample_positive(r, 10, 20, 1337);
        REQUIRE(s1.strings == s2.strings);
        REQUIRE(s1.strings.size() == 10);
        std::set<std::string> distinct(s1.strings.begin(), s1.strings.end());
        REQUIRE(distinct.size() == 10);
        for (const auto& w : s1.strings) {
            CAPTURE(w);
            REQUIRE(w.size() <= 20);
            REQUIRE(eng().matches(r, w));
        }
        SampleResult other = eng().sample_positive(r, 10, 20, 1338);
        REQUIRE(other.strings != s1.strings);
    }

    SECTION("negatives fail matches") {
        RegexPtr r = rx("[AEIOUaeiou].*[0-9]{7,}.*");
        SampleResult s = eng().sample_negative(r, 10, 20, 7);
        REQUIRE(s.strings.size() == 10);
        for (const auto& w : s.strings) {
            CAPTURE(w);
            REQUIRE_FALSE(eng().matches(r, w));
        }
        SampleResult tiny = eng().sample_negative(rx("a"), 1, 1, 3);
        REQUIRE(tiny.strings.size() == 1);
        REQUIRE(tiny.strings[0] != "a");
        REQUIRE_FALSE(eng().matches(rx("a"), tiny.strings[0]));
    }

    SECTION("empty language errors") {
        REQUIRE_THROWS_AS(eng().sample_positive(rx("a&b"), 1, 10, 0), EmptyLanguage);
        REQUIRE_THROWS_AS(eng().sample_negative(rx(".*"), 1, 10, 0), EmptyLanguage);
    }

    SECTION("insufficient language returns the exhaustive set with a flag") {
        SampleResult s = eng().sample_positive(rx("a|bb"), 5, 4, 11);
        REQUIRE(s.exhausted);
        std::set<std::string> got(s.strings.begin(), s.strings.end());
        REQUIRE(got == std::set<std::string>{"a", "bb"});
    }
}

TEST_CASE("dfa diagnostic dump") {
    Alphabet tiny("ab");
    Engine e(tiny);
    std::string text = Engine::dfa_to_text(e.compile(parse("a", tiny)));
    REQUIRE(text.find("states 3") != std::string::npos);
    REQUIRE(text.find('*') != std::string::npos);
}

TEST_CASE("small exhaustive matcher agreement") {
    // A quick slice of the full enumeration the acceptance suite runs.
    Alphabet tiny("ab");
    Engine e(tiny);
    oracle::BoundedLang bl("ab", 5);
    std::mt19937_64 rng(5);
    oracle::RandomRegexOptions opt;
    for (int i = 0; i < 250; ++i) {
        RegexPtr r = oracle::random_regex(rng, tiny, opt, 1 + i % 7);
        auto lang = bl.language(r);
        CAPTURE(to_string(r));
        for (const auto& w : bl.universe()) {
            CAPTURE(w);
            REQUIRE(e.matches(r, w) == (lang.count(w) != 0));
        }
    }
}
