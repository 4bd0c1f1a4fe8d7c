#include "lexleast/word.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace lexleast;

TEST_CASE("parse and format round-trip") {
    CHECK(Word::parse("2021") == Word{2, 0, 2, 1});
    CHECK(Word::parse("2,0,2,1,0,1") == Word{2, 0, 2, 1, 0, 1});
    CHECK(Word::parse("") == Word{});
    CHECK(Word::parse("33,") == Word{33});
    CHECK(Word::parse("12, 7,33") == Word{12, 7, 33});
    CHECK(to_csv(Word{2, 0, 2, 1}) == "2,0,2,1");
    CHECK(to_digits(Word{2, 0, 2, 1}) == "2021");
    CHECK(display(Word{12, 3}) == "12,3");
    CHECK(display(Word{1, 2, 3}) == "123");
    CHECK(Word::parse(to_csv(Word{10, 0, 11})) == Word{10, 0, 11});
    CHECK_THROWS_AS(Word::parse("12a"), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(to_digits(Word{10}), std::invalid_argument);
}

TEST_CASE("slice follows python index rules but rejects out-of-range") {
    const Word w = Word::parse("0102010");
    CHECK(slice(w, 1, 4) == Word::parse("102"));
    CHECK(slice(Word::parse("01020103"), 0, -2) == Word::parse("010201"));
    CHECK(slice(w, 0, 0) == Word{});
    CHECK(slice(w, std::nullopt, std::nullopt) == w);
    CHECK(slice(w, -3, std::nullopt) == Word::parse("010"));
    CHECK(slice(w, 3) == Word::parse("2010"));
    CHECK_THROWS_AS(slice(w, 0, 8), std::out_of_range);
    CHECK_THROWS_AS(slice(w, 5, 2), std::out_of_range);
    CHECK_THROWS_AS(slice(w, -8, std::nullopt), std::out_of_range);
}

TEST_CASE("slice splits recombine") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> len(0, 30), let(0, 5);
    for (int it = 0; it < 200; ++it) {
        Word w;
        const int n = len(rng);
        for (int i = 0; i < n; ++i) w.push_back(let(rng));
        std::uniform_int_distribution<int> cut(0, n);
        const int k = cut(rng);
        CHECK(slice(w, 0, k) + slice(w, k, n) == w);
    }
}

TEST_CASE("successor") {
    CHECK(successor(Word::parse("0102")) == Word::parse("0103"));
    CHECK(successor(Word{0}) == Word{1});
    CHECK(successor(successor(Word::parse("0102030102"))) == Word::parse("0102030104"));
    CHECK_THROWS_AS(successor(Word{}), std::invalid_argument);

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> len(1, 20), let(0, 4);
    for (int it = 0; it < 200; ++it) {
        Word w;
        const int n = len(rng);
        for (int i = 0; i < n; ++i) w.push_back(let(rng));
        CHECK(lex_compare(w, successor(w)) == LexOrdering::Less);
    }
}

TEST_CASE("grounded classification") {
    CHECK(grounded_class(Word::parse("0102")) == GroundedClass::EvenGrounded);
    CHECK(grounded_class(Word::parse("010")) == GroundedClass::EvenGrounded);
    CHECK(grounded_class(Word::parse("3010")) == GroundedClass::OddGrounded);
    CHECK(grounded_class(Word::parse("301")) == GroundedClass::OddGrounded);
    CHECK(grounded_class(Word::parse("0120")) == GroundedClass::NotGrounded);
    CHECK(grounded_class(Word::parse("0100")) == GroundedClass::NotGrounded);
    CHECK(grounded_class(Word{}) == GroundedClass::EvenGrounded);
    CHECK(grounded_class(Word{0}) == GroundedClass::EvenGrounded);
    CHECK(grounded_class(Word{3}) == GroundedClass::OddGrounded);
}

TEST_CASE("grounded words alternate zero and nonzero") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> len(1, 24), let(1, 6), coin(0, 1);
    for (int it = 0; it < 200; ++it) {
        Word w;
        const int n = len(rng);
        const bool even = coin(rng) == 0;
        for (int i = 0; i < n; ++i)
            w.push_back((i % 2 == 0) == even ? 0 : static_cast<Letter>(let(rng)));
        REQUIRE(is_grounded(w));
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            CHECK_FALSE((w[i] == 0 && w[i + 1] == 0));
            CHECK((w[i] == 0 || w[i + 1] == 0));
        }
    }
}

TEST_CASE("lex_compare") {
    CHECK(lex_compare(Word::parse("0102"), Word::parse("0103")) == LexOrdering::Less);
    CHECK(lex_compare(Word::parse("01"), Word::parse("0102")) == LexOrdering::LeftIsPrefix);
    CHECK(lex_compare(Word::parse("23"), Word::parse("24")) == LexOrdering::Less);
    CHECK(lex_compare(Word{}, Word{}) == LexOrdering::Equal);
    CHECK(lex_compare(Word{}, Word{0}) == LexOrdering::LeftIsPrefix);

    std::mt19937 rng(3);
    std::uniform_int_distribution<int> len(0, 10), let(0, 2);
    auto random_word = [&] {
        Word w;
        const int n = len(rng);
        for (int i = 0; i < n; ++i) w.push_back(let(rng));
        return w;
    };
    for (int it = 0; it < 500; ++it) {
        const Word u = random_word(), v = random_word();
        const auto fwd = lex_compare(u, v), bwd = lex_compare(v, u);
        switch (fwd) {
            case LexOrdering::Less: CHECK(bwd == LexOrdering::Greater); break;
            case LexOrdering::Greater: CHECK(bwd == LexOrdering::Less); break;
            case LexOrdering::Equal: CHECK(bwd == LexOrdering::Equal); break;
            case LexOrdering::LeftIsPrefix: CHECK(bwd == LexOrdering::RightIsPrefix); break;
            case LexOrdering::RightIsPrefix: CHECK(bwd == LexOrdering::LeftIsPrefix); break;
        }
    }
}

TEST_CASE("max_letter") {
    CHECK(max_letter(Word::parse("0102030102")) == Letter{3});
    CHECK(max_letter(Word{}) == std::nullopt);
}

TEST_CASE("occurrence helpers") {
    const Word w = Word::parse("0102010");
    CHECK(occurrences(w, Word::parse("010")) == std::vector<std::size_t>{0, 4});
    CHECK(occurrences(w, Word::parse("01")) == std::vector<std::size_t>{0, 4});
    CHECK(occurrences(w, Word{}) == std::vector<std::size_t>{});
    CHECK(has_prefix(w, Word::parse("0102")));
    CHECK_FALSE(has_prefix(w, Word::parse("02")));
    CHECK(has_suffix(w, Word::parse("010")));
    CHECK_FALSE(has_suffix(w, Word::parse("02")));
}

TEST_CASE("word_source yields letters then nullopt") {
    auto src = word_source(Word::parse("012"));
    CHECK(src() == Letter{0});
    CHECK(src() == Letter{1});
    CHECK(src() == Letter{2});
    CHECK(src() == std::nullopt);
    CHECK(src() == std::nullopt);
}
