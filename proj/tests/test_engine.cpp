#include "lexleast/engine.hpp"

#include "lexleast/lexicon.hpp"
#include "lexleast/morphisms.hpp"
#include "lexleast/squares.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace lexleast;

namespace {

Word random_square_free(std::mt19937& rng, int max_len, Letter max_letter) {
    std::uniform_int_distribution<int> len(1, max_len);
    const int target = len(rng);
    Word w;
    std::uniform_int_distribution<Letter> let(0, max_letter);
    for (int attempts = 0; attempts < 200 && static_cast<int>(w.size()) < target; ++attempts) {
        w.push_back(let(rng));
        if (has_square_suffix(w)) w.pop_back();
    }
    if (w.empty()) w.push_back(0);
    return w;
}

}  // namespace

TEST_CASE("printed prefixes come out of the greedy rule") {
    CHECK(to_digits(compute_L_prefix(Word{}, 16)) == "0102010301020104");
    CHECK(to_digits(compute_L_prefix(Word{1}, 32)) == "10120102012021012010201203010201");
    CHECK(to_digits(compute_L_prefix(Word{3, 3}, 32)) == "33010201030102012021012010201202");
    CHECK(compute_L_prefix(Word{2}, 2) == Word{2, 0});
    CHECK_THROWS_AS(compute_L_prefix(Word{1, 2, 3}, 2), std::invalid_argument);
}

TEST_CASE("next_letter picks the least admissible letter") {
    ExtensionState after_010(Word{}, Word::parse("010"));
    CHECK(next_letter(after_010) == Letter{2});

    ExtensionState fresh(Word{1});
    CHECK(next_letter(fresh) == Letter{0});

    ExtensionState deeper(Word{}, Word::parse("0102010"));
    CHECK(next_letter(deeper) == Letter{3});

    ExtensionState empty((Word{}));
    CHECK(next_letter(empty) == Letter{0});
}

TEST_CASE("ExtensionState validates seeded extensions") {
    CHECK_NOTHROW(ExtensionState(Word{1}, Word::parse("012")));
    CHECK_THROWS_AS(ExtensionState(Word{1}, Word::parse("013")), std::invalid_argument);
    CHECK_THROWS_AS(ExtensionState(Word{}, Word::parse("00")), std::invalid_argument);
    ExtensionState s(Word{3, 3}, Word::parse("0102"));
    CHECK(s.base() == Word{3, 3});
    CHECK(s.extension() == Word::parse("0102"));
    CHECK(s.boundary() == 2);
}

TEST_CASE("generates") {
    CHECK(generates(Word::parse("2010201"), Word::parse("202101")));
    CHECK(generates(constant(NamedConstant::G), slice(alpha_image(0), 9, std::nullopt)));
    // "010203 generates C" in the prefix sense: L(010203) begins with C
    CHECK(generates(Word::parse("010203"),
                    slice(constant(NamedConstant::C), 6, std::nullopt)));
    CHECK_FALSE(generates(Word{0}, Word{0}));
    CHECK(generates(Word{0}, Word{1, 0, 2}));
}

TEST_CASE("is_irreducible on the worked example") {
    const Word w = Word::parse("0102010");
    CHECK(is_irreducible(w, Word::parse("23")));
    CHECK(is_irreducible(w, Word::parse("301")));
    CHECK_FALSE(is_irreducible(w, Word::parse("302")));
    CHECK_THROWS_AS(is_irreducible(w, Word{}), std::invalid_argument);
}

TEST_CASE("squares stay confined to the base") {
    for (const char* base : {"0101", "11011", "33", "1121123210"}) {
        const Word p = Word::parse(base);
        const Word w = compute_L_prefix(p, p.size() + 64);
        for (std::size_t e : square_endpoints(w).endpoints) CHECK(e < p.size());
    }
}

TEST_CASE("each appended letter is minimal") {
    const Word p = Word::parse("0101");
    const Word w = compute_L_prefix(p, 40);
    for (std::size_t i = p.size(); i < w.size(); ++i) {
        Word head = slice(w, 0, static_cast<std::int64_t>(i));
        for (Letter alt = 0; alt < w[i]; ++alt) {
            head.push_back(alt);
            CHECK(has_square_suffix(head));
            head.pop_back();
        }
    }
}

TEST_CASE("generates is equivalent to stepwise prefix agreement") {
    const Word p = Word::parse("2010201");
    const Word s = Word::parse("202101");
    REQUIRE(generates(p, s));
    for (std::size_t k = 0; k <= s.size(); ++k)
        CHECK(compute_L_prefix(p, p.size() + k) == p + slice(s, 0, static_cast<std::int64_t>(k)));
}

TEST_CASE("idempotence of the greedy extension") {
    const Word p = Word::parse("21");
    const Word first = compute_L_prefix(p, 40);
    CHECK(compute_L_prefix(first, 90) == compute_L_prefix(p, 90));
}

TEST_CASE("ruler morphism commutes with L on square-free words at depth 512") {
    std::mt19937 rng(2024);
    const Morphism& rho = builtin(Builtin::Rho);
    for (int it = 0; it < 50; ++it) {
        const Word x = random_square_free(rng, 6, 3);
        const Word lhs = apply(rho, compute_L_prefix(x, 512));
        const Word rhs = compute_L_prefix(apply(rho, x), 1024);
        CHECK(slice(lhs, 0, 1024) == rhs);
    }
}

TEST_CASE("ruler morphism does not commute past squares") {
    CHECK(to_digits(compute_L_prefix(Word::parse("0101"), 8)) == "01012010");
    CHECK(to_digits(apply(builtin(Builtin::Rho), compute_L_prefix(Word::parse("00"), 4))) ==
          "01010201");
}

TEST_CASE("lex_least_stream replays compute_L_prefix") {
    auto stream = lex_least_stream(Word{1});
    Word collected;
    for (int i = 0; i < 40; ++i) collected.push_back(*stream());
    CHECK(collected == compute_L_prefix(Word{1}, 40));
}

TEST_CASE("prefix cache extends one shared state") {
    PrefixCache cache;
    const Word a = cache.prefix(Word{1}, 10);
    const Word b = cache.prefix(Word{1}, 50);
    CHECK(a == slice(b, 0, 10));
    CHECK(b == compute_L_prefix(Word{1}, 50));
    CHECK(cache.prefix(Word{1}, 5) == slice(b, 0, 5));
}
