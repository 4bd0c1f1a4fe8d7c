#include "lexleast/squares.hpp"

#include "lexleast/lexicon.hpp"
#include "lexleast/morphisms.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace lexleast;

namespace {

Word random_word(std::mt19937& rng, int max_len, Letter max_letter) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<Letter> let(0, max_letter);
    Word w;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) w.push_back(let(rng));
    return w;
}

}  // namespace

TEST_CASE("z_array against direct comparison") {
    std::mt19937 rng(1);
    for (int it = 0; it < 500; ++it) {
        const Word w = random_word(rng, 24, 2);
        const auto z = z_array(w.span());
        for (std::size_t i = 0; i < w.size(); ++i) {
            std::size_t k = 0;
            while (i + k < w.size() && w[k] == w[i + k]) ++k;
            CHECK(z[i] == k);
        }
    }
}

TEST_CASE("has_square basics") {
    CHECK_FALSE(has_square(Word{}));
    CHECK_FALSE(has_square(Word{0}));
    CHECK_FALSE(has_square(Word::parse("0102")));
    CHECK(has_square(Word::parse("20102010")));
    CHECK(has_square(Word::parse("00")));
}

TEST_CASE("has_square_suffix basics") {
    CHECK(has_square_suffix(Word::parse("20102011")));  // suffix 11
    CHECK_FALSE(has_square_suffix(Word::parse("0102")));
    CHECK(has_square_suffix(Word::parse("0102010301020103")));  // R_3 R_3
    CHECK_FALSE(has_square_suffix(Word::parse("010123")));      // square inside, none at the end
    CHECK_FALSE(has_square_suffix(Word{}));
    CHECK_FALSE(has_square_suffix(Word{5}));
}

TEST_CASE("square_endpoints examples") {
    CHECK(square_endpoints(Word::parse("0101")).endpoints == std::vector<std::size_t>{3});
    CHECK(square_endpoints(Word::parse("010201")).endpoints.empty());
    CHECK(square_endpoints(Word::parse("11011")).endpoints == std::vector<std::size_t>{1, 4});
}

TEST_CASE("naive scan examples") {
    CHECK(naive_square_scan(Word::parse("0101")).endpoints == std::vector<std::size_t>{3});
    // every endpoint of 1121123210, computed by the oracle itself
    CHECK(naive_square_scan(Word::parse("1121123210")).endpoints ==
          std::vector<std::size_t>{1, 4, 5});
    CHECK(naive_square_scan(Word::parse("1121123210")) ==
          square_endpoints(Word::parse("1121123210")));
    Word big;
    for (int i = 0; i < 4097; ++i) big.push_back(0);
    CHECK_THROWS_AS(naive_square_scan(big), std::length_error);
}

TEST_CASE("oracle equivalence, exhaustive binary words up to length 12") {
    for (int n = 0; n <= 12; ++n) {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            Word w;
            for (int i = 0; i < n; ++i) w.push_back((mask >> i) & 1u);
            const auto fast = square_endpoints(w);
            const auto naive = naive_square_scan(w);
            REQUIRE(fast == naive);
            REQUIRE(has_square(w) == naive.contains_square());
            const bool suffix =
                !naive.endpoints.empty() && naive.endpoints.back() == w.size() - 1;
            REQUIRE(has_square_suffix(w) == suffix);
        }
    }
}

TEST_CASE("oracle equivalence, randomized") {
    std::mt19937 rng(20240817);
    for (int it = 0; it < 10000; ++it) {
        const Word w = random_word(rng, 64, 3);
        const auto fast = square_endpoints(w);
        const auto naive = naive_square_scan(w);
        REQUIRE(fast == naive);
        REQUIRE(has_square(w) == naive.contains_square());
        REQUIRE(has_square_suffix(w) ==
                (!naive.endpoints.empty() && naive.endpoints.back() == w.size() - 1));
    }
}

TEST_CASE("witness occurrences really are squares") {
    std::mt19937 rng(5);
    for (int it = 0; it < 2000; ++it) {
        const Word w = random_word(rng, 48, 2);
        const auto report = square_endpoints(w);
        REQUIRE(report.endpoints.size() == report.occurrences.size());
        for (std::size_t k = 0; k < report.occurrences.size(); ++k) {
            const auto [start, period] = report.occurrences[k];
            REQUIRE(start + 2 * period - 1 == report.endpoints[k]);
            REQUIRE(slice(w, static_cast<std::int64_t>(start),
                          static_cast<std::int64_t>(start + period)) ==
                    slice(w, static_cast<std::int64_t>(start + period),
                          static_cast<std::int64_t>(start + 2 * period)));
        }
    }
}

TEST_CASE("squares survive extension") {
    std::mt19937 rng(9);
    for (int it = 0; it < 3000; ++it) {
        const Word w = random_word(rng, 32, 2);
        if (w.size() < 2) continue;
        std::uniform_int_distribution<std::size_t> lo(0, w.size() - 1);
        std::size_t i = lo(rng);
        std::uniform_int_distribution<std::size_t> hi(i, w.size());
        std::size_t j = hi(rng);
        if (has_square(slice(w, static_cast<std::int64_t>(i), static_cast<std::int64_t>(j))))
            CHECK(has_square(w));
    }
}

TEST_CASE("known square-free families") {
    for (Letter n = 0; n <= 12; ++n) CHECK_FALSE(has_square(ruler_prefix(n)));
    for (Letter n = 1; n <= 10; ++n) CHECK_FALSE(has_square(psi1_image(n)));
    for (Letter n = 1; n <= 8; ++n) CHECK_FALSE(has_square(psi2_image(n)));
    for (Letter n = 0; n <= 6; ++n) CHECK_FALSE(has_square(alpha_image(n)));
}
