// Acceptance suite: runs every gate criterion end to end and prints one
// pass/fail line per criterion. All comparisons are exact; the only
// quantitative tolerance anywhere is the wall-clock bound in criterion 1.

#include "lexleast/lexleast.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace lexleast;
using Clock = std::chrono::steady_clock;

namespace {

struct Suite {
    Harness harness;
    int failures = 0;

    explicit Suite(VerifyOptions options) : harness(std::move(options)) {}

    void run(int number, const std::string& title,
             const std::function<std::optional<std::string>()>& body) {
        const auto start = Clock::now();
        std::optional<std::string> failure;
        try {
            failure = body();
        } catch (const std::exception& e) {
            failure = std::string("exception: ") + e.what();
        }
        const double ms =
            std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        if (failure) ++failures;
        std::printf("criterion %2d %s (%8.1f ms)  %s%s%s\n", number,
                    failure ? "FAIL" : "PASS", ms, title.c_str(), failure ? " -- " : "",
                    failure ? failure->c_str() : "");
        std::fflush(stdout);
    }
};

std::optional<std::string> expect(bool ok, const std::string& message) {
    if (ok) return std::nullopt;
    return message;
}

std::optional<std::string> expect_word(const Word& got, const std::string& want,
                                       const std::string& what) {
    if (display(got) == want) return std::nullopt;
    return what + ": got " + display(got).substr(0, 64);
}

std::vector<Word> square_free_words(std::size_t max_len, Letter max_letter) {
    std::vector<Word> out;
    Word cur;
    auto rec = [&](auto&& self) -> void {
        if (!cur.empty()) out.push_back(cur);
        if (cur.size() == max_len) return;
        for (Letter l = 0; l <= max_letter; ++l) {
            cur.push_back(l);
            if (!has_square_suffix(cur)) self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return out;
}

std::optional<std::string> all_pass(const std::vector<CheckResult>& results,
                                    const std::string& what) {
    std::size_t failed = 0;
    std::string first;
    for (const auto& r : results) {
        if (r.status != CheckStatus::Pass) {
            if (!failed) first = r.id + (r.witness ? ": " + *r.witness : "");
            ++failed;
        }
    }
    if (!failed) return std::nullopt;
    std::ostringstream os;
    os << what << ": " << failed << " of " << results.size() << " not passing (" << first << ")";
    return os.str();
}

}  // namespace

int main() {
    VerifyOptions options;
    options.structure_depth = 20000;
    options.depth_overrides["conj/L2-gamma"] = 30000;
    Suite suite(std::move(options));
    PrefixCache& cache = suite.harness.cache();

    suite.run(1, "printed 32-letter prefixes, exact, under one second total", [&] {
        const auto start = Clock::now();
        const std::pair<const char*, const char*> cases[] = {
            {"1", "10120102012021012010201203010201"},
            {"2", "20102012021012010201202102010210"},
            {"3,3", "33010201030102012021012010201202"},
            {"1,2", "12010201202101201020120212010201"},
            {"1,3", "13010201030102012021012010201202"},
            {"2,1", "21012010201202101201020121012010"},
            {"2,3", "23010201030102012021012010201202"},
        };
        for (const auto& [prefix, want] : cases) {
            if (auto f = expect_word(cache.prefix(Word::parse(prefix), 32), want,
                                     std::string("L(") + prefix + ")"))
                return f;
        }
        const Word alpha32 = apply_stream(builtin(Builtin::Alpha), ruler_stream(), 32);
        if (auto f = expect_word(alpha32, "01020301201020120210120102012023", "alpha(L(eps))"))
            return f;
        const double ms =
            std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        return expect(ms < 1000.0, "took " + std::to_string(ms) + " ms");
    });

    suite.run(2, "L(1) = Y_1 alpha(L(eps)) for 20000 letters past Y_1", [&] {
        const Word got = cache.prefix(Word{1}, 5177 + 20000);
        const Word head = cache.prefix(Word{1}, 5177);
        const Word tail = apply_stream(builtin(Builtin::Alpha), ruler_stream(), 20000);
        return expect(got == head + tail, "disagreement past Y_1");
    });

    suite.run(3, "L(n) = Y_n rho(alpha(L(eps))) for n = 3, 4, 5, 20000 letters past Y_n", [&] {
        const std::size_t want_len[] = {14070, 14792, 16500};
        for (Letter n = 3; n <= 5; ++n) {
            const Word yn = y_word(n);
            if (auto f = expect(yn.size() == want_len[n - 3],
                                "|Y_" + std::to_string(n) + "| = " + std::to_string(yn.size())))
                return f;
            const Word got = cache.prefix(Word{n}, yn.size() + 20000);
            const Word tail = apply_stream(
                builtin(Builtin::Rho), morphic_stream(builtin(Builtin::Alpha), ruler_stream()),
                20000);
            if (auto f = expect(got == yn + tail, "disagreement for n = " + std::to_string(n)))
                return f;
        }
        return std::optional<std::string>{};
    });

    suite.run(4, "L(n) begins n T(n) for n = 3..6 and n P_0(n) P_1(n) for n = 3..8", [&] {
        for (Letter n = 3; n <= 6; ++n) {
            const Word want = Word{n} + t_word(n);
            if (cache.prefix(Word{n}, want.size()) != want)
                return std::optional<std::string>("n T(n) fails at n = " + std::to_string(n));
        }
        for (Letter n = 3; n <= 8; ++n) {
            const Word want = Word{n} + p_word(0, n) + p_word(1, n);
            if (cache.prefix(Word{n}, want.size()) != want)
                return std::optional<std::string>("n P_0 P_1 fails at n = " + std::to_string(n));
        }
        return std::optional<std::string>{};
    });

    suite.run(5, "glossary length identities up to the caps", [&] {
        auto r = suite.harness.run_check("len/all-glossary");
        if (r.status != CheckStatus::Pass) return r.witness;
        r = suite.harness.run_check("len/A");
        if (r.status != CheckStatus::Pass) return r.witness;
        return std::optional<std::string>{};
    });

    suite.run(6, "conjecture evidence: L(2), L(31), L(32) consistent to depth (non-blocking)",
              [&] {
                  const Word l2 = cache.prefix(Word{2}, 1 + 30000);
                  const Word viaGamma =
                      Word{2} + apply_stream(builtin(Builtin::Gamma), ruler_stream(), 30000);
                  if (l2 != viaGamma)
                      return std::optional<std::string>("L(2) vs 2 gamma(L(eps))");
                  if (cache.prefix(Word{3, 1}, 10000) != Word{3} + cache.prefix(Word{1}, 9999))
                      return std::optional<std::string>("L(31) vs 3 L(1)");
                  if (cache.prefix(Word{3, 2}, 10000) != Word{3} + cache.prefix(Word{2}, 9999))
                      return std::optional<std::string>("L(32) vs 3 L(2)");
                  std::printf("             conjectures consistent to depth 30000 / 10000 "
                              "(evidence, not proof)\n");
                  return std::optional<std::string>{};
              });

    suite.run(7, "square detectors agree with the exhaustive oracle", [&] {
        for (int n = 0; n <= 12; ++n) {
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                Word w;
                for (int i = 0; i < n; ++i) w.push_back((mask >> i) & 1u);
                const auto naive = naive_square_scan(w);
                if (!(square_endpoints(w) == naive))
                    return std::optional<std::string>("exhaustive endpoint mismatch");
                if (has_square(w) != naive.contains_square())
                    return std::optional<std::string>("exhaustive has_square mismatch");
            }
        }
        std::mt19937 rng(987654321);
        std::uniform_int_distribution<int> len(0, 64);
        std::uniform_int_distribution<Letter> let(0, 3);
        for (int it = 0; it < 10000; ++it) {
            Word w;
            for (int i = len(rng); i > 0; --i) w.push_back(let(rng));
            const auto naive = naive_square_scan(w);
            if (!(square_endpoints(w) == naive))
                return std::optional<std::string>("random endpoint mismatch");
            if (has_square(w) != naive.contains_square())
                return std::optional<std::string>("random has_square mismatch");
        }
        return std::optional<std::string>{};
    });

    suite.run(8, "extension tests: the three psq examples and the letter-pair identities", [&] {
        auto r = sufficient_check(Word::parse("012323045"));
        if (!r.equal || display(slice(r.lhs, 9, std::nullopt)) != "010")
            return std::optional<std::string>("012323045");
        r = sufficient_check(Word::parse("1121123210"));
        if (!r.equal || r.compare_length != 10)
            return std::optional<std::string>("1121123210");
        r = sufficient_check(Word::parse("11011"));
        if (r.equal || display(r.lhs) != "1101120102" || display(r.rhs) != "1101101201")
            return std::optional<std::string>("11011");
        for (Letter n = 0; n <= 5; ++n)
            if (!letter_pair_test(n, n, 2000))
                return std::optional<std::string>("L(nn) at n = " + std::to_string(n));
        for (Letter a = 3; a <= 5; ++a)
            for (Letter b = 3; b <= 5; ++b)
                if (!letter_pair_test(a, b, 2000))
                    return std::optional<std::string>("L(n1 n2) at (" + std::to_string(a) + "," +
                                                      std::to_string(b) + ")");
        return std::optional<std::string>{};
    });

    suite.run(9, "inducing prefixes: worked example plus exhaustive small words", [&] {
        if (display(induce_prefix(Word::parse("2021"))) != "654303143032015430314303")
            return std::optional<std::string>("x_3(2021)");
        for (const Word& w : square_free_words(5, 3)) {
            const Word x = induce_prefix(w);  // internally re-verified via compute_L_prefix
            const auto scaffold = build_scaffold(w);
            const std::size_t m = scaffold.x.size() - 1;
            const Word closed =
                scaffold.V[m] + apply(restriction_morphism(w),
                                      slice(ruler_prefix(static_cast<Letter>(m)), 0, -1));
            if (x != closed)
                return std::optional<std::string>("closed form differs for " + display(w));
        }
        return std::optional<std::string>{};
    });

    suite.run(10, "verification registry: sf/, gen/ and occ/ all pass", [&] {
        if (auto f = all_pass(suite.harness.run_all("sf/"), "sf/")) return f;
        if (auto f = all_pass(suite.harness.run_all("gen/"), "gen/")) return f;
        if (auto f = all_pass(suite.harness.run_all("occ/"), "occ/")) return f;
        // A's defining property, re-checked against the cached L(4) window
        const Word& a = a_word();
        if (!has_prefix(a, successor(psi2_zero())))
            return std::optional<std::string>("A does not begin with psi2(0)^+");
        const auto off = static_cast<std::int64_t>(1 + t_word(4).size());
        const Word l4 = cache.prefix(Word{4}, static_cast<std::size_t>(off) + a.size());
        if (slice(l4, off, std::nullopt) != a)
            return std::optional<std::string>("L(4) window disagrees with A");
        return std::optional<std::string>{};
    });

    std::printf("%s: %d of 10 criteria passed\n", suite.failures ? "FAIL" : "OK",
                10 - suite.failures);
    return suite.failures ? 1 : 0;
}
