#include "lexleast/verify.hpp"

#include "lexleast/inducer.hpp"
#include "lexleast/lexicon.hpp"
#include "lexleast/morphisms.hpp"
#include "lexleast/squares.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace lexleast {

std::string_view to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::Skipped: return "skipped";
    }
    return "?";
}

namespace {

struct Ctx {
    VerifyOptions opts;
    PrefixCache cache;

    Word L(const Word& base, std::size_t n) { return cache.prefix(base, n); }
    const Word& A() { return a_word(opts.a_cache); }
    std::size_t depth(const std::string& id, std::size_t fallback) const {
        auto it = opts.depth_overrides.find(id);
        return it == opts.depth_overrides.end() ? fallback : it->second;
    }
};

// A check returns nullopt on success or a witness description on failure.
using CheckFn = std::function<std::optional<std::string>(Ctx&)>;

struct CheckDef {
    std::string id;
    std::string claim;
    bool needs_a = false;
    CheckFn run;
};

std::string show(const Word& w, std::size_t limit = 72) {
    std::string s = display(w);
    if (s.size() > limit) s = s.substr(0, limit) + "...";
    return s;
}

std::optional<std::string> expect_square_free(const Word& w) {
    if (!has_square(w)) return std::nullopt;
    const auto report = square_endpoints(w);
    const auto& occ = report.occurrences.front();
    std::ostringstream os;
    os << "square of period " << occ.period << " at index " << occ.start << ": "
       << show(slice(w, static_cast<std::int64_t>(occ.start),
                     static_cast<std::int64_t>(occ.start + 2 * occ.period)));
    return os.str();
}

std::optional<std::string> expect_generates(Ctx& c, const Word& base, const Word& tail) {
    const Word got = c.L(base, base.size() + tail.size());
    const Word want = base + tail;
    if (got == want) return std::nullopt;
    std::size_t i = 0;
    while (i < got.size() && got[i] == want[i]) ++i;
    std::ostringstream os;
    os << "greedy extension diverges at index " << i << " (got letter " << got[i]
       << ", expected " << want[i] << ")";
    return os.str();
}

std::optional<std::string> expect_equal(const Word& got, const Word& want,
                                        std::string_view what) {
    if (got == want) return std::nullopt;
    std::size_t i = 0;
    const std::size_t n = std::min(got.size(), want.size());
    while (i < n && got[i] == want[i]) ++i;
    std::ostringstream os;
    os << what << ": mismatch at index " << i << " (|got|=" << got.size()
       << ", |want|=" << want.size() << ")";
    return os.str();
}

Word alpha_limit_prefix(std::size_t len) {
    Letter n = 1;
    while (alpha_image(n).size() - 1 < len) ++n;
    return slice(alpha_image(n), 0, static_cast<std::int64_t>(len));
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

std::vector<CheckDef> build_registry() {
    std::vector<CheckDef> defs;
    auto add = [&](std::string id, std::string claim, bool needs_a, CheckFn fn) {
        defs.push_back({std::move(id), std::move(claim), needs_a, std::move(fn)});
    };
    const auto W = [](std::string_view s) { return Word::parse(s); };

    // --- square-freeness of fixed words -----------------------------------
    auto add_sf = [&](std::string id, std::string claim, bool needs_a,
                      std::function<Word(Ctx&)> make) {
        add(std::move(id), std::move(claim), needs_a,
            [make](Ctx& c) { return expect_square_free(make(c)); });
    };
    add_sf("sf/psi1-010", "psi1(010) is square-free", false,
           [](Ctx&) { return apply(builtin(Builtin::Psi1), Word{0, 1, 0}); });
    add_sf("sf/psi1-3R2R1-psi20", "psi1(3 R_2 R_1) psi2(0) is square-free", false, [](Ctx&) {
        return apply(builtin(Builtin::Psi1), Word{3} + ruler_prefix(2) + ruler_prefix(1)) +
               psi2_zero();
    });
    add_sf("sf/psi2-10", "psi2(10) is square-free", false,
           [](Ctx&) { return apply(builtin(Builtin::Psi2), Word{1, 0}); });
    add_sf("sf/psi2-010", "psi2(010) is square-free", false,
           [](Ctx&) { return apply(builtin(Builtin::Psi2), Word{0, 1, 0}); });
    add_sf("sf/alpha-0", "alpha(0) is square-free", false, [](Ctx&) { return alpha_image(0); });
    add_sf("sf/alpha-1", "alpha(1) is square-free", false, [](Ctx&) { return alpha_image(1); });
    for (Letter n : {1, 2, 3}) {
        add_sf("sf/alpha-0" + std::to_string(n),
               "alpha(0" + std::to_string(n) + ") is square-free", false,
               [n](Ctx&) { return apply(builtin(Builtin::Alpha), Word{0, n}); });
    }
    for (Letter n : {1, 2}) {
        add_sf("sf/alpha-0" + std::to_string(n) + "0",
               "alpha(0" + std::to_string(n) + "0) is square-free", false,
               [n](Ctx&) { return apply(builtin(Builtin::Alpha), Word{0, n, 0}); });
    }
    add_sf("sf/alpha-10", "alpha(10) is square-free", false,
           [](Ctx&) { return apply(builtin(Builtin::Alpha), Word{1, 0}); });
    add_sf("sf/C-alpha1plus", "C alpha(1)^+ is square-free", false,
           [](Ctx&) { return constant(NamedConstant::C) + successor(alpha_image(1)); });
    add_sf("sf/A", "A is square-free", true, [](Ctx& c) { return c.A(); });
    add_sf("sf/Y1-alphaR2", "Y_1 alpha(R_2) is square-free", false, [](Ctx& c) {
        return c.L(Word{1}, 5177) + apply(builtin(Builtin::Alpha), ruler_prefix(2));
    });
    add_sf("sf/A-rho-alpha-R2", "A rho(alpha(R_2)) is square-free", true, [](Ctx& c) {
        return c.A() +
               apply(builtin(Builtin::Rho), apply(builtin(Builtin::Alpha), ruler_prefix(2)));
    });
    add("sf/nTnA-345", "n T(n) A is square-free for n = 3, 4, 5", true,
        [](Ctx& c) -> std::optional<std::string> {
            for (Letter n : {3, 4, 5}) {
                auto fail = expect_square_free(Word{n} + t_word(n) + c.A());
                if (fail) return "n=" + std::to_string(n) + ": " + *fail;
            }
            return std::nullopt;
        });
    add_sf("sf/T6-A", "T(6) A is square-free", true,
           [](Ctx& c) { return t_word(6) + c.A(); });

    // --- generates claims --------------------------------------------------
    add("gen/R2R12", "R_2 R_1 2 generates R_2 R_1 psi1(0)", false,
        [W](Ctx& c) { return expect_generates(c, W("0102012"), W("02101")); });
    add("gen/psi1-1-0", "psi1(1) generates psi1(10)", false,
        [](Ctx& c) { return expect_generates(c, psi1_image(1), psi1_image(0)); });
    add("gen/psi1-1-01", "psi1(1) generates psi1(101)", false, [](Ctx& c) {
        return expect_generates(c, psi1_image(1), psi1_image(0) + psi1_image(1));
    });
    add("gen/psi2-1-0", "psi2(1) generates psi2(10)", false,
        [](Ctx& c) { return expect_generates(c, psi2_image(1), psi2_image(0)); });
    add("gen/psi2-1-01", "psi2(1) generates psi2(101)", false, [](Ctx& c) {
        return expect_generates(c, psi2_image(1), psi2_image(0) + psi2_image(1));
    });
    add("gen/P03P13", "P_0(3) P_1(3) generates P_0(3) P_1(3) 20210", false, [W](Ctx& c) {
        return expect_generates(c, p_word(0, 3) + p_word(1, 3), W("20210"));
    });
    add("gen/P03P13-psi20", "P_0(3) P_1(3) 202102 generates P_0(3) P_1(3) psi2(0)", false,
        [W](Ctx& c) {
            return expect_generates(c, p_word(0, 3) + p_word(1, 3) + W("202102"),
                                    slice(psi2_zero(), 6, std::nullopt));
        });
    add("gen/G-alpha0", "G is the shortest prefix of alpha(0) that generates alpha(0)", false,
        [](Ctx& c) -> std::optional<std::string> {
            const Word& a0 = alpha_image(0);
            const Word& g = constant(NamedConstant::G);
            if (auto fail = expect_generates(c, g, slice(a0, 9, std::nullopt))) return fail;
            for (std::int64_t k = 1; k < 9; ++k) {
                if (c.L(slice(a0, 0, k), a0.size()) == a0)
                    return "shorter prefix of length " + std::to_string(k) +
                           " already generates alpha(0)";
            }
            return std::nullopt;
        });
    add("gen/010203-C", "010203 generates C", false, [W](Ctx& c) {
        return expect_generates(c, W("010203"), slice(constant(NamedConstant::C), 6, std::nullopt));
    });
    add("gen/alpha0-alpha01", "alpha(0) generates alpha(01)", false,
        [](Ctx& c) { return expect_generates(c, alpha_image(0), alpha_image(1)); });
    add("gen/alpha01-alpha010", "alpha(01) generates alpha(010)", false, [](Ctx& c) {
        return expect_generates(c, alpha_image(0) + alpha_image(1), alpha_image(0));
    });
    add("gen/C-alpha1plus", "C alpha(1)^+ is a prefix of L(C)", false, [](Ctx& c) {
        return expect_generates(c, constant(NamedConstant::C), successor(alpha_image(1)));
    });
    add("gen/T3-A-rhoG", "T(3) psi2(0)^+ generates T(3) A rho(G)", true, [](Ctx& c) {
        const Word base = t_word(3) + successor(psi2_zero());
        const Word tail = slice(c.A(), 199, std::nullopt) +
                          apply(builtin(Builtin::Rho), constant(NamedConstant::G));
        return expect_generates(c, base, tail);
    });
    add("gen/L1-Y1G", "L(1) = L(Y_1 G), agreeing 1000 letters past Y_1 G", false,
        [](Ctx& c) -> std::optional<std::string> {
            const Word y1 = c.L(Word{1}, 5177);
            const Word y1g = y1 + constant(NamedConstant::G);
            if (c.L(Word{1}, y1g.size()) != y1g) return "Y_1 G is not a prefix of L(1)";
            const std::size_t n = y1g.size() + 1000;
            return expect_equal(c.L(y1g, n), c.L(Word{1}, n), "L(Y_1 G) vs L(1)");
        });

    // --- occurrence claims --------------------------------------------------
    add("occ/E-in-alpha0", "E occurs in alpha(0) exactly as prefix and suffix", false,
        [](Ctx&) -> std::optional<std::string> {
            const Word& a0 = alpha_image(0);
            const Word& e = constant(NamedConstant::E);
            const auto occ = occurrences(a0, e);
            const std::vector<std::size_t> want{0, a0.size() - e.size()};
            if (occ == want) return std::nullopt;
            return "found " + std::to_string(occ.size()) + " occurrences";
        });
    add("occ/202102-psi20", "202102 occurs in psi2(0) only as a prefix", false,
        [W](Ctx&) -> std::optional<std::string> {
            const auto occ = occurrences(psi2_zero(), W("202102"));
            if (occ == std::vector<std::size_t>{0}) return std::nullopt;
            return "occurrences at " + std::to_string(occ.size()) + " positions";
        });
    add("occ/202101202-psi20", "202101202 occurs in psi2(0) only as a suffix", false,
        [W](Ctx&) -> std::optional<std::string> {
            const auto occ = occurrences(psi2_zero(), W("202101202"));
            if (occ == std::vector<std::size_t>{psi2_zero().size() - 9}) return std::nullopt;
            return "occurrences at " + std::to_string(occ.size()) + " positions";
        });
    add("occ/p-once-in-A", "A[:254] occurs exactly once in A", true,
        [](Ctx& c) -> std::optional<std::string> {
            const auto occ = occurrences(c.A(), slice(c.A(), 0, 254));
            if (occ == std::vector<std::size_t>{0}) return std::nullopt;
            return std::to_string(occ.size()) + " occurrences";
        });
    add("occ/s-once-in-A", "A[-88:] occurs exactly once in A", true,
        [](Ctx& c) -> std::optional<std::string> {
            const auto occ = occurrences(c.A(), slice(c.A(), -88, std::nullopt));
            if (occ == std::vector<std::size_t>{c.A().size() - 88}) return std::nullopt;
            return std::to_string(occ.size()) + " occurrences";
        });
    add("occ/s-properties",
        "A[-88:] is even-grounded, avoids psi2(0), has max letter 4 appearing 7 times", true,
        [](Ctx& c) -> std::optional<std::string> {
            const Word s = slice(c.A(), -88, std::nullopt);
            if (grounded_class(s) != GroundedClass::EvenGrounded) return "not even-grounded";
            if (!occurrences(psi2_zero(), s).empty()) return "occurs in psi2(0)";
            if (max_letter(s) != Letter{4}) return "max letter is not 4";
            const auto fours = std::count(s.begin(), s.end(), Letter{4});
            if (fours != 7) return std::to_string(fours) + " fours";
            return std::nullopt;
        });
    add("occ/s-not-in-psi2-12", "A[-88:] occurs in neither psi2(1) nor psi2(2)", true,
        [](Ctx& c) -> std::optional<std::string> {
            const Word s = slice(c.A(), -88, std::nullopt);
            for (Letter n : {1, 2})
                if (!occurrences(psi2_image(n), s).empty())
                    return "occurs in psi2(" + std::to_string(n) + ")";
            return std::nullopt;
        });
    add("occ/rhoinv-s-not-in-alpha0", "rho^{-1}(A[-88:]) does not occur in alpha(0)", true,
        [](Ctx& c) -> std::optional<std::string> {
            const Word inv = ruler_inverse(slice(c.A(), -88, std::nullopt));
            if (occurrences(alpha_image(0), inv).empty()) return std::nullopt;
            return "does occur";
        });
    add("occ/alpha0-grounded-affixes",
        "longest grounded prefix of alpha(0) is 01020301 and longest grounded suffix is 2", false,
        [W](Ctx&) -> std::optional<std::string> {
            const Word& a0 = alpha_image(0);
            std::size_t p = 0;
            while (p < a0.size() && is_grounded(slice(a0, 0, static_cast<std::int64_t>(p + 1))))
                ++p;
            std::size_t s = 0;
            while (s < a0.size() &&
                   is_grounded(slice(a0, static_cast<std::int64_t>(a0.size() - s - 1),
                                     std::nullopt)))
                ++s;
            if (slice(a0, 0, static_cast<std::int64_t>(p)) != W("01020301"))
                return "grounded prefix has length " + std::to_string(p);
            if (slice(a0, static_cast<std::int64_t>(a0.size() - s), std::nullopt) != W("2"))
                return "grounded suffix has length " + std::to_string(s);
            return std::nullopt;
        });
    add("occ/alpha1-0203-suffix", "0203 R_3^+ R_4 is a suffix of alpha(1)", false,
        [W](Ctx&) -> std::optional<std::string> {
            const Word want = W("0203") + successor(ruler_prefix(3)) + ruler_prefix(4);
            if (has_suffix(alpha_image(1), want)) return std::nullopt;
            return "not a suffix";
        });
    add("occ/alpha12-top-letter",
        "alpha(1) ends in 4 with max 4; alpha(2) ends in 5 with max 5, four occurrences", false,
        [](Ctx&) -> std::optional<std::string> {
            const Word& a1 = alpha_image(1);
            const Word& a2 = alpha_image(2);
            if (a1.back() != 4 || max_letter(a1) != Letter{4}) return "alpha(1) violates";
            if (a2.back() != 5 || max_letter(a2) != Letter{5}) return "alpha(2) violates";
            if (std::count(a2.begin(), a2.end(), Letter{5}) != 4)
                return "alpha(2) does not contain exactly four 5s";
            return std::nullopt;
        });
    add("occ/C-ruler-prefix", "the longest common prefix of the ruler sequence and C is C[:5]",
        false, [](Ctx&) -> std::optional<std::string> {
            const Word& c0 = constant(NamedConstant::C);
            std::size_t i = 0;
            while (i < c0.size() && c0[i] == ruler_letter(i)) ++i;
            if (i == 5) return std::nullopt;
            return "common prefix has length " + std::to_string(i);
        });

    // --- length / structure identities -------------------------------------
    add("len/alpha3-4-shared", "alpha(3) and alpha(4) share exactly their first 13029 letters",
        false, [](Ctx&) -> std::optional<std::string> {
            const Word& a3 = alpha_image(3);
            const Word& a4 = alpha_image(4);
            if (a3.size() != 13030) return "|alpha(3)| = " + std::to_string(a3.size());
            if (slice(a3, 0, 13029) != slice(a4, 0, 13029)) return "prefixes differ before 13029";
            if (a3[13029] == a4[13029]) return "prefixes agree past 13029";
            return std::nullopt;
        });
    add("len/all-glossary", "every glossary length formula holds up to the caps", false,
        [](Ctx&) -> std::optional<std::string> {
            auto bad = [](std::string what, std::size_t got, std::size_t want)
                -> std::optional<std::string> {
                return "|" + what + "| = " + std::to_string(got) + ", formula gives " +
                       std::to_string(want);
            };
            for (Letter n = 0; n <= kRulerCap; ++n) {
                const auto r = ruler_prefix(n);
                if (r.size() != (std::size_t{1} << n)) return bad("R_" + std::to_string(n),
                                                                  r.size(), std::size_t{1} << n);
                if (max_letter(r) != n) return "max(R_n) != n at n=" + std::to_string(n);
            }
            for (Letter n = 0; n <= kMorphicCap; ++n)
                if (p_word(0, n).size() != (std::size_t{2} << n) - 2)
                    return bad("P_0(" + std::to_string(n) + ")", p_word(0, n).size(),
                               (std::size_t{2} << n) - 2);
            for (Letter n = 3; n <= kMorphicCap; ++n) {
                const std::size_t p1 = (std::size_t{4} * n + 1) * (std::size_t{1} << (n - 1)) - 5;
                const std::size_t p2 =
                    (std::size_t{4} * n * n + 14 * n + 149) * (std::size_t{1} << (n - 2)) - 193;
                const std::size_t t =
                    (std::size_t{4} * n * n + 22 * n + 159) * (std::size_t{1} << (n - 2)) - 200;
                if (p_word(1, n).size() != p1)
                    return bad("P_1(" + std::to_string(n) + ")", p_word(1, n).size(), p1);
                if (p_word(2, n).size() != p2)
                    return bad("P_2(" + std::to_string(n) + ")", p_word(2, n).size(), p2);
                if (t_word(n).size() != t)
                    return bad("T(" + std::to_string(n) + ")", t_word(n).size(), t);
            }
            for (Letter n = 1; n <= kMorphicCap; ++n) {
                if (psi1_image(n).size() != (std::size_t{4} << n) - 1)
                    return bad("psi1(" + std::to_string(n) + ")", psi1_image(n).size(),
                               (std::size_t{4} << n) - 1);
                if (psi2_image(n).size() != (std::size_t{4} * n + 13) * (std::size_t{2} << n) - 6)
                    return bad("psi2(" + std::to_string(n) + ")", psi2_image(n).size(),
                               (4 * n + 13) * (std::size_t{2} << n) - 6);
            }
            for (Letter n = 2; n <= kMorphicCap; ++n)
                if (b_word(n).size() != (std::size_t{1} << (n - 2)) * (4 * n + 5))
                    return bad("b_" + std::to_string(n), b_word(n).size(),
                               (std::size_t{1} << (n - 2)) * (4 * n + 5));
            for (Letter n = 3; n <= kMorphicCap; ++n)
                if (c_word(n).size() != (std::size_t{1} << (n - 3)) * (4 * n * n + 22 * n + 159))
                    return bad("c_" + std::to_string(n), c_word(n).size(),
                               (std::size_t{1} << (n - 3)) * (4 * n * n + 22 * n + 159));
            const std::pair<NamedConstant, std::size_t> fixed[] = {
                {NamedConstant::C, 10},   {NamedConstant::B0, 798}, {NamedConstant::B1, 1572},
                {NamedConstant::E, 1592}, {NamedConstant::F, 42},   {NamedConstant::G, 9},
                {NamedConstant::Psi2Zero, 199}, {NamedConstant::C3, 261}, {NamedConstant::B2, 13},
            };
            for (auto [which, want] : fixed)
                if (constant(which).size() != want)
                    return bad(std::string(constant_name(which)), constant(which).size(), want);
            if (alpha_image(0).size() != 3226) return bad("alpha(0)", alpha_image(0).size(), 3226);
            return std::nullopt;
        });
    add("len/A", "A has length 13747 and begins with psi2(0)^+ ", true,
        [](Ctx& c) -> std::optional<std::string> {
            if (c.A().size() != 13747) return "|A| = " + std::to_string(c.A().size());
            if (!has_prefix(c.A(), successor(psi2_zero()))) return "prefix is not psi2(0)^+";
            return std::nullopt;
        });
    add("len/E-border", "E is the longest proper border of alpha(0)", false,
        [](Ctx&) -> std::optional<std::string> {
            const Word& a0 = alpha_image(0);
            const Word& e = constant(NamedConstant::E);
            // longest proper border via the prefix function
            std::vector<std::size_t> pi(a0.size(), 0);
            for (std::size_t i = 1; i < a0.size(); ++i) {
                std::size_t k = pi[i - 1];
                while (k > 0 && a0[i] != a0[k]) k = pi[k - 1];
                if (a0[i] == a0[k]) ++k;
                pi[i] = k;
            }
            if (pi.back() != e.size())
                return "longest border has length " + std::to_string(pi.back());
            return std::nullopt;
        });
    add("len/psi2-is-psi1-squared", "psi2(n) = psi1(psi1(n)) for 1 <= n <= 6 but not at 0", false,
        [](Ctx&) -> std::optional<std::string> {
            for (Letter n = 1; n <= 6; ++n) {
                Word twice;
                for (Letter l : psi1_image(n)) twice.append(psi1_image(l));
                if (psi2_image(n) != twice) return "differs at n=" + std::to_string(n);
            }
            Word twice0;
            for (Letter l : psi1_image(0)) twice0.append(psi1_image(l));
            if (psi2_image(0) == twice0) return "psi2(0) equals psi1^2(0)";
            return std::nullopt;
        });

    // --- structure theorems at depth ----------------------------------------
    add("thm/L1-structure", "L(1) = Y_1 alpha(L(eps)) to depth", false,
        [](Ctx& c) -> std::optional<std::string> {
            const std::size_t d = c.depth("thm/L1-structure", c.opts.structure_depth);
            const Word got = c.L(Word{1}, 5177 + d);
            const Word want =
                c.L(Word{1}, 5177) + apply_stream(builtin(Builtin::Alpha), ruler_stream(), d);
            return expect_equal(got, want, "L(1) vs Y_1 alpha(L(eps))");
        });
    for (Letter n : {3, 4, 5}) {
        add("thm/Ln-structure-" + std::to_string(n),
            "L(" + std::to_string(n) + ") = Y_" + std::to_string(n) + " rho(alpha(L(eps))) to depth",
            true, [n](Ctx& c) -> std::optional<std::string> {
                const std::size_t d =
                    c.depth("thm/Ln-structure-" + std::to_string(n), c.opts.structure_depth);
                const Word yn = Word{n} + t_word(n) + c.A();
                const Word got = c.L(Word{n}, yn.size() + d);
                auto stream = morphic_stream(builtin(Builtin::Alpha), ruler_stream());
                const Word want =
                    yn + apply_stream(builtin(Builtin::Rho), std::move(stream), d);
                return expect_equal(got, want, "L(n) vs Y_n rho(alpha(L(eps)))");
            });
    }
    add("thm/L0n-rho", "rho is L-commuting on square-free samples at depth 512", false,
        [](Ctx&) -> std::optional<std::string> {
            std::vector<Word> samples = {Word{0},          Word{2},    Word{0, 1},
                                         Word{0, 1, 2},    Word{1, 0}, Word{0, 1, 0, 2},
                                         Word{2, 0, 2, 1}, Word{3}};
            std::mt19937 rng(12345);
            const auto pool = square_free_words(6, 3);
            std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
            for (int i = 0; i < 20; ++i) samples.push_back(pool[pick(rng)]);
            const auto outcome = l_commuting_sample(builtin(Builtin::Rho), samples, 512);
            if (outcome.ok) return std::nullopt;
            return "witness " + show(*outcome.witness);
        });
    add("thm/L012", "L(012) = 01201 lim rho^{-1}(alpha(n)) to depth", false,
        [W](Ctx& c) -> std::optional<std::string> {
            const std::size_t d = c.depth("thm/L012", c.opts.structure_depth);
            const Word got = c.L(W("012"), 5 + d);
            const Word want = W("01201") + ruler_inverse(alpha_limit_prefix(2 * d));
            return expect_equal(got, want, "L(012)");
        });
    add("thm/Lnn", "L(nn) = n L(n) for n <= 5 at depth", false,
        [](Ctx& c) -> std::optional<std::string> {
            for (Letter n = 0; n <= 5; ++n)
                if (!letter_pair_test(n, n, c.opts.pair_depth))
                    return "fails at n=" + std::to_string(n);
            return std::nullopt;
        });
    add("thm/Ln1n2", "L(n1 n2) = n1 L(n2) for n1, n2 in {3,4,5} at depth", false,
        [](Ctx& c) -> std::optional<std::string> {
            for (Letter n1 = 3; n1 <= 5; ++n1)
                for (Letter n2 = 3; n2 <= 5; ++n2)
                    if (!letter_pair_test(n1, n2, c.opts.pair_depth))
                        return "fails at (" + std::to_string(n1) + "," + std::to_string(n2) + ")";
            return std::nullopt;
        });

    // --- conjecture evidence (non-blocking) ---------------------------------
    add("conj/L2-gamma", "L(2) = 2 gamma(L(eps)): consistent to depth", false,
        [](Ctx& c) -> std::optional<std::string> {
            const std::size_t d = c.depth("conj/L2-gamma", c.opts.structure_depth);
            const Word got = c.L(Word{2}, 1 + d);
            const Word want = Word{2} + apply_stream(builtin(Builtin::Gamma), ruler_stream(), d);
            return expect_equal(got, want, "L(2) vs 2 gamma(L(eps))");
        });
    add("conj/Ln1", "L(n1) = n L(1) for n = 3, 4: consistent to depth", false,
        [](Ctx& c) -> std::optional<std::string> {
            const std::size_t d = c.depth("conj/Ln1", c.opts.two_letter_depth);
            for (Letter n : {3, 4}) {
                const Word got = c.L(Word{n, 1}, d);
                const Word want = Word{n} + c.L(Word{1}, d - 1);
                if (auto fail = expect_equal(got, want, "L(n1) vs n L(1)")) return fail;
            }
            return std::nullopt;
        });
    add("conj/Ln2", "L(n2) = n L(2) for n = 3, 4: consistent to depth", false,
        [](Ctx& c) -> std::optional<std::string> {
            const std::size_t d = c.depth("conj/Ln2", c.opts.two_letter_depth);
            for (Letter n : {3, 4}) {
                const Word got = c.L(Word{n, 2}, d);
                const Word want = Word{n} + c.L(Word{2}, d - 1);
                if (auto fail = expect_equal(got, want, "L(n2) vs n L(2)")) return fail;
            }
            return std::nullopt;
        });

    // --- inducing prefixes ---------------------------------------------------
    add("ind/x3-2021", "x_3(2021) = 654303143032015430314303 and generates 2021 after it", false,
        [W](Ctx&) -> std::optional<std::string> {
            const Word x = induce_prefix(W("2021"));
            return expect_equal(x, W("654303143032015430314303"), "x_3");
        });
    add("ind/exhaustive-small",
        "induce_prefix works and matches V_m phi_w(R_m[:-1]) for all square-free w, |w| <= 5, "
        "letters <= 3",
        false, [](Ctx&) -> std::optional<std::string> {
            for (const Word& w : square_free_words(5, 3)) {
                const Word x = induce_prefix(w);  // internally verified
                const auto scaffold = build_scaffold(w);
                const std::size_t m = scaffold.x.size() - 1;
                const Word closed =
                    scaffold.V[m] +
                    apply(restriction_morphism(w),
                          slice(ruler_prefix(static_cast<Letter>(m)), 0, -1));
                if (x != closed) return "closed form differs for w = " + show(w);
            }
            return std::nullopt;
        });

    return defs;
}

}  // namespace

struct Harness::Impl {
    Ctx ctx;
    std::vector<CheckDef> defs = build_registry();
    bool a_ready = false;
    bool a_failed = false;
    std::string a_error;

    const CheckDef* find(std::string_view id) const {
        for (const auto& d : defs)
            if (d.id == id) return &d;
        return nullptr;
    }

    void prepare_a() {
        if (a_ready || a_failed) return;
        try {
            ctx.A();
            a_ready = true;
        } catch (const std::exception& e) {
            a_failed = true;
            a_error = e.what();
        }
    }

    CheckResult run(const CheckDef& def) {
        CheckResult result;
        result.id = def.id;
        result.claim = def.claim;
        if (def.needs_a) {
            prepare_a();
            if (a_failed) {
                result.status = CheckStatus::Skipped;
                result.witness = "A unavailable: " + a_error;
                return result;
            }
        }
        const auto start = std::chrono::steady_clock::now();
        try {
            auto witness = def.run(ctx);
            result.status = witness ? CheckStatus::Fail : CheckStatus::Pass;
            result.witness = std::move(witness);
        } catch (const std::exception& e) {
            result.status = CheckStatus::Fail;
            result.witness = std::string("exception: ") + e.what();
        }
        const auto stop = std::chrono::steady_clock::now();
        result.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
        return result;
    }
};

Harness::Harness(VerifyOptions options) : impl_(std::make_unique<Impl>()) {
    impl_->ctx.opts = std::move(options);
}

Harness::~Harness() = default;

std::vector<std::string> Harness::ids(std::string_view filter) const {
    std::vector<std::string> out;
    for (const auto& d : impl_->defs)
        if (d.id.starts_with(filter)) out.push_back(d.id);
    return out;
}

std::string Harness::claim(std::string_view id) const {
    const auto* def = impl_->find(id);
    if (!def) throw std::invalid_argument("unknown check id: " + std::string(id));
    return def->claim;
}

CheckResult Harness::run_check(std::string_view id) {
    const auto* def = impl_->find(id);
    if (!def) throw std::invalid_argument("unknown check id: " + std::string(id));
    return impl_->run(*def);
}

std::vector<CheckResult> Harness::run_all(std::string_view filter) {
    std::vector<CheckResult> out;
    for (const auto& d : impl_->defs)
        if (d.id.starts_with(filter)) out.push_back(impl_->run(d));
    return out;
}

bool Harness::blocking(std::string_view id) { return !id.starts_with("conj/"); }

PrefixCache& Harness::cache() { return impl_->ctx.cache; }

}  // namespace lexleast
