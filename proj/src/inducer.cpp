#include "lexleast/inducer.hpp"

#include "lexleast/engine.hpp"
#include "lexleast/lexicon.hpp"
#include "lexleast/squares.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace lexleast {

RestrictionSequence restrictions(const Word& w) {
    if (w.empty()) throw std::invalid_argument("restrictions: word must be nonempty");
    if (has_square(w)) throw std::invalid_argument("restrictions: word must be square-free");
    RestrictionSequence out;
    for (std::size_t j = 0; j < w.size(); ++j) {
        for (Letter k = 0; k < w[j]; ++k) {
            Word r = slice(w, 0, static_cast<std::int64_t>(j));
            r.push_back(k);
            if (!has_square(r)) out.entries.push_back(std::move(r));
        }
    }
    std::sort(out.entries.begin(), out.entries.end(), [](const Word& a, const Word& b) {
        return lex_compare(a, b) == LexOrdering::Less;
    });
    return out;
}

InducerScaffold build_scaffold(const Word& w, std::size_t max_restrictions) {
    const RestrictionSequence rs = restrictions(w);
    const std::size_t m = rs.count();
    if (m > max_restrictions)
        throw std::length_error("build_scaffold: " + std::to_string(m) +
                                " restrictions exceed the cap of " +
                                std::to_string(max_restrictions) +
                                " (the prefix doubles per restriction)");
    const Letter base = max_letter(w).value_or(0) + 1;
    InducerScaffold s;
    for (std::size_t i = 0; i <= m; ++i) {
        s.v.push_back(base + static_cast<Letter>(i));
        Word big{s.v.back()};
        if (i > 0) big.append(s.V.back());
        s.V.push_back(std::move(big));
        if (i == 0) {
            s.x.push_back(Word{s.v[0]});
        } else {
            s.x.push_back(Word{s.v[i]} + s.x[i - 1] + rs.entries[i - 1] + s.x[i - 1]);
        }
    }
    return s;
}

Word induce_prefix(const Word& w, std::size_t max_restrictions) {
    Word x = build_scaffold(w, max_restrictions).x.back();
    if (!generates(x, w))
        throw std::runtime_error(
            "induce_prefix: verification failed; the computed prefix does not generate the "
            "target (implementation bug)");
    return x;
}

Morphism restriction_morphism(const Word& w) {
    auto scaffold = std::make_shared<InducerScaffold>(build_scaffold(w));
    auto rs = std::make_shared<RestrictionSequence>(restrictions(w));
    const std::size_t m = rs->count();
    return Morphism(
        [scaffold, rs, m](Letter k) -> Word {
            if (k >= m)
                throw std::domain_error("restriction morphism: letter " + std::to_string(k) +
                                        " is outside the domain [0, " + std::to_string(m) + ")");
            return rs->entries[k] + scaffold->V[k];
        },
        "phi_w");
}

PsqDecomposition decompose_psq(const Word& w) {
    const std::size_t n = w.size();
    if (n == 0) throw std::invalid_argument("decompose_psq: word must be nonempty");
    // Binary search the maximal square-free suffix; square-freeness of
    // suffixes is monotone in their length.
    std::size_t lo = 1, hi = n;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo + 1) / 2;
        if (has_square(slice(w, static_cast<std::int64_t>(n - mid), std::nullopt)))
            hi = mid - 1;
        else
            lo = mid;
    }
    if (lo == n) throw std::invalid_argument("decompose_psq: word is square-free");
    const Word p = slice(w, 0, static_cast<std::int64_t>(n - lo));
    const Word z = Word{p.back()} + slice(w, static_cast<std::int64_t>(n - lo), std::nullopt);
    for (std::size_t k = z.size() / 2; k >= 1; --k) {
        bool square = true;
        for (std::size_t i = 0; i < k; ++i) {
            if (z[i] != z[k + i]) {
                square = false;
                break;
            }
        }
        if (square) {
            return {p, slice(z, 1, static_cast<std::int64_t>(2 * k)),
                    slice(z, static_cast<std::int64_t>(2 * k), std::nullopt)};
        }
    }
    throw std::logic_error("decompose_psq: no square prefix found (cannot happen)");
}

SufficientCheckReport sufficient_check(const Word& w) {
    SufficientCheckReport report;
    report.parts = decompose_psq(w);
    const Word& p = report.parts.p;
    const Word sq = report.parts.s + report.parts.q;
    report.compare_length = 2 * (p.size() + report.parts.s.size());
    const std::size_t cl = report.compare_length;
    if (cl <= w.size()) {
        // Both sides begin with w itself, so they agree trivially.
        report.lhs = slice(w, 0, static_cast<std::int64_t>(cl));
        report.rhs = report.lhs;
    } else {
        report.lhs = compute_L_prefix(w, cl);
        report.rhs = p + compute_L_prefix(sq, cl - p.size());
    }
    report.equal = report.lhs == report.rhs;
    return report;
}

bool letter_pair_test(Letter n1, Letter n2, std::size_t depth) {
    if (depth < 2) throw std::invalid_argument("letter_pair_test: depth must be at least 2");
    return compute_L_prefix(Word{n1, n2}, depth) == Word{n1} + compute_L_prefix(Word{n2}, depth - 1);
}

}  // namespace lexleast
