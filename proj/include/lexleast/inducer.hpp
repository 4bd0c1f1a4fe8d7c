#pragma once

#include "lexleast/morphisms.hpp"
#include "lexleast/word.hpp"

#include <cstddef>
#include <vector>

namespace lexleast {

/// The unique split w = p·s·q of a square-containing word where s·q is the
/// maximal square-free suffix and p[-1]·s is the maximal square prefix of
/// p[-1]·s·q. p and s are always nonempty; q may be empty.
struct PsqDecomposition {
    Word p;
    Word s;
    Word q;
};

/// The square-free restrictions w[:j]·k (k < w[j]) of a square-free word,
/// sorted lexicographically. No restriction is a prefix of another, so the
/// order is total.
struct RestrictionSequence {
    std::vector<Word> entries;
    std::size_t count() const { return entries.size(); }
};

/// The x_i recursion data: v[i] = max(w)+i+1, V[i] = v_i ... v_1 v_0, and
/// x_0 = v_0, x_i = v_i x_{i-1} r_{i-1} x_{i-1}.
struct InducerScaffold {
    std::vector<Letter> v;
    std::vector<Word> V;
    std::vector<Word> x;
};

RestrictionSequence restrictions(const Word& w);

InducerScaffold build_scaffold(const Word& w, std::size_t max_restrictions = 14);

/// The prefix x_m with the property that x_m generates x_m·w. The result is
/// re-verified through compute_L_prefix before returning; a mismatch (which
/// would mean a bug, not a theory failure) throws std::runtime_error. The
/// recursion doubles per restriction, so the number of restrictions is
/// capped (std::length_error beyond max_restrictions).
Word induce_prefix(const Word& w, std::size_t max_restrictions = 14);

/// phi_w: k -> r_k V_k on letters k < m(w); other letters are a domain error.
Morphism restriction_morphism(const Word& w);

/// Requires w nonempty with a square (std::invalid_argument otherwise).
PsqDecomposition decompose_psq(const Word& w);

struct SufficientCheckReport {
    PsqDecomposition parts;
    std::size_t compare_length = 0;  // 2|ps|
    Word lhs;                        // L(psq)[:2|ps|]
    Word rhs;                        // (p · L(sq))[:2|ps|]
    bool equal = false;              // true certifies L(psq) = p L(sq)
};

/// The 2|ps| prefix test: L(psq) = p·L(sq) iff both sides agree on their
/// first 2|ps| letters.
SufficientCheckReport sufficient_check(const Word& w);

/// Finite evidence for L(n1 n2) = n1 L(n2): prefix agreement at the given
/// depth (>= 2).
bool letter_pair_test(Letter n1, Letter n2, std::size_t depth);

}  // namespace lexleast
