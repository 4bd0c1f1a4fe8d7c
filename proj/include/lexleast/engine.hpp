#pragma once

#include "lexleast/word.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace lexleast {

/// Greedy extension state for L(base): the word grown so far together with
/// the boundary index |base|. Squares inside the base are permitted; no
/// square may end at or after the boundary, and each appended letter is the
/// least one that keeps it that way.
class ExtensionState {
public:
    explicit ExtensionState(Word base);
    /// Builds a state from a base plus letters already appended. Validates
    /// both state invariants (no square ends at an index >= |base|, and the
    /// extension is what the greedy rule produces); throws
    /// std::invalid_argument when either fails.
    ExtensionState(Word base, const Word& extension);

    const Word& word() const { return word_; }
    std::size_t boundary() const { return boundary_; }
    Word base() const;
    Word extension() const;

    /// Least letter c such that word()+c has no square ending at its last
    /// index. Always exists and is at most max_letter(word())+1.
    Letter peek_next();
    /// Appends peek_next().
    void step();
    void extend_to(std::size_t length);

private:
    Word word_;
    std::size_t boundary_ = 0;
    Letter max_seen_ = 0;
    // scratch buffers reused across steps
    std::vector<Letter> rev_;
    std::vector<std::uint32_t> z_;
    std::vector<char> forbidden_;
};

/// Spec-level entry point: the next greedy letter for a state.
Letter next_letter(ExtensionState& state);

/// The length-n prefix of L(p). Requires n >= |p|.
Word compute_L_prefix(const Word& p, std::size_t n);

/// True iff L(p) begins with p·s, i.e. the greedy extension of p spells s.
bool generates(const Word& p, const Word& s);

/// True iff every word lexicographically less than u introduces a square
/// when appended to w (a square ending at an index >= |w|). u must be
/// nonempty.
bool is_irreducible(const Word& w, const Word& u);

/// Infinite stream of the letters of L(base), starting at index 0.
LetterSource lex_least_stream(Word base);

/// Shares greedy computations between callers keyed by base word; a state
/// only ever grows, so later requests reuse earlier work.
class PrefixCache {
public:
    Word prefix(const Word& base, std::size_t n);

private:
    std::mutex mu_;
    std::map<Word, std::shared_ptr<ExtensionState>> states_;
};

}  // namespace lexleast
