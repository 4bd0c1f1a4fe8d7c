#pragma once

#include "lexleast/squares.hpp"
#include "lexleast/word.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lexleast {

/// Total non-erasing map from letters to nonempty words, represented by a
/// rule function with a memo table (the alphabet is infinite, so images are
/// computed on demand). The memo is guarded by a mutex; image() may be
/// called from several threads.
class Morphism {
public:
    using Rule = std::function<Word(Letter)>;
    explicit Morphism(Rule rule, std::string name = "");

    /// Memoized image of one letter. Throws std::logic_error if the rule
    /// produces the empty word (morphisms here are non-erasing).
    const Word& image(Letter k) const;
    const std::string& name() const { return name_; }

private:
    Rule rule_;
    std::string name_;
    mutable std::mutex mu_;
    mutable std::map<Letter, Word> memo_;
};

/// Concatenation of the images of the letters of w, in order.
Word apply(const Morphism& m, const Word& w);

/// First n letters of the image of the stream; consumes only as many source
/// letters as needed. Throws std::invalid_argument if the source runs out
/// before n image letters exist.
Word apply_stream(const Morphism& m, const LetterSource& source, std::size_t n);

/// Letters of m(source) as a lazy stream (one source image buffered at a time).
LetterSource morphic_stream(const Morphism& m, LetterSource source);

/// L(ε)[i]: the ruler sequence, i.e. the 2-adic valuation of i+1.
Letter ruler_letter(std::uint64_t index);
LetterSource ruler_stream();

/// Inverse of the ruler morphism: requires |w| even and w even-grounded,
/// returns v with rho(v) = w (v[i] = w[2i+1] - 1). Violations throw
/// std::invalid_argument.
Word ruler_inverse(const Word& w);

enum class Builtin { Rho, Psi1, Psi2, Alpha, Gamma };
const Morphism& builtin(Builtin which);
std::optional<Builtin> builtin_by_name(std::string_view name);
std::string_view builtin_name(Builtin which);

enum class ChunkClass { ChunkPrefix, ChunkSuffix, WholeChunk, Interior, Straddling };

/// Position of one factor occurrence relative to the chunk decomposition of
/// m(w): chunk_index is the position in w of the chunk containing the
/// occurrence start and offset the number of letters into that chunk.
struct ChunkAlignment {
    std::size_t factor_start = 0;
    std::size_t chunk_index = 0;
    std::size_t offset = 0;
    ChunkClass classification = ChunkClass::Interior;
};

std::vector<ChunkAlignment> chunk_align(const Morphism& m, const Word& w, const Word& factor);

struct SampleOutcome {
    bool ok = true;
    std::optional<Word> witness;              // offending sample word
    std::optional<SquareOccurrence> square;   // square found in its image, if any
};

/// Checks that m maps every (square-free) sample to a square-free word.
/// A sample containing a square is a precondition error.
SampleOutcome square_free_over_sample(const Morphism& m, const std::vector<Word>& samples);

/// Finite-depth L-commuting check: for each sample w, the first `depth`
/// letters of m(L(w)) must equal the corresponding prefix of L(m(w)).
SampleOutcome l_commuting_sample(const Morphism& m, const std::vector<Word>& samples,
                                 std::size_t depth);

}  // namespace lexleast
