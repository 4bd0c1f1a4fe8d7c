#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lexleast {

/// A letter is a non-negative integer.
using Letter = std::uint32_t;

/// Finite word over the non-negative integers. Plain value type; all
/// higher-level operations treat words as immutable and return new values.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}

    /// Parses either the comma-separated form ("2,0,2,1") or, when the text
    /// contains no comma, the compact digit-string form ("2021", one letter
    /// per character). The empty string is the empty word.
    static Word parse(std::string_view text);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    Letter back() const { return letters_.back(); }
    const std::vector<Letter>& letters() const { return letters_; }
    std::span<const Letter> span() const { return letters_; }

    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    void reserve(std::size_t n) { letters_.reserve(n); }
    void push_back(Letter l) { letters_.push_back(l); }
    void pop_back() { letters_.pop_back(); }
    void append(const Word& w) { letters_.insert(letters_.end(), w.begin(), w.end()); }

    Word& operator+=(const Word& w) {
        append(w);
        return *this;
    }
    friend Word operator+(Word a, const Word& b) {
        a += b;
        return a;
    }

    friend bool operator==(const Word&, const Word&) = default;
    /// Container ordering (suitable for map keys). Not the domain order;
    /// see lex_compare for the ordering where prefixes are incomparable.
    friend bool operator<(const Word& a, const Word& b) { return a.letters_ < b.letters_; }

private:
    std::vector<Letter> letters_;
};

enum class GroundedClass { EvenGrounded, OddGrounded, NotGrounded };

enum class LexOrdering { Less, Greater, Equal, LeftIsPrefix, RightIsPrefix };

/// Python-style slice w[i:j] with optional signed indices. Negative indices
/// count from the end; omitted indices default to 0 and |w|. Resolved indices
/// must satisfy 0 <= i' <= j' <= |w|; anything else throws std::out_of_range
/// rather than clamping.
Word slice(const Word& w, std::optional<std::int64_t> i, std::optional<std::int64_t> j);
inline Word slice(const Word& w, std::int64_t i) { return slice(w, i, std::nullopt); }

/// w with its last letter increased by one. Throws std::invalid_argument on
/// the empty word.
Word successor(const Word& w);

/// EvenGrounded: zeros exactly at even positions. OddGrounded: zeros exactly
/// at odd positions. The empty word is reported EvenGrounded.
GroundedClass grounded_class(const Word& w);
inline bool is_grounded(const Word& w) { return grounded_class(w) != GroundedClass::NotGrounded; }

LexOrdering lex_compare(const Word& u, const Word& v);

std::optional<Letter> max_letter(const Word& w);

std::string to_csv(const Word& w);
/// Digit-string rendering; throws std::invalid_argument if any letter > 9.
std::string to_digits(const Word& w);
/// Digit string when all letters are <= 9, csv otherwise.
std::string display(const Word& w);

bool has_prefix(const Word& w, const Word& p);
bool has_suffix(const Word& w, const Word& s);
/// Start indexes of every occurrence of needle in hay. The empty needle has
/// no occurrences.
std::vector<std::size_t> occurrences(const Word& hay, const Word& needle);

/// Pull-based stream of letters; nullopt signals exhaustion.
using LetterSource = std::function<std::optional<Letter>()>;
LetterSource word_source(Word w);

}  // namespace lexleast
