#include "lexleast/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <memory>
#include <stdexcept>

namespace lexleast {

Word Word::parse(std::string_view text) {
    std::vector<Letter> out;
    if (text.empty()) return Word{};
    if (text.find(',') == std::string_view::npos) {
        out.reserve(text.size());
        for (char c : text) {
            if (c < '0' || c > '9')
                throw std::invalid_argument("word digit-string contains non-digit: '" +
                                            std::string(1, c) + "'");
            out.push_back(static_cast<Letter>(c - '0'));
        }
        return Word{std::move(out)};
    }
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok =
            text.substr(pos, comma == std::string_view::npos ? text.size() - pos : comma - pos);
        std::size_t b = 0, e = tok.size();
        while (b < e && std::isspace(static_cast<unsigned char>(tok[b]))) ++b;
        while (e > b && std::isspace(static_cast<unsigned char>(tok[e - 1]))) --e;
        tok = tok.substr(b, e - b);
        if (tok.empty()) {
            // a trailing comma is allowed (useful for one-letter words like "33,")
            if (comma == std::string_view::npos && !out.empty()) break;
            if (comma == std::string_view::npos) break;
            throw std::invalid_argument("empty letter in csv word");
        }
        Letter value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw std::invalid_argument("bad letter in csv word: '" + std::string(tok) + "'");
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
        if (pos == text.size()) break;  // trailing comma
    }
    return Word{std::move(out)};
}

Word slice(const Word& w, std::optional<std::int64_t> i, std::optional<std::int64_t> j) {
    const auto n = static_cast<std::int64_t>(w.size());
    std::int64_t lo = i.value_or(0);
    std::int64_t hi = j.value_or(n);
    if (lo < 0) lo += n;
    if (hi < 0) hi += n;
    if (lo < 0 || hi < lo || hi > n)
        throw std::out_of_range("slice [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                ") out of range for word of length " + std::to_string(n));
    std::vector<Letter> out(w.letters().begin() + lo, w.letters().begin() + hi);
    return Word{std::move(out)};
}

Word successor(const Word& w) {
    if (w.empty()) throw std::invalid_argument("successor of the empty word is undefined");
    Word out = w;
    out.pop_back();
    out.push_back(w.back() + 1);
    return out;
}

GroundedClass grounded_class(const Word& w) {
    bool even_ok = true, odd_ok = true;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const bool zero = w[i] == 0;
        if ((i % 2 == 0) != zero) even_ok = false;
        if ((i % 2 == 1) != zero) odd_ok = false;
        if (!even_ok && !odd_ok) return GroundedClass::NotGrounded;
    }
    if (even_ok) return GroundedClass::EvenGrounded;  // includes the empty word
    return GroundedClass::OddGrounded;
}

LexOrdering lex_compare(const Word& u, const Word& v) {
    const std::size_t n = std::min(u.size(), v.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i] < v[i]) return LexOrdering::Less;
        if (u[i] > v[i]) return LexOrdering::Greater;
    }
    if (u.size() == v.size()) return LexOrdering::Equal;
    return u.size() < v.size() ? LexOrdering::LeftIsPrefix : LexOrdering::RightIsPrefix;
}

std::optional<Letter> max_letter(const Word& w) {
    if (w.empty()) return std::nullopt;
    return *std::max_element(w.begin(), w.end());
}

std::string to_csv(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(w[i]);
    }
    return out;
}

std::string to_digits(const Word& w) {
    std::string out;
    out.reserve(w.size());
    for (Letter l : w) {
        if (l > 9)
            throw std::invalid_argument("digit form refused: letter " + std::to_string(l) +
                                        " > 9");
        out += static_cast<char>('0' + l);
    }
    return out;
}

std::string display(const Word& w) {
    auto m = max_letter(w);
    return (!m || *m <= 9) ? to_digits(w) : to_csv(w);
}

bool has_prefix(const Word& w, const Word& p) {
    return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

bool has_suffix(const Word& w, const Word& s) {
    return s.size() <= w.size() && std::equal(s.begin(), s.end(), w.end() - s.size());
}

std::vector<std::size_t> occurrences(const Word& hay, const Word& needle) {
    std::vector<std::size_t> out;
    if (needle.empty() || needle.size() > hay.size()) return out;
    auto it = hay.begin();
    while (true) {
        it = std::search(it, hay.end(), needle.begin(), needle.end());
        if (it == hay.end()) break;
        out.push_back(static_cast<std::size_t>(it - hay.begin()));
        ++it;
    }
    return out;
}

LetterSource word_source(Word w) {
    auto state = std::make_shared<std::pair<Word, std::size_t>>(std::move(w), 0);
    return [state]() -> std::optional<Letter> {
        if (state->second >= state->first.size()) return std::nullopt;
        return state->first[state->second++];
    };
}

}  // namespace lexleast
