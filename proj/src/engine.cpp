#include "lexleast/engine.hpp"

#include "lexleast/squares.hpp"

#include <algorithm>
#include <stdexcept>

namespace lexleast {

namespace {

Letter max_of(const Word& w) {
    Letter m = 0;
    for (Letter l : w) m = std::max(m, l);
    return m;
}

}  // namespace

ExtensionState::ExtensionState(Word base)
    : word_(std::move(base)), boundary_(word_.size()), max_seen_(max_of(word_)) {}

ExtensionState::ExtensionState(Word base, const Word& extension) : ExtensionState(std::move(base)) {
    ExtensionState replay(word_);
    replay.extend_to(word_.size() + extension.size());
    Word expected = word_ + extension;
    if (replay.word() != expected)
        throw std::invalid_argument(
            "extension is not the greedy continuation of the base (square confinement or "
            "minimality violated)");
    word_ = std::move(expected);
    max_seen_ = std::max(max_seen_, max_of(extension));
}

Word ExtensionState::base() const {
    return slice(word_, 0, static_cast<std::int64_t>(boundary_));
}

Word ExtensionState::extension() const {
    return slice(word_, static_cast<std::int64_t>(boundary_), std::nullopt);
}

Letter ExtensionState::peek_next() {
    const auto& w = word_.letters();
    const std::size_t n = w.size();
    if (n == 0) return 0;

    // One Z-array of the reversed word answers every candidate at once:
    // w·c has a square suffix of half-length l iff c == rev[l-1] and the
    // l-1 letters before c repeat, i.e. z(rev)[l] >= l-1.
    rev_.assign(w.rbegin(), w.rend());
    z_ = z_array(rev_);
    forbidden_.assign(static_cast<std::size_t>(max_seen_) + 2, 0);
    forbidden_[rev_[0]] = 1;
    const std::size_t half = (n + 1) / 2;
    for (std::size_t l = 2; l <= half; ++l)
        if (z_[l] + 1 >= l) forbidden_[rev_[l - 1]] = 1;

    Letter c = 0;
    while (forbidden_[c]) ++c;
    return c;
}

void ExtensionState::step() {
    const Letter c = peek_next();
    word_.push_back(c);
    max_seen_ = std::max(max_seen_, c);
}

void ExtensionState::extend_to(std::size_t length) {
    while (word_.size() < length) step();
}

Letter next_letter(ExtensionState& state) { return state.peek_next(); }

Word compute_L_prefix(const Word& p, std::size_t n) {
    if (n < p.size())
        throw std::invalid_argument("compute_L_prefix: requested length " + std::to_string(n) +
                                    " is shorter than the prefix (" + std::to_string(p.size()) +
                                    ")");
    ExtensionState state(p);
    state.extend_to(n);
    return state.word();
}

bool generates(const Word& p, const Word& s) {
    return compute_L_prefix(p, p.size() + s.size()) == p + s;
}

bool is_irreducible(const Word& w, const Word& u) {
    if (u.empty()) throw std::invalid_argument("is_irreducible: u must be nonempty");
    Word cur = w;
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (Letter alt = 0; alt < u[i]; ++alt) {
            cur.push_back(alt);
            const bool introduces = has_square_suffix(cur);
            cur.pop_back();
            if (!introduces) return false;
        }
        cur.push_back(u[i]);
        // Once u[:i+1] itself introduced a square ending past |w|, every
        // deeper branch contains that square too.
        if (has_square_suffix(cur)) return true;
    }
    return true;
}

LetterSource lex_least_stream(Word base) {
    struct Stream {
        ExtensionState state;
        std::size_t pos = 0;
    };
    auto s = std::make_shared<Stream>(Stream{ExtensionState(std::move(base)), 0});
    return [s]() -> std::optional<Letter> {
        if (s->pos == s->state.word().size()) s->state.step();
        return s->state.word()[s->pos++];
    };
}

Word PrefixCache::prefix(const Word& base, std::size_t n) {
    std::scoped_lock lock(mu_);
    auto it = states_.find(base);
    if (it == states_.end())
        it = states_.emplace(base, std::make_shared<ExtensionState>(base)).first;
    auto& state = *it->second;
    if (n < base.size())
        throw std::invalid_argument("PrefixCache::prefix: length shorter than the base");
    state.extend_to(n);
    return slice(state.word(), 0, static_cast<std::int64_t>(n));
}

}  // namespace lexleast
