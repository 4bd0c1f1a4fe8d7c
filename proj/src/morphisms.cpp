#include "lexleast/morphisms.hpp"

#include "lexleast/engine.hpp"
#include "lexleast/lexicon.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <stdexcept>

namespace lexleast {

Morphism::Morphism(Rule rule, std::string name) : rule_(std::move(rule)), name_(std::move(name)) {}

const Word& Morphism::image(Letter k) const {
    std::scoped_lock lock(mu_);
    auto it = memo_.find(k);
    if (it == memo_.end()) {
        Word img = rule_(k);
        if (img.empty())
            throw std::logic_error("morphism " + (name_.empty() ? "<anonymous>" : name_) +
                                   " is erasing at letter " + std::to_string(k));
        it = memo_.emplace(k, std::move(img)).first;
    }
    return it->second;
}

Word apply(const Morphism& m, const Word& w) {
    std::size_t total = 0;
    for (Letter l : w) total += m.image(l).size();
    Word out;
    out.reserve(total);
    for (Letter l : w) out.append(m.image(l));
    return out;
}

Word apply_stream(const Morphism& m, const LetterSource& source, std::size_t n) {
    Word out;
    out.reserve(n);
    while (out.size() < n) {
        auto l = source();
        if (!l)
            throw std::invalid_argument("apply_stream: source exhausted after " +
                                        std::to_string(out.size()) + " of " + std::to_string(n) +
                                        " image letters");
        out.append(m.image(*l));
    }
    if (out.size() > n) out = slice(out, 0, static_cast<std::int64_t>(n));
    return out;
}

LetterSource morphic_stream(const Morphism& m, LetterSource source) {
    struct Stream {
        const Morphism* m;
        LetterSource src;
        Word buffer;
        std::size_t pos = 0;
    };
    auto s = std::make_shared<Stream>(Stream{&m, std::move(source), Word{}, 0});
    return [s]() -> std::optional<Letter> {
        while (s->pos == s->buffer.size()) {
            auto l = s->src();
            if (!l) return std::nullopt;
            s->buffer = s->m->image(*l);
            s->pos = 0;
        }
        return s->buffer[s->pos++];
    };
}

Letter ruler_letter(std::uint64_t index) {
    return static_cast<Letter>(std::countr_zero(index + 1));
}

LetterSource ruler_stream() {
    auto i = std::make_shared<std::uint64_t>(0);
    return [i]() -> std::optional<Letter> { return ruler_letter((*i)++); };
}

Word ruler_inverse(const Word& w) {
    if (w.size() % 2 != 0)
        throw std::invalid_argument("ruler_inverse: length must be even, got " +
                                    std::to_string(w.size()));
    if (grounded_class(w) != GroundedClass::EvenGrounded)
        throw std::invalid_argument("ruler_inverse: word must be even-grounded");
    Word out;
    out.reserve(w.size() / 2);
    for (std::size_t i = 1; i < w.size(); i += 2) out.push_back(w[i] - 1);
    return out;
}

const Morphism& builtin(Builtin which) {
    static const Morphism rho([](Letter n) { return Word{0, n + 1}; }, "rho");
    static const Morphism psi1([](Letter n) { return psi1_image(n); }, "psi1");
    static const Morphism psi2([](Letter n) { return psi2_image(n); }, "psi2");
    static const Morphism alpha([](Letter n) { return alpha_image(n); }, "alpha");
    static const Morphism gamma([](Letter n) { return gamma_image(n); }, "gamma");
    switch (which) {
        case Builtin::Rho: return rho;
        case Builtin::Psi1: return psi1;
        case Builtin::Psi2: return psi2;
        case Builtin::Alpha: return alpha;
        case Builtin::Gamma: return gamma;
    }
    throw std::invalid_argument("unknown builtin morphism");
}

std::optional<Builtin> builtin_by_name(std::string_view name) {
    if (name == "rho") return Builtin::Rho;
    if (name == "psi1") return Builtin::Psi1;
    if (name == "psi2") return Builtin::Psi2;
    if (name == "alpha") return Builtin::Alpha;
    if (name == "gamma") return Builtin::Gamma;
    return std::nullopt;
}

std::string_view builtin_name(Builtin which) {
    switch (which) {
        case Builtin::Rho: return "rho";
        case Builtin::Psi1: return "psi1";
        case Builtin::Psi2: return "psi2";
        case Builtin::Alpha: return "alpha";
        case Builtin::Gamma: return "gamma";
    }
    return "?";
}

std::vector<ChunkAlignment> chunk_align(const Morphism& m, const Word& w, const Word& factor) {
    std::vector<std::size_t> starts;
    starts.reserve(w.size() + 1);
    Word image;
    for (Letter l : w) {
        starts.push_back(image.size());
        image.append(m.image(l));
    }
    starts.push_back(image.size());

    std::vector<ChunkAlignment> out;
    for (std::size_t pos : occurrences(image, factor)) {
        const auto it = std::upper_bound(starts.begin(), starts.end(), pos);
        const std::size_t chunk = static_cast<std::size_t>(it - starts.begin()) - 1;
        const std::size_t cstart = starts[chunk];
        const std::size_t cend = starts[chunk + 1];
        const std::size_t end = pos + factor.size();
        ChunkClass cls;
        if (end > cend)
            cls = ChunkClass::Straddling;
        else if (pos == cstart && end == cend)
            cls = ChunkClass::WholeChunk;
        else if (pos == cstart)
            cls = ChunkClass::ChunkPrefix;
        else if (end == cend)
            cls = ChunkClass::ChunkSuffix;
        else
            cls = ChunkClass::Interior;
        out.push_back({pos, chunk, pos - cstart, cls});
    }
    return out;
}

SampleOutcome square_free_over_sample(const Morphism& m, const std::vector<Word>& samples) {
    for (const Word& w : samples)
        if (has_square(w))
            throw std::invalid_argument("square_free_over_sample: sample contains a square");
    for (const Word& w : samples) {
        const Word image = apply(m, w);
        if (has_square(image)) {
            auto report = square_endpoints(image);
            return {false, w, report.occurrences.front()};
        }
    }
    return {};
}

SampleOutcome l_commuting_sample(const Morphism& m, const std::vector<Word>& samples,
                                 std::size_t depth) {
    for (const Word& w : samples) {
        if (w.empty())
            throw std::invalid_argument("l_commuting_sample: samples must be nonempty words");
        const Word base = apply(m, w);
        const std::size_t n = std::max(depth, base.size());
        const Word via_morphism = apply_stream(m, lex_least_stream(w), n);
        const Word via_extension = compute_L_prefix(base, n);
        if (via_morphism != via_extension) return {false, w, std::nullopt};
    }
    return {};
}

}  // namespace lexleast
