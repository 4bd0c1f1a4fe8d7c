#include "lexleast/lexicon.hpp"

#include "lexleast/engine.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <string>

namespace lexleast {

namespace {

constexpr std::string_view kPsi2ZeroDigits =
    "2021020102101201020120210120102013010201030102012021012010201"
    "2021013010201030102012021012010201202301020103010201202101201"
    "0201203010201030102030103020102030102010301020301030201202101"
    "2010201202101202";

constexpr std::string_view kC3Digits =
    "0102012021012010201202102010210120102012021012010201301020103"
    "0102012021012010201202101301020103010201202101201020120230102"
    "0103010201202101201020120301020103010203010302010203010201030"
    "1020301030201202101201020120210120230102010301020120210120102"
    "01202101301020103";

constexpr std::size_t kALength = 13747;

Word map_letters(Word (*image)(Letter), const Word& w) {
    Word out;
    for (Letter l : w) out.append(image(l));
    return out;
}

void check_cap(std::string_view what, Letter n, Letter cap) {
    if (n > cap)
        throw std::length_error(std::string(what) + ": index " + std::to_string(n) +
                                " exceeds cap " + std::to_string(cap));
}

std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::optional<Word> try_load_a(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::string header, body;
    if (!std::getline(in, header) || !std::getline(in, body)) return std::nullopt;
    const auto lpos = header.find("length=");
    const auto dpos = header.find("fnv1a=");
    if (header.empty() || header[0] != '#' || lpos == std::string::npos ||
        dpos == std::string::npos)
        return std::nullopt;
    std::size_t length = 0;
    std::uint64_t digest = 0;
    try {
        length = std::stoull(header.substr(lpos + 7));
        digest = std::stoull(header.substr(dpos + 6), nullptr, 16);
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (length != kALength || fnv1a(body) != digest) return std::nullopt;
    Word a;
    try {
        a = Word::parse(body);
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (a.size() != kALength || !has_prefix(a, successor(psi2_zero()))) return std::nullopt;
    return a;
}

void try_store_a(const std::filesystem::path& path, const Word& a) {
    const std::string body = to_csv(a);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(body)));
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) return;
        out << "# A length=" << a.size() << " fnv1a=" << buf << "\n" << body << "\n";
        if (!out) return;
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);  // best effort; derivation is authoritative
}

}  // namespace

Word ruler_prefix(Letter n, Letter cap) {
    check_cap("ruler_prefix", n, cap);
    std::vector<Letter> w;
    w.reserve(std::size_t{1} << n);
    w.push_back(0);
    for (Letter k = 1; k <= n; ++k) {
        const std::size_t half = w.size();
        w.resize(2 * half);
        std::copy_n(w.begin(), half, w.begin() + static_cast<std::ptrdiff_t>(half));
        ++w.back();
    }
    return Word{std::move(w)};
}

Word p_word(int level, Letter n, Letter cap) {
    switch (level) {
        case 0:
            check_cap("p_word", n, cap);
            return slice(ruler_prefix(n + 1), 0, -2);
        case 1:
            if (n < 3) throw std::domain_error("P_1(n) requires n >= 3");
            check_cap("p_word", n, cap);
            return map_letters(psi1_image, p_word(0, n - 1, cap));
        case 2:
            if (n < 3) throw std::domain_error("P_2(n) requires n >= 3");
            check_cap("p_word", n, cap);
            return map_letters(psi2_image, p_word(0, n - 2, cap));
        default:
            throw std::invalid_argument("p_word level must be 0, 1 or 2");
    }
}

Word t_word(Letter n, Letter cap) {
    if (n < 3) throw std::domain_error("T(n) requires n >= 3");
    check_cap("t_word", n, cap);
    return p_word(0, n, cap) + p_word(1, n, cap) + p_word(2, n, cap);
}

Word b_word(Letter n, Letter cap) {
    if (n < 2) throw std::domain_error("b_n requires n >= 2");
    check_cap("b_word", n, cap);
    Word b = constant(NamedConstant::B2);
    for (Letter k = 3; k <= n; ++k) b = b + successor(b) + ruler_prefix(k);
    return b;
}

Word c_word(Letter n, Letter cap) {
    if (n < 3) throw std::domain_error("c_n requires n >= 3");
    check_cap("c_word", n, cap);
    Word c = c3_base();
    Word b = b_word(3, cap);
    for (Letter k = 4; k <= n; ++k) {
        b = b + successor(b) + ruler_prefix(k);
        c = c + successor(c) + ruler_prefix(k) + b;
    }
    return c;
}

// The letter images recurse through P words one or two indexes above the
// letter itself, so they relax the cap to the ruler bound; the user-facing
// caps apply to the entry-point index.
Word psi1_image(Letter n) {
    if (n == 0) {
        static const Word zero = Word::parse("202101");
        return zero;
    }
    return Word{n + 1} + p_word(0, n + 1, kRulerCap - 1);
}

Word psi2_image(Letter n) {
    if (n == 0) return psi2_zero();
    return Word{n + 2} + p_word(0, n + 2, kRulerCap - 1) + p_word(1, n + 2, kRulerCap - 1);
}

const Word& alpha_image(Letter n, Letter cap) {
    check_cap("alpha_image", n, cap);
    static std::mutex mu;
    static std::map<Letter, Word> memo;
    std::scoped_lock lock(mu);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    for (Letter k = memo.empty() ? 0 : memo.rbegin()->first + 1; k <= n; ++k) {
        Word img;
        if (k == 0) {
            img = constant(NamedConstant::E) + constant(NamedConstant::F) +
                  constant(NamedConstant::E);
        } else if (k == 1) {
            const Word& b1 = constant(NamedConstant::B1);
            const Word r4 = ruler_prefix(4);
            img = b1 + r4 + constant(NamedConstant::C) + b1 + r4;
        } else {
            const Word half = successor(memo.at(k - 1)) + ruler_prefix(k + 3);
            img = half + constant(NamedConstant::C) + half;
        }
        memo.emplace(k, std::move(img));
    }
    return memo.at(n);
}

Word gamma_image(Letter n, Letter cap) {
    check_cap("gamma_image", n, cap);
    if (n == 0) {
        const Word& c3 = c3_base();
        return c3 + successor(c3);
    }
    Word out;
    Word b = constant(NamedConstant::B2);
    for (Letter k = 3; k <= n + 3; ++k) {
        b = b + successor(b) + ruler_prefix(k);  // now b_k
        if (k < 4) continue;
        out += ruler_prefix(k);
        if (k <= n + 2)
            out += successor(b);
        else
            out += b;
    }
    return out;
}

const Word& psi2_zero() {
    static const Word w = Word::parse(kPsi2ZeroDigits);
    return w;
}

const Word& c3_base() {
    static const Word w = Word::parse(kC3Digits);
    return w;
}

std::optional<NamedConstant> constant_by_name(std::string_view name) {
    if (name == "C") return NamedConstant::C;
    if (name == "B0") return NamedConstant::B0;
    if (name == "B1") return NamedConstant::B1;
    if (name == "E") return NamedConstant::E;
    if (name == "F") return NamedConstant::F;
    if (name == "G") return NamedConstant::G;
    if (name == "A") return NamedConstant::A;
    if (name == "psi2_zero") return NamedConstant::Psi2Zero;
    if (name == "c3") return NamedConstant::C3;
    if (name == "b2") return NamedConstant::B2;
    return std::nullopt;
}

std::string_view constant_name(NamedConstant which) {
    switch (which) {
        case NamedConstant::C: return "C";
        case NamedConstant::B0: return "B0";
        case NamedConstant::B1: return "B1";
        case NamedConstant::E: return "E";
        case NamedConstant::F: return "F";
        case NamedConstant::G: return "G";
        case NamedConstant::A: return "A";
        case NamedConstant::Psi2Zero: return "psi2_zero";
        case NamedConstant::C3: return "c3";
        case NamedConstant::B2: return "b2";
    }
    return "?";
}

const Word& constant(NamedConstant which) {
    switch (which) {
        case NamedConstant::C: {
            static const Word w = Word::parse("0102030102");
            return w;
        }
        case NamedConstant::B0: {
            static const Word w = [] {
                const Word w1010{1, 0, 1, 0};
                return Word::parse("0301") + slice(map_letters(psi1_image, w1010), 0, -3) +
                       slice(map_letters(psi2_image, w1010), 0, -6) +
                       slice(map_letters(psi2_image, Word{1, 0}), 0, -12) + Word::parse("301020");
            }();
            return w;
        }
        case NamedConstant::B1: {
            static const Word w = [] {
                const Word core = slice(constant(NamedConstant::B0), 7, -5);
                Word out;
                out.reserve(2 * core.size());
                for (Letter l : core) {
                    out.push_back(0);
                    out.push_back(l + 1);
                }
                return out;
            }();
            return w;
        }
        case NamedConstant::E: {
            static const Word w = [] {
                const Word& b0 = constant(NamedConstant::B0);
                return Word::parse("0102") + b0 + Word{1} + slice(b0, 0, -9);
            }();
            return w;
        }
        case NamedConstant::F: {
            static const Word w = [] {
                const Word& b0 = constant(NamedConstant::B0);
                const Word& c = constant(NamedConstant::C);
                return slice(b0, -9, std::nullopt) + Word::parse("3010302") + c +
                       Word::parse("0103") + successor(c) + Word::parse("02");
            }();
            return w;
        }
        case NamedConstant::G: {
            static const Word w = Word::parse("010203012");
            return w;
        }
        case NamedConstant::A: return a_word();
        case NamedConstant::Psi2Zero: return psi2_zero();
        case NamedConstant::C3: return c3_base();
        case NamedConstant::B2: {
            static const Word w = Word::parse("0102012021012");
            return w;
        }
    }
    throw std::invalid_argument("unknown constant");
}

std::filesystem::path default_a_cache_path() {
    std::error_code ec;
    auto dir = std::filesystem::temp_directory_path(ec);
    if (ec) dir = ".";
    return dir / "lexleast-A-cache.txt";
}

Word derive_a_fresh(bool cross_check) {
    const Word t3 = t_word(3);
    const auto offset3 = 1 + t3.size();
    const Word l3 = compute_L_prefix(Word{3}, offset3 + kALength);
    Word a = slice(l3, static_cast<std::int64_t>(offset3), std::nullopt);
    if (!has_prefix(a, successor(psi2_zero())))
        throw std::runtime_error("derive_a_fresh: A does not begin with psi2(0)^+");
    if (cross_check) {
        for (Letter n : {Letter{4}, Letter{5}}) {
            const auto offset = 1 + t_word(n).size();
            const Word ln = compute_L_prefix(Word{n}, offset + kALength);
            if (slice(ln, static_cast<std::int64_t>(offset), std::nullopt) != a)
                throw std::runtime_error("derive_a_fresh: window of L(" + std::to_string(n) +
                                         ") disagrees with the window of L(3)");
        }
    }
    return a;
}

const Word& a_word(std::optional<std::filesystem::path> cache) {
    static std::mutex mu;
    static std::optional<Word> memo;
    std::scoped_lock lock(mu);
    if (memo) return *memo;
    const auto path = cache.value_or(default_a_cache_path());
    if (auto loaded = try_load_a(path)) {
        memo = std::move(*loaded);
    } else {
        memo = derive_a_fresh(true);
        try_store_a(path, *memo);
    }
    return *memo;
}

Word y_word(Letter n) {
    if (n == 1) return compute_L_prefix(Word{1}, 5177);
    if (n >= 3) return Word{n} + t_word(n) + a_word();
    throw std::domain_error("y_word is defined for n = 1 and n >= 3");
}

}  // namespace lexleast
