#include "lexleast/lexleast.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

namespace {

using namespace lexleast;

std::string render(const Word& w, const std::string& format) {
    if (format == "digits") return to_digits(w);  // refuses letters > 9
    if (format == "csv") return to_csv(w);
    return display(w);  // auto
}

void print_bfile(const Word& w, std::size_t offset) {
    if (offset > w.size()) throw std::invalid_argument("bfile offset past the end of the word");
    std::string out;
    for (std::size_t i = offset; i < w.size(); ++i) {
        out += std::to_string(i);
        out += ' ';
        out += std::to_string(w[i]);
        out += '\n';
    }
    std::fputs(out.c_str(), stdout);
}

int cmd_compute(const std::string& prefix_text, std::size_t length, const std::string& format,
                std::size_t offset) {
    const Word prefix = Word::parse(prefix_text);
    if (length < prefix.size())
        throw std::invalid_argument("--length must be at least the prefix length");
    const Word w = compute_L_prefix(prefix, length);
    if (format == "bfile")
        print_bfile(w, offset);
    else
        std::cout << render(w, format) << "\n";
    return 0;
}

int cmd_morphism(const std::string& name, const std::optional<Letter>& letter,
                 const std::optional<std::string>& word_text, const std::string& format,
                 std::size_t limit) {
    const auto which = builtin_by_name(name);
    if (!which)
        throw std::invalid_argument("unknown morphism '" + name +
                                    "' (expected rho, psi1, psi2, alpha or gamma)");
    Word image;
    if (letter)
        image = builtin(*which).image(*letter);
    else if (word_text)
        image = apply(builtin(*which), Word::parse(*word_text));
    else
        throw std::invalid_argument("morphism: pass --letter or --word");
    if (limit && image.size() > limit) image = slice(image, 0, static_cast<std::int64_t>(limit));
    std::cout << render(image, format) << "\n";
    return 0;
}

int cmd_verify(const std::string& filter, const std::string& only, std::size_t depth,
               std::size_t pair_depth, std::size_t two_letter_depth, const std::string& a_cache,
               const std::string& format, bool list) {
    VerifyOptions options;
    if (depth) options.structure_depth = depth;
    if (pair_depth) options.pair_depth = pair_depth;
    if (two_letter_depth) options.two_letter_depth = two_letter_depth;
    if (!a_cache.empty()) options.a_cache = a_cache;
    Harness harness(std::move(options));

    if (list) {
        for (const auto& id : harness.ids(filter))
            std::printf("%-28s %s\n", id.c_str(), harness.claim(id).c_str());
        return 0;
    }

    std::vector<CheckResult> results;
    if (!only.empty())
        results.push_back(harness.run_check(only));
    else
        results = harness.run_all(filter);

    std::size_t passed = 0, failed = 0, skipped = 0, blocking_failures = 0;
    for (const auto& r : results) {
        if (r.status == CheckStatus::Pass) ++passed;
        if (r.status == CheckStatus::Skipped) ++skipped;
        if (r.status == CheckStatus::Fail) {
            ++failed;
            if (Harness::blocking(r.id)) ++blocking_failures;
        }
        if (format == "lines") {
            std::printf("%s\t%s\t%.1f\n", r.id.c_str(), std::string(to_string(r.status)).c_str(),
                        r.elapsed_ms);
        } else {
            std::printf("%-28s %-8s %9.1f ms  %s\n", r.id.c_str(),
                        std::string(to_string(r.status)).c_str(), r.elapsed_ms,
                        r.status == CheckStatus::Pass ? r.claim.c_str()
                                                      : r.witness.value_or("").c_str());
        }
    }
    if (format != "lines")
        std::printf("%zu checks: %zu passed, %zu failed, %zu skipped\n", results.size(), passed,
                    failed, skipped);
    return blocking_failures || skipped ? 1 : 0;
}

int cmd_induce(const std::string& word_text) {
    const Word w = Word::parse(word_text);
    const Word x = induce_prefix(w);  // throws if verification fails
    std::cout << display(x) << "\n";
    std::cout << "verified: " << display(x) << " generates " << display(x) << "·" << display(w)
              << "\n";
    return 0;
}

int cmd_decompose(const std::string& word_text) {
    const Word w = Word::parse(word_text);
    const auto report = sufficient_check(w);
    std::cout << "p = " << display(report.parts.p) << "\n"
              << "s = " << display(report.parts.s) << "\n"
              << "q = " << display(report.parts.q) << "\n"
              << "compare length 2|ps| = " << report.compare_length << "\n"
              << "L(psq)[:2|ps|]    = " << display(report.lhs) << "\n"
              << "(p L(sq))[:2|ps|] = " << display(report.rhs) << "\n"
              << (report.equal ? "equal: L(psq) = p L(sq)" : "not equal: L(psq) != p L(sq)")
              << "\n";
    return 0;
}

// Square-suffix test by direct comparison at every half-length, for the
// benchmark baseline only.
bool naive_square_suffix_with(const Word& w, Letter candidate) {
    const std::size_t n = w.size() + 1;
    auto at = [&](std::size_t i) { return i + 1 == n ? candidate : w[i]; };
    for (std::size_t l = 1; 2 * l <= n; ++l) {
        bool eq = true;
        for (std::size_t i = 0; i < l; ++i) {
            if (at(n - 2 * l + i) != at(n - l + i)) {
                eq = false;
                break;
            }
        }
        if (eq) return true;
    }
    return false;
}

Word naive_L_prefix(const Word& p, std::size_t n) {
    Word w = p;
    while (w.size() < n) {
        Letter c = 0;
        while (naive_square_suffix_with(w, c)) ++c;
        w.push_back(c);
    }
    return w;
}

int cmd_bench(std::size_t length, const std::string& strategy) {
    std::printf("%-10s %8s %12s\n", "strategy", "letters", "ms");
    if (length == 0) return 0;
    const Word one{1};
    auto time_one = [&](const char* name, auto&& fn) {
        const auto start = std::chrono::steady_clock::now();
        const Word out = fn();
        const auto stop = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(stop - start).count();
        std::printf("%-10s %8zu %12.1f\n", name, out.size(), ms);
        return out;
    };
    Word a, b;
    if (strategy == "naive" || strategy == "both")
        a = time_one("naive", [&] { return naive_L_prefix(one, length); });
    if (strategy == "optimized" || strategy == "both")
        b = time_one("optimized", [&] { return compute_L_prefix(one, length); });
    if (strategy == "both" && a != b) throw std::runtime_error("strategies disagree");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lexicographically least square-free words over the non-negative integers"};
    app.require_subcommand(1);

    std::string prefix_text, format = "auto", word_text, name;
    std::size_t length = 0, offset = 0, limit = 0;

    auto* compute = app.add_subcommand("compute", "prefix of L(p) for a given p");
    compute->add_option("--prefix", prefix_text, "base word p (digits or csv)")
        ->capture_default_str();
    compute->add_option("--length", length, "total letters to produce")->required();
    compute->add_option("--format", format, "auto|digits|csv|bfile")->capture_default_str();
    compute->add_option("--offset", offset, "first index emitted in bfile format");

    std::optional<Letter> letter;
    std::optional<std::string> morph_word;
    auto* morphism = app.add_subcommand("morphism", "image under a builtin morphism");
    morphism->add_option("name", name, "rho|psi1|psi2|alpha|gamma")->required();
    morphism->add_option("--letter", letter, "single letter input");
    morphism->add_option("--word", morph_word, "word input (digits or csv)");
    morphism->add_option("--format", format, "auto|digits|csv")->capture_default_str();
    morphism->add_option("--limit", limit, "truncate the image to this many letters");

    std::string filter, only, a_cache, vformat = "table";
    std::size_t depth = 0, pair_depth = 0, two_letter_depth = 0;
    bool list = false;
    auto* verify = app.add_subcommand("verify", "run the registered checks");
    verify->add_option("--filter", filter, "run checks whose id starts with this prefix");
    verify->add_option("--only", only, "run one check by id");
    verify->add_option("--depth", depth, "agreement depth for structure checks");
    verify->add_option("--pair-depth", pair_depth, "depth for the two-letter theorems");
    verify->add_option("--two-letter-depth", two_letter_depth, "total length for conj/Ln1, conj/Ln2");
    verify->add_option("--a-cache", a_cache, "path of the cache file for the constant A");
    verify->add_option("--format", vformat, "table|lines")->capture_default_str();
    verify->add_flag("--list", list, "list check ids instead of running");

    auto* induce = app.add_subcommand("induce", "prefix p such that p generates p·w");
    induce->add_option("--word", word_text, "square-free target word")->required();

    auto* decompose = app.add_subcommand("decompose", "p·s·q split and the 2|ps| extension test");
    decompose->add_option("--word", word_text, "word containing a square")->required();

    std::string strategy = "both";
    auto* bench = app.add_subcommand("bench", "time the square-suffix strategies on L(1)");
    bench->add_option("--length", length, "letters of L(1) to produce")->required();
    bench->add_option("--strategy", strategy, "naive|optimized|both")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) return cmd_compute(prefix_text, length, format, offset);
        if (morphism->parsed()) return cmd_morphism(name, letter, morph_word, format, limit);
        if (verify->parsed())
            return cmd_verify(filter, only, depth, pair_depth, two_letter_depth, a_cache, vformat,
                              list);
        if (induce->parsed()) return cmd_induce(word_text);
        if (decompose->parsed()) return cmd_decompose(word_text);
        if (bench->parsed()) return cmd_bench(length, strategy);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
