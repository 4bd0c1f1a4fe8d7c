#pragma once

#include "lexleast/engine.hpp"
#include "lexleast/word.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lexleast {

enum class CheckStatus { Pass, Fail, Skipped };
std::string_view to_string(CheckStatus s);

struct CheckResult {
    std::string id;
    CheckStatus status = CheckStatus::Fail;
    double elapsed_ms = 0.0;
    std::string claim;                   // what the check asserts
    std::optional<std::string> witness;  // present whenever status is Fail
};

struct VerifyOptions {
    std::size_t structure_depth = 20000;   // thm/* and conj/* agreement depth beyond the constant prefix
    std::size_t pair_depth = 2000;         // thm/Lnn, thm/Ln1n2
    std::size_t two_letter_depth = 10000;  // conj/Ln1, conj/Ln2 total length
    std::map<std::string, std::size_t> depth_overrides;  // per check id
    std::optional<std::filesystem::path> a_cache;
};

/// Registry of named checks, one per finite computational claim. Checks are
/// deterministic and independent; long greedy computations are shared through
/// an internal prefix cache, and the constant A is computed up front when any
/// selected check needs it.
class Harness {
public:
    explicit Harness(VerifyOptions options = {});
    ~Harness();

    std::vector<std::string> ids(std::string_view filter = "") const;
    /// Claim text for a registered id.
    std::string claim(std::string_view id) const;

    /// Runs one check. Unknown ids throw std::invalid_argument.
    CheckResult run_check(std::string_view id);
    /// Runs every check whose id starts with the filter (all when empty).
    std::vector<CheckResult> run_all(std::string_view filter = "");

    /// conj/* failures are reportable but non-blocking; everything else blocks.
    static bool blocking(std::string_view id);

    PrefixCache& cache();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace lexleast
