#include "lexleast/squares.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace lexleast {

std::vector<std::uint32_t> z_array(std::span<const Letter> w) {
    const std::size_t n = w.size();
    std::vector<std::uint32_t> z(n, 0);
    if (n == 0) return z;
    z[0] = static_cast<std::uint32_t>(n);
    std::size_t l = 0, r = 0;
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t k = 0;
        if (i < r) k = std::min<std::size_t>(r - i, z[i - l]);
        while (i + k < n && w[k] == w[i + k]) ++k;
        z[i] = static_cast<std::uint32_t>(k);
        if (i + k > r) {
            l = i;
            r = i + k;
        }
    }
    return z;
}

namespace {

// match[i] = length of the longest common prefix of `pattern` and text[i:],
// computed with the Z-array of the pattern (no sentinel letter needed).
std::vector<std::uint32_t> match_prefix(std::span<const Letter> pattern,
                                        std::span<const Letter> text,
                                        const std::vector<std::uint32_t>& zp) {
    const std::size_t n = text.size(), m = pattern.size();
    std::vector<std::uint32_t> match(n, 0);
    std::size_t l = 0, r = 0;  // [l, r): current match window of pattern over text
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t k = 0;
        if (i < r) k = std::min<std::size_t>(r - i, zp[i - l]);
        while (i + k < n && k < m && text[i + k] == pattern[k]) ++k;
        match[i] = static_cast<std::uint32_t>(k);
        if (i + k > r) {
            l = i;
            r = i + k;
        }
    }
    return match;
}

// A contiguous family of squares sharing one half-length: for every start in
// [first_start, last_start], w[start : start+2*period] is a square.
struct Family {
    std::size_t period;
    std::size_t first_start;
    std::size_t last_start;
};

// Reports through the callback every family of squares crossing the midpoint
// of w, then recurses into the halves; each square occurrence belongs to
// exactly one family. Callback returning true stops the scan early.
// Main--Lorentz style divide and conquer over longest-extension arrays.
template <typename Callback>
bool scan_families(std::span<const Letter> w, std::size_t shift, Callback&& cb) {
    const std::size_t n = w.size();
    if (n < 2) return false;
    const std::size_t nu = n / 2, nv = n - nu;
    auto u = w.subspan(0, nu);
    auto v = w.subspan(nu);

    std::vector<Letter> ru(u.rbegin(), u.rend());
    std::vector<Letter> rv(v.rbegin(), v.rend());

    const auto z_ru = z_array(ru);
    const auto z_v = z_array(v);
    const auto m_vu = match_prefix(v, u, z_v);       // lcp(v, u[i:])
    const auto m_rurv = match_prefix(ru, rv, z_ru);  // common suffix of u and v[: nv-i]

    // Left class: squares whose center start+period lies at or before nu.
    // With anchor a = nu - l, a square starts at a - t iff t letters extend
    // left of the anchor pair (t <= k1) and l - t extend right (l-t <= k2).
    for (std::size_t l = 1; l <= nu; ++l) {
        const std::size_t a = nu - l;
        const std::size_t k1 = (l < nu) ? z_ru[l] : 0;            // <= a by construction
        const std::size_t k2 = std::min<std::size_t>(m_vu[a], l);
        const std::size_t t_lo = (l > k2) ? l - k2 : 0;
        const std::size_t t_hi = std::min(k1, l - 1);
        if (t_lo > t_hi) continue;
        if (cb(Family{l, shift + a - t_hi, shift + a - t_lo})) return true;
    }
    // Right class: center at nu+1 or later; starts are nu - t with t >= 1.
    for (std::size_t l = 1; l <= nv; ++l) {
        const std::size_t k1 = m_rurv[nv - l];                    // <= min(nu, l)
        const std::size_t k2 = (l < nv) ? z_v[l] : 0;
        const std::size_t t_lo = std::max<std::size_t>(1, (l > k2) ? l - k2 : 0);
        const std::size_t t_hi = std::min(k1, l - 1);
        if (t_lo > t_hi) continue;
        if (cb(Family{l, shift + nu - t_hi, shift + nu - t_lo})) return true;
    }

    if (scan_families(u, shift, cb)) return true;
    return scan_families(v, shift + nu, cb);
}

}  // namespace

bool has_square(const Word& w) {
    return scan_families(w.span(), 0, [](const Family&) { return true; });
}

bool has_square_suffix(const Word& w) {
    const std::size_t n = w.size();
    if (n < 2) return false;
    std::vector<Letter> rev(w.letters().rbegin(), w.letters().rend());
    const auto z = z_array(rev);
    for (std::size_t l = 1; 2 * l <= n; ++l)
        if (z[l] >= l) return true;
    return false;
}

SquareReport square_endpoints(const Word& w) {
    const std::size_t n = w.size();
    std::vector<Family> families;
    scan_families(w.span(), 0, [&](const Family& f) {
        families.push_back(f);
        return false;
    });

    // Assign each endpoint its minimal period: process families by ascending
    // period, skipping already-assigned endpoints through a jump table.
    std::sort(families.begin(), families.end(),
              [](const Family& a, const Family& b) { return a.period < b.period; });
    constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> period_at(n, kUnset);
    std::vector<std::size_t> next(n + 1);
    std::iota(next.begin(), next.end(), std::size_t{0});
    auto find_free = [&](std::size_t i) {
        while (next[i] != i) {
            next[i] = next[next[i]];
            i = next[i];
        }
        return i;
    };
    for (const Family& f : families) {
        const std::size_t e_lo = f.first_start + 2 * f.period - 1;
        const std::size_t e_hi = f.last_start + 2 * f.period - 1;
        for (std::size_t e = find_free(e_lo); e <= e_hi; e = find_free(e + 1)) {
            period_at[e] = f.period;
            next[e] = e + 1;
        }
    }

    SquareReport report;
    for (std::size_t e = 0; e < n; ++e) {
        if (period_at[e] == kUnset) continue;
        report.endpoints.push_back(e);
        report.occurrences.push_back({e + 1 - 2 * period_at[e], period_at[e]});
    }
    return report;
}

SquareReport naive_square_scan(const Word& w, std::size_t cap) {
    const std::size_t n = w.size();
    if (n > cap)
        throw std::length_error("naive_square_scan: word of length " + std::to_string(n) +
                                " exceeds cap " + std::to_string(cap));
    constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> period_at(n, kUnset);
    for (std::size_t period = 1; 2 * period <= n; ++period) {
        for (std::size_t start = 0; start + 2 * period <= n; ++start) {
            bool eq = true;
            for (std::size_t i = 0; i < period; ++i) {
                if (w[start + i] != w[start + period + i]) {
                    eq = false;
                    break;
                }
            }
            if (!eq) continue;
            const std::size_t e = start + 2 * period - 1;
            if (period_at[e] == kUnset) period_at[e] = period;  // periods ascend: first is minimal
        }
    }
    SquareReport report;
    for (std::size_t e = 0; e < n; ++e) {
        if (period_at[e] == kUnset) continue;
        report.endpoints.push_back(e);
        report.occurrences.push_back({e + 1 - 2 * period_at[e], period_at[e]});
    }
    return report;
}

}  // namespace lexleast
