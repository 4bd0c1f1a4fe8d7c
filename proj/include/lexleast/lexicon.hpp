#pragma once

#include "lexleast/word.hpp"

#include <filesystem>
#include <optional>
#include <string_view>

namespace lexleast {

// Default depth caps. Words in this family double per index, so the caps
// guard against accidental exponential blowups; every entry point takes the
// cap as a parameter.
inline constexpr Letter kRulerCap = 24;
inline constexpr Letter kMorphicCap = 16;

/// R_n: the ruler-sequence prefix of length 2^n (ends with the first n).
Word ruler_prefix(Letter n, Letter cap = kRulerCap);

/// P_0(n) = R_{n+1}[:-2]; P_1(n) = psi1(P_0(n-1)); P_2(n) = psi2(P_0(n-2)).
/// Levels 1 and 2 require n >= 3 (std::domain_error below that).
Word p_word(int level, Letter n, Letter cap = kMorphicCap);

/// T(n) = P_0(n) P_1(n) P_2(n), n >= 3.
Word t_word(Letter n, Letter cap = kMorphicCap);

/// b_2 = 0102012021012, b_n = b_{n-1} b_{n-1}^+ R_n  (n >= 2).
Word b_word(Letter n, Letter cap = kMorphicCap);
/// c_3 = the 261-letter base word, c_n = c_{n-1} c_{n-1}^+ R_n b_n  (n >= 3).
Word c_word(Letter n, Letter cap = kMorphicCap);

// Letter images of the named morphisms.
Word psi1_image(Letter n);                                  // 202101 / (n+1)P_0(n+1)
Word psi2_image(Letter n);                                  // psi2_zero / (n+2)P_0(n+2)P_1(n+2)
const Word& alpha_image(Letter n, Letter cap = kMorphicCap);  // EFE / B1 R4 C B1 R4 / doubling
Word gamma_image(Letter n, Letter cap = kMorphicCap);       // c3 c3^+ / R_4 b_4^+ ... R_{n+3} b_{n+3}

const Word& psi2_zero();  // the fixed 199-letter image of 0 under psi2
const Word& c3_base();    // the fixed 261-letter base of the c_n recursion

enum class NamedConstant { C, B0, B1, E, F, G, A, Psi2Zero, C3, B2 };
std::optional<NamedConstant> constant_by_name(std::string_view name);
std::string_view constant_name(NamedConstant which);

/// The named word. A is derived on first use (see a_word).
const Word& constant(NamedConstant which);

/// The 13747-letter word A with L(n) = n T(n) A ... for n >= 3. Derived once
/// from L(3) as the window after 3 T(3), checked to begin with psi2(0)^+ and
/// to equal the matching windows of L(4) and L(5), then memoized for the
/// process and cached to a text file (header line with length and digest,
/// then the letters in csv form). A stale or missing cache is regenerated.
const Word& a_word(std::optional<std::filesystem::path> cache = std::nullopt);

/// Derivation without the file cache. cross_check runs the L(4)/L(5) window
/// comparison; a mismatch throws std::runtime_error.
Word derive_a_fresh(bool cross_check = true);

std::filesystem::path default_a_cache_path();

/// Y_1 = L(1)[:5177]; Y_n = n T(n) A for n >= 3. n in {0, 2} is a domain
/// error (those prefixes have different structure).
Word y_word(Letter n);

}  // namespace lexleast
