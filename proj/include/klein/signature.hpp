#pragma once

#include <array>
#include <cstdint>

#include "multivector.hpp"

namespace klein {

/// Diagonal metric (sigma0, sigma1, sigma2), the values e_i . e_i, each in {-1, 0, +1}.
struct Signature {
    std::array<int, 3> sigma{};

    constexpr int operator[](int i) const { return sigma[static_cast<std::size_t>(i)]; }
    constexpr bool operator==(const Signature&) const = default;
};

inline constexpr Signature sig_euclidean{{0, 1, 1}};
inline constexpr Signature sig_elliptic{{1, 1, 1}};
inline constexpr Signature sig_hyperbolic{{-1, 1, 1}};
inline constexpr Signature sig_minkowski{{0, 1, -1}};
inline constexpr Signature sig_anti_de_sitter{{-1, 1, -1}};
inline constexpr Signature sig_de_sitter{{1, 1, -1}};

inline constexpr std::array<Signature, 6> all_signatures = {
    sig_euclidean, sig_elliptic, sig_hyperbolic, sig_minkowski, sig_anti_de_sitter, sig_de_sitter};

/// Products of the 64 ordered basis-blade pairs under one signature:
/// entry (i,j) holds the target slot of e_i e_j and a factor in {-1, 0, +1}.
struct CayleyTable {
    struct Entry {
        std::uint8_t target;
        std::int8_t factor;
    };
    std::array<Entry, 64> entries{};

    constexpr const Entry& at(std::size_t i, std::size_t j) const { return entries[i * 8 + j]; }
};

namespace detail {

constexpr CayleyTable build_cayley_table(Signature sig) {
    CayleyTable t;
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            unsigned ma = slot_mask[i];
            unsigned mb = slot_mask[j];
            unsigned common = ma & mb;
            int factor = interleave_sign(ma, mb);
            for (int b = 0; b < 3; ++b)
                if (common & (1u << b)) factor *= sig[b];
            std::size_t k = mask_slot[ma ^ mb];
            factor *= slot_ascending_sign[i] * slot_ascending_sign[j] * slot_ascending_sign[k];
            t.entries[i * 8 + j] = {static_cast<std::uint8_t>(k), static_cast<std::int8_t>(factor)};
        }
    }
    return t;
}

constexpr std::size_t signature_cache_index(Signature sig) {
    return static_cast<std::size_t>((sig[0] + 1) * 9 + (sig[1] + 1) * 3 + (sig[2] + 1));
}

// All 27 diagonal signatures have their tables built at compile time and
// shared read-only; lookups never construct anything at runtime.
inline constexpr std::array<CayleyTable, 27> cayley_cache = [] {
    std::array<CayleyTable, 27> tables{};
    for (int s0 = -1; s0 <= 1; ++s0)
        for (int s1 = -1; s1 <= 1; ++s1)
            for (int s2 = -1; s2 <= 1; ++s2) {
                Signature sig{{s0, s1, s2}};
                tables[signature_cache_index(sig)] = build_cayley_table(sig);
            }
    return tables;
}();

} // namespace detail

constexpr const CayleyTable& cayley_table(Signature sig) {
    return detail::cayley_cache[detail::signature_cache_index(sig)];
}

} // namespace klein
