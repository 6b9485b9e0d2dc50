#pragma once

#include <cstdint>
#include <string>

namespace cubepack::reference {

inline std::string with_commas(std::uint64_t v) {
    std::string digits = std::to_string(v);
    std::string out;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i > 0 && (digits.size() - i) % 3 == 0) out.push_back(',');
        out.push_back(digits[i]);
    }
    return out;
}

// Published desk-scale anchors reproduced by this library.
inline constexpr std::uint64_t kTilingTypes[] = {0, 1, 2, 9, 744};  // index = dimension

// Beyond desk scale; cited for capacity messages and gated checks only.
inline constexpr std::uint64_t kTilingTypesDim5 = 899'710'227ull;

// Minimum non-extensible packing sizes f(n) and blocking-set sizes h(n).
inline constexpr std::uint64_t kMinNonextensible[] = {0, 2, 4, 4, 8};   // n <= 4, reproduced
inline constexpr std::uint64_t kMinBlocking[] = {0, 2, 3, 4, 7};        // n <= 4, reproduced
inline constexpr std::uint64_t kMinNonextensibleDim5 = 12;  // gated long-running check
inline constexpr std::uint64_t kMinBlockingDim5 = 10;       // gated long-running check
inline constexpr std::uint64_t kMinNonextensibleDim6 = 16;  // gated long-running check
inline constexpr std::uint64_t kMinBlockingDim6 = 15;       // gated long-running check

// Clique number of the dimension-7 Keller graph; an external result, far
// beyond desk scale, never computed here.
inline constexpr std::uint64_t kKellerCliqueNumberDim7 = 124;

// Continuous (N -> infinity) tiling types in dimension 4.
inline constexpr std::uint64_t kContinuousTilingTypesDim4 = 32;

}  // namespace cubepack::reference
