#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cubepack {

inline std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t h = 0xcbf29ce484222325ull) {
    auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::string to_hex(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, v >>= 4) s[static_cast<std::size_t>(i)] = digits[v & 15];
    return s;
}

template <typename T>
struct VecHash {
    std::size_t operator()(const std::vector<T>& v) const {
        return static_cast<std::size_t>(fnv1a64(v.data(), v.size() * sizeof(T)));
    }
};

}  // namespace cubepack
