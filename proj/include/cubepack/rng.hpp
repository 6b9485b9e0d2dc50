#pragma once

#include <cstdint>
#include <random>

namespace cubepack {

// Stream derivation: splitmix64 over state seed + index * golden gamma.
// Every trial owns its own stream, so results do not depend on how trials
// are distributed over workers.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(splitmix64(seed + stream * 0x9e3779b97f4a7c15ull));
}

// mt19937_64 with a portable bounded draw. The raw engine output sequence is
// fixed by the standard; std::uniform_int_distribution is not portable across
// standard libraries, so bounded draws use plain modulo rejection.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t zone = bound * (UINT64_MAX / bound);
        std::uint64_t r;
        do {
            r = eng_();
        } while (r >= zone);
        return r % bound;
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace cubepack
