#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace abelian {

/// 64-bit linear congruential generator with Knuth's MMIX constants. The seed
/// is the initial state; output is identical on every platform.
class Lcg64 {
public:
    explicit Lcg64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_;
    }
    std::uint64_t state() const { return state_; }

private:
    std::uint64_t state_;
};

/// Word over 'a', 'b', ... of `sigma` letters; each symbol is (state >> 33) mod sigma
/// taken after advancing the generator.
inline std::string generate_word(unsigned sigma, std::size_t length, std::uint64_t seed) {
    if (sigma < 1 || sigma > 26) throw std::invalid_argument("sigma must be in [1, 26]");
    Lcg64 rng(seed);
    std::string out;
    out.reserve(length);
    for (std::size_t k = 0; k < length; ++k) out.push_back(static_cast<char>('a' + (rng.next() >> 33) % sigma));
    return out;
}

}  // namespace abelian
