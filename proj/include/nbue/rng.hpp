#pragma once

#include <array>
#include <cstdint>

namespace nbue {

// Philox4x64-10 counter-based generator (Salmon et al., Random123).
// Each (key, counter) pair maps to four independent 64-bit words.
namespace philox {

using Counter = std::array<std::uint64_t, 4>;
using Key = std::array<std::uint64_t, 2>;

inline constexpr std::uint64_t mul0 = 0xD2E7470EE14C6C93ULL;
inline constexpr std::uint64_t mul1 = 0xCA5A826395121157ULL;
inline constexpr std::uint64_t weyl0 = 0x9E3779B97F4A7C15ULL;
inline constexpr std::uint64_t weyl1 = 0xBB67AE8584CAA73BULL;

inline void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi, std::uint64_t& lo) {
    const unsigned __int128 product = static_cast<unsigned __int128>(a) * b;
    hi = static_cast<std::uint64_t>(product >> 64);
    lo = static_cast<std::uint64_t>(product);
}

inline Counter block(Counter ctr, Key key) {
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            key[0] += weyl0;
            key[1] += weyl1;
        }
        std::uint64_t hi0, lo0, hi1, lo1;
        mulhilo(mul0, ctr[0], hi0, lo0);
        mulhilo(mul1, ctr[2], hi1, lo1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
}

} // namespace philox

// SplitMix64 finalizer, used to fold structured identifiers into keys.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t combine_seed(std::uint64_t seed, std::uint64_t value) {
    return mix64(seed ^ mix64(value + 0x632BE59BD9B4E019ULL));
}

template <typename... Rest>
std::uint64_t combine_seed(std::uint64_t seed, std::uint64_t value, Rest... rest) {
    return combine_seed(combine_seed(seed, value), static_cast<std::uint64_t>(rest)...);
}

// A single-owner random stream. The key is (master_seed, stream_id); the
// counter walks through consecutive blocks, so a stream is reproducible
// from its two identifiers alone and distinct streams never share blocks.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_id) : key_{master_seed, stream_id} {}

    std::uint64_t master_seed() const noexcept { return key_[0]; }
    std::uint64_t stream_id() const noexcept { return key_[1]; }

    std::uint64_t next_u64() {
        if (pos_ == 4) {
            buffer_ = philox::block({block_index_, 0, 0, 0}, key_);
            ++block_index_;
            pos_ = 0;
        }
        return buffer_[pos_++];
    }

    // Uniform on the open interval (0,1): 52-bit grid shifted by half a step.
    // (A 53-bit grid would round its top point up to exactly 1.)
    double uniform() { return (static_cast<double>(next_u64() >> 12) + 0.5) * 0x1.0p-52; }

private:
    philox::Key key_;
    std::uint64_t block_index_ = 0;
    philox::Counter buffer_{};
    int pos_ = 4;
};

} // namespace nbue
