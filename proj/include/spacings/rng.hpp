#pragma once

#include <array>
#include <cstdint>

namespace spacings {

// Philox4x32-10 (Salmon et al., SC 2011): a counter-based generator. Each
// (seed, stream) pair is an independent stream indexed by a 64-bit block
// counter, so any block can be produced without sequencing. Identical
// (seed, stream) always reproduces the identical sequence, which is what the
// deterministic-parallelism contract of the simulator rests on.
struct Philox4x32 {
    static constexpr std::uint32_t kMulA = 0xD2511F53u;
    static constexpr std::uint32_t kMulB = 0xCD9E8D57u;
    static constexpr std::uint32_t kWeylA = 0x9E3779B9u;
    static constexpr std::uint32_t kWeylB = 0xBB67AE85u;

    static std::array<std::uint32_t, 4> block(const std::array<std::uint32_t, 4>& counter,
                                              const std::array<std::uint32_t, 2>& key) {
        std::array<std::uint32_t, 4> c = counter;
        std::uint32_t k0 = key[0], k1 = key[1];
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = static_cast<std::uint64_t>(kMulA) * c[0];
            const std::uint64_t p1 = static_cast<std::uint64_t>(kMulB) * c[2];
            const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
            const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
            const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
            const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
            c = {hi1 ^ c[1] ^ k0, lo1, hi0 ^ c[3] ^ k1, lo0};
            k0 += kWeylA;
            k1 += kWeylB;
        }
        return c;
    }
};

// One reproducible random stream: (seed, stream_id) fixes the key and the
// upper counter words; the block counter advances through the lower words.
class RngStream {
  public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          stream_hi_{static_cast<std::uint32_t>(stream_id),
                     static_cast<std::uint32_t>(stream_id >> 32)} {}

    std::uint32_t next_u32() {
        if (pos_ == 4) refill();
        return buf_[pos_++];
    }

    std::uint64_t next_u64() {
        const std::uint64_t hi = next_u32();
        const std::uint64_t lo = next_u32();
        return (hi << 32) | lo;
    }

    // 53-bit uniform in [0, 1)
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // unit exponential via inversion: -log(1 - u) with u in [0, 1)
    double next_exponential();

  private:
    void refill() {
        buf_ = Philox4x32::block(
            {static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
             stream_hi_[0], stream_hi_[1]},
            key_);
        ++block_;
        pos_ = 0;
    }

    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 2> stream_hi_;
    std::uint64_t block_ = 0;
    std::array<std::uint32_t, 4> buf_{};
    int pos_ = 4;
};

}  // namespace spacings
