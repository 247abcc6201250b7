#pragma once

#include <array>
#include <cstdint>

namespace usaug {

// Philox4x32-10 counter-based generator (Salmon et al., "Parallel Random
// Numbers: As Easy as 1, 2, 3"). The key carries the master seed and the
// counter's high words carry (item, replica), so every (item, replica)
// pair owns a disjoint counter space. Draws are therefore independent of
// scheduling order and thread count. Item and replica indices must fit
// in 32 bits.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t item_index, std::uint64_t replica_index);

    std::uint32_t next_u32();
    std::uint64_t next_u64();

    // Uniform in [0, 1), 53-bit resolution.
    double next_double();

    // Uniform in [lo, hi); returns lo for a degenerate range.
    double uniform(double lo, double hi);

    bool bernoulli(double p);

    // One keyed block; exposed for known-answer tests.
    static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> counter,
                                              std::array<std::uint32_t, 2> key);

private:
    void refill();

    std::array<std::uint32_t, 2> key_;
    std::uint32_t item_word_;
    std::uint32_t replica_word_;
    std::uint64_t block_index_ = 0;
    std::array<std::uint32_t, 4> buf_{};
    int buf_pos_ = 4;
};

inline RngStream derive_stream(std::uint64_t master_seed, std::uint64_t item_index,
                               std::uint64_t replica_index) {
    return RngStream(master_seed, item_index, replica_index);
}

}  // namespace usaug
