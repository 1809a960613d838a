#pragma once

#include <cstdint>
#include <random>

namespace rasp {

// Seeded RNG with hand-rolled draws so results are stable across standard
// library implementations.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    // Uniform integer in [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        const uint64_t span = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo) + 1;
        return lo + static_cast<int>(next() % span);
    }

    // Uniform real in [lo, hi).
    double uniform_real(double lo, double hi) {
        const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace rasp
