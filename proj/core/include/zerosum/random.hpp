#pragma once

#include "zerosum/sequence.hpp"

#include <cstdint>
#include <random>

namespace zerosum {

/// Seeded RNG with an implementation-independent bounded draw, so outputs are
/// bit-reproducible for a fixed seed on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform value in [0, n) via multiply-shift rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) return 0;
        while (true) {
            std::uint64_t x = eng_();
            __uint128_t m = static_cast<__uint128_t>(x) * n;
            auto lo = static_cast<std::uint64_t>(m);
            if (lo < n) {
                std::uint64_t floor = (0 - n) % n;
                if (lo < floor) continue;
            }
            return static_cast<std::uint64_t>(m >> 64);
        }
    }

    Element element(const GroupSpec& g) {
        return g.element_at(static_cast<std::int64_t>(below(static_cast<std::uint64_t>(g.order()))));
    }

    Sequence sequence(const GroupSpec& g, int length) {
        Sequence s(g);
        for (int i = 0; i < length; ++i) s.push(element(g));
        return s;
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace zerosum
