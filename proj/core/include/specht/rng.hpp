#ifndef SPECHT_RNG_HPP
#define SPECHT_RNG_HPP

#include <cstdint>
#include <limits>

namespace specht {

/// Counter-based random stream. Trial t under master seed s runs SplitMix64 from the
/// state mix(mix(s) ^ t), where mix is the SplitMix64 finalizer, so the draws of a trial
/// depend only on (s, t) and never on which worker executes it.
class TrialStream {
public:
    using result_type = std::uint64_t;
    static constexpr const char* id = "splitmix64-ctr-v1";

    TrialStream(std::uint64_t seed, std::uint64_t trial) : state_(mix(mix(seed) ^ trial)) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()()
    {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    /// Uniform integer in [0, bound), bound > 0 (Lemire's method with rejection).
    std::uint64_t below(std::uint64_t bound)
    {
        unsigned __int128 m = static_cast<unsigned __int128>((*this)()) * bound;
        auto low = static_cast<std::uint64_t>(m);
        if (low < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                m = static_cast<unsigned __int128>((*this)()) * bound;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    static constexpr std::uint64_t mix(std::uint64_t z)
    {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

} // namespace specht

#endif // SPECHT_RNG_HPP
