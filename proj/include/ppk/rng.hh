#ifndef PPK_RNG_HH
#define PPK_RNG_HH 1

#include <cstdint>
#include <optional>
#include <random>
#include <string>

namespace ppk
{
    /**
     * Seeded 64-bit Mersenne Twister (std::mt19937_64, whose output sequence
     * is fixed by the C++ standard). The conversions to doubles and bounded
     * integers are done here rather than by the standard distributions, whose
     * algorithms are implementation-defined, so every stream is bit-exact
     * across platforms.
     */
    class Rng
    {
        private:
            std::mt19937_64 _engine;

        public:
            explicit Rng(std::uint64_t seed) : _engine(seed) { }

            auto next_u64() -> std::uint64_t { return _engine(); }

            /// Uniform in [0, 1), 53 bits.
            auto uniform01() -> double
            {
                return double(next_u64() >> 11) * 0x1.0p-53;
            }

            auto bernoulli(double p) -> bool
            {
                if (p <= 0.0)
                    return false;
                if (p >= 1.0)
                    return true;
                return uniform01() < p;
            }

            /// Uniform in [0, n), n > 0, by rejection.
            auto below(std::uint64_t n) -> std::uint64_t
            {
                std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
                while (true) {
                    auto x = next_u64();
                    if (x < limit)
                        return x % n;
                }
            }
    };

    inline constexpr std::uint64_t default_seed = 1;

    /// The value of PPK_SEED if set and numeric.
    auto seed_from_environment() -> std::optional<std::uint64_t>;

    auto parse_seed(const std::string & text) -> std::uint64_t;
}

#endif
