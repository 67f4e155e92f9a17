#include "copent/rng.hpp"

#include <cmath>

#include "copent/special.hpp"

namespace copent {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kSplitSalt = 0xD1B54A32D192ED03ULL;
}  // namespace

std::uint64_t mix64(std::uint64_t z) noexcept
{
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

Rng::Rng(std::uint64_t seed) noexcept : key_(mix64(seed)) {}

Rng Rng::split(std::uint64_t index) const noexcept
{
    return Rng(mix64(key_ ^ mix64(index + kSplitSalt)), 0, 0);
}

std::uint64_t Rng::next_u64() noexcept
{
    ++counter_;
    return mix64(key_ + counter_ * kGolden);
}

double Rng::uniform() noexcept
{
    for (;;) {
        const std::uint64_t bits = next_u64() >> 11;
        if (bits != 0) {
            return static_cast<double>(bits) * 0x1.0p-53;
        }
    }
}

double Rng::normal() noexcept
{
    return normal_quantile(uniform());
}

double Rng::exponential() noexcept
{
    return -std::log(uniform());
}

}  // namespace copent
