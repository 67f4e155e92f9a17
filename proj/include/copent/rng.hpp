#pragma once

#include <cstdint>

namespace copent {

/// Splittable counter-based generator.
///
/// The stream is fully described by a 64-bit key and a 64-bit counter:
///
///     draw(c) = mix64(key + c · 0x9E3779B97F4A7C15),  c = 1, 2, 3, ...
///
/// where mix64 is the SplitMix64 finaliser
///
///     z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9;
///     z ^= z >> 27;  z *= 0x94D049BB133111EB;
///     z ^= z >> 31.
///
/// A root stream has key = mix64(seed), and split(i) derives the child key
/// mix64(key ^ mix64(i + 0xD1B54A32D192ED03)). Streams are therefore
/// identical on every platform and child streams can be created in any order
/// (e.g. one per bootstrap replicate or per simulation run) without
/// coordination.
class Rng {
public:
    explicit Rng(std::uint64_t seed) noexcept;

    /// Independent child stream number `index`. Does not advance this stream.
    Rng split(std::uint64_t index) const noexcept;

    std::uint64_t next_u64() noexcept;

    /// Uniform on the open interval (0, 1) with 53-bit resolution; zero is
    /// rejected and redrawn.
    double uniform() noexcept;

    /// Standard normal by inversion of the standard normal CDF.
    double normal() noexcept;

    /// Exp(1) variate, -log(U).
    double exponential() noexcept;

    std::uint64_t key() const noexcept { return key_; }
    std::uint64_t counter() const noexcept { return counter_; }

private:
    Rng(std::uint64_t key, std::uint64_t counter, int /*tag*/) noexcept : key_(key), counter_(counter) {}

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

std::uint64_t mix64(std::uint64_t z) noexcept;

}  // namespace copent
