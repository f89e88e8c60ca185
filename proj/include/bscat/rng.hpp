// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bscat authors
//
// Deterministic counter-based random number generation.
//
// Simulation results must be bit-identical across runs and independent of
// evaluation order, so every random quantity is drawn from a stateless
// counter generator: value = mix(key, counter). Keys are derived by hashing
// a user seed together with a stream tag (placement, per-sub-region node
// synthesis, shadowing, ...), which gives independent reproducible streams,
// e.g. one shadowing stream per node indexed by trial number. std::
// distributions are avoided on purpose: their output is not portable across
// standard library implementations.

#pragma once

#include <cmath>
#include <cstdint>

#include "bscat/common.hpp"

namespace bscat {

/// SplitMix64 finalizer; a well-tested 64-bit mixing function.
inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Stream tags used to derive independent generator keys from one seed.
namespace stream {
inline constexpr std::uint64_t kPlacement = 0x706c6163656d656eULL;  // node drop over the target area
inline constexpr std::uint64_t kSynthesis = 0x73796e7468657369ULL;  // per-sub-region node synthesis
inline constexpr std::uint64_t kShadowing = 0x736861646f77696eULL;  // per-(node, trial) shadowing draws
inline constexpr std::uint64_t kScratch   = 0x7363726174636800ULL;  // tests and ad-hoc draws
} // namespace stream

/// Stateless generator: the n-th output is a pure function of (key, n).
class CounterRng {
  public:
    /// Derive a key by chain-hashing the seed with up to three stream parts.
    explicit constexpr CounterRng(std::uint64_t seed, std::uint64_t s0 = 0, std::uint64_t s1 = 0,
                                  std::uint64_t s2 = 0)
        : key_(splitmix64(splitmix64(splitmix64(splitmix64(seed) ^ s0) ^ s1) ^ s2)) {}

    constexpr std::uint64_t bits(std::uint64_t counter) const {
        return splitmix64(key_ ^ splitmix64(counter));
    }

    /// Uniform double in (0, 1]; never returns 0 so log() is always finite.
    double uniform01(std::uint64_t counter) const {
        return (static_cast<double>(bits(counter) >> 11) + 1.0) * 0x1.0p-53;
    }

    /// Standard normal draw (Box-Muller); consumes counters 2n and 2n+1.
    double normal(std::uint64_t counter) const {
        const double u1 = uniform01(2 * counter);
        const double u2 = uniform01(2 * counter + 1);
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    }

  private:
    std::uint64_t key_;
};

/// Sequential adapter over CounterRng for rejection-sampling loops.
class RngStream {
  public:
    explicit RngStream(const CounterRng& rng) : rng_(rng) {}

    std::uint64_t next_bits() { return rng_.bits(n_++); }
    double next_uniform01() { return rng_.uniform01(n_++); }
    double next_normal() {
        const double u1 = rng_.uniform01(n_++);
        const double u2 = rng_.uniform01(n_++);
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    }

  private:
    CounterRng rng_;
    std::uint64_t n_ = 0;
};

} // namespace bscat
