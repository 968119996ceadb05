// Copyright 2026 The qlogic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QLOGIC_RNG_HPP
#define QLOGIC_RNG_HPP

#include <cstdint>

namespace qlogic {

/// SplitMix64 finalizer. Bijective avalanche mix on 64 bits.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic, platform-independent generator (SplitMix64 stream plus a
/// hand-rolled Box-Muller), so that seeded runs produce byte-identical output
/// everywhere. Standard-library distributions are avoided on purpose: their
/// output sequences are implementation-defined.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }

    /// Uniform in [0, 1), 53 random mantissa bits.
    double next_uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller; generates pairs and caches the second.
    double next_gaussian();

    /// Bounded draw in [0, n). Desk-scale n, modulo bias is negligible.
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

    /// Seed for an independent child stream. Trial k of a seeded computation
    /// draws from Rng(child_seed(master, k)), which makes results independent
    /// of trial execution order.
    static std::uint64_t child_seed(std::uint64_t master, std::uint64_t index) {
        return mix64(master ^ mix64(index + 0x6a09e667f3bcc909ULL));
    }

  private:
    std::uint64_t state_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace qlogic

#endif
