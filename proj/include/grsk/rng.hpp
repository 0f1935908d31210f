/*
   Copyright 2026 The grsk Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <array>
#include <cstdint>

namespace grsk {

/// Philox4x32-10 block function (Salmon et al.). Pure: same (counter, key)
/// always gives the same 128 output bits.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key) noexcept;

/// Counter-based random stream keyed by (seed, replica).
///
/// The draw counter is part of the value, so a stream can be copied to
/// replay draws, and two streams with different replica indices never share
/// a counter block. One stream per replica; never share across threads.
class RngStream {
public:
    using result_type = std::uint64_t;

    RngStream(std::uint64_t seed, std::uint64_t replica) noexcept;

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~result_type{0}; }

    result_type operator()() noexcept { return next_u64(); }

    std::uint64_t next_u64() noexcept;
    /// Uniform on the open interval (0,1) with 53-bit resolution.
    double uniform() noexcept;
    double normal() noexcept;

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t replica() const noexcept { return replica_; }
    std::uint64_t draws() const noexcept { return counter_; }

private:
    void refill() noexcept;

    std::uint64_t seed_;
    std::uint64_t replica_;
    std::uint64_t counter_ = 0;  // 64-bit words consumed
    std::array<std::uint64_t, 2> block_{};
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

/// Mixes a base seed with a tag; used to derive independent seeds for
/// sub-experiments and retries.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag) noexcept;

}  // namespace grsk
