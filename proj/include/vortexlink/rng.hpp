// SPDX-License-Identifier: Apache-2.0
//
// vortexlink radio vortex link-level and network-level simulator
// Copyright (C) 2026 vortexlink contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef VORTEXLINK_RNG_HPP
#define VORTEXLINK_RNG_HPP

#include <complex>
#include <cstdint>
#include <random>

namespace vortexlink
{
    // Deterministic random stream. All sampling routines are implemented on
    // top of the raw 64-bit generator output (no std::*_distribution), so a
    // given seed produces the same sequence on every platform and toolchain.
    class RngStream
    {
    public:
        explicit RngStream(std::uint64_t seed) : eng_(seed) {}

        // Substream for Monte Carlo work units: mixes (master, a, b) into an
        // independent seed. Streams with distinct tuples do not overlap in
        // any practically observable way.
        static RngStream derive(std::uint64_t master, std::uint64_t a, std::uint64_t b);

        std::uint64_t next_u64() { return eng_(); }

        // Uniform on [0, 1) with 53-bit resolution.
        double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

        double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

        // Standard normal via Box-Muller (both values of the pair are used
        // by complex_normal; the scalar version keeps only the cosine leg).
        double normal();

        // Circularly-symmetric complex Gaussian with E|z|^2 = 1.
        std::complex<double> complex_normal();

        // Poisson count by summing unit-mean exponentials in the log domain;
        // exact for any mean that fits a double, O(mean) per draw.
        int poisson(double mean);

    private:
        std::mt19937_64 eng_;
    };
}

#endif
