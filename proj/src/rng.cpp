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

#include "vortexlink/rng.hpp"

#include "vortexlink/errors.hpp"

#include <cmath>
#include <numbers>

namespace vortexlink
{
    namespace
    {
        // splitmix64 finalizer (Steele, Lea, Flood 2014)
        std::uint64_t mix64(std::uint64_t x)
        {
            x += 0x9E3779B97F4A7C15ULL;
            x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
            x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
            return x ^ (x >> 31);
        }
    }

    RngStream RngStream::derive(std::uint64_t master, std::uint64_t a, std::uint64_t b)
    {
        std::uint64_t s = mix64(master);
        s = mix64(s ^ a);
        s = mix64(s ^ b);
        return RngStream(s);
    }

    double RngStream::normal()
    {
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log1p(-u1));
        return r * std::cos(2.0 * std::numbers::pi * u2);
    }

    std::complex<double> RngStream::complex_normal()
    {
        const double u1 = uniform();
        const double u2 = uniform();
        // Box-Muller pair scaled to E|z|^2 = 1, i.e. each leg has variance 1/2
        const double r = std::sqrt(-std::log1p(-u1));
        const double theta = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(theta), r * std::sin(theta)};
    }

    int RngStream::poisson(double mean)
    {
        if (mean < 0.0 || !std::isfinite(mean))
            throw InvalidArgumentError("rng: poisson mean must be finite and non-negative");
        if (mean == 0.0)
            return 0;

        // A count k has accumulated exponential arrivals up to `mean`.
        double acc = 0.0;
        int k = 0;
        while (true)
        {
            acc += -std::log1p(-uniform());
            if (acc > mean)
                return k;
            ++k;
        }
    }
}
