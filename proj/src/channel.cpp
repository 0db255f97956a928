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

#include "vortexlink/channel.hpp"

#include "vortexlink/errors.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace vortexlink
{
    ChannelMatrix los_channel(const PlacedLink &link)
    {
        if (link.tx.carrier_hz != link.rx.carrier_hz)
            throw InvalidArgumentError("channel: tx and rx carriers differ");

        const double lambda = link.tx.wavelength_m();
        const Eigen::MatrixXd d = pairwise_distances(link);
        if (d.minCoeff() <= lambda / 10.0)
            throw ModelDomainError(
                "channel: element spacing below lambda/10, outside the spherical-wave model");

        ChannelMatrix h;
        h.carrier_hz = link.tx.carrier_hz;
        h.entries.resize(d.rows(), d.cols());
        for (Eigen::Index m = 0; m < d.rows(); ++m)
            for (Eigen::Index n = 0; n < d.cols(); ++n)
            {
                const double dist = d(m, n);
                const double amp = lambda / (4.0 * std::numbers::pi * dist);
                const double phase = -2.0 * std::numbers::pi * dist / lambda;
                h.entries(m, n) = std::polar(amp, phase);
            }
        return h;
    }

    ChannelMatrix apply_fading(const ChannelMatrix &h, const FadingSpec &spec, RngStream &stream)
    {
        if (spec.k_factor < 0.0 || !std::isfinite(spec.k_factor))
            throw InvalidArgumentError("channel: k_factor must be finite and non-negative");

        if (spec.kind == FadingKind::None)
            return h;

        const double k = spec.kind == FadingKind::Rayleigh ? 0.0 : spec.k_factor;
        const double los = std::sqrt(k / (k + 1.0));
        const double scatter = std::sqrt(1.0 / (k + 1.0));

        ChannelMatrix out;
        out.carrier_hz = h.carrier_hz;
        out.entries.resize(h.entries.rows(), h.entries.cols());
        for (Eigen::Index m = 0; m < h.entries.rows(); ++m)
            for (Eigen::Index n = 0; n < h.entries.cols(); ++n)
            {
                const std::complex<double> g = los + scatter * stream.complex_normal();
                out.entries(m, n) = h.entries(m, n) * g;
            }
        return out;
    }
}
