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

#ifndef VORTEXLINK_CHANNEL_HPP
#define VORTEXLINK_CHANNEL_HPP

#include "vortexlink/geometry.hpp"
#include "vortexlink/rng.hpp"

#include <Eigen/Dense>

namespace vortexlink
{
    // Complex amplitude gains between all element pairs of a link,
    // entry (m, n) = gain from tx element n to rx element m.
    struct ChannelMatrix
    {
        Eigen::MatrixXcd entries; // N_rx x N_tx
        double carrier_hz = 0.0;
    };

    enum class FadingKind
    {
        None,
        Rician,
        Rayleigh // Rician with k_factor = 0
    };

    struct FadingSpec
    {
        FadingKind kind = FadingKind::None;
        double k_factor = 0.0; // linear Rician K, >= 0
    };

    // Free-space line-of-sight channel: h_mn = lambda/(4 pi d_mn) *
    // exp(-i 2 pi d_mn / lambda). Every pair distance must exceed
    // lambda/10 (spherical-wave model validity guard).
    ChannelMatrix los_channel(const PlacedLink &link);

    // Multiplies each entry by an independent coefficient
    //   g = sqrt(K/(K+1)) + sqrt(1/(K+1)) * z,  z ~ CN(0, 1),
    // drawn from `stream` in row-major entry order. kind == None returns
    // the input unchanged without consuming the stream.
    ChannelMatrix apply_fading(const ChannelMatrix &h, const FadingSpec &spec, RngStream &stream);
}

#endif
