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

#ifndef VORTEXLINK_TRANSCEIVER_HPP
#define VORTEXLINK_TRANSCEIVER_HPP

#include "vortexlink/channel.hpp"

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <vector>

namespace vortexlink
{
    // Symbols keyed by vortex mode order. An N-element ring can only
    // distinguish mode orders within one alias class; orders are reduced to
    // the canonical representative in (-floor(N/2), floor(N/2)] on use.
    struct ModeExcitation
    {
        std::map<int, std::complex<double>> symbols;
    };

    // Mode-domain view of a ChannelMatrix.
    struct ModeChannel
    {
        Eigen::MatrixXcd entries; // rx_modes.size() x tx_modes.size()
        std::vector<int> rx_modes;
        std::vector<int> tx_modes;
    };

    // Canonical alias-class representative of mode order l for an N-element
    // ring: the value congruent to l mod N inside (-floor(N/2), floor(N/2)].
    int canonical_mode(int l, int num_elements);

    // Ring weights for mode l: w_n = exp(i 2 pi l n / N) / sqrt(N).
    // Unit norm; the set over one alias class is the unitary spatial DFT.
    Eigen::VectorXcd mode_weights(int l, int num_elements);

    // Element excitations carrying `x`: sum over modes of symbol * weights.
    // Two orders that reduce to the same alias class are rejected.
    Eigen::VectorXcd multiplex(const ModeExcitation &x, int num_elements);

    // Projects received element samples onto the requested mode weights
    // (conjugated inner product). Exact inverse of multiplex over an
    // identity channel.
    std::map<int, std::complex<double>> demultiplex(const Eigen::VectorXcd &y,
                                                    const std::vector<int> &modes);

    // Mode-domain channel: entry (l', l) = w_{l'}^H H w_l. Row modes use
    // the receive element count, column modes the transmit element count.
    ModeChannel effective_mode_channel(const ChannelMatrix &h,
                                       const std::vector<int> &tx_modes,
                                       const std::vector<int> &rx_modes);

    // Per-mode SINR over a square mode channel (rx modes == tx modes):
    // SINR(l') = P(l') |mc(l',l')|^2 / (sum_{l != l'} P(l) |mc(l',l)|^2 + noise).
    // Modes missing from the power map transmit zero power.
    std::map<int, double> mode_sinr(const ModeChannel &mc,
                                    const std::map<int, double> &tx_power_w,
                                    double noise_power_w);

    // Fourier coefficients of a non-integer phase winding exp(i l_frac phi)
    // on the integer mode basis:
    //   c_m = exp(i pi (l_frac - m)) * sin(pi (l_frac - m)) / (pi (l_frac - m)),
    // with c_m = 1 at l_frac == m.
    std::map<int, std::complex<double>> fractional_mode_spectrum(double l_frac,
                                                                 const std::vector<int> &modes);

    // Phase-gradient mode estimate from two azimuthal samples:
    // round(wrap(phase_b - phase_a) / (azimuth_b - azimuth_a)), wrap into
    // (-pi, pi]. Valid for noiseless single-mode fields with |l dphi| < pi.
    int estimate_mode_pgm(double phase_a, double phase_b,
                          double azimuth_a, double azimuth_b);

    // Mean off-diagonal to mean diagonal power ratio of a square mode
    // channel; the per-pair leakage fraction used to set the network-level
    // inter-mode interference factor.
    double mode_leakage_fraction(const ModeChannel &mc);
}

#endif
