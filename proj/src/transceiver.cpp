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

#include "vortexlink/transceiver.hpp"

#include "vortexlink/errors.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <string>

namespace vortexlink
{
    int canonical_mode(int l, int num_elements)
    {
        if (num_elements < 1)
            throw InvalidArgumentError("transceiver: num_elements must be >= 1");
        const int n = num_elements;
        int r = l % n;
        if (r < 0)
            r += n; // [0, n)
        if (r > n / 2)
            r -= n; // (-floor(n/2), floor(n/2)]
        return r;
    }

    Eigen::VectorXcd mode_weights(int l, int num_elements)
    {
        if (num_elements < 2)
            throw InvalidArgumentError("transceiver: mode weights need at least 2 elements");
        const int n = num_elements;
        const double scale = 1.0 / std::sqrt(static_cast<double>(n));
        Eigen::VectorXcd w(n);
        for (int i = 0; i < n; ++i)
        {
            const double phase = 2.0 * std::numbers::pi * l * i / n;
            w(i) = std::polar(scale, phase);
        }
        return w;
    }

    Eigen::VectorXcd multiplex(const ModeExcitation &x, int num_elements)
    {
        if (num_elements < 2)
            throw InvalidArgumentError("transceiver: multiplex needs at least 2 elements");

        std::set<int> seen;
        Eigen::VectorXcd out = Eigen::VectorXcd::Zero(num_elements);
        for (const auto &[order, symbol] : x.symbols)
        {
            const int l = canonical_mode(order, num_elements);
            if (!seen.insert(l).second)
                throw InvalidArgumentError("transceiver: duplicate mode order " +
                                           std::to_string(order) + " (alias class " +
                                           std::to_string(l) + ")");
            out += symbol * mode_weights(l, num_elements);
        }
        return out;
    }

    std::map<int, std::complex<double>> demultiplex(const Eigen::VectorXcd &y,
                                                    const std::vector<int> &modes)
    {
        const int n = static_cast<int>(y.size());
        if (n < 2)
            throw InvalidArgumentError("transceiver: demultiplex needs at least 2 samples");
        if (static_cast<int>(modes.size()) > n)
            throw InvalidArgumentError("transceiver: more modes requested than elements");

        std::set<int> seen;
        std::map<int, std::complex<double>> out;
        for (const int order : modes)
        {
            const int l = canonical_mode(order, n);
            if (!seen.insert(l).second)
                throw InvalidArgumentError("transceiver: duplicate mode order " +
                                           std::to_string(order));
            out[order] = mode_weights(l, n).dot(y); // Eigen dot conjugates the left side
        }
        return out;
    }

    ModeChannel effective_mode_channel(const ChannelMatrix &h,
                                       const std::vector<int> &tx_modes,
                                       const std::vector<int> &rx_modes)
    {
        const int n_rx = static_cast<int>(h.entries.rows());
        const int n_tx = static_cast<int>(h.entries.cols());
        if (n_rx < 2 || n_tx < 2)
            throw InvalidArgumentError("transceiver: channel matrix must be at least 2x2");
        if (tx_modes.empty() || rx_modes.empty())
            throw InvalidArgumentError("transceiver: mode lists must be non-empty");

        ModeChannel mc;
        mc.rx_modes = rx_modes;
        mc.tx_modes = tx_modes;
        mc.entries.resize(static_cast<Eigen::Index>(rx_modes.size()),
                          static_cast<Eigen::Index>(tx_modes.size()));
        for (std::size_t r = 0; r < rx_modes.size(); ++r)
        {
            const Eigen::VectorXcd wr = mode_weights(canonical_mode(rx_modes[r], n_rx), n_rx);
            const Eigen::RowVectorXcd row = wr.adjoint() * h.entries;
            for (std::size_t t = 0; t < tx_modes.size(); ++t)
            {
                const Eigen::VectorXcd wt = mode_weights(canonical_mode(tx_modes[t], n_tx), n_tx);
                mc.entries(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(t)) =
                    row * wt;
            }
        }
        return mc;
    }

    std::map<int, double> mode_sinr(const ModeChannel &mc,
                                    const std::map<int, double> &tx_power_w,
                                    double noise_power_w)
    {
        if (!(noise_power_w > 0.0))
            throw InvalidArgumentError("transceiver: noise_power_w must be positive");
        if (mc.rx_modes != mc.tx_modes)
            throw InvalidArgumentError("transceiver: mode_sinr needs rx modes == tx modes");
        for (const auto &[mode, p] : tx_power_w)
            if (p < 0.0 || !std::isfinite(p))
                throw InvalidArgumentError("transceiver: power for mode " + std::to_string(mode) +
                                           " must be finite and non-negative");

        const auto power_of = [&](int mode) {
            const auto it = tx_power_w.find(mode);
            return it == tx_power_w.end() ? 0.0 : it->second;
        };

        std::map<int, double> sinr;
        const auto count = mc.rx_modes.size();
        for (std::size_t r = 0; r < count; ++r)
        {
            const double desired =
                power_of(mc.rx_modes[r]) * std::norm(mc.entries(static_cast<Eigen::Index>(r),
                                                                static_cast<Eigen::Index>(r)));
            double interference = 0.0;
            for (std::size_t t = 0; t < count; ++t)
                if (t != r)
                    interference += power_of(mc.tx_modes[t]) *
                                    std::norm(mc.entries(static_cast<Eigen::Index>(r),
                                                         static_cast<Eigen::Index>(t)));
            sinr[mc.rx_modes[r]] = desired / (interference + noise_power_w);
        }
        return sinr;
    }

    std::map<int, std::complex<double>> fractional_mode_spectrum(double l_frac,
                                                                 const std::vector<int> &modes)
    {
        std::map<int, std::complex<double>> out;
        for (const int m : modes)
        {
            const double delta = l_frac - m;
            if (delta == 0.0)
            {
                out[m] = 1.0;
                continue;
            }
            const double x = std::numbers::pi * delta;
            out[m] = std::polar(1.0, x) * (std::sin(x) / x);
        }
        return out;
    }

    int estimate_mode_pgm(double phase_a, double phase_b, double azimuth_a, double azimuth_b)
    {
        const double dphi = azimuth_b - azimuth_a;
        if (dphi == 0.0)
            throw InvalidArgumentError("transceiver: azimuth separation must be nonzero");

        double dw = std::remainder(phase_b - phase_a, 2.0 * std::numbers::pi);
        if (dw <= -std::numbers::pi)
            dw += 2.0 * std::numbers::pi; // (-pi, pi]
        return static_cast<int>(std::llround(dw / dphi));
    }

    double mode_leakage_fraction(const ModeChannel &mc)
    {
        const Eigen::Index rows = mc.entries.rows();
        const Eigen::Index cols = mc.entries.cols();
        if (rows != cols || rows < 2)
            throw InvalidArgumentError("transceiver: leakage needs a square mode channel, >= 2 modes");

        double diag = 0.0, off = 0.0;
        for (Eigen::Index r = 0; r < rows; ++r)
            for (Eigen::Index t = 0; t < cols; ++t)
                (r == t ? diag : off) += std::norm(mc.entries(r, t));
        const double n = static_cast<double>(rows);
        return (off / (n * (n - 1.0))) / (diag / n);
    }
}
