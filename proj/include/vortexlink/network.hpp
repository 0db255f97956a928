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

#ifndef VORTEXLINK_NETWORK_HPP
#define VORTEXLINK_NETWORK_HPP

#include "vortexlink/rng.hpp"

#include <Eigen/Dense>
#include <cstdint>
#include <filesystem>
#include <vector>

namespace vortexlink
{
    // Two-tier deployment parameters. The macrocell overlays the area on
    // its own band / plane-wave mode and is excluded from the small-cell
    // interference accounting.
    struct NetworkConfig
    {
        double area_width_m = 20.0;
        double area_height_m = 20.0;
        int num_cells = 4;                 // small cells on a jittered grid
        double cell_jitter_m = 1.0;        // uniform jitter per axis
        double user_density_per_m2 = 0.2;  // Poisson point process intensity
        double reuse_distance_m = 18.0;    // conflict-graph edge threshold
        double path_loss_exponent = 3.0;   // log-distance exponent
        double min_path_distance_m = 1.0;  // path-loss reference / clamp
        double noise_power_w = 1e-13;
        double target_snr_db = 20.0;       // cell-edge SNR calibration point
        double leakage_kappa = 1.4e-3;     // inter-mode leakage fraction
        double macro_power_w = 10.0;

        bool operator==(const NetworkConfig &) const = default;
    };

    // One Monte Carlo realization of cell and user placement.
    struct NetworkScenario
    {
        double area_width_m = 0.0;
        double area_height_m = 0.0;
        Eigen::Vector2d macro_position{0.0, 0.0};
        double macro_power_w = 0.0;
        std::vector<Eigen::Vector2d> cell_positions;
        std::vector<Eigen::Vector2d> user_positions;
        double user_density_per_m2 = 0.0;
        double cell_edge_distance_m = 0.0; // half diagonal of one grid cell
    };

    enum class Scheme
    {
        Mdma, // one vortex mode per small cell, full band each
        Fdma  // one frequency channel per small cell, band split evenly
    };

    // Per-small-cell resource labels in [0, num_resources). The macrocell
    // is fixed to the plane-wave mode / its own band and carries no label.
    struct Assignment
    {
        Scheme scheme = Scheme::Mdma;
        int num_resources = 1;
        std::vector<int> labels;
    };

    // Draw order: cell jitter (row-major grid), then the Poisson user
    // count, then one (x, y) pair per user.
    NetworkScenario generate_scenario(const NetworkConfig &config, RngStream &stream);

    // Greedy coloring of the distance conflict graph: cells in decreasing
    // degree order take the lowest label unused by colored neighbors; when
    // labels run out, the label with the fewest conflicting neighbors wins
    // (ties to the lowest index).
    Assignment allocate_modes(const NetworkScenario &scenario, int num_modes,
                              double reuse_distance_m);

    // Same coloring over frequency channels; the band split is charged in
    // evaluate_drop.
    Assignment allocate_fdma(const NetworkScenario &scenario, int num_channels,
                             double reuse_distance_m);

    struct DropResult
    {
        std::vector<double> user_sinr;          // one entry per user
        std::vector<int> scheduled_user_per_cell; // -1 for empty cells
        double spectrum_efficiency = 0.0;       // bit/s/Hz
        bool empty = false;                     // no users in this drop
    };

    // Downlink evaluation of one drop. Users associate with the nearest
    // small cell; transmit power is calibrated so a cell-edge user sees
    // target_snr over noise; co-label cells interfere fully, different
    // vortex modes leak the kappa fraction, different frequency channels
    // are orthogonal. Exactly one user per cell transmits at a time under
    // a round-robin schedule; the drop spectrum efficiency is the schedule
    // average, i.e. the per-cell mean rate over associated users (divided
    // by the channel count for Fdma), averaged over cells.
    DropResult evaluate_drop(const NetworkScenario &scenario, const Assignment &assignment,
                             const NetworkConfig &config, double target_snr_db,
                             double kappa);

    enum class SweepAxis
    {
        Snr,     // target cell-edge SNR in dB
        Density, // users per m^2
        NumModes // resource count (Mdma only)
    };

    struct SweepPoint
    {
        double axis_value = 0.0;
        double mean_se = 0.0;   // bit/s/Hz
        double ci95_half = 0.0; // 1.96 * stddev / sqrt(drops)
        int drops = 0;
        int empty_drops = 0;
    };

    struct SweepResult
    {
        Scheme scheme = Scheme::Mdma;
        int num_resources = 1;
        SweepAxis axis = SweepAxis::Snr;
        std::vector<SweepPoint> points;
    };

    // Runs `drops` independent drops per axis point, the drop at (point p,
    // index d) on the substream derived from (master_seed, p, d). Results
    // are reduced in drop order, so they do not depend on evaluation order.
    // Requires drops >= 30 (confidence interval validity).
    SweepResult run_sweep(const NetworkConfig &config, Scheme scheme, int num_resources,
                          SweepAxis axis, const std::vector<double> &points, int drops,
                          std::uint64_t master_seed);

    // CSV export, header
    // "axis_value,scheme,num_resources,mean_se_bps_hz,ci95_half,drops".
    void write_sweep_csv(const std::vector<SweepResult> &results,
                         const std::filesystem::path &path);

    // Default inter-mode leakage: off-diagonal power fraction of the
    // effective mode channel of the reference link (16 elements, 25 mm
    // radius, 35 GHz, 1 m range, modes -3..3) with the receive ring offset
    // laterally by 0.2 radii.
    double calibrated_default_kappa();
}

#endif
