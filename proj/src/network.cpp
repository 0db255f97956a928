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

#include "vortexlink/network.hpp"

#include "vortexlink/channel.hpp"
#include "vortexlink/errors.hpp"
#include "vortexlink/io.hpp"
#include "vortexlink/transceiver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace vortexlink
{
    namespace
    {
        struct GridShape
        {
            int cols, rows;
            double pitch_x, pitch_y;
        };

        GridShape cell_grid(const NetworkConfig &config)
        {
            const int cols = static_cast<int>(std::ceil(std::sqrt(config.num_cells)));
            const int rows = (config.num_cells + cols - 1) / cols;
            return {cols, rows, config.area_width_m / cols, config.area_height_m / rows};
        }

        void validate(const NetworkConfig &config)
        {
            if (!(config.area_width_m > 0.0) || !(config.area_height_m > 0.0))
                throw InvalidArgumentError("network: area dimensions must be positive");
            if (config.num_cells < 1)
                throw InvalidArgumentError("network: num_cells must be >= 1");
            if (config.user_density_per_m2 < 0.0)
                throw InvalidArgumentError("network: user_density_per_m2 must be >= 0");
            if (!(config.noise_power_w > 0.0))
                throw InvalidArgumentError("network: noise_power_w must be positive");
            if (!(config.min_path_distance_m > 0.0))
                throw InvalidArgumentError("network: min_path_distance_m must be positive");
        }

        // Shared greedy coloring used by both resource types.
        std::vector<int> color_conflict_graph(const std::vector<Eigen::Vector2d> &cells,
                                              int num_resources, double reuse_distance_m)
        {
            const int n = static_cast<int>(cells.size());
            std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
            std::vector<int> degree(n, 0);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if ((cells[i] - cells[j]).norm() < reuse_distance_m)
                    {
                        adj[i][j] = adj[j][i] = true;
                        ++degree[i];
                        ++degree[j];
                    }

            std::vector<int> order(n);
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(),
                             [&](int a, int b) { return degree[a] > degree[b]; });

            std::vector<int> label(n, -1);
            for (const int i : order)
            {
                std::vector<int> used(num_resources, 0);
                for (int j = 0; j < n; ++j)
                    if (adj[i][j] && label[j] >= 0)
                        ++used[label[j]];

                int pick = -1;
                for (int m = 0; m < num_resources; ++m)
                    if (used[m] == 0)
                    {
                        pick = m;
                        break;
                    }
                if (pick < 0)
                {
                    // colors exhausted: fewest conflicting neighbors wins
                    pick = 0;
                    for (int m = 1; m < num_resources; ++m)
                        if (used[m] < used[pick])
                            pick = m;
                }
                label[i] = pick;
            }
            return label;
        }
    }

    NetworkScenario generate_scenario(const NetworkConfig &config, RngStream &stream)
    {
        validate(config);
        const GridShape grid = cell_grid(config);

        NetworkScenario s;
        s.area_width_m = config.area_width_m;
        s.area_height_m = config.area_height_m;
        s.macro_position = {config.area_width_m / 2.0, config.area_height_m / 2.0};
        s.macro_power_w = config.macro_power_w;
        s.user_density_per_m2 = config.user_density_per_m2;
        s.cell_edge_distance_m = 0.5 * std::hypot(grid.pitch_x, grid.pitch_y);

        for (int r = 0; r < grid.rows && static_cast<int>(s.cell_positions.size()) < config.num_cells; ++r)
            for (int c = 0; c < grid.cols && static_cast<int>(s.cell_positions.size()) < config.num_cells; ++c)
            {
                const double x = (c + 0.5) * grid.pitch_x +
                                 stream.uniform(-config.cell_jitter_m, config.cell_jitter_m);
                const double y = (r + 0.5) * grid.pitch_y +
                                 stream.uniform(-config.cell_jitter_m, config.cell_jitter_m);
                s.cell_positions.emplace_back(std::clamp(x, 0.0, config.area_width_m),
                                              std::clamp(y, 0.0, config.area_height_m));
            }

        const double area = config.area_width_m * config.area_height_m;
        const int n_users = stream.poisson(config.user_density_per_m2 * area);
        s.user_positions.reserve(n_users);
        for (int u = 0; u < n_users; ++u)
        {
            const double x = stream.uniform(0.0, config.area_width_m);
            const double y = stream.uniform(0.0, config.area_height_m);
            s.user_positions.emplace_back(x, y);
        }
        return s;
    }

    Assignment allocate_modes(const NetworkScenario &scenario, int num_modes,
                              double reuse_distance_m)
    {
        if (num_modes < 1)
            throw InvalidArgumentError("network: num_modes must be >= 1");
        return Assignment{Scheme::Mdma, num_modes,
                          color_conflict_graph(scenario.cell_positions, num_modes, reuse_distance_m)};
    }

    Assignment allocate_fdma(const NetworkScenario &scenario, int num_channels,
                             double reuse_distance_m)
    {
        if (num_channels < 1)
            throw InvalidArgumentError("network: num_channels must be >= 1");
        return Assignment{Scheme::Fdma, num_channels,
                          color_conflict_graph(scenario.cell_positions, num_channels, reuse_distance_m)};
    }

    DropResult evaluate_drop(const NetworkScenario &scenario, const Assignment &assignment,
                             const NetworkConfig &config, double target_snr_db, double kappa)
    {
        if (kappa < 0.0 || kappa > 1.0)
            throw InvalidArgumentError("network: kappa must be in [0, 1]");
        const int n_cells = static_cast<int>(scenario.cell_positions.size());
        if (static_cast<int>(assignment.labels.size()) != n_cells)
            throw InvalidArgumentError("network: assignment does not cover all cells");

        DropResult result;
        result.scheduled_user_per_cell.assign(n_cells, -1);
        if (scenario.user_positions.empty())
        {
            result.empty = true;
            return result;
        }

        // Cell-edge calibration: a user at the edge distance sees exactly
        // the target SNR over noise, so received power at range d is
        // snr * noise * (r_edge / d)^eta.
        const double snr = std::pow(10.0, target_snr_db / 10.0);
        const double eta = config.path_loss_exponent;
        const double r_edge = scenario.cell_edge_distance_m;
        const auto rx_power = [&](double d) {
            const double dist = std::max(d, config.min_path_distance_m);
            return snr * config.noise_power_w * std::pow(r_edge / dist, eta);
        };

        const int n_users = static_cast<int>(scenario.user_positions.size());
        std::vector<int> serving(n_users, 0);
        std::vector<std::vector<int>> associated(n_cells);
        for (int u = 0; u < n_users; ++u)
        {
            int best = 0;
            double best_d = (scenario.user_positions[u] - scenario.cell_positions[0]).norm();
            for (int c = 1; c < n_cells; ++c)
            {
                const double d = (scenario.user_positions[u] - scenario.cell_positions[c]).norm();
                if (d < best_d)
                {
                    best_d = d;
                    best = c;
                }
            }
            serving[u] = best;
            associated[best].push_back(u);
        }

        result.user_sinr.assign(n_users, 0.0);
        for (int u = 0; u < n_users; ++u)
        {
            const int ci = serving[u];
            const double desired =
                rx_power((scenario.user_positions[u] - scenario.cell_positions[ci]).norm());
            double interference = 0.0;
            for (int cj = 0; cj < n_cells; ++cj)
            {
                if (cj == ci)
                    continue;
                const double p =
                    rx_power((scenario.user_positions[u] - scenario.cell_positions[cj]).norm());
                if (assignment.labels[cj] == assignment.labels[ci])
                    interference += p;
                else if (assignment.scheme == Scheme::Mdma)
                    interference += kappa * p; // other modes leak; other bands do not
            }
            result.user_sinr[u] = desired / (interference + config.noise_power_w);
        }

        // One user transmits per cell at a time; round robin visits every
        // associated user equally, so the drop spectrum efficiency is the
        // per-cell mean rate. The first user stands in as the
        // representative scheduled pick of this drop.
        const double band_split = assignment.scheme == Scheme::Fdma
                                      ? static_cast<double>(assignment.num_resources)
                                      : 1.0;
        double se = 0.0;
        for (int c = 0; c < n_cells; ++c)
        {
            if (associated[c].empty())
                continue;
            result.scheduled_user_per_cell[c] = associated[c].front();
            double cell_rate = 0.0;
            for (const int u : associated[c])
                cell_rate += std::log2(1.0 + result.user_sinr[u]);
            se += cell_rate / associated[c].size() / band_split;
        }
        result.spectrum_efficiency = se / n_cells;
        return result;
    }

    SweepResult run_sweep(const NetworkConfig &config, Scheme scheme, int num_resources,
                          SweepAxis axis, const std::vector<double> &points, int drops,
                          std::uint64_t master_seed)
    {
        if (drops < 30)
            throw InvalidArgumentError("network: need at least 30 drops per point");
        if (num_resources < 1)
            throw InvalidArgumentError("network: num_resources must be >= 1");

        SweepResult result;
        result.scheme = scheme;
        result.num_resources = num_resources;
        result.axis = axis;
        result.points.reserve(points.size());

        for (std::size_t p = 0; p < points.size(); ++p)
        {
            NetworkConfig point_config = config;
            int resources = num_resources;
            double target_snr = config.target_snr_db;
            switch (axis)
            {
            case SweepAxis::Snr:
                target_snr = points[p];
                break;
            case SweepAxis::Density:
                point_config.user_density_per_m2 = points[p];
                break;
            case SweepAxis::NumModes:
                resources = static_cast<int>(points[p]);
                break;
            }

            std::vector<double> ses(drops, 0.0);
            int empty = 0;
            for (int d = 0; d < drops; ++d)
            {
                RngStream stream = RngStream::derive(master_seed, p, static_cast<std::uint64_t>(d));
                const NetworkScenario scenario = generate_scenario(point_config, stream);
                const Assignment assignment =
                    scheme == Scheme::Mdma
                        ? allocate_modes(scenario, resources, point_config.reuse_distance_m)
                        : allocate_fdma(scenario, resources, point_config.reuse_distance_m);
                const DropResult drop = evaluate_drop(scenario, assignment, point_config,
                                                      target_snr, point_config.leakage_kappa);
                ses[d] = drop.spectrum_efficiency;
                if (drop.empty)
                    ++empty;
            }

            double mean = 0.0;
            for (const double se : ses)
                mean += se;
            mean /= drops;
            double var = 0.0;
            for (const double se : ses)
                var += (se - mean) * (se - mean);
            var /= (drops - 1);

            result.points.push_back({points[p], mean,
                                     1.96 * std::sqrt(var / drops), drops, empty});
        }
        return result;
    }

    void write_sweep_csv(const std::vector<SweepResult> &results,
                         const std::filesystem::path &path)
    {
        std::string csv = "axis_value,scheme,num_resources,mean_se_bps_hz,ci95_half,drops\n";
        for (const SweepResult &r : results)
            for (const SweepPoint &pt : r.points)
            {
                csv += format_double(pt.axis_value);
                csv += ',';
                csv += r.scheme == Scheme::Mdma ? "mdma" : "fdma";
                csv += ',';
                csv += std::to_string(r.num_resources);
                csv += ',';
                csv += format_double(pt.mean_se);
                csv += ',';
                csv += format_double(pt.ci95_half);
                csv += ',';
                csv += std::to_string(pt.drops);
                csv += '\n';
            }
        atomic_write_text(path, csv);
    }

    double calibrated_default_kappa()
    {
        const UcaArray array(16, 0.025, 35e9);
        LinkGeometry g;
        g.axial_distance_m = 1.0;
        g.lateral_offset_m = 0.2 * array.radius_m;
        const ChannelMatrix h = los_channel(place_link(array, array, g));
        const std::vector<int> modes = {-3, -2, -1, 0, 1, 2, 3};
        return mode_leakage_fraction(effective_mode_channel(h, modes, modes));
    }
}
