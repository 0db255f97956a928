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

#include "vortexlink/config.hpp"

#include "vortexlink/channel.hpp"
#include "vortexlink/errors.hpp"
#include "vortexlink/field_map.hpp"
#include "vortexlink/io.hpp"
#include "vortexlink/transceiver.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace vortexlink
{
    namespace
    {
        using json = nlohmann::ordered_json;

        const std::set<std::string> kCommonKeys = {"study", "seed", "out_dir"};
        const std::set<std::string> kArrayKeys = {"num_elements", "radius_m", "carrier_hz"};
        const std::set<std::string> kFieldKeys = {
            "plane_z_m", "half_width_m", "samples_per_axis", "modes",
            "lens_z_m", "lens_focal_m", "lens_aperture_m", "lens_half_width_m",
            "lens_samples_per_axis"};
        const std::set<std::string> kLinkKeys = {"link_distance_m", "link_offsets_m", "link_modes"};
        const std::set<std::string> kNetworkKeys = {
            "area_width_m", "area_height_m", "num_cells", "cell_jitter_m",
            "user_density_per_m2", "reuse_distance_m", "path_loss_exponent",
            "min_path_distance_m", "noise_power_w", "target_snr_db", "kappa",
            "macro_power_w", "mdma_mode_counts", "fdma_channels", "axis",
            "axis_points", "drops"};

        std::set<std::string> allowed_keys(StudyKind study)
        {
            std::set<std::string> keys = kCommonKeys;
            switch (study)
            {
            case StudyKind::Field:
                keys.insert(kArrayKeys.begin(), kArrayKeys.end());
                keys.insert(kFieldKeys.begin(), kFieldKeys.end());
                break;
            case StudyKind::Link:
                keys.insert(kArrayKeys.begin(), kArrayKeys.end());
                keys.insert(kLinkKeys.begin(), kLinkKeys.end());
                break;
            case StudyKind::Network:
                keys.insert(kNetworkKeys.begin(), kNetworkKeys.end());
                break;
            }
            return keys;
        }

        [[noreturn]] void fail(const std::string &key, const std::string &constraint)
        {
            throw ConfigError("config: key '" + key + "' " + constraint);
        }

        double take_double(const json &doc, const std::string &key, double fallback)
        {
            if (!doc.contains(key))
                return fallback;
            const json &v = doc.at(key);
            if (!v.is_number())
                fail(key, "must be a number");
            return v.get<double>();
        }

        int take_int(const json &doc, const std::string &key, int fallback)
        {
            if (!doc.contains(key))
                return fallback;
            const json &v = doc.at(key);
            if (!v.is_number_integer())
                fail(key, "must be an integer");
            return v.get<int>();
        }

        std::uint64_t take_u64(const json &doc, const std::string &key, std::uint64_t fallback)
        {
            if (!doc.contains(key))
                return fallback;
            const json &v = doc.at(key);
            if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
                fail(key, "must be a non-negative integer");
            return v.get<std::uint64_t>();
        }

        std::string take_string(const json &doc, const std::string &key, const std::string &fallback)
        {
            if (!doc.contains(key))
                return fallback;
            const json &v = doc.at(key);
            if (!v.is_string())
                fail(key, "must be a string");
            return v.get<std::string>();
        }

        std::vector<int> take_int_list(const json &doc, const std::string &key,
                                       std::vector<int> fallback)
        {
            if (!doc.contains(key))
                return fallback;
            const json &v = doc.at(key);
            if (!v.is_array())
                fail(key, "must be an array of integers");
            std::vector<int> out;
            for (const json &e : v)
            {
                if (!e.is_number_integer())
                    fail(key, "must be an array of integers");
                out.push_back(e.get<int>());
            }
            if (out.empty())
                fail(key, "must not be empty");
            return out;
        }

        std::vector<double> take_double_list(const json &doc, const std::string &key,
                                             std::vector<double> fallback)
        {
            if (!doc.contains(key))
                return fallback;
            const json &v = doc.at(key);
            if (!v.is_array())
                fail(key, "must be an array of numbers");
            std::vector<double> out;
            for (const json &e : v)
            {
                if (!e.is_number())
                    fail(key, "must be an array of numbers");
                out.push_back(e.get<double>());
            }
            if (out.empty())
                fail(key, "must not be empty");
            return out;
        }

        void require_positive(double v, const std::string &key)
        {
            if (!(v > 0.0) || !std::isfinite(v))
                fail(key, "must be a positive finite number");
        }
    }

    const char *study_name(StudyKind study)
    {
        switch (study)
        {
        case StudyKind::Field:
            return "field";
        case StudyKind::Link:
            return "link";
        case StudyKind::Network:
            return "network";
        }
        return "?";
    }

    const char *axis_name(SweepAxis axis)
    {
        switch (axis)
        {
        case SweepAxis::Snr:
            return "snr";
        case SweepAxis::Density:
            return "density";
        case SweepAxis::NumModes:
            return "num_modes";
        }
        return "?";
    }

    RunConfig parse_config(const std::string &text)
    {
        json doc;
        try
        {
            doc = json::parse(text);
        }
        catch (const json::parse_error &e)
        {
            throw ConfigError(std::string("config: malformed document: ") + e.what());
        }
        if (!doc.is_object())
            throw ConfigError("config: document must be a flat JSON object");

        RunConfig cfg;
        const std::string study = take_string(doc, "study", "");
        if (study == "field")
            cfg.study = StudyKind::Field;
        else if (study == "link")
            cfg.study = StudyKind::Link;
        else if (study == "network")
            cfg.study = StudyKind::Network;
        else
            fail("study", "must be one of \"field\", \"link\", \"network\"");

        const std::set<std::string> allowed = allowed_keys(cfg.study);
        for (const auto &[key, value] : doc.items())
            if (!allowed.contains(key))
                fail(key, std::string("is unknown for study '") + study_name(cfg.study) + "'");

        cfg.seed = take_u64(doc, "seed", cfg.seed);
        cfg.out_dir = take_string(doc, "out_dir", cfg.out_dir);

        if (cfg.study == StudyKind::Field || cfg.study == StudyKind::Link)
        {
            cfg.num_elements = take_int(doc, "num_elements", cfg.num_elements);
            if (cfg.num_elements < 2)
                fail("num_elements", "must be >= 2");
            cfg.radius_m = take_double(doc, "radius_m", cfg.radius_m);
            require_positive(cfg.radius_m, "radius_m");
            cfg.carrier_hz = take_double(doc, "carrier_hz", cfg.carrier_hz);
            require_positive(cfg.carrier_hz, "carrier_hz");
        }

        if (cfg.study == StudyKind::Field)
        {
            cfg.plane_z_m = take_double(doc, "plane_z_m", cfg.plane_z_m);
            require_positive(cfg.plane_z_m, "plane_z_m");
            cfg.half_width_m = take_double(doc, "half_width_m", cfg.half_width_m);
            require_positive(cfg.half_width_m, "half_width_m");
            cfg.samples_per_axis = take_int(doc, "samples_per_axis", cfg.samples_per_axis);
            if (cfg.samples_per_axis < 16 || cfg.samples_per_axis % 2 == 0)
                fail("samples_per_axis", "must be odd and >= 16");
            cfg.modes = take_int_list(doc, "modes", cfg.modes);
            cfg.lens_z_m = take_double(doc, "lens_z_m", cfg.lens_z_m);
            require_positive(cfg.lens_z_m, "lens_z_m");
            if (cfg.lens_z_m >= cfg.plane_z_m)
                fail("lens_z_m", "must lie before plane_z_m");
            cfg.lens_focal_m = take_double(doc, "lens_focal_m", cfg.lens_focal_m);
            require_positive(cfg.lens_focal_m, "lens_focal_m");
            cfg.lens_aperture_m = take_double(doc, "lens_aperture_m", cfg.lens_aperture_m);
            require_positive(cfg.lens_aperture_m, "lens_aperture_m");
            cfg.lens_half_width_m = take_double(doc, "lens_half_width_m", cfg.lens_half_width_m);
            require_positive(cfg.lens_half_width_m, "lens_half_width_m");
            cfg.lens_samples_per_axis =
                take_int(doc, "lens_samples_per_axis", cfg.lens_samples_per_axis);
            if (cfg.lens_samples_per_axis < 16 || cfg.lens_samples_per_axis % 2 == 0)
                fail("lens_samples_per_axis", "must be odd and >= 16");
        }

        if (cfg.study == StudyKind::Link)
        {
            cfg.link_distance_m = take_double(doc, "link_distance_m", cfg.link_distance_m);
            require_positive(cfg.link_distance_m, "link_distance_m");
            cfg.link_offsets_m = take_double_list(doc, "link_offsets_m", cfg.link_offsets_m);
            for (const double off : cfg.link_offsets_m)
                if (off < 0.0)
                    fail("link_offsets_m", "entries must be >= 0");
            cfg.link_modes = take_int_list(doc, "link_modes", cfg.link_modes);
        }

        if (cfg.study == StudyKind::Network)
        {
            NetworkConfig &net = cfg.net;
            net.area_width_m = take_double(doc, "area_width_m", net.area_width_m);
            require_positive(net.area_width_m, "area_width_m");
            net.area_height_m = take_double(doc, "area_height_m", net.area_height_m);
            require_positive(net.area_height_m, "area_height_m");
            net.num_cells = take_int(doc, "num_cells", net.num_cells);
            if (net.num_cells < 1)
                fail("num_cells", "must be >= 1");
            net.cell_jitter_m = take_double(doc, "cell_jitter_m", net.cell_jitter_m);
            if (net.cell_jitter_m < 0.0)
                fail("cell_jitter_m", "must be >= 0");
            net.user_density_per_m2 =
                take_double(doc, "user_density_per_m2", net.user_density_per_m2);
            if (net.user_density_per_m2 < 0.0)
                fail("user_density_per_m2", "must be >= 0");
            net.reuse_distance_m = take_double(doc, "reuse_distance_m", net.reuse_distance_m);
            require_positive(net.reuse_distance_m, "reuse_distance_m");
            net.path_loss_exponent = take_double(doc, "path_loss_exponent", net.path_loss_exponent);
            require_positive(net.path_loss_exponent, "path_loss_exponent");
            net.min_path_distance_m =
                take_double(doc, "min_path_distance_m", net.min_path_distance_m);
            require_positive(net.min_path_distance_m, "min_path_distance_m");
            net.noise_power_w = take_double(doc, "noise_power_w", net.noise_power_w);
            require_positive(net.noise_power_w, "noise_power_w");
            net.target_snr_db = take_double(doc, "target_snr_db", net.target_snr_db);
            net.leakage_kappa = take_double(doc, "kappa", calibrated_default_kappa());
            if (net.leakage_kappa < 0.0 || net.leakage_kappa > 1.0)
                fail("kappa", "must be in [0, 1]");
            net.macro_power_w = take_double(doc, "macro_power_w", net.macro_power_w);
            require_positive(net.macro_power_w, "macro_power_w");

            cfg.mdma_mode_counts = take_int_list(doc, "mdma_mode_counts", cfg.mdma_mode_counts);
            for (const int m : cfg.mdma_mode_counts)
                if (m < 1)
                    fail("mdma_mode_counts", "entries must be >= 1");
            cfg.fdma_channels = take_int(doc, "fdma_channels", cfg.fdma_channels);
            if (cfg.fdma_channels < 1)
                fail("fdma_channels", "must be >= 1");

            const std::string axis = take_string(doc, "axis", axis_name(cfg.axis));
            if (axis == "snr")
                cfg.axis = SweepAxis::Snr;
            else if (axis == "density")
                cfg.axis = SweepAxis::Density;
            else if (axis == "num_modes")
                cfg.axis = SweepAxis::NumModes;
            else
                fail("axis", "must be one of \"snr\", \"density\", \"num_modes\"");

            cfg.axis_points = take_double_list(doc, "axis_points", cfg.axis_points);
            if (cfg.axis == SweepAxis::Density)
                for (const double p : cfg.axis_points)
                    if (p < 0.0)
                        fail("axis_points", "density values must be >= 0");
            if (cfg.axis == SweepAxis::NumModes)
                for (const double p : cfg.axis_points)
                    if (p < 1.0 || p != std::floor(p))
                        fail("axis_points", "mode counts must be positive integers");

            cfg.drops = take_int(doc, "drops", cfg.drops);
            if (cfg.drops < 30)
                fail("drops", "must be >= 30");
        }

        return cfg;
    }

    RunConfig parse_config_file(const std::filesystem::path &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw ConfigError("config: cannot read '" + path.string() + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_config(buf.str());
    }

    std::string resolved_config_json(const RunConfig &cfg)
    {
        json doc;
        doc["study"] = study_name(cfg.study);
        doc["seed"] = cfg.seed;
        if (!cfg.out_dir.empty())
            doc["out_dir"] = cfg.out_dir;

        if (cfg.study == StudyKind::Field || cfg.study == StudyKind::Link)
        {
            doc["num_elements"] = cfg.num_elements;
            doc["radius_m"] = cfg.radius_m;
            doc["carrier_hz"] = cfg.carrier_hz;
        }
        if (cfg.study == StudyKind::Field)
        {
            doc["plane_z_m"] = cfg.plane_z_m;
            doc["half_width_m"] = cfg.half_width_m;
            doc["samples_per_axis"] = cfg.samples_per_axis;
            doc["modes"] = cfg.modes;
            doc["lens_z_m"] = cfg.lens_z_m;
            doc["lens_focal_m"] = cfg.lens_focal_m;
            doc["lens_aperture_m"] = cfg.lens_aperture_m;
            doc["lens_half_width_m"] = cfg.lens_half_width_m;
            doc["lens_samples_per_axis"] = cfg.lens_samples_per_axis;
        }
        if (cfg.study == StudyKind::Link)
        {
            doc["link_distance_m"] = cfg.link_distance_m;
            doc["link_offsets_m"] = cfg.link_offsets_m;
            doc["link_modes"] = cfg.link_modes;
        }
        if (cfg.study == StudyKind::Network)
        {
            doc["area_width_m"] = cfg.net.area_width_m;
            doc["area_height_m"] = cfg.net.area_height_m;
            doc["num_cells"] = cfg.net.num_cells;
            doc["cell_jitter_m"] = cfg.net.cell_jitter_m;
            doc["user_density_per_m2"] = cfg.net.user_density_per_m2;
            doc["reuse_distance_m"] = cfg.net.reuse_distance_m;
            doc["path_loss_exponent"] = cfg.net.path_loss_exponent;
            doc["min_path_distance_m"] = cfg.net.min_path_distance_m;
            doc["noise_power_w"] = cfg.net.noise_power_w;
            doc["target_snr_db"] = cfg.net.target_snr_db;
            doc["kappa"] = cfg.net.leakage_kappa;
            doc["macro_power_w"] = cfg.net.macro_power_w;
            doc["mdma_mode_counts"] = cfg.mdma_mode_counts;
            doc["fdma_channels"] = cfg.fdma_channels;
            doc["axis"] = axis_name(cfg.axis);
            doc["axis_points"] = cfg.axis_points;
            doc["drops"] = cfg.drops;
        }
        return doc.dump(2) + "\n";
    }

    namespace
    {
        void run_field_study(const RunConfig &cfg, const std::filesystem::path &out)
        {
            const UcaArray array(cfg.num_elements, cfg.radius_m, cfg.carrier_hz);
            const auto positions =
                element_positions(array, {0.0, 0.0, 0.0}, {0.0, 0.0, 1.0}, 0.0);
            const PlaneSpec plane(cfg.plane_z_m, cfg.half_width_m, cfg.samples_per_axis);
            const PlaneSpec lens_plane(cfg.lens_z_m, cfg.lens_half_width_m,
                                       cfg.lens_samples_per_axis);
            const LensSpec lens{cfg.lens_z_m, cfg.lens_focal_m, cfg.lens_aperture_m};

            std::string summary = "mode,ring_radius_m,peak_intensity,winding\n";
            for (const int l : cfg.modes)
            {
                ModeExcitation x;
                x.symbols[l] = 1.0;
                const Eigen::VectorXcd exc = multiplex(x, array.num_elements);

                const FieldGrid unconverged =
                    field_on_plane(positions, array.carrier_hz, exc, plane);
                write_field_csv(unconverged,
                                out / ("field_l" + std::to_string(l) + "_unconverged.csv"));

                const FieldGrid at_lens =
                    field_on_plane(positions, array.carrier_hz, exc, lens_plane);
                const FieldGrid converged = lens_and_propagate(at_lens, lens, plane);
                write_field_csv(converged,
                                out / ("field_l" + std::to_string(l) + "_converged.csv"));

                const double radius = ring_radius(unconverged);
                const double peak = unconverged.values.cwiseAbs2().maxCoeff();
                // on-axis beams have no ring; probe the winding off-axis
                const double circle = radius > 0.0 ? radius : cfg.half_width_m / 4.0;
                const int winding = phase_winding(unconverged, circle);

                summary += std::to_string(l) + ',' + format_double(radius) + ',' +
                           format_double(peak) + ',' + std::to_string(winding) + '\n';
            }
            atomic_write_text(out / "field_summary.csv", summary);
        }

        void run_link_study(const RunConfig &cfg, const std::filesystem::path &out)
        {
            const UcaArray array(cfg.num_elements, cfg.radius_m, cfg.carrier_hz);
            std::string csv = "offset_m,rx_mode,tx_mode,power_db\n";
            for (const double offset : cfg.link_offsets_m)
            {
                LinkGeometry g;
                g.axial_distance_m = cfg.link_distance_m;
                g.lateral_offset_m = offset;
                const ChannelMatrix h = los_channel(place_link(array, array, g));
                const ModeChannel mc = effective_mode_channel(h, cfg.link_modes, cfg.link_modes);

                double mean_diag = 0.0;
                for (Eigen::Index i = 0; i < mc.entries.rows(); ++i)
                    mean_diag += std::norm(mc.entries(i, i));
                mean_diag /= static_cast<double>(mc.entries.rows());

                for (std::size_t r = 0; r < mc.rx_modes.size(); ++r)
                    for (std::size_t t = 0; t < mc.tx_modes.size(); ++t)
                    {
                        const double ratio = std::norm(mc.entries(static_cast<Eigen::Index>(r),
                                                                  static_cast<Eigen::Index>(t))) /
                                             mean_diag;
                        const double db = ratio < 1e-40 ? -400.0 : 10.0 * std::log10(ratio);
                        csv += format_double(offset) + ',' + std::to_string(mc.rx_modes[r]) + ',' +
                               std::to_string(mc.tx_modes[t]) + ',' + format_double(db) + '\n';
                    }
            }
            atomic_write_text(out / "link_leakage.csv", csv);
        }

        void run_network_study(const RunConfig &cfg, const std::filesystem::path &out)
        {
            std::vector<SweepResult> results;
            if (cfg.axis == SweepAxis::NumModes)
            {
                // the axis itself enumerates the Mdma mode counts
                results.push_back(run_sweep(cfg.net, Scheme::Mdma, 1, cfg.axis, cfg.axis_points,
                                            cfg.drops, cfg.seed));
            }
            else
            {
                for (const int m : cfg.mdma_mode_counts)
                    results.push_back(run_sweep(cfg.net, Scheme::Mdma, m, cfg.axis,
                                                cfg.axis_points, cfg.drops, cfg.seed));
                results.push_back(run_sweep(cfg.net, Scheme::Fdma, cfg.fdma_channels, cfg.axis,
                                            cfg.axis_points, cfg.drops, cfg.seed));
            }
            write_sweep_csv(results, out / "network_sweep.csv");
        }
    }

    int run(const RunConfig &cfg)
    {
        if (cfg.out_dir.empty())
            throw ConfigError("config: key 'out_dir' must name the output directory");

        const std::filesystem::path out(cfg.out_dir);
        std::error_code ec;
        std::filesystem::create_directories(out, ec);
        if (ec)
            throw IoError("io: cannot create output directory '" + out.string() + "': " +
                          ec.message());

        std::cout << "seed: " << cfg.seed << "\n";
        atomic_write_text(out / "resolved_config.json", resolved_config_json(cfg));

        switch (cfg.study)
        {
        case StudyKind::Field:
            run_field_study(cfg, out);
            break;
        case StudyKind::Link:
            run_link_study(cfg, out);
            break;
        case StudyKind::Network:
            run_network_study(cfg, out);
            break;
        }
        return 0;
    }
}
