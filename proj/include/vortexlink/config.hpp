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

#ifndef VORTEXLINK_CONFIG_HPP
#define VORTEXLINK_CONFIG_HPP

#include "vortexlink/network.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace vortexlink
{
    enum class StudyKind
    {
        Field,   // radiated field maps, lens convergence, per-mode summary
        Link,    // mode-leakage matrix versus misalignment
        Network  // Mdma / Fdma spectrum-efficiency sweeps
    };

    // One flat key-value document fully determines a run. Defaults follow
    // the 16-element, 25 mm, 35 GHz reference setup observed at 100 mm.
    struct RunConfig
    {
        StudyKind study = StudyKind::Field;
        std::uint64_t seed = 1;
        std::string out_dir;

        // array (field and link studies)
        int num_elements = 16;
        double radius_m = 0.025;
        double carrier_hz = 35e9;

        // field study
        double plane_z_m = 0.1;
        double half_width_m = 0.06;
        int samples_per_axis = 201;
        std::vector<int> modes = {0, 1, 2, 3};
        double lens_z_m = 0.03;
        double lens_focal_m = 0.03;      // collimating: array at the focal plane
        double lens_aperture_m = 0.06;
        double lens_half_width_m = 0.06;
        int lens_samples_per_axis = 101;

        // link study
        double link_distance_m = 1.0;
        std::vector<double> link_offsets_m = {0.0, 0.0025, 0.005, 0.0125};
        std::vector<int> link_modes = {-3, -2, -1, 0, 1, 2, 3};

        // network study
        NetworkConfig net;
        std::vector<int> mdma_mode_counts = {1, 2, 3, 4};
        int fdma_channels = 2;
        SweepAxis axis = SweepAxis::Snr;
        std::vector<double> axis_points = {0, 5, 10, 15, 20, 25, 30, 35, 40};
        int drops = 200;

        bool operator==(const RunConfig &) const = default;
    };

    // Parses and validates a flat JSON object. Unknown keys are rejected by
    // name; every constraint violation names the key. The leakage factor
    // defaults to calibrated_default_kappa() when the document omits it.
    RunConfig parse_config(const std::string &text);

    RunConfig parse_config_file(const std::filesystem::path &path);

    // The fully resolved document; parse_config(resolved_config_json(c))
    // reproduces c exactly.
    std::string resolved_config_json(const RunConfig &config);

    // Executes the configured study, writes all artifacts plus the resolved
    // config echo into config.out_dir, and returns a process exit status
    // (0 on success). Output files are written atomically.
    int run(const RunConfig &config);

    const char *study_name(StudyKind study);
    const char *axis_name(SweepAxis axis);
}

#endif
