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

#ifndef VORTEXLINK_FIELD_MAP_HPP
#define VORTEXLINK_FIELD_MAP_HPP

#include "vortexlink/geometry.hpp"

#include <Eigen/Dense>
#include <complex>
#include <filesystem>
#include <span>
#include <vector>

namespace vortexlink
{
    // Square observation window at axial distance z, sampled on a regular
    // samples x samples grid over [-half_width, half_width] on both axes.
    // samples_per_axis must be odd (the axis point is always sampled) and
    // at least 16, so 17 is the smallest accepted value.
    struct PlaneSpec
    {
        double z_m;
        double half_width_m;
        int samples_per_axis;

        PlaneSpec(double z, double half_width, int samples); // validates
        double step_m() const { return 2.0 * half_width_m / (samples_per_axis - 1); }
    };

    // Complex field samples on one observation plane. values(iy, ix) is the
    // sample at (x = coords_m[ix], y = coords_m[iy], z = z_m).
    struct FieldGrid
    {
        Eigen::MatrixXcd values;
        std::vector<double> coords_m; // shared x/y axis, ascending
        double z_m = 0.0;
        double carrier_hz = 0.0;

        int samples() const { return static_cast<int>(coords_m.size()); }
        double step_m() const { return coords_m[1] - coords_m[0]; }
        double half_width_m() const { return coords_m.back(); }
    };

    // Ideal thin lens: quadratic phase mask inside a hard circular aperture.
    struct LensSpec
    {
        double z_m;               // lens plane, 0 < z_m < observation z
        double focal_length_m;    // > 0
        double aperture_radius_m; // > 0; field is zeroed outside
    };

    // Superposes the spherical wave of every element at every grid point:
    //   E(p) = sum_n excitation_n * lambda/(4 pi r_n) * exp(-i 2 pi r_n / lambda).
    // Grid points are evaluated in parallel; the per-point element sum runs
    // in element order, so results do not depend on the thread count.
    FieldGrid field_on_plane(std::span<const Eigen::Vector3d> elements,
                             double carrier_hz,
                             const Eigen::VectorXcd &excitation,
                             const PlaneSpec &plane);

    // Applies the thin-lens mask exp(+i k r^2 / (2 f)) inside the aperture
    // (zero outside), then re-propagates every lens-plane sample to the
    // output plane as a secondary source with the exact forward spherical
    // kernel (1/2pi) exp(-i k r) (i k + 1/r) dz / r^2, weighted by the
    // sample cell area. The lens grid must resolve the mask: the quadratic
    // phase step between adjacent samples has to stay below pi, otherwise a
    // SamplingError reports the minimum adequate sample count.
    FieldGrid lens_and_propagate(const FieldGrid &field_at_lens,
                                 const LensSpec &lens,
                                 const PlaneSpec &plane);

    // Radius of the maximum of the azimuthally averaged intensity profile,
    // binned at one grid cell width; 0 when the on-axis bin is the maximum.
    double ring_radius(const FieldGrid &grid);

    // Accumulated phase along the circle of the given radius divided by
    // 2 pi, rounded to the nearest integer. Uses 720 bilinear samples. Any
    // sample with |E| below 1e-6 of the grid maximum raises
    // UndefinedPhaseError.
    int phase_winding(const FieldGrid &grid, double circle_radius_m);

    // Bilinear interpolation of the complex field at (x, y); the point must
    // be inside the grid.
    std::complex<double> sample_field(const FieldGrid &grid, double x_m, double y_m);

    // CSV export, header "x_m,y_m,re,im,intensity,phase_rad", row-major
    // (y outer, x inner). Written atomically (temp file + rename).
    void write_field_csv(const FieldGrid &grid, const std::filesystem::path &path);
}

#endif
