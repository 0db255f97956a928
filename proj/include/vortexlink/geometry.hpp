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

#ifndef VORTEXLINK_GEOMETRY_HPP
#define VORTEXLINK_GEOMETRY_HPP

#include <Eigen/Dense>
#include <vector>

namespace vortexlink
{
    constexpr double kSpeedOfLight = 299792458.0; // m/s, exact

    // Uniform circular array: num_elements ideal point elements equally
    // spaced on a ring. Element n sits at azimuth 2*pi*n/N before placement.
    // num_elements == 1 is accepted as the degenerate single-element case
    // used for point-to-point links.
    struct UcaArray
    {
        int num_elements;  // N >= 1
        double radius_m;   // a > 0
        double carrier_hz; // f > 0

        UcaArray(int n, double radius, double carrier); // validates

        double wavelength_m() const { return kSpeedOfLight / carrier_hz; }
    };

    // Relative placement of a receive ring with respect to the transmit
    // ring. The transmit array is always at the origin with boresight +z;
    // all misalignment is applied to the receive side.
    struct LinkGeometry
    {
        double axial_distance_m = 1.0;  // d > 0, along +z
        double lateral_offset_m = 0.0;  // >= 0, along +x
        double tilt_rad = 0.0;          // |tilt| < pi/2, normal tipped toward +x
        double rotation_rad = 0.0;      // receive ring rotation about its own axis
    };

    // A transmit/receive pair with resolved element coordinates.
    struct PlacedLink
    {
        UcaArray tx;
        UcaArray rx;
        std::vector<Eigen::Vector3d> tx_positions;
        std::vector<Eigen::Vector3d> rx_positions;
    };

    // Element coordinates of `array` on the circle of radius a centered at
    // `center`, in the plane orthogonal to `normal`, first element at
    // azimuth `rotation_rad`. `normal` must have unit norm within 1e-9.
    std::vector<Eigen::Vector3d> element_positions(const UcaArray &array,
                                                   const Eigen::Vector3d &center,
                                                   const Eigen::Vector3d &normal,
                                                   double rotation_rad);

    // Places tx at the origin (normal +z, rotation 0) and rx at
    // (lateral_offset, 0, d) with its normal tipped by `tilt` toward +x.
    PlacedLink place_link(const UcaArray &tx, const UcaArray &rx, const LinkGeometry &geometry);

    // Swaps the roles of the two arrays; element coordinates are unchanged.
    PlacedLink transpose_link(const PlacedLink &link);

    // Entry (m, n) is the Euclidean distance from rx element m to tx
    // element n. Coincident elements raise DegenerateGeometryError.
    Eigen::MatrixXd pairwise_distances(const PlacedLink &link);
}

#endif
