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

#include "vortexlink/geometry.hpp"

#include "vortexlink/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace vortexlink
{
    UcaArray::UcaArray(int n, double radius, double carrier)
        : num_elements(n), radius_m(radius), carrier_hz(carrier)
    {
        if (n < 1)
            throw InvalidArgumentError("geometry: num_elements must be >= 1, got " + std::to_string(n));
        if (!(radius > 0.0) || !std::isfinite(radius))
            throw InvalidArgumentError("geometry: radius_m must be positive");
        if (!(carrier > 0.0) || !std::isfinite(carrier))
            throw InvalidArgumentError("geometry: carrier_hz must be positive");
    }

    namespace
    {
        // Rotation taking +z to `n` (unit). Identity when n == +z, so axis-
        // aligned placements stay numerically exact.
        Eigen::Matrix3d rotation_z_to(const Eigen::Vector3d &n)
        {
            const Eigen::Vector3d z(0.0, 0.0, 1.0);
            const Eigen::Vector3d axis = z.cross(n);
            const double s = axis.norm();
            const double c = n.z();
            if (s < 1e-15)
            {
                if (c > 0.0)
                    return Eigen::Matrix3d::Identity();
                Eigen::Matrix3d flip = Eigen::Matrix3d::Identity();
                flip(1, 1) = -1.0;
                flip(2, 2) = -1.0; // half turn about x
                return flip;
            }
            const Eigen::Vector3d u = axis / s;
            Eigen::Matrix3d k;
            k << 0, -u.z(), u.y(),
                u.z(), 0, -u.x(),
                -u.y(), u.x(), 0;
            return Eigen::Matrix3d::Identity() + s * k + (1.0 - c) * (k * k);
        }

        void validate_geometry(const LinkGeometry &g)
        {
            if (!(g.axial_distance_m > 0.0))
                throw InvalidArgumentError("geometry: axial_distance_m must be positive");
            if (g.lateral_offset_m < 0.0)
                throw InvalidArgumentError("geometry: lateral_offset_m must be non-negative");
            if (!(std::abs(g.tilt_rad) < std::numbers::pi / 2.0))
                throw InvalidArgumentError("geometry: |tilt_rad| must be below pi/2");
        }
    }

    std::vector<Eigen::Vector3d> element_positions(const UcaArray &array,
                                                   const Eigen::Vector3d &center,
                                                   const Eigen::Vector3d &normal,
                                                   double rotation_rad)
    {
        if (std::abs(normal.norm() - 1.0) > 1e-9)
            throw InvalidArgumentError("geometry: normal must have unit norm");

        const Eigen::Matrix3d rot = rotation_z_to(normal);
        const int n = array.num_elements;
        std::vector<Eigen::Vector3d> points;
        points.reserve(n);
        for (int i = 0; i < n; ++i)
        {
            const double phi = 2.0 * std::numbers::pi * i / n + rotation_rad;
            const Eigen::Vector3d local(array.radius_m * std::cos(phi),
                                        array.radius_m * std::sin(phi), 0.0);
            points.push_back(center + rot * local);
        }
        return points;
    }

    PlacedLink place_link(const UcaArray &tx, const UcaArray &rx, const LinkGeometry &g)
    {
        validate_geometry(g);

        const Eigen::Vector3d tx_center(0.0, 0.0, 0.0);
        const Eigen::Vector3d tx_normal(0.0, 0.0, 1.0);
        const Eigen::Vector3d rx_center(g.lateral_offset_m, 0.0, g.axial_distance_m);
        const Eigen::Vector3d rx_normal(std::sin(g.tilt_rad), 0.0, std::cos(g.tilt_rad));

        return PlacedLink{tx, rx,
                          element_positions(tx, tx_center, tx_normal, 0.0),
                          element_positions(rx, rx_center, rx_normal, g.rotation_rad)};
    }

    PlacedLink transpose_link(const PlacedLink &link)
    {
        return PlacedLink{link.rx, link.tx, link.rx_positions, link.tx_positions};
    }

    Eigen::MatrixXd pairwise_distances(const PlacedLink &link)
    {
        const auto n_rx = static_cast<Eigen::Index>(link.rx_positions.size());
        const auto n_tx = static_cast<Eigen::Index>(link.tx_positions.size());
        Eigen::MatrixXd d(n_rx, n_tx);
        for (Eigen::Index m = 0; m < n_rx; ++m)
            for (Eigen::Index n = 0; n < n_tx; ++n)
            {
                const double dist = (link.rx_positions[m] - link.tx_positions[n]).norm();
                if (dist <= 0.0)
                    throw DegenerateGeometryError(
                        "geometry: rx element " + std::to_string(m) + " coincides with tx element " +
                        std::to_string(n));
                d(m, n) = dist;
            }
        return d;
    }
}
