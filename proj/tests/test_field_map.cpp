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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vortexlink/errors.hpp"
#include "vortexlink/field_map.hpp"
#include "vortexlink/transceiver.hpp"

#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

using namespace vortexlink;

namespace
{
    // the reference setup used throughout: 16 elements, 25 mm ring, 35 GHz
    const UcaArray kArray(16, 0.025, 35e9);

    std::vector<Eigen::Vector3d> ring_positions()
    {
        return element_positions(kArray, {0, 0, 0}, {0, 0, 1}, 0.0);
    }

    Eigen::VectorXcd mode_excitation(int l)
    {
        ModeExcitation x;
        x.symbols[l] = 1.0;
        return multiplex(x, kArray.num_elements);
    }

    FieldGrid reference_field(int l, double z = 0.1, double hw = 0.06, int samples = 101)
    {
        const auto positions = ring_positions();
        return field_on_plane(positions, kArray.carrier_hz, mode_excitation(l),
                              PlaneSpec(z, hw, samples));
    }
}

TEST_CASE("plane spec is validated")
{
    CHECK_THROWS_AS(PlaneSpec(0.0, 0.06, 101), InvalidArgumentError);
    CHECK_THROWS_AS(PlaneSpec(0.1, -0.06, 101), InvalidArgumentError);
    CHECK_THROWS_AS(PlaneSpec(0.1, 0.06, 16), InvalidArgumentError); // even
    CHECK_THROWS_AS(PlaneSpec(0.1, 0.06, 15), InvalidArgumentError); // too few
    CHECK_NOTHROW(PlaneSpec(0.1, 0.06, 17));
}

TEST_CASE("single element radiates the closed-form spherical wave")
{
    const std::vector<Eigen::Vector3d> element = {{0.003, -0.001, 0.0}};
    Eigen::VectorXcd one(1);
    one << std::complex<double>(1.0, 0.0);
    const PlaneSpec plane(0.05, 0.02, 33);
    const FieldGrid grid = field_on_plane(element, 35e9, one, plane);

    const double lambda = kSpeedOfLight / 35e9;
    for (int iy = 0; iy < grid.samples(); ++iy)
        for (int ix = 0; ix < grid.samples(); ++ix)
        {
            const double r = Eigen::Vector3d(grid.coords_m[ix] - 0.003,
                                             grid.coords_m[iy] + 0.001, 0.05)
                                 .norm();
            const std::complex<double> expected =
                std::polar(lambda / (4.0 * std::numbers::pi * r),
                           -2.0 * std::numbers::pi * r / lambda);
            CHECK(std::abs(grid.values(iy, ix) - expected) < 1e-12);
        }
}

TEST_CASE("plane beam peaks on axis")
{
    const FieldGrid grid = reference_field(0);
    Eigen::Index iy, ix;
    grid.values.cwiseAbs2().maxCoeff(&iy, &ix);
    CHECK(iy == grid.samples() / 2);
    CHECK(ix == grid.samples() / 2);
}

TEST_CASE("vortex beams are hollow on axis")
{
    for (const int l : {1, 2, 3})
    {
        const FieldGrid grid = reference_field(l);
        const int mid = grid.samples() / 2;
        const double center = std::norm(grid.values(mid, mid));
        CHECK(center < 0.01 * grid.values.cwiseAbs2().maxCoeff());
    }
}

TEST_CASE("grid point on an element is degenerate")
{
    const std::vector<Eigen::Vector3d> element = {{0.0, 0.0, 0.05}};
    Eigen::VectorXcd one(1);
    one << std::complex<double>(1.0, 0.0);
    CHECK_THROWS_AS(field_on_plane(element, 35e9, one, PlaneSpec(0.05, 0.02, 33)),
                    DegenerateGeometryError);
}

TEST_CASE("field is linear in the excitation")
{
    const auto positions = ring_positions();
    const PlaneSpec plane(0.1, 0.06, 33);
    const Eigen::VectorXcd e1 = mode_excitation(1);
    const Eigen::VectorXcd e2 = mode_excitation(2);
    const FieldGrid f1 = field_on_plane(positions, kArray.carrier_hz, e1, plane);
    const FieldGrid f2 = field_on_plane(positions, kArray.carrier_hz, e2, plane);
    const FieldGrid fsum = field_on_plane(positions, kArray.carrier_hz, e1 + e2, plane);

    const double scale = fsum.values.cwiseAbs().maxCoeff();
    CHECK((fsum.values - f1.values - f2.values).cwiseAbs().maxCoeff() < 1e-12 * scale);
}

TEST_CASE("ring radius of the plane beam is zero")
{
    CHECK(ring_radius(reference_field(0)) == 0.0);
}

TEST_CASE("ring radius grows with mode order")
{
    const double r1 = ring_radius(reference_field(1));
    const double r2 = ring_radius(reference_field(2));
    const double r3 = ring_radius(reference_field(3));
    CHECK(r1 > 0.0);
    CHECK(r1 < r2);
    CHECK(r2 < r3);
}

TEST_CASE("ring radius grows with distance")
{
    const double r50 = ring_radius(reference_field(1, 0.05, 0.03));
    const double r100 = ring_radius(reference_field(1, 0.10, 0.06));
    const double r200 = ring_radius(reference_field(1, 0.20, 0.12));
    CHECK(r50 < r100);
    CHECK(r100 < r200);
}

TEST_CASE("peak intensity does not grow with mode order")
{
    double prev = reference_field(0).values.cwiseAbs2().maxCoeff();
    for (const int l : {1, 2, 3})
    {
        const double peak = reference_field(l).values.cwiseAbs2().maxCoeff();
        CHECK(peak <= prev * (1.0 + 1e-12));
        prev = peak;
    }
}

TEST_CASE("a painted ring is located to within one cell")
{
    FieldGrid grid;
    const PlaneSpec plane(0.1, 0.03, 61);
    grid.z_m = plane.z_m;
    grid.carrier_hz = 35e9;
    grid.coords_m.resize(61);
    const double step = plane.step_m();
    for (int i = 0; i < 61; ++i)
        grid.coords_m[i] = (i - 30) * step;
    grid.values = Eigen::MatrixXcd::Zero(61, 61);
    for (int iy = 0; iy < 61; ++iy)
        for (int ix = 0; ix < 61; ++ix)
            if (std::abs(std::hypot(grid.coords_m[ix], grid.coords_m[iy]) - 0.010) < step / 2.0)
                grid.values(iy, ix) = 1.0;

    CHECK(std::abs(ring_radius(grid) - 0.010) <= step);
}

TEST_CASE("ring radius of an all-zero grid is an error")
{
    FieldGrid grid;
    grid.z_m = 0.1;
    grid.carrier_hz = 35e9;
    grid.coords_m = {-0.01, 0.0, 0.01};
    grid.values = Eigen::MatrixXcd::Zero(3, 3);
    CHECK_THROWS_AS(ring_radius(grid), EmptyFieldError);
}

TEST_CASE("phase winding equals the mode order")
{
    for (const int l : {-3, 2})
    {
        const FieldGrid grid = reference_field(l);
        CHECK(phase_winding(grid, ring_radius(grid)) == l);
    }
    const FieldGrid plane_beam = reference_field(0);
    CHECK(phase_winding(plane_beam, 0.015) == 0);
}

TEST_CASE("winding is undefined where the field vanishes")
{
    FieldGrid grid;
    grid.z_m = 0.1;
    grid.carrier_hz = 35e9;
    const int n = 41;
    grid.coords_m.resize(n);
    for (int i = 0; i < n; ++i)
        grid.coords_m[i] = (i - n / 2) * 0.001;
    grid.values = Eigen::MatrixXcd::Zero(n, n);
    grid.values(0, 0) = 1.0; // only one corner carries field
    CHECK_THROWS_AS(phase_winding(grid, 0.010), UndefinedPhaseError);
}

TEST_CASE("winding circle must fit inside the grid")
{
    const FieldGrid grid = reference_field(1);
    CHECK_THROWS_AS(phase_winding(grid, 0.2), InvalidArgumentError);
}

TEST_CASE("a degenerate lens reproduces free-space propagation")
{
    // f -> infinity, aperture beyond the grid: the mask is a no-op and the
    // secondary-source sum must reproduce direct propagation
    const auto positions = ring_positions();
    const Eigen::VectorXcd exc = mode_excitation(1);
    const FieldGrid at_lens =
        field_on_plane(positions, kArray.carrier_hz, exc, PlaneSpec(0.03, 0.15, 201));
    const LensSpec lens{0.03, 1e9, 1.0};
    const PlaneSpec out_plane(0.1, 0.03, 41);
    const FieldGrid through_lens = lens_and_propagate(at_lens, lens, out_plane);
    const FieldGrid direct = field_on_plane(positions, kArray.carrier_hz, exc, out_plane);

    const double err = (through_lens.values - direct.values).norm();
    const double ref = direct.values.norm();
    CHECK(err / ref < 0.02);
}

TEST_CASE("the default lens converges a vortex beam")
{
    const auto positions = ring_positions();
    const Eigen::VectorXcd exc = mode_excitation(1);
    const FieldGrid at_lens =
        field_on_plane(positions, kArray.carrier_hz, exc, PlaneSpec(0.03, 0.06, 101));
    const LensSpec lens{0.03, 0.03, 0.06};
    const PlaneSpec out_plane(0.1, 0.06, 101);
    const FieldGrid converged = lens_and_propagate(at_lens, lens, out_plane);
    const FieldGrid unconverged = field_on_plane(positions, kArray.carrier_hz, exc, out_plane);

    CHECK(converged.values.cwiseAbs2().maxCoeff() >
          unconverged.values.cwiseAbs2().maxCoeff());
    CHECK(ring_radius(converged) < ring_radius(unconverged));
}

TEST_CASE("zero field through a lens stays zero")
{
    FieldGrid zero;
    zero.z_m = 0.03;
    zero.carrier_hz = 35e9;
    const int n = 33;
    zero.coords_m.resize(n);
    for (int i = 0; i < n; ++i)
        zero.coords_m[i] = (i - n / 2) * 0.002;
    zero.values = Eigen::MatrixXcd::Zero(n, n);

    const FieldGrid out =
        lens_and_propagate(zero, LensSpec{0.03, 0.03, 0.06}, PlaneSpec(0.1, 0.06, 33));
    CHECK(out.values.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("an under-sampled lens mask is reported with the required resolution")
{
    const auto positions = ring_positions();
    const FieldGrid at_lens = field_on_plane(positions, kArray.carrier_hz, mode_excitation(1),
                                             PlaneSpec(0.03, 0.06, 101));
    const LensSpec tight{0.03, 0.001, 0.06}; // 1 mm focal length
    try
    {
        lens_and_propagate(at_lens, tight, PlaneSpec(0.1, 0.06, 33));
        FAIL("expected SamplingError");
    }
    catch (const SamplingError &e)
    {
        CHECK(e.required_samples_per_axis > 101);
    }
}

TEST_CASE("lens plane mismatch is rejected")
{
    const auto positions = ring_positions();
    const FieldGrid at_wrong_z = field_on_plane(positions, kArray.carrier_hz, mode_excitation(1),
                                                PlaneSpec(0.04, 0.06, 33));
    CHECK_THROWS_AS(lens_and_propagate(at_wrong_z, LensSpec{0.03, 0.03, 0.06},
                                       PlaneSpec(0.1, 0.06, 33)),
                    InvalidArgumentError);
}

TEST_CASE("field CSV has the documented header and full row count")
{
    const FieldGrid grid = reference_field(1, 0.1, 0.02, 17);
    const std::filesystem::path path =
        std::filesystem::temp_directory_path() / "vortexlink_field_test.csv";
    write_field_csv(grid, path);

    std::ifstream in(path);
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    CHECK(header == "x_m,y_m,re,im,intensity,phase_rad");
    int rows = 0;
    for (std::string line; std::getline(in, line);)
        if (!line.empty())
            ++rows;
    CHECK(rows == 17 * 17);
    std::filesystem::remove(path);
}
