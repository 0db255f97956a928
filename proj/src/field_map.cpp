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

#include "vortexlink/field_map.hpp"

#include "vortexlink/errors.hpp"
#include "vortexlink/io.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

namespace vortexlink
{
    namespace
    {
        // Runs fn(row) for every row on worker_count() threads. Rows write
        // disjoint output, so scheduling cannot change any result bit.
        template <typename Fn>
        void parallel_rows(int rows, Fn &&fn)
        {
            const int workers = std::min(worker_count(), rows);
            if (workers <= 1)
            {
                for (int r = 0; r < rows; ++r)
                    fn(r);
                return;
            }
            std::atomic<int> next{0};
            std::vector<std::thread> pool;
            pool.reserve(workers);
            for (int w = 0; w < workers; ++w)
                pool.emplace_back([&] {
                    for (int r = next.fetch_add(1); r < rows; r = next.fetch_add(1))
                        fn(r);
                });
            for (auto &t : pool)
                t.join();
        }

        std::vector<double> grid_axis(const PlaneSpec &plane)
        {
            std::vector<double> coords(plane.samples_per_axis);
            const double step = plane.step_m();
            const int mid = (plane.samples_per_axis - 1) / 2;
            for (int i = 0; i < plane.samples_per_axis; ++i)
                coords[i] = (i - mid) * step; // symmetric, axis point exact
            return coords;
        }
    }

    PlaneSpec::PlaneSpec(double z, double half_width, int samples)
        : z_m(z), half_width_m(half_width), samples_per_axis(samples)
    {
        if (!(z > 0.0))
            throw InvalidArgumentError("field: plane z_m must be positive");
        if (!(half_width > 0.0))
            throw InvalidArgumentError("field: plane half_width_m must be positive");
        if (samples < 16 || samples % 2 == 0)
            throw InvalidArgumentError(
                "field: samples_per_axis must be odd and >= 16, got " + std::to_string(samples));
    }

    FieldGrid field_on_plane(std::span<const Eigen::Vector3d> elements,
                             double carrier_hz,
                             const Eigen::VectorXcd &excitation,
                             const PlaneSpec &plane)
    {
        if (static_cast<std::size_t>(excitation.size()) != elements.size())
            throw InvalidArgumentError("field: excitation length must match element count");
        if (!(carrier_hz > 0.0))
            throw InvalidArgumentError("field: carrier_hz must be positive");

        const double lambda = kSpeedOfLight / carrier_hz;
        const double k = 2.0 * std::numbers::pi / lambda;
        const double amp_scale = lambda / (4.0 * std::numbers::pi);

        FieldGrid grid;
        grid.coords_m = grid_axis(plane);
        grid.z_m = plane.z_m;
        grid.carrier_hz = carrier_hz;
        grid.values.resize(plane.samples_per_axis, plane.samples_per_axis);

        const int n = plane.samples_per_axis;
        std::atomic<bool> degenerate{false};
        parallel_rows(n, [&](int iy) {
            const double y = grid.coords_m[iy];
            for (int ix = 0; ix < n; ++ix)
            {
                const double x = grid.coords_m[ix];
                std::complex<double> acc = 0.0;
                for (std::size_t e = 0; e < elements.size(); ++e)
                {
                    const double dx = x - elements[e].x();
                    const double dy = y - elements[e].y();
                    const double dz = plane.z_m - elements[e].z();
                    const double r = std::sqrt(dx * dx + dy * dy + dz * dz);
                    if (r <= 0.0)
                    {
                        degenerate.store(true, std::memory_order_relaxed);
                        return;
                    }
                    acc += excitation(static_cast<Eigen::Index>(e)) *
                           std::polar(amp_scale / r, -k * r);
                }
                grid.values(iy, ix) = acc;
            }
        });
        if (degenerate.load())
            throw DegenerateGeometryError("field: a grid point coincides with an element");
        return grid;
    }

    FieldGrid lens_and_propagate(const FieldGrid &field_at_lens,
                                 const LensSpec &lens,
                                 const PlaneSpec &plane)
    {
        if (std::abs(field_at_lens.z_m - lens.z_m) > 1e-12)
            throw InvalidArgumentError("field: input grid is not sampled at the lens plane");
        if (!(lens.z_m > 0.0) || !(plane.z_m > lens.z_m))
            throw InvalidArgumentError("field: need 0 < lens z < observation z");
        if (!(lens.focal_length_m > 0.0))
            throw InvalidArgumentError("field: focal_length_m must be positive");
        if (!(lens.aperture_radius_m > 0.0))
            throw InvalidArgumentError("field: aperture_radius_m must be positive");

        const double lambda = kSpeedOfLight / field_at_lens.carrier_hz;
        const double k = 2.0 * std::numbers::pi / lambda;
        const double step = field_at_lens.step_m();

        // Mask phase gradient is k r / f; require a step below pi at the
        // outermost illuminated radius.
        const double r_max =
            std::min(lens.aperture_radius_m, std::numbers::sqrt2 * field_at_lens.half_width_m());
        const double max_step = std::numbers::pi * lens.focal_length_m / (k * r_max);
        if (step >= max_step)
        {
            const int required =
                static_cast<int>(std::ceil(2.0 * field_at_lens.half_width_m() / max_step)) + 1;
            throw SamplingError(
                "field: lens grid too coarse for the quadratic mask, need at least " +
                    std::to_string(required) + " samples per axis",
                required);
        }

        // Masked lens-plane samples become secondary sources. Entries cut
        // by the aperture contribute nothing and are dropped up front.
        struct Source
        {
            double x, y;
            std::complex<double> weight;
        };
        const int n_in = field_at_lens.samples();
        const double cell_area = step * step;
        std::vector<Source> sources;
        sources.reserve(static_cast<std::size_t>(n_in) * n_in);
        for (int iy = 0; iy < n_in; ++iy)
            for (int ix = 0; ix < n_in; ++ix)
            {
                const double x = field_at_lens.coords_m[ix];
                const double y = field_at_lens.coords_m[iy];
                const double r2 = x * x + y * y;
                if (r2 > lens.aperture_radius_m * lens.aperture_radius_m)
                    continue;
                const std::complex<double> v =
                    field_at_lens.values(iy, ix) * std::polar(1.0, k * r2 / (2.0 * lens.focal_length_m));
                if (v == 0.0)
                    continue;
                sources.push_back({x, y, v * cell_area / (2.0 * std::numbers::pi)});
            }

        FieldGrid out;
        out.coords_m = grid_axis(plane);
        out.z_m = plane.z_m;
        out.carrier_hz = field_at_lens.carrier_hz;
        out.values.resize(plane.samples_per_axis, plane.samples_per_axis);

        const double dz = plane.z_m - lens.z_m;
        const int n_out = plane.samples_per_axis;
        parallel_rows(n_out, [&](int iy) {
            const double y = out.coords_m[iy];
            for (int ix = 0; ix < n_out; ++ix)
            {
                const double x = out.coords_m[ix];
                std::complex<double> acc = 0.0;
                for (const Source &s : sources)
                {
                    const double dx = x - s.x;
                    const double dy = y - s.y;
                    const double r2 = dx * dx + dy * dy + dz * dz;
                    const double r = std::sqrt(r2);
                    // exact forward spherical kernel (ik + 1/r) dz / r^2
                    const std::complex<double> kern =
                        std::polar(dz / r2, -k * r) * std::complex<double>(1.0 / r, k);
                    acc += s.weight * kern;
                }
                out.values(iy, ix) = acc;
            }
        });
        return out;
    }

    double ring_radius(const FieldGrid &grid)
    {
        const int n = grid.samples();
        const double step = grid.step_m();
        if (grid.values.cwiseAbs().maxCoeff() == 0.0)
            throw EmptyFieldError("field: ring radius of an all-zero grid");

        // Azimuthal average in rings one cell wide. Bins past the grid
        // half-width only have corner coverage and are excluded.
        const int n_bins = (n - 1) / 2 + 1;
        std::vector<double> power(n_bins, 0.0);
        std::vector<int> count(n_bins, 0);
        for (int iy = 0; iy < n; ++iy)
            for (int ix = 0; ix < n; ++ix)
            {
                const double r = std::hypot(grid.coords_m[ix], grid.coords_m[iy]);
                const int bin = static_cast<int>(std::llround(r / step));
                if (bin >= n_bins)
                    continue;
                power[bin] += std::norm(grid.values(iy, ix));
                ++count[bin];
            }

        int best = 0;
        double best_avg = -1.0;
        for (int b = 0; b < n_bins; ++b)
        {
            if (count[b] == 0)
                continue;
            const double avg = power[b] / count[b];
            if (avg > best_avg)
            {
                best_avg = avg;
                best = b;
            }
        }
        return best * step;
    }

    std::complex<double> sample_field(const FieldGrid &grid, double x_m, double y_m)
    {
        const int n = grid.samples();
        const double x0 = grid.coords_m.front();
        const double step = grid.step_m();
        const double fx = (x_m - x0) / step;
        const double fy = (y_m - x0) / step;
        if (fx < 0.0 || fy < 0.0 || fx > n - 1 || fy > n - 1)
            throw InvalidArgumentError("field: sample point outside the grid");

        const int ix = std::min(static_cast<int>(fx), n - 2);
        const int iy = std::min(static_cast<int>(fy), n - 2);
        const double tx = fx - ix;
        const double ty = fy - iy;
        return (1.0 - ty) * ((1.0 - tx) * grid.values(iy, ix) + tx * grid.values(iy, ix + 1)) +
               ty * ((1.0 - tx) * grid.values(iy + 1, ix) + tx * grid.values(iy + 1, ix + 1));
    }

    int phase_winding(const FieldGrid &grid, double circle_radius_m)
    {
        constexpr int kSamples = 720;
        if (!(circle_radius_m > 0.0) || circle_radius_m > grid.half_width_m())
            throw InvalidArgumentError("field: winding circle must fit inside the grid");

        const double floor_mag = 1e-6 * grid.values.cwiseAbs().maxCoeff();
        if (floor_mag == 0.0)
            throw EmptyFieldError("field: winding of an all-zero grid");

        std::vector<double> phases(kSamples);
        for (int i = 0; i < kSamples; ++i)
        {
            const double theta = 2.0 * std::numbers::pi * i / kSamples;
            const std::complex<double> v = sample_field(grid, circle_radius_m * std::cos(theta),
                                                        circle_radius_m * std::sin(theta));
            if (std::abs(v) < floor_mag)
                throw UndefinedPhaseError(
                    "field: field magnitude on the winding circle below 1e-6 of the grid maximum");
            phases[i] = std::arg(v);
        }

        double total = 0.0;
        for (int i = 0; i < kSamples; ++i)
        {
            double d = phases[(i + 1) % kSamples] - phases[i];
            d = std::remainder(d, 2.0 * std::numbers::pi);
            total += d;
        }
        return static_cast<int>(std::llround(total / (2.0 * std::numbers::pi)));
    }

    void write_field_csv(const FieldGrid &grid, const std::filesystem::path &path)
    {
        std::string csv = "x_m,y_m,re,im,intensity,phase_rad\n";
        const int n = grid.samples();
        csv.reserve(static_cast<std::size_t>(n) * n * 64);
        for (int iy = 0; iy < n; ++iy)
            for (int ix = 0; ix < n; ++ix)
            {
                const std::complex<double> v = grid.values(iy, ix);
                csv += format_double(grid.coords_m[ix]);
                csv += ',';
                csv += format_double(grid.coords_m[iy]);
                csv += ',';
                csv += format_double(v.real());
                csv += ',';
                csv += format_double(v.imag());
                csv += ',';
                csv += format_double(std::norm(v));
                csv += ',';
                csv += format_double(std::arg(v));
                csv += '\n';
            }
        atomic_write_text(path, csv);
    }
}
