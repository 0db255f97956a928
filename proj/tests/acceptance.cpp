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
//
// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the process exit status is the number of failed criteria.

#include "vortexlink/channel.hpp"
#include "vortexlink/config.hpp"
#include "vortexlink/field_map.hpp"
#include "vortexlink/geometry.hpp"
#include "vortexlink/network.hpp"
#include "vortexlink/rng.hpp"
#include "vortexlink/transceiver.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace vortexlink;

namespace
{
    struct Check
    {
        std::string name;
        double time_limit_s;
        std::function<bool(std::string &)> fn;
    };

    const UcaArray kArray(16, 0.025, 35e9);

    Eigen::VectorXcd excitation_of(int l)
    {
        ModeExcitation x;
        x.symbols[l] = 1.0;
        return multiplex(x, kArray.num_elements);
    }

    double offdiag_power_ratio(const ModeChannel &mc)
    {
        double diag = 0.0, off = 0.0;
        for (Eigen::Index r = 0; r < mc.entries.rows(); ++r)
            for (Eigen::Index t = 0; t < mc.entries.cols(); ++t)
                (r == t ? diag : off) += std::norm(mc.entries(r, t));
        return off / diag;
    }

    std::complex<double> spectrum_by_quadrature(double l_frac, int m)
    {
        const int panels = 16384;
        const double h = 2.0 * std::numbers::pi / panels;
        const auto f = [&](double phi) { return std::polar(1.0, (l_frac - m) * phi); };
        std::complex<double> acc = f(0.0) + f(2.0 * std::numbers::pi);
        for (int i = 1; i < panels; ++i)
            acc += f(i * h) * (i % 2 == 1 ? 4.0 : 2.0);
        return acc * (h / 3.0) / (2.0 * std::numbers::pi);
    }

    std::string slurp(const std::filesystem::path &p)
    {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }

    // ---- criterion bodies -------------------------------------------------

    bool mode_orthogonality(std::string &detail)
    {
        double worst = 0.0;
        for (const int n : {4, 8, 16, 64})
            for (int a = -(n / 2) + 1; a <= n / 2; ++a)
                for (int b = -(n / 2) + 1; b <= n / 2; ++b)
                {
                    const double ip = std::abs(mode_weights(a, n).dot(mode_weights(b, n)));
                    worst = std::max(worst, a == b ? std::abs(ip - 1.0) : ip);
                }
        detail = "worst deviation " + std::to_string(worst);
        return worst < 1e-12;
    }

    bool circulant_diagonalization(std::string &detail)
    {
        LinkGeometry g;
        g.axial_distance_m = 1.0;
        const ChannelMatrix h = los_channel(place_link(kArray, kArray, g));
        std::vector<int> modes;
        for (int l = -7; l <= 8; ++l)
            modes.push_back(l);
        const double ratio = offdiag_power_ratio(effective_mode_channel(h, modes, modes));
        const double db = 10.0 * std::log10(ratio);
        detail = "off-diagonal power " + std::to_string(db) + " dB";
        return db < -100.0;
    }

    bool misalignment_leakage(std::string &detail)
    {
        const std::vector<int> modes = {-3, -2, -1, 0, 1, 2, 3};
        std::vector<double> leakage;
        for (const double frac : {0.0, 0.1, 0.2, 0.5})
        {
            LinkGeometry g;
            g.axial_distance_m = 1.0;
            g.lateral_offset_m = frac * kArray.radius_m;
            const ChannelMatrix h = los_channel(place_link(kArray, kArray, g));
            const ModeChannel mc = effective_mode_channel(h, modes, modes);
            double off = 0.0;
            for (Eigen::Index r = 0; r < mc.entries.rows(); ++r)
                for (Eigen::Index t = 0; t < mc.entries.cols(); ++t)
                    if (r != t)
                        off += std::norm(mc.entries(r, t));
            leakage.push_back(off);
        }
        std::ostringstream os;
        os << "leakage powers";
        for (const double v : leakage)
            os << ' ' << v;
        detail = os.str();
        for (std::size_t i = 1; i < leakage.size(); ++i)
            if (!(leakage[i] > leakage[i - 1]))
                return false;
        return true;
    }

    bool fractional_spectrum(std::string &detail)
    {
        RngStream stream(404);
        std::vector<int> modes;
        for (int m = -5; m <= 5; ++m)
            modes.push_back(m);

        double worst = 0.0;
        for (int trial = 0; trial < 100; ++trial)
        {
            const double l_frac = stream.uniform(-5.0, 5.0);
            const auto c = fractional_mode_spectrum(l_frac, modes);
            for (const int m : modes)
                worst = std::max(worst, std::abs(c.at(m) - spectrum_by_quadrature(l_frac, m)));
        }
        const double c0 = std::abs(fractional_mode_spectrum(0.5, {0}).at(0));
        const double c0_err = std::abs(c0 - 2.0 / std::numbers::pi);
        detail = "worst quadrature gap " + std::to_string(worst) + ", |c0| error " +
                 std::to_string(c0_err);
        return worst < 1e-9 && c0_err < 1e-9;
    }

    bool field_physics(std::string &detail)
    {
        const auto positions = element_positions(kArray, {0, 0, 0}, {0, 0, 1}, 0.0);
        const PlaneSpec plane(0.1, 0.06, 201);

        std::map<int, double> radii, peaks, centers;
        bool windings_ok = true;
        for (int l = -3; l <= 3; ++l)
        {
            const FieldGrid grid =
                field_on_plane(positions, kArray.carrier_hz, excitation_of(l), plane);
            const double radius = ring_radius(grid);
            radii[l] = radius;
            peaks[l] = grid.values.cwiseAbs2().maxCoeff();
            const int mid = grid.samples() / 2;
            centers[l] = std::norm(grid.values(mid, mid));
            const int winding = phase_winding(grid, radius > 0.0 ? radius : 0.015);
            if (winding != l)
                windings_ok = false;
        }

        const bool rings_ok = radii[1] < radii[2] && radii[2] < radii[3] && radii[1] > 0.0;
        bool hollow_ok = true;
        for (const int l : {1, 2, 3})
            if (centers[l] >= 0.01 * peaks[l])
                hollow_ok = false;
        const bool peaks_ok =
            peaks[0] >= peaks[1] && peaks[1] >= peaks[2] && peaks[2] >= peaks[3];

        std::ostringstream os;
        os << "rings(mm) " << radii[1] * 1e3 << '/' << radii[2] * 1e3 << '/' << radii[3] * 1e3
           << (windings_ok ? ", windings ok" : ", windings WRONG")
           << (hollow_ok ? ", hollow ok" : ", hollow WRONG")
           << (peaks_ok ? ", peaks ok" : ", peaks WRONG");
        detail = os.str();
        return windings_ok && rings_ok && hollow_ok && peaks_ok;
    }

    bool lens_convergence(std::string &detail)
    {
        const auto positions = element_positions(kArray, {0, 0, 0}, {0, 0, 1}, 0.0);
        const PlaneSpec out_plane(0.1, 0.06, 201);
        const PlaneSpec lens_plane(0.03, 0.06, 101);
        const LensSpec lens{0.03, 0.03, 0.06};

        std::ostringstream os;
        bool ok = true;
        for (const int l : {1, 2, 3})
        {
            const Eigen::VectorXcd exc = excitation_of(l);
            const FieldGrid unconverged =
                field_on_plane(positions, kArray.carrier_hz, exc, out_plane);
            const FieldGrid at_lens =
                field_on_plane(positions, kArray.carrier_hz, exc, lens_plane);
            const FieldGrid converged = lens_and_propagate(at_lens, lens, out_plane);

            const double peak_u = unconverged.values.cwiseAbs2().maxCoeff();
            const double peak_c = converged.values.cwiseAbs2().maxCoeff();
            const double ring_u = ring_radius(unconverged);
            const double ring_c = ring_radius(converged);
            os << "l=" << l << " peak x" << peak_c / peak_u << " ring " << ring_c * 1e3 << "mm vs "
               << ring_u * 1e3 << "mm; ";
            if (!(peak_c > peak_u && ring_c < ring_u))
                ok = false;
        }
        detail = os.str();
        return ok;
    }

    bool network_trends(std::string &detail)
    {
        const std::uint64_t seed = 1;
        const int drops = 200;
        NetworkConfig config;

        const std::vector<double> snrs = {0, 5, 10, 15, 20, 25, 30, 35, 40};
        std::map<int, SweepResult> mdma;
        for (const int m : {1, 2, 3, 4})
            mdma[m] = run_sweep(config, Scheme::Mdma, m, SweepAxis::Snr, snrs, drops, seed);
        const SweepResult fdma =
            run_sweep(config, Scheme::Fdma, 2, SweepAxis::Snr, snrs, drops, seed);

        bool ordering_ok = true;
        for (std::size_t p = 0; p < snrs.size(); ++p)
            for (const int m : {1, 2, 3})
                if (mdma[m].points[p].mean_se > mdma[m + 1].points[p].mean_se)
                    ordering_ok = false;

        bool beats_fdma = true;
        for (std::size_t p = 0; p < snrs.size(); ++p)
            if (snrs[p] >= 10.0)
                for (const int m : {2, 3, 4})
                    if (!(mdma[m].points[p].mean_se > fdma.points[p].mean_se))
                        beats_fdma = false;

        const auto slope = [&](const SweepResult &r, std::size_t lo, std::size_t hi) {
            return (r.points[hi].mean_se - r.points[lo].mean_se) /
                   (snrs[hi] - snrs[lo]);
        };
        bool ceiling_ok = true;
        for (const int m : {1, 2, 3, 4})
            if (!(slope(mdma[m], 6, 8) < slope(mdma[m], 0, 2)))
                ceiling_ok = false;
        if (!(slope(fdma, 6, 8) < slope(fdma, 0, 2)))
            ceiling_ok = false;

        const std::vector<double> densities = {1.0, 1.2};
        const SweepResult d1 =
            run_sweep(config, Scheme::Mdma, 1, SweepAxis::Density, densities, drops, seed);
        const SweepResult d4 =
            run_sweep(config, Scheme::Mdma, 4, SweepAxis::Density, densities, drops, seed);
        const double rel_gap =
            std::abs(d1.points[1].mean_se - d1.points[0].mean_se) / d1.points[0].mean_se;
        const bool saturation_ok = rel_gap < 0.05;
        const double mode_gain = d4.points[1].mean_se - d1.points[1].mean_se;
        const double ci_sum = d4.points[1].ci95_half + d1.points[1].ci95_half;
        const bool mode_gain_ok = mode_gain > ci_sum;

        std::ostringstream os;
        os << (ordering_ok ? "ordering ok" : "ordering WRONG") << ", "
           << (beats_fdma ? "fdma beaten" : "fdma NOT beaten") << ", "
           << (ceiling_ok ? "ceiling ok" : "ceiling WRONG") << ", density gap "
           << rel_gap * 100.0 << "%, 4-vs-1 gain " << mode_gain << " vs CI " << ci_sum;
        detail = os.str();
        return ordering_ok && beats_fdma && ceiling_ok && saturation_ok && mode_gain_ok;
    }

    bool determinism(std::string &detail)
    {
        namespace fs = std::filesystem;
        const fs::path base = fs::temp_directory_path() / "vortexlink_acceptance";
        fs::remove_all(base);

        const std::string field_doc =
            R"({"study":"field","num_elements":8,"modes":[0,1],"samples_per_axis":33,)"
            R"("lens_half_width_m":0.03,"lens_samples_per_axis":33,"seed":3})";
        const std::string link_doc =
            R"({"study":"link","num_elements":8,"link_modes":[-2,-1,0,1,2],)"
            R"("link_offsets_m":[0.0,0.005],"seed":3})";
        const std::string network_doc =
            R"({"study":"network","drops":30,"axis_points":[10,20],)"
            R"("mdma_mode_counts":[1,2],"seed":3})";

        const auto run_into = [&](const std::string &doc, const fs::path &dir,
                                  const char *threads) {
            setenv("VORTEXLINK_THREADS", threads, 1);
            RunConfig cfg = parse_config(doc);
            cfg.out_dir = dir.string();
            run(cfg);
        };

        bool ok = true;
        std::ostringstream os;
        const std::vector<std::pair<std::string, std::string>> studies = {
            {"field", field_doc}, {"link", link_doc}, {"network", network_doc}};
        for (const auto &[name, doc] : studies)
        {
            const fs::path a = base / (name + "_a");
            const fs::path b = base / (name + "_b");
            run_into(doc, a, "1");
            run_into(doc, b, "3"); // different thread count must not matter
            int csv_count = 0;
            for (const auto &entry : fs::directory_iterator(a))
            {
                if (entry.path().extension() != ".csv")
                    continue;
                ++csv_count;
                const fs::path other = b / entry.path().filename();
                if (!fs::exists(other) || slurp(entry.path()) != slurp(other))
                {
                    ok = false;
                    os << name << ":" << entry.path().filename().string() << " differs ";
                }
            }
            if (csv_count == 0)
            {
                ok = false;
                os << name << ": no CSV artifacts ";
            }
        }
        unsetenv("VORTEXLINK_THREADS");
        fs::remove_all(base);
        detail = ok ? "all artifacts byte-identical across reruns and thread counts"
                    : os.str();
        return ok;
    }
}

int main()
{
    const std::vector<Check> checks = {
        {"mode orthogonality over N in {4,8,16,64}", 1.0, mode_orthogonality},
        {"circulant diagonalization below -100 dB", 1.0, circulant_diagonalization},
        {"misalignment leakage strictly increasing", 5.0, misalignment_leakage},
        {"fractional-mode spectrum vs quadrature", 60.0, fractional_spectrum},
        {"field physics: winding, hollow, rings, peaks", 30.0, field_physics},
        {"lens convergence raises peaks and shrinks rings", 60.0, lens_convergence},
        {"network trends: ordering, fdma, ceiling, density", 300.0, network_trends},
        {"byte-identical reruns across thread counts", 120.0, determinism},
    };

    int failures = 0;
    for (std::size_t i = 0; i < checks.size(); ++i)
    {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try
        {
            ok = checks[i].fn(detail);
        }
        catch (const std::exception &e)
        {
            detail = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > checks[i].time_limit_s)
        {
            ok = false;
            detail += " [over time budget]";
        }
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << checks[i].name
                  << " (" << elapsed << " s) - " << detail << "\n";
        if (!ok)
            ++failures;
    }
    return failures;
}
