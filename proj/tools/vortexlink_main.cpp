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
#include "vortexlink/errors.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace
{
    struct StudyArgs
    {
        std::string config_path;
        std::string out_dir;
        std::uint64_t seed = 0;
        bool seed_given = false;
    };

    void add_study(CLI::App &app, const char *name, const char *desc,
                   vortexlink::StudyKind kind, int &status)
    {
        auto args = std::make_shared<StudyArgs>();
        CLI::App *sub = app.add_subcommand(name, desc);
        sub->add_option("--config", args->config_path, "Path to the run configuration (JSON)")
            ->required();
        sub->add_option("--out", args->out_dir, "Output directory for CSV artifacts")->required();
        sub->add_option("--seed", args->seed, "Master seed override")
            ->each([args](const std::string &) { args->seed_given = true; });

        sub->callback([args, kind, &status] {
            vortexlink::RunConfig cfg = vortexlink::parse_config_file(args->config_path);
            if (cfg.study != kind)
                throw vortexlink::ConfigError(
                    std::string("config: key 'study' is '") + vortexlink::study_name(cfg.study) +
                    "' but the '" + vortexlink::study_name(kind) + "' subcommand was invoked");
            cfg.out_dir = args->out_dir;
            if (args->seed_given)
                cfg.seed = args->seed;
            status = vortexlink::run(cfg);
        });
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"vortexlink: vortex-beam link and network studies over uniform circular arrays"};
    app.require_subcommand(1);

    int status = 0;
    add_study(app, "field", "Radiated field maps, lens convergence, per-mode summary",
              vortexlink::StudyKind::Field, status);
    add_study(app, "link", "Mode-leakage matrix versus lateral misalignment",
              vortexlink::StudyKind::Link, status);
    add_study(app, "network", "Mdma / Fdma spectrum-efficiency sweeps",
              vortexlink::StudyKind::Network, status);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        return app.exit(e);
    }
    catch (const vortexlink::ConfigError &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const vortexlink::Error &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return status;
}
