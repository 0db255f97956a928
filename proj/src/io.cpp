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

#include "vortexlink/io.hpp"

#include "vortexlink/errors.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <system_error>
#include <thread>

namespace vortexlink
{
    void atomic_write_text(const std::filesystem::path &path, const std::string &content)
    {
        const std::filesystem::path tmp = path.string() + ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out)
                throw IoError("io: cannot open '" + tmp.string() + "' for writing");
            out.write(content.data(), static_cast<std::streamsize>(content.size()));
            out.flush();
            if (!out)
                throw IoError("io: short write to '" + tmp.string() + "'");
        }
        std::error_code ec;
        std::filesystem::rename(tmp, path, ec);
        if (ec)
            throw IoError("io: cannot rename '" + tmp.string() + "' to '" + path.string() +
                          "': " + ec.message());
    }

    std::string format_double(double value)
    {
        char buf[64];
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
        if (ec != std::errc{})
        {
            std::snprintf(buf, sizeof(buf), "%.17g", value);
            return buf;
        }
        return std::string(buf, ptr);
    }

    int worker_count()
    {
        if (const char *env = std::getenv("VORTEXLINK_THREADS"))
        {
            const int n = std::atoi(env);
            if (n > 0)
                return n;
        }
        const unsigned hw = std::thread::hardware_concurrency();
        return hw > 0 ? static_cast<int>(hw) : 1;
    }
}
