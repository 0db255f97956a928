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

#ifndef VORTEXLINK_IO_HPP
#define VORTEXLINK_IO_HPP

#include <filesystem>
#include <string>

namespace vortexlink
{
    // Writes `content` to a temporary sibling file and renames it into
    // place, so readers never observe a partial file. Raises IoError.
    void atomic_write_text(const std::filesystem::path &path, const std::string &content);

    // Shortest round-trip decimal form of a double ("%.17g" fallback); used
    // by every CSV writer so reruns are byte-identical.
    std::string format_double(double value);

    // Worker count for data-parallel grid loops: VORTEXLINK_THREADS if set
    // and positive, otherwise the hardware concurrency.
    int worker_count();
}

#endif
