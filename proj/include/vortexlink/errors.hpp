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

#ifndef VORTEXLINK_ERRORS_HPP
#define VORTEXLINK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vortexlink
{
    // Base class for all errors raised by the library. Messages are prefixed
    // with the module that raised them, e.g. "geometry: ...".
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // A caller-supplied value violates a documented precondition.
    class InvalidArgumentError : public Error
    {
    public:
        using Error::Error;
    };

    // Two elements coincide or a grid point sits on a source.
    class DegenerateGeometryError : public Error
    {
    public:
        using Error::Error;
    };

    // Input is outside the validity region of the physical model.
    class ModelDomainError : public Error
    {
    public:
        using Error::Error;
    };

    // A grid is too coarse for the phase it has to represent. The message
    // names the minimum number of samples per axis that would be adequate.
    class SamplingError : public Error
    {
    public:
        SamplingError(const std::string &msg, int required_samples)
            : Error(msg), required_samples_per_axis(required_samples) {}
        int required_samples_per_axis;
    };

    // Operation on a grid whose values are all zero.
    class EmptyFieldError : public Error
    {
    public:
        using Error::Error;
    };

    // Field magnitude too small to carry a meaningful phase.
    class UndefinedPhaseError : public Error
    {
    public:
        using Error::Error;
    };

    // Configuration document is malformed or violates a constraint.
    // Messages name the offending key.
    class ConfigError : public Error
    {
    public:
        using Error::Error;
    };

    // Output files could not be written.
    class IoError : public Error
    {
    public:
        using Error::Error;
    };
}

#endif
