// SPDX-License-Identifier: Apache-2.0
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

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace skyshield {

// Base for every error the library raises. Each subclass names one failure
// mode so callers (and tests) can catch precisely what they expect.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define SKYSHIELD_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                        \
    public:                                                            \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

SKYSHIELD_DEFINE_ERROR(CoincidentNodes);
SKYSHIELD_DEFINE_ERROR(VerticalLink);
SKYSHIELD_DEFINE_ERROR(NonPositiveLinear);
SKYSHIELD_DEFINE_ERROR(BelowReferenceDistance);
SKYSHIELD_DEFINE_ERROR(NonPositiveFade);
SKYSHIELD_DEFINE_ERROR(ZeroChannel);
SKYSHIELD_DEFINE_ERROR(DegenerateGeometry);
SKYSHIELD_DEFINE_ERROR(DimensionMismatch);
SKYSHIELD_DEFINE_ERROR(EmptyGrid);
SKYSHIELD_DEFINE_ERROR(InvalidPosition);

#undef SKYSHIELD_DEFINE_ERROR

// Raised by config loading and validation. `field` is the dotted path of the
// offending key so the CLI can name it.
class ConfigError : public Error {
public:
    ConfigError(std::string field, const std::string& message)
        : Error("ConfigError: " + field + ": " + message), field_(std::move(field))
    {
    }

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

} // namespace skyshield
