// SPDX-License-Identifier: Apache-2.0
//
// caustic-beam: near-field caustic beam synthesis and secrecy evaluation
// Copyright (C) 2026 The caustic-beam authors
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
#include <string_view>

namespace caustic {

enum class Errc {
    InvalidArgument,
    PointInsideDisk,
    DegenerateSegment,
    HorizontalTangent,
    CoincidentPoints,
    InsideShadow,
    UnsupportedGeometry,
    EmptyRegion,
};

std::string_view to_string(Errc code) noexcept;

// Single exception type for the library; callers dispatch on code().
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string &what) : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

inline std::string_view to_string(Errc code) noexcept
{
    switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::PointInsideDisk: return "PointInsideDisk";
    case Errc::DegenerateSegment: return "DegenerateSegment";
    case Errc::HorizontalTangent: return "HorizontalTangent";
    case Errc::CoincidentPoints: return "CoincidentPoints";
    case Errc::InsideShadow: return "InsideShadow";
    case Errc::UnsupportedGeometry: return "UnsupportedGeometry";
    case Errc::EmptyRegion: return "EmptyRegion";
    }
    return "Unknown";
}

} // namespace caustic
