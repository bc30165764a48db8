// SPDX-License-Identifier: Apache-2.0
//
// ivchan - statistical modeling of in vivo wireless channels at 915 MHz
// Copyright (C) 2026 the ivchan authors
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

#ifndef IVCHAN_BODY_HPP
#define IVCHAN_BODY_HPP

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "ivchan/errors.hpp"

namespace ivchan
{

// Torso areas of the measurement campaign: four anatomical subregions,
// four sides (aggregations of the 16 measurement angles), and the overall
// torso aggregate.
enum class BodyArea
{
    Region1,
    Region2,
    Region3,
    Region4,
    Anterior,
    Posterior,
    LeftLateral,
    RightLateral,
    OverallTorso,
};

// Receiver placement relative to the body surface: Near = 5 cm, Far = 30 cm.
enum class FieldZone
{
    Near,
    Far,
};

inline constexpr std::array<BodyArea, 9> all_body_areas = {
    BodyArea::Region1,   BodyArea::Region2,     BodyArea::Region3,
    BodyArea::Region4,   BodyArea::Anterior,    BodyArea::Posterior,
    BodyArea::LeftLateral, BodyArea::RightLateral, BodyArea::OverallTorso,
};

inline constexpr std::array<FieldZone, 2> all_field_zones = {FieldZone::Near, FieldZone::Far};

inline constexpr std::array<BodyArea, 4> all_regions = {
    BodyArea::Region1, BodyArea::Region2, BodyArea::Region3, BodyArea::Region4};

inline constexpr std::array<BodyArea, 4> all_sides = {
    BodyArea::Anterior, BodyArea::Posterior, BodyArea::LeftLateral, BodyArea::RightLateral};

constexpr bool is_region(BodyArea area)
{
    return area == BodyArea::Region1 || area == BodyArea::Region2 || area == BodyArea::Region3 ||
           area == BodyArea::Region4;
}

constexpr bool is_side(BodyArea area)
{
    return area == BodyArea::Anterior || area == BodyArea::Posterior ||
           area == BodyArea::LeftLateral || area == BodyArea::RightLateral;
}

constexpr std::string_view to_string(BodyArea area)
{
    switch (area) {
    case BodyArea::Region1: return "Region1";
    case BodyArea::Region2: return "Region2";
    case BodyArea::Region3: return "Region3";
    case BodyArea::Region4: return "Region4";
    case BodyArea::Anterior: return "Anterior";
    case BodyArea::Posterior: return "Posterior";
    case BodyArea::LeftLateral: return "LeftLateral";
    case BodyArea::RightLateral: return "RightLateral";
    case BodyArea::OverallTorso: return "OverallTorso";
    }
    return "?";
}

constexpr std::string_view to_string(FieldZone zone)
{
    return zone == FieldZone::Near ? "Near" : "Far";
}

// Strict parsers used by the CSV schema (names must match exactly).
inline BodyArea parse_body_area(std::string_view text)
{
    for (BodyArea area : all_body_areas)
        if (text == to_string(area))
            return area;
    throw UnknownRegion("unknown body area '" + std::string(text) + "'");
}

inline FieldZone parse_field_zone(std::string_view text)
{
    for (FieldZone zone : all_field_zones)
        if (text == to_string(zone))
            return zone;
    throw UnknownZone("unknown field zone '" + std::string(text) + "'");
}

// The measurement grid: 16 angles at 22.5 degree increments, depths
// 10..100 mm in 10 mm steps, reference depth 10 mm.
inline constexpr double kAngleStepDeg = 22.5;
inline constexpr int kGridAngleCount = 16;
inline constexpr int kGridDepthCount = 10;
inline constexpr double kReferenceDepthMm = 10.0;
inline constexpr double kMaxGridDepthMm = 100.0;

inline bool is_grid_angle(double angle_deg)
{
    if (!(angle_deg >= 0.0 && angle_deg < 360.0))
        return false;
    const double steps = angle_deg / kAngleStepDeg;
    return steps == std::floor(steps);
}

// Maps a grid angle to the side that owns it. 0 deg is the anterior axis;
// angles increase toward the subject's left. Quadrants are half-open and
// centered on the four axes, so each side owns exactly 4 of the 16 angles.
inline BodyArea side_of_angle(double angle_deg)
{
    if (!is_grid_angle(angle_deg))
        throw InvalidAngle("angle must be a multiple of 22.5 in [0, 360), got " +
                           std::to_string(angle_deg));
    if (angle_deg < 45.0 || angle_deg >= 315.0)
        return BodyArea::Anterior;
    if (angle_deg < 135.0)
        return BodyArea::LeftLateral;
    if (angle_deg < 225.0)
        return BodyArea::Posterior;
    return BodyArea::RightLateral;
}

// Average relative permittivity of each anatomical subregion.
inline double region_permittivity(BodyArea region)
{
    switch (region) {
    case BodyArea::Region1: return 16.0;
    case BodyArea::Region2: return 16.0;
    case BodyArea::Region3: return 27.0;
    case BodyArea::Region4: return 29.0;
    default:
        throw InvalidArgument("permittivity is defined for Region1..Region4 only, got " +
                              std::string(to_string(region)));
    }
}

inline constexpr double kSpeedOfLightMps = 2.9979e8;
inline constexpr double kDefaultFrequencyHz = 915e6;

// Resonant half-wave dipole length in a medium of relative permittivity
// eps_r: c / (2 f sqrt(eps_r)), returned in millimeters.
inline double half_wave_dipole_length_mm(double freq_hz, double eps_r)
{
    if (eps_r < 1.0)
        throw InvalidPermittivity("relative permittivity must be >= 1, got " +
                                  std::to_string(eps_r));
    if (!(freq_hz > 0.0))
        throw InvalidArgument("frequency must be positive");
    return 1000.0 * kSpeedOfLightMps / (2.0 * freq_hz * std::sqrt(eps_r));
}

// A transmitter placement: area, field zone, optional grid angle (aggregate
// areas carry none) and implant depth.
struct BodyLocation
{
    BodyArea area = BodyArea::OverallTorso;
    FieldZone zone = FieldZone::Near;
    std::optional<double> angle_deg;
    double depth_mm = kReferenceDepthMm;

    // Checks the grid invariants; depths beyond 100 mm are allowed only when
    // the caller opts into extrapolation.
    void validate(bool allow_extrapolation = false) const
    {
        if (angle_deg && !is_grid_angle(*angle_deg))
            throw InvalidAngle("angle must be a multiple of 22.5 in [0, 360)");
        if (depth_mm < kReferenceDepthMm)
            throw DepthBelowReference("depth " + std::to_string(depth_mm) +
                                      " mm is below the reference depth of 10 mm (d >= d0)");
        if (depth_mm > kMaxGridDepthMm && !allow_extrapolation)
            throw ExtrapolationRequired("depth " + std::to_string(depth_mm) +
                                        " mm exceeds the 100 mm grid; pass the extrapolation "
                                        "flag to evaluate anyway");
    }
};

} // namespace ivchan

#endif // IVCHAN_BODY_HPP
