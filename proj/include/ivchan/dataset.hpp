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

#ifndef IVCHAN_DATASET_HPP
#define IVCHAN_DATASET_HPP

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "ivchan/body.hpp"
#include "ivchan/errors.hpp"
#include "ivchan/fitting.hpp"
#include "ivchan/mathutil.hpp"
#include "ivchan/pathloss.hpp"
#include "ivchan/rng.hpp"

namespace ivchan
{

// One cell of the measurement campaign: 16 angles x 10 depths x 2 zones x
// 4 subregions = 1280 points.
struct GridPoint
{
    BodyArea region;
    FieldZone zone;
    double angle_deg;
    double depth_mm;

    friend bool operator==(const GridPoint &, const GridPoint &) = default;

    auto key() const
    {
        return std::make_tuple(static_cast<int>(region), static_cast<int>(zone), angle_deg,
                               depth_mm);
    }
};

// A path loss observation at one grid point. return_loss_db is present only
// when the antenna match was actually measured; per the discard rule a
// record is usable iff the return loss is absent or <= -7 dB.
struct SampleRecord
{
    GridPoint point;
    double path_loss_db;
    std::optional<double> return_loss_db;
};

inline constexpr double kReturnLossThresholdDb = -7.0;

enum class ProvenanceKind
{
    Measured,
    Synthetic,
};

struct Provenance
{
    ProvenanceKind kind = ProvenanceKind::Measured;
    std::uint64_t seed = 0;   // Synthetic only
    double sigma_m = 0.0;     // Synthetic only: per-angle slope spread used
};

// Immutable collection of per-location samples. No two records may share a
// grid point.
class PathLossDataset
{
  public:
    PathLossDataset() = default;

    PathLossDataset(std::vector<SampleRecord> records, Provenance provenance)
        : records_(std::move(records)), provenance_(provenance)
    {
        std::set<std::tuple<int, int, double, double>> seen;
        for (const SampleRecord &rec : records_) {
            if (!seen.insert(rec.point.key()).second)
                throw DuplicatePoint("duplicate grid point (" +
                                     std::string(to_string(rec.point.region)) + ", " +
                                     std::string(to_string(rec.point.zone)) + ", " +
                                     std::to_string(rec.point.angle_deg) + " deg, " +
                                     std::to_string(rec.point.depth_mm) + " mm)");
        }
    }

    const std::vector<SampleRecord> &records() const noexcept { return records_; }
    const Provenance &provenance() const noexcept { return provenance_; }
    std::size_t size() const noexcept { return records_.size(); }

  private:
    std::vector<SampleRecord> records_;
    Provenance provenance_;
};

// The full 1280-point grid in lexicographic (region, zone, angle, depth)
// order, Near before Far.
inline std::vector<GridPoint> enumerate_grid()
{
    std::vector<GridPoint> points;
    points.reserve(static_cast<std::size_t>(4) * 2 * kGridAngleCount * kGridDepthCount);
    for (BodyArea region : all_regions)
        for (FieldZone zone : all_field_zones)
            for (int a = 0; a < kGridAngleCount; ++a)
                for (int d = 1; d <= kGridDepthCount; ++d)
                    points.push_back({region, zone, a * kAngleStepDeg, d * kReferenceDepthMm});
    return points;
}

namespace detail
{

inline std::vector<std::string_view> split_fields(std::string_view line)
{
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

inline double parse_number(std::string_view field, std::size_t line_no, const char *column)
{
    double value = 0.0;
    const char *begin = field.data();
    const char *end = begin + field.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        throw ParseError("line " + std::to_string(line_no) + ": cannot parse " + column +
                         " from '" + std::string(field) + "'");
    return value;
}

inline std::string format_compact(double value)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", value);
    return buf;
}

inline std::string format_fixed4(double value)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", value);
    return buf;
}

} // namespace detail

// Parses the canonical CSV interchange format
//   region,zone,angle_deg,depth_mm,path_loss_db[,return_loss_db]
// (header required, '.' decimal, UTF-8). Duplicate grid points are rejected;
// the resulting dataset is marked Measured.
inline PathLossDataset ingest_csv(std::istream &input)
{
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(input, line))
        throw ParseError("line 1: missing header row");
    ++line_no;
    if (!line.empty() && line.back() == '\r')
        line.pop_back();

    bool has_return_loss = false;
    if (line == "region,zone,angle_deg,depth_mm,path_loss_db,return_loss_db")
        has_return_loss = true;
    else if (line != "region,zone,angle_deg,depth_mm,path_loss_db")
        throw ParseError("line 1: header must be "
                         "'region,zone,angle_deg,depth_mm,path_loss_db[,return_loss_db]'");

    const std::size_t expected_fields = has_return_loss ? 6 : 5;
    std::vector<SampleRecord> records;

    while (std::getline(input, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty()) {
            if (input.peek() == std::char_traits<char>::eof())
                break;
            throw ParseError("line " + std::to_string(line_no) + ": empty row");
        }

        const auto fields = detail::split_fields(line);
        if (fields.size() != expected_fields)
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(expected_fields) + " fields, got " +
                             std::to_string(fields.size()));

        SampleRecord rec;
        try {
            rec.point.region = parse_body_area(fields[0]);
        } catch (const UnknownRegion &e) {
            throw UnknownRegion("line " + std::to_string(line_no) + ": " + e.what());
        }
        if (!is_region(rec.point.region))
            throw UnknownRegion("line " + std::to_string(line_no) + ": '" +
                                std::string(fields[0]) + "' is not one of Region1..Region4");
        try {
            rec.point.zone = parse_field_zone(fields[1]);
        } catch (const UnknownZone &e) {
            throw UnknownZone("line " + std::to_string(line_no) + ": " + e.what());
        }

        rec.point.angle_deg = detail::parse_number(fields[2], line_no, "angle_deg");
        if (!is_grid_angle(rec.point.angle_deg))
            throw ParseError("line " + std::to_string(line_no) +
                             ": angle_deg must be a multiple of 22.5 in [0, 360)");
        rec.point.depth_mm = detail::parse_number(fields[3], line_no, "depth_mm");
        if (rec.point.depth_mm < kReferenceDepthMm)
            throw ParseError("line " + std::to_string(line_no) +
                             ": depth_mm must be >= 10 (the reference depth)");
        rec.path_loss_db = detail::parse_number(fields[4], line_no, "path_loss_db");
        if (has_return_loss && !fields[5].empty())
            rec.return_loss_db = detail::parse_number(fields[5], line_no, "return_loss_db");

        records.push_back(rec);
    }

    return PathLossDataset(std::move(records), Provenance{ProvenanceKind::Measured, 0, 0.0});
}

inline PathLossDataset ingest_csv_string(const std::string &text)
{
    std::istringstream stream(text);
    return ingest_csv(stream);
}

// Writes the dataset back out in the canonical schema. Path loss and return
// loss values carry 4 decimal places; the return_loss_db column is emitted
// only when at least one record has it.
inline void export_csv(const PathLossDataset &dataset, std::ostream &output)
{
    bool has_return_loss = false;
    for (const SampleRecord &rec : dataset.records())
        if (rec.return_loss_db) {
            has_return_loss = true;
            break;
        }

    output << "region,zone,angle_deg,depth_mm,path_loss_db";
    if (has_return_loss)
        output << ",return_loss_db";
    output << '\n';

    for (const SampleRecord &rec : dataset.records()) {
        output << to_string(rec.point.region) << ',' << to_string(rec.point.zone) << ','
               << detail::format_compact(rec.point.angle_deg) << ','
               << detail::format_compact(rec.point.depth_mm) << ','
               << detail::format_fixed4(rec.path_loss_db);
        if (has_return_loss) {
            output << ',';
            if (rec.return_loss_db)
                output << detail::format_fixed4(*rec.return_loss_db);
        }
        output << '\n';
    }
}

inline std::string export_csv_string(const PathLossDataset &dataset)
{
    std::ostringstream out;
    export_csv(dataset, out);
    return out.str();
}

// Keeps records whose return loss is absent or <= threshold (well matched
// antennas); order preserved. Idempotent.
inline PathLossDataset filter_by_return_loss(const PathLossDataset &dataset,
                                             double threshold_db = kReturnLossThresholdDb)
{
    std::vector<SampleRecord> kept;
    kept.reserve(dataset.size());
    for (const SampleRecord &rec : dataset.records())
        if (!rec.return_loss_db || *rec.return_loss_db <= threshold_db)
            kept.push_back(rec);
    return PathLossDataset(std::move(kept), dataset.provenance());
}

using CellKey = std::pair<double, double>; // (angle_deg, depth_mm)

// Per-(angle, depth) average over the regions, taken in the linear power
// domain: each dB value becomes an attenuation factor 10^(PL/10), factors
// are averaged arithmetically, and the mean converted back to dB. Every
// region present in the zone must cover every populated cell.
inline std::map<CellKey, double> average_over_regions_linear(const PathLossDataset &dataset,
                                                             FieldZone zone)
{
    std::set<BodyArea> regions_present;
    std::map<CellKey, std::map<BodyArea, double>> cells;
    for (const SampleRecord &rec : dataset.records()) {
        if (rec.point.zone != zone)
            continue;
        regions_present.insert(rec.point.region);
        cells[{rec.point.angle_deg, rec.point.depth_mm}][rec.point.region] = rec.path_loss_db;
    }

    std::string missing;
    for (const auto &[key, by_region] : cells)
        for (BodyArea region : regions_present)
            if (!by_region.count(region)) {
                if (!missing.empty())
                    missing += "; ";
                missing += "(" + detail::format_compact(key.first) + " deg, " +
                           detail::format_compact(key.second) + " mm) lacks " +
                           std::string(to_string(region));
            }
    if (!missing.empty())
        throw MissingCell("incomplete cells in zone " + std::string(to_string(zone)) + ": " +
                          missing);

    std::map<CellKey, double> averages;
    for (const auto &[key, by_region] : cells) {
        double sum_linear = 0.0;
        for (const auto &[region, pl_db] : by_region)
            sum_linear += db_to_linear(pl_db);
        averages[key] = linear_to_db(sum_linear / static_cast<double>(by_region.size()));
    }
    return averages;
}

// Sample variance (denominator n-1) of path loss across the angles present
// at each depth, for one region and zone; keys ascend by depth.
inline std::map<double, double> variance_by_depth(const PathLossDataset &dataset, BodyArea region,
                                                  FieldZone zone)
{
    if (!is_region(region))
        throw InvalidArgument("variance_by_depth expects one of Region1..Region4");

    std::map<double, std::vector<double>> by_depth;
    for (const SampleRecord &rec : dataset.records())
        if (rec.point.region == region && rec.point.zone == zone)
            by_depth[rec.point.depth_mm].push_back(rec.path_loss_db);

    std::map<double, double> variances;
    for (const auto &[depth, values] : by_depth) {
        if (values.size() < 2)
            throw InsufficientAngles("depth " + detail::format_compact(depth) + " mm has only " +
                                     std::to_string(values.size()) +
                                     " angle(s); need at least 2 for a variance");
        variances[depth] = sample_variance(values);
    }
    return variances;
}

// Parameter rows used by the synthetic generator, keyed by (region, zone).
using RegionParamsMap = std::map<std::pair<BodyArea, FieldZone>, PathLossParams>;

// The embedded parameter rows for the four subregions in both zones.
inline RegionParamsMap table_region_params()
{
    RegionParamsMap map;
    for (BodyArea region : all_regions)
        for (FieldZone zone : all_field_zones)
            map[{region, zone}] = lookup_params(region, zone);
    return map;
}

// Synthesizes a full 1280-record grid from the given parameter rows. For
// each (region, zone) a per-angle slope m_theta ~ Normal(m, sigma_m^2) is
// drawn once per angle, then every record gets
//   PL(theta, d) = PL0 + m_theta * (d / d0) + S
// with a fresh shadowing draw S ~ Normal(0, sigma^2) per record. Each
// (region, zone) uses its own sub-stream of the seed, so the output is
// deterministic per seed record-by-record.
inline PathLossDataset generate_synthetic_grid(const RegionParamsMap &params_by_region,
                                               double sigma_m, std::uint64_t seed)
{
    if (sigma_m < 0.0)
        throw InvalidArgument("sigma_m must be >= 0");
    for (BodyArea region : all_regions)
        for (FieldZone zone : all_field_zones)
            if (!params_by_region.count({region, zone}))
                throw InvalidArgument("params_by_region lacks an entry for (" +
                                      std::string(to_string(region)) + ", " +
                                      std::string(to_string(zone)) + ")");

    std::vector<SampleRecord> records;
    records.reserve(static_cast<std::size_t>(4) * 2 * kGridAngleCount * kGridDepthCount);

    for (BodyArea region : all_regions) {
        for (FieldZone zone : all_field_zones) {
            const PathLossParams &params = params_by_region.at({region, zone});
            RandomStream stream(derive_seed(
                seed, {static_cast<std::uint64_t>(region), static_cast<std::uint64_t>(zone)}));

            double slopes[kGridAngleCount];
            for (int a = 0; a < kGridAngleCount; ++a)
                slopes[a] = stream.normal(params.m, sigma_m);

            for (int a = 0; a < kGridAngleCount; ++a) {
                for (int d = 1; d <= kGridDepthCount; ++d) {
                    const double depth_mm = d * kReferenceDepthMm;
                    const double mean_db =
                        params.pl0_db + slopes[a] * (depth_mm / kReferenceDepthMm);
                    const double pl_db = mean_db + stream.normal(0.0, params.sigma_db);
                    records.push_back(
                        {{region, zone, a * kAngleStepDeg, depth_mm}, pl_db, std::nullopt});
                }
            }
        }
    }

    return PathLossDataset(std::move(records),
                           Provenance{ProvenanceKind::Synthetic, seed, sigma_m});
}

// Flattens the dataset into regression samples, optionally restricted to one
// region and/or zone.
inline std::vector<DepthSample> to_depth_samples(const PathLossDataset &dataset,
                                                 std::optional<BodyArea> region = std::nullopt,
                                                 std::optional<FieldZone> zone = std::nullopt)
{
    std::vector<DepthSample> samples;
    for (const SampleRecord &rec : dataset.records()) {
        if (region && rec.point.region != *region)
            continue;
        if (zone && rec.point.zone != *zone)
            continue;
        samples.push_back({rec.point.depth_mm, rec.path_loss_db});
    }
    return samples;
}

} // namespace ivchan

#endif // IVCHAN_DATASET_HPP
