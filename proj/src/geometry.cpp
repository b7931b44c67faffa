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

#include "caustic/geometry.hpp"

#include <algorithm>
#include <numbers>

#include "caustic/errors.hpp"

namespace caustic {

double line_distance(const Ray &ray, Point2 p)
{
    return std::abs(cross(ray.direction(), p - ray.origin));
}

double ray_distance(const Ray &ray, Point2 p)
{
    const Point2 rel = p - ray.origin;
    const double t = dot(rel, ray.direction());
    if (t <= 0.0) {
        return norm(rel);
    }
    return std::abs(cross(ray.direction(), rel));
}

std::pair<Point2, Point2> tangent_points(Point2 external, const Disk &disk)
{
    const Point2 rel = external - disk.center;
    const double dist = norm(rel);
    if (!(dist > disk.radius)) {
        throw Error(Errc::PointInsideDisk, "external point is not outside the disk");
    }
    // The tangency points sit at +-acos(r/D) about the center->external direction.
    const double base = std::atan2(rel.y, rel.x);
    const double half = std::acos(disk.radius / dist);
    Point2 p = disk.center + disk.radius * Point2{std::cos(base - half), std::sin(base - half)};
    Point2 q = disk.center + disk.radius * Point2{std::cos(base + half), std::sin(base + half)};

    auto polar = [&](Point2 t) { return std::atan2(t.y - disk.center.y, t.x - disk.center.x); };
    if (polar(q) < polar(p)) {
        std::swap(p, q);
    }
    return {p, q};
}

bool segment_intersects_disk(Point2 a, Point2 b, const Disk &disk)
{
    if (a == b) {
        throw Error(Errc::DegenerateSegment, "segment endpoints coincide");
    }
    const Point2 ab = b - a;
    const double t = std::clamp(dot(disk.center - a, ab) / dot(ab, ab), 0.0, 1.0);
    return distance(a + t * ab, disk.center) <= disk.radius;
}

double tangent_x_intercept(double theta, const Disk &disk)
{
    const double s = std::sin(theta);
    if (std::abs(s) < 1e-12) {
        throw Error(Errc::HorizontalTangent, "tangent line parallel to the array");
    }
    const double c = std::cos(theta);
    const double eps = disk.radius;
    return -(disk.center.y - eps * c) * c / s + disk.center.x + eps * s;
}

double slope_angle(Point2 from, Point2 to)
{
    if (from == to) {
        throw Error(Errc::DegenerateSegment, "slope of a zero-length segment");
    }
    const Point2 d = to - from;
    return std::atan2(d.y, d.x);
}

} // namespace caustic
