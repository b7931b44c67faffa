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

#include <cmath>
#include <utility>

namespace caustic {

/// Point (or displacement) in the propagation plane, meters. The array lies on y = 0.
struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
    friend constexpr bool operator==(Point2 a, Point2 b) = default;
};

constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }

/// Closed disk. A point at distance exactly `radius` from the center counts as inside.
struct Disk {
    Point2 center;
    double radius = 0.0;

    /// radius > 0 and the disk lies strictly above the array line (center.y > radius).
    bool is_valid() const { return radius > 0.0 && std::isfinite(radius) && center.y > radius; }
    bool contains(Point2 p) const { return distance(p, center) <= radius; }
    Disk inflated(double margin) const { return {center, radius + margin}; }
};

/// Half-line leaving `origin` at `angle` radians from the +x axis.
struct Ray {
    Point2 origin;
    double angle = 0.0;

    Point2 direction() const { return {std::cos(angle), std::sin(angle)}; }
    Point2 at(double t) const { return origin + t * direction(); }
};

/// Perpendicular distance from p to the infinite line carrying the ray.
double line_distance(const Ray &ray, Point2 p);

/// Distance from p to the half-line (t >= 0) of the ray.
double ray_distance(const Ray &ray, Point2 p);

/// Both tangency points of the lines through `external` that touch the circle,
/// ordered by ascending polar angle (atan2, in (-pi, pi]) about the disk center.
/// Throws PointInsideDisk when distance(external, center) <= radius.
std::pair<Point2, Point2> tangent_points(Point2 external, const Disk &disk);

/// True iff some point of the closed segment [a, b] lies in the closed disk;
/// grazing contact counts as intersecting. Throws DegenerateSegment if a == b.
bool segment_intersects_disk(Point2 a, Point2 b, const Disk &disk);

/// x-coordinate where the line of slope angle theta tangent to the circle at
/// (x_E + eps sin(theta), y_E - eps cos(theta)) meets y = 0. For a ray leaving
/// the array at that abscissa the disk center lies on the ray's left.
/// Throws HorizontalTangent when |sin(theta)| < 1e-12.
double tangent_x_intercept(double theta, const Disk &disk);

/// Direction angle of (to - from) in (-pi, pi]. Throws DegenerateSegment if from == to.
double slope_angle(Point2 from, Point2 to);

/// Mirror image under x -> -x.
constexpr Point2 mirrored(Point2 p) { return {-p.x, p.y}; }
constexpr Disk mirrored(const Disk &d) { return {mirrored(d.center), d.radius}; }

} // namespace caustic
