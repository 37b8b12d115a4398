// SPDX-License-Identifier: Apache-2.0
#include "leosim/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "leosim/bessel.hpp"
#include "leosim/util.hpp"

namespace leosim {

Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Vec3 operator*(double k, const Vec3& v) { return {k * v.x, k * v.y, k * v.z}; }
double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }
Vec3 normalized(const Vec3& v) {
    double n = norm(v);
    require(n > 0.0, "normalized: zero vector");
    return (1.0 / n) * v;
}

double pattern_gain(double zeta_rad, const AntennaPattern& ant) {
    require(ant.radius_wavelengths > 0.0, "pattern_gain: aperture radius must be positive");
    double az = std::abs(zeta_rad);
    require_domain(az <= 0.5 * pi + 1e-12, "pattern_gain: angle beyond the aperture plane");
    double ka = 2.0 * pi * ant.radius_wavelengths;
    double u = two_j1_over_x(ka * std::sin(az));
    return u * u;
}

double combined_gain(double theta_rad, double phi_rad, const AntennaPattern& ant) {
    return db_to_linear(ant.peak_gain_dbi) * pattern_gain(theta_rad, ant) *
           pattern_gain(phi_rad, ant);
}

BeamLayout build_layout(double altitude_m, double elevation_deg, int n_rings,
                        double cell_radius_m) {
    require(std::isfinite(altitude_m) && altitude_m > 0.0, "layout: altitude must be positive");
    require(elevation_deg > 0.0 && elevation_deg <= 90.0,
            "layout: elevation must be in (0, 90] degrees");
    require(n_rings >= 0, "layout: ring count must be nonnegative");
    require(std::isfinite(cell_radius_m) && cell_radius_m > 0.0,
            "layout: cell radius must be positive");

    BeamLayout lay;
    lay.altitude_m = altitude_m;
    lay.elevation_deg = elevation_deg;
    lay.cell_radius_m = cell_radius_m;
    lay.spacing_m = 2.0 * cell_radius_m * std::cos(pi / 6.0);

    lay.cell_centers.push_back({0.0, 0.0});
    double dirs[6][2];
    for (int k = 0; k < 6; ++k) {
        double a = k * pi / 3.0;
        dirs[k][0] = std::cos(a);
        dirs[k][1] = std::sin(a);
    }
    for (int r = 1; r <= n_rings; ++r) {
        // start at the corner in direction 4, then walk the six edges
        double cx = r * lay.spacing_m * dirs[4][0];
        double cy = r * lay.spacing_m * dirs[4][1];
        for (int k = 0; k < 6; ++k) {
            for (int step = 0; step < r; ++step) {
                cx += lay.spacing_m * dirs[k][0];
                cy += lay.spacing_m * dirs[k][1];
                lay.cell_centers.push_back({cx, cy});
            }
        }
    }

    double el = elevation_deg * pi / 180.0;
    double slant = altitude_m / std::sin(el);
    lay.satellite_pos_m = {slant * std::cos(el), 0.0, altitude_m};

    lay.boresights.reserve(lay.cell_centers.size());
    for (const GroundPoint& c : lay.cell_centers) {
        Vec3 ground{c.x_m, c.y_m, 0.0};
        lay.boresights.push_back(normalized(ground - lay.satellite_pos_m));
    }
    return lay;
}

PlaneAngles off_boresight_angles(const GroundPoint& user, int beam,
                                 const BeamLayout& layout) {
    if (beam < 0 || beam >= layout.n_beams())
        throw std::out_of_range("off_boresight_angles: beam index out of range");
    Vec3 w = layout.boresights[beam];
    Vec3 s = normalized(Vec3{user.x_m, user.y_m, 0.0} - layout.satellite_pos_m);
    double along = dot(s, w);
    require_domain(along > 0.0,
                   "off_boresight_angles: point behind the beam's aperture plane");
    // azimuth axis: horizontal and orthogonal to boresight; at nadir any
    // horizontal direction works, x is used
    Vec3 e_az = cross(Vec3{0.0, 0.0, 1.0}, w);
    double n = norm(e_az);
    e_az = n > 1e-12 ? (1.0 / n) * e_az : Vec3{1.0, 0.0, 0.0};
    Vec3 e_el = cross(w, e_az);
    return {std::atan2(dot(s, e_az), along), std::atan2(dot(s, e_el), along)};
}

double slant_distance_m(const GroundPoint& user, const BeamLayout& layout) {
    return norm(Vec3{user.x_m, user.y_m, 0.0} - layout.satellite_pos_m);
}

int nearest_beam(const GroundPoint& p, const BeamLayout& layout) {
    require(layout.n_beams() > 0, "nearest_beam: empty layout");
    int best = 0;
    double best_d2 = -1.0;
    for (int i = 0; i < layout.n_beams(); ++i) {
        double dx = p.x_m - layout.cell_centers[i].x_m;
        double dy = p.y_m - layout.cell_centers[i].y_m;
        double d2 = dx * dx + dy * dy;
        if (best_d2 < 0.0 || d2 < best_d2) {
            best_d2 = d2;
            best = i;
        }
    }
    return best;
}

bool in_cell(const GroundPoint& p, const GroundPoint& center, double spacing_m) {
    require(spacing_m > 0.0, "in_cell: spacing must be positive");
    double rx = p.x_m - center.x_m;
    double ry = p.y_m - center.y_m;
    double half = 0.5 * spacing_m;
    // hexagon bounded by the three neighbour axes (0, 60, 120 degrees)
    double a0 = std::abs(rx);
    double a1 = std::abs(0.5 * rx + 0.8660254037844386 * ry);
    double a2 = std::abs(-0.5 * rx + 0.8660254037844386 * ry);
    return a0 <= half && a1 <= half && a2 <= half;
}

}  // namespace leosim
