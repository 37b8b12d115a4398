// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

namespace leosim {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;
};

Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator*(double k, const Vec3& v);
double dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
double norm(const Vec3& v);
Vec3 normalized(const Vec3& v);

// Point on the (flat) ground plane z = 0, metres.
struct GroundPoint {
    double x_m = 0.0;
    double y_m = 0.0;
};

// Uniformly illuminated circular aperture, radius in carrier wavelengths.
struct AntennaPattern {
    double radius_wavelengths = 10.0;
    double peak_gain_dbi = 30.0;
};

// Normalized radiation pattern at angle zeta off boresight: 1 at zeta = 0,
// (2 J1(ka sin zeta) / (ka sin zeta))^2 elsewhere. Defined for |zeta| <= 90 deg.
double pattern_gain(double zeta_rad, const AntennaPattern& ant = {});

// Peak gain times the product of the pattern in the two principal planes.
double combined_gain(double theta_rad, double phi_rad, const AntennaPattern& ant = {});

// Hexagonal multi-beam footprint. Cell 0 sits at the origin; rings of cells
// surround it with centre spacing 2 * cell_radius * cos(30 deg). The satellite
// sits in the x-z plane at the given elevation angle seen from the origin, and
// each beam's boresight points at its cell centre.
struct BeamLayout {
    double altitude_m = 0.0;
    double elevation_deg = 0.0;
    double cell_radius_m = 0.0;
    double spacing_m = 0.0;
    Vec3 satellite_pos_m;
    std::vector<GroundPoint> cell_centers;
    std::vector<Vec3> boresights;  // unit vectors, satellite -> cell centre

    int n_beams() const { return static_cast<int>(cell_centers.size()); }
};

BeamLayout build_layout(double altitude_m, double elevation_deg, int n_rings,
                        double cell_radius_m);

// Off-boresight direction split into the two orthogonal principal planes of
// beam `beam`: theta in the azimuth plane, phi in the elevation plane.
struct PlaneAngles {
    double theta_rad = 0.0;
    double phi_rad = 0.0;
};

PlaneAngles off_boresight_angles(const GroundPoint& user, int beam,
                                 const BeamLayout& layout);

double slant_distance_m(const GroundPoint& user, const BeamLayout& layout);

// Index of the cell centre closest to the point (lowest index wins ties).
int nearest_beam(const GroundPoint& p, const BeamLayout& layout);

// True if the point lies in the hexagonal cell of the given centre (cell
// orientation matching the layout's ring directions).
bool in_cell(const GroundPoint& p, const GroundPoint& center, double spacing_m);

}  // namespace leosim
