#pragma once

#include <array>
#include <complex>

#include "hypbill/config.hpp"

namespace hypbill {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Point of the open unit disk.
struct DiskPoint {
    double re = 0.0;
    double im = 0.0;

    constexpr DiskPoint() = default;
    constexpr DiskPoint(double r, double i) : re(r), im(i) {}
    explicit DiskPoint(Complex z) : re(z.real()), im(z.imag()) {}

    Complex z() const { return {re, im}; }
};

/// Angle in [0, 2pi) naming a point of the unit circle.
double normalize_angle(double radians);

class BoundaryAngle {
public:
    constexpr BoundaryAngle() = default;
    explicit BoundaryAngle(double radians) : rad_(normalize_angle(radians)) {}

    double radians() const { return rad_; }
    Complex point() const { return std::polar(1.0, rad_); }

    static BoundaryAngle of(Complex boundary_point) { return BoundaryAngle(std::arg(boundary_point)); }

private:
    double rad_ = 0.0;
};

/// Oriented complete geodesic, authoritative data (theta, phi); the Euclidean
/// realization is derived once at construction.
class DirectedGeodesic {
public:
    static DirectedGeodesic from_endpoints(BoundaryAngle theta, BoundaryAngle phi,
                                           const Tolerances& tol = kDefaultTolerances);

    BoundaryAngle theta() const { return theta_; }
    BoundaryAngle phi() const { return phi_; }
    Complex source() const { return theta_.point(); }
    Complex target() const { return phi_.point(); }

    bool is_diameter() const { return diameter_; }
    /// Unit vector from source to target for a diameter.
    Complex direction() const { return direction_; }
    /// Center and radius of the orthogonal circle otherwise.
    Complex center() const { return center_; }
    double radius() const { return radius_; }

    DirectedGeodesic reversed() const;

private:
    DirectedGeodesic() = default;

    BoundaryAngle theta_;
    BoundaryAngle phi_;
    bool diameter_ = false;
    Complex direction_{};
    Complex center_{};
    double radius_ = 0.0;
};

DiskPoint cayley_to_disk(Complex upper_half_plane_point);

double hyp_distance(DiskPoint p, DiskPoint q);

/// Circular (wraparound) distance on the boundary, in [0, pi].
double boundary_distance(BoundaryAngle a, BoundaryAngle b);

DirectedGeodesic reflect_geodesic(const DirectedGeodesic& mirror, const DirectedGeodesic& subject);

/// Angle in [0, pi] between the directions of travel of g1 and g2 at p.
double angle_at(const DirectedGeodesic& g1, const DirectedGeodesic& g2, DiskPoint p,
                double on_geodesic_tol = 1e-9);

/// Unit tangent of g at p (direction of travel). p must lie on g.
Complex tangent_at(const DirectedGeodesic& g, DiskPoint p);

bool lies_on(const DirectedGeodesic& g, DiskPoint p, double tol = 1e-9);

/// Beltrami-Klein coordinates: geodesics become straight chords.
Complex to_klein(Complex poincare);
Complex from_klein(Complex klein);

/// Isometry of the disk: z -> (a w + b)/(c w + d) with w = z or conj(z).
class DiskIsometry {
public:
    using Matrix = std::array<Complex, 4>;  // a, b, c, d

    static DiskIsometry identity();
    static DiskIsometry rotation(double radians);
    /// z -> (z - p)/(1 - conj(p) z), sends p to 0.
    static DiskIsometry recentering(Complex p);
    static DiskIsometry reflection(const DirectedGeodesic& mirror);
    static DiskIsometry conjugation();

    DiskIsometry(const Matrix& m, bool reversing);

    bool is_orientation_preserving() const { return !reversing_; }
    const Matrix& matrix() const { return m_; }

    Complex apply(Complex z) const;
    DiskPoint apply(DiskPoint p) const { return DiskPoint(apply(p.z())); }
    BoundaryAngle apply(BoundaryAngle a) const;
    DirectedGeodesic apply(const DirectedGeodesic& g) const;

    /// (*this) after `inner`: z -> this(inner(z)).
    DiskIsometry compose(const DiskIsometry& inner) const;
    DiskIsometry inverse() const;

    /// Largest deviation between the images of 16 sample interior points.
    double distance_to(const DiskIsometry& other) const;

private:
    Matrix m_;
    bool reversing_;
};

}  // namespace hypbill
