#include "hypbill/hypgeo.hpp"

#include <algorithm>
#include <cmath>

#include "hypbill/error.hpp"

namespace hypbill {

double normalize_angle(double radians) {
    double r = std::fmod(radians, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    // fmod of a value just below a multiple of 2pi can round up to 2pi.
    if (r >= kTwoPi) r = 0.0;
    return r;
}

DirectedGeodesic DirectedGeodesic::from_endpoints(BoundaryAngle theta, BoundaryAngle phi,
                                                  const Tolerances& tol) {
    if (boundary_distance(theta, phi) <= tol.sep) {
        throw Error(ErrorCode::DegenerateEndpoints, "geodesic endpoints closer than separation tolerance");
    }
    DirectedGeodesic g;
    g.theta_ = theta;
    g.phi_ = phi;
    const Complex a = theta.point();
    const Complex b = phi.point();
    const Complex sum = a + b;
    if (std::abs(sum) <= tol.geo) {
        g.diameter_ = true;
        g.direction_ = (b - a) / std::abs(b - a);
    } else {
        // Orthogonal circle through a and b: center 2(a+b)/|a+b|^2.
        g.center_ = 2.0 * sum / std::norm(sum);
        g.radius_ = std::abs(g.center_ - a);
    }
    return g;
}

DirectedGeodesic DirectedGeodesic::reversed() const {
    DirectedGeodesic g = *this;
    std::swap(g.theta_, g.phi_);
    g.direction_ = -direction_;
    return g;
}

DiskPoint cayley_to_disk(Complex z) {
    if (!(z.imag() > 0.0)) {
        throw Error(ErrorCode::NotInUpperHalfPlane, "Cayley transform needs Im(z) > 0");
    }
    const Complex i(0.0, 1.0);
    return DiskPoint((z - i) / (z + i));
}

double hyp_distance(DiskPoint p, DiskPoint q) {
    const Complex a = p.z();
    const Complex b = q.z();
    const double ratio = std::abs(a - b) / std::abs(1.0 - std::conj(a) * b);
    return 2.0 * std::atanh(std::min(ratio, 1.0));
}

double boundary_distance(BoundaryAngle a, BoundaryAngle b) {
    const double d = std::fabs(a.radians() - b.radians());
    return std::min(d, kTwoPi - d);
}

DirectedGeodesic reflect_geodesic(const DirectedGeodesic& mirror, const DirectedGeodesic& subject) {
    return DiskIsometry::reflection(mirror).apply(subject);
}

namespace {

Complex recenter(Complex p, Complex z) { return (z - p) / (1.0 - std::conj(p) * z); }

}  // namespace

bool lies_on(const DirectedGeodesic& g, DiskPoint p, double tol) {
    // After recentering at p the geodesic through 0 is a diameter.
    const Complex s = recenter(p.z(), g.source());
    const Complex t = recenter(p.z(), g.target());
    return std::abs(s + t) <= tol;
}

Complex tangent_at(const DirectedGeodesic& g, DiskPoint p) {
    // The recentering map has positive real derivative at p.
    const Complex t = recenter(p.z(), g.target());
    return t / std::abs(t);
}

double angle_at(const DirectedGeodesic& g1, const DirectedGeodesic& g2, DiskPoint p, double tol) {
    if (!lies_on(g1, p, tol) || !lies_on(g2, p, tol)) {
        throw Error(ErrorCode::PointNotOnGeodesic, "angle_at: point is not on both geodesics");
    }
    return std::fabs(std::arg(tangent_at(g2, p) / tangent_at(g1, p)));
}

Complex to_klein(Complex p) { return 2.0 * p / (1.0 + std::norm(p)); }

Complex from_klein(Complex k) {
    const double n = std::max(0.0, 1.0 - std::norm(k));
    return k / (1.0 + std::sqrt(n));
}

namespace {

DiskIsometry::Matrix normalized(const DiskIsometry::Matrix& m) {
    const Complex det = m[0] * m[3] - m[1] * m[2];
    const Complex s = std::sqrt(det);
    return {m[0] / s, m[1] / s, m[2] / s, m[3] / s};
}

}  // namespace

DiskIsometry::DiskIsometry(const Matrix& m, bool reversing) : m_(normalized(m)), reversing_(reversing) {}

DiskIsometry DiskIsometry::identity() { return DiskIsometry({1.0, 0.0, 0.0, 1.0}, false); }

DiskIsometry DiskIsometry::rotation(double radians) {
    return DiskIsometry({std::polar(1.0, radians), 0.0, 0.0, 1.0}, false);
}

DiskIsometry DiskIsometry::recentering(Complex p) {
    return DiskIsometry({1.0, -p, -std::conj(p), 1.0}, false);
}

DiskIsometry DiskIsometry::reflection(const DirectedGeodesic& mirror) {
    // Inversion in the geodesic with ideal endpoints a, b:
    // z -> ((a+b) - 2ab conj(z)) / (2 - (a+b) conj(z)); diameters included.
    const Complex a = mirror.source();
    const Complex b = mirror.target();
    return DiskIsometry({-2.0 * a * b, a + b, -(a + b), 2.0}, true);
}

DiskIsometry DiskIsometry::conjugation() { return DiskIsometry({1.0, 0.0, 0.0, 1.0}, true); }

Complex DiskIsometry::apply(Complex z) const {
    const Complex w = reversing_ ? std::conj(z) : z;
    return (m_[0] * w + m_[1]) / (m_[2] * w + m_[3]);
}

BoundaryAngle DiskIsometry::apply(BoundaryAngle a) const { return BoundaryAngle::of(apply(a.point())); }

DirectedGeodesic DiskIsometry::apply(const DirectedGeodesic& g) const {
    return DirectedGeodesic::from_endpoints(apply(g.theta()), apply(g.phi()));
}

DiskIsometry DiskIsometry::compose(const DiskIsometry& inner) const {
    Matrix g = inner.m_;
    if (reversing_) {
        for (auto& c : g) c = std::conj(c);
    }
    const Matrix& f = m_;
    return DiskIsometry({f[0] * g[0] + f[1] * g[2], f[0] * g[1] + f[1] * g[3], f[2] * g[0] + f[3] * g[2],
                         f[2] * g[1] + f[3] * g[3]},
                        reversing_ != inner.reversing_);
}

DiskIsometry DiskIsometry::inverse() const {
    Matrix inv{m_[3], -m_[1], -m_[2], m_[0]};
    if (reversing_) {
        for (auto& c : inv) c = std::conj(c);
    }
    return DiskIsometry(inv, reversing_);
}

double DiskIsometry::distance_to(const DiskIsometry& other) const {
    double worst = 0.0;
    for (int j = 0; j < 16; ++j) {
        const Complex z = std::polar(j % 2 == 0 ? 0.3 : 0.7, kTwoPi * j / 16.0);
        worst = std::max(worst, std::abs(apply(z) - other.apply(z)));
    }
    return worst;
}

}  // namespace hypbill
