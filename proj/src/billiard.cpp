#include "hypbill/billiard.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "hypbill/error.hpp"

namespace hypbill {

namespace {

double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

struct Crossing {
    double t;  // chord parameter, 0 at the source and 1 at the target
    int side;
};

/// Crossings of the chord of g with the closed sides of p (Klein model).
std::vector<Crossing> crossings(const CheckedPolygon& p, const DirectedGeodesic& g) {
    const Complex a = g.source();
    const Complex d = g.target() - a;
    std::vector<Crossing> out;
    for (int i = 1; i <= p.k(); ++i) {
        const Complex u = p.klein_vertex(i - 1);
        const Complex e = p.klein_vertex(i) - u;
        const double denom = cross(d, e);
        if (std::fabs(denom) < 1e-300) continue;
        const double t = cross(u - a, e) / denom;
        const double s = cross(u - a, d) / denom;
        constexpr double slack = 1e-12;
        if (s >= -slack && s <= 1.0 + slack) out.push_back({t, i});
    }
    return out;
}

double chord_parameter(const DirectedGeodesic& g, DiskPoint pt) {
    const Complex a = g.source();
    const Complex d = g.target() - a;
    const Complex k = to_klein(pt.z());
    return ((k - a) * std::conj(d)).real() / std::norm(d);
}

DiskPoint chord_point(const DirectedGeodesic& g, double t) {
    return DiskPoint(from_klein(g.source() + t * (g.target() - g.source())));
}

void check_ideal_target(const CheckedPolygon& p, const DirectedGeodesic& g, const Tolerances& tol) {
    for (int i = 1; i <= p.k(); ++i) {
        const auto& v = p.vertex(i);
        if (v.ideal && boundary_distance(g.phi(), BoundaryAngle::of(v.point)) <= tol.sep) {
            throw Error(ErrorCode::AsymptoticToIdealVertex, "trajectory runs into ideal vertex v_" + std::to_string(i));
        }
    }
}

void check_vertex_hit(const CheckedPolygon& p, DiskPoint pt, const Tolerances& tol) {
    for (int i = 1; i <= p.k(); ++i) {
        const auto& v = p.vertex(i);
        if (!v.ideal && hyp_distance(pt, DiskPoint(v.point)) <= tol.vert) {
            throw Error(ErrorCode::VertexHit, "trajectory hits vertex v_" + std::to_string(i));
        }
    }
}

bool from_ideal_vertex(const CheckedPolygon& p, const DirectedGeodesic& g, const Tolerances& tol) {
    for (int i = 1; i <= p.k(); ++i) {
        const auto& v = p.vertex(i);
        if (v.ideal && boundary_distance(g.theta(), BoundaryAngle::of(v.point)) <= tol.sep) return true;
    }
    return false;
}

}  // namespace

BoundaryHit first_hit(const CheckedPolygon& p, const DirectedGeodesic& g, std::optional<DiskPoint> from,
                      const Tolerances& tol) {
    check_ideal_target(p, g, tol);
    const auto xs = crossings(p, g);
    if (xs.size() < 2) throw Error(ErrorCode::NoIntersection, "geodesic misses the polygon interior");
    const double t_from = from ? chord_parameter(g, *from) : -std::numeric_limits<double>::infinity();
    const auto best = std::max_element(xs.begin(), xs.end(), [](const Crossing& a, const Crossing& b) { return a.t < b.t; });
    const auto least = std::min_element(xs.begin(), xs.end(), [](const Crossing& a, const Crossing& b) { return a.t < b.t; });
    if (!(best->t > t_from + 1e-13) || !(best->t > least->t + 1e-13)) {
        throw Error(ErrorCode::NoIntersection, "no boundary crossing ahead of the start point");
    }
    BoundaryHit hit{best->side, chord_point(g, best->t)};
    check_vertex_hit(p, hit.point, tol);
    return hit;
}

BaseArc make_arc(const CheckedPolygon& p, const DirectedGeodesic& g, const Tolerances& tol) {
    const BoundaryHit exit = first_hit(p, g, std::nullopt, tol);
    const auto xs = crossings(p, g);
    const auto least = std::min_element(xs.begin(), xs.end(), [](const Crossing& a, const Crossing& b) { return a.t < b.t; });
    BaseArc arc{g, exit.side, exit.point, least->side, chord_point(g, least->t)};
    if (from_ideal_vertex(p, g, tol)) {
        arc.entry_side = 0;
    } else {
        check_vertex_hit(p, arc.entry_point, tol);
    }
    return arc;
}

BaseArc bounce(const CheckedPolygon& p, const BaseArc& arc, const Tolerances& tol) {
    const auto mirror = DiskIsometry::reflection(p.side(arc.hit_side));
    const DirectedGeodesic next = mirror.apply(arc.geodesic);
    const BoundaryHit hit = first_hit(p, next, arc.hit_point, tol);
    return BaseArc{next, hit.side, hit.point, arc.hit_side, arc.hit_point};
}

BaseArc unbounce(const CheckedPolygon& p, const BaseArc& arc, const Tolerances& tol) {
    if (arc.entry_side == 0) {
        throw Error(ErrorCode::AsymptoticToIdealVertex, "trajectory emerges from an ideal vertex");
    }
    const auto mirror = DiskIsometry::reflection(p.side(arc.entry_side));
    const DirectedGeodesic prev = mirror.apply(arc.geodesic);
    // Entry of the previous arc is the exit of its reversal.
    const BoundaryHit entry = first_hit(p, prev.reversed(), arc.entry_point, tol);
    return BaseArc{prev, arc.entry_side, arc.entry_point, entry.side, entry.point};
}

const char* termination_name(TerminationKind kind) {
    switch (kind) {
        case TerminationKind::TerminatedAtVertex: return "TerminatedAtVertex";
        case TerminationKind::EscapedToIdealVertex: return "EscapedToIdealVertex";
        case TerminationKind::NoIntersection: return "NoIntersection";
    }
    return "Unknown";
}

namespace {

}  // namespace

std::optional<Termination> classify_termination(const Error& e, int index) {
    switch (e.code()) {
        case ErrorCode::VertexHit: return Termination{TerminationKind::TerminatedAtVertex, index, e.what(), e.code()};
        case ErrorCode::AsymptoticToIdealVertex:
            return Termination{TerminationKind::EscapedToIdealVertex, index, e.what(), e.code()};
        case ErrorCode::NoIntersection: return Termination{TerminationKind::NoIntersection, index, e.what(), e.code()};
        default: return std::nullopt;
    }
}

SimulationResult simulate(const CheckedPolygon& p, const BaseArc& start, int n_future, int n_past,
                          const Tolerances& tol) {
    if (n_future < 0 || n_past < 0) throw Error(ErrorCode::InvalidArgument, "window sizes must be non-negative");
    SimulationResult result;
    std::vector<BaseArc> future{start};
    for (int i = 1; i <= n_future; ++i) {
        try {
            future.push_back(bounce(p, future.back(), tol));
        } catch (const Error& e) {
            auto t = classify_termination(e, i);
            if (!t) throw;
            result.termination = t;
            break;
        }
    }
    std::vector<BaseArc> past;
    for (int j = 1; j <= n_past; ++j) {
        try {
            past.push_back(unbounce(p, past.empty() ? start : past.back(), tol));
        } catch (const Error& e) {
            auto t = classify_termination(e, -j);
            if (!t) throw;
            if (!result.termination) result.termination = t;
            break;
        }
    }
    result.window.origin = past.size();
    result.window.arcs.assign(past.rbegin(), past.rend());
    result.window.arcs.insert(result.window.arcs.end(), future.begin(), future.end());
    return result;
}

PointedWord code(const TrajectoryWindow& w) {
    PointedWord out;
    out.origin = w.origin;
    for (const auto& a : w.arcs) out.letters.push_back(letter_char(a.hit_side));
    return out;
}

TrajectoryWindow decode_periodic(const CheckedPolygon& p, const Word& word, const Tolerances& tol) {
    if (word.empty()) throw Error(ErrorCode::NotAdmissible, "empty word");
    const auto rules = forbidden_set(p.spec());
    const auto verdict = is_admissible(word, rules, true);
    if (!verdict.admissible) throw Error(ErrorCode::NotAdmissible, verdict.reason);

    const Word unfolded = word.size() % 2 == 1 ? word + word : word;
    const auto labels = labels_of(unfolded);
    // G_j = R_{a_0} ... R_{a_{j-1}} places the j-th copy of the polygon.
    std::vector<DiskIsometry> place{DiskIsometry::identity()};
    for (int a : labels) place.push_back(place.back().compose(DiskIsometry::reflection(p.side(a))));
    const DiskIsometry& holonomy = place.back();

    const auto& m = holonomy.matrix();
    const Complex trace = m[0] + m[3];
    if (!(std::fabs(trace.real()) > 2.0 + 1e-12)) {
        throw Error(ErrorCode::NonHyperbolicHolonomy, "holonomy of the word is not hyperbolic");
    }
    if (std::abs(m[2]) < 1e-300) throw Error(ErrorCode::NonHyperbolicHolonomy, "holonomy fixes the origin");
    const Complex disc = std::sqrt((m[3] - m[0]) * (m[3] - m[0]) + 4.0 * m[1] * m[2]);
    const Complex z1 = (m[0] - m[3] + disc) / (2.0 * m[2]);
    const Complex z2 = (m[0] - m[3] - disc) / (2.0 * m[2]);
    // Attracting fixed point: |h'(z)| = 1/|c z + d|^2 < 1.
    const bool first_attracts = std::abs(m[2] * z1 + m[3]) > std::abs(m[2] * z2 + m[3]);
    const Complex forward = first_attracts ? z1 : z2;
    const Complex backward = first_attracts ? z2 : z1;
    const auto axis = DirectedGeodesic::from_endpoints(BoundaryAngle::of(backward), BoundaryAngle::of(forward), tol);

    TrajectoryWindow w;
    for (std::size_t j = 0; j < labels.size(); ++j) {
        const DirectedGeodesic g = place[j].inverse().apply(axis);
        const BaseArc arc = [&] {
            try {
                return make_arc(p, g, tol);
            } catch (const Error& e) {
                if (e.code() == ErrorCode::NoIntersection) {
                    throw Error(ErrorCode::NotRealized, "holonomy axis misses copy " + std::to_string(j));
                }
                throw;
            }
        }();
        if (arc.hit_side != labels[j]) {
            throw Error(ErrorCode::NotRealized, "holonomy axis leaves copy " + std::to_string(j) + " through side " +
                                                    std::to_string(arc.hit_side) + " instead of " +
                                                    std::to_string(labels[j]));
        }
        w.arcs.push_back(arc);
    }
    return w;
}

double dG(const BaseArc& a, const BaseArc& b) {
    return std::max(boundary_distance(a.geodesic.theta(), b.geodesic.theta()),
                    boundary_distance(a.geodesic.phi(), b.geodesic.phi()));
}

namespace {

/// Isometry sending the arc's entry to 0 and its exit onto the positive real axis.
struct ArcFrame {
    DiskIsometry to_frame;
    double end;  // Euclidean radius of the exit in the frame
};

ArcFrame frame_of(const BaseArc& a) {
    const auto center = DiskIsometry::recentering(a.entry_point.z());
    const Complex h = center.apply(a.hit_point.z());
    const auto rot = DiskIsometry::rotation(-std::arg(h));
    return {rot.compose(center), std::abs(h)};
}

std::vector<DiskPoint> sample_arc(const BaseArc& a, int samples) {
    const ArcFrame f = frame_of(a);
    const auto back = f.to_frame.inverse();
    const double length = 2.0 * std::atanh(f.end);
    std::vector<DiskPoint> out;
    for (int i = 0; i <= samples; ++i) {
        const double t = static_cast<double>(i) / samples;
        out.push_back(back.apply(DiskPoint(std::tanh(t * length / 2.0), 0.0)));
    }
    return out;
}

double distance_to_arc(DiskPoint q, const ArcFrame& f) {
    const Complex z = f.to_frame.apply(q.z());
    // Foot of the perpendicular from z to the real diameter.
    double foot = 0.0;
    if (std::fabs(z.real()) > 1e-300) {
        const double c = (std::norm(z) + 1.0) / (2.0 * z.real());
        foot = c - std::copysign(std::sqrt(std::max(0.0, c * c - 1.0)), c);
    }
    foot = std::clamp(foot, 0.0, f.end);
    return hyp_distance(DiskPoint(z), DiskPoint(foot, 0.0));
}

double directed(const BaseArc& from, const BaseArc& to, int samples) {
    const ArcFrame f = frame_of(to);
    double worst = 0.0;
    for (const auto& q : sample_arc(from, samples)) worst = std::max(worst, distance_to_arc(q, f));
    return worst;
}

}  // namespace

double arc_hausdorff(const BaseArc& a, const BaseArc& b, int samples) {
    if (samples < 2) throw Error(ErrorCode::InvalidArgument, "arc_hausdorff needs at least 2 samples");
    return std::max(directed(a, b, samples), directed(b, a, samples));
}

std::pair<BoundaryAngle, BoundaryAngle> mobius_bounce(const DirectedGeodesic& side, const DirectedGeodesic& incoming) {
    const auto r = DiskIsometry::reflection(side);
    return {r.apply(incoming.theta()), r.apply(incoming.phi())};
}

std::pair<BoundaryAngle, BoundaryAngle> frame_bounce(const DirectedGeodesic& side, const DirectedGeodesic& incoming,
                                                      BounceFrame* frame) {
    // Rotate so the side's endpoints sit at -omega, +omega.
    const double a = side.theta().radians();
    const double b = side.phi().radians();
    const double omega = boundary_distance(side.theta(), side.phi()) / 2.0;
    const double ccw = normalize_angle(b - a);
    const double mid = ccw <= kPi ? a + omega : b + omega;

    const double r0 = std::log(1.0 / std::tan(omega / 2.0));
    const double shrink = std::exp(-2.0 * r0);
    const double theta = normalize_angle(incoming.theta().radians() - mid);
    const double phi = normalize_angle(incoming.phi().radians() - mid);

    const double theta_new = 2.0 * std::atan2(shrink * std::cos(theta / 2.0), std::sin(theta / 2.0));
    const double M = 1.0 / std::tan((phi - theta) / 2.0);
    const double s = std::sin(theta / 2.0);
    const double c = std::cos(theta / 2.0);
    const double M_prime = -M * std::exp(2.0 * r0) * (s * s + shrink * shrink * c * c) - std::sinh(2.0 * r0) * std::sin(theta);
    const double phi_new = theta_new + 2.0 * std::atan2(1.0, M_prime);
    if (frame) *frame = BounceFrame{omega, r0, M, M_prime};
    return {BoundaryAngle(theta_new + mid), BoundaryAngle(phi_new + mid)};
}

std::string trajectory_csv(const TrajectoryWindow& w) {
    std::ostringstream out;
    out << std::setprecision(17);
    out << "index,theta_rad,phi_rad,side,hit_re,hit_im\n";
    for (int i = w.first_index(); i <= w.last_index(); ++i) {
        const auto& a = w.at(i);
        out << i << ',' << a.geodesic.theta().radians() << ',' << a.geodesic.phi().radians() << ',' << a.hit_side << ','
            << a.hit_point.re << ',' << a.hit_point.im << '\n';
    }
    return out.str();
}

std::string code_text(const TrajectoryWindow& w) { return code(w).text() + "\n"; }

}  // namespace hypbill
