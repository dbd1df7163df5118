#include "hypbill/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <nlohmann/json.hpp>
#include <set>

#include "hypbill/error.hpp"

namespace hypbill {

using nlohmann::json;

const char* polygon_class_name(PolygonClass c) {
    switch (c) {
        case PolygonClass::Ideal: return "ideal";
        case PolygonClass::CompactRational: return "compact_rational";
        case PolygonClass::SemiIdealRational: return "semi_ideal_rational";
    }
    return "unknown";
}

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const char* where) {
    for (const auto& item : obj.items()) {
        if (!allowed.count(item.key())) parse_fail(std::string("unknown field '") + item.key() + "' in " + where);
    }
}

double number_field(const json& v, const char* name) {
    if (!v.is_number()) parse_fail(std::string("field '") + name + "' must be a number");
    return v.get<double>();
}

VertexSpec parse_vertex(const json& v) {
    if (!v.is_object()) parse_fail("vertex entries must be objects");
    reject_unknown(v, {"kind", "position_rad", "lambda", "position"}, "vertex");
    if (!v.contains("kind") || !v["kind"].is_string()) parse_fail("vertex needs a string 'kind'");
    const auto kind = v["kind"].get<std::string>();
    VertexSpec out;
    if (kind == "ideal") {
        out.kind = VertexKind::Ideal;
    } else if (kind == "rational") {
        out.kind = VertexKind::Rational;
    } else {
        parse_fail("vertex kind must be 'ideal' or 'rational'");
    }
    if (v.contains("position_rad")) out.position_rad = number_field(v["position_rad"], "position_rad");
    if (v.contains("lambda")) {
        const double l = number_field(v["lambda"], "lambda");
        if (l != std::floor(l) || l < 2.0 || l > 1e6) {
            throw Error(ErrorCode::NonRationalAngle, "lambda must be an integer >= 2");
        }
        out.lambda = static_cast<int>(l);
    }
    if (v.contains("position")) {
        const auto& p = v["position"];
        if (!p.is_array() || p.size() != 2) parse_fail("'position' must be [re, im]");
        out.position = Complex(number_field(p[0], "position"), number_field(p[1], "position"));
    }
    return out;
}

}  // namespace

PolygonSpec parse_polygon_spec(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        parse_fail(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) parse_fail("polygon spec must be a JSON object");
    reject_unknown(doc, {"class", "vertices", "placement", "rotation_rad"}, "polygon spec");
    PolygonSpec spec;
    if (!doc.contains("class") || !doc["class"].is_string()) parse_fail("polygon spec needs a string 'class'");
    const auto cls = doc["class"].get<std::string>();
    if (cls == "ideal") {
        spec.polygon_class = PolygonClass::Ideal;
    } else if (cls == "compact_rational") {
        spec.polygon_class = PolygonClass::CompactRational;
    } else if (cls == "semi_ideal_rational") {
        spec.polygon_class = PolygonClass::SemiIdealRational;
    } else {
        parse_fail("unknown polygon class '" + cls + "'");
    }
    if (!doc.contains("vertices") || !doc["vertices"].is_array()) parse_fail("polygon spec needs a 'vertices' array");
    for (const auto& v : doc["vertices"]) spec.vertices.push_back(parse_vertex(v));
    if (doc.contains("placement")) {
        if (!doc["placement"].is_string()) parse_fail("'placement' must be a string");
        const auto pl = doc["placement"].get<std::string>();
        if (pl == "regular_symmetric") {
            spec.placement = Placement::RegularSymmetric;
        } else if (pl == "explicit") {
            spec.placement = Placement::Explicit;
        } else {
            parse_fail("unknown placement '" + pl + "'");
        }
    }
    if (doc.contains("rotation_rad")) spec.rotation_rad = number_field(doc["rotation_rad"], "rotation_rad");
    return spec;
}

std::string polygon_spec_to_json(const PolygonSpec& spec) {
    json doc;
    doc["class"] = polygon_class_name(spec.polygon_class);
    doc["placement"] = spec.placement == Placement::Explicit ? "explicit" : "regular_symmetric";
    doc["rotation_rad"] = spec.rotation_rad;
    json verts = json::array();
    for (const auto& v : spec.vertices) {
        json jv;
        jv["kind"] = v.kind == VertexKind::Ideal ? "ideal" : "rational";
        if (v.position_rad) jv["position_rad"] = *v.position_rad;
        if (v.lambda) jv["lambda"] = *v.lambda;
        if (v.position) jv["position"] = {v.position->real(), v.position->imag()};
        verts.push_back(jv);
    }
    doc["vertices"] = verts;
    return doc.dump();
}

double spec_area(const PolygonSpec& spec) {
    double a = (spec.k() - 2) * kPi;
    for (const auto& v : spec.vertices) {
        if (v.kind == VertexKind::Rational && v.lambda) a -= kPi / *v.lambda;
    }
    return a;
}

namespace {

Complex recenter(Complex p, Complex z) { return (z - p) / (1.0 - std::conj(p) * z); }

double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

double vertex_angle(Complex prev, Complex here, Complex next) {
    return std::fabs(std::arg(recenter(here, next) / recenter(here, prev)));
}

/// Boundary points where the Klein chord through p, q meets the circle,
/// ordered from the p side to the q side.
std::pair<Complex, Complex> chord_ends(Complex p, Complex q) {
    const Complex d = q - p;
    const double a = std::norm(d);
    const double b = 2.0 * (p.real() * d.real() + p.imag() * d.imag());
    const double c = std::norm(p) - 1.0;
    const double disc = std::sqrt(std::max(0.0, b * b - 4.0 * a * c));
    // Stable roots of a t^2 + b t + c = 0 with c <= 0.
    const double qq = -0.5 * (b + std::copysign(disc, b));
    double t1 = qq / a;
    double t2 = c / qq;
    if (t1 > t2) std::swap(t1, t2);
    return {p + t1 * d, p + t2 * d};
}

void check_class(const PolygonSpec& spec) {
    int ideal = 0;
    int rational = 0;
    for (const auto& v : spec.vertices) {
        if (v.kind == VertexKind::Ideal) {
            if (v.lambda) throw Error(ErrorCode::ClassMismatch, "ideal vertex carries a lambda");
            ++ideal;
        } else {
            if (!v.lambda) throw Error(ErrorCode::NonRationalAngle, "rational vertex needs lambda");
            if (*v.lambda < 2) throw Error(ErrorCode::NonRationalAngle, "lambda must be >= 2");
            ++rational;
        }
    }
    const bool ok = (spec.polygon_class == PolygonClass::Ideal && rational == 0) ||
                    (spec.polygon_class == PolygonClass::CompactRational && ideal == 0) ||
                    (spec.polygon_class == PolygonClass::SemiIdealRational && ideal > 0 && rational > 0);
    if (!ok) throw Error(ErrorCode::ClassMismatch, "vertex kinds do not match the polygon class");
}

struct RegularSolver {
    const PolygonSpec& spec;
    const Tolerances& tol;
    std::vector<double> ray;
    std::vector<double> radius;  // hyperbolic distance from 0; unused for ideal vertices

    static constexpr double kLo = 0.1;
    static constexpr double kHi = 20.0;
    static constexpr int kMaxIter = 200;

    Complex point(int j) const {
        if (spec.vertices[j].kind == VertexKind::Ideal) return std::polar(1.0, ray[j]);
        return std::polar(std::tanh(radius[j] / 2.0), ray[j]);
    }

    double angle(int j) const {
        const int k = spec.k();
        return vertex_angle(point((j + k - 1) % k), point(j), point((j + 1) % k));
    }

    double target(int j) const { return kPi / *spec.vertices[j].lambda; }

    template <class F>
    static double bisect(F&& residual) {
        // residual is decreasing in the radius.
        double lo = kLo;
        double hi = kHi;
        if (!(residual(lo) > 0.0 && residual(hi) < 0.0)) {
            throw Error(ErrorCode::BisectionFailure, "cannot bracket the circumradius");
        }
        for (int it = 0; it < kMaxIter && hi - lo > 1e-15; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (residual(mid) > 0.0) lo = mid; else hi = mid;
        }
        return 0.5 * (lo + hi);
    }

    std::vector<RealizedVertex> solve() {
        const int k = spec.k();
        ray.resize(k);
        radius.assign(k, 1.0);
        for (int j = 0; j < k; ++j) ray[j] = kTwoPi * j / k + spec.rotation_rad;
        std::vector<int> rational;
        for (int j = 0; j < k; ++j) {
            if (spec.vertices[j].kind == VertexKind::Rational) rational.push_back(j);
        }
        if (!rational.empty()) {
            // Common radius for the mean target, then per-vertex sweeps.
            double mean = 0.0;
            for (int j : rational) mean += target(j);
            mean /= static_cast<double>(rational.size());
            const double common = bisect([&](double r) {
                for (int j : rational) radius[j] = r;
                double s = 0.0;
                for (int j : rational) s += angle(j);
                return s / static_cast<double>(rational.size()) - mean;
            });
            for (int j : rational) radius[j] = common;
            for (int sweep = 0; sweep < kMaxIter; ++sweep) {
                double worst = 0.0;
                for (int j : rational) worst = std::max(worst, std::fabs(angle(j) - target(j)));
                if (worst < 0.01 * tol.ang) break;
                for (int j : rational) {
                    radius[j] = bisect([&](double r) {
                        radius[j] = r;
                        return angle(j) - target(j);
                    });
                }
            }
        }
        std::vector<RealizedVertex> out(k);
        for (int j = 0; j < k; ++j) {
            out[j].ideal = spec.vertices[j].kind == VertexKind::Ideal;
            out[j].point = point(j);
            out[j].lambda = out[j].ideal ? 0 : *spec.vertices[j].lambda;
        }
        return out;
    }
};

std::vector<RealizedVertex> explicit_vertices(const PolygonSpec& spec) {
    std::vector<RealizedVertex> out;
    for (const auto& v : spec.vertices) {
        RealizedVertex rv;
        if (v.kind == VertexKind::Ideal) {
            if (!v.position_rad) throw Error(ErrorCode::InvalidArgument, "explicit ideal vertex needs position_rad");
            rv.ideal = true;
            rv.point = std::polar(1.0, *v.position_rad + spec.rotation_rad);
        } else {
            if (!v.position) throw Error(ErrorCode::InvalidArgument, "explicit rational vertex needs position");
            if (std::abs(*v.position) >= 1.0) {
                throw Error(ErrorCode::InvalidArgument, "rational vertex must lie inside the disk");
            }
            rv.point = *v.position * std::polar(1.0, spec.rotation_rad);
            rv.lambda = *v.lambda;
        }
        out.push_back(rv);
    }
    return out;
}

}  // namespace

CheckedPolygon realize(const PolygonSpec& spec, std::vector<RealizedVertex> verts, const Tolerances& tol) {
    CheckedPolygon p;
    p.spec_ = spec;
    p.vertices_ = std::move(verts);
    const int k = p.k();
    for (const auto& v : p.vertices_) p.klein_.push_back(v.ideal ? v.point : to_klein(v.point));

    for (int i = 1; i <= k; ++i) {
        const int a = (i - 1 + k - 1) % k;  // v_{i-1}
        const int b = (i - 1) % k;          // v_i
        for (int j = 0; j < k; ++j) {
            if (j == a || j == b) continue;
            if (!(cross(p.klein_[b] - p.klein_[a], p.klein_[j] - p.klein_[a]) > 1e-14)) {
                throw Error(ErrorCode::NotConvex, "vertices are not in strictly convex counter-clockwise position");
            }
        }
    }
    for (int i = 1; i <= k; ++i) {
        const int a = (i - 1 + k - 1) % k;
        const int b = (i - 1) % k;
        auto [src, dst] = chord_ends(p.klein_[a], p.klein_[b]);
        if (p.vertices_[a].ideal) src = p.vertices_[a].point;
        if (p.vertices_[b].ideal) dst = p.vertices_[b].point;
        p.sides_.push_back(DirectedGeodesic::from_endpoints(BoundaryAngle::of(src), BoundaryAngle::of(dst), tol));
    }
    for (int j = 0; j < k; ++j) {
        const auto& v = p.vertices_[j];
        if (v.ideal) {
            p.angles_.push_back(0.0);
            continue;
        }
        const double ang = vertex_angle(p.vertices_[(j + k - 1) % k].point, v.point, p.vertices_[(j + 1) % k].point);
        if (std::fabs(ang - kPi / v.lambda) > tol.ang) {
            throw Error(ErrorCode::NonRationalAngle, "realized angle at v_" + std::to_string(j + 1) +
                                                         " differs from pi/" + std::to_string(v.lambda));
        }
        p.angles_.push_back(ang);
    }
    return p;
}

const RealizedVertex& CheckedPolygon::vertex(int i) const { return vertices_[((i - 1) % k() + k()) % k()]; }

Complex CheckedPolygon::klein_vertex(int i) const { return klein_[((i - 1) % k() + k()) % k()]; }

const DirectedGeodesic& CheckedPolygon::side(int i) const {
    if (i < 1 || i > k()) throw Error(ErrorCode::InvalidSideLabel, "side label out of range");
    return sides_[i - 1];
}

double CheckedPolygon::interior_angle(int i) const { return angles_[((i - 1) % k() + k()) % k()]; }

double CheckedPolygon::area() const { return spec_area(spec_); }

bool CheckedPolygon::contains(DiskPoint p) const {
    const Complex q = to_klein(p.z());
    for (int i = 1; i <= k(); ++i) {
        const Complex a = klein_vertex(i - 1);
        const Complex b = klein_vertex(i);
        if (!(cross(b - a, q - a) > 0.0)) return false;
    }
    return true;
}

std::pair<int, int> CheckedPolygon::sides_at_vertex(int i) const {
    const int s = ((i - 1) % k() + k()) % k() + 1;
    return {s, s % k() + 1};
}

CheckedPolygon validate(const PolygonSpec& spec, const Tolerances& tol) {
    check_class(spec);
    // Areas are multiples of pi/lcm(lambda); anything within tol.geo of 0 is 0.
    if (!(spec_area(spec) > tol.geo)) {
        throw Error(ErrorCode::DegenerateArea, "Gauss-Bonnet area is not positive");
    }
    std::vector<RealizedVertex> verts;
    if (spec.placement == Placement::Explicit) {
        verts = explicit_vertices(spec);
    } else {
        RegularSolver solver{spec, tol, {}, {}};
        verts = solver.solve();
    }
    return realize(spec, std::move(verts), tol);
}

CheckedPolygon build_regular(int k, const VertexSpec& vertex, double rotation_rad, const Tolerances& tol) {
    PolygonSpec spec;
    spec.polygon_class = vertex.kind == VertexKind::Ideal ? PolygonClass::Ideal : PolygonClass::CompactRational;
    spec.placement = Placement::RegularSymmetric;
    spec.rotation_rad = rotation_rad;
    spec.vertices.assign(k, VertexSpec{vertex.kind, {}, vertex.lambda, {}});
    if (k < 3 || !(spec_area(spec) > tol.geo)) {
        throw Error(ErrorCode::NoSuchPolygon, "no regular polygon with these angles");
    }
    return validate(spec, tol);
}

double area(const CheckedPolygon& p) { return p.area(); }

DirectedGeodesic PolygonCopy::side(const CheckedPolygon& base, int i) const {
    return placement.apply(base.side(i));
}

PolygonCopy image_of(const CheckedPolygon& p, const DiskIsometry& g) {
    PolygonCopy c{g, {}};
    for (int i = 1; i <= p.k(); ++i) {
        RealizedVertex v = p.vertex(i);
        v.point = g.apply(v.point);
        if (v.ideal) v.point /= std::abs(v.point);
        c.vertices.push_back(v);
    }
    return c;
}

std::pair<PolygonCopy, DiskIsometry> reflect_polygon(const CheckedPolygon& p, int side_label) {
    const auto r = DiskIsometry::reflection(p.side(side_label));
    return {image_of(p, r), r};
}

std::vector<PolygonCopy> unfold(const CheckedPolygon& p, const std::vector<int>& word) {
    if (word.empty()) throw Error(ErrorCode::InvalidArgument, "unfold needs a nonempty word");
    std::vector<PolygonCopy> out;
    DiskIsometry g = DiskIsometry::identity();
    for (std::size_t t = 0; t < word.size(); ++t) {
        if (t > 0 && word[t] == word[t - 1]) {
            throw Error(ErrorCode::ImmediateRepetition, "unfolding word repeats a side consecutively");
        }
        g = g.compose(DiskIsometry::reflection(p.side(word[t])));
        out.push_back(image_of(p, g));
    }
    return out;
}

}  // namespace hypbill
