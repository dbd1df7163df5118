#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypbill/config.hpp"
#include "hypbill/hypgeo.hpp"

namespace hypbill {

enum class VertexKind { Ideal, Rational };
enum class PolygonClass { Ideal, CompactRational, SemiIdealRational };
enum class Placement { RegularSymmetric, Explicit };

const char* polygon_class_name(PolygonClass c);

struct VertexSpec {
    VertexKind kind = VertexKind::Ideal;
    std::optional<double> position_rad;   // ideal vertices
    std::optional<int> lambda;            // rational vertices: interior angle pi/lambda
    std::optional<Complex> position;      // rational vertices, explicit placement

    static VertexSpec ideal(std::optional<double> angle = std::nullopt) { return {VertexKind::Ideal, angle, {}, {}}; }
    static VertexSpec rational(int lambda, std::optional<Complex> at = std::nullopt) {
        return {VertexKind::Rational, {}, lambda, at};
    }
};

/// Vertices are listed counter-clockwise; vertex j (0-based) is v_{j+1}.
struct PolygonSpec {
    PolygonClass polygon_class = PolygonClass::Ideal;
    std::vector<VertexSpec> vertices;
    Placement placement = Placement::RegularSymmetric;
    double rotation_rad = 0.0;

    int k() const { return static_cast<int>(vertices.size()); }
};

/// Parses the polygon JSON format. Throws Error(ParseError) on malformed input.
PolygonSpec parse_polygon_spec(const std::string& json_text);
std::string polygon_spec_to_json(const PolygonSpec& spec);

/// Realized vertex: an interior point or an ideal point on the circle.
struct RealizedVertex {
    bool ideal = false;
    Complex point;  // |point| = 1 when ideal
    int lambda = 0; // 0 for ideal
};

/// Validated polygon. Labels: side i (1..k) joins v_{i-1} and v_i, so vertex
/// v_i is shared by sides i and i+1 (indices mod k).
class CheckedPolygon {
public:
    const PolygonSpec& spec() const { return spec_; }
    int k() const { return static_cast<int>(vertices_.size()); }
    PolygonClass polygon_class() const { return spec_.polygon_class; }

    /// v_i for i in 1..k (v_0 = v_k).
    const RealizedVertex& vertex(int i) const;
    Complex klein_vertex(int i) const;
    /// Full geodesic carrying side i, directed from v_{i-1} to v_i.
    const DirectedGeodesic& side(int i) const;
    /// Realized interior angle at v_i (0 for ideal vertices).
    double interior_angle(int i) const;

    double area() const;
    /// Strict interior test (Klein model).
    bool contains(DiskPoint p) const;

    /// Sides adjacent to vertex v_i: (i, i+1).
    std::pair<int, int> sides_at_vertex(int i) const;

private:
    friend CheckedPolygon realize(const PolygonSpec&, std::vector<RealizedVertex>, const Tolerances&);

    PolygonSpec spec_;
    std::vector<RealizedVertex> vertices_;
    std::vector<Complex> klein_;
    std::vector<DirectedGeodesic> sides_;
    std::vector<double> angles_;
};

/// Gauss-Bonnet area of a spec: (k-2)pi - sum pi/lambda.
double spec_area(const PolygonSpec& spec);

CheckedPolygon validate(const PolygonSpec& spec, const Tolerances& tol = kDefaultTolerances);

CheckedPolygon build_regular(int k, const VertexSpec& vertex, double rotation_rad = 0.0,
                             const Tolerances& tol = kDefaultTolerances);

double area(const CheckedPolygon& p);

/// Image of the base polygon under an isometry; labels follow the images.
struct PolygonCopy {
    DiskIsometry placement;
    std::vector<RealizedVertex> vertices;  // image of v_1..v_k

    DirectedGeodesic side(const CheckedPolygon& base, int i) const;
};

PolygonCopy image_of(const CheckedPolygon& p, const DiskIsometry& g);

std::pair<PolygonCopy, DiskIsometry> reflect_polygon(const CheckedPolygon& p, int side_label);

/// Copy t (1-based) is the image under R_{w1} o ... o R_{wt} of base reflections.
std::vector<PolygonCopy> unfold(const CheckedPolygon& p, const std::vector<int>& word);

}  // namespace hypbill
