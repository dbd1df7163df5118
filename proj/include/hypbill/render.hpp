#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypbill/billiard.hpp"
#include "hypbill/polygon.hpp"

namespace hypbill {

struct Scene {
    std::vector<PolygonCopy> copies;                 // the first is the base polygon
    std::vector<DirectedGeodesic> geodesics;         // full geodesics
    std::vector<BaseArc> arcs;                       // orbit inside the base polygon
};

/// Base polygon, copies unfolded along `unfold_word`, and the closed orbit of
/// `orbit_word` (axis plus arcs) when that word decodes.
Scene unfolding_scene(const CheckedPolygon& p, const std::vector<int>& unfold_word, const Word& orbit_word = {});

/// SVG in the unit-disk viewport; byte-stable for fixed input.
std::string render_svg(const CheckedPolygon& p, const Scene& scene);

}  // namespace hypbill
