#include "hypbill/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "hypbill/error.hpp"

namespace hypbill {

namespace {

std::string num(double x) {
    if (std::fabs(x) < 5e-7) x = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

std::string point(Complex z) { return num(z.real()) + " " + num(z.imag()); }

// Path piece from the current point `from` to `to` along geodesic g. Drawn in
// y-up user coordinates, so sweep 1 means counter-clockwise about the center.
std::string geodesic_piece(const DirectedGeodesic& g, Complex from, Complex to) {
    if (g.is_diameter()) return "L " + point(to);
    const Complex a = from - g.center();
    const Complex b = to - g.center();
    const double cross = a.real() * b.imag() - a.imag() * b.real();
    const std::string r = num(g.radius());
    return "A " + r + " " + r + " 0 0 " + (cross > 0.0 ? "1 " : "0 ") + point(to);
}

std::string polygon_path(const CheckedPolygon& base, const PolygonCopy& copy) {
    const int k = base.k();
    std::string d = "M " + point(copy.vertices[static_cast<std::size_t>(k - 1)].point);
    for (int i = 1; i <= k; ++i) {
        const Complex from = copy.vertices[static_cast<std::size_t>((i + k - 2) % k)].point;
        const Complex to = copy.vertices[static_cast<std::size_t>(i - 1)].point;
        d += " " + geodesic_piece(copy.side(base, i), from, to);
    }
    return d + " Z";
}

}  // namespace

Scene unfolding_scene(const CheckedPolygon& p, const std::vector<int>& unfold_word, const Word& orbit_word) {
    Scene scene;
    scene.copies.push_back(image_of(p, DiskIsometry::identity()));
    if (!unfold_word.empty()) {
        for (auto& c : unfold(p, unfold_word)) scene.copies.push_back(std::move(c));
    }
    if (orbit_word.empty()) return scene;
    try {
        const TrajectoryWindow orbit = decode_periodic(p, orbit_word);
        scene.geodesics.push_back(orbit.at(0).geodesic);
        scene.arcs = orbit.arcs;
    } catch (const Error&) {
        // Words that do not close up are drawn without an orbit.
    }
    return scene;
}

std::string render_svg(const CheckedPolygon& p, const Scene& scene) {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.05 -1.05 2.1 2.1\" width=\"640\" height=\"640\">\n";
    out << "<g transform=\"scale(1,-1)\" fill=\"none\" stroke-linejoin=\"round\">\n";
    out << "<circle cx=\"0\" cy=\"0\" r=\"1\" stroke=\"#000000\" stroke-width=\"0.006\"/>\n";
    for (std::size_t i = 0; i < scene.copies.size(); ++i) {
        const bool is_base = i == 0;
        out << "<path class=\"" << (is_base ? "polygon" : "copy") << "\" d=\"" << polygon_path(p, scene.copies[i])
            << "\" fill=\"" << (is_base ? "#d8e0f0" : "none") << "\" stroke=\"" << (is_base ? "#203060" : "#7080a0")
            << "\" stroke-width=\"0.004\"/>\n";
    }
    for (const auto& g : scene.geodesics) {
        out << "<path class=\"geodesic\" d=\"M " << point(g.source()) << " " << geodesic_piece(g, g.source(), g.target())
            << "\" stroke=\"#c02020\" stroke-width=\"0.005\"/>\n";
    }
    for (const BaseArc& arc : scene.arcs) {
        out << "<path class=\"trajectory\" d=\"M " << point(arc.entry_point.z()) << " "
            << geodesic_piece(arc.geodesic, arc.entry_point.z(), arc.hit_point.z())
            << "\" stroke=\"#e08000\" stroke-width=\"0.003\"/>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace hypbill
