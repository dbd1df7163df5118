#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypbill/config.hpp"
#include "hypbill/error.hpp"
#include "hypbill/hypgeo.hpp"
#include "hypbill/polygon.hpp"
#include "hypbill/symdyn.hpp"

namespace hypbill {

/// Segment of a trajectory inside the polygon: it enters through entry_side
/// at entry_point and leaves through hit_side at hit_point.
struct BaseArc {
    DirectedGeodesic geodesic;
    int hit_side = 0;
    DiskPoint hit_point;
    int entry_side = 0;
    DiskPoint entry_point;
};

struct BoundaryHit {
    int side = 0;
    DiskPoint point;
};

/// Exit point of g from the polygon, strictly after `from` when given.
BoundaryHit first_hit(const CheckedPolygon& p, const DirectedGeodesic& g,
                      std::optional<DiskPoint> from = std::nullopt,
                      const Tolerances& tol = kDefaultTolerances);

/// The base arc carried by g (g must cross the polygon interior).
BaseArc make_arc(const CheckedPolygon& p, const DirectedGeodesic& g, const Tolerances& tol = kDefaultTolerances);

/// Bounce map: reflect in the hit side and follow to the next side.
BaseArc bounce(const CheckedPolygon& p, const BaseArc& arc, const Tolerances& tol = kDefaultTolerances);

/// Inverse bounce map via orientation reversal.
BaseArc unbounce(const CheckedPolygon& p, const BaseArc& arc, const Tolerances& tol = kDefaultTolerances);

/// Finite window of a pointed geodesic; arcs[origin] is index 0.
struct TrajectoryWindow {
    std::vector<BaseArc> arcs;
    std::size_t origin = 0;

    int first_index() const { return -static_cast<int>(origin); }
    int last_index() const { return static_cast<int>(arcs.size()) - 1 - static_cast<int>(origin); }
    const BaseArc& at(int index) const { return arcs.at(static_cast<std::size_t>(index + static_cast<int>(origin))); }
};

enum class TerminationKind { TerminatedAtVertex, EscapedToIdealVertex, NoIntersection };

const char* termination_name(TerminationKind kind);

struct Termination {
    TerminationKind kind;
    int index;  // first index that could not be computed
    std::string detail;
    ErrorCode cause = ErrorCode::VertexHit;
};

struct SimulationResult {
    TrajectoryWindow window;
    std::optional<Termination> termination;
};

/// Termination record for an error raised while computing index `index`;
/// nullopt for errors that are not trajectory terminations.
std::optional<Termination> classify_termination(const Error& e, int index);

SimulationResult simulate(const CheckedPolygon& p, const BaseArc& start, int n_future, int n_past,
                          const Tolerances& tol = kDefaultTolerances);

/// Side-label word of the window, pointed at index 0.
PointedWord code(const TrajectoryWindow& w);

/// Closed orbit realizing the periodic word; window holds one period (or two
/// when the period is odd) starting with a hit on word[0].
TrajectoryWindow decode_periodic(const CheckedPolygon& p, const Word& word,
                                 const Tolerances& tol = kDefaultTolerances);

/// Max of the boundary distances of corresponding endpoints.
double dG(const BaseArc& a, const BaseArc& b);

/// Symmetric Hausdorff distance between two arcs, sampling each at
/// samples+1 points and measuring exact point-to-arc distances.
double arc_hausdorff(const BaseArc& a, const BaseArc& b, int samples);

/// Frame data of a bounce, with the reflecting side placed symmetrically
/// about angle 0 at half-angle omega.
struct BounceFrame {
    double omega = 0.0;
    double r0 = 0.0;
    double M = 0.0;
    double M_prime = 0.0;
};

/// Closed-form bounce in the symmetric frame. Returns the reflected
/// endpoints (theta', phi') in the original frame.
std::pair<BoundaryAngle, BoundaryAngle> frame_bounce(const DirectedGeodesic& side, const DirectedGeodesic& incoming,
                                                      BounceFrame* frame = nullptr);

/// Side geodesic reflection path for the same quantity.
std::pair<BoundaryAngle, BoundaryAngle> mobius_bounce(const DirectedGeodesic& side, const DirectedGeodesic& incoming);

std::string trajectory_csv(const TrajectoryWindow& w);
std::string code_text(const TrajectoryWindow& w);

}  // namespace hypbill
