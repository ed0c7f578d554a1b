#pragma once

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pkcolor/coloring.hpp"

namespace pkcolor {

/// Closed clockwise walk around the outer face of a connected vertex set,
/// following the rotation system N, E, S, W: at each vertex the walk leaves
/// by the first component edge found rotating clockwise from the edge it
/// arrived on.  The outer face always lies on the walker's left.
struct BoundaryWalk {
    GridGraph grid;
    /// w_0 .. w_L with w_L == w_0.  A single-vertex component yields {v}.
    std::vector<Vertex> vertices;

    int edge_count() const { return vertices.size() < 2 ? 0 : static_cast<int>(vertices.size()) - 1; }
    std::vector<Direction> directions() const;
};

/// Starts at the smallest (row, col) vertex.  `component` must be nonempty
/// and connected.
BoundaryWalk boundary_walk(const GridGraph& g, std::span<const Vertex> component);
BoundaryWalk boundary_walk(const BicoloredComponent& comp);

/// Maximal stretches of the walk along which the walker's left hand is
/// outside the grid rectangle.  A stretch is a run of corners whose left
/// sweep leaves the grid, joined by edges that lie on a side with their left
/// normal pointing out.  Isolated corners (a dead end touching a side) form
/// single-vertex segments.
std::vector<std::vector<Vertex>> outside_segments(const BoundaryWalk& w);

/// Maximal subwalk of a boundary containing no outside segment.  Vertices are
/// stored in the normalized frame of the component (see Classification); the
/// walk is clockwise in that frame.
struct PartialWalk {
    GridGraph source_grid;  // grid of the coloring the component came from
    Transform frame = Transform::Identity;
    GridGraph grid;         // transformed_grid(source_grid, frame)
    std::vector<Vertex> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
    Vertex first() const { return vertices.front(); }
    Vertex last() const { return vertices.back(); }
    /// The walk's vertices mapped back into source_grid coordinates.
    std::vector<Vertex> original_vertices() const;
    Vertex to_original(Vertex v) const;
};

/// Splits a walk at its outside segments (frame = identity, natural order).
std::vector<PartialWalk> split_walk(const BoundaryWalk& w);

/// Partial walks of a side-touching component.  For partial components the
/// walk is computed in the normalized frame and the one starting at the
/// rightmost top-side vertex comes first.  Throws for interior components.
std::vector<PartialWalk> partial_walks(const BicoloredComponent& comp);

/// Angle on the walker's left at each interior vertex: 90 for a left turn,
/// 180 straight, 270 for a right turn, 360 for a backtrack.  Requires r >= 3.
std::vector<int> angle_sequence(const PartialWalk& pw);

/// Raised when an input does not satisfy the premises of the structural
/// walk checks (palette, properness, single edge, interior component).
class PremiseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ClauseResult {
    bool holds = true;
    std::string detail;
    std::optional<Vertex> location;  // source-grid coordinates
};

struct WalkReport {
    /// (1) r >= 3; (2) both end angles are 90; (3) angle i is 90 iff i is odd;
    /// (4) r is odd; (5) odd-indexed walk vertices and the third-colored
    /// fourth corners of their unit squares form a connected two-colored set.
    std::array<ClauseResult, 5> clauses;

    bool all_hold() const;
};

WalkReport check_walk_clauses(const Coloring& col, const BicoloredComponent& comp,
                            const PartialWalk& pw);

/// Unit cell identified by its top-left corner.
struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

class DcError : public std::runtime_error {
public:
    DcError(const std::string& what, std::optional<Vertex> location)
        : std::runtime_error(what), location_(location) {}
    std::optional<Vertex> location() const { return location_; }

private:
    std::optional<Vertex> location_;
};

struct DcConstruction {
    PartialWalk source;
    ColorPair pair;                      // {c1, c3}
    std::vector<Vertex> odd_vertices;    // v_1, v_3, ..., v_r (source coords)
    std::vector<Vertex> fourth_vertices; // u_1 .. u_{(r-1)/2}, not necessarily distinct
    std::vector<Cell> squares;           // one unit cell per u, source coords
    BicoloredComponent component;        // the {c1, c3}-component containing them
};

/// Builds the neighboring two-colored component from a partial walk.
/// Throws DcError if clauses (1)-(4) fail or a fourth corner is not
/// third-colored; neither can happen in a proper 3-coloring.
DcConstruction derive_dc(const Coloring& col, const BicoloredComponent& comp,
                         const PartialWalk& pw);

/// Cells enclosed between the partial walk and the grid sides, on the
/// walk's left.  Both endpoints must lie on a side.  Cells come back in
/// source-grid coordinates, sorted.
std::vector<Cell> rc_region(const PartialWalk& pw);
int rc_area(const PartialWalk& pw);

struct DcStep {
    BicoloredComponent component;
    std::optional<int> area;       // absent for the final peripheral stage
    std::optional<Vertex> first;   // v_1 of the partial walk, source coords
    std::optional<Vertex> last;    // v_r
    std::vector<Cell> squares;     // cells of the unit squares used for the next stage
};

struct DcTrace {
    std::vector<DcStep> steps;
    bool reached_peripheral = false;

    /// area(t+2) < area(t) wherever both are defined.
    bool areas_decrease() const;
};

/// Replaces C by D_C until C is peripheral or step_cap replacements were
/// made.  Requires a proper 3-coloring and a side-touching, truly bicolored
/// start component.
DcTrace iterate_dc(const Coloring& col, const BicoloredComponent& start, int step_cap);

}  // namespace pkcolor
