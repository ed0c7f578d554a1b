#include "pkcolor/grid.hpp"

#include <ostream>
#include <stdexcept>

namespace pkcolor {

std::ostream& operator<<(std::ostream& os, Vertex v) {
    return os << '(' << v.row << ',' << v.col << ')';
}

std::string to_string(Vertex v) {
    return "(" + std::to_string(v.row) + "," + std::to_string(v.col) + ")";
}

Direction direction_between(Vertex a, Vertex b) {
    for (Direction d : kClockwise) {
        if (step(a, d) == b) return d;
    }
    throw std::invalid_argument("vertices " + to_string(a) + " and " + to_string(b) +
                                " are not adjacent");
}

std::string to_string(Side s) {
    switch (s) {
        case Side::Top: return "top";
        case Side::Bottom: return "bottom";
        case Side::Left: return "left";
        case Side::Right: return "right";
    }
    return "?";
}

int SideSet::size() const {
    int n = 0;
    for (std::uint8_t b = bits_; b != 0; b &= static_cast<std::uint8_t>(b - 1)) ++n;
    return n;
}

std::vector<Side> SideSet::to_vector() const {
    std::vector<Side> out;
    for (Side s : {Side::Top, Side::Bottom, Side::Left, Side::Right}) {
        if (contains(s)) out.push_back(s);
    }
    return out;
}

std::string to_string(Transform t) {
    switch (t) {
        case Transform::Identity: return "identity";
        case Transform::Rotate90: return "rotate90";
        case Transform::Rotate180: return "rotate180";
        case Transform::Rotate270: return "rotate270";
        case Transform::FlipHorizontal: return "flip-horizontal";
        case Transform::FlipVertical: return "flip-vertical";
        case Transform::Transpose: return "transpose";
        case Transform::AntiTranspose: return "anti-transpose";
    }
    return "?";
}

bool swaps_axes(Transform t) {
    return t == Transform::Rotate90 || t == Transform::Rotate270 || t == Transform::Transpose ||
           t == Transform::AntiTranspose;
}

Transform inverse(Transform t) {
    if (t == Transform::Rotate90) return Transform::Rotate270;
    if (t == Transform::Rotate270) return Transform::Rotate90;
    return t;
}

GridGraph::GridGraph(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) {
        throw std::invalid_argument("grid dimensions must be positive, got " +
                                    std::to_string(rows) + "x" + std::to_string(cols));
    }
}

std::vector<Vertex> GridGraph::neighbors(Vertex v) const {
    std::vector<Vertex> out;
    out.reserve(4);
    for (Direction d : kClockwise) {
        Vertex w = step(v, d);
        if (contains(w)) out.push_back(w);
    }
    return out;
}

int GridGraph::degree(Vertex v) const {
    int n = 0;
    for (Direction d : kClockwise) n += contains(step(v, d)) ? 1 : 0;
    return n;
}

bool GridGraph::adjacent(Vertex a, Vertex b) const {
    if (!contains(a) || !contains(b)) return false;
    int dr = a.row - b.row;
    int dc = a.col - b.col;
    return (dr < 0 ? -dr : dr) + (dc < 0 ? -dc : dc) == 1;
}

SideSet GridGraph::sides_touched(Vertex v) const {
    SideSet s;
    if (v.row == 0) s.insert(Side::Top);
    if (v.row == rows_ - 1) s.insert(Side::Bottom);
    if (v.col == 0) s.insert(Side::Left);
    if (v.col == cols_ - 1) s.insert(Side::Right);
    return s;
}

std::vector<std::pair<Vertex, Vertex>> GridGraph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(static_cast<std::size_t>(edge_count()));
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            if (c + 1 < cols_) out.push_back({{r, c}, {r, c + 1}});
            if (r + 1 < rows_) out.push_back({{r, c}, {r + 1, c}});
        }
    }
    return out;
}

GridGraph make_grid(int rows, int cols) { return GridGraph(rows, cols); }

GridGraph transformed_grid(const GridGraph& g, Transform t) {
    return swaps_axes(t) ? GridGraph(g.cols(), g.rows()) : g;
}

Vertex apply_transform(const GridGraph& g, Transform t, Vertex v) {
    const int m = g.rows();
    const int n = g.cols();
    switch (t) {
        case Transform::Identity: return v;
        case Transform::Rotate90: return {v.col, m - 1 - v.row};
        case Transform::Rotate180: return {m - 1 - v.row, n - 1 - v.col};
        case Transform::Rotate270: return {n - 1 - v.col, v.row};
        case Transform::FlipHorizontal: return {v.row, n - 1 - v.col};
        case Transform::FlipVertical: return {m - 1 - v.row, v.col};
        case Transform::Transpose: return {v.col, v.row};
        case Transform::AntiTranspose: return {n - 1 - v.col, m - 1 - v.row};
    }
    return v;
}

Vertex apply_symmetry(const GridGraph& g, Transform t, Vertex v) {
    if (swaps_axes(t) && !g.is_square()) {
        throw std::invalid_argument(to_string(t) + " is not a symmetry of a non-square " +
                                    std::to_string(g.rows()) + "x" + std::to_string(g.cols()) +
                                    " grid");
    }
    if (!g.contains(v)) throw std::out_of_range("vertex " + to_string(v) + " not in grid");
    return apply_transform(g, t, v);
}

std::vector<Transform> symmetries(const GridGraph& g) {
    std::vector<Transform> out;
    for (Transform t : kAllTransforms) {
        if (!swaps_axes(t) || g.is_square()) out.push_back(t);
    }
    return out;
}

}  // namespace pkcolor
