#pragma once

#include <array>
#include <compare>
#include <initializer_list>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace pkcolor {

/// Grid vertex addressed by (row, col); row 0 is the top row, col 0 the left column.
struct Vertex {
    int row = 0;
    int col = 0;

    auto operator<=>(const Vertex&) const = default;
};

std::ostream& operator<<(std::ostream& os, Vertex v);
std::string to_string(Vertex v);

/// Compass directions in clockwise order.  Arithmetic on the underlying value
/// modulo 4 rotates: +1 is a clockwise quarter turn.
enum class Direction : std::uint8_t { North = 0, East = 1, South = 2, West = 3 };

inline constexpr std::array<Direction, 4> kClockwise = {
    Direction::North, Direction::East, Direction::South, Direction::West};

constexpr Direction rotate_cw(Direction d, int quarter_turns) {
    return static_cast<Direction>(((static_cast<int>(d) + quarter_turns) % 4 + 4) % 4);
}

constexpr Direction opposite(Direction d) { return rotate_cw(d, 2); }

constexpr Vertex step(Vertex v, Direction d) {
    switch (d) {
        case Direction::North: return {v.row - 1, v.col};
        case Direction::East: return {v.row, v.col + 1};
        case Direction::South: return {v.row + 1, v.col};
        case Direction::West: return {v.row, v.col - 1};
    }
    return v;
}

/// Direction of the unit step a -> b.  Throws if a and b are not unit-adjacent.
Direction direction_between(Vertex a, Vertex b);

enum class Side : std::uint8_t { Top = 0, Bottom = 1, Left = 2, Right = 3 };

std::string to_string(Side s);

/// Small set of grid sides.
class SideSet {
public:
    constexpr SideSet() = default;
    constexpr SideSet(std::initializer_list<Side> sides) {
        for (Side s : sides) insert(s);
    }

    constexpr void insert(Side s) { bits_ |= bit(s); }
    constexpr void merge(SideSet other) { bits_ |= other.bits_; }
    constexpr bool contains(Side s) const { return (bits_ & bit(s)) != 0; }
    constexpr bool empty() const { return bits_ == 0; }
    int size() const;
    std::vector<Side> to_vector() const;

    constexpr bool operator==(const SideSet&) const = default;

private:
    static constexpr std::uint8_t bit(Side s) {
        return static_cast<std::uint8_t>(1u << static_cast<unsigned>(s));
    }
    std::uint8_t bits_ = 0;
};

/// Dihedral transforms of a rectangle.  Transforms that swap the axes
/// (quarter rotations, transposes) map an m x n grid onto an n x m grid; they
/// are automorphisms only of square grids.  Declaration order is the
/// canonical order used for deterministic tie-breaking.
enum class Transform : std::uint8_t {
    Identity,
    Rotate90,        // clockwise
    Rotate180,
    Rotate270,       // clockwise, i.e. one counter-clockwise quarter turn
    FlipHorizontal,  // mirror left <-> right
    FlipVertical,    // mirror top <-> bottom
    Transpose,       // (r, c) -> (c, r)
    AntiTranspose,   // reflection in the anti-diagonal
};

inline constexpr std::array<Transform, 8> kAllTransforms = {
    Transform::Identity,       Transform::Rotate90,     Transform::Rotate180,
    Transform::Rotate270,      Transform::FlipHorizontal, Transform::FlipVertical,
    Transform::Transpose,      Transform::AntiTranspose};

std::string to_string(Transform t);
bool swaps_axes(Transform t);
Transform inverse(Transform t);

/// The grid graph P_rows x P_cols.  Immutable value type.
class GridGraph {
public:
    /// Throws std::invalid_argument unless rows >= 1 and cols >= 1.
    GridGraph(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int vertex_count() const { return rows_ * cols_; }
    int edge_count() const { return rows_ * (cols_ - 1) + cols_ * (rows_ - 1); }
    int cell_count() const { return (rows_ - 1) * (cols_ - 1); }
    bool is_square() const { return rows_ == cols_; }

    bool contains(Vertex v) const {
        return v.row >= 0 && v.row < rows_ && v.col >= 0 && v.col < cols_;
    }
    int index(Vertex v) const { return v.row * cols_ + v.col; }
    Vertex vertex(int index) const { return {index / cols_, index % cols_}; }

    /// Neighbors in clockwise order N, E, S, W; absent neighbors are skipped.
    std::vector<Vertex> neighbors(Vertex v) const;
    int degree(Vertex v) const;
    bool adjacent(Vertex a, Vertex b) const;

    /// Sides of the rectangle the vertex lies on.  On a single-row grid every
    /// vertex is on both Top and Bottom.
    SideSet sides_touched(Vertex v) const;

    /// All edges (a, b) with index(a) < index(b), in row-major order of a.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    bool operator==(const GridGraph&) const = default;

private:
    int rows_;
    int cols_;
};

GridGraph make_grid(int rows, int cols);

inline SideSet sides_touched(const GridGraph& g, Vertex v) { return g.sides_touched(v); }

/// Shape of the image of g under t (rows and cols swap for axis-swapping transforms).
GridGraph transformed_grid(const GridGraph& g, Transform t);

/// Maps v in g to its image in transformed_grid(g, t).  No square check.
Vertex apply_transform(const GridGraph& g, Transform t, Vertex v);

/// Automorphism form: rejects axis-swapping transforms on non-square grids.
Vertex apply_symmetry(const GridGraph& g, Transform t, Vertex v);

/// Automorphisms of g: 8 transforms for square grids, 4 otherwise.
std::vector<Transform> symmetries(const GridGraph& g);

}  // namespace pkcolor
