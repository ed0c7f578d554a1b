#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pkcolor/grid.hpp"

namespace pkcolor {

using Color = int;

/// Total assignment of colors 0..palette-1 to the vertices of a grid.
class Coloring {
public:
    /// Throws std::invalid_argument if the size or any color is out of range.
    Coloring(GridGraph grid, int palette, std::vector<Color> colors);

    const GridGraph& grid() const { return grid_; }
    int palette() const { return palette_; }
    Color at(Vertex v) const { return colors_[static_cast<std::size_t>(grid_.index(v))]; }
    Color at(int index) const { return colors_[static_cast<std::size_t>(index)]; }
    std::span<const Color> colors() const { return colors_; }

    bool operator==(const Coloring&) const = default;

private:
    GridGraph grid_;
    int palette_;
    std::vector<Color> colors_;
};

/// Builds a coloring from rows of colors; the palette is max color + 1
/// unless given explicitly.
Coloring coloring_from_rows(const std::vector<std::vector<Color>>& rows, int palette = 0);

/// Relabels the grid through t (the result lives on transformed_grid).
Coloring transform_coloring(const Coloring& col, Transform t);

bool is_proper(const Coloring& col);
std::optional<std::pair<Vertex, Vertex>> monochromatic_edge(const Coloring& col);

/// Error raised by parse_coloring; line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& what);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Text format: "<rows> <cols> <palette>" then one line per row of
/// space-separated color indices.  LF newlines, no trailing whitespace.
Coloring parse_coloring(std::string_view text);
std::string to_text(const Coloring& col);

/// One character per color, rows separated by newlines (no header).
std::string render_ascii(const Coloring& col);

/// Unordered color pair, stored with first < second.
struct ColorPair {
    Color first = 0;
    Color second = 1;

    ColorPair() = default;
    ColorPair(Color a, Color b);
    bool contains(Color c) const { return c == first || c == second; }
    Color other(Color c) const { return c == first ? second : first; }
    auto operator<=>(const ColorPair&) const = default;
};

std::vector<ColorPair> all_pairs(int palette);

enum class ComponentClass { Peripheral, PartialType1, PartialType2, Interior };

std::string to_string(ComponentClass c);

struct Classification {
    ComponentClass kind = ComponentClass::Interior;
    SideSet touched_sides;
    /// Maps the grid so a partial component touches exactly {Top} or
    /// {Top, Left}.  May swap axes on non-square grids.  Identity otherwise.
    Transform normalization = Transform::Identity;
    /// The opposite sides reached by a peripheral component: Top/Bottom when
    /// both are touched, else Left/Right.
    std::optional<std::pair<Side, Side>> opposite_sides;
};

Classification classify(const GridGraph& g, std::span<const Vertex> vertices);

struct BicoloredComponent {
    GridGraph grid;
    ColorPair pair;
    std::vector<Vertex> vertices;  // sorted row-major
    int edge_count = 0;            // edges of the induced subgraph
    /// False for components that contain no edge joining both colors; such
    /// components are single vertices (the coloring is proper) and are kept
    /// only so the partition of {a,b}-colored vertices is total.
    bool truly_bicolored = false;
    Classification classification;

    ComponentClass kind() const { return classification.kind; }
    bool contains(Vertex v) const;
    bool side_touching() const { return kind() != ComponentClass::Interior; }
};

/// Maximal connected sets of vertices colored a or b, ordered by their
/// smallest vertex.  Requires a != b, both below the palette size.
std::vector<BicoloredComponent> bicolored_components(const Coloring& col, ColorPair pair);

/// The {pair}-component containing v.  Throws if v's color is not in pair.
BicoloredComponent component_containing(const Coloring& col, ColorPair pair, Vertex v);

/// Re-runs classification for an existing component.
Classification classify(const BicoloredComponent& comp);

}  // namespace pkcolor
