#include "pkcolor/coloring.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <sstream>

namespace pkcolor {

Coloring::Coloring(GridGraph grid, int palette, std::vector<Color> colors)
    : grid_(grid), palette_(palette), colors_(std::move(colors)) {
    if (palette_ < 1) throw std::invalid_argument("palette size must be positive");
    if (static_cast<int>(colors_.size()) != grid_.vertex_count()) {
        throw std::invalid_argument("coloring has " + std::to_string(colors_.size()) +
                                    " entries for " + std::to_string(grid_.vertex_count()) +
                                    " vertices");
    }
    for (std::size_t i = 0; i < colors_.size(); ++i) {
        if (colors_[i] < 0 || colors_[i] >= palette_) {
            throw std::invalid_argument("color " + std::to_string(colors_[i]) + " at " +
                                        to_string(grid_.vertex(static_cast<int>(i))) +
                                        " outside palette of size " + std::to_string(palette_));
        }
    }
}

Coloring coloring_from_rows(const std::vector<std::vector<Color>>& rows, int palette) {
    if (rows.empty() || rows.front().empty()) throw std::invalid_argument("empty coloring");
    const int m = static_cast<int>(rows.size());
    const int n = static_cast<int>(rows.front().size());
    std::vector<Color> colors;
    colors.reserve(static_cast<std::size_t>(m * n));
    Color max_color = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("ragged coloring rows");
        for (Color c : row) {
            colors.push_back(c);
            max_color = std::max(max_color, c);
        }
    }
    return Coloring(GridGraph(m, n), palette > 0 ? palette : max_color + 1, std::move(colors));
}

Coloring transform_coloring(const Coloring& col, Transform t) {
    const GridGraph& g = col.grid();
    GridGraph image = transformed_grid(g, t);
    std::vector<Color> colors(static_cast<std::size_t>(image.vertex_count()));
    for (int i = 0; i < g.vertex_count(); ++i) {
        Vertex w = apply_transform(g, t, g.vertex(i));
        colors[static_cast<std::size_t>(image.index(w))] = col.at(i);
    }
    return Coloring(image, col.palette(), std::move(colors));
}

std::optional<std::pair<Vertex, Vertex>> monochromatic_edge(const Coloring& col) {
    for (const auto& [a, b] : col.grid().edges()) {
        if (col.at(a) == col.at(b)) return std::pair{a, b};
    }
    return std::nullopt;
}

bool is_proper(const Coloring& col) { return !monochromatic_edge(col).has_value(); }

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    long value;
    int column;
};

// Splits one line on single spaces; rejects anything but digits and single separators.
std::vector<Token> tokenize(std::string_view line, int line_no) {
    std::vector<Token> out;
    std::size_t i = 0;
    if (!line.empty() && line.back() == '\r') {
        throw ParseError(line_no, static_cast<int>(line.size()), "CR before LF");
    }
    while (i < line.size()) {
        if (line[i] < '0' || line[i] > '9') {
            throw ParseError(line_no, static_cast<int>(i) + 1,
                             std::string("unexpected character '") + line[i] + "'");
        }
        std::size_t j = i;
        while (j < line.size() && line[j] >= '0' && line[j] <= '9') ++j;
        long value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
        if (ec != std::errc{}) throw ParseError(line_no, static_cast<int>(i) + 1, "number out of range");
        out.push_back({value, static_cast<int>(i) + 1});
        i = j;
        if (i < line.size()) {
            if (line[i] != ' ') {
                throw ParseError(line_no, static_cast<int>(i) + 1,
                                 std::string("unexpected character '") + line[i] + "'");
            }
            ++i;
            if (i == line.size()) throw ParseError(line_no, static_cast<int>(i), "trailing whitespace");
        }
    }
    return out;
}

}  // namespace

Coloring parse_coloring(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) nl = text.size();
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    if (lines.empty()) throw ParseError(1, 1, "empty input");

    auto header = tokenize(lines[0], 1);
    if (header.size() != 3) {
        throw ParseError(1, 1, "header must be \"<rows> <cols> <palette>\"");
    }
    for (const Token& t : header) {
        if (t.value < 1 || t.value > 1'000'000) throw ParseError(1, t.column, "header value out of range");
    }
    const int rows = static_cast<int>(header[0].value);
    const int cols = static_cast<int>(header[1].value);
    const int palette = static_cast<int>(header[2].value);
    if (static_cast<int>(lines.size()) - 1 != rows) {
        const int line_no = std::min(static_cast<int>(lines.size()), rows + 1) + 1;
        throw ParseError(line_no, 1,
                         "expected " + std::to_string(rows) + " color rows, found " +
                             std::to_string(lines.size() - 1));
    }
    std::vector<Color> colors;
    colors.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
    for (int r = 0; r < rows; ++r) {
        const int line_no = r + 2;
        auto tokens = tokenize(lines[static_cast<std::size_t>(r) + 1], line_no);
        if (static_cast<int>(tokens.size()) != cols) {
            throw ParseError(line_no, 1,
                             "expected " + std::to_string(cols) + " colors, found " +
                                 std::to_string(tokens.size()));
        }
        for (const Token& t : tokens) {
            if (t.value >= palette) {
                throw ParseError(line_no, t.column,
                                 "color " + std::to_string(t.value) + " outside palette");
            }
            colors.push_back(static_cast<Color>(t.value));
        }
    }
    return Coloring(GridGraph(rows, cols), palette, std::move(colors));
}

std::string to_text(const Coloring& col) {
    const GridGraph& g = col.grid();
    std::ostringstream os;
    os << g.rows() << ' ' << g.cols() << ' ' << col.palette() << '\n';
    for (int r = 0; r < g.rows(); ++r) {
        for (int c = 0; c < g.cols(); ++c) {
            if (c > 0) os << ' ';
            os << col.at(Vertex{r, c});
        }
        os << '\n';
    }
    return os.str();
}

std::string render_ascii(const Coloring& col) {
    const GridGraph& g = col.grid();
    std::string out;
    for (int r = 0; r < g.rows(); ++r) {
        for (int c = 0; c < g.cols(); ++c) {
            Color k = col.at(Vertex{r, c});
            out.push_back(k < 10 ? static_cast<char>('0' + k) : static_cast<char>('a' + k - 10));
        }
        out.push_back('\n');
    }
    return out;
}

ColorPair::ColorPair(Color a, Color b) : first(std::min(a, b)), second(std::max(a, b)) {
    if (a == b) throw std::invalid_argument("color pair needs two distinct colors");
}

std::vector<ColorPair> all_pairs(int palette) {
    std::vector<ColorPair> out;
    for (Color a = 0; a < palette; ++a) {
        for (Color b = a + 1; b < palette; ++b) out.emplace_back(a, b);
    }
    return out;
}

std::string to_string(ComponentClass c) {
    switch (c) {
        case ComponentClass::Peripheral: return "peripheral";
        case ComponentClass::PartialType1: return "partial-type1";
        case ComponentClass::PartialType2: return "partial-type2";
        case ComponentClass::Interior: return "interior";
    }
    return "?";
}

namespace {

SideSet sides_of(const GridGraph& g, std::span<const Vertex> vertices) {
    SideSet s;
    for (Vertex v : vertices) s.merge(g.sides_touched(v));
    return s;
}

}  // namespace

Classification classify(const GridGraph& g, std::span<const Vertex> vertices) {
    Classification out;
    out.touched_sides = sides_of(g, vertices);
    const SideSet& s = out.touched_sides;
    if (s.empty()) {
        out.kind = ComponentClass::Interior;
        return out;
    }
    if (s.contains(Side::Top) && s.contains(Side::Bottom)) {
        out.kind = ComponentClass::Peripheral;
        out.opposite_sides = std::pair{Side::Top, Side::Bottom};
        return out;
    }
    if (s.contains(Side::Left) && s.contains(Side::Right)) {
        out.kind = ComponentClass::Peripheral;
        out.opposite_sides = std::pair{Side::Left, Side::Right};
        return out;
    }
    out.kind = s.size() == 1 ? ComponentClass::PartialType1 : ComponentClass::PartialType2;
    const SideSet target = s.size() == 1 ? SideSet{Side::Top} : SideSet{Side::Top, Side::Left};
    for (Transform t : kAllTransforms) {
        GridGraph image = transformed_grid(g, t);
        SideSet mapped;
        for (Vertex v : vertices) mapped.merge(image.sides_touched(apply_transform(g, t, v)));
        if (mapped == target) {
            out.normalization = t;
            return out;
        }
    }
    throw std::logic_error("no normalizing transform for partial component");
}

Classification classify(const BicoloredComponent& comp) {
    return classify(comp.grid, comp.vertices);
}

bool BicoloredComponent::contains(Vertex v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

namespace {

void check_pair(const Coloring& col, ColorPair pair) {
    if (pair.first < 0 || pair.second >= col.palette()) {
        throw std::invalid_argument("color pair outside palette");
    }
}

BicoloredComponent flood(const Coloring& col, ColorPair pair, Vertex seed,
                         std::vector<char>& seen) {
    const GridGraph& g = col.grid();
    BicoloredComponent comp{g, pair, {}, 0, false, {}};
    std::deque<Vertex> queue{seed};
    seen[static_cast<std::size_t>(g.index(seed))] = 1;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        comp.vertices.push_back(v);
        for (Vertex w : g.neighbors(v)) {
            if (!pair.contains(col.at(w))) continue;
            if (g.index(w) > g.index(v)) {
                ++comp.edge_count;
                if (col.at(w) != col.at(v)) comp.truly_bicolored = true;
            }
            auto& mark = seen[static_cast<std::size_t>(g.index(w))];
            if (!mark) {
                mark = 1;
                queue.push_back(w);
            }
        }
    }
    std::sort(comp.vertices.begin(), comp.vertices.end());
    comp.classification = classify(g, comp.vertices);
    return comp;
}

}  // namespace

std::vector<BicoloredComponent> bicolored_components(const Coloring& col, ColorPair pair) {
    check_pair(col, pair);
    const GridGraph& g = col.grid();
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<BicoloredComponent> out;
    for (int i = 0; i < g.vertex_count(); ++i) {
        if (seen[static_cast<std::size_t>(i)] || !pair.contains(col.at(i))) continue;
        out.push_back(flood(col, pair, g.vertex(i), seen));
    }
    return out;
}

BicoloredComponent component_containing(const Coloring& col, ColorPair pair, Vertex v) {
    check_pair(col, pair);
    if (!col.grid().contains(v) || !pair.contains(col.at(v))) {
        throw std::invalid_argument("vertex " + to_string(v) + " is not colored within the pair");
    }
    std::vector<char> seen(static_cast<std::size_t>(col.grid().vertex_count()), 0);
    return flood(col, pair, v, seen);
}

}  // namespace pkcolor
