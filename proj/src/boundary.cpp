#include "pkcolor/boundary.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace pkcolor {

namespace {

class Membership {
public:
    Membership(const GridGraph& g, std::span<const Vertex> vertices)
        : grid_(g), bits_(static_cast<std::size_t>(g.vertex_count()), 0) {
        for (Vertex v : vertices) {
            if (!g.contains(v)) throw std::invalid_argument("vertex " + to_string(v) + " outside grid");
            bits_[static_cast<std::size_t>(g.index(v))] = 1;
        }
    }
    bool operator()(Vertex v) const {
        return grid_.contains(v) && bits_[static_cast<std::size_t>(grid_.index(v))] != 0;
    }

private:
    const GridGraph& grid_;
    std::vector<char> bits_;
};

// Left-hand rule: first direction with a component edge, rotating clockwise
// from the reversed incoming direction.
Direction next_direction(const Membership& member, Vertex at, Direction arrived) {
    for (int t : {3, 0, 1, 2}) {
        Direction d = rotate_cw(arrived, t);
        if (member(step(at, d))) return d;
    }
    throw std::logic_error("boundary walk stranded at " + to_string(at));
}

// True if the sweep on the walker's left at this corner leaves the grid.
bool corner_outside(const GridGraph& g, Vertex at, Direction arrived, Direction leaving) {
    for (int t : {3, 0, 1, 2}) {
        Direction d = rotate_cw(arrived, t);
        if (d == leaving) return false;
        if (!g.contains(step(at, d))) return true;
    }
    return false;
}

bool edge_outside(const GridGraph& g, Vertex from, Direction d) {
    Direction left = rotate_cw(d, 3);
    return !g.contains(step(from, left)) && !g.contains(step(step(from, d), left));
}

struct WalkAnatomy {
    std::vector<char> outside_corner;  // per position 0..L-1
    std::vector<char> outside_edge;    // per edge 0..L-1
};

WalkAnatomy anatomy(const BoundaryWalk& w) {
    WalkAnatomy a;
    const int L = w.edge_count();
    auto dirs = w.directions();
    a.outside_corner.resize(static_cast<std::size_t>(L));
    a.outside_edge.resize(static_cast<std::size_t>(L));
    for (int j = 0; j < L; ++j) {
        Direction in = dirs[static_cast<std::size_t>((j - 1 + L) % L)];
        Direction out = dirs[static_cast<std::size_t>(j)];
        Vertex at = w.vertices[static_cast<std::size_t>(j)];
        a.outside_corner[static_cast<std::size_t>(j)] = corner_outside(w.grid, at, in, out) ? 1 : 0;
        a.outside_edge[static_cast<std::size_t>(j)] = edge_outside(w.grid, at, out) ? 1 : 0;
    }
    return a;
}

std::vector<Vertex> cyclic_slice(const BoundaryWalk& w, int from, int to) {
    const int L = w.edge_count();
    std::vector<Vertex> out;
    for (int j = from; j <= to; ++j) out.push_back(w.vertices[static_cast<std::size_t>(j % L)]);
    return out;
}

std::vector<Vertex> map_all(const GridGraph& g, Transform t, std::span<const Vertex> vs) {
    std::vector<Vertex> out;
    out.reserve(vs.size());
    for (Vertex v : vs) out.push_back(apply_transform(g, t, v));
    return out;
}

int angle_at(Vertex a, Vertex b, Vertex c) {
    int in = static_cast<int>(direction_between(a, b));
    int out = static_cast<int>(direction_between(b, c));
    switch (((out - in) % 4 + 4) % 4) {
        case 0: return 180;
        case 1: return 270;
        case 2: return 360;
        default: return 90;
    }
}

Color third_color(ColorPair pair) {
    for (Color c = 0; c < 3; ++c) {
        if (!pair.contains(c)) return c;
    }
    throw std::logic_error("pair covers three colors");
}

}  // namespace

std::vector<Direction> BoundaryWalk::directions() const {
    std::vector<Direction> out;
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        out.push_back(direction_between(vertices[i], vertices[i + 1]));
    }
    return out;
}

BoundaryWalk boundary_walk(const GridGraph& g, std::span<const Vertex> component) {
    if (component.empty()) throw std::invalid_argument("boundary walk of an empty component");
    Membership member(g, component);
    const Vertex start = *std::min_element(component.begin(), component.end());
    BoundaryWalk walk{g, {start}};

    // Pretend the walk arrived heading South, so the first probe is East:
    // north of the smallest vertex is outer face.
    std::optional<Direction> first;
    for (Direction d : {Direction::East, Direction::South, Direction::West}) {
        if (member(step(start, d))) {
            first = d;
            break;
        }
    }
    if (!first) return walk;

    Vertex at = start;
    Direction d = *first;
    const std::size_t limit = 4 * component.size() + 4;
    while (true) {
        at = step(at, d);
        walk.vertices.push_back(at);
        d = next_direction(member, at, d);
        if (at == start && d == *first) break;
        if (walk.vertices.size() > limit) throw std::invalid_argument("component is not connected");
    }
    // Members off the walk must still connect to start.
    std::set<Vertex> seen(walk.vertices.begin(), walk.vertices.end());
    for (Vertex v : component) {
        if (!seen.count(v)) {
            std::vector<char> reach(static_cast<std::size_t>(g.vertex_count()), 0);
            std::deque<Vertex> q{start};
            reach[static_cast<std::size_t>(g.index(start))] = 1;
            while (!q.empty()) {
                Vertex x = q.front();
                q.pop_front();
                for (Vertex y : g.neighbors(x)) {
                    if (member(y) && !reach[static_cast<std::size_t>(g.index(y))]) {
                        reach[static_cast<std::size_t>(g.index(y))] = 1;
                        q.push_back(y);
                    }
                }
            }
            for (Vertex u : component) {
                if (!reach[static_cast<std::size_t>(g.index(u))]) {
                    throw std::invalid_argument("component is not connected");
                }
            }
            break;
        }
    }
    return walk;
}

BoundaryWalk boundary_walk(const BicoloredComponent& comp) {
    return boundary_walk(comp.grid, comp.vertices);
}

std::vector<std::vector<Vertex>> outside_segments(const BoundaryWalk& w) {
    std::vector<std::vector<Vertex>> out;
    const int L = w.edge_count();
    if (L == 0) {
        if (!w.vertices.empty() && !w.grid.sides_touched(w.vertices.front()).empty()) {
            out.push_back({w.vertices.front()});
        }
        return out;
    }
    WalkAnatomy a = anatomy(w);
    if (std::all_of(a.outside_edge.begin(), a.outside_edge.end(), [](char c) { return c != 0; })) {
        out.push_back(w.vertices);
        return out;
    }
    // Begin scanning right after an edge that is not outside, so no segment wraps.
    int origin = 0;
    while (a.outside_edge[static_cast<std::size_t>((origin - 1 + L) % L)]) ++origin;
    for (int s = 0; s < L; ++s) {
        int j = origin + s;
        if (!a.outside_corner[static_cast<std::size_t>(j % L)]) continue;
        int end = j;
        while (a.outside_edge[static_cast<std::size_t>(end % L)]) ++end;
        out.push_back(cyclic_slice(w, j, end));
        s += end - j;
    }
    return out;
}

Vertex PartialWalk::to_original(Vertex v) const {
    return apply_transform(grid, inverse(frame), v);
}

std::vector<Vertex> PartialWalk::original_vertices() const {
    return map_all(grid, inverse(frame), vertices);
}

std::vector<PartialWalk> split_walk(const BoundaryWalk& w) {
    std::vector<PartialWalk> out;
    const int L = w.edge_count();
    if (L == 0) return out;
    WalkAnatomy a = anatomy(w);
    std::vector<int> cuts;
    for (int j = 0; j < L; ++j) {
        if (a.outside_corner[static_cast<std::size_t>(j)]) cuts.push_back(j);
    }
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        int from = cuts[i];
        int to = i + 1 < cuts.size() ? cuts[i + 1] : cuts.front() + L;
        if (to - from == 1 && a.outside_edge[static_cast<std::size_t>(from)]) continue;
        out.push_back(PartialWalk{w.grid, Transform::Identity, w.grid, cyclic_slice(w, from, to)});
    }
    return out;
}

std::vector<PartialWalk> partial_walks(const BicoloredComponent& comp) {
    if (comp.kind() == ComponentClass::Interior) {
        throw std::invalid_argument("interior components have no partial walk");
    }
    const Transform frame = comp.classification.normalization;
    const GridGraph image = transformed_grid(comp.grid, frame);
    const std::vector<Vertex> mapped = map_all(comp.grid, frame, comp.vertices);
    std::vector<PartialWalk> walks = split_walk(boundary_walk(image, mapped));
    for (PartialWalk& pw : walks) {
        pw.source_grid = comp.grid;
        pw.frame = frame;
    }
    if (comp.kind() != ComponentClass::Peripheral && !walks.empty()) {
        std::optional<Vertex> rightmost_top;
        for (Vertex v : mapped) {
            if (v.row == 0 && (!rightmost_top || v.col > rightmost_top->col)) rightmost_top = v;
        }
        auto it = std::find_if(walks.begin(), walks.end(),
                               [&](const PartialWalk& pw) { return pw.first() == rightmost_top; });
        if (it != walks.end()) std::rotate(walks.begin(), it, walks.end());
    }
    return walks;
}

std::vector<int> angle_sequence(const PartialWalk& pw) {
    if (pw.length() < 3) {
        throw std::invalid_argument("angle sequence needs a walk of at least 3 vertices, got " +
                                    std::to_string(pw.length()));
    }
    std::vector<int> out;
    for (std::size_t i = 0; i + 2 < pw.vertices.size(); ++i) {
        out.push_back(angle_at(pw.vertices[i], pw.vertices[i + 1], pw.vertices[i + 2]));
    }
    return out;
}

bool WalkReport::all_hold() const {
    return std::all_of(clauses.begin(), clauses.end(), [](const ClauseResult& c) { return c.holds; });
}

namespace {

void require_premises(const Coloring& col, const BicoloredComponent& comp) {
    if (col.palette() != 3) throw PremiseError("structural checks need a 3-color palette");
    if (!is_proper(col)) throw PremiseError("structural checks need a proper coloring");
    if (!comp.truly_bicolored) throw PremiseError("component has no edge joining its two colors");
    if (comp.edge_count == 1) throw PremiseError("component is a single edge");
    if (comp.kind() == ComponentClass::Interior) throw PremiseError("component touches no side");
}

struct FourthCorners {
    std::vector<Vertex> odd;     // frame coords
    std::vector<Vertex> fourth;  // frame coords
    std::optional<Vertex> undefined_at;
};

// u_{(i+1)/2} for odd i: the fourth corner of the unit square spanned by
// v_i, v_{i+1}, v_{i+2}.  Undefined where the walk does not turn there.
FourthCorners fourth_corners(const PartialWalk& pw) {
    FourthCorners fc;
    const auto& v = pw.vertices;
    for (std::size_t i = 0; i < v.size(); i += 2) fc.odd.push_back(v[i]);
    for (std::size_t i = 0; i + 2 < v.size(); i += 2) {
        Vertex a = v[i], b = v[i + 1], c = v[i + 2];
        if (angle_at(a, b, c) != 90) {
            if (!fc.undefined_at) fc.undefined_at = b;
            continue;
        }
        fc.fourth.push_back({a.row + c.row - b.row, a.col + c.col - b.col});
    }
    return fc;
}

bool connected(const GridGraph& g, const std::vector<Vertex>& vs) {
    std::set<Vertex> pool(vs.begin(), vs.end());
    if (pool.empty()) return true;
    std::set<Vertex> seen{*pool.begin()};
    std::deque<Vertex> q{*pool.begin()};
    while (!q.empty()) {
        Vertex x = q.front();
        q.pop_front();
        for (Vertex y : g.neighbors(x)) {
            if (pool.count(y) && seen.insert(y).second) q.push_back(y);
        }
    }
    return seen.size() == pool.size();
}

}  // namespace

WalkReport check_walk_clauses(const Coloring& col, const BicoloredComponent& comp,
                            const PartialWalk& pw) {
    require_premises(col, comp);
    const Coloring framed = transform_coloring(col, pw.frame);
    WalkReport report;
    const int r = pw.length();
    auto at = [&](int one_based) { return pw.to_original(pw.vertices[static_cast<std::size_t>(one_based - 1)]); };

    auto& c1 = report.clauses[0];
    c1.holds = r >= 3;
    c1.detail = "r = " + std::to_string(r);
    if (!c1.holds) c1.location = at(1);

    std::vector<int> angles = r >= 3 ? angle_sequence(pw) : std::vector<int>{};

    auto& c2 = report.clauses[1];
    if (r < 3) {
        c2 = {false, "walk too short for end angles", at(1)};
    } else if (angles.front() != 90) {
        c2 = {false, "first angle is " + std::to_string(angles.front()), at(2)};
    } else if (angles.back() != 90) {
        c2 = {false, "last angle is " + std::to_string(angles.back()), at(r - 1)};
    } else {
        c2.detail = "both end angles 90";
    }

    auto& c3 = report.clauses[2];
    c3.detail = "angles alternate";
    if (r < 3) c3 = {false, "walk too short", at(1)};
    for (std::size_t i = 0; i < angles.size(); ++i) {
        const bool odd = (i % 2) == 0;  // 1-based index i+1
        if ((angles[i] == 90) != odd) {
            c3 = {false,
                  "angle " + std::to_string(i + 1) + " is " + std::to_string(angles[i]),
                  at(static_cast<int>(i) + 2)};
            break;
        }
    }

    auto& c4 = report.clauses[3];
    c4.holds = r % 2 == 1;
    c4.detail = "r = " + std::to_string(r);
    if (!c4.holds) c4.location = at(r);

    auto& c5 = report.clauses[4];
    const ColorPair pair = comp.pair;
    const Color first_color = framed.at(pw.first());
    const Color third = third_color(pair);
    FourthCorners fc = fourth_corners(pw);
    c5.detail = "connected two-colored neighbor set";
    if (r < 3) {
        c5 = {false, "no unit square along the walk", at(1)};
    } else if (fc.undefined_at) {
        c5 = {false, "no unit square at a non-turning odd position", pw.to_original(*fc.undefined_at)};
    } else {
        for (Vertex v : fc.odd) {
            if (framed.at(v) != first_color) {
                c5 = {false, "odd-indexed walk vertex with the wrong color", pw.to_original(v)};
                break;
            }
        }
        for (Vertex u : fc.fourth) {
            if (!c5.holds) break;
            if (!pw.grid.contains(u) || framed.at(u) != third) {
                c5 = {false, "fourth corner is not third-colored", pw.to_original(u)};
            }
        }
        if (c5.holds) {
            std::vector<Vertex> all = fc.odd;
            all.insert(all.end(), fc.fourth.begin(), fc.fourth.end());
            if (!connected(pw.grid, all)) c5 = {false, "neighbor set is disconnected", at(1)};
        }
    }
    return report;
}

DcConstruction derive_dc(const Coloring& col, const BicoloredComponent& comp,
                         const PartialWalk& pw) {
    WalkReport report = check_walk_clauses(col, comp, pw);
    for (int i = 0; i < 4; ++i) {
        const ClauseResult& c = report.clauses[static_cast<std::size_t>(i)];
        if (!c.holds) {
            throw DcError("clause (" + std::to_string(i + 1) + ") fails: " + c.detail, c.location);
        }
    }
    const ClauseResult& c5 = report.clauses[4];
    if (!c5.holds) throw DcError("clause (5) fails: " + c5.detail, c5.location);

    const Coloring framed = transform_coloring(col, pw.frame);
    FourthCorners fc = fourth_corners(pw);
    const Color c1 = framed.at(pw.first());
    const ColorPair pair(c1, third_color(comp.pair));

    DcConstruction dc{pw, pair, {}, {}, {}, component_containing(col, pair, pw.to_original(pw.first()))};
    for (Vertex v : fc.odd) dc.odd_vertices.push_back(pw.to_original(v));
    const auto& v = pw.vertices;
    for (std::size_t i = 0, j = 0; i + 2 < v.size(); i += 2, ++j) {
        Vertex u = fc.fourth[j];
        dc.fourth_vertices.push_back(pw.to_original(u));
        Vertex top_left{std::min({v[i].row, v[i + 2].row, u.row}), std::min({v[i].col, v[i + 2].col, u.col})};
        // Map the cell's four corners back and take their minimum.
        Vertex corners[4] = {top_left, {top_left.row, top_left.col + 1}, {top_left.row + 1, top_left.col},
                             {top_left.row + 1, top_left.col + 1}};
        Cell cell{1 << 30, 1 << 30};
        for (Vertex corner : corners) {
            Vertex o = pw.to_original(corner);
            cell.row = std::min(cell.row, o.row);
            cell.col = std::min(cell.col, o.col);
        }
        dc.squares.push_back(cell);
    }
    for (Vertex o : dc.odd_vertices) {
        if (!dc.component.contains(o)) throw DcError("odd walk vertex outside D_C", o);
    }
    return dc;
}

std::vector<Cell> rc_region(const PartialWalk& pw) {
    const GridGraph& g = pw.grid;
    if (pw.length() < 2) throw std::invalid_argument("region needs a walk with at least one edge");
    if (g.sides_touched(pw.first()).empty() || g.sides_touched(pw.last()).empty()) {
        throw std::invalid_argument("walk endpoints must lie on the grid sides");
    }
    const int cell_rows = g.rows() - 1;
    const int cell_cols = g.cols() - 1;
    if (cell_rows <= 0 || cell_cols <= 0) return {};
    auto key = [&](Vertex a, Vertex b) {
        int x = g.index(a), y = g.index(b);
        return std::pair{std::min(x, y), std::max(x, y)};
    };
    std::set<std::pair<int, int>> walls;
    std::multiset<std::pair<int, int>> traversals;
    for (std::size_t i = 0; i + 1 < pw.vertices.size(); ++i) {
        walls.insert(key(pw.vertices[i], pw.vertices[i + 1]));
        traversals.insert(key(pw.vertices[i], pw.vertices[i + 1]));
    }
    auto cell_ok = [&](Cell c) { return c.row >= 0 && c.row < cell_rows && c.col >= 0 && c.col < cell_cols; };
    // Cells on the left and right of a directed edge from a heading d.
    auto side_cell = [](Vertex a, Direction d, bool left) {
        Direction normal = rotate_cw(d, left ? 3 : 1);
        Vertex b = step(a, d);
        // The cell spanned by edge ab and the unit step along `normal`.
        Vertex p = step(a, normal), q = step(b, normal);
        return Cell{std::min({a.row, b.row, p.row, q.row}), std::min({a.col, b.col, p.col, q.col})};
    };

    std::vector<char> filled(static_cast<std::size_t>(cell_rows * cell_cols), 0);
    std::deque<Cell> queue;
    auto push = [&](Cell c) {
        if (!cell_ok(c)) return;
        auto& f = filled[static_cast<std::size_t>(c.row * cell_cols + c.col)];
        if (!f) {
            f = 1;
            queue.push_back(c);
        }
    };
    for (std::size_t i = 0; i + 1 < pw.vertices.size(); ++i) {
        Vertex a = pw.vertices[i];
        push(side_cell(a, direction_between(a, pw.vertices[i + 1]), true));
    }
    while (!queue.empty()) {
        Cell c = queue.front();
        queue.pop_front();
        // Crossing to a neighbor cell passes through the shared edge.
        const Vertex tl{c.row, c.col};
        const struct {
            Cell to;
            Vertex a, b;
        } moves[4] = {
            {{c.row - 1, c.col}, tl, {c.row, c.col + 1}},
            {{c.row + 1, c.col}, {c.row + 1, c.col}, {c.row + 1, c.col + 1}},
            {{c.row, c.col - 1}, tl, {c.row + 1, c.col}},
            {{c.row, c.col + 1}, {c.row, c.col + 1}, {c.row + 1, c.col + 1}},
        };
        for (const auto& m : moves) {
            if (!cell_ok(m.to) || walls.count(key(m.a, m.b))) continue;
            push(m.to);
        }
    }
    for (std::size_t i = 0; i + 1 < pw.vertices.size(); ++i) {
        Vertex a = pw.vertices[i];
        Vertex b = pw.vertices[i + 1];
        if (traversals.count(key(a, b)) > 1) continue;
        Cell right = side_cell(a, direction_between(a, b), false);
        if (cell_ok(right) && filled[static_cast<std::size_t>(right.row * cell_cols + right.col)]) {
            throw std::invalid_argument("walk and grid sides do not enclose a region (leak at edge " +
                                        to_string(a) + "-" + to_string(b) + ")");
        }
    }
    std::vector<Cell> out;
    for (int r = 0; r < cell_rows; ++r) {
        for (int c = 0; c < cell_cols; ++c) {
            if (!filled[static_cast<std::size_t>(r * cell_cols + c)]) continue;
            Cell mapped{1 << 30, 1 << 30};
            for (Vertex corner : {Vertex{r, c}, Vertex{r, c + 1}, Vertex{r + 1, c}, Vertex{r + 1, c + 1}}) {
                Vertex o = pw.to_original(corner);
                mapped.row = std::min(mapped.row, o.row);
                mapped.col = std::min(mapped.col, o.col);
            }
            out.push_back(mapped);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int rc_area(const PartialWalk& pw) { return static_cast<int>(rc_region(pw).size()); }

bool DcTrace::areas_decrease() const {
    for (std::size_t t = 0; t + 2 < steps.size(); ++t) {
        const auto& a = steps[t].area;
        const auto& b = steps[t + 2].area;
        if (a && b && !(*b < *a)) return false;
    }
    return true;
}

DcTrace iterate_dc(const Coloring& col, const BicoloredComponent& start, int step_cap) {
    require_premises(col, start);
    DcTrace trace;
    BicoloredComponent current = start;
    for (int replacements = 0;; ++replacements) {
        if (current.kind() == ComponentClass::Peripheral) {
            trace.steps.push_back(DcStep{current, std::nullopt, std::nullopt, std::nullopt, {}});
            trace.reached_peripheral = true;
            return trace;
        }
        std::vector<PartialWalk> walks = partial_walks(current);
        if (walks.empty()) throw std::logic_error("side-touching component without partial walk");
        const PartialWalk& pw = walks.front();
        DcStep s{current, rc_area(pw), pw.to_original(pw.first()), pw.to_original(pw.last()), {}};
        if (replacements >= step_cap) {
            trace.steps.push_back(std::move(s));
            return trace;
        }
        DcConstruction dc = derive_dc(col, current, pw);
        s.squares = dc.squares;
        trace.steps.push_back(std::move(s));
        current = std::move(dc.component);
    }
}

}  // namespace pkcolor
