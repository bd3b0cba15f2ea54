#include "rat/tiling.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <utility>

#include "rat/kernels.hpp"

namespace rat {

const char* tile_kind_name(TileKind kind) {
    switch (kind) {
        case TileKind::DE: return "DE";
        case TileKind::DA: return "DA";
        case TileKind::AE: return "AE";
    }
    return "??";
}

std::array<LatticePoint, 4> Tile::corners() const {
    const LatticePoint p = anchor;
    switch (kind) {
        case TileKind::DE: return {p, p + kSouth, p + kSouthWest, p + kWest};
        case TileKind::DA: return {p, p + kSouth, p + kSouth + kSouthWest, p + kSouthWest};
        case TileKind::AE: return {p, p + kSouthWest, p + kWest + kSouthWest, p + kWest};
    }
    return {p, p, p, p};
}

DiagramPtr make_diagram(const Word& w) { return std::make_shared<const RhombicDiagram>(build_diagram(w)); }

Tiling::Tiling(DiagramPtr diagram, std::vector<Tile> tiles)
    : diagram_(std::move(diagram)), tiles_(std::move(tiles)) {
    std::sort(tiles_.begin(), tiles_.end());
}

bool Tiling::contains(const Tile& t) const { return std::binary_search(tiles_.begin(), tiles_.end(), t); }

std::optional<std::size_t> Tiling::index_of(const Tile& t) const {
    auto it = std::lower_bound(tiles_.begin(), tiles_.end(), t);
    if (it == tiles_.end() || *it != t) return std::nullopt;
    return static_cast<std::size_t>(it - tiles_.begin());
}

namespace {

// Unit triangles in the vertical strip x-1..x are stacked; index 2y+1 is the upper
// triangle (x,y),(x-1,y),(x-1,y-1) and 2y the lower triangle (x,y),(x,y-1),(x-1,y-1).
struct Triangle {
    int x;
    int index;
    friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

std::array<Triangle, 2> triangles_of(const Tile& t) {
    const LatticePoint p = t.anchor;
    switch (t.kind) {
        case TileKind::DE: return {Triangle{p.x, 2 * p.y + 1}, Triangle{p.x, 2 * p.y}};
        case TileKind::AE: return {Triangle{p.x, 2 * p.y + 1}, Triangle{p.x - 1, 2 * p.y}};
        case TileKind::DA: return {Triangle{p.x, 2 * p.y}, Triangle{p.x, 2 * p.y - 1}};
    }
    return {};
}

// The inclusive triangle index range of the region inside strip x-1..x.
std::pair<int, int> strip_range(const RhombicDiagram& d, int x) {
    int top = 0, bottom = 0;
    for (const Edge& e : d.p2())
        if (e.anchor.x == x && e.kind != EdgeKind::South)
            top = e.kind == EdgeKind::West ? 2 * e.anchor.y + 1 : 2 * e.anchor.y;
    for (const Edge& e : d.p1())
        if (e.anchor.x == x && e.kind != EdgeKind::South)
            bottom = e.kind == EdgeKind::West ? 2 * e.anchor.y + 2 : 2 * e.anchor.y + 1;
    return {bottom, top};
}

}  // namespace

bool is_valid_tiling(const Tiling& t) {
    const RhombicDiagram& d = t.diagram();
    std::set<Triangle> covered;
    for (const Tile& tile : t.tiles()) {
        for (const Triangle& tri : triangles_of(tile)) {
            if (tri.x > 0 || tri.x <= d.min_x()) return false;
            auto [bottom, top] = strip_range(d, tri.x);
            if (tri.index < bottom || tri.index > top) return false;
            if (!covered.insert(tri).second) return false;
        }
    }
    std::size_t region = 0;
    for (int x = 0; x > d.min_x(); --x) {
        auto [bottom, top] = strip_range(d, x);
        if (top >= bottom) region += static_cast<std::size_t>(top - bottom + 1);
    }
    return covered.size() == region;
}

std::string PathConfig::key() const {
    std::string out;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        if (i > 0) out += '|';
        for (Step s : paths[i]) out += s == Step::West ? 'W' : 'S';
    }
    return out;
}

namespace {

LatticePoint path_end(const RhombicDiagram& d, std::size_t i) {
    int l = static_cast<int>(d.type().ell()), r = static_cast<int>(d.type().r());
    return {-(l + r), -r - static_cast<int>(i)};
}

// Each path runs west as long as it can, then southwest.
PathConfig lowest_height_paths(const RhombicDiagram& d) {
    PathConfig pc;
    for (std::size_t i = 0; i < d.d_labels().size(); ++i) {
        LatticePoint from = d.d_labels()[i].anchor;
        LatticePoint to = path_end(d, i);
        int diagonal = from.y - to.y;
        int west = (from.x - to.x) - diagonal;
        std::vector<Step> steps(static_cast<std::size_t>(west), Step::West);
        steps.insert(steps.end(), static_cast<std::size_t>(diagonal), Step::SouthWest);
        pc.starts.push_back(from);
        pc.paths.push_back(std::move(steps));
    }
    return pc;
}

LatticePoint advance(LatticePoint p, Step s) { return p + (s == Step::West ? kWest : kSouthWest); }

}  // namespace

PathConfig minimal_paths(const RhombicDiagram& d) { return lowest_height_paths(d); }
PathConfig maximal_paths(const RhombicDiagram& d) {
    return tiling_to_paths(maximal_tiling(std::make_shared<const RhombicDiagram>(d)));
}

PathConfig tiling_to_paths(const Tiling& t) {
    const RhombicDiagram& d = t.diagram();
    PathConfig pc;
    for (const Edge& start : d.d_labels()) {
        LatticePoint at = start.anchor;
        std::vector<Step> steps;
        for (;;) {
            if (t.contains(Tile{at, TileKind::DE})) {
                steps.push_back(Step::West);
                at = at + kWest;
            } else if (t.contains(Tile{at, TileKind::DA})) {
                steps.push_back(Step::SouthWest);
                at = at + kSouthWest;
            } else {
                break;
            }
        }
        pc.starts.push_back(start.anchor);
        pc.paths.push_back(std::move(steps));
    }
    return pc;
}

Tiling paths_to_tiling(const DiagramPtr& dp, const PathConfig& pc) {
    const RhombicDiagram& d = *dp;
    if (pc.paths.size() != d.d_labels().size() || pc.starts.size() != pc.paths.size())
        throw BadEndpoints("expected one path per D-edge");
    std::set<LatticePoint> on_paths;
    std::vector<Tile> tiles;
    for (std::size_t i = 0; i < pc.paths.size(); ++i) {
        if (pc.starts[i] != d.d_labels()[i].anchor)
            throw BadEndpoints("path " + std::to_string(i + 1) + " does not start at its D-edge");
        LatticePoint at = pc.starts[i];
        if (!on_paths.insert(at).second) throw CrossingPaths("paths share a start vertex");
        for (Step s : pc.paths[i]) {
            tiles.push_back(Tile{at, s == Step::West ? TileKind::DE : TileKind::DA});
            at = advance(at, s);
            if (!d.contains(at))
                throw CrossingPaths("path " + std::to_string(i + 1) + " leaves the diagram");
            if (!on_paths.insert(at).second)
                throw CrossingPaths("path " + std::to_string(i + 1) + " shares a vertex with another path");
        }
        if (at != path_end(d, i))
            throw BadEndpoints("path " + std::to_string(i + 1) + " does not end at its D-edge");
    }
    for (LatticePoint p : d.lattice_points()) {
        if (on_paths.count(p) || d.on_p1(p)) continue;
        tiles.push_back(Tile{p - kWest, TileKind::AE});
    }
    Tiling out(dp, std::move(tiles));
    if (out.size() != d.area() || !is_valid_tiling(out))
        throw CrossingPaths("path configuration does not induce a tiling");
    return out;
}

std::size_t height(const PathConfig& pc) {
    std::size_t total = 0;
    for (const auto& path : pc.paths) {
        std::size_t diagonals_seen = 0;
        for (Step s : path) {
            if (s == Step::SouthWest)
                ++diagonals_seen;
            else
                total += diagonals_seen;
        }
    }
    return total;
}

std::size_t height(const Tiling& t) { return height(tiling_to_paths(t)); }

Tiling minimal_tiling(const DiagramPtr& d) { return paths_to_tiling(d, minimal_paths(*d)); }
// Sliding every path as far southwest as possible can leave the region, so climb
// instead: the only tiling without an upward flip is the top of the flip order.
Tiling maximal_tiling(const DiagramPtr& d) {
    Tiling t = minimal_tiling(d);
    for (;;) {
        auto flips = find_flips(t);
        auto up = std::find_if(flips.begin(), flips.end(),
                               [](const Flip& f) { return f.direction == FlipDirection::MinToMax; });
        if (up == flips.end()) return t;
        t = apply_flip(t, up->anchor);
    }
}

std::array<Tile, 3> minimal_hexagon(LatticePoint a) {
    return {Tile{a, TileKind::DE}, Tile{a + kSouth, TileKind::AE}, Tile{a + kWest, TileKind::DA}};
}

std::array<Tile, 3> maximal_hexagon(LatticePoint a) {
    return {Tile{a, TileKind::DA}, Tile{a, TileKind::AE}, Tile{a + kSouthWest, TileKind::DE}};
}

std::optional<FlipDirection> hexagon_at(const Tiling& t, LatticePoint anchor) {
    auto all_present = [&](const std::array<Tile, 3>& hex) {
        return std::all_of(hex.begin(), hex.end(), [&](const Tile& x) { return t.contains(x); });
    };
    if (all_present(minimal_hexagon(anchor))) return FlipDirection::MinToMax;
    if (all_present(maximal_hexagon(anchor))) return FlipDirection::MaxToMin;
    return std::nullopt;
}

std::vector<Flip> find_flips(const Tiling& t) {
    std::vector<Flip> out;
    for (const Tile& tile : t.tiles()) {
        if (tile.kind != TileKind::DE) continue;
        // A DE tile is the northeast tile of a minimal hexagon or the southwest tile of
        // a maximal one, so every hexagon is seen exactly once from its DE tile.
        LatticePoint as_min = tile.anchor;
        LatticePoint as_max = tile.anchor - kSouthWest;
        if (hexagon_at(t, as_min) == FlipDirection::MinToMax)
            out.push_back({as_min, FlipDirection::MinToMax});
        if (hexagon_at(t, as_max) == FlipDirection::MaxToMin)
            out.push_back({as_max, FlipDirection::MaxToMin});
    }
    std::sort(out.begin(), out.end(), [](const Flip& a, const Flip& b) { return a.anchor < b.anchor; });
    return out;
}

Tiling apply_flip(const Tiling& t, LatticePoint anchor) {
    auto dir = hexagon_at(t, anchor);
    if (!dir) throw NotAHexagon("no flippable hexagon at (" + std::to_string(anchor.x) + "," +
                                std::to_string(anchor.y) + ")");
    auto from = *dir == FlipDirection::MinToMax ? minimal_hexagon(anchor) : maximal_hexagon(anchor);
    auto to = *dir == FlipDirection::MinToMax ? maximal_hexagon(anchor) : minimal_hexagon(anchor);
    std::vector<Tile> tiles;
    tiles.reserve(t.size());
    for (const Tile& x : t.tiles())
        if (std::find(from.begin(), from.end(), x) == from.end()) tiles.push_back(x);
    tiles.insert(tiles.end(), to.begin(), to.end());
    return Tiling(t.shared_diagram(), std::move(tiles));
}

std::vector<LatticePoint> find_slides(const PathConfig& pc, const RhombicDiagram& d) {
    std::set<LatticePoint> on_paths;
    for (std::size_t i = 0; i < pc.paths.size(); ++i) {
        LatticePoint at = pc.starts[i];
        on_paths.insert(at);
        for (Step s : pc.paths[i]) on_paths.insert(at = advance(at, s));
    }
    std::vector<LatticePoint> out;
    for (std::size_t i = 0; i < pc.paths.size(); ++i) {
        LatticePoint at = pc.starts[i];
        const auto& path = pc.paths[i];
        for (std::size_t s = 0; s + 1 < path.size(); ++s) {
            if (path[s] == Step::SouthWest && path[s + 1] == Step::West) {
                LatticePoint p = at + kWest;
                if (d.contains(p) && !on_paths.count(p)) out.push_back(p);
            }
            at = advance(at, path[s]);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

PathConfig apply_slide(const PathConfig& pc, LatticePoint p) {
    PathConfig out = pc;
    for (std::size_t i = 0; i < out.paths.size(); ++i) {
        LatticePoint at = out.starts[i];
        auto& path = out.paths[i];
        for (std::size_t s = 0; s + 1 < path.size(); ++s) {
            if (at == p - kWest && path[s] == Step::SouthWest && path[s + 1] == Step::West) {
                path[s] = Step::West;
                path[s + 1] = Step::SouthWest;
                return out;
            }
            at = advance(at, path[s]);
        }
    }
    throw std::invalid_argument("no slide at the given free point");
}

FlipGraph enumerate_tilings(const DiagramPtr& d, const Limits& limits, FlipStart start) {
    check_limit("diagram area", d->area(), limits.max_area);
    FlipGraph graph;
    std::unordered_map<std::string, std::size_t> seen;
    Tiling first = start == FlipStart::Minimal ? minimal_tiling(d) : maximal_tiling(d);
    seen.emplace(tiling_to_paths(first).key(), 0);
    graph.tilings.push_back(first);
    graph.distance.push_back(0);

    std::vector<Tiling> frontier{std::move(first)};
    for (std::size_t depth = 1; !frontier.empty(); ++depth) {
        auto expanded = kernels::parallel::expand_frontier(frontier);
        std::vector<Tiling> next;
        for (auto& neighbours : expanded) {
            for (auto& nb : neighbours) {
                if (!seen.emplace(std::move(nb.key), graph.tilings.size()).second) continue;
                graph.tilings.push_back(nb.tiling);
                graph.distance.push_back(depth);
                next.push_back(std::move(nb.tiling));
                check_limit("tiling count", graph.tilings.size(), limits.max_tilings);
            }
        }
        frontier = std::move(next);
    }
    return graph;
}

StripDecomposition strips(const Tiling& t) {
    const RhombicDiagram& d = t.diagram();
    StripDecomposition out;
    for (std::size_t i = 0; i < d.e_labels().size(); ++i) {
        Strip s{StripKind::North, i + 1, {}};
        LatticePoint at = d.e_labels()[i].anchor;  // bottom edge at -> at+W
        for (;;) {
            Tile de{at + LatticePoint{0, 1}, TileKind::DE};
            Tile ae{at + LatticePoint{1, 1}, TileKind::AE};
            if (t.contains(de)) {
                s.tiles.push_back(de);
                at = de.anchor;
            } else if (t.contains(ae)) {
                s.tiles.push_back(ae);
                at = ae.anchor;
            } else {
                break;
            }
        }
        out.north.push_back(std::move(s));
    }
    for (std::size_t j = 0; j < d.d_labels().size(); ++j) {
        Strip s{StripKind::West, j + 1, {}};
        LatticePoint at = d.d_labels()[j].anchor;  // east edge at -> at+S
        for (;;) {
            Tile de{at, TileKind::DE};
            Tile da{at, TileKind::DA};
            if (t.contains(de)) {
                s.tiles.push_back(de);
                at = at + kWest;
            } else if (t.contains(da)) {
                s.tiles.push_back(da);
                at = at + kSouthWest;
            } else {
                break;
            }
        }
        out.west.push_back(std::move(s));
    }
    return out;
}

std::vector<TileIncidence> incidence(const Tiling& t) {
    const RhombicDiagram& d = t.diagram();
    const Word& w = d.type();
    std::vector<TileIncidence> out(t.size());
    auto d_pos = w.positions(Letter::D), e_pos = w.positions(Letter::E), a_pos = w.positions(Letter::A);

    StripDecomposition s = strips(t);
    for (const Strip& strip : s.north)
        for (std::size_t p = 0; p < strip.tiles.size(); ++p) {
            auto& inc = out[*t.index_of(strip.tiles[p])];
            inc.north = static_cast<int>(strip.index - 1);
            inc.north_pos = static_cast<int>(p);
        }
    for (const Strip& strip : s.west)
        for (std::size_t p = 0; p < strip.tiles.size(); ++p) {
            auto& inc = out[*t.index_of(strip.tiles[p])];
            inc.west = static_cast<int>(strip.index - 1);
            inc.west_pos = static_cast<int>(p);
        }
    for (std::size_t m = 0; m < d.a_labels().size(); ++m) {
        LatticePoint at = d.a_labels()[m].anchor;  // southeast edge at -> at+SW
        for (int p = 0;; ++p) {
            Tile da{at + LatticePoint{0, 1}, TileKind::DA};
            Tile ae{at, TileKind::AE};
            std::optional<std::size_t> idx;
            if ((idx = t.index_of(da))) {
                at = da.anchor;
            } else if ((idx = t.index_of(ae))) {
                at = at + kWest;
            } else {
                break;
            }
            out[*idx].diagonal = static_cast<int>(m);
            out[*idx].diagonal_pos = p;
        }
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
        auto& inc = out[i];
        switch (t.tiles()[i].kind) {
            case TileKind::DE:
                inc.row_letter = d_pos[static_cast<std::size_t>(inc.west)];
                inc.column_letter = e_pos[static_cast<std::size_t>(inc.north)];
                break;
            case TileKind::DA:
                inc.row_letter = d_pos[static_cast<std::size_t>(inc.west)];
                inc.column_letter = a_pos[static_cast<std::size_t>(inc.diagonal)];
                break;
            case TileKind::AE:
                inc.row_letter = a_pos[static_cast<std::size_t>(inc.diagonal)];
                inc.column_letter = e_pos[static_cast<std::size_t>(inc.north)];
                break;
        }
    }
    return out;
}

}  // namespace rat
