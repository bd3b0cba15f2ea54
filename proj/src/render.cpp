#include "rat/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace rat {

namespace {

constexpr double kPitch = 40.0;
constexpr double kMargin = 30.0;
const double kRise = kPitch * std::sqrt(3.0) / 2.0;

struct Point {
    double x = 0, y = 0;
};

// West is a unit step left; south is a unit step down and to the right, so the
// southwest step is their sum and every tile is a 60-degree rhombus.
Point project(LatticePoint p) { return {kPitch * p.x - kPitch / 2 * p.y, -kRise * p.y}; }

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v + 0.0);  // + 0.0 turns -0 into 0
    return buf;
}

Point midpoint(Point a, Point b) { return {(a.x + b.x) / 2, (a.y + b.y) / 2}; }

const char* tile_fill(TileKind kind) {
    switch (kind) {
        case TileKind::DE: return "#f2f2f2";
        case TileKind::DA: return "#d9e6f2";
        case TileKind::AE: return "#f2e6d9";
    }
    return "#ffffff";
}

// Exit edge of a tile on its north-strip (top E-edge) or west-strip (left D-edge).
std::pair<LatticePoint, LatticePoint> exit_edge(const Tile& t, StripKind kind) {
    const LatticePoint p = t.anchor;
    if (kind == StripKind::North) return {p, p + kWest};
    const LatticePoint left = t.kind == TileKind::DA ? p + kSouthWest : p + kWest;
    return {left, left + kSouth};
}

}  // namespace

std::string render_svg(const Word& w, const std::optional<Filling>& filling, const std::optional<Tiling>& tiling) {
    if (filling && filling->tiling().diagram().type() != w)
        throw InconsistentInputs("filling does not belong to the word");
    if (tiling && tiling->diagram().type() != w) throw InconsistentInputs("tiling does not belong to the word");
    if (filling && tiling && !(filling->tiling() == *tiling))
        throw InconsistentInputs("filling is on a different tiling");

    const Tiling t = filling ? filling->tiling() : tiling ? *tiling : minimal_tiling(make_diagram(w));
    const RhombicDiagram& d = t.diagram();

    double min_x = std::numeric_limits<double>::max(), min_y = min_x;
    double max_x = std::numeric_limits<double>::lowest(), max_y = max_x;
    for (LatticePoint p : d.lattice_points()) {
        Point q = project(p);
        min_x = std::min(min_x, q.x);
        min_y = std::min(min_y, q.y);
        max_x = std::max(max_x, q.x);
        max_y = std::max(max_y, q.y);
    }
    auto at = [&](LatticePoint p) {
        Point q = project(p);
        return Point{q.x - min_x + kMargin, q.y - min_y + kMargin};
    };
    auto center = [&](const Tile& tile) {
        auto c = tile.corners();
        return midpoint(at(c[0]), at(c[2]));
    };
    const double width = max_x - min_x + 2 * kMargin;
    const double height = max_y - min_y + 2 * kMargin;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
        << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n"
        << "<title>" << w.to_string() << "</title>\n";

    out << "<g class=\"tiles\" stroke=\"#000000\" stroke-width=\"1.5\" stroke-linejoin=\"round\">\n";
    for (const Tile& tile : t.tiles()) {
        out << "<polygon class=\"" << tile_kind_name(tile.kind) << "\" fill=\"" << tile_fill(tile.kind)
            << "\" points=\"";
        auto corners = tile.corners();
        for (std::size_t i = 0; i < corners.size(); ++i) {
            Point p = at(corners[i]);
            out << (i ? " " : "") << num(p.x) << ',' << num(p.y);
        }
        out << "\"/>\n";
    }
    out << "</g>\n";

    out << "<polyline class=\"boundary\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2.5\" points=\"";
    {
        Point start = at({0, 0});
        out << num(start.x) << ',' << num(start.y);
        for (const Edge& e : d.p1()) {
            Point p = at(e.head());
            out << ' ' << num(p.x) << ',' << num(p.y);
        }
    }
    out << "\"/>\n";

    if (filling) {
        const TableauFrame& frame = filling->frame();
        const auto& marks = filling->marks();
        const auto& tiles = t.tiles();
        out << "<g class=\"lines\" stroke=\"#000000\" stroke-width=\"1\" stroke-dasharray=\"4 3\" fill=\"none\">\n";
        auto draw_lines = [&](const std::vector<std::vector<std::size_t>>& strips, Mark symbol, StripKind kind) {
            for (const auto& strip : strips) {
                auto first = std::find_if(strip.begin(), strip.end(), [&](std::size_t i) { return marks[i] == symbol; });
                if (first == strip.end()) continue;
                out << "<polyline class=\"" << (kind == StripKind::North ? "north" : "west") << "\" points=\"";
                for (auto it = first; it != strip.end(); ++it) {
                    Point c = center(tiles[*it]);
                    out << (it == first ? "" : " ") << num(c.x) << ',' << num(c.y);
                }
                auto [a, b] = exit_edge(tiles[strip.back()], kind);
                Point end = midpoint(at(a), at(b));
                out << ' ' << num(end.x) << ',' << num(end.y) << "\"/>\n";
            }
        };
        draw_lines(frame.north_strips(), Mark::Alpha, StripKind::North);
        draw_lines(frame.west_strips(), Mark::Beta, StripKind::West);
        out << "</g>\n";

        out << "<g class=\"symbols\" font-family=\"serif\" font-size=\"18\" text-anchor=\"middle\" "
               "dominant-baseline=\"central\">\n";
        for (std::size_t i = 0; i < tiles.size(); ++i) {
            if (marks[i] == Mark::Empty) continue;
            Point c = center(tiles[i]);
            out << "<text x=\"" << num(c.x) << "\" y=\"" << num(c.y) << "\">"
                << (marks[i] == Mark::Alpha ? "α" : "β") << "</text>\n";
        }
        out << "</g>\n";
    }

    // P1 is traversed with the region on its right, so the outward normal of each
    // boundary edge points to the traveller's left.
    out << "<g class=\"labels\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" "
           "dominant-baseline=\"central\">\n";
    const auto& p1 = d.p1();
    auto direction = [&](std::size_t i) {
        Point a = at(p1[i].anchor), b = at(p1[i].head());
        return Point{b.x - a.x, b.y - a.y};
    };
    // A left turn is a concave corner where two labels would meet; pull both back.
    auto turns_left = [&](std::size_t i, std::size_t j) {
        Point u = direction(i), v = direction(j);
        return u.x * v.y - u.y * v.x < 0;
    };
    for (std::size_t i = 0; i < p1.size(); ++i) {
        const Edge& e = p1[i];
        Point m = midpoint(at(e.anchor), at(e.head()));
        const Point dir = direction(i);
        const double len = std::hypot(dir.x, dir.y);
        double along = 0;
        if (i > 0 && turns_left(i - 1, i)) along += 18;
        if (i + 1 < p1.size() && turns_left(i, i + 1)) along -= 18;
        m.x += 14 * dir.y / len + along * dir.x / len;
        m.y += -14 * dir.x / len + along * dir.y / len;
        char letter = e.kind == EdgeKind::South ? 'D' : e.kind == EdgeKind::West ? 'E' : 'A';
        out << "<text x=\"" << num(m.x) << "\" y=\"" << num(m.y) << "\">" << letter << "</text>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace rat
