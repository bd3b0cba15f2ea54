#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rat/diagram.hpp"
#include "rat/limits.hpp"

namespace rat {

enum class TileKind : std::uint8_t { DE = 0, DA = 1, AE = 2 };

const char* tile_kind_name(TileKind kind);

/// A unit parallelogram identified by its northeast corner.
///   DE: south + west edges, DA: south + southwest edges, AE: west + southwest edges.
struct Tile {
    LatticePoint anchor;
    TileKind kind = TileKind::DE;

    std::array<LatticePoint, 4> corners() const;  // clockwise from the anchor
    friend auto operator<=>(const Tile&, const Tile&) = default;
};

class CrossingPaths : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
class BadEndpoints : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
class NotAHexagon : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using DiagramPtr = std::shared_ptr<const RhombicDiagram>;

DiagramPtr make_diagram(const Word& w);

class Tiling {
public:
    Tiling(DiagramPtr diagram, std::vector<Tile> tiles);

    const RhombicDiagram& diagram() const { return *diagram_; }
    const DiagramPtr& shared_diagram() const { return diagram_; }
    const std::vector<Tile>& tiles() const { return tiles_; }
    std::size_t size() const { return tiles_.size(); }

    bool contains(const Tile& t) const;
    std::optional<std::size_t> index_of(const Tile& t) const;

    friend bool operator==(const Tiling& a, const Tiling& b) {
        return a.diagram_->type() == b.diagram_->type() && a.tiles_ == b.tiles_;
    }

private:
    DiagramPtr diagram_;
    std::vector<Tile> tiles_;  // sorted
};

/// Independent cover check: every unit lattice triangle of the region is covered by
/// exactly one tile and no tile leaves the region.
bool is_valid_tiling(const Tiling& t);

enum class Step : std::uint8_t { West, SouthWest };

/// Vertex-disjoint west/southwest paths, one per D-edge: path i runs from the north
/// endpoint of the i-th D-edge of P1 to the north endpoint of the i-th D-edge of P2.
struct PathConfig {
    std::vector<LatticePoint> starts;
    std::vector<std::vector<Step>> paths;

    /// Canonical key ("W"/"S" per step, "|" between paths).
    std::string key() const;
    friend bool operator==(const PathConfig&, const PathConfig&) = default;
};

PathConfig minimal_paths(const RhombicDiagram& d);
PathConfig maximal_paths(const RhombicDiagram& d);

PathConfig tiling_to_paths(const Tiling& t);
Tiling paths_to_tiling(const DiagramPtr& d, const PathConfig& pc);

/// Sum over paths of the area between the path and its minimal path.
std::size_t height(const PathConfig& pc);
std::size_t height(const Tiling& t);

Tiling minimal_tiling(const DiagramPtr& d);
Tiling maximal_tiling(const DiagramPtr& d);

/// The six-vertex hexagon with northeast corner `anchor` is tiled either as
///   minimal: DE@(i,j), AE@(i,j-1), DA@(i-1,j)
///   maximal: DA@(i,j), AE@(i,j), DE@(i-1,j-1).
enum class FlipDirection : std::uint8_t { MinToMax, MaxToMin };

struct Flip {
    LatticePoint anchor;
    FlipDirection direction;
    friend bool operator==(const Flip&, const Flip&) = default;
};

std::array<Tile, 3> minimal_hexagon(LatticePoint anchor);
std::array<Tile, 3> maximal_hexagon(LatticePoint anchor);

std::optional<FlipDirection> hexagon_at(const Tiling& t, LatticePoint anchor);
/// Every flippable hexagon, ordered by anchor.
std::vector<Flip> find_flips(const Tiling& t);
Tiling apply_flip(const Tiling& t, LatticePoint anchor);

/// Slide on a path configuration: at a free point p, replace the steps
/// (p+(1,0)) -SW-> (p+(0,-1)) -W-> ... by -W-> p -SW->. Lowers height by one.
std::vector<LatticePoint> find_slides(const PathConfig& pc, const RhombicDiagram& d);
PathConfig apply_slide(const PathConfig& pc, LatticePoint free_point);

enum class FlipStart : std::uint8_t { Minimal, Maximal };

struct FlipGraph {
    std::vector<Tiling> tilings;          // breadth-first discovery order
    std::vector<std::size_t> distance;    // flip distance from the start tiling
};

/// Breadth-first closure of the start tiling under flips, deduplicated by PathConfig.
FlipGraph enumerate_tilings(const DiagramPtr& d, const Limits& limits = {},
                            FlipStart start = FlipStart::Minimal);

enum class StripKind : std::uint8_t { North, West };

struct Strip {
    StripKind kind = StripKind::North;
    std::size_t index = 0;    // boundary label, 1-based
    std::vector<Tile> tiles;  // from the southeast boundary inwards
};

struct StripDecomposition {
    std::vector<Strip> north;
    std::vector<Strip> west;
};

StripDecomposition strips(const Tiling& t);

/// Per-tile strip membership; entries are parallel to Tiling::tiles().
/// Every tile sits where two letter strips cross, so it is also labeled by the
/// word positions of the crossing letters: (D or A) as row_letter, (E or A) as
/// column_letter.
struct TileIncidence {
    int north = -1, north_pos = -1;        // north-strip (E) and position from the bottom
    int west = -1, west_pos = -1;          // west-strip (D) and position from the right
    int diagonal = -1, diagonal_pos = -1;  // strip of A-edges
    std::size_t row_letter = 0;
    std::size_t column_letter = 0;
};

std::vector<TileIncidence> incidence(const Tiling& t);

}  // namespace rat
