#include "rat/tiling.hpp"

#include <gtest/gtest.h>
#include <algorithm>
#include <functional>
#include <map>
#include <set>

using namespace rat;

namespace {

std::vector<Word> words_up_to(std::size_t max_n) {
    std::vector<Word> out;
    for (std::size_t n = 1; n <= max_n; ++n)
        for (Word& w : all_words(n)) out.push_back(std::move(w));
    return out;
}

Word block_word(std::size_t a, std::size_t b, std::size_t c) {
    std::vector<Letter> letters(a, Letter::D);
    letters.insert(letters.end(), b, Letter::A);
    letters.insert(letters.end(), c, Letter::E);
    return Word(std::move(letters));
}

// Plane partitions fitting in an a x b x c box, by filling an a x b array with
// entries in [0, c] that weakly decrease along rows and columns.
std::size_t plane_partitions(std::size_t a, std::size_t b, std::size_t c) {
    std::vector<std::size_t> cells(a * b, 0);
    std::function<std::size_t(std::size_t)> fill = [&](std::size_t i) -> std::size_t {
        if (i == cells.size()) return 1;
        const std::size_t row = i / b, col = i % b;
        std::size_t cap = c;
        if (row > 0) cap = std::min(cap, cells[i - b]);
        if (col > 0) cap = std::min(cap, cells[i - 1]);
        std::size_t total = 0;
        for (std::size_t v = 0; v <= cap; ++v) {
            cells[i] = v;
            total += fill(i + 1);
        }
        return total;
    };
    return fill(0);
}

}  // namespace

TEST(tiling, extreme_tilings_are_valid) {
    for (const Word& w : words_up_to(7)) {
        DiagramPtr d = make_diagram(w);
        Tiling lo = minimal_tiling(d), hi = maximal_tiling(d);
        EXPECT_TRUE(is_valid_tiling(lo)) << w.to_string();
        EXPECT_TRUE(is_valid_tiling(hi)) << w.to_string();
        EXPECT_EQ(lo.size(), d->area());
        EXPECT_EQ(height(lo), 0u);
        for (const Flip& f : find_flips(lo)) EXPECT_EQ(f.direction, FlipDirection::MinToMax);
        for (const Flip& f : find_flips(hi)) EXPECT_EQ(f.direction, FlipDirection::MaxToMin);
    }
}

TEST(tiling, dae_has_two_tilings) {
    DiagramPtr d = make_diagram(Word::parse("DAE"));
    Tiling lo = minimal_tiling(d);
    std::vector<Tile> expected{{{0, 0}, TileKind::DE}, {{0, -1}, TileKind::AE}, {{-1, 0}, TileKind::DA}};
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(lo.tiles(), expected);
    FlipGraph g = enumerate_tilings(d);
    ASSERT_EQ(g.tilings.size(), 2u);
    EXPECT_EQ(g.tilings[1], maximal_tiling(d));
    EXPECT_EQ(apply_flip(lo, {0, 0}), maximal_tiling(d));
}

TEST(tiling, hexagons_cover_the_same_region) {
    // Edges used by exactly one tile form the outline of the union.
    auto outline = [](const std::array<Tile, 3>& tiles) {
        std::map<std::pair<LatticePoint, LatticePoint>, int> uses;
        for (const Tile& t : tiles) {
            auto c = t.corners();
            for (std::size_t i = 0; i < 4; ++i) {
                LatticePoint u = c[i], v = c[(i + 1) % 4];
                ++uses[std::minmax(u, v)];
            }
        }
        std::set<std::pair<LatticePoint, LatticePoint>> out;
        for (const auto& [edge, count] : uses)
            if (count == 1) out.insert(edge);
        return out;
    };
    for (LatticePoint a : {LatticePoint{0, 0}, LatticePoint{-2, 3}}) {
        auto lo = outline(minimal_hexagon(a)), hi = outline(maximal_hexagon(a));
        EXPECT_EQ(lo.size(), 6u);
        EXPECT_EQ(lo, hi);
    }
}

TEST(tiling, every_enumerated_tiling_is_valid_and_distinct) {
    for (const Word& w : words_up_to(6)) {
        FlipGraph g = enumerate_tilings(make_diagram(w));
        std::set<std::vector<Tile>> seen;
        for (const Tiling& t : g.tilings) {
            EXPECT_TRUE(is_valid_tiling(t)) << w.to_string();
            seen.insert(t.tiles());
        }
        EXPECT_EQ(seen.size(), g.tilings.size()) << w.to_string();
    }
}

TEST(tiling, height_equals_flip_distance) {
    for (const Word& w : words_up_to(6)) {
        DiagramPtr d = make_diagram(w);
        FlipGraph g = enumerate_tilings(d);
        for (std::size_t i = 0; i < g.tilings.size(); ++i) EXPECT_EQ(height(g.tilings[i]), g.distance[i]);
        // Searching down from the top reaches the bottom after the top's height.
        FlipGraph down = enumerate_tilings(d, {}, FlipStart::Maximal);
        EXPECT_EQ(down.tilings.size(), g.tilings.size());
        EXPECT_EQ(down.tilings.back(), minimal_tiling(d));
        EXPECT_EQ(down.distance.back(), height(maximal_tiling(d)));
    }
}

TEST(tiling, flip_graph_connects_bottom_to_top) {
    for (const Word& w : words_up_to(6)) {
        DiagramPtr d = make_diagram(w);
        FlipGraph g = enumerate_tilings(d);
        EXPECT_NE(std::find(g.tilings.begin(), g.tilings.end(), maximal_tiling(d)), g.tilings.end()) << w.to_string();
    }
}

TEST(tiling, tiling_counts_match_plane_partitions) {
    for (std::size_t a = 0; a <= 3; ++a)
        for (std::size_t b = 0; b <= 3; ++b)
            for (std::size_t c = 0; c <= 3; ++c) {
                if (a + b + c == 0) continue;
                Limits limits;
                limits.max_area = 27;
                FlipGraph g = enumerate_tilings(make_diagram(block_word(a, b, c)), limits);
                EXPECT_EQ(g.tilings.size(), plane_partitions(a, b, c)) << a << b << c;
            }
    EXPECT_EQ(plane_partitions(1, 1, 1), 2u);
    EXPECT_EQ(plane_partitions(2, 2, 2), 20u);
}

TEST(tiling, flips_are_involutions) {
    for (const Word& w : words_up_to(5)) {
        for (const Tiling& t : enumerate_tilings(make_diagram(w)).tilings) {
            for (const Flip& f : find_flips(t)) {
                Tiling once = apply_flip(t, f.anchor);
                EXPECT_TRUE(is_valid_tiling(once));
                EXPECT_EQ(apply_flip(once, f.anchor), t);
                EXPECT_EQ(height(once), f.direction == FlipDirection::MinToMax ? height(t) + 1 : height(t) - 1);
            }
        }
    }
}

TEST(tiling, paths_round_trip) {
    for (const Word& w : words_up_to(6)) {
        DiagramPtr d = make_diagram(w);
        for (const Tiling& t : enumerate_tilings(d).tilings) EXPECT_EQ(paths_to_tiling(d, tiling_to_paths(t)), t);
        EXPECT_EQ(tiling_to_paths(minimal_tiling(d)), minimal_paths(*d));
        EXPECT_EQ(tiling_to_paths(maximal_tiling(d)), maximal_paths(*d));
    }
}

TEST(tiling, slides_are_downward_flips) {
    for (const Word& w : words_up_to(6)) {
        DiagramPtr d = make_diagram(w);
        for (const Tiling& t : enumerate_tilings(d).tilings) {
            PathConfig pc = tiling_to_paths(t);
            std::set<std::string> by_slide, by_flip;
            for (LatticePoint p : find_slides(pc, *d)) by_slide.insert(apply_slide(pc, p).key());
            for (const Flip& f : find_flips(t))
                if (f.direction == FlipDirection::MaxToMin) by_flip.insert(tiling_to_paths(apply_flip(t, f.anchor)).key());
            EXPECT_EQ(by_slide, by_flip) << w.to_string();
        }
    }
}

TEST(tiling, bad_path_configurations_are_rejected) {
    DiagramPtr d = make_diagram(Word::parse("DDAAEE"));
    PathConfig pc = minimal_paths(*d);
    // The upper path dives while the lower one stays high.
    PathConfig crossing = pc;
    std::reverse(crossing.paths[0].begin(), crossing.paths[0].end());
    EXPECT_THROW(paths_to_tiling(d, crossing), CrossingPaths);
    PathConfig short_path = pc;
    short_path.paths[0].pop_back();
    EXPECT_THROW(paths_to_tiling(d, short_path), BadEndpoints);
    PathConfig missing = pc;
    missing.paths.pop_back();
    missing.starts.pop_back();
    EXPECT_THROW(paths_to_tiling(d, missing), BadEndpoints);
    EXPECT_THROW(apply_flip(minimal_tiling(d), {5, 5}), NotAHexagon);
}

TEST(tiling, strips_partition_the_tiles) {
    for (const Word& w : words_up_to(6)) {
        DiagramPtr d = make_diagram(w);
        for (const Tiling& t : enumerate_tilings(d).tilings) {
            StripDecomposition s = strips(t);
            ASSERT_EQ(s.north.size(), w.ell());
            ASSERT_EQ(s.west.size(), w.k());
            std::map<Tile, int> north_hits, west_hits;
            for (const Strip& strip : s.north)
                for (const Tile& tile : strip.tiles) {
                    EXPECT_NE(tile.kind, TileKind::DA);
                    ++north_hits[tile];
                }
            for (const Strip& strip : s.west)
                for (const Tile& tile : strip.tiles) {
                    EXPECT_NE(tile.kind, TileKind::AE);
                    ++west_hits[tile];
                }
            for (const Tile& tile : t.tiles()) {
                EXPECT_EQ(north_hits[tile], tile.kind == TileKind::DA ? 0 : 1);
                EXPECT_EQ(west_hits[tile], tile.kind == TileKind::AE ? 0 : 1);
            }
            // Each north-strip holds one tile per letter before its E that is D or A.
            auto inc = incidence(t);
            for (std::size_t i = 0; i < t.size(); ++i) {
                EXPECT_LT(inc[i].row_letter, inc[i].column_letter);
                EXPECT_NE(w[inc[i].row_letter], Letter::E);
                EXPECT_NE(w[inc[i].column_letter], Letter::D);
            }
        }
    }
}
