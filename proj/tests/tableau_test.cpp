#include "rat/tableau.hpp"

#include <gtest/gtest.h>
#include <algorithm>
#include <set>

using namespace rat;

namespace {

std::vector<Word> words_up_to(std::size_t max_n) {
    std::vector<Word> out;
    for (std::size_t n = 1; n <= max_n; ++n)
        for (Word& w : all_words(n)) out.push_back(std::move(w));
    return out;
}

Polynomial P(const char* text) { return Polynomial::parse(text); }

// Filling rules restated on the strip decomposition: tile kinds, then emptiness
// above an alpha along each north-strip and left of a beta along each west-strip.
bool rules_hold(const Tiling& t, const std::vector<Mark>& marks) {
    auto mark = [&](const Tile& tile) { return marks[*t.index_of(tile)]; };
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t.tiles()[i].kind == TileKind::DA && marks[i] == Mark::Alpha) return false;
        if (t.tiles()[i].kind == TileKind::AE && marks[i] == Mark::Beta) return false;
    }
    StripDecomposition s = strips(t);
    for (const Strip& strip : s.north)
        for (std::size_t p = 0; p < strip.tiles.size(); ++p)
            if (mark(strip.tiles[p]) == Mark::Alpha)
                for (std::size_t above = p + 1; above < strip.tiles.size(); ++above)
                    if (mark(strip.tiles[above]) != Mark::Empty) return false;
    for (const Strip& strip : s.west)
        for (std::size_t p = 0; p < strip.tiles.size(); ++p)
            if (mark(strip.tiles[p]) == Mark::Beta)
                for (std::size_t left = p + 1; left < strip.tiles.size(); ++left)
                    if (mark(strip.tiles[left]) != Mark::Empty) return false;
    return true;
}

std::set<std::vector<Mark>> mark_set(const std::vector<Filling>& fs) {
    std::set<std::vector<Mark>> out;
    for (const Filling& f : fs) out.insert(f.marks());
    return out;
}

}  // namespace

TEST(tableau, dae_fillings) {
    const Word w = Word::parse("DAE");
    auto fs = enumerate_fillings(minimal_tiling(make_diagram(w)));
    EXPECT_EQ(fs.size(), 7u);
    const Polynomial seven = P("q^3 + q^2*a + q*a + q^2*b + q*b + a*b + q*a*b");
    EXPECT_EQ(weight_of_word(w), P("a*b") * seven);
    Polynomial stripped;
    for (const Filling& f : fs) stripped += strip_boundary_factor(weight_of_filling(f).to_polynomial(), w);
    EXPECT_EQ(stripped, seven);
}

TEST(tableau, small_word_weights) {
    EXPECT_EQ(weight_of_word(Word::parse("DE")), P("a^2*b + a*b^2 + q*a*b"));
    EXPECT_EQ(weight_of_word(Word::parse("DA")), P("a*b + q*a"));
    EXPECT_EQ(weight_of_word(Word::parse("AD")), P("a"));
    EXPECT_EQ(weight_of_word(Word::parse("AE")), P("a*b + q*b"));
    EXPECT_EQ(weight_of_word(Word::parse("EA")), P("b"));
    EXPECT_EQ(weight_of_word(Word::parse("ED")), P("a*b"));
    EXPECT_EQ(weight_of_word(Word::parse("A")), P("1"));
}

TEST(tableau, empty_filling_weight) {
    const Tiling t = minimal_tiling(make_diagram(Word::parse("DAE")));
    Filling f(make_frame(t), std::vector<Mark>(t.size(), Mark::Empty));
    EXPECT_TRUE(is_valid_filling(f));
    EXPECT_EQ(weight_of_filling(f).to_polynomial(), P("q^3*a*b"));
    EXPECT_THROW(Filling(make_frame(t), {Mark::Empty}), std::invalid_argument);
}

TEST(tableau, enumerator_matches_rule_check_over_all_assignments) {
    for (const Word& w : words_up_to(5)) {
        const Tiling t = minimal_tiling(make_diagram(w));
        std::set<std::vector<Mark>> oracle;
        std::vector<Mark> marks(t.size(), Mark::Empty);
        std::size_t total = 1;
        for (std::size_t i = 0; i < t.size(); ++i) total *= 3;
        for (std::size_t code = 0; code < total; ++code) {
            std::size_t c = code;
            for (auto& m : marks) {
                m = static_cast<Mark>(c % 3);
                c /= 3;
            }
            if (rules_hold(t, marks)) oracle.insert(marks);
        }
        auto fast = enumerate_fillings(t);
        EXPECT_EQ(mark_set(fast), oracle) << w.to_string();
        EXPECT_EQ(fast.size(), oracle.size()) << w.to_string();
        EXPECT_EQ(mark_set(brute_force_fillings(t)), oracle) << w.to_string();
    }
}

TEST(tableau, weight_is_tiling_independent) {
    for (const Word& w : words_up_to(5)) {
        const Polynomial reference = weight_of_word(w);
        for (const Tiling& t : enumerate_tilings(make_diagram(w)).tilings)
            EXPECT_EQ(weight_of_word(t), reference) << w.to_string();
    }
}

TEST(tableau, normal_form_sums_to_weight) {
    for (const Word& w : words_up_to(5)) {
        for (const Tiling& t : enumerate_tilings(make_diagram(w)).tilings) {
            Polynomial total;
            for (const Filling& f : enumerate_fillings(t)) {
                const NormalForm nf = normal_form(f);
                EXPECT_EQ(nf.monomial(w.size()), weight_of_filling(f));
                total += nf.monomial(w.size()).to_polynomial();
            }
            EXPECT_EQ(total, weight_of_word(w)) << w.to_string();
        }
    }
}

TEST(tableau, phi_table) {
    const PhiTable& table = PhiTable::instance();
    EXPECT_TRUE(table.self_check());
    // 7 local fillings with no incoming line, 2 with one line of either kind, 1 with both.
    EXPECT_EQ(table.case_count(), 12u);
    const LocalMarks empty{Mark::Empty, Mark::Empty, Mark::Empty};
    EXPECT_EQ(table.to_maximal({false, false}, empty), empty);
    EXPECT_EQ(table.to_maximal({true, true}, empty), empty);
}

TEST(tableau, weight_preserving_flip_is_a_bijection) {
    for (const Word& w : words_up_to(5)) {
        for (const Tiling& t : enumerate_tilings(make_diagram(w)).tilings) {
            const auto fillings = enumerate_fillings(t);
            for (const Flip& flip : find_flips(t)) {
                const Tiling flipped = apply_flip(t, flip.anchor);
                std::set<std::vector<Mark>> images;
                for (const Filling& f : fillings) {
                    Filling g = weight_preserving_flip(f, flip.anchor);
                    ASSERT_EQ(g.tiling(), flipped);
                    EXPECT_TRUE(is_valid_filling(g));
                    EXPECT_EQ(weight_of_filling(g), weight_of_filling(f));
                    EXPECT_EQ(weight_preserving_flip(g, flip.anchor), f);
                    // Tiles outside the hexagon keep their marks.
                    for (const Tile& tile : t.tiles())
                        if (flipped.contains(tile)) EXPECT_EQ(g.at(tile), f.at(tile));
                    images.insert(g.marks());
                }
                EXPECT_EQ(images, mark_set(enumerate_fillings(flipped))) << w.to_string();
            }
        }
    }
}

TEST(tableau, partition_function_small_sectors) {
    EXPECT_EQ(partition_function(1, 0), P("a + b"));
    EXPECT_EQ(partition_function(2, 1), P("2*a*b + q*a + a + q*b + b"));
    EXPECT_EQ(partition_function(2, 0).evaluate(Binding(1, 1, 1)), Rational(6));
    EXPECT_EQ(partition_function(3, 3), P("1"));
}

TEST(tableau, refined_partition_function_sums_to_q1) {
    for (std::size_t n = 1; n <= 5; ++n) {
        for (std::size_t r = 0; r <= n; ++r) {
            Polynomial total;
            for (const auto& [k, p] : refined_partition_function(n, r)) total += p;
            EXPECT_EQ(total, partition_function(n, r).substitute(Symbol::Q, Polynomial(1)));
            EXPECT_EQ(refined_generating_function(n, r).substitute(Symbol::X, Polynomial(1)), total);
        }
    }
}

TEST(tableau, limits_are_enforced) {
    Limits tiny;
    tiny.max_area = 2;
    EXPECT_THROW(weight_of_word(Word::parse("DAE"), tiny), LimitExceeded);
    Limits few;
    few.max_fillings = 3;
    EXPECT_THROW(enumerate_fillings(minimal_tiling(make_diagram(Word::parse("DAE"))), few), LimitExceeded);
}
