#include "rat/kernels.hpp"
#include "rat/tableau.hpp"

#include <gtest/gtest.h>

using namespace rat;

TEST(kernels, sector_weights_agree) {
    const auto words = words_with(4, 1);
    const Limits limits;
    const auto s = kernels::serial::sector_weights(words, limits);
    const auto p = kernels::parallel::sector_weights(words, limits);
    EXPECT_EQ(s, p);
    for (std::size_t i = 0; i < words.size(); ++i) EXPECT_EQ(s[i], weight_of_word(words[i]));
}

TEST(kernels, brute_force_agrees) {
    for (const char* w : {"DAE", "DDEE", "DAADE"}) {
        TableauFrame frame(minimal_tiling(make_diagram(Word::parse(w))));
        EXPECT_EQ(kernels::serial::brute_force_marks(frame), kernels::parallel::brute_force_marks(frame)) << w;
    }
}

TEST(kernels, frontier_expansion_agrees) {
    const auto tilings = enumerate_tilings(make_diagram(Word::parse("DDAEE"))).tilings;
    const auto s = kernels::serial::expand_frontier(tilings);
    const auto p = kernels::parallel::expand_frontier(tilings);
    ASSERT_EQ(s.size(), p.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        ASSERT_EQ(s[i].size(), p[i].size());
        for (std::size_t j = 0; j < s[i].size(); ++j) {
            EXPECT_EQ(s[i][j].key, p[i][j].key);
            EXPECT_EQ(s[i][j].tiling, p[i][j].tiling);
        }
    }
}

TEST(kernels, solve_known_system) {
    RationalMatrix a{{2, 1}, {1, 3}};
    std::vector<Rational> b{3, 5};
    std::vector<Rational> x{Rational(4, 5), Rational(7, 5)};
    EXPECT_EQ(kernels::serial::solve(a, b), x);
    EXPECT_EQ(kernels::parallel::solve(a, b), x);
}

TEST(kernels, singular_system) {
    RationalMatrix a{{1, 2}, {2, 4}};
    EXPECT_THROW(kernels::serial::solve(a, {1, 1}), SingularSystem);
    EXPECT_THROW(kernels::parallel::solve(a, {1, 1}), SingularSystem);
}

TEST(kernels, thread_count) { EXPECT_GE(kernels::max_threads(), 1); }
