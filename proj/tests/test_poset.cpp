#include <gtest/gtest.h>

#include "generators.hpp"
#include "tropid/error.hpp"
#include "tropid/poset.hpp"

using namespace tropid;
using namespace tropid::testing;

TEST(Poset, ChainAndAntichain) {
    const Poset c = Poset::chain(4);
    EXPECT_EQ(c.max_chain_length(), 4u);
    EXPECT_TRUE(c.leq(0, 3));
    EXPECT_FALSE(c.leq(3, 0));
    EXPECT_EQ(c.label(2), "3");
    EXPECT_EQ(Poset::antichain(5).max_chain_length(), 1u);
    EXPECT_EQ(Poset::chain(0).max_chain_length(), 0u);
}

TEST(Poset, TransitiveClosure) {
    const Poset p = Poset::from_relation({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    EXPECT_TRUE(p.leq(0, 2));
    EXPECT_EQ(p.strict_pairs().size(), 3u);
    EXPECT_EQ(p.max_chain_length(), 3u);
}

TEST(Poset, RejectsCyclesAndBadLabels) {
    EXPECT_THROW(Poset::from_relation({"a", "b"}, {{"a", "b"}, {"b", "a"}}), InvalidArgument);
    EXPECT_THROW(Poset::from_relation({"a", "a"}, {}), InvalidArgument);
    EXPECT_THROW(Poset::from_relation({"a"}, {{"a", "z"}}), InvalidArgument);
    EXPECT_NO_THROW(Poset::from_relation({"a"}, {{"a", "a"}}));
}

TEST(Poset, InverseMonoidOrder) {
    const Poset p = fmim_poset();
    EXPECT_EQ(p.size(), 3u);
    EXPECT_EQ(p.max_chain_length(), 2u);
    const auto i1 = *p.index_of("1"), i2 = *p.index_of("2"), i3 = *p.index_of("3");
    EXPECT_TRUE(p.less(i1, i3));
    EXPECT_TRUE(p.less(i2, i3));
    EXPECT_FALSE(p.leq(i1, i2));
    EXPECT_FALSE(p.leq(i2, i1));
}

TEST(Poset, DiamondPaths) {
    const Poset p = Poset::from_relation({"0", "x", "y", "1"}, {{"0", "x"}, {"0", "y"}, {"x", "1"}, {"y", "1"}});
    EXPECT_EQ(p.max_chain_length(), 3u);
    EXPECT_EQ(p.enumerate_paths(3), (std::vector<Path>{{0, 1, 3}, {0, 2, 3}}));
    EXPECT_EQ(p.enumerate_paths(2, 0, 3), (std::vector<Path>{{0, 3}}));
    EXPECT_EQ(p.enumerate_paths(1).size(), 4u);
    EXPECT_EQ(p.enumerate_paths(4).size(), 0u);
    EXPECT_EQ(p.canonical_max_chain(), (Path{0, 1, 3}));
}

TEST(Poset, PathsAreStrictChainsAndLengthMatchesBruteForce) {
    Rng rng(3);
    for (int t = 0; t < 100; ++t) {
        const Poset p = random_poset(rng, static_cast<std::size_t>(uniform_int(rng, 1, 6)), 0.4);
        std::size_t longest = 0;
        for (std::size_t k = 1; k <= p.size(); ++k) {
            const auto paths = p.enumerate_paths(k);
            if (!paths.empty()) longest = k;
            for (const Path& path : paths)
                for (std::size_t i = 1; i < path.size(); ++i) EXPECT_TRUE(p.less(path[i - 1], path[i]));
            EXPECT_TRUE(std::is_sorted(paths.begin(), paths.end()));
        }
        EXPECT_EQ(p.max_chain_length(), longest);
        EXPECT_EQ(p.canonical_max_chain().size(), longest);
    }
}

TEST(Poset, ClosureIsAPartialOrder) {
    Rng rng(4);
    for (int t = 0; t < 100; ++t) {
        const Poset p = random_poset(rng, 5, 0.5);
        for (std::size_t a = 0; a < 5; ++a) {
            EXPECT_TRUE(p.leq(a, a));
            for (std::size_t b = 0; b < 5; ++b) {
                if (a != b) EXPECT_FALSE(p.leq(a, b) && p.leq(b, a));
                for (std::size_t c = 0; c < 5; ++c)
                    if (p.leq(a, b) && p.leq(b, c)) EXPECT_TRUE(p.leq(a, c));
            }
        }
    }
}

TEST(Poset, ChainPathCountsAreBinomial) {
    const Poset c3 = Poset::chain(3);
    EXPECT_EQ(c3.enumerate_paths(3), (std::vector<Path>{{0, 1, 2}}));
    EXPECT_EQ(c3.enumerate_paths(2), (std::vector<Path>{{0, 1}, {0, 2}, {1, 2}}));
    EXPECT_TRUE(Poset::antichain(3).enumerate_paths(2).empty());
    const std::size_t binom6[] = {1, 6, 15, 20, 15, 6, 1};
    const Poset c6 = Poset::chain(6);
    for (std::size_t k = 1; k <= 6; ++k) EXPECT_EQ(c6.enumerate_paths(k).size(), binom6[k]);
}

TEST(Poset, EmptyRelationIsAntichain) {
    EXPECT_EQ(Poset::from_relation({"1", "2"}, {}), Poset::antichain(2));
}
