#include <gtest/gtest.h>

#include <vector>

#include "dualramsey/hom_enum.hpp"
#include "dualramsey/objects.hpp"
#include "support/oracles.hpp"

using namespace dualramsey;

namespace {

template <MorphismCategory Cat>
std::vector<std::vector<std::size_t>> fast_homset(const typename Cat::Object& a, const typename Cat::Object& b)
{
    std::vector<std::vector<std::size_t>> out;
    for (const auto& f : enumerate_homset<Cat>(a, b).morphisms)
        out.emplace_back(f.images().begin(), f.images().end());
    return out;
}

template <MorphismCategory Cat>
void expect_oracle_equivalence(const std::vector<typename Cat::Object>& objects)
{
    for (const auto& a : objects) {
        for (const auto& b : objects) {
            const auto fast = fast_homset<Cat>(a, b);
            ASSERT_EQ(fast, oracle::naive_homset<Cat>(a, b));
            ASSERT_EQ(count_homset<Cat>(a, b), fast.size());
        }
    }
}

template <class G>
std::vector<G> objects_up_to(std::size_t n, std::vector<G> (*gen)(std::size_t))
{
    std::vector<G> out;
    for (std::size_t i = 1; i <= n; ++i)
        for (auto& g : gen(i))
            out.push_back(std::move(g));
    return out;
}

std::vector<Chain> chains_up_to(std::size_t n)
{
    std::vector<Chain> out;
    for (std::size_t i = 1; i <= n; ++i)
        out.push_back(Chain::numbered(i));
    return out;
}

} // namespace

TEST(HomEnum, ChainClassesMatchNaiveFilter)
{
    expect_oracle_equivalence<ChEmb>(chains_up_to(5));
    expect_oracle_equivalence<ChRs>(chains_up_to(5));
}

TEST(HomEnum, EDigSrqMatchesNaiveFilterUpToFour)
{
    expect_oracle_equivalence<EDigSrq>(objects_up_to<LinExtDigraph>(4, all_lin_ext_digraphs));
}

TEST(HomEnum, OOGraSrqMatchesNaiveFilterUpToThree)
{
    expect_oracle_equivalence<OOGraSrq>(objects_up_to<OrderedOrientedGraph>(3, all_oographs));
}

TEST(HomEnum, OOGraSrqFromFourVerticesMatchesNaiveFilter)
{
    // The full 4-vertex square is 729 x 729; the acceptance binary runs it. Here
    // every 4-vertex source against every target up to 3 vertices.
    const auto sources = all_oographs(4);
    const auto targets = objects_up_to<OrderedOrientedGraph>(3, all_oographs);
    for (const auto& a : sources)
        for (const auto& b : targets)
            ASSERT_EQ(fast_homset<OOGraSrq>(a, b), oracle::naive_homset<OOGraSrq>(a, b));
}

TEST(HomEnum, Deterministic)
{
    const auto a = all_oographs(4)[500];
    const auto b = all_oographs(3)[5];
    EXPECT_EQ(fast_homset<OOGraSrq>(a, b), fast_homset<OOGraSrq>(a, b));
}

TEST(HomEnum, ChainCounts)
{
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto c = Chain::numbered(n);
        EXPECT_EQ(count_homset<ChRs>(c, Chain::numbered(1)), 1u);
        EXPECT_EQ(count_homset<ChRs>(c, Chain::numbered(2)), (std::uint64_t{1} << (n - 1)) - 1);
        EXPECT_EQ(count_homset<ChRs>(c, Chain::numbered(n + 1)), 0u);
        EXPECT_EQ(count_homset<ChEmb>(Chain::numbered(2), c), binomial(n, 2));
    }
    const auto small = LinExtDigraph(Chain::numbered(2));
    const auto big = LinExtDigraph(Chain::numbered(3));
    EXPECT_EQ(count_homset<EDigSrq>(small, big), 0u);
}

TEST(HomEnum, GuardFailsLoudly)
{
    EnumGuard tight{3, 4};
    EXPECT_THROW(enumerate_homset<ChRs>(Chain::numbered(5), Chain::numbered(2), tight), GuardExceeded);
    EXPECT_THROW(enumerate_homset<EDigSrq>(LinExtDigraph(Chain::numbered(4)), LinExtDigraph(Chain::numbered(1)),
                                           tight),
                 GuardExceeded);
    EXPECT_NO_THROW(enumerate_homset<ChRs>(Chain::numbered(4), Chain::numbered(2), tight));
}
