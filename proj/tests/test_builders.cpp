#include <gtest/gtest.h>

#include "generators.hpp"
#include "mbs/builders.hpp"
#include "mbs/homology.hpp"
#include "oracles.hpp"

using namespace mbs;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::InternalMismatch;
}

void expect_well_formed(const MultibranchedSurface& x) {
    EXPECT_NO_THROW(validate(x, false));
    EXPECT_TRUE(is_regular(x));
    const auto want = oracle::h1(x);
    const auto got = h1(x);
    EXPECT_EQ(got.free_rank(), want.free_rank);
    ASSERT_EQ(got.invariant_factors().size(), want.torsion.size());
    for (std::size_t i = 0; i < want.torsion.size(); ++i)
        EXPECT_EQ(got.invariant_factors()[i], BigInt(want.torsion[i]));
}

std::size_t graph_betti(const Multigraph& g) {
    std::vector<std::size_t> parent(g.vertices);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
        return parent[v] == v ? v : parent[v] = find(parent[v]);
    };
    std::size_t components = g.vertices;
    for (auto [u, v] : g.edges) {
        const auto a = find(u), b = find(v);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return g.edges.size() + components - g.vertices;
}

}  // namespace

TEST(Seifert, Shape) {
    const auto x = seifert_example({2, 3, 5});
    EXPECT_EQ(x.branch_count(), 3u);
    EXPECT_EQ(x.sector_count(), 3u);
    EXPECT_EQ(x.name(), "seifert");
    EXPECT_EQ(x.sectors()[0].id.value, "D1");
    EXPECT_EQ(x.sectors()[1].prebranches[0].oriented_degree, -2);
    EXPECT_EQ(x.sectors()[1].prebranches[1].oriented_degree, 3);
    EXPECT_EQ(euler_characteristic(x), 1);
    expect_well_formed(x);
}

TEST(Seifert, TorsionOrderIsProduct) {
    for (const auto& p : std::vector<std::vector<std::int64_t>>{{2}, {2, 3}, {2, 2}, {3, 4, 5}, {2, 4, 6, 3}}) {
        const auto g = h1(seifert_example(p));
        EXPECT_EQ(g.free_rank(), 0u);
        BigInt order = 1, want = 1;
        for (const auto& f : g.invariant_factors()) order *= f;
        for (auto v : p) want *= v;
        EXPECT_EQ(order, want);
    }
    EXPECT_EQ(h1(seifert_example({2, 3, 5})).to_string(), "Z/30");
}

TEST(Seifert, Rejections) {
    EXPECT_EQ(code_of([] { seifert_example({}); }), ErrorCode::EmptyDegrees);
    EXPECT_EQ(code_of([] { seifert_example({2, 1}); }), ErrorCode::DegreeTooSmall);
}

TEST(OneSector, Shape) {
    const auto x = one_sector(2, {2, 3, 4}, {1, -1, 1});
    EXPECT_EQ(x.branch_count(), 3u);
    ASSERT_EQ(x.sector_count(), 1u);
    EXPECT_EQ(x.sectors()[0].genus, 2);
    EXPECT_EQ(x.sectors()[0].prebranches[1].oriented_degree, -3);
    EXPECT_EQ(euler_characteristic(x), 2 - 4 - 3);
    expect_well_formed(x);
}

TEST(OneSector, HomologyFormula) {
    // free part 2g + (n - 1); torsion gcd of the degrees
    for (int g = 0; g <= 2; ++g)
        for (const auto& d : std::vector<std::vector<std::int64_t>>{{1}, {2}, {2, 2}, {4, 6}, {6, 10, 15}, {3, 9, 12}}) {
            const auto x = one_sector(g, d);
            const auto group = h1(x);
            EXPECT_EQ(group.free_rank(), static_cast<std::size_t>(2 * g) + d.size() - 1);
            std::int64_t gcd = 0;
            for (auto v : d) gcd = std::gcd(gcd, v);
            if (gcd == 1)
                EXPECT_TRUE(group.invariant_factors().empty());
            else
                EXPECT_EQ(group.invariant_factors(), std::vector<BigInt>{BigInt(gcd)});
            expect_well_formed(x);
        }
}

TEST(OneSector, Rejections) {
    EXPECT_EQ(code_of([] { one_sector(0, {}); }), ErrorCode::EmptyDegrees);
    EXPECT_EQ(code_of([] { one_sector(-1, {2}); }), ErrorCode::NegativeGenus);
    EXPECT_EQ(code_of([] { one_sector(0, {2, 3}, {1}); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { one_sector(0, {0}); }), ErrorCode::ZeroDegree);
}

TEST(Pants, Shape) {
    const auto x = pants_example();
    EXPECT_EQ(x.branch_count(), 4u);
    EXPECT_EQ(x.sector_count(), 4u);
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& s = x.sectors()[i];
        ASSERT_EQ(s.prebranches.size(), 3u);
        for (const auto& pb : s.prebranches) EXPECT_NE(pb.branch, x.branches()[i]);
    }
    EXPECT_EQ(euler_characteristic(x), -4);
    expect_well_formed(x);
}

TEST(Rose, Shape) {
    for (int n = 1; n <= 4; ++n) {
        const auto x = rose_times_circle(n);
        EXPECT_EQ(x.sector_count(), static_cast<std::size_t>(2 * n + 1));
        EXPECT_EQ(euler_characteristic(x), 1);
        EXPECT_EQ(h1(x).free_rank(), static_cast<std::size_t>(2 * n));
        expect_well_formed(x);
    }
    EXPECT_EQ(code_of([] { rose_times_circle(0); }), ErrorCode::InvalidArgument);
}

TEST(Obstruction, Shape) {
    const auto x = obstruction_example();
    EXPECT_EQ(x.branch_count(), 1u);
    ASSERT_EQ(x.sector_count(), 1u);
    EXPECT_EQ(x.sectors()[0].prebranches.size(), 2u);
    EXPECT_EQ(h1(x).to_string(), "Z/4 + Z");
    expect_well_formed(x);
}

TEST(Graph, SingleEdge) {
    const auto x = graph_to_mbs({2, {{0, 1}}});
    EXPECT_EQ(x.branch_count(), 2u);
    EXPECT_EQ(x.sector_count(), 3u);
    EXPECT_EQ(h1(x).to_string(), "0");
    expect_well_formed(x);
}

TEST(Graph, LoopIsTorus) {
    const auto x = graph_to_mbs({1, {{0, 0}}});
    EXPECT_EQ(h1(x).to_string(), "Z^2");
    EXPECT_EQ(euler_characteristic(x), 0);
}

TEST(Graph, CompleteGraphOnFour) {
    Multigraph k4{4, {}};
    for (std::size_t u = 0; u < 4; ++u)
        for (std::size_t v = u + 1; v < 4; ++v) k4.edges.emplace_back(u, v);
    const auto x = graph_to_mbs(k4);
    EXPECT_EQ(x.branch_count(), 12u);
    EXPECT_EQ(x.sector_count(), 10u);
    EXPECT_EQ(h1(x).to_string(), "Z^6");
}

TEST(Graph, Rejections) {
    EXPECT_EQ(code_of([] { graph_to_mbs({3, {{0, 1}}}); }), ErrorCode::IsolatedVertex);
    EXPECT_EQ(code_of([] { graph_to_mbs({2, {{0, 2}}}); }), ErrorCode::InvalidArgument);
}

TEST(Graph, RandomGraphsGiveClosedOrientableSurfaces) {
    gen::Rng rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        SCOPED_TRACE(trial);
        Multigraph g{gen::uniform(rng, 1, 6), {}};
        const auto edges = gen::uniform(rng, g.vertices, 2 * g.vertices);
        for (std::size_t k = 0; k < edges; ++k)
            g.edges.emplace_back(gen::uniform(rng, 0, g.vertices - 1), gen::uniform(rng, 0, g.vertices - 1));
        // ensure no vertex is isolated
        for (std::size_t v = 0; v < g.vertices; ++v) g.edges.emplace_back(v, (v + 1) % g.vertices);
        const auto x = graph_to_mbs(g);
        const auto beta = graph_betti(g);
        const auto group = h1(x);
        EXPECT_TRUE(group.invariant_factors().empty());
        EXPECT_EQ(group.free_rank(), 2 * beta);
        EXPECT_EQ(euler_characteristic(x), 2 * static_cast<std::int64_t>(g.vertices) -
                                               2 * static_cast<std::int64_t>(g.edges.size()));
        expect_well_formed(x);
    }
}
