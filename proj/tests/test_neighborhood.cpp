#include <gtest/gtest.h>

#include <map>
#include <set>

#include "generators.hpp"
#include "mbs/builders.hpp"
#include "mbs/neighborhood.hpp"

using namespace mbs;

namespace {

MultibranchedSurface annulus() {
    return {{BranchId("l")}, {{SectorId("a"), 0, true, {{BranchId("l"), 1}, {BranchId("l"), -1}}}}, "annulus"};
}

MultibranchedSurface connected_regular(gen::Rng& rng) {
    gen::SurfaceShape shape;
    for (;;) {
        auto x = gen::surface(rng, shape);
        if (is_connected(x)) return x;
    }
}

// Every (sector side, prebranch) circle and every gap-annulus circle occurs exactly once.
void expect_gluings_perfect(const MultibranchedSurface& x, const BoundarySurface& b) {
    std::set<std::tuple<std::size_t, std::size_t, int>> side_circles;
    std::map<std::pair<std::size_t, bool>, int> gap_circles;
    for (const auto& g : b.gluings) {
        EXPECT_TRUE(side_circles.insert({g.prebranch.sector, g.prebranch.slot, g.side}).second);
        ++gap_circles[{g.gap_piece, g.upper}];
    }
    std::size_t prebranches = 0;
    for (const auto& s : x.sectors()) prebranches += s.prebranches.size();
    EXPECT_EQ(side_circles.size(), 2 * prebranches);
    EXPECT_EQ(gap_circles.size(), 2 * prebranches);
    for (const auto& [circle, count] : gap_circles) EXPECT_EQ(count, 1);
}

}  // namespace

TEST(CyclicOrder, NormalForm) {
    const std::vector<PrebranchRef> a{{2, 0}, {0, 1}, {1, 0}, {0, 0}};
    const auto n = normalize_cyclic_order(a);
    EXPECT_EQ(n.front(), (PrebranchRef{0, 0}));
    // rotation and reflection of the same cycle normalize identically
    EXPECT_EQ(normalize_cyclic_order({{1, 0}, {0, 1}, {2, 0}, {0, 0}}), n);
    EXPECT_EQ(normalize_cyclic_order({{0, 1}, {1, 0}, {0, 0}, {2, 0}}), n);
}

TEST(PermutationSystems, Counts) {
    EXPECT_EQ(enumerate_permutation_systems(pants_example(), 100).systems.size(), 1u);
    EXPECT_EQ(enumerate_permutation_systems(seifert_example({2, 3, 4}), 100).systems.size(), 1u);
    const auto rose = enumerate_permutation_systems(rose_times_circle(1), 100);  // index 5: 4!/2
    EXPECT_EQ(rose.systems.size(), 12u);
    EXPECT_EQ(rose.total, 12u);
    EXPECT_TRUE(rose.exhaustive);
    EXPECT_EQ(std::set<CircularPermutationSystem>(rose.systems.begin(), rose.systems.end()).size(), 12u);
}

TEST(PermutationSystems, SamplingAboveCap) {
    const auto x = rose_times_circle(2);  // index 9: 8!/2 = 20160
    const auto small = enumerate_permutation_systems(x, 10);
    EXPECT_FALSE(small.exhaustive);
    EXPECT_EQ(small.total, 20160u);
    EXPECT_EQ(small.systems.size(), 11u);
    EXPECT_EQ(small.systems.front(), identity_permutation_system(x));
    const auto large = enumerate_permutation_systems(x, 40);
    for (std::size_t k = 0; k < small.systems.size(); ++k) EXPECT_EQ(small.systems[k], large.systems[k]);
    EXPECT_EQ(enumerate_permutation_systems(x, 10).systems, small.systems);
}

TEST(PermutationSystems, RejectsIrregular) {
    MultibranchedSurface mixed({BranchId("l")},
                               {{SectorId("a"), 0, true, {{BranchId("l"), 2}}},
                                {SectorId("b"), 0, true, {{BranchId("l"), 3}}}});
    EXPECT_THROW(enumerate_permutation_systems(mixed, 10), Error);
    EXPECT_THROW(genus_upper_bound_heegaard(mixed), Error);
}

TEST(Boundary, PantsTotalEuler) {
    const auto x = pants_example();
    const auto b = boundary_surface(x, identity_permutation_system(x));
    EXPECT_EQ(b.total_euler_characteristic(), -8);
    expect_gluings_perfect(x, b);
}

TEST(Boundary, SeifertIsSphere) {
    for (const auto& p : std::vector<std::vector<std::int64_t>>{{2}, {2, 3}, {3, 4, 5}, {2, 2, 2, 2}}) {
        const auto x = seifert_example(p);
        const auto b = boundary_surface(x, identity_permutation_system(x));
        ASSERT_EQ(b.components.size(), 1u);
        EXPECT_EQ(b.components[0].genus, 0);
        EXPECT_EQ(dual_graph(x, b).first_betti_number(), static_cast<std::int64_t>(p.size()));
    }
}

TEST(Boundary, TorusThickensToTwoTori) {
    // the annulus closes up into a torus; its neighborhood is torus x interval
    const auto x = annulus();
    const auto b = boundary_surface(x, identity_permutation_system(x));
    ASSERT_EQ(b.components.size(), 2u);
    EXPECT_EQ(b.components[0].genus, 1);
    EXPECT_EQ(b.components[1].genus, 1);
    EXPECT_EQ(dual_graph(x, b).first_betti_number(), 0);
    EXPECT_EQ(genus_upper_bound_heegaard(x).bound, 2);
}

TEST(Boundary, RejectsForeignSystem) {
    const auto x = pants_example();
    CircularPermutationSystem bad = identity_permutation_system(x);
    bad.orders[0].pop_back();
    EXPECT_THROW(boundary_surface(x, bad), Error);
}

TEST(Boundary, FlipsCanMakeBoundaryNonorientable) {
    const auto x = obstruction_example();
    const auto bound = genus_upper_bound_heegaard(x, kDefaultSearchCap, true);
    EXPECT_GT(bound.rejected_flips, 0u);
    EXPECT_EQ(bound.bound, 2);
    EXPECT_THROW(boundary_surface(x, identity_permutation_system(x), {true, false}), Error);
}

TEST(Boundary, InvariantsOnRandomSurfaces) {
    gen::Rng rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const auto x = connected_regular(rng);
        const auto systems = enumerate_permutation_systems(x, 200);
        for (const auto& p : systems.systems) {
            const auto b = boundary_surface(x, p);
            EXPECT_EQ(b.total_euler_characteristic(), 2 * euler_characteristic(x));
            for (const auto& c : b.components) {
                EXPECT_LE(c.euler_characteristic, 2);
                EXPECT_EQ(c.euler_characteristic % 2, 0);
            }
            expect_gluings_perfect(x, b);
        }
    }
}

TEST(DualGraph, EdgesAreSectors) {
    const auto x = pants_example();
    const auto g = dual_graph(x, identity_permutation_system(x));
    EXPECT_EQ(g.edges.size(), 4u);
    EXPECT_EQ(g.component_count(), 1u);
    EXPECT_EQ(g.first_betti_number(),
              static_cast<std::int64_t>(g.edges.size()) - static_cast<std::int64_t>(g.vertices.size()) + 1);
}

TEST(Bounds, SectorCount) {
    EXPECT_EQ(genus_upper_bound_sectors(pants_example()), 8u);
    EXPECT_EQ(genus_upper_bound_sectors(seifert_example({2, 3})), 4u);
    EXPECT_EQ(genus_upper_bound_sectors(obstruction_example()), 2u);
}

TEST(Bounds, HeegaardExamples) {
    for (std::size_t n = 1; n <= 3; ++n) {
        std::vector<std::int64_t> p(n, 3);
        EXPECT_EQ(genus_upper_bound_heegaard(seifert_example(p)).bound, static_cast<std::int64_t>(n));
    }
    EXPECT_EQ(genus_upper_bound_heegaard(obstruction_example()).bound, 2);
    const auto pants = pants_example();
    EXPECT_EQ(best_genus_upper_bound(pants),
              std::min<std::int64_t>(8, genus_upper_bound_heegaard(pants).bound));
}

TEST(Bounds, BestIsMinimum) {
    gen::Rng rng(29);
    for (int trial = 0; trial < 40; ++trial) {
        const auto x = connected_regular(rng);
        const auto best = best_genus_upper_bound(x, 100);
        EXPECT_LE(best, static_cast<std::int64_t>(genus_upper_bound_sectors(x)));
        EXPECT_LE(best, genus_upper_bound_heegaard(x, 100).bound);
    }
}

TEST(Slopes, DefaultAndChecks) {
    const auto x = seifert_example({2, 5});
    const auto slopes = default_slope_system(x);
    ASSERT_EQ(slopes.slopes.size(), 2u);
    EXPECT_EQ(slopes.slopes[1].q, 5);
    EXPECT_NO_THROW(check_slope_system(x, slopes));
    auto bad = slopes;
    bad.slopes[0].q = 3;
    EXPECT_THROW(check_slope_system(x, bad), Error);
}
