#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "mbs/core.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline std::int64_t sign(Rng& rng) { return uniform(rng, 0, 1) ? 1 : -1; }

struct SurfaceShape {
    std::size_t max_branches = 4;
    std::size_t max_sectors = 4;
    std::int64_t max_degree = 3;
    int max_genus = 1;
    std::size_t max_prebranches = 4;  // per sector
    bool regular = true;
    bool orientable = true;  // false allows nonorientable sectors
    bool signed_degrees = true;
};

/// Every branch is hit at least once and every sector has at least one prebranch.
inline mbs::MultibranchedSurface surface(Rng& rng, const SurfaceShape& shape) {
    const std::size_t n = uniform(rng, 1, shape.max_branches);
    const std::size_t m_min = (n + shape.max_prebranches - 1) / shape.max_prebranches;
    const std::size_t m = uniform(rng, std::max<std::size_t>(1, m_min), std::max(m_min, shape.max_sectors));

    std::vector<mbs::BranchId> branches;
    std::vector<std::int64_t> degree(n);
    for (std::size_t i = 0; i < n; ++i) {
        branches.emplace_back("b" + std::to_string(i));
        degree[i] = static_cast<std::int64_t>(uniform(rng, 1, static_cast<std::size_t>(shape.max_degree)));
    }
    std::vector<mbs::Sector> sectors;
    for (std::size_t e = 0; e < m; ++e) {
        mbs::Sector s{mbs::SectorId("s" + std::to_string(e)), 0, true, {}};
        s.orientable = shape.orientable || uniform(rng, 0, 2) != 0;
        s.genus = static_cast<int>(uniform(rng, 0, static_cast<std::size_t>(shape.max_genus)));
        if (!s.orientable && s.genus == 0) s.genus = 1;
        sectors.push_back(std::move(s));
    }
    auto attach = [&](std::size_t e, std::size_t l) {
        std::int64_t d = shape.regular ? degree[l]
                                       : static_cast<std::int64_t>(
                                             uniform(rng, 1, static_cast<std::size_t>(shape.max_degree)));
        if (shape.signed_degrees) d *= sign(rng);
        sectors[e].prebranches.push_back({branches[l], d});
    };
    // cover every branch, respecting the per-sector cap
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t l : order) {
        std::size_t e = uniform(rng, 0, m - 1);
        while (sectors[e].prebranches.size() >= shape.max_prebranches) e = (e + 1) % m;
        attach(e, l);
    }
    for (std::size_t e = 0; e < m; ++e) {
        if (sectors[e].prebranches.empty()) attach(e, uniform(rng, 0, n - 1));
        const auto target = uniform(rng, sectors[e].prebranches.size(), shape.max_prebranches);
        while (sectors[e].prebranches.size() < target && uniform(rng, 0, 2) != 0) attach(e, uniform(rng, 0, n - 1));
    }
    for (auto& s : sectors) std::shuffle(s.prebranches.begin(), s.prebranches.end(), rng);
    return {std::move(branches), std::move(sectors), "random"};
}

/// Same surface under fresh names, shuffled lists, and random reversal of
/// branches and sectors.
inline mbs::MultibranchedSurface relabel(Rng& rng, const mbs::MultibranchedSurface& x) {
    const std::size_t n = x.branch_count(), m = x.sector_count();
    std::vector<std::size_t> bperm(n), sperm(m);
    std::iota(bperm.begin(), bperm.end(), 0);
    std::iota(sperm.begin(), sperm.end(), 0);
    std::shuffle(bperm.begin(), bperm.end(), rng);
    std::shuffle(sperm.begin(), sperm.end(), rng);
    std::vector<std::int64_t> bsign(n);
    for (auto& s : bsign) s = sign(rng);

    std::vector<mbs::BranchId> branches(n);
    for (std::size_t i = 0; i < n; ++i) branches[bperm[i]] = mbs::BranchId("r" + std::to_string(bperm[i] * 7 + 3));
    auto renamed = [&](const mbs::BranchId& id) { return branches[bperm[*x.find_branch(id)]]; };
    auto bsign_of = [&](const mbs::BranchId& id) { return bsign[*x.find_branch(id)]; };

    std::vector<mbs::Sector> sectors(m);
    for (std::size_t e = 0; e < m; ++e) {
        const auto& s = x.sectors()[e];
        const std::int64_t tau = s.orientable ? sign(rng) : 1;
        mbs::Sector t{mbs::SectorId("q" + std::to_string(sperm[e] * 5 + 1)), s.genus, s.orientable, {}};
        for (const auto& pb : s.prebranches)
            t.prebranches.push_back({renamed(pb.branch), tau * bsign_of(pb.branch) * pb.oriented_degree});
        std::shuffle(t.prebranches.begin(), t.prebranches.end(), rng);
        sectors[sperm[e]] = std::move(t);
    }
    return {std::move(branches), std::move(sectors), "relabeled"};
}

/// Appends an annulus with degree-one ends on two distinct existing branches.
inline mbs::MultibranchedSurface with_annulus(Rng& rng, mbs::MultibranchedSurface x) {
    auto branches = x.branches();
    auto sectors = x.sectors();
    if (branches.size() < 2) branches.emplace_back("extra");
    const auto a = uniform(rng, 0, branches.size() - 1);
    auto b = uniform(rng, 0, branches.size() - 2);
    if (b >= a) ++b;
    sectors.push_back({mbs::SectorId("annulus"), 0, true, {{branches[a], sign(rng)}, {branches[b], sign(rng)}}});
    return {std::move(branches), std::move(sectors), x.name()};
}

}  // namespace gen
