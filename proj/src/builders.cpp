#include "mbs/builders.hpp"

#include <string>

namespace mbs {

namespace {

BranchId branch(std::size_t k) { return BranchId("l" + std::to_string(k)); }

}  // namespace

MultibranchedSurface seifert_example(const std::vector<std::int64_t>& p) {
    if (p.empty()) throw Error(ErrorCode::EmptyDegrees, "seifert example needs at least one degree");
    for (auto q : p)
        if (q > -2 && q < 2)
            throw Error(ErrorCode::DegreeTooSmall, "degree " + std::to_string(q) + " has |p| < 2");

    std::vector<BranchId> branches;
    for (std::size_t i = 1; i <= p.size(); ++i) branches.push_back(branch(i));
    std::vector<Sector> sectors;
    sectors.push_back({SectorId("D1"), 0, true, {{branch(1), p[0]}}});
    for (std::size_t i = 1; i < p.size(); ++i)
        sectors.push_back({SectorId("A" + std::to_string(i)), 0, true,
                           {{branch(i), -p[i - 1]}, {branch(i + 1), p[i]}}});
    return {std::move(branches), std::move(sectors), "seifert"};
}

MultibranchedSurface one_sector(int genus, const std::vector<std::int64_t>& degrees,
                                const std::vector<int>& signs) {
    if (degrees.empty()) throw Error(ErrorCode::EmptyDegrees, "one-sector surface needs degrees");
    if (genus < 0) throw Error(ErrorCode::NegativeGenus, "genus must be non-negative");
    if (!signs.empty() && signs.size() != degrees.size())
        throw Error(ErrorCode::InvalidArgument, "one sign per degree expected");
    std::vector<BranchId> branches;
    Sector sector{SectorId("e1"), genus, true, {}};
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (degrees[i] <= 0)
            throw Error(ErrorCode::ZeroDegree, "degrees must be positive");
        int sign = 1;
        if (!signs.empty()) {
            if (signs[i] != 1 && signs[i] != -1)
                throw Error(ErrorCode::InvalidArgument, "signs must be +1 or -1");
            sign = signs[i];
        }
        branches.push_back(branch(i + 1));
        sector.prebranches.push_back({branch(i + 1), sign * degrees[i]});
    }
    return {std::move(branches), {std::move(sector)}, "one_sector"};
}

MultibranchedSurface pants_example() {
    std::vector<BranchId> branches;
    std::vector<Sector> sectors;
    for (std::size_t i = 1; i <= 4; ++i) branches.push_back(branch(i));
    for (std::size_t i = 1; i <= 4; ++i) {
        Sector s{SectorId("e" + std::to_string(i)), 0, true, {}};
        for (std::size_t j = 1; j <= 4; ++j)
            if (j != i) s.prebranches.push_back({branch(j), 1});
        sectors.push_back(std::move(s));
    }
    return {std::move(branches), std::move(sectors), "pants"};
}

MultibranchedSurface rose_times_circle(int n) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "rose needs n >= 1");
    std::vector<Sector> sectors;
    for (int i = 1; i <= 2 * n; ++i)
        sectors.push_back({SectorId("a" + std::to_string(i)), 0, true, {{branch(1), 1}, {branch(1), -1}}});
    sectors.push_back({SectorId("d"), 0, true, {{branch(1), 1}}});
    return {{branch(1)}, std::move(sectors), "rose"};
}

MultibranchedSurface graph_to_mbs(const Multigraph& graph) {
    std::vector<std::vector<BranchId>> holes(graph.vertices);
    std::vector<BranchId> branches;
    std::vector<Sector> annuli;
    for (std::size_t k = 0; k < graph.edges.size(); ++k) {
        const auto [u, v] = graph.edges[k];
        if (u >= graph.vertices || v >= graph.vertices)
            throw Error(ErrorCode::InvalidArgument, "edge endpoint out of range");
        const auto tag = std::to_string(k + 1);
        BranchId a("l" + tag + "a"), b("l" + tag + "b");
        branches.push_back(a);
        branches.push_back(b);
        holes[u].push_back(a);
        holes[v].push_back(b);
        // Both ends reversed: the annulus closes up orientably with the vertex pieces.
        annuli.push_back({SectorId("a" + tag), 0, true, {{a, -1}, {b, -1}}});
    }
    std::vector<Sector> sectors;
    for (std::size_t v = 0; v < graph.vertices; ++v) {
        if (holes[v].empty())
            throw Error(ErrorCode::IsolatedVertex, "vertex " + std::to_string(v) + " has no edges");
        Sector s{SectorId("v" + std::to_string(v + 1)), 0, true, {}};
        for (const auto& h : holes[v]) s.prebranches.push_back({h, 1});
        sectors.push_back(std::move(s));
    }
    for (auto& a : annuli) sectors.push_back(std::move(a));
    return {std::move(branches), std::move(sectors), "graph"};
}

MultibranchedSurface obstruction_example() {
    return {{branch(1)}, {{SectorId("e1"), 0, true, {{branch(1), 2}, {branch(1), 2}}}}, "obstruction"};
}

}  // namespace mbs
