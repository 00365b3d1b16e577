#include <numeric>
#include <sstream>

#include "mbs/homology.hpp"

namespace mbs {

FgAbelianGroup::FgAbelianGroup(const std::vector<BigInt>& torsion_orders, std::size_t free_rank)
    : free_rank_(free_rank) {
    std::vector<BigInt> orders;
    for (const auto& o : torsion_orders) {
        BigInt a = abs(o);
        if (a.is_zero()) {
            ++free_rank_;
        } else if (a != 1) {
            orders.push_back(std::move(a));
        }
    }
    // Re-diagonalize so that merged cyclic summands land in divisibility order.
    IntegerMatrix diag(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) diag.at(i, i) = orders[i];
    for (auto& d : smith_normal_form(std::move(diag)))
        if (d > 1) factors_.push_back(std::move(d));
}

FgAbelianGroup FgAbelianGroup::direct_sum(const FgAbelianGroup& other) const {
    std::vector<BigInt> all = factors_;
    all.insert(all.end(), other.factors_.begin(), other.factors_.end());
    return FgAbelianGroup(all, free_rank_ + other.free_rank_);
}

std::string FgAbelianGroup::torsion_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < factors_.size(); ++i) out << (i ? " + " : "") << "Z/" << factors_[i];
    return out.str();
}

std::string FgAbelianGroup::to_string() const {
    if (is_trivial()) return "0";
    std::string text = torsion_string();
    if (free_rank_ > 0) {
        if (!text.empty()) text += " + ";
        text += free_rank_ == 1 ? std::string("Z") : "Z^" + std::to_string(free_rank_);
    }
    return text;
}

IntegerMatrix relation_matrix(const MultibranchedSurface& surface) {
    require_orientable(surface);
    IntegerMatrix m(surface.sector_count(), surface.branch_count());
    for (std::size_t s = 0; s < surface.sector_count(); ++s)
        for (const auto& pb : surface.sectors()[s].prebranches)
            m.at(s, surface.branch_position(pb.branch)) += pb.oriented_degree;
    return m;
}

std::size_t SpineGraph::component_count() const {
    std::vector<std::size_t> parent(vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t components = vertices.size();
    for (const auto& e : edges) {
        auto a = find(e.from), b = find(e.to);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return components;
}

std::size_t SpineGraph::first_betti_number() const {
    return edges.size() + component_count() - vertices.size();
}

SpineGraph spine_graph(const MultibranchedSurface& surface) {
    SpineGraph g;
    g.vertices = surface.branches();
    for (std::size_t b = 0; b < surface.branch_count(); ++b)
        g.edges.push_back({b, b, SpineGraph::EdgeKind::BranchLoop, surface.branches()[b].value});
    for (const auto& sector : surface.sectors()) {
        const auto& pbs = sector.prebranches;
        if (pbs.empty()) continue;
        for (std::size_t k = 1; k < pbs.size(); ++k) {
            g.edges.push_back({surface.branch_position(pbs[k - 1].branch),
                               surface.branch_position(pbs[k].branch),
                               SpineGraph::EdgeKind::SectorArc,
                               sector.id.value + ".arc" + std::to_string(k)});
        }
        const auto base = surface.branch_position(pbs.front().branch);
        const int loops = sector.orientable ? 2 * sector.genus : sector.genus;
        for (int k = 0; k < loops; ++k)
            g.edges.push_back({base, base, SpineGraph::EdgeKind::HandleLoop,
                               sector.id.value + ".handle" + std::to_string(k + 1)});
    }
    return g;
}

std::size_t punctured_spine_rank(const MultibranchedSurface& surface) {
    require_connected(surface);
    const auto from_graph = spine_graph(surface).first_betti_number();
    const auto from_chi = 1 + static_cast<std::int64_t>(surface.sector_count()) -
                          euler_characteristic(surface);
    if (from_chi < 0 || static_cast<std::size_t>(from_chi) != from_graph)
        throw Error(ErrorCode::InternalMismatch,
                    "spine rank " + std::to_string(from_graph) +
                        " disagrees with Euler characteristic count " + std::to_string(from_chi));
    return from_graph;
}

namespace {

// Columns: branches, then one per crosscap. A sector with crosscaps a1..ak
// is attached along a1^2 ... ak^2 times its boundary word.
IntegerMatrix presentation_matrix(const MultibranchedSurface& component) {
    std::size_t crosscaps = 0;
    for (const auto& s : component.sectors())
        if (!s.orientable) crosscaps += static_cast<std::size_t>(s.genus);
    const auto n = component.branch_count();
    IntegerMatrix m(component.sector_count(), n + crosscaps);
    std::size_t next = n;
    for (std::size_t s = 0; s < component.sector_count(); ++s) {
        const auto& sector = component.sectors()[s];
        for (const auto& pb : sector.prebranches) m.at(s, component.branch_position(pb.branch)) += pb.oriented_degree;
        if (!sector.orientable)
            for (int k = 0; k < sector.genus; ++k) m.at(s, next++) = 2;
    }
    return m;
}

FgAbelianGroup h1_connected(const MultibranchedSurface& component) {
    const auto presentation = presentation_matrix(component);
    const auto n = presentation.cols();
    const auto diagonal = smith_normal_form(presentation);
    std::size_t rank = 0;
    std::vector<BigInt> torsion;
    for (const auto& d : diagonal) {
        if (d.is_zero()) continue;
        ++rank;
        torsion.push_back(d);
    }
    const auto spine_rank = punctured_spine_rank(component);
    // Branches and crosscap loops are part of a basis of the punctured spine's first homology.
    const auto extra = spine_rank - n;
    return FgAbelianGroup(torsion, (n - rank) + extra);
}

}  // namespace

FgAbelianGroup h1(const MultibranchedSurface& surface, HomologyOptions options) {
    if (options.require_regular) require_regular(surface);
    FgAbelianGroup total;
    for (const auto& component : connected_components(surface))
        total = total.direct_sum(h1_connected(component));
    return total;
}

S3Report s3_obstruction(const MultibranchedSurface& surface) {
    S3Report report;
    report.homology = h1(surface);
    report.verdict = report.homology.has_torsion() ? S3Verdict::Obstructed : S3Verdict::Inconclusive;
    return report;
}

}  // namespace mbs
