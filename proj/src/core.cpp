#include "mbs/core.hpp"

#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace mbs {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::EmptySectorBoundary: return "EmptySectorBoundary";
        case ErrorCode::DanglingBranchReference: return "DanglingBranchReference";
        case ErrorCode::ZeroDegree: return "ZeroDegree";
        case ErrorCode::IsolatedBranch: return "IsolatedBranch";
        case ErrorCode::DuplicateIdentifier: return "DuplicateIdentifier";
        case ErrorCode::NegativeGenus: return "NegativeGenus";
        case ErrorCode::UnknownBranch: return "UnknownBranch";
        case ErrorCode::UnknownSector: return "UnknownSector";
        case ErrorCode::NotRegular: return "NotRegular";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::NonorientableSector: return "NonorientableSector";
        case ErrorCode::NonorientableBoundary: return "NonorientableBoundary";
        case ErrorCode::InternalMismatch: return "InternalMismatch";
        case ErrorCode::OddComponentChi: return "OddComponentChi";
        case ErrorCode::NotAnAnnulus: return "NotAnAnnulus";
        case ErrorCode::DegreeNotOne: return "DegreeNotOne";
        case ErrorCode::SameBranch: return "SameBranch";
        case ErrorCode::ResultCapExceeded: return "ResultCapExceeded";
        case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
        case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
        case ErrorCode::EmptyDegrees: return "EmptyDegrees";
        case ErrorCode::IsolatedVertex: return "IsolatedVertex";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::SemanticError: return "SemanticError";
    }
    return "Unknown";
}

std::int64_t Sector::euler_characteristic() const {
    const auto boundary = static_cast<std::int64_t>(prebranches.size());
    if (orientable) return 2 - 2 * static_cast<std::int64_t>(genus) - boundary;
    return 2 - static_cast<std::int64_t>(genus) - boundary;
}

std::optional<std::size_t> MultibranchedSurface::find_branch(const BranchId& id) const {
    for (std::size_t i = 0; i < branches_.size(); ++i)
        if (branches_[i] == id) return i;
    return std::nullopt;
}

std::optional<std::size_t> MultibranchedSurface::find_sector(const SectorId& id) const {
    for (std::size_t i = 0; i < sectors_.size(); ++i)
        if (sectors_[i].id == id) return i;
    return std::nullopt;
}

std::size_t MultibranchedSurface::branch_position(const BranchId& id) const {
    if (auto pos = find_branch(id)) return *pos;
    throw Error(ErrorCode::UnknownBranch, "unknown branch '" + id.value + "'");
}

std::size_t MultibranchedSurface::sector_position(const SectorId& id) const {
    if (auto pos = find_sector(id)) return *pos;
    throw Error(ErrorCode::UnknownSector, "unknown sector '" + id.value + "'");
}

std::vector<std::vector<PrebranchRef>> MultibranchedSurface::attachments() const {
    std::unordered_map<BranchId, std::size_t> position;
    for (std::size_t i = 0; i < branches_.size(); ++i) position.emplace(branches_[i], i);
    std::vector<std::vector<PrebranchRef>> result(branches_.size());
    for (std::size_t s = 0; s < sectors_.size(); ++s) {
        const auto& pbs = sectors_[s].prebranches;
        for (std::size_t k = 0; k < pbs.size(); ++k) {
            auto it = position.find(pbs[k].branch);
            if (it == position.end())
                throw Error(ErrorCode::DanglingBranchReference,
                            "sector '" + sectors_[s].id.value + "' references unknown branch '" +
                                pbs[k].branch.value + "'");
            result[it->second].push_back({s, k});
        }
    }
    return result;
}

bool MultibranchedSurface::all_sectors_orientable() const {
    for (const auto& s : sectors_)
        if (!s.orientable) return false;
    return true;
}

MultibranchedSurface MultibranchedSurface::with_name(std::string name) const {
    return {branches_, sectors_, std::move(name)};
}

MultibranchedSurface validate(const MultibranchedSurface& surface, bool prune) {
    std::unordered_set<BranchId> branch_ids;
    for (const auto& b : surface.branches())
        if (!branch_ids.insert(b).second)
            throw Error(ErrorCode::DuplicateIdentifier, "duplicate branch '" + b.value + "'");

    std::unordered_set<SectorId> sector_ids;
    std::unordered_map<BranchId, std::size_t> index;
    for (const auto& s : surface.sectors()) {
        if (!sector_ids.insert(s.id).second)
            throw Error(ErrorCode::DuplicateIdentifier, "duplicate sector '" + s.id.value + "'");
        if (s.genus < 0)
            throw Error(ErrorCode::NegativeGenus, "sector '" + s.id.value + "' has negative genus");
        if (s.prebranches.empty())
            throw Error(ErrorCode::EmptySectorBoundary,
                        "sector '" + s.id.value + "' has no prebranches");
        for (const auto& pb : s.prebranches) {
            if (!branch_ids.contains(pb.branch))
                throw Error(ErrorCode::DanglingBranchReference,
                            "sector '" + s.id.value + "' references unknown branch '" +
                                pb.branch.value + "'");
            if (pb.oriented_degree == 0)
                throw Error(ErrorCode::ZeroDegree, "sector '" + s.id.value +
                                                       "' has a prebranch of degree 0 on '" +
                                                       pb.branch.value + "'");
            ++index[pb.branch];
        }
    }

    std::vector<BranchId> kept;
    for (const auto& b : surface.branches()) {
        if (index[b] > 0) {
            kept.push_back(b);
        } else if (!prune) {
            throw Error(ErrorCode::IsolatedBranch, "branch '" + b.value + "' has index 0");
        }
    }
    return {std::move(kept), surface.sectors(), surface.name()};
}

bool is_regular(const MultibranchedSurface& surface) {
    std::unordered_map<BranchId, std::int64_t> seen;
    for (const auto& s : surface.sectors()) {
        for (const auto& pb : s.prebranches) {
            auto [it, inserted] = seen.emplace(pb.branch, pb.degree());
            if (!inserted && it->second != pb.degree()) return false;
        }
    }
    return true;
}

std::size_t branch_index(const MultibranchedSurface& surface, const BranchId& branch) {
    surface.branch_position(branch);
    std::size_t count = 0;
    for (const auto& s : surface.sectors())
        for (const auto& pb : s.prebranches)
            if (pb.branch == branch) ++count;
    return count;
}

std::int64_t branch_degree(const MultibranchedSurface& surface, const BranchId& branch) {
    surface.branch_position(branch);
    require_regular(surface);
    for (const auto& s : surface.sectors())
        for (const auto& pb : s.prebranches)
            if (pb.branch == branch) return pb.degree();
    throw Error(ErrorCode::IsolatedBranch, "branch '" + branch.value + "' has index 0");
}

std::int64_t euler_characteristic(const MultibranchedSurface& surface) {
    std::int64_t chi = 0;
    for (const auto& s : surface.sectors()) chi += s.euler_characteristic();
    return chi;
}

namespace {

struct DisjointSets {
    std::vector<std::size_t> parent;

    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

std::vector<MultibranchedSurface> connected_components(const MultibranchedSurface& surface) {
    const std::size_t n = surface.branch_count();
    const std::size_t m = surface.sector_count();
    DisjointSets sets(n + m);
    const auto attached = surface.attachments();
    for (std::size_t b = 0; b < n; ++b)
        for (const auto& ref : attached[b]) sets.unite(b, n + ref.sector);

    // Components are ordered by their first branch (or first sector when branchless).
    std::vector<std::size_t> roots;
    std::unordered_map<std::size_t, std::size_t> slot;
    auto slot_of = [&](std::size_t node) {
        auto root = sets.find(node);
        auto [it, inserted] = slot.emplace(root, roots.size());
        if (inserted) roots.push_back(root);
        return it->second;
    };
    std::vector<std::vector<BranchId>> branches;
    std::vector<std::vector<Sector>> sectors;
    auto grow = [&](std::size_t k) {
        if (k >= branches.size()) {
            branches.resize(k + 1);
            sectors.resize(k + 1);
        }
    };
    for (std::size_t b = 0; b < n; ++b) {
        auto k = slot_of(b);
        grow(k);
        branches[k].push_back(surface.branches()[b]);
    }
    for (std::size_t s = 0; s < m; ++s) {
        auto k = slot_of(n + s);
        grow(k);
        sectors[k].push_back(surface.sectors()[s]);
    }
    std::vector<MultibranchedSurface> result;
    for (std::size_t k = 0; k < roots.size(); ++k)
        result.emplace_back(std::move(branches[k]), std::move(sectors[k]), surface.name());
    return result;
}

bool is_connected(const MultibranchedSurface& surface) {
    return connected_components(surface).size() == 1;
}

void require_regular(const MultibranchedSurface& surface) {
    if (!is_regular(surface))
        throw Error(ErrorCode::NotRegular, "surface is not regular");
}

void require_orientable(const MultibranchedSurface& surface) {
    for (const auto& s : surface.sectors())
        if (!s.orientable)
            throw Error(ErrorCode::NonorientableSector,
                        "sector '" + s.id.value + "' is nonorientable");
}

void require_connected(const MultibranchedSurface& surface) {
    if (!is_connected(surface))
        throw Error(ErrorCode::Disconnected, "surface is not connected");
}

}  // namespace mbs
