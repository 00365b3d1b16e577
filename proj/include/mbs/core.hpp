#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mbs/error.hpp"

namespace mbs {

template <class Tag>
struct Identifier {
    std::string value;

    Identifier() = default;
    explicit Identifier(std::string v) : value(std::move(v)) {}

    friend auto operator<=>(const Identifier&, const Identifier&) = default;
    friend bool operator==(const Identifier&, const Identifier&) = default;
};

struct BranchTag {};
struct SectorTag {};
using BranchId = Identifier<BranchTag>;
using SectorId = Identifier<SectorTag>;

/// A boundary circle of a sector together with its covering map onto a branch.
/// |oriented_degree| is the covering degree; the sign records whether the map
/// preserves the fixed reference orientations of the circle and the branch.
struct Prebranch {
    BranchId branch;
    std::int64_t oriented_degree = 1;

    std::int64_t degree() const { return oriented_degree < 0 ? -oriented_degree : oriented_degree; }

    friend bool operator==(const Prebranch&, const Prebranch&) = default;
};

/// A compact connected surface with nonempty boundary. For nonorientable sectors
/// `genus` is the crosscap count.
struct Sector {
    SectorId id;
    int genus = 0;
    bool orientable = true;
    std::vector<Prebranch> prebranches;

    std::int64_t euler_characteristic() const;

    friend bool operator==(const Sector&, const Sector&) = default;
};

/// Position of a prebranch: sector index, then index in that sector's list.
struct PrebranchRef {
    std::size_t sector = 0;
    std::size_t slot = 0;

    friend auto operator<=>(const PrebranchRef&, const PrebranchRef&) = default;
};

class MultibranchedSurface {
public:
    MultibranchedSurface() = default;
    MultibranchedSurface(std::vector<BranchId> branches, std::vector<Sector> sectors,
                         std::string name = {})
        : branches_(std::move(branches)), sectors_(std::move(sectors)), name_(std::move(name)) {}

    const std::vector<BranchId>& branches() const { return branches_; }
    const std::vector<Sector>& sectors() const { return sectors_; }
    const std::string& name() const { return name_; }

    std::size_t branch_count() const { return branches_.size(); }
    std::size_t sector_count() const { return sectors_.size(); }
    bool empty() const { return branches_.empty() && sectors_.empty(); }

    std::optional<std::size_t> find_branch(const BranchId& id) const;
    std::optional<std::size_t> find_sector(const SectorId& id) const;
    std::size_t branch_position(const BranchId& id) const;  // throws UnknownBranch
    std::size_t sector_position(const SectorId& id) const;  // throws UnknownSector

    /// Prebranches attached to each branch, in sector order then slot order.
    std::vector<std::vector<PrebranchRef>> attachments() const;

    bool all_sectors_orientable() const;

    MultibranchedSurface with_name(std::string name) const;

    friend bool operator==(const MultibranchedSurface&, const MultibranchedSurface&) = default;

private:
    std::vector<BranchId> branches_;
    std::vector<Sector> sectors_;
    std::string name_;
};

/// Checks structural invariants. With `prune`, index-0 branches are dropped;
/// otherwise they raise IsolatedBranch.
MultibranchedSurface validate(const MultibranchedSurface& surface, bool prune = true);

bool is_regular(const MultibranchedSurface& surface);

std::size_t branch_index(const MultibranchedSurface& surface, const BranchId& branch);

/// Shared covering degree at a branch of a regular surface.
std::int64_t branch_degree(const MultibranchedSurface& surface, const BranchId& branch);

/// Sum over sectors of 2 - 2g - b (orientable) or 2 - k - b (k crosscaps).
/// Branch circles contribute nothing.
std::int64_t euler_characteristic(const MultibranchedSurface& surface);

/// Components of the branch/sector incidence graph, each keeping the input order.
std::vector<MultibranchedSurface> connected_components(const MultibranchedSurface& surface);

bool is_connected(const MultibranchedSurface& surface);

void require_regular(const MultibranchedSurface& surface);
void require_orientable(const MultibranchedSurface& surface);
void require_connected(const MultibranchedSurface& surface);

}  // namespace mbs

template <class Tag>
struct std::hash<mbs::Identifier<Tag>> {
    std::size_t operator()(const mbs::Identifier<Tag>& id) const noexcept {
        return std::hash<std::string>{}(id.value);
    }
};
