#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mbs/core.hpp"

namespace mbs {

/// Cyclic order of the prebranches around every branch. Each order is stored in
/// normal form: it starts at its smallest reference, and of the two reading
/// directions the lexicographically smaller one is kept.
struct CircularPermutationSystem {
    std::vector<std::vector<PrebranchRef>> orders;  // indexed by branch position

    friend auto operator<=>(const CircularPermutationSystem&, const CircularPermutationSystem&) = default;
};

/// Attaching slope p/q per branch, q = branch degree. Carried for labeling only:
/// the boundary surface and dual graph do not depend on it.
struct SlopeSystem {
    struct Slope {
        std::int64_t p = 1;
        std::int64_t q = 1;
    };
    std::vector<Slope> slopes;
};

SlopeSystem default_slope_system(const MultibranchedSurface& surface);
void check_slope_system(const MultibranchedSurface& surface, const SlopeSystem& slopes);

std::vector<PrebranchRef> normalize_cyclic_order(std::vector<PrebranchRef> order);

struct PermutationSystemSet {
    std::vector<CircularPermutationSystem> systems;
    bool exhaustive = true;
    /// Number of distinct systems; saturates at UINT64_MAX.
    std::uint64_t total = 1;
};

/// Every system up to rotation and reflection when there are at most `cap`;
/// otherwise the input-order system followed by `cap` distinct systems drawn
/// from a fixed-seed generator. Samples for a larger cap extend those for a smaller one.
PermutationSystemSet enumerate_permutation_systems(const MultibranchedSurface& surface,
                                                   std::uint64_t cap);

CircularPermutationSystem identity_permutation_system(const MultibranchedSurface& surface);

/// A piece of the boundary of the neighborhood: one side of a sector
/// thickening, or an annulus of a branch torus between two consecutive bands.
struct BoundaryPiece {
    enum class Kind { SectorSide, GapAnnulus };
    Kind kind = Kind::SectorSide;
    std::size_t owner = 0;  // sector position, or branch position
    int side = +1;          // +1/-1 for a sector side
    std::size_t gap = 0;    // gap annulus number around the branch
    std::int64_t euler_characteristic = 0;
    std::size_t component = 0;
};

/// One sector-side boundary circle glued to one gap-annulus boundary circle.
struct BoundaryGluing {
    PrebranchRef prebranch;
    int side = +1;
    std::size_t side_piece = 0;
    std::size_t gap_piece = 0;
    bool upper = false;  // which of the gap annulus' two circles
};

struct BoundarySurface {
    struct Component {
        std::size_t id = 0;
        std::int64_t euler_characteristic = 0;
        std::int64_t genus = 0;
    };
    std::vector<Component> components;
    std::vector<BoundaryPiece> pieces;
    std::vector<BoundaryGluing> gluings;

    std::int64_t total_genus() const;
    std::int64_t total_euler_characteristic() const;
};

/// Assembles the boundary of the neighborhood for the given cyclic orders.
/// `flips`, indexed in sector/slot order over all prebranches, swaps which gap
/// annulus receives each side.
BoundarySurface boundary_surface(const MultibranchedSurface& surface,
                                 const CircularPermutationSystem& system,
                                 const std::vector<bool>& flips = {});

struct DualGraph {
    struct Edge {
        SectorId sector;
        std::size_t plus_component = 0;
        std::size_t minus_component = 0;
    };
    std::vector<BoundarySurface::Component> vertices;
    std::vector<Edge> edges;

    std::size_t component_count() const;
    std::int64_t first_betti_number() const;
};

DualGraph dual_graph(const MultibranchedSurface& surface, const CircularPermutationSystem& system,
                     const std::vector<bool>& flips = {});
DualGraph dual_graph(const MultibranchedSurface& surface, const BoundarySurface& boundary);

std::size_t genus_upper_bound_sectors(const MultibranchedSurface& surface);

struct HeegaardBound {
    std::int64_t bound = 0;
    bool exhaustive = true;
    CircularPermutationSystem witness;
    std::vector<bool> witness_flips;
    std::int64_t boundary_genus = 0;
    std::int64_t dual_betti = 0;
    /// The witness' dual graph was disconnected; the value is the formula value as is.
    bool disconnected_dual_graph = false;
    std::uint64_t evaluated = 0;
    /// Flip assignments whose boundary came out nonorientable were skipped.
    std::uint64_t rejected_flips = 0;
};

inline constexpr std::uint64_t kDefaultSearchCap = 10000;

HeegaardBound genus_upper_bound_heegaard(const MultibranchedSurface& surface,
                                         std::uint64_t cap = kDefaultSearchCap,
                                         bool enumerate_flips = false);

std::int64_t best_genus_upper_bound(const MultibranchedSurface& surface,
                                    std::uint64_t cap = kDefaultSearchCap);

}  // namespace mbs
