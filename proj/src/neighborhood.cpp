#include "mbs/neighborhood.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <set>

namespace mbs {

namespace {

constexpr std::uint64_t kSampleSeed = 0x6d62735f6e626864ULL;
constexpr std::uint64_t kFlipCapLimit = 256;

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

// (k-1)!/2 distinct cyclic orders up to rotation and reflection, 1 for k <= 2.
std::uint64_t cyclic_order_count(std::size_t k) {
    if (k <= 2) return 1;
    std::uint64_t count = 1;
    for (std::size_t f = 3; f < k; ++f) count = saturating_mul(count, f);
    return count;
}

std::vector<std::vector<PrebranchRef>> all_cyclic_orders(const std::vector<PrebranchRef>& refs) {
    if (refs.size() <= 2) return {refs};
    std::vector<std::vector<PrebranchRef>> result;
    std::vector<PrebranchRef> rest(refs.begin() + 1, refs.end());
    std::sort(rest.begin(), rest.end());
    do {
        if (rest.front() < rest.back()) {
            std::vector<PrebranchRef> order{refs.front()};
            order.insert(order.end(), rest.begin(), rest.end());
            result.push_back(std::move(order));
        }
    } while (std::next_permutation(rest.begin(), rest.end()));
    return result;
}

std::size_t draw(std::mt19937_64& rng, std::size_t bound) {
    return static_cast<std::size_t>(rng() % bound);
}

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), parity_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    std::pair<std::size_t, int> find(std::size_t x) {
        if (parent_[x] == x) return {x, 0};
        auto [root, parity] = find(parent_[x]);
        parent_[x] = root;
        parity_[x] ^= parity;
        return {root, parity_[x]};
    }

    // Returns false when the relation contradicts an earlier one (odd cycle).
    bool unite(std::size_t a, std::size_t b, int relation) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) return (pa ^ pb) == relation;
        if (ra < rb) std::swap(ra, rb);
        parent_[ra] = rb;
        parity_[ra] = pa ^ pb ^ relation;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<int> parity_;
};

// Per-surface data reused across every permutation system.
class Assembler {
public:
    explicit Assembler(const MultibranchedSurface& surface) : surface_(surface) {
        require_regular(surface);
        require_orientable(surface);
        require_connected(surface);
        attachments_ = surface.attachments();
        ordinal_base_.resize(surface.sector_count() + 1, 0);
        for (std::size_t s = 0; s < surface.sector_count(); ++s)
            ordinal_base_[s + 1] = ordinal_base_[s] + surface.sectors()[s].prebranches.size();
        gap_base_.resize(surface.branch_count() + 1, 2 * surface.sector_count());
        for (std::size_t b = 0; b < surface.branch_count(); ++b)
            gap_base_[b + 1] = gap_base_[b] + attachments_[b].size();
    }

    std::size_t prebranch_total() const { return ordinal_base_.back(); }

    void check_system(const CircularPermutationSystem& system) const {
        if (system.orders.size() != surface_.branch_count())
            throw Error(ErrorCode::InvalidArgument, "permutation system has wrong branch count");
        for (std::size_t b = 0; b < attachments_.size(); ++b) {
            auto sorted = system.orders[b];
            std::sort(sorted.begin(), sorted.end());
            if (sorted != attachments_[b])
                throw Error(ErrorCode::InvalidArgument,
                            "cyclic order for branch '" + surface_.branches()[b].value +
                                "' is not a permutation of its prebranches");
        }
    }

    // nullopt when the flips make some boundary component nonorientable.
    std::optional<BoundarySurface> assemble(const CircularPermutationSystem& system,
                                            const std::vector<bool>& flips) const {
        const std::size_t piece_count = gap_base_.back();
        BoundarySurface out;
        out.pieces.resize(piece_count);
        for (std::size_t s = 0; s < surface_.sector_count(); ++s) {
            const auto chi = surface_.sectors()[s].euler_characteristic();
            out.pieces[2 * s] = {BoundaryPiece::Kind::SectorSide, s, +1, 0, chi, 0};
            out.pieces[2 * s + 1] = {BoundaryPiece::Kind::SectorSide, s, -1, 0, chi, 0};
        }
        for (std::size_t b = 0; b < surface_.branch_count(); ++b)
            for (std::size_t j = 0; j < attachments_[b].size(); ++j)
                out.pieces[gap_base_[b] + j] = {BoundaryPiece::Kind::GapAnnulus, b, 0, j, 0, 0};

        UnionFind sets(piece_count);
        bool orientable = true;
        for (std::size_t b = 0; b < surface_.branch_count(); ++b) {
            const auto& order = system.orders[b];
            const std::size_t i = order.size();
            for (std::size_t j = 0; j < i; ++j) {
                const auto ref = order[j];
                const auto od = surface_.sectors()[ref.sector].prebranches[ref.slot].oriented_degree;
                const std::size_t ordinal = ordinal_base_[ref.sector] + ref.slot;
                const bool flip = ordinal < flips.size() && flips[ordinal];
                const bool swapped = (od < 0) != flip;
                const std::size_t next_gap = gap_base_[b] + j;
                const std::size_t prev_gap = gap_base_[b] + (j + i - 1) % i;
                for (int side : {+1, -1}) {
                    const bool to_next = (side > 0) != swapped;
                    BoundaryGluing g;
                    g.prebranch = ref;
                    g.side = side;
                    g.side_piece = 2 * ref.sector + (side > 0 ? 0 : 1);
                    g.gap_piece = to_next ? next_gap : prev_gap;
                    g.upper = !to_next;
                    out.gluings.push_back(g);
                    // Unflipped gluings respect the pieces' chosen orientations.
                    orientable = sets.unite(g.side_piece, g.gap_piece, flip ? 1 : 0) && orientable;
                }
            }
        }
        if (!orientable) return std::nullopt;

        std::vector<std::size_t> component_of_root(piece_count, piece_count);
        for (std::size_t p = 0; p < piece_count; ++p) {
            const auto root = sets.find(p).first;
            if (component_of_root[root] == piece_count) {
                component_of_root[root] = out.components.size();
                out.components.push_back({out.components.size(), 0, 0});
            }
            auto& comp = out.components[component_of_root[root]];
            out.pieces[p].component = comp.id;
            comp.euler_characteristic += out.pieces[p].euler_characteristic;
        }
        for (auto& comp : out.components) {
            if (comp.euler_characteristic > 2 || comp.euler_characteristic % 2 != 0)
                throw Error(ErrorCode::OddComponentChi,
                            "boundary component has Euler characteristic " +
                                std::to_string(comp.euler_characteristic));
            comp.genus = (2 - comp.euler_characteristic) / 2;
        }
        return out;
    }

private:
    const MultibranchedSurface& surface_;
    std::vector<std::vector<PrebranchRef>> attachments_;
    std::vector<std::size_t> ordinal_base_;
    std::vector<std::size_t> gap_base_;
};

std::vector<std::vector<bool>> flip_patterns(std::size_t prebranches, std::uint64_t cap,
                                             bool enabled, bool& exhaustive) {
    std::vector<std::vector<bool>> patterns{std::vector<bool>(prebranches, false)};
    if (!enabled) return patterns;
    const std::uint64_t limit = std::min<std::uint64_t>(cap, kFlipCapLimit);
    if (prebranches < 63 && (std::uint64_t{1} << prebranches) <= limit) {
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << prebranches); ++mask) {
            std::vector<bool> p(prebranches);
            for (std::size_t k = 0; k < prebranches; ++k) p[k] = (mask >> k) & 1U;
            patterns.push_back(std::move(p));
        }
        return patterns;
    }
    exhaustive = false;
    std::set<std::vector<bool>> seen{patterns.front()};
    std::mt19937_64 rng(kSampleSeed ^ 0x5a5a5a5aULL);
    for (std::uint64_t attempts = 0; patterns.size() < limit + 1 && attempts < 64 * limit; ++attempts) {
        std::vector<bool> p(prebranches);
        for (std::size_t k = 0; k < prebranches; ++k) p[k] = (rng() & 1U) != 0;
        if (seen.insert(p).second) patterns.push_back(std::move(p));
    }
    return patterns;
}

}  // namespace

SlopeSystem default_slope_system(const MultibranchedSurface& surface) {
    SlopeSystem slopes;
    for (const auto& b : surface.branches()) slopes.slopes.push_back({1, branch_degree(surface, b)});
    return slopes;
}

void check_slope_system(const MultibranchedSurface& surface, const SlopeSystem& slopes) {
    if (slopes.slopes.size() != surface.branch_count())
        throw Error(ErrorCode::InvalidArgument, "slope system has wrong branch count");
    for (std::size_t b = 0; b < surface.branch_count(); ++b) {
        const auto& s = slopes.slopes[b];
        if (std::gcd(s.p, s.q) != 1 || s.q != branch_degree(surface, surface.branches()[b]))
            throw Error(ErrorCode::InvalidArgument,
                        "slope at branch '" + surface.branches()[b].value + "' is invalid");
    }
}

std::vector<PrebranchRef> normalize_cyclic_order(std::vector<PrebranchRef> order) {
    if (order.size() <= 1) return order;
    auto smallest = std::min_element(order.begin(), order.end());
    std::rotate(order.begin(), smallest, order.end());
    std::vector<PrebranchRef> mirrored{order.front()};
    mirrored.insert(mirrored.end(), order.rbegin(), order.rend() - 1);
    return std::min(order, mirrored);
}

CircularPermutationSystem identity_permutation_system(const MultibranchedSurface& surface) {
    CircularPermutationSystem system;
    for (auto& refs : surface.attachments()) system.orders.push_back(normalize_cyclic_order(refs));
    return system;
}

PermutationSystemSet enumerate_permutation_systems(const MultibranchedSurface& surface,
                                                   std::uint64_t cap) {
    require_regular(surface);
    if (cap == 0) throw Error(ErrorCode::InvalidArgument, "cap must be positive");
    const auto attached = surface.attachments();
    PermutationSystemSet result;
    for (const auto& refs : attached) result.total = saturating_mul(result.total, cyclic_order_count(refs.size()));

    if (result.total <= cap) {
        std::vector<std::vector<std::vector<PrebranchRef>>> choices;
        for (const auto& refs : attached) choices.push_back(all_cyclic_orders(refs));
        std::vector<std::size_t> digit(choices.size(), 0);
        for (;;) {
            CircularPermutationSystem system;
            for (std::size_t b = 0; b < choices.size(); ++b) system.orders.push_back(choices[b][digit[b]]);
            result.systems.push_back(std::move(system));
            std::size_t b = 0;
            while (b < digit.size() && ++digit[b] == choices[b].size()) digit[b++] = 0;
            if (b == digit.size()) break;
        }
        return result;
    }

    result.exhaustive = false;
    std::set<CircularPermutationSystem> seen;
    result.systems.push_back(identity_permutation_system(surface));
    seen.insert(result.systems.front());
    std::mt19937_64 rng(kSampleSeed);
    const std::uint64_t attempts_limit = 64 * cap + 1024;
    for (std::uint64_t attempts = 0; result.systems.size() < cap + 1 && attempts < attempts_limit;
         ++attempts) {
        CircularPermutationSystem system;
        for (auto refs : attached) {
            for (std::size_t k = refs.size(); k > 1; --k) std::swap(refs[k - 1], refs[draw(rng, k)]);
            system.orders.push_back(normalize_cyclic_order(std::move(refs)));
        }
        if (seen.insert(system).second) result.systems.push_back(std::move(system));
    }
    return result;
}

std::int64_t BoundarySurface::total_genus() const {
    std::int64_t g = 0;
    for (const auto& c : components) g += c.genus;
    return g;
}

std::int64_t BoundarySurface::total_euler_characteristic() const {
    std::int64_t chi = 0;
    for (const auto& c : components) chi += c.euler_characteristic;
    return chi;
}

BoundarySurface boundary_surface(const MultibranchedSurface& surface,
                                 const CircularPermutationSystem& system,
                                 const std::vector<bool>& flips) {
    Assembler assembler(surface);
    assembler.check_system(system);
    if (!flips.empty() && flips.size() != assembler.prebranch_total())
        throw Error(ErrorCode::InvalidArgument, "flip vector has wrong length");
    auto result = assembler.assemble(system, flips);
    if (!result)
        throw Error(ErrorCode::NonorientableBoundary,
                    "side flips produce a nonorientable boundary component");
    return *result;
}

std::size_t DualGraph::component_count() const {
    std::vector<std::size_t> parent(vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t count = vertices.size();
    for (const auto& e : edges) {
        auto a = find(e.plus_component), b = find(e.minus_component);
        if (a != b) {
            parent[a] = b;
            --count;
        }
    }
    return count;
}

std::int64_t DualGraph::first_betti_number() const {
    return static_cast<std::int64_t>(edges.size()) - static_cast<std::int64_t>(vertices.size()) +
           static_cast<std::int64_t>(component_count());
}

DualGraph dual_graph(const MultibranchedSurface& surface, const BoundarySurface& boundary) {
    DualGraph g;
    g.vertices = boundary.components;
    for (std::size_t s = 0; s < surface.sector_count(); ++s)
        g.edges.push_back({surface.sectors()[s].id, boundary.pieces[2 * s].component,
                           boundary.pieces[2 * s + 1].component});
    return g;
}

DualGraph dual_graph(const MultibranchedSurface& surface, const CircularPermutationSystem& system,
                     const std::vector<bool>& flips) {
    return dual_graph(surface, boundary_surface(surface, system, flips));
}

std::size_t genus_upper_bound_sectors(const MultibranchedSurface& surface) {
    require_regular(surface);
    return surface.branch_count() + surface.sector_count();
}

HeegaardBound genus_upper_bound_heegaard(const MultibranchedSurface& surface, std::uint64_t cap,
                                         bool enumerate_flips) {
    HeegaardBound best;
    if (surface.empty()) {
        require_orientable(surface);
        return best;
    }
    Assembler assembler(surface);
    const auto systems = enumerate_permutation_systems(surface, cap);
    best.exhaustive = systems.exhaustive;
    const auto patterns =
        flip_patterns(assembler.prebranch_total(), cap, enumerate_flips, best.exhaustive);

    bool found = false;
    for (const auto& system : systems.systems) {
        for (const auto& flips : patterns) {
            auto boundary = assembler.assemble(system, flips);
            ++best.evaluated;
            if (!boundary) {
                ++best.rejected_flips;
                continue;
            }
            const auto graph = dual_graph(surface, *boundary);
            const auto g = boundary->total_genus();
            const auto beta = graph.first_betti_number();
            if (!found || g + beta < best.bound) {
                found = true;
                best.bound = g + beta;
                best.witness = system;
                best.witness_flips = flips;
                best.boundary_genus = g;
                best.dual_betti = beta;
                best.disconnected_dual_graph = graph.component_count() > 1;
            }
        }
    }
    return best;
}

std::int64_t best_genus_upper_bound(const MultibranchedSurface& surface, std::uint64_t cap) {
    const auto by_sectors = static_cast<std::int64_t>(genus_upper_bound_sectors(surface));
    return std::min(by_sectors, genus_upper_bound_heegaard(surface, cap).bound);
}

}  // namespace mbs
