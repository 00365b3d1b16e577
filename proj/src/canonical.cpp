// Canonical forms by individualization and refinement over the branch/sector
// incidence structure. Orientation signs are a gauge (one sign per branch, one
// per sector) and are normalized at each leaf along a spanning forest of the
// pairs whose degree multiset is not symmetric under negation.

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "mbs/minors.hpp"

namespace mbs {

namespace {

struct Incidence {
    std::size_t branch = 0;
    std::int64_t od = 0;
};

struct Structure {
    std::size_t n = 0;  // branches
    std::size_t m = 0;  // sectors
    std::vector<int> genus;
    std::vector<bool> orientable;
    std::vector<std::vector<Incidence>> sectors;
    // Per node (branches first, then sectors): (other node, |od|) for every prebranch.
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> adjacency;
};

Structure build_structure(const MultibranchedSurface& component) {
    Structure st;
    st.n = component.branch_count();
    st.m = component.sector_count();
    st.adjacency.resize(st.n + st.m);
    for (std::size_t s = 0; s < st.m; ++s) {
        const auto& sector = component.sectors()[s];
        st.genus.push_back(sector.genus);
        st.orientable.push_back(sector.orientable);
        std::vector<Incidence> incs;
        for (const auto& pb : sector.prebranches) {
            const auto b = component.branch_position(pb.branch);
            incs.push_back({b, pb.oriented_degree});
            st.adjacency[b].emplace_back(st.n + s, pb.degree());
            st.adjacency[st.n + s].emplace_back(b, pb.degree());
        }
        st.sectors.push_back(std::move(incs));
    }
    return st;
}

using Colors = std::vector<std::int64_t>;

std::size_t rank_signatures(const std::vector<std::vector<std::int64_t>>& sigs, Colors& colors) {
    std::vector<std::size_t> order(sigs.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return sigs[a] < sigs[b]; });
    std::int64_t rank = -1;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i == 0 || sigs[order[i]] != sigs[order[i - 1]]) ++rank;
        colors[order[i]] = rank;
    }
    return static_cast<std::size_t>(rank + 1);
}

Colors initial_colors(const Structure& st) {
    std::vector<std::vector<std::int64_t>> sigs(st.n + st.m);
    for (std::size_t v = 0; v < st.n + st.m; ++v) {
        auto& sig = sigs[v];
        if (v < st.n) {
            sig = {0};
        } else {
            const auto s = v - st.n;
            sig = {1, st.genus[s], st.orientable[s] ? 1 : 0};
        }
        std::vector<std::int64_t> degrees;
        for (const auto& [u, d] : st.adjacency[v]) degrees.push_back(d);
        std::sort(degrees.begin(), degrees.end());
        sig.push_back(static_cast<std::int64_t>(degrees.size()));
        sig.insert(sig.end(), degrees.begin(), degrees.end());
    }
    Colors colors(sigs.size());
    rank_signatures(sigs, colors);
    return colors;
}

std::size_t distinct(const Colors& colors) {
    auto sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

// Splits cells by neighbor colors until stable; cell order is preserved.
void refine(const Structure& st, Colors& colors) {
    std::size_t cells = distinct(colors);
    for (;;) {
        std::vector<std::vector<std::int64_t>> sigs(colors.size());
        for (std::size_t v = 0; v < colors.size(); ++v) {
            std::vector<std::pair<std::int64_t, std::int64_t>> around;
            for (const auto& [u, d] : st.adjacency[v]) around.emplace_back(colors[u], d);
            std::sort(around.begin(), around.end());
            auto& sig = sigs[v];
            sig.push_back(colors[v]);
            for (const auto& [c, d] : around) {
                sig.push_back(c);
                sig.push_back(d);
            }
        }
        Colors next(colors.size());
        const auto next_cells = rank_signatures(sigs, next);
        colors = std::move(next);
        if (next_cells == cells) return;
        cells = next_cells;
    }
}

std::vector<std::int64_t> sorted_degrees(const std::vector<std::int64_t>& ods, std::int64_t sign) {
    std::vector<std::int64_t> out;
    for (auto od : ods) out.push_back(sign * od);
    std::sort(out.begin(), out.end());
    return out;
}

class ParitySets {
public:
    explicit ParitySets(std::size_t n) : parent_(n), parity_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    std::pair<std::size_t, int> find(std::size_t x) {
        if (parent_[x] == x) return {x, 0};
        auto [root, p] = find(parent_[x]);
        parent_[x] = root;
        parity_[x] ^= p;
        return {root, parity_[x]};
    }
    bool join(std::size_t a, std::size_t b, int relation) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) return false;
        parent_[ra] = rb;
        parity_[ra] = pa ^ pb ^ relation;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<int> parity_;
};

class Canonizer {
public:
    explicit Canonizer(const MultibranchedSurface& component)
        : st_(build_structure(component)) {
        compute_twins();
    }

    std::vector<std::int64_t> run() {
        auto colors = initial_colors(st_);
        refine(st_, colors);
        search(colors);
        return best_;
    }

private:
    std::vector<std::int64_t> sector_key(std::size_t s, const std::vector<std::size_t>& relabel) const {
        std::vector<std::pair<std::size_t, std::int64_t>> plus, minus;
        for (const auto& inc : st_.sectors[s]) {
            const auto od = st_.orientable[s] ? inc.od : std::abs(inc.od);
            plus.emplace_back(relabel[inc.branch], od);
            minus.emplace_back(relabel[inc.branch], st_.orientable[s] ? -od : od);
        }
        std::sort(plus.begin(), plus.end());
        std::sort(minus.begin(), minus.end());
        const auto& chosen = std::min(plus, minus);
        std::vector<std::int64_t> key{st_.genus[s], st_.orientable[s] ? 1 : 0};
        for (const auto& [b, od] : chosen) {
            key.push_back(static_cast<std::int64_t>(b));
            key.push_back(od);
        }
        return key;
    }

    // Interchangeable vertices: transposing them is an automorphism that fixes
    // everything else, so only one per class needs exploring.
    void compute_twins() {
        const std::size_t total = st_.n + st_.m;
        twin_class_.resize(total);
        std::iota(twin_class_.begin(), twin_class_.end(), 0);
        std::vector<std::size_t> identity(st_.n);
        std::iota(identity.begin(), identity.end(), 0);

        std::vector<std::vector<std::int64_t>> keys;
        for (std::size_t s = 0; s < st_.m; ++s) keys.push_back(sector_key(s, identity));
        for (std::size_t s = 0; s < st_.m; ++s)
            for (std::size_t t = 0; t < s; ++t)
                if (twin_class_[st_.n + t] == st_.n + t && keys[s] == keys[t]) {
                    twin_class_[st_.n + s] = st_.n + t;
                    break;
                }

        for (std::size_t b = 0; b < st_.n; ++b) {
            for (std::size_t a = 0; a < b; ++a) {
                if (twin_class_[a] != a) continue;
                auto swapped = identity;
                std::swap(swapped[a], swapped[b]);
                bool fixed = true;
                for (std::size_t s = 0; s < st_.m && fixed; ++s) fixed = sector_key(s, swapped) == keys[s];
                if (fixed) {
                    twin_class_[b] = a;
                    break;
                }
            }
        }
    }

    void search(const Colors& colors) {
        // First non-singleton cell, by color.
        std::map<std::int64_t, std::vector<std::size_t>> cells;
        for (std::size_t v = 0; v < colors.size(); ++v) cells[colors[v]].push_back(v);
        const std::vector<std::size_t>* target = nullptr;
        for (const auto& [color, members] : cells)
            if (members.size() > 1) {
                target = &members;
                break;
            }
        if (!target) {
            auto code = encode(colors);
            if (best_.empty() || code < best_) best_ = std::move(code);
            return;
        }
        std::vector<std::size_t> explored;
        for (auto v : *target) {
            const auto rep = twin_class_[v];
            if (std::find(explored.begin(), explored.end(), rep) != explored.end()) continue;
            explored.push_back(rep);
            Colors next(colors.size());
            for (std::size_t u = 0; u < colors.size(); ++u)
                next[u] = 2 * colors[u] + ((u == v || colors[u] != colors[v]) ? 0 : 1);
            refine(st_, next);
            search(next);
        }
    }

    std::vector<std::int64_t> encode(const Colors& colors) const {
        std::vector<std::size_t> branch_order(st_.n), sector_order(st_.m);
        std::iota(branch_order.begin(), branch_order.end(), 0);
        std::iota(sector_order.begin(), sector_order.end(), 0);
        std::sort(branch_order.begin(), branch_order.end(),
                  [&](auto a, auto b) { return colors[a] < colors[b]; });
        std::sort(sector_order.begin(), sector_order.end(),
                  [&](auto a, auto b) { return colors[st_.n + a] < colors[st_.n + b]; });
        std::vector<std::size_t> branch_pos(st_.n);
        for (std::size_t i = 0; i < st_.n; ++i) branch_pos[branch_order[i]] = i;

        // Gauge: fix sigma_b * tau_s on a spanning forest of asymmetric pairs.
        ParitySets gauge(st_.n + st_.m);
        for (auto s : sector_order) {
            if (!st_.orientable[s]) continue;
            std::map<std::size_t, std::vector<std::int64_t>> pairs;  // by branch position
            for (const auto& inc : st_.sectors[s]) pairs[branch_pos[inc.branch]].push_back(inc.od);
            for (const auto& [pos, ods] : pairs) {
                const auto plus = sorted_degrees(ods, +1);
                const auto minus = sorted_degrees(ods, -1);
                if (plus == minus) continue;
                const int relation = plus > minus ? 0 : 1;
                gauge.join(branch_order[pos], st_.n + s, relation);
            }
        }
        std::vector<std::int64_t> code{static_cast<std::int64_t>(st_.n),
                                       static_cast<std::int64_t>(st_.m)};
        for (auto s : sector_order) {
            const int tau = gauge.find(st_.n + s).second;
            std::vector<std::pair<std::int64_t, std::int64_t>> entries;
            for (const auto& inc : st_.sectors[s]) {
                std::int64_t od = inc.od;
                if (!st_.orientable[s]) {
                    od = std::abs(od);
                } else if ((gauge.find(inc.branch).second ^ tau) != 0) {
                    od = -od;
                }
                entries.emplace_back(static_cast<std::int64_t>(branch_pos[inc.branch]), od);
            }
            std::sort(entries.begin(), entries.end());
            code.push_back(st_.genus[s]);
            code.push_back(st_.orientable[s] ? 1 : 0);
            code.push_back(static_cast<std::int64_t>(entries.size()));
            for (const auto& [pos, od] : entries) {
                code.push_back(pos);
                code.push_back(od);
            }
        }
        return code;
    }

    Structure st_;
    std::vector<std::size_t> twin_class_;
    std::vector<std::int64_t> best_;
};

}  // namespace

CanonicalForm canonical_form(const MultibranchedSurface& surface) {
    std::vector<std::vector<std::int64_t>> parts;
    for (const auto& component : connected_components(surface))
        parts.push_back(Canonizer(component).run());
    std::sort(parts.begin(), parts.end());
    std::vector<std::int64_t> code{static_cast<std::int64_t>(parts.size())};
    for (const auto& p : parts) code.insert(code.end(), p.begin(), p.end());
    return CanonicalForm(std::move(code), !surface.all_sectors_orientable());
}

bool are_isomorphic(const MultibranchedSurface& a, const MultibranchedSurface& b) {
    if (a.branch_count() != b.branch_count() || a.sector_count() != b.sector_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

std::size_t CanonicalForm::sector_count() const {
    std::size_t total = 0;
    std::size_t at = 1;
    const auto parts = code_.empty() ? 0 : code_[0];
    for (std::int64_t c = 0; c < parts; ++c) {
        const auto m = code_[at + 1];
        total += static_cast<std::size_t>(m);
        at += 2;
        for (std::int64_t s = 0; s < m; ++s) at += 3 + 2 * static_cast<std::size_t>(code_[at + 2]);
    }
    return total;
}

MultibranchedSurface CanonicalForm::to_surface(const std::string& name) const {
    std::vector<BranchId> branches;
    std::vector<Sector> sectors;
    std::size_t at = 1;
    const auto parts = code_.empty() ? 0 : code_[0];
    for (std::int64_t c = 0; c < parts; ++c) {
        const auto offset = branches.size();
        const auto n = static_cast<std::size_t>(code_[at]);
        const auto m = static_cast<std::size_t>(code_[at + 1]);
        at += 2;
        for (std::size_t b = 0; b < n; ++b)
            branches.emplace_back("b" + std::to_string(offset + b + 1));
        for (std::size_t s = 0; s < m; ++s) {
            Sector sector;
            sector.id = SectorId("e" + std::to_string(sectors.size() + 1));
            sector.genus = static_cast<int>(code_[at]);
            sector.orientable = code_[at + 1] != 0;
            const auto k = static_cast<std::size_t>(code_[at + 2]);
            at += 3;
            for (std::size_t j = 0; j < k; ++j) {
                const auto pos = static_cast<std::size_t>(code_[at + 2 * j]);
                sector.prebranches.push_back({branches[offset + pos], code_[at + 2 * j + 1]});
            }
            at += 2 * k;
            sectors.push_back(std::move(sector));
        }
    }
    return {std::move(branches), std::move(sectors), name};
}

std::string CanonicalForm::to_string() const {
    std::ostringstream out;
    out << (approximate_ ? "~[" : "[");
    for (std::size_t i = 0; i < code_.size(); ++i) out << (i ? " " : "") << code_[i];
    out << "]";
    return out.str();
}

}  // namespace mbs
