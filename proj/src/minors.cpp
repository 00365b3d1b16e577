#include "mbs/minors.hpp"

#include <deque>
#include <unordered_set>

#include "mbs/homology.hpp"

namespace mbs {

namespace {

MultibranchedSurface prune_isolated(std::vector<BranchId> branches, std::vector<Sector> sectors,
                                    const std::string& name) {
    std::unordered_set<BranchId> used;
    for (const auto& s : sectors)
        for (const auto& pb : s.prebranches) used.insert(pb.branch);
    std::erase_if(branches, [&](const BranchId& b) { return !used.contains(b); });
    return {std::move(branches), std::move(sectors), name};
}

std::int64_t total_genus(const MultibranchedSurface& surface) {
    std::int64_t g = 0;
    for (const auto& s : surface.sectors()) g += s.genus;
    return g;
}

}  // namespace

MultibranchedSurface remove_sector(const MultibranchedSurface& surface, const SectorId& sector) {
    const auto position = surface.sector_position(sector);
    auto sectors = surface.sectors();
    sectors.erase(sectors.begin() + static_cast<std::ptrdiff_t>(position));
    return prune_isolated(surface.branches(), std::move(sectors), surface.name());
}

bool is_contractible_annulus(const MultibranchedSurface& surface, std::size_t sector) {
    const auto& s = surface.sectors().at(sector);
    return s.orientable && s.genus == 0 && s.prebranches.size() == 2 &&
           s.prebranches[0].degree() == 1 && s.prebranches[1].degree() == 1 &&
           s.prebranches[0].branch != s.prebranches[1].branch;
}

MultibranchedSurface contract_annulus(const MultibranchedSurface& surface, const SectorId& sector) {
    const auto position = surface.sector_position(sector);
    const auto& annulus = surface.sectors()[position];
    if (!annulus.orientable || annulus.genus != 0 || annulus.prebranches.size() != 2)
        throw Error(ErrorCode::NotAnAnnulus, "sector '" + sector.value + "' is not an annulus");
    const auto& lower = annulus.prebranches[0];
    const auto& upper = annulus.prebranches[1];
    if (lower.degree() != 1 || upper.degree() != 1)
        throw Error(ErrorCode::DegreeNotOne,
                    "annulus '" + sector.value + "' has an end of degree other than 1");
    if (lower.branch == upper.branch)
        throw Error(ErrorCode::SameBranch,
                    "annulus '" + sector.value + "' has both ends on one branch");

    // The core of the annulus orients the merged branch. Its two boundary
    // circles run opposite to the core, hence the sign on the upper side.
    const auto lower_sign = lower.oriented_degree;
    const auto upper_sign = -upper.oriented_degree;
    const auto merged = lower.branch;
    const auto absorbed = upper.branch;

    std::vector<Sector> sectors;
    for (std::size_t s = 0; s < surface.sector_count(); ++s) {
        if (s == position) continue;
        Sector copy = surface.sectors()[s];
        for (auto& pb : copy.prebranches) {
            if (pb.branch == merged) {
                pb.oriented_degree *= lower_sign;
            } else if (pb.branch == absorbed) {
                pb.oriented_degree *= upper_sign;
                pb.branch = merged;
            }
        }
        sectors.push_back(std::move(copy));
    }
    auto branches = surface.branches();
    std::erase(branches, absorbed);
    return prune_isolated(std::move(branches), std::move(sectors), surface.name());
}

MultibranchedSurface reduce_degree(const MultibranchedSurface& surface, const BranchId& branch) {
    surface.branch_position(branch);
    auto sectors = surface.sectors();
    for (auto& s : sectors)
        for (auto& pb : s.prebranches)
            if (pb.branch == branch) pb.oriented_degree = pb.oriented_degree < 0 ? -1 : 1;
    return {surface.branches(), std::move(sectors), surface.name()};
}

MultibranchedSurface torus_sum(const MultibranchedSurface& surface, const SectorId& sector) {
    const auto position = surface.sector_position(sector);
    auto sectors = surface.sectors();
    if (!sectors[position].orientable)
        throw Error(ErrorCode::NonorientableSector, "sector '" + sector.value + "' is nonorientable");
    ++sectors[position].genus;
    return {surface.branches(), std::move(sectors), surface.name()};
}

StandardDecomposition standard_decomposition(const MultibranchedSurface& surface) {
    require_orientable(surface);
    std::unordered_set<std::string> taken;
    for (const auto& s : surface.sectors()) taken.insert(s.id.value);

    StandardDecomposition out;
    std::vector<Sector> disks;
    for (const auto& s : surface.sectors()) {
        out.closed_genera.push_back(s.genus);
        if (s.prebranches.size() == 1) {
            disks.push_back({s.id, 0, true, s.prebranches});
            continue;
        }
        for (std::size_t k = 0; k < s.prebranches.size(); ++k) {
            std::string id = s.id.value + "_" + std::to_string(k + 1);
            while (taken.contains(id)) id += "_";
            taken.insert(id);
            disks.push_back({SectorId(id), 0, true, {s.prebranches[k]}});
        }
    }
    out.disks = {surface.branches(), std::move(disks), surface.name()};
    return out;
}

std::set<CanonicalForm> all_minors(const MultibranchedSurface& surface, std::size_t max_results) {
    std::set<CanonicalForm> seen;
    std::deque<MultibranchedSurface> frontier;
    auto visit = [&](MultibranchedSurface s) {
        auto form = canonical_form(s);
        if (seen.insert(std::move(form)).second) {
            if (seen.size() > max_results)
                throw Error(ErrorCode::ResultCapExceeded,
                            "more than " + std::to_string(max_results) + " minors");
            frontier.push_back(std::move(s));
        }
    };
    visit(surface);
    while (!frontier.empty()) {
        const auto current = std::move(frontier.front());
        frontier.pop_front();
        for (std::size_t s = 0; s < current.sector_count(); ++s) {
            const auto& id = current.sectors()[s].id;
            visit(remove_sector(current, id));
            if (is_contractible_annulus(current, s)) visit(contract_annulus(current, id));
        }
    }
    return seen;
}

bool is_minor(const MultibranchedSurface& minor, const MultibranchedSurface& host,
              std::size_t max_results) {
    if (minor.sector_count() > host.sector_count()) return false;
    return all_minors(host, max_results).contains(canonical_form(minor));
}

std::string_view step_kind_name(MinorStep::Kind kind) {
    switch (kind) {
        case MinorStep::Kind::RemoveSector: return "RemoveSector";
        case MinorStep::Kind::ContractAnnulus: return "ContractAnnulus";
        case MinorStep::Kind::ReduceDegree: return "ReduceDegree";
        case MinorStep::Kind::TorusSum: return "TorusSum";
    }
    return "?";
}

std::optional<MinorStep::Kind> parse_step_kind(std::string_view name) {
    for (auto kind : {MinorStep::Kind::RemoveSector, MinorStep::Kind::ContractAnnulus,
                      MinorStep::Kind::ReduceDegree, MinorStep::Kind::TorusSum})
        if (step_kind_name(kind) == name) return kind;
    return std::nullopt;
}

MultibranchedSurface apply_step(const MultibranchedSurface& surface, MinorStep::Kind kind,
                                const std::string& target) {
    switch (kind) {
        case MinorStep::Kind::RemoveSector: return remove_sector(surface, SectorId(target));
        case MinorStep::Kind::ContractAnnulus: return contract_annulus(surface, SectorId(target));
        case MinorStep::Kind::ReduceDegree: return reduce_degree(surface, BranchId(target));
        case MinorStep::Kind::TorusSum: return torus_sum(surface, SectorId(target));
    }
    throw Error(ErrorCode::InvalidArgument, "unknown step kind");
}

bool replay_certificate(const MinorCertificate& certificate, const MultibranchedSurface& target) {
    auto current = certificate.source;
    for (const auto& step : certificate.steps) {
        current = apply_step(current, step.kind, step.target);
        if (!are_isomorphic(current, step.result)) return false;
        // Later targets are named in the recorded intermediate.
        current = step.result;
    }
    return are_isomorphic(current, target);
}

std::optional<MinorCertificate> neighborhood_minor_certificate(const MultibranchedSurface& minor,
                                                               const MultibranchedSurface& host,
                                                               std::size_t depth,
                                                               std::size_t budget) {
    require_regular(minor);
    require_regular(host);
    const auto goal = canonical_form(minor);
    const auto goal_sectors = minor.sector_count();
    const auto goal_genus = total_genus(minor);

    struct Node {
        MultibranchedSurface surface;
        std::optional<std::size_t> parent;
        MinorStep::Kind kind = MinorStep::Kind::ReduceDegree;
        std::string target;
        std::size_t depth = 0;
    };
    std::vector<Node> nodes;
    std::set<CanonicalForm> seen;

    auto certificate_for = [&](std::size_t leaf) {
        MinorCertificate cert;
        cert.source = host;
        std::vector<std::size_t> path;
        for (std::optional<std::size_t> at = leaf; at && nodes[*at].parent; at = nodes[*at].parent)
            path.push_back(*at);
        for (auto it = path.rbegin(); it != path.rend(); ++it)
            cert.steps.push_back({nodes[*it].kind, nodes[*it].target, nodes[*it].surface});
        return cert;
    };

    nodes.push_back({host, std::nullopt, {}, {}, 0});
    seen.insert(canonical_form(host));
    if (*seen.begin() == goal) return certificate_for(0);

    for (std::size_t at = 0; at < nodes.size(); ++at) {
        if (nodes[at].depth >= depth) continue;
        const auto current = nodes[at].surface;
        std::vector<std::pair<MinorStep::Kind, std::string>> moves;
        for (std::size_t s = 0; s < current.sector_count(); ++s)
            if (is_contractible_annulus(current, s))
                moves.emplace_back(MinorStep::Kind::ContractAnnulus, current.sectors()[s].id.value);
        const auto attached = current.attachments();
        for (std::size_t b = 0; b < current.branch_count(); ++b) {
            bool reducible = false;
            for (const auto& ref : attached[b])
                reducible = reducible ||
                            current.sectors()[ref.sector].prebranches[ref.slot].degree() > 1;
            if (reducible) moves.emplace_back(MinorStep::Kind::ReduceDegree, current.branches()[b].value);
        }
        for (const auto& s : current.sectors())
            if (s.orientable) moves.emplace_back(MinorStep::Kind::TorusSum, s.id.value);

        for (const auto& [kind, target] : moves) {
            auto next = apply_step(current, kind, target);
            // Sector count never grows and total genus never shrinks along these moves.
            if (next.sector_count() < goal_sectors || total_genus(next) > goal_genus) continue;
            auto form = canonical_form(next);
            if (!seen.insert(form).second) continue;
            if (seen.size() > budget)
                throw Error(ErrorCode::SearchBudgetExceeded,
                            "neighborhood-minor search visited more than " + std::to_string(budget) +
                                " surfaces");
            nodes.push_back({std::move(next), at, kind, target, nodes[at].depth + 1});
            if (form == goal) return certificate_for(nodes.size() - 1);
        }
    }
    return std::nullopt;
}

ObstructionReport obstruction_candidate_s3(const MultibranchedSurface& surface,
                                           std::size_t max_results) {
    ObstructionReport report;
    const auto own = s3_obstruction(surface);
    if (own.verdict != S3Verdict::Obstructed) {
        report.verdict = ObstructionVerdict::NotCandidate;
        report.note = "H1 = " + own.homology.to_string() + " has no torsion";
        return report;
    }
    const auto self = canonical_form(surface);
    bool undecided = false;
    for (const auto& form : all_minors(surface, max_results)) {
        if (form == self) continue;
        ++report.proper_minors;
        const auto representative = form.to_surface();
        if (!representative.all_sectors_orientable()) {
            undecided = true;
            continue;
        }
        if (s3_obstruction(representative).verdict == S3Verdict::Obstructed) {
            report.verdict = ObstructionVerdict::NotCandidate;
            report.obstructed_minor = form;
            report.note = "a proper minor already has torsion in H1";
            return report;
        }
    }
    if (undecided) {
        report.verdict = ObstructionVerdict::Unknown;
        report.note = "some proper minor has a nonorientable sector";
        return report;
    }
    report.verdict = ObstructionVerdict::Candidate;
    report.note = "H1 torsion " + own.homology.torsion_string() +
                  "; every proper minor has torsion-free H1 (necessary evidence only)";
    return report;
}

}  // namespace mbs
